#pragma once

#include "revtri/error.hpp"
#include "revtri/linalg.hpp"
#include "revtri/params.hpp"
#include "revtri/hypotheses.hpp"
#include "revtri/bounds.hpp"
#include "revtri/compare.hpp"
#include "revtri/random.hpp"
#include "revtri/synth.hpp"
#include "revtri/refsearch.hpp"
#include "revtri/io.hpp"
