#pragma once

// Command-line front end: check, bound, compare, synth, search.
// Exit codes: 0 success or feasible, 2 infeasible, 3 invalid input.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "revtri/compare.hpp"
#include "revtri/io.hpp"
#include "revtri/refsearch.hpp"
#include "revtri/synth.hpp"

namespace revtri::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_infeasible = 2;
inline constexpr int exit_invalid = 3;

struct Outcome {
  int code = exit_ok;
  Json json;
  std::string table;  // stderr text, compare only
};

namespace detail {

inline Method method_from_flag(const std::string& name) {
  const auto m = parse_method(name);
  if (!m) throw Error(ErrorKind::input, "unknown method '" + name + "'");
  return *m;
}

/// Dataset context; a one-dimensional dataset without a reference uses u = 1.
inline MethodContext context_of(const Dataset& ds) {
  MethodContext ctx = ds.context();
  if (!ctx.reference && ds.dim == 1) ctx.reference = Reference(Vector{1.0});
  return ctx;
}

inline void require_method_fits(const Dataset& ds, Method m) {
  if (is_scalar_method(m) && ds.dim != 1)
    throw Error(ErrorKind::input, "field 'dim': method " + std::string(method_name(m)) +
                                      " requires dim 1, dataset has " + std::to_string(ds.dim));
}

inline std::optional<MethodParams> supplied(const Dataset& ds, Method m, bool auto_params) {
  if (auto_params) return std::nullopt;
  auto it = ds.params.find(m);
  if (it == ds.params.end()) return std::nullopt;
  return it->second;
}

inline void require_extraction(Method m) {
  if (!has_extraction(m))
    throw Error(ErrorKind::input, "field 'params." + std::string(method_name(m)) +
                                      "': band methods need explicit parameters");
}

}  // namespace detail

/// Supplied parameters are checked as given; otherwise (or with auto_params) the
/// best parameters are extracted.
inline Outcome cmd_check(const Dataset& ds, Method m, bool auto_params) {
  detail::require_method_fits(ds, m);
  const MethodContext ctx = detail::context_of(ds);
  HypothesisReport rep;
  if (auto p = detail::supplied(ds, m, auto_params)) {
    rep = check(m, ds.vectors, ctx, *p);
  } else {
    detail::require_extraction(m);
    rep = extract(m, ds.vectors, ctx);
  }
  return {rep.feasible ? exit_ok : exit_infeasible, to_json(rep), {}};
}

inline Outcome cmd_bound(const Dataset& ds, Method m, bool auto_params) {
  detail::require_method_fits(ds, m);
  const MethodContext ctx = detail::context_of(ds);
  BoundResult r;
  if (auto p = detail::supplied(ds, m, auto_params)) {
    r = bound(m, ds.vectors, ctx, *p);
  } else {
    detail::require_extraction(m);
    r = bound_auto(m, ds.vectors, ctx);
  }
  return {r.certified() ? exit_ok : exit_infeasible, to_json(r), {}};
}

inline Outcome cmd_compare(const Dataset& ds) {
  const Comparison c = compare_all(ds.vectors, detail::context_of(ds), ds.params);
  return {exit_ok, to_json(c), comparison_table(c)};
}

inline Outcome cmd_search(const Dataset& ds, const SearchConfig& cfg) {
  const SearchResult r = search_reference(ds.vectors, cfg);
  return {r.found() ? exit_ok : exit_infeasible, to_json(r), {}};
}

struct SynthRequest {
  SynthSpec spec;
  bool equality = false;
};

/// Synthesized dataset plus the certificate of the family under the given params.
inline std::pair<Dataset, Outcome> cmd_synth(const SynthRequest& req) {
  const SynthSpec& spec = req.spec;
  const SynthResult s = req.equality ? synth_equality(spec) : sample_feasible(spec);
  Dataset ds;
  ds.dim = spec.dim;
  ds.vectors = s.family;
  ds.reference = s.context.reference;
  ds.orthonormal = s.context.axes;
  ds.params[spec.method] = spec.params;
  ds.meta = Json{{"generator", "revtri synth"},
                 {"rng", Rng::algorithm},
                 {"seed", spec.seed},
                 {"method", method_name(spec.method)},
                 {"equality", req.equality}};
  const BoundResult r = bound(spec.method, s.family, s.context, spec.params);
  return {std::move(ds), Outcome{r.certified() ? exit_ok : exit_infeasible, to_json(r), {}}};
}

namespace detail {

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::input, "cannot write output file '" + path.string() + "'");
  f << text;
}

inline std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

/// Runs the tool on already-split arguments (program name excluded).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified reverse triangle inequality bounds", "revtri"};
  app.require_subcommand(1);

  std::string input, input_dir, output, method_flag, params_text;
  bool auto_params = false;
  bool equality = false;
  std::uint64_t seed = 0;
  std::size_t dim = 1, count = 5;
  SearchConfig search_cfg;

  auto add_input = [&](CLI::App* sub) {
    auto* in = sub->add_option("--input", input, "Dataset JSON file");
    auto* dir = sub->add_option("--input-dir", input_dir, "Process every *.json in a directory");
    in->excludes(dir);
    sub->add_option("--output", output, "Output file, or directory in batch mode");
  };

  auto* check_cmd = app.add_subcommand("check", "Check a method's hypothesis");
  auto* bound_cmd = app.add_subcommand("bound", "Certified lower bound for one method");
  for (auto* sub : {check_cmd, bound_cmd}) {
    add_input(sub);
    sub->add_option("--method", method_flag, "dm|t21|c22|c23|t31|t32|c32|c33|p41|p42|petrovich")
        ->required();
    sub->add_flag("--auto-params", auto_params, "Extract parameters even if the dataset has some");
  }
  auto* compare_cmd = app.add_subcommand("compare", "Every applicable bound, strongest first");
  add_input(compare_cmd);

  auto* search_cmd = app.add_subcommand("search", "Search for the best cone reference");
  add_input(search_cmd);
  search_cmd->add_option("--seed", search_cfg.seed, "RNG seed");
  search_cmd->add_option("--restarts", search_cfg.restarts, "Independent restarts");
  search_cmd->add_option("--iters", search_cfg.iterations, "Iterations per restart");

  auto* synth_cmd = app.add_subcommand("synth", "Generate a feasible dataset");
  synth_cmd->add_option("--method", method_flag, "Method whose hypothesis to satisfy")->required();
  synth_cmd->add_option("--params", params_text, "Parameter object as JSON")->required();
  synth_cmd->add_option("--dim", dim, "Dimension");
  synth_cmd->add_option("--count", count, "Number of vectors");
  synth_cmd->add_option("--seed", seed, "RNG seed");
  synth_cmd->add_option("--output", output, "Dataset file to write")->required();
  synth_cmd->add_flag("--equality", equality, "Exact equality family (dm, t21, t31, t32)");

  std::vector<const char*> argv{"revtri"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  }

  try {
    if (synth_cmd->parsed()) {
      const Method m = detail::method_from_flag(method_flag);
      Json pj;
      try {
        pj = Json::parse(params_text);
      } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::input, std::string("--params: malformed JSON: ") + e.what());
      }
      SynthRequest req;
      req.spec = {m, dim, count, params_from_json(m, pj, "--params"), seed, {}, {}};
      req.equality = equality;
      auto [ds, outcome] = cmd_synth(req);
      detail::write_text(output, detail::render(to_json(ds)));
      out << detail::render(outcome.json);
      return outcome.code;
    }

    std::function<Outcome(const Dataset&)> process;
    std::string name;
    if (check_cmd->parsed() || bound_cmd->parsed()) {
      const Method m = detail::method_from_flag(method_flag);
      const bool is_check = check_cmd->parsed();
      name = is_check ? "check" : "bound";
      process = [=](const Dataset& ds) {
        return is_check ? cmd_check(ds, m, auto_params) : cmd_bound(ds, m, auto_params);
      };
    } else if (compare_cmd->parsed()) {
      name = "compare";
      process = cmd_compare;
    } else {
      name = "search";
      validate(search_cfg);
      process = [=](const Dataset& ds) { return cmd_search(ds, search_cfg); };
    }

    if (!input_dir.empty()) {
      namespace fs = std::filesystem;
      if (output.empty()) throw Error(ErrorKind::input, "--output directory required with --input-dir");
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(input_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
          files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      fs::create_directories(output);
      int worst = exit_ok;
      for (const auto& file : files) {
        int code = exit_ok;
        std::string text;
        try {
          Outcome o = process(load_dataset(file.string()));
          code = o.code;
          text = detail::render(o.json);
        } catch (const Error& e) {
          code = exit_invalid;
          text = detail::render(Json{{"error", e.what()}, {"kind", to_string(e.kind())}});
        }
        detail::write_text(fs::path(output) / (file.stem().string() + "." + name + ".json"), text);
        err << file.filename().string() << ": exit " << code << '\n';
        worst = std::max(worst, code);
      }
      return worst;
    }

    if (input.empty()) throw Error(ErrorKind::input, "--input or --input-dir required");
    const Outcome o = process(load_dataset(input));
    if (!o.table.empty()) err << o.table;
    if (output.empty())
      out << detail::render(o.json);
    else
      detail::write_text(output, detail::render(o.json));
    return o.code;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  }
}

}  // namespace revtri::cli
