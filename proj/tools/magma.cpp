#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "magma/bialgebra.hpp"
#include "magma/coalgebra.hpp"
#include "magma/errors.hpp"
#include "magma/laws.hpp"
#include "magma/series.hpp"
#include "magma/text.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string arity = "inf";
  int degree = 5;
  std::string format;  // per-command default when empty
  std::uint64_t seed = 1;
  int samples = 50;
  int workers = 1;
  bool unicode = false;
  std::string alphabet = "x,y,z,w";
  std::string out_path;
};

bool use_json(const Options& opt, bool default_json) {
  if (opt.format.empty()) return default_json;
  return opt.format == "json";
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + opt.out_path + "' for writing");
  f << text;
}

int arity_as_int(const Options& opt, const char* what) {
  magma::ArityBound b = magma::ArityBound::parse(opt.arity);
  if (!b.finite())
    throw std::invalid_argument(std::string(what) + " needs a finite --arity");
  return b.value();
}

int run_enum(const Options& opt, int leaves, bool count_only) {
  magma::ArityBound bound = magma::ArityBound::parse(opt.arity);
  if (count_only) {
    magma::Integer n = magma::count_trees(leaves, bound);
    if (use_json(opt, false)) {
      ordered_json j{{"leaves", leaves}, {"arity_bound", bound.str()}, {"count", n.str()}};
      emit(opt, j.dump(2) + "\n");
    } else {
      emit(opt, n.str() + "\n");
    }
    return 0;
  }
  std::vector<magma::PlanarTree> trees = magma::enumerate_trees(leaves, bound);
  if (use_json(opt, false)) {
    ordered_json names = ordered_json::array();
    for (magma::PlanarTree t : trees) names.push_back(magma::format_tree(t));
    ordered_json j{{"leaves", leaves},
                   {"arity_bound", bound.str()},
                   {"count", trees.size()},
                   {"trees", std::move(names)}};
    emit(opt, j.dump(2) + "\n");
  } else {
    std::string out;
    for (magma::PlanarTree t : trees) out += magma::format_tree(t) + "\n";
    emit(opt, out);
  }
  return 0;
}

int finish_apply(const Options& opt, const std::string& kind,
                 const std::vector<std::string>& args, const std::string& result) {
  if (use_json(opt, false)) {
    ordered_json j{{"kind", kind}, {"arity", opt.arity}, {"input", args}, {"result", result}};
    emit(opt, j.dump(2) + "\n");
  } else {
    emit(opt, result + "\n");
  }
  return 0;
}

int run_apply(const Options& opt, const std::string& kind,
              const std::vector<std::string>& args) {
  auto one_arg = [&]() -> const std::string& {
    if (args.size() != 1)
      throw std::invalid_argument("apply " + kind + " takes exactly one argument");
    return args[0];
  };
  magma::Alphabet alphabet = magma::Alphabet::parse(opt.alphabet);

  if (kind == "delta" || kind == "delta-reduced") {
    int n = arity_as_int(opt, "the co-operation");
    magma::MagAlgebra H(magma::ArityBound::infinity(), alphabet);
    magma::Element x = magma::parse_element(H, one_arg());
    magma::TensorElement t = kind == "delta" ? magma::delta(H, n, x)
                                             : magma::delta_reduced(H, n, x);
    return finish_apply(opt, kind, args, magma::format_tensor(alphabet, t, opt.unicode));
  }
  if (kind == "project-e" || kind == "psi" || kind == "phi") {
    magma::MagAlgebra H(magma::ArityBound::parse(opt.arity), alphabet);
    magma::Element x = magma::parse_element(H, one_arg());
    magma::Element r = kind == "project-e" ? magma::idempotent_e(H, x)
                       : kind == "psi"     ? magma::iso_psi(H, x)
                                           : magma::iso_phi(H, x);
    return finish_apply(opt, kind, args, magma::format_element(alphabet, r));
  }
  if (kind == "series-compose") {
    if (args.size() != 2)
      throw std::invalid_argument("apply series-compose takes two series arguments");
    magma::ArityBound bound = magma::ArityBound::parse(opt.arity);
    magma::TreeSeries phi = magma::parse_series(bound, opt.degree, args[0]);
    magma::TreeSeries psi = magma::parse_series(bound, opt.degree, args[1]);
    return finish_apply(opt, kind, args,
                        magma::format_series(magma::compose(phi, psi, opt.degree)));
  }
  if (kind == "series-invert") {
    magma::ArityBound bound = magma::ArityBound::parse(opt.arity);
    magma::TreeSeries phi = magma::parse_series(bound, opt.degree, one_arg());
    return finish_apply(opt, kind, args,
                        magma::format_series(magma::invert(phi, opt.degree)));
  }
  throw std::invalid_argument("unknown apply kind '" + kind + "'");
}

int run_series(const Options& opt, const std::string& name) {
  magma::ArityBound bound = magma::ArityBound::parse(opt.arity);
  magma::TreeSeries s = [&] {
    if (name == "f") return magma::f_series(opt.degree, bound);
    if (name == "g") return magma::g_series(opt.degree, bound);
    if (name == "t") return magma::TreeSeries::generator(bound, opt.degree);
    throw std::invalid_argument("unknown series '" + name + "' (expected f, g, or t)");
  }();
  std::string text = magma::format_series(s);
  if (use_json(opt, false)) {
    ordered_json j{{"name", name},
                   {"arity_bound", bound.str()},
                   {"degree", opt.degree},
                   {"result", text}};
    emit(opt, j.dump(2) + "\n");
  } else {
    emit(opt, text + "\n");
  }
  return 0;
}

int run_verify(const Options& opt, const std::string& law) {
  magma::VerifyConfig cfg;
  cfg.law = law;
  cfg.bound = magma::ArityBound::parse(opt.arity);
  cfg.degree = opt.degree;
  cfg.seed = opt.seed;
  cfg.samples = opt.samples;
  cfg.workers = opt.workers;
  std::vector<magma::LawReport> reports = magma::run_verify(cfg);
  emit(opt, use_json(opt, true) ? magma::reports_json(reports)
                                : magma::reports_text(reports));
  return magma::all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for grafting bialgebras on planar rooted trees"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--arity", opt.arity, "arity bound: an integer >= 2, or inf")
      ->capture_default_str();
  app.add_option("--degree", opt.degree, "degree / truncation order")->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "seed for the sample generator")->capture_default_str();
  app.add_option("--samples", opt.samples, "sample count for randomized laws")
      ->capture_default_str();
  app.add_option("--workers", opt.workers, "worker threads for verification")
      ->capture_default_str();
  app.add_flag("--unicode", opt.unicode, "render tensors with a unicode product sign");
  app.add_option("--alphabet", opt.alphabet, "leaf labels for parsed elements")
      ->capture_default_str();
  app.add_option("--out", opt.out_path, "write the output to a file instead of stdout");

  int leaves = 0;
  bool count_only = false;
  CLI::App* cmd_enum = app.add_subcommand("enum", "list the trees with a given leaf count");
  cmd_enum->add_option("--leaves", leaves, "number of leaves")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_enum->add_flag("--count-only", count_only, "print only the cardinality");

  CLI::App* cmd_count = app.add_subcommand("count", "print the number of trees");
  cmd_count->add_option("--leaves", leaves, "number of leaves")
      ->required()
      ->check(CLI::NonNegativeNumber);

  std::string kind;
  std::vector<std::string> apply_args;
  CLI::App* cmd_apply = app.add_subcommand("apply", "apply one operation and print the result");
  cmd_apply->add_option("kind", kind, "delta | delta-reduced | project-e | psi | phi | series-compose | series-invert")
      ->required();
  cmd_apply->add_option("args", apply_args, "operation arguments")->expected(1, 2);

  std::string law;
  CLI::App* cmd_verify = app.add_subcommand("verify", "run a law suite and report cases");
  cmd_verify->add_option("--law", law, "law name, or all")->required();

  std::string series_name;
  CLI::App* cmd_series = app.add_subcommand("series", "print a named tree series");
  cmd_series->add_option("name", series_name, "f | g | t")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_enum->parsed()) return run_enum(opt, leaves, count_only);
    if (cmd_count->parsed()) return run_enum(opt, leaves, true);
    if (cmd_apply->parsed()) return run_apply(opt, kind, apply_args);
    if (cmd_verify->parsed()) return run_verify(opt, law);
    if (cmd_series->parsed()) return run_series(opt, series_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
