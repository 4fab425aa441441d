// Command-line front end: every subcommand prints one JSON run report.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lr/acceptance.hpp"
#include "lr/constants.hpp"
#include "lr/cut_cone.hpp"
#include "lr/error.hpp"
#include "lr/json_io.hpp"
#include "lr/lorentzian.hpp"
#include "lr/metric.hpp"
#include "lr/ratios.hpp"
#include "lr/subfree.hpp"

namespace {

using lr::Json;

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kResource = 3 };

struct Options {
  unsigned threads = lr::default_threads();
  std::string format = "json";
  std::uint64_t seed = 1;

  std::string matrix, ratio, metric, tree, out, facets_file;
  int n = 0;
  bool orbits = false;
  std::string p = "2";
  int basepoint = 1;
  double a = 0, b = 0, c = 0, tp = 0;
  bool verify = false;
  std::uint64_t iters = 10000;
  std::optional<int> facet_index;
  bool all = false;
  bool reproduce_all = false;
  bool stretch = false;
  std::vector<int> criteria;
};

// What a subcommand produced: results plus whether a checked property failed.
struct Outcome {
  Json results;
  bool violation = false;
};

// 64-bit FNV-1a over the command, its flags and the bytes of any input file.
class Digest {
 public:
  void add(const std::string& s) {
    for (unsigned char ch : s) {
      hash_ ^= ch;
      hash_ *= 0x100000001b3ULL;
    }
    hash_ ^= 0xff;  // separator
    hash_ *= 0x100000001b3ULL;
  }
  void add_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    add(std::string(std::istreambuf_iterator<char>(in), {}));
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
    return buf;
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

lr::Rational parse_rational_arg(const std::string& s, const char* flag) {
  try {
    return lr::parse_rational(s);
  } catch (const lr::Error& e) {
    lr::fail(lr::ErrorCode::Usage, std::string("bad value for ") + flag, s);
  }
}

bool is_exact_rational_text(const std::string& s) {
  return s.find_first_of(".eE") == std::string::npos;
}

// ---- lorentzian

Outcome lorentzian_check(const Options& o) {
  auto m = lr::matrix_from_json(lr::load_json_file(o.matrix));
  auto rep = m.exact ? lr::is_lorentzian(m.rational) : lr::is_lorentzian(m.real);
  return {Json{{"lorentzian", rep.lorentzian}, {"signature", lr::to_json(rep.signature)},
               {"exact", m.exact}, {"n", m.real.size()}}};
}

// ---- cutcone

Outcome cutcone_facets(const Options& o) {
  auto facets = lr::enumerate_facets(o.n);
  Json results{{"n", o.n}, {"total", facets.size()}};
  if (o.orbits) {
    auto report = lr::orbit_classify(o.n, facets, o.threads);
    Json sizes = Json::array();
    for (const auto& orbit : report.orbits) sizes.push_back(orbit.size);
    results["orbit_count"] = report.orbits.size();
    results["orbit_sizes"] = sizes;
    results["orbit_report"] = lr::to_json(report);
  }
  Json facet_json = lr::facets_to_json(o.n, facets);
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    lr::require(static_cast<bool>(f), lr::ErrorCode::Usage, "cannot write output file", o.out);
    f << facet_json.dump(2) << '\n';
    results["written_to"] = o.out;
  } else {
    results["facets"] = facet_json;
  }
  return {results};
}

// ---- ratio

Outcome ratio_check(const Options& o) {
  auto r = lr::ratio_from_json(lr::load_json_file(o.ratio));
  auto cert = lr::is_bounded(lr::reduce(r));
  Json results = lr::to_json(cert);
  results["balanced"] = lr::is_balanced(r);
  results["tight_rank"] = lr::tight_rank(r.n, cert.tight_subsets);
  results["facet_rank"] = static_cast<int>(lr::pair_count(r.n)) - 1;
  return {results};
}

Outcome ratio_eval(const Options& o) {
  auto r = lr::ratio_from_json(lr::load_json_file(o.ratio));
  auto m = lr::matrix_from_json(lr::load_json_file(o.matrix));
  Json results{{"exact", false}};
  if (m.exact && lr::has_integral_exponents(r)) {
    auto v = lr::evaluate(r, m.rational);
    results = Json{{"exact", true}, {"value", lr::format_rational(v.value)}, {"decimal", v.value.get_d()},
                   {"zero_pow_zero", v.zero_pow_zero}};
  } else {
    auto v = lr::evaluate(r, m.real);
    results["decimal"] = v.value;
    results["zero_pow_zero"] = v.zero_pow_zero;
  }
  return {results};
}

Outcome ratio_decompose(const Options& o) {
  auto r = lr::ratio_from_json(lr::load_json_file(o.ratio));
  auto basis = o.facets_file.empty() ? lr::enumerate_facets(r.n)
                                     : lr::facets_from_json(lr::load_json_file(o.facets_file));
  auto dec = lr::decompose(r, basis);
  Json results{{"n", r.n}, {"basis_size", basis.size()}, {"found", dec.has_value()}};
  if (dec) {
    Json terms = Json::array();
    for (auto [index, mult] : *dec)
      terms.push_back(Json{{"facet_index", index}, {"multiplicity", mult}, {"facet", basis[index].coords}});
    results["terms"] = terms;
  }
  return {results};
}

Outcome ratio_normalize(const Options& o) {
  auto r = lr::ratio_from_json(lr::load_json_file(o.ratio));
  auto normalized = lr::normalize_ratio(lr::reduce(r));
  return {Json{{"ratio", lr::to_json(lr::complete_diagonal(normalized))}}};
}

// ---- metric

Outcome metric_check(const Options& o) {
  auto m = lr::matrix_from_json(lr::load_json_file(o.matrix));
  lr::TpMembership mem;
  bool exact = m.exact && is_exact_rational_text(o.p);
  if (exact) mem = lr::in_delta_tp(m.rational, parse_rational_arg(o.p, "--p"));
  else mem = lr::in_delta_tp(m.real, std::stod(o.p));
  Json results{{"member", mem.member}, {"p", o.p}, {"exact", exact}};
  results["violation"] = mem.violation ? Json(lr::format_quadruple(*mem.violation)) : Json(nullptr);
  return {results};
}

Outcome metric_delta(const Options& o) {
  auto d = lr::metric_from_json(lr::load_json_file(o.metric));
  auto delta = lr::hyperbolicity_delta(d);
  auto fp = lr::four_point_check(d);
  Json results{{"delta", lr::format_rational(delta)}, {"delta_decimal", delta.get_d()},
               {"tree_metric", fp.holds}, {"is_metric", lr::is_metric(d)}};
  results["four_point_violation"] = fp.violation ? Json(lr::format_quadruple(*fp.violation)) : Json(nullptr);
  return {results};
}

Outcome metric_treeapprox(const Options& o) {
  auto d = lr::metric_from_json(lr::load_json_file(o.metric));
  auto approx = lr::gromov_tree_approx(d, o.basepoint - 1);
  bool within = approx.max_gap <= approx.bound;
  Json results{{"metric", lr::to_json(approx.metric)},
               {"delta", lr::format_rational(approx.delta)},
               {"bound", lr::format_rational(approx.bound)},
               {"max_gap", lr::format_rational(approx.max_gap)},
               {"max_gap_decimal", approx.max_gap.get_d()},
               {"bound_decimal", approx.bound.get_d()},
               {"within_bound", within},
               {"closure_applied", approx.closure_applied},
               {"closure_gap", lr::format_rational(approx.closure_gap)}};
  return {results};
}

Outcome metric_decompose(const Options& o) {
  lr::PhyloTree tree = !o.tree.empty() ? lr::canonicalize(lr::tree_from_json(lr::load_json_file(o.tree)))
                                       : lr::tree_reconstruct(lr::metric_from_json(lr::load_json_file(o.metric)));
  Json cuts = Json::array();
  for (const auto& t : lr::cut_decomposition(tree))
    cuts.push_back(Json{{"subset", lr::subset_elements(t.subset)}, {"weight", lr::format_rational(t.weight)}});
  return {Json{{"tree", lr::to_json(tree)}, {"cuts", cuts}}};
}

// ---- constant

Outcome constant_n3(const Options& o) {
  lr::BarycentricRatio q{o.a, o.b, o.c};
  double f = lr::theorem_c(q);
  Json results{{"value", f}, {"inside_circle", lr::circle_discriminant(q) <= 1e-12}};
  bool violation = false;
  if (o.verify) {
    auto num = lr::verify_n3(q, 2001, o.threads);
    bool agree = std::abs(num.value - f) <= 1e-6;
    violation = !agree;
    results["numeric"] = Json{{"value", num.value}, {"x", num.x}, {"y", num.y},
                              {"critical_point_used", num.critical_point_used}, {"agrees", agree}};
  }
  return {results, violation};
}

Outcome constant_tp(const Options& o) {
  return {Json{{"value", lr::fp_delta3(o.a, o.b, o.c, o.tp)}, {"log2_value", std::log2(lr::fp_delta3(o.a, o.b, o.c, o.tp))}}};
}

Outcome constant_estimate(const Options& o) {
  auto r = lr::ratio_from_json(lr::load_json_file(o.ratio));
  auto est = lr::estimate_sup(r, o.iters, o.seed, {}, o.threads);
  Json results{{"empirical_sup", est.value}, {"source", est.source}, {"argmax", lr::to_json(est.argmax)},
               {"iterations", o.iters}};
  results["exact"] = est.exact ? Json(lr::format_rational(*est.exact)) : Json(nullptr);
  return {results};
}

// ---- conjecture

Outcome conjecture_subfree(const Options& o) {
  auto facets = lr::enumerate_facets(o.n);
  std::vector<std::size_t> chosen;
  if (o.facet_index) {
    lr::require(*o.facet_index >= 0 && static_cast<std::size_t>(*o.facet_index) < facets.size(),
                lr::ErrorCode::Usage, "facet index out of range", std::to_string(*o.facet_index));
    chosen.push_back(static_cast<std::size_t>(*o.facet_index));
  } else {
    for (std::size_t k = 0; k < facets.size(); ++k) chosen.push_back(k);
  }
  std::vector<lr::FullRatio> ratios;
  for (auto k : chosen) ratios.push_back(lr::complete_diagonal(lr::to_ratio(facets[k])));
  auto reports = lr::subfree_check_all(ratios, o.threads);
  Json list = Json::array();
  bool all_hold = true;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    all_hold = all_hold && reports[k].holds;
    Json entry = lr::to_json(reports[k]);
    entry["facet_index"] = chosen[k];
    entry["facet"] = facets[chosen[k]].coords;
    list.push_back(entry);
  }
  return {Json{{"n", o.n}, {"checked", chosen.size()}, {"all_hold", all_hold}, {"reports", list}}, !all_hold};
}

// ---- reproduce

Outcome reproduce(const Options& o) {
  lr::AcceptanceConfig config{o.seed, o.threads, o.stretch};
  std::vector<int> ids = o.criteria;
  if (ids.empty())
    for (int id = 1; id <= lr::kCriterionCount; ++id) ids.push_back(id);
  Json list = Json::array();
  int passed = 0;
  for (int id : ids) {
    auto r = lr::run_criterion(id, config);
    passed += r.passed;
    list.push_back(lr::to_json(r));
    std::cerr << (r.passed ? "PASS" : "FAIL") << " criterion " << id << ": " << r.summary << '\n';
  }
  return {Json{{"criteria", list}, {"passed", passed}, {"total", ids.size()}},
          passed != static_cast<int>(ids.size())};
}

// ---- output

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_table(const Json& report) {
  std::cout << "command  " << report["command"].get<std::string>() << '\n';
  const Json& results = report["results"];
  if (results.contains("criteria")) {
    for (const auto& c : results["criteria"])
      std::cout << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "  " << c["id"] << "  "
                << c["title"].get<std::string>() << "  " << c["summary"].get<std::string>() << '\n';
    return;
  }
  for (const auto& [key, value] : results.items()) {
    std::string text = value.is_structured() ? value.dump() : scalar_text(value);
    if (text.size() > 160) text = text.substr(0, 157) + "...";
    std::cout << key << "  " << text << '\n';
  }
}

int exit_for(lr::ErrorCode code) {
  switch (code) {
    case lr::ErrorCode::ResourceLimit: return kResource;
    case lr::ErrorCode::InvariantViolation: return kViolation;
    default: return kUsage;
  }
}

int emit_error(const lr::Error& e) {
  std::cout << lr::error_json(e).dump(2) << '\n';
  return exit_for(e.code());
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Bounded ratios of Lorentzian matrices: exact checks and reproduction runs", "lr"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", o.threads, "worker threads for data-parallel sections")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", o.seed, "root seed for all randomness");

  std::string command;
  std::function<Outcome(const Options&)> action;
  std::vector<std::string> input_files;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Outcome(const Options&)> fn) {
    sub->callback([&command, &action, name = std::move(name), fn = std::move(fn)] {
      command = name;
      action = fn;
    });
  };
  auto file_option = [&](CLI::App* sub, const char* flag, std::string& target, const char* help) {
    return sub->add_option(flag, target, help)->required()->check(CLI::ExistingFile);
  };

  auto* lor = app.add_subcommand("lorentzian", "Lorentzian membership");
  lor->require_subcommand(1);
  auto* lor_check = lor->add_subcommand("check", "signature and Lorentzian test of a matrix file");
  file_option(lor_check, "--matrix", o.matrix, "matrix JSON");
  bind(lor_check, "lorentzian check", lorentzian_check);

  auto* cut = app.add_subcommand("cutcone", "facets of the cut cone");
  cut->require_subcommand(1);
  auto* facets = cut->add_subcommand("facets", "enumerate facets of Cut_n");
  facets->add_option("--n", o.n, "number of points (3..7)")->required();
  facets->add_flag("--orbits", o.orbits, "classify facets into S_n orbits");
  facets->add_option("--out", o.out, "write the facet list to this file");
  bind(facets, "cutcone facets", cutcone_facets);

  auto* ratio = app.add_subcommand("ratio", "bounded ratios");
  ratio->require_subcommand(1);
  auto* r_check = ratio->add_subcommand("check", "boundedness certificate");
  file_option(r_check, "--ratio", o.ratio, "ratio JSON");
  bind(r_check, "ratio check", ratio_check);
  auto* r_eval = ratio->add_subcommand("eval", "evaluate a ratio on a matrix");
  file_option(r_eval, "--ratio", o.ratio, "ratio JSON");
  file_option(r_eval, "--matrix", o.matrix, "matrix JSON");
  bind(r_eval, "ratio eval", ratio_eval);
  auto* r_dec = ratio->add_subcommand("decompose", "nonnegative integer combination of facets");
  file_option(r_dec, "--ratio", o.ratio, "ratio JSON");
  r_dec->add_option("--facets", o.facets_file, "facet list JSON (default: enumerate Cut_n)")
      ->check(CLI::ExistingFile);
  bind(r_dec, "ratio decompose", ratio_decompose);
  auto* r_norm = ratio->add_subcommand("normalize", "scale to coordinate sum -1");
  file_option(r_norm, "--ratio", o.ratio, "ratio JSON");
  bind(r_norm, "ratio normalize", ratio_normalize);

  auto* metric = app.add_subcommand("metric", "log-metrics and trees");
  metric->require_subcommand(1);
  auto* m_check = metric->add_subcommand("check", "membership in Delta(T_p)");
  file_option(m_check, "--matrix", o.matrix, "matrix JSON");
  m_check->add_option("--p", o.p, "p >= 0, rational \"a/b\" for exact checks")->capture_default_str();
  bind(m_check, "metric check", metric_check);
  auto* m_delta = metric->add_subcommand("delta", "Gromov hyperbolicity");
  file_option(m_delta, "--metric", o.metric, "metric JSON");
  bind(m_delta, "metric delta", metric_delta);
  auto* m_tree = metric->add_subcommand("treeapprox", "tree metric below d");
  file_option(m_tree, "--metric", o.metric, "metric JSON");
  m_tree->add_option("--basepoint", o.basepoint, "1-based basepoint")->capture_default_str();
  bind(m_tree, "metric treeapprox", metric_treeapprox);
  auto* m_dec = metric->add_subcommand("decompose", "tree and cut decomposition of a tree metric");
  auto* metric_opt = m_dec->add_option("--metric", o.metric, "metric JSON")->check(CLI::ExistingFile);
  auto* tree_opt = m_dec->add_option("--tree", o.tree, "tree JSON")->check(CLI::ExistingFile);
  metric_opt->excludes(tree_opt);
  m_dec->require_option(1);
  bind(m_dec, "metric decompose", metric_decompose);

  auto* constant = app.add_subcommand("constant", "optimal constants");
  constant->require_subcommand(1);
  auto* c_n3 = constant->add_subcommand("n3", "closed form on 3x3 Lorentzian matrices");
  c_n3->add_option("--a", o.a)->required();
  c_n3->add_option("--b", o.b)->required();
  c_n3->add_option("--c", o.c)->required();
  c_n3->add_flag("--verify", o.verify, "compare with a numerical maximization");
  bind(c_n3, "constant n3", constant_n3);
  auto* c_tp = constant->add_subcommand("tp", "constant on Delta_3(T_p)");
  c_tp->add_option("--p", o.tp)->required();
  c_tp->add_option("--a", o.a)->required();
  c_tp->add_option("--b", o.b)->required();
  c_tp->add_option("--c", o.c)->required();
  bind(c_tp, "constant tp", constant_tp);
  auto* c_est = constant->add_subcommand("estimate", "empirical supremum over rank-2 samples");
  file_option(c_est, "--ratio", o.ratio, "ratio JSON");
  c_est->add_option("--iters", o.iters)->capture_default_str();
  bind(c_est, "constant estimate", constant_estimate);

  auto* conj = app.add_subcommand("conjecture", "subtraction-free expansions");
  conj->require_subcommand(1);
  auto* subfree = conj->add_subcommand("subfree", "expand 2^s prod p^{-} - prod p^{+} for facets of Cut_n");
  subfree->add_option("--n", o.n)->required();
  auto* idx = subfree->add_option("--facet-index", o.facet_index, "0-based index into the facet list");
  auto* all = subfree->add_flag("--all", o.all, "every facet (default)");
  idx->excludes(all);
  bind(subfree, "conjecture subfree", conjecture_subfree);

  auto* repro = app.add_subcommand("reproduce", "run the acceptance suite");
  repro->add_flag("--all", o.reproduce_all, "all criteria (default)");
  repro->add_option("--criterion", o.criteria, "only these criteria (1..9)")->check(CLI::Range(1, lr::kCriterionCount));
  repro->add_flag("--stretch", o.stretch, "also count n = 7 orbits (slow, non-blocking)");
  bind(repro, "reproduce", reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(lr::Error(lr::ErrorCode::Usage, e.what()));
  }

  Digest digest;
  digest.add(command);
  // flags that do not change results stay out of the digest
  for (int k = 1; k < argc; ++k) {
    std::string arg = argv[k];
    if (arg == "--threads" || arg == "--format") {
      ++k;
      continue;
    }
    if (arg.rfind("--threads=", 0) == 0 || arg.rfind("--format=", 0) == 0) continue;
    digest.add(arg);
  }
  for (const auto* path : {&o.matrix, &o.ratio, &o.metric, &o.tree, &o.facets_file})
    if (!path->empty()) digest.add_file(*path);

  auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = action(o);
  } catch (const lr::Error& e) {
    return emit_error(e);
  } catch (const std::bad_alloc&) {
    return emit_error(lr::Error(lr::ErrorCode::ResourceLimit, "out of memory"));
  } catch (const std::exception& e) {
    return emit_error(lr::Error(lr::ErrorCode::Usage, e.what()));
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  Json report{{"command", command}, {"inputs", digest.hex()}, {"results", outcome.results},
              {"seed", o.seed},     {"version", kVersion},     {"wall_time_ms", ms}};
  if (o.format == "table") print_table(report);
  else std::cout << report.dump(2) << '\n';
  return outcome.violation ? kViolation : kOk;
}
