#include "app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "output.hpp"
#include "records.hpp"
#include "soeinstein/lie/ricci_general.hpp"
#include "soeinstein/lie/triple_products.hpp"
#include "soeinstein/ricci/ricci_closed.hpp"
#include "soeinstein/solver/checks.hpp"
#include "soeinstein/solver/enumerate.hpp"
#include "soeinstein/solver/solve.hpp"

namespace soe::cli {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument:
    case ErrorCode::out_of_range:
      return kUsage;
    case ErrorCode::factorization_mismatch:
    case ErrorCode::derivation_mismatch:
    case ErrorCode::transcription_mismatch:
    case ErrorCode::elimination_mismatch:
    case ErrorCode::no_consistent_x3:
    case ErrorCode::theorem_check_failed:
    case ErrorCode::count_check_failed:
      return kVerificationFailed;
    case ErrorCode::zero_divisor:
    case ErrorCode::not_squarefree:
    case ErrorCode::nothing_to_eliminate:
    case ErrorCode::degenerate_metric:
    case ErrorCode::shared_factor:
    case ErrorCode::data_error:
      break;
  }
  return kDegenerate;
}

double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

ricci::MetricParams<double> oracle_metric(std::mt19937_64& gen, int trial) {
  ricci::MetricParams<double> x{1, 1, 1, 1, 1, 1};
  if (trial == 0) return x;
  const double lo = std::log(0.25);
  const double span = std::log(4.0) - lo;
  for (auto m : lie::kModules) x[m] = std::exp(lo + span * uniform01(gen));
  return x;
}

namespace {

struct Output {
  json doc;
  Table table;
  std::vector<std::string> summary;  // extra lines after the table format
  int code = kOk;
};

Table solution_table(const std::vector<SolutionRecord>& recs) {
  Table t;
  t.header = {"k", "l", "x1", "x2", "x3", "x12", "x13", "x23", "lambda", "residual", "branch", "naturally_reductive"};
  for (const auto& r : recs) {
    t.rows.push_back({std::to_string(r.k), std::to_string(r.l), format_double(r.x1), format_double(r.x2),
                      format_double(r.x3), format_double(r.x12), format_double(r.x13), format_double(r.x23),
                      format_double(r.lambda), format_double(r.residual), r.branch,
                      format_bool(r.naturally_reductive)});
  }
  return t;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::out_of_range, what);
}

Output cmd_solve(int k, int l, double tol, bool normalize, bool quadratic) {
  require(k >= 3, "--k must be at least 3");
  require(l >= 2, "--l must be at least 2");
  require(tol > 0, "--tol must be positive");
  solver::SolveOptions opts;
  opts.tol = tol;
  opts.enforce_guarantee = false;
  opts.use_linear_relation = !quadratic;
  const auto res = solver::solve(k, l, opts);

  Output o;
  std::vector<SolutionRecord> recs;
  for (const auto& s : res.solutions) recs.push_back(make_record(s, normalize));
  json rejected = json::array();
  for (const auto& r : res.rejected) rejected.push_back({{"x12", r.x12}, {"reason", r.reason}});
  o.doc = {{"command", "solve"},
           {"params", {{"k", k}, {"l", l}, {"tol", tol}, {"normalize", normalize}, {"x3_from", quadratic ? "g1,g2" : "hlin"}}},
           {"results", recs},
           {"checks",
            {{"guarantee_applies", res.guarantee_applies},
             {"guarantee_met", res.guarantee_met},
             {"below_one", res.count(solver::Branch::below_one)},
             {"above_one", res.count(solver::Branch::above_one)},
             {"rejected", rejected}}}};
  o.table = solution_table(recs);
  o.summary.push_back("certified: " + std::to_string(recs.size()));
  for (const auto& r : res.rejected) o.summary.push_back("rejected x12 = " + format_double(r.x12) + ": " + r.reason);
  if (res.guarantee_applies) o.summary.push_back("two-branch guarantee: " + std::string(res.guarantee_met ? "met" : "NOT met"));
  if (res.guarantee_applies && !res.guarantee_met) o.code = kVerificationFailed;
  return o;
}

Output cmd_enumerate(int n, double tol, unsigned workers, bool normalize) {
  require(n >= 10, "--n must be at least 10");
  require(tol > 0, "--tol must be positive");
  solver::EnumerateOptions opts;
  opts.solve.tol = tol;
  opts.workers = workers;
  opts.enforce_bound = false;
  const auto rep = solver::enumerate(n, opts);

  Output o;
  std::vector<SolutionRecord> recs;
  for (const auto& s : rep.solutions) recs.push_back(make_record(s, normalize));
  json per_k = json::array();
  o.table.header = {"k", "l", "certified", "below_one", "above_one"};
  for (const auto& row : rep.per_k) {
    per_k.push_back({{"k", row.k}, {"l", row.l}, {"certified", row.certified}, {"below_one", row.below_one},
                     {"above_one", row.above_one}});
    o.table.rows.push_back({std::to_string(row.k), std::to_string(row.l), std::to_string(row.certified),
                            std::to_string(row.below_one), std::to_string(row.above_one)});
  }
  o.doc = {{"command", "enumerate"},
           {"params", {{"n", n}, {"tol", tol}, {"normalize", normalize}}},
           {"results", recs},
           {"checks", {{"per_k", per_k}, {"total", rep.total}, {"bound", rep.bound}, {"met", rep.met}}}};
  o.summary.push_back("total: " + std::to_string(rep.total) + "  bound: " + std::to_string(rep.bound) +
                      "  met: " + format_bool(rep.met));
  if (!rep.met) o.code = kVerificationFailed;
  return o;
}

Output cmd_verify_oracle(int k1, int k2, int k3, int trials, std::uint64_t seed) {
  require(trials >= 1, "--trials must be at least 1");
  const lie::GroupSpec spec(k1, k2, k3);
  const auto tp = lie::triple_products(spec);
  std::mt19937_64 gen(seed);

  Output o;
  json rows = json::array();
  o.table.header = {"trial", "x1", "x2", "x3", "x12", "x13", "x23", "deviation"};
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto x = oracle_metric(gen, t);
    const auto general = lie::ricci_general(spec, tp, x);
    const auto closed = ricci::ricci_closed(spec, x);
    double dev = 0.0;
    for (auto m : lie::kModules) dev = std::max(dev, std::abs(general[m] - closed[m]));
    worst = std::max(worst, dev);
    rows.push_back({{"trial", t}, {"metric", x.as_array()}, {"deviation", dev}});
    std::vector<std::string> cells{std::to_string(t)};
    for (double v : x.as_array()) cells.push_back(format_double(v));
    cells.push_back(format_double(dev));
    o.table.rows.push_back(std::move(cells));
  }
  const bool pass = worst <= kOracleTolerance;
  o.doc = {{"command", "verify-oracle"},
           {"params", {{"k1", k1}, {"k2", k2}, {"k3", k3}, {"trials", trials}, {"seed", seed}, {"generator", "mt19937_64"}}},
           {"results", rows},
           {"checks", {{"max_deviation", worst}, {"tolerance", kOracleTolerance}, {"passed", pass}}}};
  o.summary.push_back("max deviation: " + format_double(worst) + "  passed: " + format_bool(pass));
  if (!pass) o.code = kVerificationFailed;
  return o;
}

Output cmd_sign_facts(int k_max, int l_max) {
  require(k_max >= 3, "--k-max must be at least 3");
  require(l_max > 3, "--l-max must exceed 3");
  Output o;
  json rows = json::array();
  o.table.header = {"k", "l", "h(0)", "h(1)", "leading", "descartes", "negative_roots_p", "pass"};
  bool all = true;
  int checked = 0;
  for (int k = 3; k <= k_max; ++k) {
    for (int l = k + 1; l <= l_max; ++l) {
      json row = {{"k", k}, {"l", l}};
      std::vector<std::string> cells{std::to_string(k), std::to_string(l)};
      bool pass = true;
      try {
        const auto f = solver::sign_facts(k, l);
        row["h0"] = f.h0.str();
        row["h1"] = f.h1.str();
        row["leading"] = f.leading.str();
        cells.insert(cells.end(), {f.h0.str(), f.h1.str(), f.leading.str()});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::transcription_mismatch) throw;
        pass = false;
        row["error"] = e.what();
        cells.insert(cells.end(), {"-", "-", "-"});
      }
      const auto d = solver::descartes_check_p(k, l);
      pass = pass && d.alternating && d.negative_roots == 0;
      row["descartes"] = d.alternating;
      row["negative_roots_p"] = d.negative_roots;
      row["pass"] = pass;
      cells.insert(cells.end(), {format_bool(d.alternating), std::to_string(d.negative_roots), format_bool(pass)});
      rows.push_back(std::move(row));
      o.table.rows.push_back(std::move(cells));
      all = all && pass;
      ++checked;
    }
  }
  o.doc = {{"command", "sign-facts"},
           {"params", {{"k_max", k_max}, {"l_max", l_max}}},
           {"results", rows},
           {"checks", {{"pairs", checked}, {"all_passed", all}}}};
  o.summary.push_back("pairs: " + std::to_string(checked) + "  all passed: " + format_bool(all));
  if (!all) o.code = kVerificationFailed;
  return o;
}

void emit(std::ostream& os, const Output& o, Format f) {
  switch (f) {
    case Format::json:
      os << o.doc.dump(2) << '\n';
      break;
    case Format::csv:
      write_csv(os, o.table);
      break;
    case Format::table:
      write_table(os, o.table);
      for (const auto& s : o.summary) os << s << '\n';
      break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Einstein metrics on SO(n) from the (k, k, l) block ansatz"};
  app.require_subcommand(1);

  Format format = Format::table;
  std::string output_path;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"table", Format::table}};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, csv or table")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--output", output_path, "write to this file instead of stdout");
  };

  int k = 0, l = 0, n = 0, k1 = 0, k2 = 0, k3 = 0, trials = 50, k_max = 10, l_max = 30;
  double tol = 1e-10;
  bool normalize = false;
  bool quadratic = false;
  unsigned workers = 1;
  std::uint64_t seed = 0;

  auto* solve = app.add_subcommand("solve", "certified Einstein metrics for blocks (k, k, l)");
  solve->add_option("--k", k, "block size k (>= 3)")->required();
  solve->add_option("--l", l, "block size l (>= 2)")->required();
  solve->add_option("--tol", tol, "relative Einstein residual tolerance");
  solve->add_flag("--normalize", normalize, "rescale metrics to Einstein constant 1");
  solve->add_flag("--quadratic-x3", quadratic, "recover x3 from g1, g2 instead of the linear relation");
  add_common(solve);

  auto* enumerate = app.add_subcommand("enumerate", "count certified metrics on SO(n)");
  enumerate->add_option("--n", n, "dimension n (>= 10)")->required();
  enumerate->add_option("--tol", tol, "relative Einstein residual tolerance");
  enumerate->add_option("--workers", workers, "parallel solve calls");
  enumerate->add_flag("--normalize", normalize, "rescale metrics to Einstein constant 1");
  add_common(enumerate);

  auto* oracle = app.add_subcommand("verify-oracle", "compare general and closed-form Ricci components");
  oracle->add_option("--k1", k1)->required();
  oracle->add_option("--k2", k2)->required();
  oracle->add_option("--k3", k3)->required();
  oracle->add_option("--trials", trials, "random metrics (trial 0 is bi-invariant)");
  oracle->add_option("--seed", seed, "mt19937_64 seed");
  add_common(oracle);

  auto* signs = app.add_subcommand("sign-facts", "exact sign checks of h and p for 3 <= k < l");
  signs->add_option("--k-max", k_max);
  signs->add_option("--l-max", l_max);
  add_common(signs);

  std::vector<const char*> argv{"soeinstein"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Output o;
  try {
    if (solve->parsed()) {
      o = cmd_solve(k, l, tol, normalize, quadratic);
    } else if (enumerate->parsed()) {
      o = cmd_enumerate(n, tol, workers, normalize);
    } else if (oracle->parsed()) {
      o = cmd_verify_oracle(k1, k2, k3, trials, seed);
    } else {
      o = cmd_sign_facts(k_max, l_max);
    }
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    err << "error: " << e.what() << '\n';
    if (code == kUsage) {
      for (auto* sub : app.get_subcommands()) {
        if (sub->parsed()) err << sub->help();
      }
    }
    return code;
  }

  if (output_path.empty()) {
    emit(out, o, format);
  } else {
    std::ofstream file(output_path);
    if (!file) {
      err << "error: cannot write " << output_path << '\n';
      return kUsage;
    }
    emit(file, o, format);
  }
  return o.code;
}

}  // namespace soe::cli
