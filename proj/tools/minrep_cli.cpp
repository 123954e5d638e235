// Command-line front end: branching tables, spectrum classification,
// tabulation of the exact norm constants, and the verification suites,
// emitted as deterministic json/csv/text reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minrep/branching.hpp"
#include "minrep/param_sets.hpp"
#include "minrep/report.hpp"
#include "minrep/suites.hpp"

namespace {

using namespace minrep;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

HalfInt parse_halfint(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return HalfInt(std::stoll(s));
  long long num = std::stoll(s.substr(0, slash));
  long long den = std::stoll(s.substr(slash + 1));
  if (den != 2) raise(errc::invalid_parameter, "half-integers are written as n or n/2");
  return HalfInt::from_twice(num);
}

std::vector<int> parse_int_list(const std::string& s, std::size_t expected) {
  std::vector<int> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  if (out.size() != expected)
    raise(errc::invalid_parameter, "expected " + std::to_string(expected) + " comma-separated ints");
  return out;
}

void emit(const std::string& body, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream os(output_path, std::ios::binary);
  if (!os) raise(errc::invalid_parameter, "cannot open output path " + output_path);
  os << body;
}

struct CommonOpts {
  std::string format = "text";
  std::string output;
  std::string config_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: json, csv or text");
    cmd->add_option("--output", output, "write the report to this path instead of stdout");
    cmd->add_option("--config", config_path, "JSON config file with defaults");
  }

  // config file supplies defaults; explicit flags win.
  void load_config(suites::SuiteConfig* suite_cfg) {
    if (config_path.empty()) return;
    std::ifstream is(config_path);
    if (!is) raise(errc::invalid_parameter, "cannot read config file " + config_path);
    nlohmann::json cfg = nlohmann::json::parse(is);
    if (cfg.contains("format") && format == "text") format = cfg["format"].get<std::string>();
    if (cfg.contains("output") && output.empty()) output = cfg["output"].get<std::string>();
    if (!suite_cfg) return;
    auto get = [&](const char* key, auto* slot) {
      if (cfg.contains(key)) *slot = cfg[key].get<std::decay_t<decltype(*slot)>>();
    };
    get("seed", &suite_cfg->seed);
    get("conformal_points", &suite_cfg->conformal_points);
    get("roundtrip_points", &suite_cfg->roundtrip_points);
    get("tol_v_quadrature", &suite_cfg->tol_v_quadrature);
    get("tol_triangular", &suite_cfg->tol_triangular);
    get("tol_lemma84", &suite_cfg->tol_lemma84);
    get("tol_parseval", &suite_cfg->tol_parseval);
    get("tol_eigen_residual", &suite_cfg->tol_eigen_residual);
    get("tol_decay_rate", &suite_cfg->tol_decay_rate);
    get("tol_roundtrip", &suite_cfg->tol_roundtrip);
    get("tol_conformal", &suite_cfg->tol_conformal);
    if (cfg.contains("grid_cap"))
      suite_cfg->grid_cap = parse_halfint(cfg["grid_cap"].get<std::string>());
  }
};

int cmd_branch(int p, int q, const std::string& split_str, const std::string& cutoff_str,
               int l_max, const std::string& mode, CommonOpts& opts) {
  auto parts = parse_int_list(split_str, 4);
  SignatureSplit split = make_split({p, q}, parts[0], parts[1], parts[2], parts[3]);
  std::vector<branching::Summand> rows;
  std::string title;
  if (split.p2 == 0 && split.p1 == p) {
    rows = branching::branch_compact(p, split.q1, split.q2, l_max);
    title = "restriction to O(" + std::to_string(p) + "," + std::to_string(split.q1) + ") x O(" +
            std::to_string(split.q2) + ")";
  } else {
    HalfInt cutoff = parse_halfint(cutoff_str);
    rows = branching::branch_noncompact_discrete(split, cutoff, mode == "conjecture");
    title = "discrete spectrum of the restriction to O(" + std::to_string(split.p1) + "," +
            std::to_string(split.q1) + ") x O(" + std::to_string(split.p2) + "," +
            std::to_string(split.q2) + ")";
  }
  emit(report::render_summands(rows, title, report::parse_format(opts.format)), opts.output);
  return 0;
}

int cmd_classify(const std::string& parent_str, const std::string& split_str, CommonOpts& opts) {
  auto pq = parse_int_list(parent_str, 2);
  auto parts = parse_int_list(split_str, 4);
  SignatureSplit split = make_split({pq[0], pq[1]}, parts[0], parts[1], parts[2], parts[3]);
  auto c = branching::spectrum_classification(split);
  emit(report::render_classification(split, c, report::parse_format(opts.format)), opts.output);
  return 0;
}

int cmd_tabulate(const std::string& constant, const std::string& lambda_max, CommonOpts& opts) {
  HalfInt cap = parse_halfint(lambda_max);
  std::vector<report::ConstantRow> rows;
  for (HalfInt lam = HalfInt::half(); lam <= cap; lam = lam + HalfInt::half())
    for (HalfInt lpp = HalfInt::half(); lpp <= cap; lpp = lpp + HalfInt::half())
      for (HalfInt lp = HalfInt::half(); lp <= cap; lp = lp + HalfInt::half()) {
        HalfInt e2 = lp - lpp - lam - HalfInt(1);
        if (!e2.is_integer() || e2.integer() % 2 != 0) continue;
        exact::GammaValue v;
        if (constant == "v_pm") {
          v = exact::v_constant_exact(exact::VKind::pm, lp, lpp, lam);
        } else if (constant == "v_pp") {
          v = exact::v_constant_exact(exact::VKind::pp, lp, lpp, lam);
        } else if (constant == "m") {
          v = exact::m_constant_exact(lam, lp, lpp);
        } else {
          raise(errc::invalid_parameter, "constant must be v_pm, v_pp or m");
        }
        rows.push_back(report::ConstantRow{lp, lpp, lam, v});
      }
  emit(report::render_constants(rows, constant, report::parse_format(opts.format)), opts.output);
  return 0;
}

int cmd_verify(const std::string& identity, suites::SuiteConfig& cfg, CommonOpts& opts) {
  report::VerifySuite suite = suites::run_suite(identity, cfg);
  emit(report::render_verify(suite, report::parse_format(opts.format)), opts.output);
  return suite.all_pass() ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"branching machinery for minimal representations of indefinite orthogonal groups"};
  app.require_subcommand(1);

  // branch
  auto* branch = app.add_subcommand("branch", "branching table of a restriction");
  int p = 0, q = 0, l_max = 10;
  std::string split_str, cutoff_str = "6", mode = "theorem";
  CommonOpts branch_opts;
  branch->add_option("p", p, "p of O(p,q)")->required();
  branch->add_option("q", q, "q of O(p,q)")->required();
  branch->add_option("--split", split_str, "p',q',p'',q''")->required();
  branch->add_option("--cutoff", cutoff_str, "spectral cutoff (half-integer, e.g. 9/2)");
  branch->add_option("--lmax", l_max, "largest harmonic degree in the compact case");
  branch->add_option("--mode", mode, "theorem or conjecture");
  branch_opts.attach(branch);

  // classify
  auto* classify = app.add_subcommand("classify", "discrete-spectrum classification of a split");
  std::string parent_str, csplit_str;
  CommonOpts classify_opts;
  classify->add_option("--parent", parent_str, "p,q")->required();
  classify->add_option("--split", csplit_str, "p',q',p'',q''")->required();
  classify_opts.attach(classify);

  // tabulate
  auto* tabulate = app.add_subcommand("tabulate", "exact norm-constant tables");
  std::string constant, lambda_max = "9/2";
  CommonOpts tab_opts;
  tabulate->add_option("constant", constant, "v_pm, v_pp or m")->required();
  tabulate->add_option("--lambda-max", lambda_max, "parameter cap (half-integer)");
  tab_opts.attach(tabulate);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string identity, grid = "default", qsplit;
  CommonOpts verify_opts;
  suites::SuiteConfig suite_cfg;
  verify
      ->add_option("identity", identity,
                   "triangular, v_pm, v_pp, msq, lemma84, parseval, eigen, conformal, boundary, "
                   "branch_tables, classical_dims")
      ->required();
  verify->add_option("--seed", suite_cfg.seed, "seed for random sample points");
  verify->add_option("--grid", grid, "parameter grid (only 'default' is defined)");
  verify->add_option("--p", suite_cfg.parseval_p, "p for the parseval suite");
  int parseval_q = 4;
  verify->add_option("--q", parseval_q, "q for the parseval suite");
  verify->add_option("--qsplit", qsplit, "q',q'' for the parseval suite");
  verify_opts.attach(verify);

  try {
    app.parse(argc, argv);
    if (branch->parsed()) {
      branch_opts.load_config(nullptr);
      return cmd_branch(p, q, split_str, cutoff_str, l_max, mode, branch_opts);
    }
    if (classify->parsed()) {
      classify_opts.load_config(nullptr);
      return cmd_classify(parent_str, csplit_str, classify_opts);
    }
    if (tabulate->parsed()) {
      tab_opts.load_config(nullptr);
      return cmd_tabulate(constant, lambda_max, tab_opts);
    }
    if (verify->parsed()) {
      verify_opts.load_config(&suite_cfg);
      if (grid != "default") raise(errc::invalid_parameter, "only the default grid is defined");
      if (!qsplit.empty()) {
        auto qs = parse_int_list(qsplit, 2);
        if (qs[0] + qs[1] != parseval_q)
          raise(errc::invalid_parameter, "--qsplit must sum to --q");
        suite_cfg.parseval_q_prime = qs[0];
        suite_cfg.parseval_q_doubleprime = qs[1];
      }
      return cmd_verify(identity, suite_cfg, verify_opts);
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const minrep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
