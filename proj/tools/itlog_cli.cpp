// Command-line front-end: expression parsing to exact series, subcommands
// for the solvers and experiments, caching, and structured output.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "itlog/cache.hpp"
#include "itlog/expr.hpp"
#include "itlog/funceq.hpp"
#include "itlog/guess.hpp"
#include "itlog/poincare.hpp"
#include "itlog/seriesio.hpp"
#include "itlog/verify.hpp"

using nlohmann::json;
using namespace itlog;

namespace {

struct CommonOpts {
  std::string cache_dir;
  std::vector<std::string> params;
};

ParamMap parse_params(const std::vector<std::string>& kvs) {
  ParamMap m;
  for (const std::string& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw EvalError("--param expects name=num/den, got '" + kv + "'");
    m[kv.substr(0, eq)] = rat_from_string(kv.substr(eq + 1));
  }
  return m;
}

json series_json(const RSeries& s) {
  json coeffs = json::array();
  for (int k = 0; k <= s.order(); ++k) {
    if (s.coeff(k) == 0) continue;
    coeffs.push_back({k, rat_to_string(s.coeff(k))});
  }
  return json{{"order", s.order()}, {"coefficients", coeffs}};
}

int cmd_itlog(const std::string& expr_text, int order, bool as_json,
              const CommonOpts& common) {
  ExprPtr e = parse_expression(expr_text);
  ParamMap params = parse_params(common.params);
  std::string norm = normalize_expression(e);
  SeriesCache cache(SeriesCache::resolve_dir(common.cache_dir));
  std::string key = SeriesCache::key(norm, "itlog", order);

  auto verify = [&](const RSeries& phi) {
    // entries are trusted only after their Julia residual re-checks to order 10
    if (phi.order() < 10) return false;
    try {
      ParabolicGerm f = eval_germ_for_itlog(e, 11, params);
      return julia_residual(f, phi.truncate(10)).truncate(10 - f.p() + 1).is_zero();
    } catch (const Error&) {
      return false;
    }
  };

  ParabolicGerm f = eval_germ_for_itlog(e, order, params);
  RSeries phi = RSeries::zero(0);
  if (auto cached = cache.load(key, verify); cached && cached->order() == order) {
    phi = *cached;
  } else {
    phi = itlog_solve(f, order).phi;
    cache.store(key, phi, norm, "itlog", order);
  }

  std::cerr << "input truncation: order " << f.series().order() << "\n";
  if (as_json) {
    json out = {{"schema", 1},
                {"op", "itlog"},
                {"expr", norm},
                {"p", f.p()},
                {"input_truncation", f.series().order()},
                {"series", series_json(phi)}};
    std::cout << out.dump(2) << "\n";
  } else {
    write_series(std::cout, phi);
  }
  return 0;
}

RSeries load_series_argument(const std::string& arg, int order, const ParamMap& params,
                             int min_order) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    return read_rseries(in);
  }
  // expressions are cheap: evaluate deep enough for the requested search
  return eval_series(parse_expression(arg), std::max(order, min_order), params);
}

json outcome_json(const GuessOutcome& out, const std::string& mode,
                  const SearchBounds& b) {
  json j = {{"schema", 1},
            {"op", "guess"},
            {"mode", mode},
            {"verdict", out.found() ? "found" : "none_within_bounds"},
            {"bounds",
             {{"max_order", b.max_order},
              {"max_total_degree", b.max_total_degree},
              {"max_z_degree", b.max_z_degree},
              {"margin", b.margin}}},
            {"verified_to", out.verified_to},
            {"caveat", out.caveat}};
  if (out.candidate) j["candidate"] = diffpoly_to_string(*out.candidate, "Y");
  return j;
}

void print_outcome(const GuessOutcome& out, const std::string& mode,
                   const SearchBounds& b, bool as_json) {
  if (as_json) {
    std::cout << outcome_json(out, mode, b).dump(2) << "\n";
    return;
  }
  if (out.found()) {
    std::cout << "found: " << diffpoly_to_string(*out.candidate, "Y") << "\n";
    std::cout << "verified to order " << out.verified_to << "\n";
  } else {
    std::cout << "none_within_bounds (verified to order " << out.verified_to << ")\n";
    std::cout << "caveat: " << out.caveat << "\n";
  }
}

// Series order needed so the search rows cover every unknown plus the margin.
int required_depth(const std::string& mode, const SearchBounds& b, bool affine) {
  int monomials;
  if (mode == "ade") {
    // C(r+1+d, d) monomials of order <= r and total degree <= d
    long num = 1, den = 1;
    for (int t = 1; t <= b.max_order + 1; ++t) {
      num *= b.max_total_degree + t;
      den *= t;
    }
    monomials = static_cast<int>(num / den);
  } else {
    monomials = b.max_order + 1 + (affine ? 1 : 0);
  }
  return monomials * (b.max_z_degree + 1) + b.margin + b.max_order;
}

int cmd_guess(const std::string& series_arg, const std::string& mode, int order,
              SearchBounds b, bool affine, bool as_json, const CommonOpts& common) {
  ParamMap params = parse_params(common.params);
  RSeries y = load_series_argument(series_arg, order, params,
                                   required_depth(mode, b, affine));
  GuessOutcome out = mode == "ade" ? guess_ade(y, b) : guess_linear_ode(y, b, affine);
  print_outcome(out, mode, b, as_json);
  return 0;
}

int cmd_scan(const std::string& expr_text, int kmax, const CommonOpts& common) {
  ParamMap params = parse_params(common.params);
  ParabolicGerm f = eval_germ_for_itlog(parse_expression(expr_text), kmax, params);
  std::vector<int> vanished = nonvanishing_scan(f, kmax);
  if (vanished.empty()) {
    std::cout << "no vanishing coefficients in " << f.p() + 1 << ".." << kmax << "\n";
  } else {
    std::cout << "vanishing coefficients at k =";
    for (int k : vanished) std::cout << " " << k;
    std::cout << "\n";
  }
  return 0;
}

int cmd_ogf_probe(const std::string& expr_text, int order, const std::string& mode,
                  SearchBounds b, bool as_json, const CommonOpts& common) {
  ParamMap params = parse_params(common.params);
  int depth = std::max(order, required_depth(mode, b, false));
  ParabolicGerm f = eval_germ_for_itlog(parse_expression(expr_text), depth, params);
  RSeries phi = itlog_solve(f, depth).phi;
  RSeries ogf = egf_ogf_transform(phi, GfDirection::to_ogf);
  GuessOutcome out = mode == "ade" ? guess_ade(ogf, b) : guess_linear_ode(ogf, b);
  std::cout << "ogf-probe: evidence only, never a (dis)proof\n";
  print_outcome(out, mode, b, as_json);
  return 0;
}

int cmd_verify(const std::string& suite) {
  auto results = verify_suite(suite);
  bool all = true;
  for (const CheckResult& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

std::vector<Cplx> read_samples_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EvalError("cannot open sample file '" + path + "'");
  std::vector<Cplx> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw EvalError("CSV line must be re,im: " + line);
    out.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return out;
}

int cmd_poincare(const std::string& expr_text, const std::string& seed_text, int period,
                 const std::string& csv_path, double tol, const CommonOpts& common) {
  ParamMap params = parse_params(common.params);
  auto comma = seed_text.find(',');
  if (comma == std::string::npos) throw EvalError("--seed expects RE,IM");
  Cplx seed(std::stod(seed_text.substr(0, comma)), std::stod(seed_text.substr(comma + 1)));

  EvaluableMap f(parse_expression(expr_text), params);
  FixedPointData fp = find_repelling_fixed_point(f, seed, period);
  std::cerr << "fixed point xi = " << fp.xi << ", lambda = " << fp.lambda << "\n";

  std::cout << "z_re,z_im,val_re,val_im,n_used,err\n";
  std::cout.precision(16);
  for (const Cplx& z : read_samples_csv(csv_path)) {
    EvalReport rep = poincare_eval(f, fp, z, tol);
    std::cout << z.real() << "," << z.imag() << "," << rep.value.real() << ","
              << rep.value.imag() << "," << rep.n_used << "," << rep.error_estimate
              << "\n";
  }
  return 0;
}

int cmd_flow(const std::string& expr_text, const std::string& t_text, int order,
             const CommonOpts& common) {
  ParamMap params = parse_params(common.params);
  ParabolicGerm f = eval_germ_for_itlog(parse_expression(expr_text), order, params);
  RSeries result = flow(f, rat_from_string(t_text), order);
  write_series(std::cout, result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for Julia/Schroeder functional equations, "
               "iterative logarithms and differential-equation guessing"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--cache-dir", common.cache_dir,
                 "cache directory (default: $ITLOG_CACHE_DIR or ~/.cache/itlog)");
  app.add_option("--param", common.params, "bind a parameter, name=num/den");

  std::string expr, series_arg, mode = "ade", suite, seed, csv_path, t_text;
  int order = 20, kmax = 100, period = 1;
  double tol = 1e-10;
  bool as_json = false, affine = false;
  SearchBounds bounds;

  auto* c_itlog = app.add_subcommand("itlog", "iterative logarithm of a parabolic germ");
  c_itlog->add_option("--f", expr, "germ expression")->required();
  c_itlog->add_option("--order", order, "truncation order")->required();
  c_itlog->add_flag("--json", as_json, "JSON output");

  auto* c_guess = app.add_subcommand("guess", "search for an annihilating equation");
  c_guess->add_option("--series", series_arg, "series expression or file")->required();
  c_guess->add_option("--mode", mode, "ade|ode")->check(CLI::IsMember({"ade", "ode"}));
  c_guess->add_option("--order", order, "verification order");
  c_guess->add_option("--max-order", bounds.max_order, "max derivative order r");
  c_guess->add_option("--max-degree", bounds.max_total_degree, "max total degree d");
  c_guess->add_option("--max-zdeg", bounds.max_z_degree, "max z-degree e");
  c_guess->add_option("--margin", bounds.margin, "surplus matched coefficients");
  c_guess->add_flag("--affine", affine, "admit pure z^a columns in ode mode");
  c_guess->add_flag("--json", as_json, "JSON output");

  auto* c_scan = app.add_subcommand("scan", "scan itlog coefficients for zeros");
  c_scan->add_option("--f", expr, "germ expression")->required();
  c_scan->add_option("--kmax", kmax, "highest index to scan")->required();

  auto* c_ogf = app.add_subcommand("ogf-probe",
                                   "transform itlog to its ogf and guess (experiment)");
  c_ogf->add_option("--f", expr, "germ expression")->required();
  c_ogf->add_option("--order", order, "itlog truncation order")->required();
  c_ogf->add_option("--mode", mode, "ade|ode")->check(CLI::IsMember({"ade", "ode"}));
  c_ogf->add_option("--max-order", bounds.max_order, "max derivative order r");
  c_ogf->add_option("--max-degree", bounds.max_total_degree, "max total degree d");
  c_ogf->add_option("--max-zdeg", bounds.max_z_degree, "max z-degree e");
  c_ogf->add_option("--margin", bounds.margin, "surplus matched coefficients");
  c_ogf->add_flag("--json", as_json, "JSON output");

  auto* c_verify = app.add_subcommand("verify", "run an invariant suite");
  c_verify->add_option("--suite", suite, "julia|chainA|chainB|flow|scale")
      ->required()
      ->check(CLI::IsMember({"julia", "chainA", "chainB", "flow", "scale"}));

  auto* c_poincare = app.add_subcommand("poincare", "numeric Poincare function batch");
  c_poincare->add_option("--f", expr, "map expression")->required();
  c_poincare->add_option("--seed", seed, "Newton seed RE,IM")->required();
  c_poincare->add_option("--period", period, "period of the fixed point");
  c_poincare->add_option("--at", csv_path, "CSV sample file (re,im per line)")->required();
  c_poincare->add_option("--tol", tol, "convergence tolerance");

  auto* c_flow = app.add_subcommand("flow", "formal flow of a parabolic germ");
  c_flow->add_option("--f", expr, "germ expression")->required();
  c_flow->add_option("--t", t_text, "flow exponent, rational")->required();
  c_flow->add_option("--order", order, "truncation order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_itlog) return cmd_itlog(expr, order, as_json, common);
    if (*c_guess) return cmd_guess(series_arg, mode, order, bounds, affine, as_json, common);
    if (*c_scan) return cmd_scan(expr, kmax, common);
    if (*c_ogf) return cmd_ogf_probe(expr, order, mode, bounds, as_json, common);
    if (*c_verify) return cmd_verify(suite);
    if (*c_poincare) return cmd_poincare(expr, seed, period, csv_path, tol, common);
    if (*c_flow) return cmd_flow(expr, t_text, order, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
