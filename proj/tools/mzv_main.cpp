#include <chrono>
#include <ctime>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyzeta/cache.hpp"
#include "polyzeta/verify.hpp"
#include "polyzeta/zeta.hpp"

namespace {

using namespace polyzeta;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDivergent = 3;
constexpr int kExitMethod = 4;

std::string now_iso8601() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

std::string format_value(const ZetaResult& res, unsigned digits) {
  if (res.real) return res.value.re.to_decimal(digits);
  std::string re = res.value.re.to_decimal(digits);
  std::string im = res.value.im.to_decimal(digits);
  if (!im.empty() && im[0] == '-') return re + " - " + im.substr(1) + "i";
  return re + " + " + im + "i";
}

std::string format_bound(const ZetaResult& res) {
  if (res.real) return res.value.re.bound_string();
  // conservative componentwise maximum
  std::string a = res.value.re.bound_string();
  std::string b = res.value.im.bound_string();
  return res.value.re.radius() >= res.value.im.radius() ? a : b;
}

struct OutputOptions {
  bool json = false;
  bool no_cache = false;
};

void emit(const std::string& input, const std::string& method, const std::string& point,
          unsigned digits, const std::string& value, const std::string& bound,
          long terms, double elapsed_ms, const OutputOptions& out) {
  if (out.json) {
    json j{{"input", input},   {"method", method},
           {"point", point},   {"digits", digits},
           {"value", value},   {"error_bound", bound},
           {"terms_used", terms}, {"elapsed_ms", elapsed_ms}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << value << "\n";
  }
}

int run_zeta(const std::vector<long>& raw_parts, unsigned digits,
             const std::string& method_str, const OutputOptions& out, ZetaConfig cfg) {
  std::vector<std::uint32_t> parts;
  for (long p : raw_parts) {
    if (p <= 0) {
      std::cerr << "mzv: composition parts must be positive integers\n";
      return kExitParse;
    }
    parts.push_back(static_cast<std::uint32_t>(p));
  }
  Composition c(parts);
  ZetaMethod m = parse_method(method_str);
  const std::string input = c.str();
  const std::string point = point_name(method_point(m));

  if (!out.no_cache) {
    ResultCache cache(ResultCache::default_dir());
    if (auto rec = cache.get(method_str, input, point, digits)) {
      emit(input, method_str, point, digits, rec->value, rec->error_bound, 0, 0.0, out);
      return kExitOk;
    }
  }

  ZetaResult res = compute_zeta(c, m, digits, cfg);
  std::string value = format_value(res, digits);
  std::string bound = format_bound(res);
  emit(input, method_str, point, digits, value, bound, res.terms_used, res.elapsed_ms,
       out);
  if (!out.no_cache) {
    ResultCache cache(ResultCache::default_dir());
    cache.put({method_str, input, point, digits, value, bound, now_iso8601(),
               kToolVersion});
  }
  return kExitOk;
}

int run_zeta_reg(const std::string& poly_text, unsigned digits, const std::string& pm,
                 const OutputOptions& out, ZetaConfig cfg) {
  WordPoly h = WordPoly::parse(poly_text);
  std::string method = pm.empty() ? "zeta-reg" : (pm == "+" ? "zeta-plus" : "zeta-minus");
  const std::string input = h.str();
  if (!out.no_cache) {
    ResultCache cache(ResultCache::default_dir());
    if (auto rec = cache.get(method, input, "half", digits)) {
      emit(input, method, "half", digits, rec->value, rec->error_bound, 0, 0.0, out);
      return kExitOk;
    }
  }
  ZetaResult res = pm.empty() ? zeta_reg(h, digits, cfg)
                              : zeta_pm(h, pm == "+" ? +1 : -1, digits, cfg);
  std::string value = format_value(res, digits);
  std::string bound = format_bound(res);
  emit(input, method, "half", digits, value, bound, res.terms_used, res.elapsed_ms, out);
  if (!out.no_cache) {
    ResultCache cache(ResultCache::default_dir());
    cache.put({method, input, "half", digits, value, bound, now_iso8601(), kToolVersion});
  }
  return kExitOk;
}

int run_transform(const std::string& op, const std::string& poly_text) {
  WordPoly h = WordPoly::parse(poly_text);
  WordPoly r;
  if (op == "box") r = box(h);
  else if (op == "nabla") r = nabla(h);
  else if (op == "sigma") r = apply_transform(TransformKind::Sigma, h);
  else if (op == "tau") r = apply_transform(TransformKind::Tau, h);
  else if (op == "sigmaprime") r = apply_transform(TransformKind::SigmaPrime, h);
  else {
    std::cerr << "mzv: unknown transform: " << op << "\n";
    return kExitParse;
  }
  std::cout << r.str() << "\n";
  return kExitOk;
}

int run_regularize(const std::string& mode, const std::string& poly_text) {
  WordPoly h = WordPoly::parse(poly_text);
  if (mode == "b") {
    for (const auto& [j, p] : regularize_b(h))
      std::cout << "b^" << j << ": " << p.str() << "\n";
  } else if (mode == "ab") {
    ABPolynomial ab = regularize_ab(h);
    for (const auto& [key, p] : ab.coeffs)
      std::cout << "a^" << key.first << " b^" << key.second << ": " << p.str() << "\n";
  } else {
    std::cerr << "mzv: unknown regularization: " << mode << " (expected b or ab)\n";
    return kExitParse;
  }
  return kExitOk;
}

int run_verify(const std::string& suite, const SuiteOptions& opts) {
  std::vector<std::pair<std::string, std::vector<CheckResult>>> groups;
  if (suite == "algebra" || suite == "all")
    groups.push_back({"algebra", verify_algebra(opts)});
  if (suite == "numeric" || suite == "all")
    groups.push_back({"numeric", verify_numeric(opts)});
  if (suite == "group" || suite == "all") groups.push_back({"group", verify_group(opts)});
  if (groups.empty()) {
    std::cerr << "mzv: unknown suite: " << suite
              << " (expected algebra, numeric, group, or all)\n";
    return kExitParse;
  }
  std::size_t passed = 0, total = 0;
  for (const auto& [name, results] : groups) {
    for (const auto& r : results) {
      ++total;
      if (r.pass) ++passed;
      std::cout << (r.pass ? "PASS" : "FAIL") << " [" << name << "] " << r.name;
      if (!r.detail.empty()) std::cout << " -- " << r.detail;
      std::cout << "\n";
    }
  }
  std::cout << (passed == total ? "PASS " : "FAIL ") << passed << "/" << total
            << " checks\n";
  return passed == total ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mzv - multiple zeta values from fast polylogarithm series at 1/2"};
  app.require_subcommand(1);

  unsigned digits = 30;
  std::string method = "thm7-half";
  OutputOptions out;
  ZetaConfig cfg;
  long max_terms = cfg.eval.max_terms;
  unsigned max_weight = cfg.max_weight;
  unsigned rho_cap = cfg.rho_digit_cap;

  std::vector<long> parts;
  auto* zeta_cmd = app.add_subcommand("zeta", "compute zeta(r1,...,rk)");
  zeta_cmd->add_option("parts", parts, "composition parts")->required();
  zeta_cmd->add_option("--digits", digits, "guaranteed decimal digits");
  zeta_cmd->add_option("--method", method, "computation method");
  zeta_cmd->add_flag("--json", out.json, "JSON output");
  zeta_cmd->add_flag("--no-cache", out.no_cache, "bypass the result cache");
  zeta_cmd->add_option("--max-weight", max_weight, "weight cap");
  zeta_cmd->add_option("--max-terms", max_terms, "series length cap");
  zeta_cmd->add_option("--rho-digit-cap", rho_cap, "digit cap for circle methods");

  std::string poly_text, pm;
  auto* reg_cmd = app.add_subcommand("zeta-reg", "regularized zeta of a word polynomial");
  reg_cmd->add_option("poly", poly_text, "word polynomial, e.g. \"ba\" or \"2*ab - a\"")
      ->required();
  reg_cmd->add_option("--digits", digits, "guaranteed decimal digits");
  reg_cmd->add_option("--pm", pm, "signed regularization: + or -")
      ->check(CLI::IsMember({"+", "-"}));
  reg_cmd->add_flag("--json", out.json, "JSON output");
  reg_cmd->add_flag("--no-cache", out.no_cache, "bypass the result cache");
  reg_cmd->add_option("--max-weight", max_weight, "weight cap");

  std::string trans_op, trans_poly;
  auto* trans_cmd = app.add_subcommand("transform", "apply box/nabla/sigma/tau/sigmaprime");
  trans_cmd->add_option("op", trans_op, "transform name")->required();
  trans_cmd->add_option("poly", trans_poly, "word polynomial")->required();

  std::string reg_mode, reg_poly;
  auto* regz_cmd = app.add_subcommand("regularize", "decompose into shuffle powers");
  regz_cmd->add_option("mode", reg_mode, "b or ab")->required();
  regz_cmd->add_option("poly", reg_poly, "word polynomial")->required();

  std::string suite;
  SuiteOptions sopts;
  auto* verify_cmd = app.add_subcommand("verify", "run the identity suites");
  verify_cmd->add_option("suite", suite, "algebra, numeric, group, or all")->required();
  verify_cmd->add_option("--max-weight", sopts.max_weight, "weight bound");
  verify_cmd->add_option("--digits", sopts.digits, "working precision");
  verify_cmd->add_option("--seed", sopts.seed, "random seed");
  verify_cmd->add_option("--trials", sopts.trials, "number of random trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitParse;
  }

  cfg.max_weight = max_weight;
  cfg.rho_digit_cap = rho_cap;
  cfg.eval.max_terms = max_terms;

  try {
    if (zeta_cmd->parsed()) return run_zeta(parts, digits, method, out, cfg);
    if (reg_cmd->parsed()) return run_zeta_reg(poly_text, digits, pm, out, cfg);
    if (trans_cmd->parsed()) return run_transform(trans_op, trans_poly);
    if (regz_cmd->parsed()) return run_regularize(reg_mode, reg_poly);
    if (verify_cmd->parsed()) return run_verify(suite, sopts);
  } catch (const divergent_error& e) {
    std::cerr << "mzv: " << e.what() << "\n";
    return kExitDivergent;
  } catch (const method_error& e) {
    std::cerr << "mzv: " << e.what() << "\n";
    return kExitMethod;
  } catch (const precision_error& e) {
    std::cerr << "mzv: " << e.what() << "\n";
    return kExitMethod;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mzv: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "mzv: internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitParse;
}
