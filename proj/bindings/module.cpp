// Pybind11 bindings exposing the main operations on strings and plain
// containers; arbitrary-precision values travel as decimal strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "polyzeta/cache.hpp"
#include "polyzeta/group.hpp"
#include "polyzeta/series.hpp"
#include "polyzeta/verify.hpp"
#include "polyzeta/zeta.hpp"

namespace py = pybind11;
using namespace polyzeta;

namespace {

Composition to_comp(const std::vector<long>& parts) {
  std::vector<std::uint32_t> p;
  for (long v : parts) {
    if (v <= 0) throw std::invalid_argument("composition parts must be positive");
    p.push_back(static_cast<std::uint32_t>(v));
  }
  return Composition(std::move(p));
}

py::dict result_dict(const ZetaResult& r, unsigned digits) {
  py::dict d;
  if (r.real) {
    d["value"] = r.value.re.to_decimal(digits);
  } else {
    d["value_re"] = r.value.re.to_decimal(digits);
    d["value_im"] = r.value.im.to_decimal(digits);
  }
  d["error_bound"] = r.value.re.radius() >= r.value.im.radius()
                         ? r.value.re.bound_string()
                         : r.value.im.bound_string();
  d["terms_used"] = r.terms_used;
  d["elapsed_ms"] = r.elapsed_ms;
  d["method"] = method_name(r.method);
  return d;
}

py::dict series_dict(const SeriesValue& v, EvalPoint pt, unsigned digits) {
  py::dict d;
  if (is_real_point(pt)) {
    d["value"] = v.real_checked().to_decimal(digits);
    d["error_bound"] = v.real_checked().bound_string();
  } else {
    d["value_re"] = v.value.re.to_decimal(digits);
    d["value_im"] = v.value.im.to_decimal(digits);
    d["error_bound"] = v.value.re.radius() >= v.value.im.radius()
                           ? v.value.re.bound_string()
                           : v.value.im.bound_string();
  }
  d["terms_used"] = v.terms_used;
  return d;
}

}  // namespace

PYBIND11_MODULE(_polyzeta, m) {
  m.doc() = "multiple zeta values from fast polylogarithm series at 1/2, with an "
            "exact shuffle word algebra underneath";

  py::register_exception<divergent_error>(m, "DivergentError", PyExc_ValueError);
  py::register_exception<method_error>(m, "MethodError", PyExc_ValueError);
  py::register_exception<precision_error>(m, "PrecisionError", PyExc_RuntimeError);

  // --- word algebra -----------------------------------------------------------
  m.def("shuffle", [](const std::string& u, const std::string& v) {
    return shuffle(WordPoly::parse(u), WordPoly::parse(v)).str();
  }, py::arg("u"), py::arg("v"), "shuffle product of two word polynomials");

  m.def("concat", [](const std::string& u, const std::string& v) {
    return concat(Word::parse(u), Word::parse(v)).str();
  });

  m.def("coproduct", [](const std::string& w) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [p, s] : coproduct(Word::parse(w)))
      out.push_back({p.str(), s.str()});
    return out;
  });

  m.def("antipode", [](const std::string& h) {
    return antipode(WordPoly::parse(h)).str();
  });

  m.def("classify", [](const std::string& w) -> std::string {
    switch (classify(Word::parse(w))) {
      case WordClass::PlusPlus: return "plus-plus";
      case WordClass::PlusOnly: return "plus";
      default: return "other";
    }
  });

  m.def("lambda_map", [](const std::string& w) {
    Composition c = lambda_map(Word::parse(w));
    std::vector<long> out;
    for (auto p : c.parts()) out.push_back(p);
    return out;
  });

  m.def("lambda_inverse", [](const std::vector<long>& parts) {
    return lambda_inverse(to_comp(parts)).str();
  });

  m.def("regularize_b", [](const std::string& h) {
    std::map<unsigned, std::string> out;
    for (const auto& [j, p] : regularize_b(WordPoly::parse(h))) out[j] = p.str();
    return out;
  });

  m.def("regularize_ab", [](const std::string& h) {
    std::map<std::pair<unsigned, unsigned>, std::string> out;
    ABPolynomial ab = regularize_ab(WordPoly::parse(h));
    for (const auto& [key, p] : ab.coeffs) out[key] = p.str();
    return out;
  });

  // --- transforms -------------------------------------------------------------
  m.def("transform", [](const std::string& kind, const std::string& h) {
    WordPoly p = WordPoly::parse(h);
    if (kind == "box") return box(p).str();
    if (kind == "nabla") return nabla(p).str();
    if (kind == "sigma") return apply_transform(TransformKind::Sigma, p).str();
    if (kind == "tau") return apply_transform(TransformKind::Tau, p).str();
    if (kind == "sigmaprime")
      return apply_transform(TransformKind::SigmaPrime, p).str();
    throw std::invalid_argument("unknown transform: " + kind);
  }, py::arg("kind"), py::arg("poly"));

  m.def("box_closed_form", [](unsigned r) { return box_closed_form(r).str(); });
  m.def("nabla_closed_form", [](unsigned r) { return nabla_closed_form(r).str(); });

  m.def("lemma9_coeffs", [](const std::string& w) {
    auto c = lemma9_coeffs(Word::parse(w));
    return std::pair<long, long>{c.c, c.c_pm};
  });

  m.def("theorem10_weights", [](const std::vector<long>& parts) {
    auto c = theorem10_weights(to_comp(parts));
    return std::pair<long, long>{c.b, c.b_pm};
  });

  m.def("cor12_weight", [](const std::vector<std::uint32_t>& tuple) {
    return cor12_weight(tuple);
  });

  // --- numerics ---------------------------------------------------------------
  m.def("const_log2",
        [](unsigned digits) { return const_log2(digits).to_decimal(digits); },
        py::arg("digits") = 20);
  m.def("const_pi", [](unsigned digits) { return const_pi(digits).to_decimal(digits); },
        py::arg("digits") = 20);
  m.def("const_sqrt3",
        [](unsigned digits) { return const_sqrt3(digits).to_decimal(digits); },
        py::arg("digits") = 20);

  m.def("polylog",
        [](const std::vector<long>& exponents, const std::string& point, unsigned digits,
           std::optional<std::vector<bool>> strict) {
          std::vector<std::uint32_t> exps;
          for (long e : exponents) {
            if (e <= 0) throw std::invalid_argument("exponents must be positive");
            exps.push_back(static_cast<std::uint32_t>(e));
          }
          EvalPoint pt = parse_point(point);
          RelationalIndex idx =
              strict ? RelationalIndex(exps, *strict)
                     : RelationalIndex(exps, std::vector<bool>(exps.size(), true));
          return series_dict(polylog(idx, pt, digits), pt, digits);
        },
        py::arg("exponents"), py::arg("point") = "half", py::arg("digits") = 20,
        py::arg("strict") = std::nullopt);

  m.def("polylog_word",
        [](const std::string& w, const std::string& point, unsigned digits) {
          EvalPoint pt = parse_point(point);
          SeriesValue v = polylog_word(Word::parse(w), pt, digits);
          py::dict d;
          d["value_re"] = v.value.re.to_decimal(digits);
          d["value_im"] = v.value.im.to_decimal(digits);
          d["terms_used"] = v.terms_used;
          return d;
        },
        py::arg("word"), py::arg("point") = "half", py::arg("digits") = 20);

  m.def("polylog_poly",
        [](const std::string& h, const std::string& point, unsigned digits) {
          EvalPoint pt = parse_point(point);
          SeriesValue v = polylog_helem(WordPoly::parse(h), pt, digits);
          py::dict d;
          d["value_re"] = v.value.re.to_decimal(digits);
          d["value_im"] = v.value.im.to_decimal(digits);
          d["terms_used"] = v.terms_used;
          return d;
        },
        py::arg("poly"), py::arg("point") = "half", py::arg("digits") = 20);

  // --- zeta pipelines -----------------------------------------------------------
  m.def("zeta",
        [](const std::vector<long>& parts, unsigned digits, const std::string& method) {
          ZetaResult r = compute_zeta(to_comp(parts), parse_method(method), digits);
          py::dict d = result_dict(r, digits);
          d["point"] = point_name(method_point(r.method));
          return d;
        },
        py::arg("parts"), py::arg("digits") = 30, py::arg("method") = "thm7-half");

  m.def("zeta_reg",
        [](const std::string& h, unsigned digits) {
          return result_dict(zeta_reg(WordPoly::parse(h), digits), digits);
        },
        py::arg("poly"), py::arg("digits") = 30);

  m.def("zeta_pm",
        [](const std::string& h, int sign, unsigned digits) {
          ZetaResult r = zeta_pm(WordPoly::parse(h), sign, digits);
          py::dict d;
          d["value_re"] = r.value.re.to_decimal(digits);
          d["value_im"] = r.value.im.to_decimal(digits);
          d["terms_used"] = r.terms_used;
          return d;
        },
        py::arg("poly"), py::arg("sign") = 1, py::arg("digits") = 30);

  m.def("zeta_oracle",
        [](const std::vector<long>& parts, long cutoff, unsigned digits) {
          return zeta_direct_oracle(to_comp(parts), cutoff).to_decimal(digits);
        },
        py::arg("parts"), py::arg("cutoff") = 100000, py::arg("digits") = 6);

  // --- verification -------------------------------------------------------------
  m.def("verify",
        [](const std::string& suite, std::uint32_t max_weight, unsigned digits,
           std::uint64_t seed, std::uint32_t trials) {
          SuiteOptions opts{max_weight, digits, seed, trials};
          std::vector<CheckResult> rs;
          if (suite == "algebra" || suite == "all") {
            auto v = verify_algebra(opts);
            rs.insert(rs.end(), v.begin(), v.end());
          }
          if (suite == "numeric" || suite == "all") {
            auto v = verify_numeric(opts);
            rs.insert(rs.end(), v.begin(), v.end());
          }
          if (suite == "group" || suite == "all") {
            auto v = verify_group(opts);
            rs.insert(rs.end(), v.begin(), v.end());
          }
          if (rs.empty()) throw std::invalid_argument("unknown suite: " + suite);
          py::list out;
          for (const auto& r : rs) {
            py::dict d;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            out.append(d);
          }
          return out;
        },
        py::arg("suite") = "all", py::arg("max_weight") = 5, py::arg("digits") = 20,
        py::arg("seed") = 42, py::arg("trials") = 20);

  m.attr("__version__") = kToolVersion;
}
