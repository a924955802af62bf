#include "polyzeta/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "polyzeta/group.hpp"
#include "polyzeta/series.hpp"
#include "polyzeta/transforms.hpp"
#include "polyzeta/zeta.hpp"

namespace polyzeta {

namespace {

struct Runner {
  std::vector<CheckResult> results;

  template <typename F>
  void run(const std::string& name, F&& f) {
    CheckResult r;
    r.name = name;
    try {
      std::string detail = f();
      r.pass = true;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
};

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

Word random_word(std::mt19937_64& rng, std::uint32_t max_len) {
  std::uniform_int_distribution<std::uint32_t> len(0, max_len);
  std::uniform_int_distribution<int> bit(0, 1);
  Word w;
  std::uint32_t n = len(rng);
  for (std::uint32_t i = 0; i < n; ++i)
    w = w.appended(bit(rng) == 0 ? Letter::A : Letter::B);
  return w;
}

WordPoly random_poly(std::mt19937_64& rng, std::uint32_t max_len, std::uint32_t terms) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  WordPoly p;
  for (std::uint32_t i = 0; i < terms; ++i) {
    int n = num(rng);
    if (n == 0) n = 1;
    Rational c(n, den(rng));
    c.canonicalize();
    p.add_term(random_word(rng, max_len), c);
  }
  return p;
}

using Tensor = std::map<std::pair<Word, Word>, Rational>;

Tensor tensor_coproduct(const WordPoly& h) {
  Tensor t;
  for (const auto& [w, c] : h.terms())
    for (const auto& [u, v] : coproduct(w)) {
      auto key = std::make_pair(u, v);
      t[key] += c;
      if (t[key] == 0) t.erase(key);
    }
  return t;
}

Tensor tensor_shuffle(const Tensor& x, const Tensor& y) {
  Tensor out;
  for (const auto& [ku, cu] : x)
    for (const auto& [kv, cv] : y) {
      WordPoly left = shuffle(WordPoly(ku.first), WordPoly(kv.first));
      WordPoly right = shuffle(WordPoly(ku.second), WordPoly(kv.second));
      for (const auto& [lw, lc] : left.terms())
        for (const auto& [rw, rc] : right.terms()) {
          auto key = std::make_pair(lw, rw);
          out[key] += cu * cv * lc * rc;
          if (out[key] == 0) out.erase(key);
        }
    }
  return out;
}

}  // namespace

std::vector<CheckResult> verify_algebra(const SuiteOptions& opts) {
  Runner R;
  std::mt19937_64 rng(opts.seed);

  R.run("shuffle commutative/associative with unit", [&] {
    for (std::uint32_t t = 0; t < opts.trials; ++t) {
      WordPoly u = random_poly(rng, 4, 3), v = random_poly(rng, 4, 3),
               w = random_poly(rng, 3, 2);
      if (!(shuffle(u, v) == shuffle(v, u))) fail("commutativity");
      if (!(shuffle(shuffle(u, v), w) == shuffle(u, shuffle(v, w)))) fail("associativity");
      if (!(shuffle(u, WordPoly::one()) == u)) fail("unit");
    }
    return "exact on seeded random polynomials";
  });

  R.run("coproduct coassociative and shuffle morphism", [&] {
    for (const Word& u : all_words(3)) {
      for (const Word& v : all_words(3)) {
        Tensor lhs = tensor_coproduct(shuffle(WordPoly(u), WordPoly(v)));
        Tensor rhs = tensor_shuffle(tensor_coproduct(WordPoly(u)),
                                    tensor_coproduct(WordPoly(v)));
        if (lhs != rhs) fail("morphism property at " + u.str() + ", " + v.str());
      }
      // coassociativity via explicit triple splits
      std::map<std::tuple<Word, Word, Word>, Rational> left, right;
      for (const auto& [p, s] : coproduct(u))
        for (const auto& [p2, s2] : coproduct(p)) left[{p2, s2, s}] += 1;
      for (const auto& [p, s] : coproduct(u))
        for (const auto& [p2, s2] : coproduct(s)) right[{p, p2, s2}] += 1;
      if (left != right) fail("coassociativity at " + u.str());
    }
    return "exact on all words of length <= 3 (pairs) resp. <= 3";
  });

  R.run("antipode axiom", [&] {
    for (const Word& w : all_words(6)) {
      WordPoly acc;
      for (const auto& [p, s] : coproduct(w)) acc += shuffle(antipode(p), WordPoly(s));
      WordPoly expect = w.empty() ? WordPoly::one() : WordPoly::zero();
      if (!(acc == expect)) fail("antipode axiom at " + w.str());
    }
    return "exact for all words of length <= 6";
  });

  R.run("lambda bijection round-trips", [&] {
    for (const Word& w : all_words(8)) {
      if (!in_w_plus(w)) continue;
      if (!(lambda_inverse(lambda_map(w)) == w)) fail("round-trip at " + w.str());
    }
    std::function<void(std::uint32_t, std::vector<std::uint32_t>&)> rec =
        [&](std::uint32_t rest, std::vector<std::uint32_t>& parts) {
          if (rest == 0) {
            Composition c(parts);
            if (!(lambda_map(lambda_inverse(c)) == c)) fail("inverse round-trip");
            return;
          }
          for (std::uint32_t p = 1; p <= rest; ++p) {
            parts.push_back(p);
            rec(rest - p, parts);
            parts.pop_back();
          }
        };
    std::vector<std::uint32_t> parts;
    for (std::uint32_t wgt = 1; wgt <= 7; ++wgt) rec(wgt, parts);
    return "exact on W+ up to length 8 and compositions up to weight 7";
  });

  R.run("regularization round-trips", [&] {
    for (const Word& w : all_words(5)) {
      WordPoly h(w);
      if (!(expand_letter_poly(regularize_b(h), Letter::B) == h))
        fail("b-polynomial round-trip at " + w.str());
      for (const auto& [j, p] : regularize_b(h))
        for (const auto& [pw, pc] : p.terms())
          if (!in_w_plus(pw)) fail("b-coefficient outside W+ at " + w.str());
      if (!(regularize_ab(h).expand() == h)) fail("ab round-trip at " + w.str());
      ABPolynomial dab = regularize_ab(h);
      for (const auto& [key, p] : dab.coeffs)
        for (const auto& [pw, pc] : p.terms())
          if (!in_w_plus_plus(pw)) fail("ab-coefficient outside W++ at " + w.str());
    }
    return "exact for all words of length <= 5";
  });

  R.run("W+ and W++ are shuffle-closed", [&] {
    for (const Word& u : all_words(4)) {
      for (const Word& v : all_words(4)) {
        WordPoly s = shuffle(u, v);
        if (in_w_plus(u) && in_w_plus(v))
          for (const auto& [w, c] : s.terms())
            if (!in_w_plus(w)) fail("W+ closure");
        if (in_w_plus_plus(u) && in_w_plus_plus(v))
          for (const auto& [w, c] : s.terms())
            if (!in_w_plus_plus(w)) fail("W++ closure");
      }
    }
    return "exact for all pairs of length <= 4";
  });

  R.run("sigma and sigma-prime are involutions", [&] {
    for (const Word& w : all_words(6)) {
      WordPoly h(w);
      if (!(apply_transform(TransformKind::Sigma,
                            apply_transform(TransformKind::Sigma, h)) == h))
        fail("sigma^2 at " + w.str());
      if (!(apply_transform(TransformKind::SigmaPrime,
                            apply_transform(TransformKind::SigmaPrime, h)) == h))
        fail("sigma-prime^2 at " + w.str());
    }
    return "exact for all words of length <= 6";
  });

  R.run("box and nabla are shuffle morphisms", [&] {
    for (std::uint32_t t = 0; t < opts.trials; ++t) {
      WordPoly u(random_word(rng, 4)), v(random_word(rng, 4));
      if (!(box(shuffle(u, v)) == shuffle(box(u), box(v)))) fail("box morphism");
      if (!(nabla(shuffle(u, v)) == shuffle(nabla(u), nabla(v)))) fail("nabla morphism");
    }
    return "exact on seeded random word pairs of length <= 4";
  });

  R.run("closed forms match box/nabla and the coefficient family", [&] {
    for (std::uint32_t r = 2; r <= 7; ++r) {
      Word w = concat(Word::single(Letter::A), letter_power(Letter::B, r - 1));
      WordPoly bx = box(WordPoly(w)), nb = nabla(WordPoly(w));
      if (!(bx == box_closed_form(r))) fail("box closed form at r=" + std::to_string(r));
      if (!(nb == nabla_closed_form(r)))
        fail("nabla closed form at r=" + std::to_string(r));
      WordPoly via_c, via_cpm;
      for (const Word& u : all_words(r)) {
        if (u.size() != r) continue;
        auto cc = lemma9_coeffs(u);
        if (cc.c != 0) via_c.add_term(u, Rational(cc.c));
        if (cc.c_pm != 0) via_cpm.add_term(u, Rational(cc.c_pm));
      }
      if (!(via_c == bx)) fail("c(w) family at r=" + std::to_string(r));
      if (!(via_cpm == nb)) fail("c_pm(w) family at r=" + std::to_string(r));
    }
    return "exact for r = 2..7";
  });

  R.run("box of W++ lands in W+", [&] {
    for (const Word& w : all_words(6)) {
      if (!in_w_plus_plus(w) || w.empty()) continue;
      WordPoly bw = box(WordPoly(w));
      for (const auto& [u, c] : bw.terms())
        if (!in_w_plus(u)) fail("box support at " + w.str());
    }
    return "exact for all W++ words of length <= 6";
  });

  R.run("composition weights transport the word coefficients", [&] {
    for (const Word& w : all_words(7)) {
      if (w.size() < 2 || !in_w_plus(w)) continue;
      auto cw = lemma9_coeffs(w);
      auto bm = theorem10_weights(lambda_map(w));
      if (cw.c != bm.b || cw.c_pm != bm.b_pm) fail("transport at " + w.str());
    }
    return "exact for all W+ words of length 2..7";
  });

  R.run("cone weight count matches its case analysis", [&] {
    std::mt19937_64 rng2(opts.seed + 1);
    std::uniform_int_distribution<std::uint32_t> step(0, 2);
    for (std::uint32_t r = 2; r <= 6; ++r) {
      for (std::uint32_t t = 0; t < 200; ++t) {
        std::vector<std::uint32_t> tuple(r);
        tuple[0] = 1 + step(rng2);
        for (std::uint32_t i = 1; i < r; ++i) tuple[i] = tuple[i - 1] + step(rng2);
        if (cor12_weight(tuple) != cor12_weight_closed(tuple))
          fail("weight mismatch at r=" + std::to_string(r));
      }
    }
    return "count equals first-tie case analysis on sampled tuples, r = 2..6";
  });

  return R.results;
}

std::vector<CheckResult> verify_numeric(const SuiteOptions& opts) {
  Runner R;
  const unsigned d = opts.digits;
  ZetaConfig cfg;

  R.run("Euler identity zeta(2) = 2 L_2(1/2) + log^2 2", [&] {
    ApproxReal z2 = zeta_conv(Composition({2}), d, cfg).real_value();
    ApproxReal l2 = polylog(RelationalIndex::all_strict(Composition({2})),
                            EvalPoint::Half, d + 2)
                        .value.re;
    ApproxReal lg = const_log2(d + 2);
    ApproxReal rhs = scale_by_rational(l2, Rational(2)) + lg * lg;
    if (!agrees(z2, rhs)) fail("identity violated");
    return "agrees within combined radii at " + std::to_string(d) + " digits";
  });

  R.run("pi^2/6 anchor", [&] {
    ApproxReal z2 = zeta_conv(Composition({2}), d, cfg).real_value();
    ApproxReal pi = const_pi(d + 2);
    ApproxReal target = scale_by_rational(pi * pi, Rational(1, 6));
    if (!agrees(z2, target)) fail("anchor violated");
    return "agrees within combined radii";
  });

  R.run("method cross-agreement", [&] {
    for (std::uint32_t r = 2; r <= 5; ++r) {
      std::vector<ApproxReal> vals;
      for (ZetaMethod m : {ZetaMethod::Thm7Half, ZetaMethod::Thm10, ZetaMethod::Cor12,
                           ZetaMethod::Cor21, ZetaMethod::Lemma20MinusOne})
        vals.push_back(zeta_r(r, m, d, cfg).real_value());
      for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j)
          if (!agrees(vals[i], vals[j]))
            fail("disagreement at r=" + std::to_string(r));
    }
    return "five methods pairwise agree for r = 2..5";
  });

  R.run("products of L-values respect shuffles at 1/2", [&] {
    for (const Word& u : all_words(4)) {
      if (u.empty() || !in_w_plus(u)) continue;
      for (const Word& v : all_words(4)) {
        if (v.empty() || !in_w_plus(v)) continue;
        if (u.size() + v.size() > 5 || v < u) continue;
        ApproxReal lu = polylog_word(u, EvalPoint::Half, d + 2).real_checked();
        ApproxReal lv = polylog_word(v, EvalPoint::Half, d + 2).real_checked();
        ApproxReal rhs = polylog_helem(shuffle(WordPoly(u), WordPoly(v)),
                                       EvalPoint::Half, d + 2)
                             .real_checked();
        if (!agrees(lu * lv, rhs)) fail("at " + u.str() + " * " + v.str());
      }
    }
    return "L_u L_v = L_{u*v} within radii, |u|+|v| <= 5";
  });

  R.run("all-ones values are powers of log 2", [&] {
    ApproxReal lg = const_log2(d + 4);
    ApproxReal pw = ApproxReal::exact_integer(1, lg.scale_bits());
    Rational inv_fact(1);
    for (std::uint32_t k = 1; k <= 6; ++k) {
      pw = pw * lg;
      inv_fact /= k;
      Composition ones(std::vector<std::uint32_t>(k, 1));
      ApproxReal got =
          polylog(RelationalIndex::all_strict(ones), EvalPoint::Half, d).value.re;
      if (!agrees(got, scale_by_rational(pw, inv_fact)))
        fail("all-ones at k=" + std::to_string(k));
    }
    return "(log 2)^k / k! within radii for k <= 6";
  });

  R.run("change of variable between -1 and 1/2", [&] {
    for (const Word& w : all_words(4)) {
      if (w.empty() || !in_w_plus(w)) continue;
      SeriesValue lhs = polylog_word(w, EvalPoint::MinusOne, d);
      SeriesValue rhs = polylog_helem(apply_transform(TransformKind::SigmaPrime,
                                                      WordPoly(w)),
                                      EvalPoint::Half, d);
      if (!agrees(lhs.real_checked(), rhs.real_checked())) fail("at " + w.str());
    }
    return "agrees within radii for all W+ words of length <= 4";
  });

  R.run("fast path matches the direct oracle", [&] {
    std::function<void(std::uint32_t, std::vector<std::uint32_t>&)> rec =
        [&](std::uint32_t rest, std::vector<std::uint32_t>& parts) {
          if (rest == 0) {
            if (parts.empty() || parts.back() < 2) return;
            Composition c(parts);
            ApproxReal oracle = zeta_direct_oracle(c, 20000);
            ApproxReal fast = zeta_conv(c, d, cfg).real_value();
            if (!agrees(oracle, fast)) fail("at composition " + c.str());
            return;
          }
          for (std::uint32_t p = 1; p <= rest; ++p) {
            parts.push_back(p);
            rec(rest - p, parts);
            parts.pop_back();
          }
        };
    std::vector<std::uint32_t> parts;
    for (std::uint32_t wgt = 2; wgt <= 4; ++wgt) rec(wgt, parts);
    return "every convergent composition of weight <= 4";
  });

  R.run("monotone precision", [&] {
    Composition c({3});
    ApproxReal lo = zeta_conv(c, d, cfg).real_value();
    ApproxReal hi = zeta_conv(c, d + 10, cfg).real_value();
    if (!(hi.radius() <= lo.radius())) fail("radius grew with digits");
    if (!agrees(lo, hi)) fail("intervals inconsistent");
    return "radius shrinks and intervals stay consistent";
  });

  R.run("signed regularization squares to -6 zeta(2)", [&] {
    ZetaResult zp = zeta_pm(WordPoly(Word::single(Letter::A)), +1, d, cfg);
    ApproxComplex sq = zp.value * zp.value;
    ApproxReal target = scale_by_rational(
        zeta_conv(Composition({2}), d, cfg).real_value(), Rational(-6));
    if (!agrees(sq.re, target)) fail("real part mismatch");
    if (!sq.im.encloses(Rational(0))) fail("imaginary part not enclosing zero");
    return "(zeta_pm(a))^2 = -pi^2 = -6 zeta(2) within radii";
  });

  return R.results;
}

std::vector<CheckResult> verify_group(const SuiteOptions& opts) {
  Runner R;
  const std::uint32_t order = 6;

  std::vector<NcSeries> gs;
  for (std::uint32_t t = 0; t < opts.trials; ++t)
    gs.push_back(random_grouplike(order, opts.seed + t, 5));

  R.run("random grouplikes are grouplike with primitive logs", [&] {
    for (const auto& g : gs) {
      if (!is_grouplike(g)) fail("not grouplike");
      if (!is_primitive(nc_log(g))) fail("log not primitive");
    }
    return "exact for " + std::to_string(gs.size()) + " seeded elements at order 6";
  });

  R.run("sigma is an involution and tau cubes to inversion", [&] {
    for (const auto& g : gs) {
      if (!(series_transform(TransformKind::Sigma,
                             series_transform(TransformKind::Sigma, g)) == g))
        fail("sigma^2 != id");
      NcSeries t3 = series_transform(
          TransformKind::Tau,
          series_transform(TransformKind::Tau, series_transform(TransformKind::Tau, g)));
      if (!(t3 == nc_inv(g))) fail("tau^3 != inverse");
    }
    return "exact";
  });

  R.run("box and nabla are dual to the twisted squares", [&] {
    for (const auto& g : gs) {
      NcSeries gs_ = nc_mul(g, series_transform(TransformKind::Sigma, g));
      NcSeries gt = nc_mul(g, series_transform(TransformKind::Tau, g));
      for (const Word& h : all_words(5)) {
        if (pair(box(WordPoly(h)), g) != pair(WordPoly(h), gs_))
          fail("box duality at " + h.str());
        if (pair(nabla(WordPoly(h)), g) != pair(WordPoly(h), gt))
          fail("nabla duality at " + h.str());
      }
    }
    return "exact for all words of length <= 5";
  });

  R.run("the twisted square is sigma-fixed", [&] {
    for (const auto& g : gs) {
      NcSeries p = nc_mul(g, series_transform(TransformKind::Sigma, g));
      if (!(series_transform(TransformKind::Sigma, p) == p)) fail("not sigma-fixed");
    }
    return "exact";
  });

  R.run("pk decomposition", [&] {
    for (const auto& g : gs) {
      auto [p, k] = pk_decompose(g);
      if (!(nc_mul(p, k) == g)) fail("p k != g");
      if (!(series_transform(TransformKind::Sigma, p) == p)) fail("sigma(p) != p");
      if (!(series_transform(TransformKind::Sigma, k) == nc_inv(k)))
        fail("sigma(k) != k^-1");
      NcSeries p2 = nc_mul(p, p);
      for (const Word& h : all_words(5))
        if (pair(box(WordPoly(h)), g) != pair(WordPoly(h), p2))
          fail("box through p^2 at " + h.str());
    }
    return "round-trip, eigenproperties, and the p^2 pullback are exact";
  });

  R.run("ql decomposition", [&] {
    auto tau = [](const NcSeries& s) { return series_transform(TransformKind::Tau, s); };
    for (const auto& g : gs) {
      auto [q, l] = ql_decompose(g);
      NcSeries q0 = nc_mul(nc_exp(q), nc_exp(tau(q)));
      if (!(nc_mul(q0, l) == g)) fail("exp(q) exp(tau q) l != g");
      if (!(tau(l) == nc_inv(l))) fail("tau(l) != l^-1");
      NcSeries qq = nc_mul(q0, tau(q0));
      for (const Word& h : all_words(5))
        if (pair(nabla(WordPoly(h)), g) != pair(WordPoly(h), qq))
          fail("nabla through q tau(q) at " + h.str());
    }
    return "round-trip, tau eigenproperty, and the q tau(q) pullback are exact";
  });

  return R.results;
}

}  // namespace polyzeta
