#include "polyzeta/zeta.hpp"

#include <algorithm>
#include <chrono>

namespace polyzeta {

namespace {

Integer pow2i(unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

Integer powi(unsigned long b, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

unsigned ceil_log10(const Rational& q) {
  unsigned d = 0;
  Rational p(1);
  while (q > p && d < 10000) { p *= 10; ++d; }
  return d;
}

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

const char* method_name(ZetaMethod m) {
  switch (m) {
    case ZetaMethod::Direct: return "direct";
    case ZetaMethod::Thm7Half: return "thm7-half";
    case ZetaMethod::Thm7Rho: return "thm7-rho";
    case ZetaMethod::Thm7RhoBar: return "thm7-rhobar";
    case ZetaMethod::Thm10: return "thm10";
    case ZetaMethod::Cor12: return "cor12";
    case ZetaMethod::Cor21: return "cor21";
    case ZetaMethod::Lemma20MinusOne: return "lemma20-minusone";
    case ZetaMethod::Lemma20Rho: return "lemma20-rho";
  }
  return "?";
}

ZetaMethod parse_method(const std::string& name) {
  for (ZetaMethod m :
       {ZetaMethod::Direct, ZetaMethod::Thm7Half, ZetaMethod::Thm7Rho,
        ZetaMethod::Thm7RhoBar, ZetaMethod::Thm10, ZetaMethod::Cor12, ZetaMethod::Cor21,
        ZetaMethod::Lemma20MinusOne, ZetaMethod::Lemma20Rho})
    if (name == method_name(m)) return m;
  throw std::invalid_argument("unknown method: " + name);
}

EvalPoint method_point(ZetaMethod m) {
  switch (m) {
    case ZetaMethod::Thm7Rho:
    case ZetaMethod::Lemma20Rho: return EvalPoint::Rho;
    case ZetaMethod::Thm7RhoBar: return EvalPoint::RhoBar;
    case ZetaMethod::Lemma20MinusOne: return EvalPoint::MinusOne;
    default: return EvalPoint::Half;
  }
}

const ApproxReal& ZetaResult::real_value() const {
  if (!real) throw std::logic_error("zeta result is not real");
  return value.re;
}

// --- direct oracle ---------------------------------------------------------------

ApproxReal zeta_direct_oracle(const Composition& c, long cutoff) {
  if (!c.convergent()) throw divergent_error("composition diverges (last part is 1)");
  const std::uint32_t k = c.depth();
  const Rational tail =
      tails::integral_bound(cutoff, k, c.parts().back(), /*strict=*/true);
  const unsigned tail_digits = ceil_log10(1 / tail);
  const long s = scale_for(tail_digits + 4, static_cast<unsigned long>(cutoff) * (k + 2));
  const Integer one_scaled = pow2i(s);

  std::vector<ApproxReal> prefix(k, ApproxReal::zero(s));
  std::vector<ApproxReal> cur(k, ApproxReal::zero(s));
  ApproxReal acc = ApproxReal::zero(s);
  for (long n = 1; n <= cutoff; ++n) {
    for (std::uint32_t j = 0; j < k; ++j) {
      Integer np;
      mpz_ui_pow_ui(np.get_mpz_t(), static_cast<unsigned long>(n), c.parts()[j]);
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), one_scaled.get_mpz_t(), np.get_mpz_t());
      ApproxReal inv(std::move(q), s, 1);
      cur[j] = (j == 0) ? inv : prefix[j - 1] * inv;
    }
    for (std::uint32_t j = 0; j < k; ++j) prefix[j] += cur[j];
    acc += cur[k - 1];
  }
  Integer tail_ulps;
  {
    Integer num = tail.get_num() * one_scaled;
    mpz_cdiv_q(tail_ulps.get_mpz_t(), num.get_mpz_t(), tail.get_den().get_mpz_t());
  }
  return ApproxReal(acc.scaled_value(), s, acc.radius_ulps() + tail_ulps);
}

// --- fast pipelines ---------------------------------------------------------------

namespace {

ZetaResult finish(ApproxComplex value, bool real, long terms, double ms, ZetaMethod m,
                  unsigned digits) {
  if (!value.re.certifies(digits) || !value.im.certifies(digits))
    throw precision_error("zeta pipeline failed to certify the request");
  ZetaResult r;
  r.value = std::move(value);
  r.real = real;
  r.terms_used = terms;
  r.elapsed_ms = ms;
  r.method = m;
  return r;
}

// zeta of an H++-supported polynomial via the 1/2 path
SeriesValue zeta_of_wpp_poly(const WordPoly& h, unsigned digits, const ZetaConfig& cfg) {
  return polylog_helem(box(h), EvalPoint::Half, digits, cfg.eval);
}

}  // namespace

ZetaResult zeta_conv(const Composition& c, unsigned digits, const ZetaConfig& cfg) {
  Stopwatch sw;
  if (!c.convergent())
    throw divergent_error("composition diverges (last part is 1); use zeta-reg");
  if (c.weight() > cfg.max_weight)
    throw method_error("weight exceeds the configured cap of " +
                       std::to_string(cfg.max_weight));
  SeriesValue v = zeta_of_wpp_poly(WordPoly(lambda_inverse(c)), digits, cfg);
  return finish(v.value, true, v.terms_used, sw.ms(), ZetaMethod::Thm7Half, digits);
}

ZetaResult zeta_reg(const WordPoly& h, unsigned digits, const ZetaConfig& cfg) {
  Stopwatch sw;
  if (h.max_word_length() > cfg.max_weight)
    throw method_error("weight exceeds the configured cap");
  ABPolynomial ab = regularize_ab(h);
  WordPoly h00;
  if (auto it = ab.coeffs.find({0u, 0u}); it != ab.coeffs.end()) h00 = it->second;
  SeriesValue v = zeta_of_wpp_poly(h00, digits, cfg);
  return finish(v.value, true, v.terms_used, sw.ms(), ZetaMethod::Thm7Half, digits);
}

ZetaResult zeta_pm(const WordPoly& h, int sign, unsigned digits, const ZetaConfig& cfg) {
  Stopwatch sw;
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (h.max_word_length() > cfg.max_weight)
    throw method_error("weight exceeds the configured cap");
  ABPolynomial ab = regularize_ab(h);

  // psi_pm kills every b power; a^i contributes (sign * i pi)^i
  std::vector<std::pair<std::uint32_t, WordPoly>> rows;
  Rational mass(1);
  for (const auto& [key, poly] : ab.coeffs) {
    if (key.second != 0) continue;
    rows.push_back({key.first, poly});
    Rational row_mass(1);
    for (const auto& [w, c] : poly.terms()) row_mass += abs(c);
    mass += row_mass * Rational(powi(4, key.first));
  }
  const unsigned pd = digits + ceil_log10(mass) + 2;

  long out_scale = scale_for(digits, 16);
  ApproxComplex total = ApproxComplex::real(ApproxReal::zero(out_scale));
  long terms = 0;
  ApproxReal pi = const_pi(pd + 4);
  for (const auto& [i, poly] : rows) {
    SeriesValue zv = zeta_of_wpp_poly(poly, pd, cfg);
    terms = std::max(terms, zv.terms_used);
    // (sign i pi)^i = sign^i i^i pi^i
    ApproxReal mag = ApproxReal::exact_integer(1, pi.scale_bits());
    for (std::uint32_t t = 0; t < i; ++t) mag = mag * pi;
    if (sign < 0 && i % 2 == 1) mag = -mag;
    ApproxReal z = ApproxReal::zero(mag.scale_bits());
    ApproxComplex factor;
    switch (i % 4) {
      case 0: factor = {mag, z}; break;
      case 1: factor = {z, mag}; break;
      case 2: factor = {-mag, z}; break;
      default: factor = {z, -mag}; break;
    }
    total += zv.value * factor;
  }
  bool real = total.im.scaled_value() == 0 && total.im.radius_ulps() == 0;
  return finish(total, real, terms, sw.ms(), ZetaMethod::Thm7Half, digits);
}

ZetaResult zeta_r(std::uint32_t r, ZetaMethod method, unsigned digits,
                  const ZetaConfig& cfg) {
  Stopwatch sw;
  if (r < 2) throw method_error("depth-one methods need r >= 2");
  if (r > cfg.max_weight) throw method_error("weight exceeds the configured cap");
  const Composition comp({r});
  switch (method) {
    case ZetaMethod::Direct: {
      ApproxReal v = zeta_direct_oracle(comp, cfg.oracle_cutoff);
      if (!v.certifies(digits))
        throw method_error("direct summation certifies fewer digits than requested");
      return finish(ApproxComplex::real(v), true, cfg.oracle_cutoff, sw.ms(), method,
                    digits);
    }
    case ZetaMethod::Thm7Half: {
      ZetaResult z = zeta_conv(comp, digits, cfg);
      z.elapsed_ms = sw.ms();
      return z;
    }
    case ZetaMethod::Thm10: {
      // zeta(r) = sum over compositions m of weight r of b(m) L_m(1/2)
      std::vector<Composition> all;
      std::vector<std::uint32_t> parts;
      auto rec = [&](auto&& self, std::uint32_t rest) -> void {
        if (rest == 0) {
          all.push_back(Composition(parts));
          return;
        }
        for (std::uint32_t p = 1; p <= rest; ++p) {
          parts.push_back(p);
          self(self, rest - p);
          parts.pop_back();
        }
      };
      rec(rec, r);
      Rational mass(1);
      for (const auto& m : all) mass += abs(Rational(theorem10_weights(m).b));
      const unsigned pd = digits + ceil_log10(mass) + 2;
      ApproxReal total = ApproxReal::zero(scale_for(digits, 16));
      long terms = 0;
      for (const auto& m : all) {
        long b = theorem10_weights(m).b;
        if (b == 0) continue;
        SeriesValue lv = polylog(RelationalIndex::all_strict(m), EvalPoint::Half, pd,
                                 cfg.eval);
        terms = std::max(terms, lv.terms_used);
        total += scale_by_rational(lv.value.re, Rational(b));
      }
      return finish(ApproxComplex::real(total), true, terms, sw.ms(), method, digits);
    }
    case ZetaMethod::Cor12: {
      SeriesValue v = relational_sum_cor12(r, digits, cfg.eval);
      return finish(v.value, true, v.terms_used, sw.ms(), method, digits);
    }
    case ZetaMethod::Cor21: {
      // zeta(r) = 2^{r-1}/(2^{r-1}-1) L_{a(a+b)^{r-1}}(1/2); the word expands
      // over {a,b} or runs as one nondecreasing relational pass - both are
      // computed and must agree.
      const std::uint32_t e = r - 1;
      const Rational coeff(pow2i(e), pow2i(e) - 1);
      WordPoly a(Word::single(Letter::A)), b(Word::single(Letter::B));
      WordPoly word_path = concat_mul(a, concat_pow(a + b, e));
      SeriesValue lw = polylog_helem(word_path, EvalPoint::Half, digits + 2, cfg.eval);
      SeriesValue lr = polylog(RelationalIndex::nondecreasing_ones(r), EvalPoint::Half,
                               digits + 2, cfg.eval);
      if (!agrees(lw.value.re, lr.value.re))
        throw std::logic_error("Cor21 expansion paths disagree");
      ApproxReal total = scale_by_rational(lr.value.re, coeff);
      return finish(ApproxComplex::real(total), true,
                    std::max(lw.terms_used, lr.terms_used), sw.ms(), method, digits);
    }
    case ZetaMethod::Lemma20MinusOne: {
      // zeta(r) = -1/(1-2^{1-r}) L_r(-1)
      const std::uint32_t e = r - 1;
      const Rational coeff = -Rational(pow2i(e), pow2i(e) - 1);
      SeriesValue lv = polylog_word(lambda_inverse(comp), EvalPoint::MinusOne, digits + 2,
                                    cfg.eval);
      ApproxReal total = scale_by_rational(lv.real_checked(), coeff);
      return finish(ApproxComplex::real(total), true, lv.terms_used, sw.ms(), method,
                    digits);
    }
    case ZetaMethod::Lemma20Rho: {
      if (digits > cfg.rho_digit_cap)
        throw method_error("circle-series method capped at " +
                           std::to_string(cfg.rho_digit_cap) +
                           " digits; raise the cap to opt in");
      // zeta(r) = [L_r(rho) + L_r(rho-bar)] / ((1-2^{1-r})(1-3^{1-r}))
      //         = 2 Re L_r(rho) * 6^{r-1} / ((2^{r-1}-1)(3^{r-1}-1))
      const std::uint32_t e = r - 1;
      const Rational coeff =
          Rational(2) * Rational(powi(6, e), (pow2i(e) - 1) * (powi(3, e) - 1));
      SeriesValue lv =
          polylog(RelationalIndex::all_strict(comp), EvalPoint::Rho, digits + 2, cfg.eval);
      ApproxReal total = scale_by_rational(lv.value.re, coeff);
      return finish(ApproxComplex::real(total), true, lv.terms_used, sw.ms(), method,
                    digits);
    }
    case ZetaMethod::Thm7Rho:
    case ZetaMethod::Thm7RhoBar: {
      if (digits > cfg.rho_digit_cap)
        throw method_error("circle-series method capped at " +
                           std::to_string(cfg.rho_digit_cap) +
                           " digits; raise the cap to opt in");
      EvalPoint pt = method == ZetaMethod::Thm7Rho ? EvalPoint::Rho : EvalPoint::RhoBar;
      WordPoly h = nabla(WordPoly(lambda_inverse(comp)));
      SeriesValue v = polylog_helem(h, pt, digits, cfg.eval);
      if (!v.value.im.encloses(Rational(0)))
        throw std::logic_error("nabla path produced a non-real enclosure");
      return finish(ApproxComplex::real(v.value.re), true, v.terms_used, sw.ms(), method,
                    digits);
    }
  }
  throw std::logic_error("unreachable");
}

ZetaResult compute_zeta(const Composition& c, ZetaMethod method, unsigned digits,
                        const ZetaConfig& cfg) {
  switch (method) {
    case ZetaMethod::Direct: {
      Stopwatch sw;
      if (!c.convergent())
        throw divergent_error("composition diverges (last part is 1); use zeta-reg");
      ApproxReal v = zeta_direct_oracle(c, cfg.oracle_cutoff);
      if (!v.certifies(digits))
        throw method_error("direct summation certifies fewer digits than requested");
      ZetaResult r;
      r.value = ApproxComplex::real(v);
      r.real = true;
      r.terms_used = cfg.oracle_cutoff;
      r.elapsed_ms = sw.ms();
      r.method = method;
      return r;
    }
    case ZetaMethod::Thm7Half:
      return zeta_conv(c, digits, cfg);
    default: {
      if (c.depth() != 1)
        throw method_error(std::string(method_name(method)) +
                           " applies to depth-one zeta(r) only");
      return zeta_r(c.parts()[0], method, digits, cfg);
    }
  }
}

}  // namespace polyzeta
