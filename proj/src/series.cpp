#include "polyzeta/series.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "polyzeta/transforms.hpp"

namespace polyzeta {

namespace {

Integer pow2(unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

Integer pow10(unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

Integer int_pow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Rational rat_pow(const Rational& b, unsigned long e) {
  Rational r(1);
  for (unsigned long i = 0; i < e; ++i) r *= b;
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

unsigned long bit_length(long n) {
  return mpz_sizeinbase(Integer(n).get_mpz_t(), 2);
}

unsigned ceil_log10(const Rational& q) {
  // smallest d >= 0 with q <= 10^d
  unsigned d = 0;
  Rational p(1);
  while (q > p && d < 10000) { p *= 10; ++d; }
  return d;
}

}  // namespace

// --- RelationalIndex -----------------------------------------------------------

RelationalIndex::RelationalIndex(std::vector<std::uint32_t> exps, std::vector<bool> flags)
    : exponents(std::move(exps)), strict(std::move(flags)) {
  if (exponents.empty()) throw std::invalid_argument("empty relational index");
  if (strict.size() != exponents.size())
    throw std::invalid_argument("flag count must match exponent count");
  if (!strict[0]) throw std::invalid_argument("the first constraint is always strict");
  for (auto r : exponents)
    if (r == 0) throw std::invalid_argument("exponents must be positive");
}

RelationalIndex RelationalIndex::all_strict(const Composition& c) {
  if (c.empty()) throw std::invalid_argument("empty composition has no series");
  return RelationalIndex(c.parts(), std::vector<bool>(c.depth(), true));
}

RelationalIndex RelationalIndex::nondecreasing_ones(std::uint32_t r) {
  std::vector<bool> flags(r, false);
  flags[0] = true;
  return RelationalIndex(std::vector<std::uint32_t>(r, 1), std::move(flags));
}

std::uint32_t RelationalIndex::weight() const {
  std::uint32_t w = 0;
  for (auto r : exponents) w += r;
  return w;
}

// --- tail bounds ----------------------------------------------------------------

namespace tails {

namespace {
const Rational kLn2Upper(6931472, 10000000);   // > ln 2
const Rational kLn2Lower(6931471, 10000000);   // < ln 2
const Rational kInvOneMinusSqrtHalf(34143, 10000);  // > 1/(1 - sqrt(1/2))
const Rational kLogStep(16932, 10000);         // > (1+ln(n+1))/(1+ln n) for n >= 1
}  // namespace

Rational ln_upper(long n) {
  if (n < 1) throw std::invalid_argument("ln_upper needs n >= 1");
  return Rational(static_cast<unsigned long>(bit_length(n))) * kLn2Upper;
}

Rational ln_lower(long n) {
  if (n < 1) throw std::invalid_argument("ln_lower needs n >= 1");
  return Rational(static_cast<unsigned long>(bit_length(n) - 1)) * kLn2Lower;
}

Rational integral_bound(long N, std::uint32_t k, std::uint32_t s, bool strict) {
  if (s < 2) throw std::invalid_argument("integral_bound needs s >= 2");
  if (N < 3) throw std::invalid_argument("integral_bound needs N >= 3");
  // monotonicity of (1+ln x)^{k-1} x^-s on [N, inf): (k-1) <= s (1 + ln N)
  if (!(Rational(k - 1) <= Rational(s) * (1 + ln_lower(N))))
    throw std::invalid_argument("integral_bound monotonicity precondition");
  Rational A = 1 + ln_upper(N);
  Rational sum(0);
  Rational term(1);  // ((s-1) A)^j / j!
  for (std::uint32_t j = 0; j < k; ++j) {
    sum += term;
    term *= Rational(s - 1) * A;
    term /= (j + 1);
  }
  Rational out = Rational(factorial(k - 1), int_pow(Integer(s - 1), k)) * sum;
  out /= Rational(int_pow(Integer(N), s - 1));
  if (strict) out /= Rational(factorial(k - 1));
  return out;
}

Rational geometric_bound(long N, std::uint32_t k) {
  // number of admissible prefixes at level n is <= (n+k)^{k-1}/(k-1)!, each
  // term is <= 2^-n; split 2^-n = 2^-n/2 * 2^-n/2 and take the max of the
  // polynomial part, valid once (N+3)/(N+2) <= sqrt(2)^{1/(k-1)}.
  if (N < 2) throw std::invalid_argument("geometric_bound needs N >= 2");
  if (k > 1 && !(rat_pow(Rational(N + 3, N + 2), k - 1) <= Rational(14142, 10000)))
    throw std::invalid_argument("geometric_bound monotonicity precondition");
  Rational out = Rational(int_pow(Integer(N + 1 + k), k - 1), factorial(k - 1));
  out *= kInvOneMinusSqrtHalf;
  out /= Rational(pow2(static_cast<unsigned long>(N + 1)));
  return out;
}

Rational abel_bound(long N, std::uint32_t k, std::uint32_t s, EvalPoint point) {
  // |sum_{n>N} z^n T(n)| <= B sum_{n>N} |T(n)-T(n+1)| with B = 2/|1-z|, and
  // |T(n)-T(n+1)| <= (s+k-1) (1+ln(n+1))^{k-1} n^{-s-1}.
  if (point == EvalPoint::Half) throw std::invalid_argument("abel_bound is for |z| = 1");
  Rational B = (point == EvalPoint::MinusOne) ? Rational(1) : Rational(2);
  Rational C = Rational(s + k - 1) * rat_pow(kLogStep, k - 1);
  return B * C * integral_bound(N, k, s + 1, false);
}

}  // namespace tails

// --- truncation plans ------------------------------------------------------------

namespace {

Rational tail_bound_at(const RelationalIndex& idx, EvalPoint pt, long N) {
  const std::uint32_t k = idx.depth();
  if (pt == EvalPoint::Half) return tails::geometric_bound(N, k);
  return tails::abel_bound(N, k, idx.trailing_exponent(), pt);
}

long min_valid_n(const RelationalIndex& idx, EvalPoint pt) {
  const long k = idx.depth();
  if (pt == EvalPoint::Half) return std::max<long>(8, 4 * k * k);
  return std::max<long>(8, 2 * k);
}

}  // namespace

EvalPlan truncation_bound(const RelationalIndex& idx, EvalPoint point, unsigned digits,
                          const EvalConfig& cfg) {
  if (on_unit_circle(point) && idx.trailing_exponent() < 2)
    throw std::domain_error(
        "series with trailing exponent 1 are not summed on the unit circle");
  const Rational target = Rational(1, 2) / Rational(pow10(digits));
  long lo = min_valid_n(idx, point);
  long hi = lo;
  while (tail_bound_at(idx, point, hi) > target) {
    if (hi >= cfg.max_terms)
      throw precision_error("truncation exceeds the configured term cap (" +
                            std::to_string(cfg.max_terms) + " terms)");
    hi = std::min(cfg.max_terms, hi * 2);
  }
  // smallest N in [lo, hi] meeting the target
  while (lo < hi) {
    long mid = lo + (hi - lo) / 2;
    if (tail_bound_at(idx, point, mid) <= target) hi = mid;
    else lo = mid + 1;
  }
  EvalPlan plan;
  plan.terms = hi;
  plan.point = point;
  plan.tail_bound = tail_bound_at(idx, point, hi);
  unsigned long ops = static_cast<unsigned long>(plan.terms) * (idx.depth() + 2);
  plan.scale_bits = scale_for(digits, ops);
  // tail in ulps, rounded up
  Integer num = plan.tail_bound.get_num() * pow2(plan.scale_bits);
  Integer t;
  mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), plan.tail_bound.get_den().get_mpz_t());
  plan.tail_ulps = t;
  return plan;
}

// --- the series evaluator ----------------------------------------------------------

const ApproxReal& SeriesValue::real_checked() const {
  if (!(value.im.scaled_value() == 0 && value.im.radius_ulps() == 0))
    throw std::logic_error("value is not exactly real");
  return value.re;
}

namespace {

struct Accumulators {
  EvalPoint point;
  std::vector<ApproxReal> slots;

  Accumulators(EvalPoint pt, long scale) : point(pt) {
    std::size_t n = pt == EvalPoint::Half ? 1 : (pt == EvalPoint::MinusOne ? 2 : 6);
    slots.assign(n, ApproxReal::zero(scale));
  }

  void add(long n, const ApproxReal& term) {
    switch (point) {
      case EvalPoint::Half:
        slots[0] += term.shifted_down(static_cast<unsigned long>(n));
        break;
      case EvalPoint::MinusOne:
        slots[n % 2] += term;
        break;
      default:
        slots[n % 6] += term;
    }
  }

  // rho^j = x_j + y_j * (sqrt(3)/2) i with x in {0,+-1/2,+-1}, y in {0,+-1}
  ApproxComplex combine(unsigned digits) const {
    switch (point) {
      case EvalPoint::Half:
        return ApproxComplex::real(slots[0]);
      case EvalPoint::MinusOne:
        return ApproxComplex::real(slots[0] - slots[1]);
      default: {
        static const std::array<Rational, 6> x = {Rational(1),      Rational(1, 2),
                                                  Rational(-1, 2),  Rational(-1),
                                                  Rational(-1, 2),  Rational(1, 2)};
        static const std::array<int, 6> y = {0, 1, 1, 0, -1, -1};
        ApproxReal re = ApproxReal::zero(slots[0].scale_bits());
        ApproxReal imf = re;
        for (int j = 0; j < 6; ++j) {
          re += scale_by_rational(slots[j], x[j]);
          if (y[j] != 0) imf += scale_by_rational(slots[j], Rational(y[j]));
        }
        ApproxReal im = scale_by_rational(imf * const_sqrt3(digits + 4), Rational(1, 2));
        if (point == EvalPoint::RhoBar) im = -im;
        return {re, im};
      }
    }
  }
};

SeriesValue eval_direct(const RelationalIndex& idx, EvalPoint pt, unsigned digits,
                        const EvalConfig& cfg) {
  const EvalPlan plan = truncation_bound(idx, pt, digits + 1, cfg);
  const long s = plan.scale_bits;
  const std::uint32_t k = idx.depth();
  const Integer one_scaled = pow2(s);

  // one reciprocal power per distinct exponent per n, shared across layers
  std::vector<std::uint32_t> distinct;
  std::vector<std::size_t> slot(k);
  for (std::uint32_t j = 0; j < k; ++j) {
    auto it = std::find(distinct.begin(), distinct.end(), idx.exponents[j]);
    if (it == distinct.end()) {
      slot[j] = distinct.size();
      distinct.push_back(idx.exponents[j]);
    } else {
      slot[j] = static_cast<std::size_t>(it - distinct.begin());
    }
  }
  std::vector<ApproxReal> inv(distinct.size(), ApproxReal::zero(s));

  std::vector<ApproxReal> prefix(k, ApproxReal::zero(s));  // prefix[j] = P_{j+1}(< n)
  std::vector<ApproxReal> cur(k, ApproxReal::zero(s));
  Accumulators acc(pt, s);

  for (long n = 1; n <= plan.terms; ++n) {
    for (std::size_t d = 0; d < distinct.size(); ++d) {
      Integer np = int_pow(Integer(n), distinct[d]);
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), one_scaled.get_mpz_t(), np.get_mpz_t());
      inv[d] = ApproxReal(std::move(q), s, 1);
    }
    for (std::uint32_t j = 0; j < k; ++j) {
      if (j == 0) cur[0] = inv[slot[0]];
      else if (idx.strict[j]) cur[j] = prefix[j - 1] * inv[slot[j]];
      else cur[j] = (prefix[j - 1] + cur[j - 1]) * inv[slot[j]];
    }
    for (std::uint32_t j = 0; j < k; ++j) prefix[j] += cur[j];
    acc.add(n, cur[k - 1]);
  }

  ApproxComplex out = acc.combine(digits);
  out.re = ApproxReal(out.re.scaled_value(), out.re.scale_bits(),
                      out.re.radius_ulps() + plan.tail_ulps);
  if (pt == EvalPoint::Rho || pt == EvalPoint::RhoBar)
    out.im = ApproxReal(out.im.scaled_value(), out.im.scale_bits(),
                        out.im.radius_ulps() + plan.tail_ulps);
  return {out, plan.terms};
}

}  // namespace

SeriesValue polylog(const RelationalIndex& idx, EvalPoint point, unsigned digits,
                    const EvalConfig& cfg) {
  for (int attempt = 0;; ++attempt) {
    SeriesValue v = eval_direct(idx, point, digits + 2 * attempt, cfg);
    bool ok = v.value.re.certifies(digits) && v.value.im.certifies(digits);
    if (ok) return v;
    if (attempt >= 2) throw precision_error("polylog failed to certify the request");
  }
}

// --- reduction machinery (polylog_helem) ---------------------------------------------

namespace {

ApproxReal real_pow(const ApproxReal& x, std::uint32_t m, long scale) {
  ApproxReal r = ApproxReal::exact_integer(1, scale);
  for (std::uint32_t i = 0; i < m; ++i) r = r * x;
  return r;
}

// (i^m) * x as a complex enclosure with exact zero components.
ApproxComplex times_i_pow(const ApproxReal& x, std::uint32_t m, bool conjugate_i) {
  long s = x.scale_bits();
  ApproxReal z = ApproxReal::zero(s);
  unsigned q = m % 4;
  if (conjugate_i && (q == 1 || q == 3)) q = 4 - q;  // (-i)^m
  switch (q) {
    case 0: return {x, z};
    case 1: return {z, x};
    case 2: return {-x, z};
    default: return {z, -x};
  }
}

// Closed-form factor L_a(z)^i * L_b(z)^j at the evaluation point, where
// L_a(z) = -log(1-z) and L_b(z) = log z on the principal branch:
//   z = 1/2:   log 2        and -log 2
//   z = -1:    -log 2       and  i pi
//   z = rho:   i pi/3       and  i pi/3     (1 - rho = conj(rho))
//   z = rhobar: -i pi/3     and -i pi/3
ApproxComplex log_factor(EvalPoint pt, std::uint32_t i, std::uint32_t j, unsigned digits) {
  const unsigned cd = digits + 6;
  switch (pt) {
    case EvalPoint::Half: {
      ApproxReal l2 = const_log2(cd);
      ApproxReal v = real_pow(l2, i + j, l2.scale_bits());
      if (j % 2 == 1) v = -v;
      return ApproxComplex::real(v);
    }
    case EvalPoint::MinusOne: {
      ApproxReal l2 = const_log2(cd);
      ApproxReal pi = const_pi(cd);
      ApproxReal mag = real_pow(l2, i, l2.scale_bits()) * real_pow(pi, j, pi.scale_bits());
      if (i % 2 == 1) mag = -mag;
      return times_i_pow(mag, j, false);
    }
    case EvalPoint::Rho:
    case EvalPoint::RhoBar: {
      ApproxReal pi = const_pi(cd);
      std::uint32_t m = i + j;
      ApproxReal mag = real_pow(pi, m, pi.scale_bits());
      mag = scale_by_rational(mag, Rational(1, int_pow(Integer(3), m)));
      return times_i_pow(mag, m, pt == EvalPoint::RhoBar);
    }
  }
  throw std::logic_error("unreachable");
}

Rational log_factor_magnitude_ub(EvalPoint pt, std::uint32_t i, std::uint32_t j) {
  switch (pt) {
    case EvalPoint::Half:
      return Rational(1);  // log 2 < 1
    case EvalPoint::MinusOne:
      // |(-log 2)^i (i pi)^j| <= 1 * 4^j
      return rat_pow(Rational(4), j);
    default:
      // |i pi / 3|^{i+j} <= (11/10)^{i+j}
      return rat_pow(Rational(11, 10), i + j);
  }
}

// One W++ (or any W+, off the circle) word evaluated as a genuine series;
// at -1 an infeasible request falls back to the z/(z-1) change of variable,
// which lands at 1/2.
SeriesValue word_series(const Word& w, EvalPoint pt, unsigned digits, const EvalConfig& cfg);

SeriesValue helem_impl(const WordPoly& h, EvalPoint pt, unsigned digits,
                       const EvalConfig& cfg) {
  if (h.is_zero()) {
    long s = scale_for(digits, 4);
    return {ApproxComplex::real(ApproxReal::zero(s)), 0};
  }

  // piece list: (i, j, word, rational coefficient)
  struct Piece {
    std::uint32_t i, j;
    Word w;
    Rational c;
  };
  std::vector<Piece> pieces;
  if (pt == EvalPoint::Half) {
    for (const auto& [j, poly] : regularize_b(h))
      for (const auto& [w, c] : poly.terms()) pieces.push_back({0, j, w, c});
  } else {
    ABPolynomial ab = regularize_ab(h);
    for (const auto& [key, poly] : ab.coeffs)
      for (const auto& [w, c] : poly.terms())
        pieces.push_back({key.first, key.second, w, c});
  }

  Rational mass(1);
  for (const auto& p : pieces)
    mass += abs(p.c) * log_factor_magnitude_ub(pt, p.i, p.j);
  const unsigned headroom = ceil_log10(mass) + 2;
  const unsigned pd = digits + headroom;

  long out_scale = scale_for(digits, 16 + pieces.size());
  ApproxComplex total = ApproxComplex::real(ApproxReal::zero(out_scale));
  long terms_used = 0;
  std::map<Word, SeriesValue> word_cache;
  for (const auto& p : pieces) {
    SeriesValue wv;
    if (p.w.empty()) {
      wv = {ApproxComplex::real(ApproxReal::exact_integer(1, out_scale)), 0};
    } else {
      auto it = word_cache.find(p.w);
      if (it == word_cache.end())
        it = word_cache.emplace(p.w, word_series(p.w, pt, pd, cfg)).first;
      wv = it->second;
    }
    terms_used = std::max(terms_used, wv.terms_used);
    ApproxComplex contrib = wv.value * log_factor(pt, p.i, p.j, pd);
    total += scale_by_rational(contrib, p.c);
  }
  return {total, terms_used};
}

SeriesValue word_series(const Word& w, EvalPoint pt, unsigned digits,
                        const EvalConfig& cfg) {
  RelationalIndex idx = RelationalIndex::all_strict(lambda_map(w));
  if (pt == EvalPoint::MinusOne && !cfg.force_direct) {
    // only sum directly when the certified plan fits the cap
    bool feasible = true;
    try {
      (void)truncation_bound(idx, pt, digits + 1, cfg);
    } catch (const precision_error&) {
      feasible = false;
    }
    if (!feasible)
      return helem_impl(apply_transform(TransformKind::SigmaPrime, WordPoly(w)),
                        EvalPoint::Half, digits, cfg);
  }
  return polylog(idx, pt, digits, cfg);
}

}  // namespace

SeriesValue polylog_helem(const WordPoly& h, EvalPoint point, unsigned digits,
                          const EvalConfig& cfg) {
  for (int attempt = 0;; ++attempt) {
    SeriesValue v = helem_impl(h, point, digits + 3 * attempt, cfg);
    if (v.value.re.certifies(digits) && v.value.im.certifies(digits)) return v;
    if (attempt >= 2) throw precision_error("polylog_helem failed to certify the request");
  }
}

SeriesValue polylog_word(const Word& w, EvalPoint point, unsigned digits,
                         const EvalConfig& cfg) {
  if (!in_w_plus(w)) throw std::invalid_argument("polylog_word requires a W+ word");
  if (w.empty()) {
    long s = scale_for(digits, 4);
    return {ApproxComplex::real(ApproxReal::exact_integer(1, s)), 0};
  }
  return polylog_helem(WordPoly(w), point, digits, cfg);
}

// --- Corollary 12 single-pass sum ---------------------------------------------------

SeriesValue relational_sum_cor12(std::uint32_t r, unsigned digits, const EvalConfig& cfg) {
  if (r < 2) throw std::invalid_argument("relational_sum_cor12 requires r >= 2");
  // weights are <= r, so push the per-class tail r times below the target
  const unsigned plan_digits = digits + ceil_log10(Rational(r)) + 2;
  const EvalPlan plan =
      truncation_bound(RelationalIndex::nondecreasing_ones(r), EvalPoint::Half,
                       plan_digits, cfg);
  const long s = plan.scale_bits;
  const long N = plan.terms;
  const Integer one_scaled = pow2(s);

  // classes: 0 = still strictly increasing, i >= 1 = first tie at position i
  // (only i <= r-2 can occur); class 0 weighs r, class i weighs i.
  const std::uint32_t classes = r - 1;
  auto at = [&](std::uint32_t cls, std::uint32_t layer) { return cls * r + layer; };
  std::vector<ApproxReal> prefix(classes * r, ApproxReal::zero(s));
  std::vector<ApproxReal> cur(classes * r, ApproxReal::zero(s));
  ApproxReal acc = ApproxReal::zero(s);
  const ApproxReal zero = ApproxReal::zero(s);

  for (long n = 1; n <= N; ++n) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), one_scaled.get_mpz_t(), Integer(n).get_mpz_t());
    ApproxReal invn(std::move(q), s, 1);

    for (auto& x : cur) x = zero;
    cur[at(0, 0)] = invn;
    for (std::uint32_t layer = 1; layer + 1 < r; ++layer) {
      // strict class advances strictly
      cur[at(0, layer)] = prefix[at(0, layer - 1)] * invn;
      // a tie forms here: n_{layer+1} = n_layer = n (positions are 1-based)
      if (layer <= r - 2)
        cur[at(layer, layer)] = cur[at(0, layer - 1)] * invn;
      // existing ties continue with <=
      for (std::uint32_t cls = 1; cls < layer; ++cls)
        cur[at(cls, layer)] =
            (prefix[at(cls, layer - 1)] + cur[at(cls, layer - 1)]) * invn;
    }
    // final layer: constraint n_{r-1} <= n_r for every class
    ApproxReal weighted = ApproxReal::zero(s);
    {
      ApproxReal top = (prefix[at(0, r - 2)] + cur[at(0, r - 2)]) * invn;
      weighted += scale_by_rational(top, Rational(r));
      for (std::uint32_t cls = 1; cls <= r - 2; ++cls) {
        ApproxReal t = (prefix[at(cls, r - 2)] + cur[at(cls, r - 2)]) * invn;
        weighted += scale_by_rational(t, Rational(cls));
      }
    }
    acc += weighted.shifted_down(static_cast<unsigned long>(n));
    for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] += cur[i];
  }

  Integer tail = plan.tail_ulps * r;
  ApproxReal out(acc.scaled_value(), s, acc.radius_ulps() + tail);
  if (!out.certifies(digits))
    throw precision_error("relational_sum_cor12 failed to certify the request");
  return {ApproxComplex::real(out), N};
}

}  // namespace polyzeta
