#include "polyzeta/approx.hpp"

#include <algorithm>
#include <sstream>

namespace polyzeta {

const char* point_name(EvalPoint p) {
  switch (p) {
    case EvalPoint::Half: return "half";
    case EvalPoint::MinusOne: return "minus-one";
    case EvalPoint::Rho: return "rho";
    case EvalPoint::RhoBar: return "rho-bar";
  }
  return "?";
}

EvalPoint parse_point(const std::string& name) {
  if (name == "half") return EvalPoint::Half;
  if (name == "minus-one") return EvalPoint::MinusOne;
  if (name == "rho") return EvalPoint::Rho;
  if (name == "rho-bar") return EvalPoint::RhoBar;
  throw std::invalid_argument("unknown evaluation point: " + name);
}

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

// floor(x / 2^k); adds one ulp to `rad` only when the shift discards bits
Integer shift_floor_tracked(const Integer& x, unsigned long k, Integer& rad) {
  Integer r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  Integer back;
  mpz_mul_2exp(back.get_mpz_t(), r.get_mpz_t(), k);
  if (back != x) rad += 1;
  return r;
}

// ceil(x / 2^k)
Integer shift_ceil(const Integer& x, unsigned long k) {
  Integer r;
  mpz_cdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

ApproxReal ApproxReal::exact_integer(const Integer& n, long scale) {
  return ApproxReal(n * pow2(scale), scale, 0);
}

ApproxReal ApproxReal::from_rational(const Rational& q, long scale) {
  Integer num = q.get_num() * pow2(scale);
  Integer v = floor_div(num, q.get_den());
  Integer rem = num - v * q.get_den();
  return ApproxReal(std::move(v), scale, rem == 0 ? Integer(0) : Integer(1));
}

Rational ApproxReal::center() const {
  Rational q(v_, pow2(s_));
  q.canonicalize();
  return q;
}

Rational ApproxReal::radius() const {
  Rational q(r_, pow2(s_));
  q.canonicalize();
  return q;
}

ApproxReal ApproxReal::rescaled(long new_scale) const {
  if (new_scale == s_) return *this;
  if (new_scale > s_) {
    unsigned long k = new_scale - s_;
    return ApproxReal(v_ * pow2(k), new_scale, r_ * pow2(k));
  }
  unsigned long k = s_ - new_scale;
  Integer rad = shift_ceil(r_, k);
  Integer v = shift_floor_tracked(v_, k, rad);
  return ApproxReal(std::move(v), new_scale, std::move(rad));
}

ApproxReal operator+(const ApproxReal& x, const ApproxReal& y) {
  long s = std::max(x.s_, y.s_);
  const ApproxReal a = x.rescaled(s), b = y.rescaled(s);
  return ApproxReal(a.v_ + b.v_, s, a.r_ + b.r_);
}

ApproxReal operator-(const ApproxReal& x, const ApproxReal& y) { return x + (-y); }

ApproxReal operator*(const ApproxReal& x, const ApproxReal& y) {
  long s = std::max(x.s_, y.s_);
  const ApproxReal a = x.rescaled(s), b = y.rescaled(s);
  if ((a.v_ == 0 && a.r_ == 0) || (b.v_ == 0 && b.r_ == 0))
    return ApproxReal::zero(s);
  Integer rad = shift_ceil(abs(a.v_) * b.r_ + abs(b.v_) * a.r_ + a.r_ * b.r_, s);
  Integer v = shift_floor_tracked(a.v_ * b.v_, s, rad);
  return ApproxReal(std::move(v), s, std::move(rad));
}

ApproxReal ApproxReal::shifted_down(unsigned long k) const {
  Integer rad = shift_ceil(r_, k);
  Integer v = shift_floor_tracked(v_, k, rad);
  return ApproxReal(std::move(v), s_, std::move(rad));
}

ApproxReal scale_by_rational(const ApproxReal& x, const Rational& q) {
  if (q == 0) return ApproxReal::zero(x.s_);
  Integer num = x.v_ * q.get_num();
  Integer v = floor_div(num, q.get_den());
  Integer rad = ceil_div(x.r_ * abs(q.get_num()), q.get_den());
  if (num != v * q.get_den()) rad += 1;
  return ApproxReal(std::move(v), x.s_, std::move(rad));
}

ApproxReal div_by_integer(const ApproxReal& x, const Integer& n) {
  if (n == 0) throw std::domain_error("division by zero");
  Rational q(1, n);
  q.canonicalize();
  return scale_by_rational(x, q);
}

ApproxComplex scale_by_rational(const ApproxComplex& x, const Rational& q) {
  return {scale_by_rational(x.re, q), scale_by_rational(x.im, q)};
}

bool ApproxReal::encloses(const Rational& q) const {
  // |v 2^-s - q| <= r 2^-s   <=>   |v den - num 2^s| <= r den   (den > 0)
  Integer lhs = abs(v_ * q.get_den() - q.get_num() * pow2(s_));
  return lhs <= r_ * q.get_den();
}

bool agrees(const ApproxReal& x, const ApproxReal& y) {
  long s = std::max(x.s_, y.s_);
  const ApproxReal a = x.rescaled(s), b = y.rescaled(s);
  return abs(a.v_ - b.v_) <= a.r_ + b.r_;
}

bool ApproxReal::certifies(unsigned digits) const {
  // r 2^-s <= 10^-digits  <=>  r 10^digits <= 2^s
  return r_ * pow10(digits) <= pow2(s_);
}

std::string ApproxReal::to_decimal(unsigned digits) const {
  if (!certifies(digits))
    throw precision_error("radius does not certify " + std::to_string(digits) + " digits");
  Integer num = v_ * pow10(digits);
  Integer two_s = pow2(s_);
  Integer q = floor_div(num, two_s);
  Integer rem = num - q * two_s;
  if (rem * 2 >= two_s) q += 1;  // round half away from floor
  bool neg = q < 0;
  Integer absq = abs(q);
  Integer ip = absq / pow10(digits);
  std::string out;
  if (neg) out.push_back('-');
  out += ip.get_str();
  if (digits > 0) {
    Integer fp = absq % pow10(digits);
    std::string frac = fp.get_str();
    frac.insert(0, digits - frac.size(), '0');
    out.push_back('.');
    out += frac;
  }
  return out;
}

std::string ApproxReal::bound_string() const {
  if (r_ == 0) return "0";
  // radius <= 10^e test, e of either sign
  auto le_pow10 = [&](long e) {
    if (e >= 0) return r_ <= pow2(s_) * pow10(e);
    return r_ * pow10(-e) <= pow2(s_);
  };
  long e = 0;
  if (le_pow10(0)) {
    while (e > -4 * s_ && le_pow10(e - 1)) --e;
  } else {
    while (!le_pow10(e)) ++e;
  }
  // smallest one-digit mantissa m with radius <= m * 10^{e-1}
  Integer m = (e - 1 >= 0) ? ceil_div(r_, pow2(s_) * pow10(e - 1))
                           : ceil_div(r_ * pow10(1 - e), pow2(s_));
  if (m > 9) m = 1;  // then radius <= 10^e = 1 * 10^e
  else --e;
  std::ostringstream os;
  os << m.get_str() << "e" << e;
  return os.str();
}

long scale_for(unsigned digits, unsigned long expected_ops) {
  long bits = static_cast<long>((static_cast<unsigned long>(digits) * 3322 + 999) / 1000);
  long op_bits = 1;
  while ((1ul << op_bits) < expected_ops + 2 && op_bits < 62) ++op_bits;
  return bits + 32 + op_bits + 8;
}

Integer decimal_tolerance_ulps(unsigned digits, long scale) {
  return floor_div(pow2(scale), pow10(digits));
}

namespace {

// radius <= 10^-digits / 4
bool meets_quarter_tolerance(const ApproxReal& x, unsigned digits) {
  Integer lhs = x.radius_ulps() * pow10(digits) * 4;
  return lhs <= pow2(x.scale_bits());
}

}  // namespace

ApproxReal const_log2(unsigned digits) {
  // log 2 = sum_{n>0} 2^-n / n; tail after M is < 2^-M / (M+1).
  long s = scale_for(digits + 1, 64);
  long M = s;
  Integer acc = 0;
  for (long n = 1; n <= M; ++n)
    acc += floor_div(pow2(s - n), Integer(n));
  Integer rad = Integer(M) + 1;  // one ulp per term, one for the tail
  ApproxReal out(std::move(acc), s, std::move(rad));
  if (!meets_quarter_tolerance(out, digits))
    throw precision_error("const_log2 internal budget failure");
  return out;
}

ApproxReal const_pi(unsigned digits) {
  // pi = sum_n 16^-n [4/(8n+1) - 2/(8n+4) - 1/(8n+5) - 1/(8n+6)];
  // the bracket is in (0,4), so the tail after M is < 4 * 16^-M / 15.
  long s = scale_for(digits + 1, 64);
  long M = s / 4;
  Integer acc = 0;
  for (long n = 0; n <= M; ++n) {
    long sh = s - 4 * n;
    Integer t = floor_div(4 * pow2(sh), Integer(8 * n + 1));
    t -= ceil_div(2 * pow2(sh), Integer(8 * n + 4));
    t -= ceil_div(pow2(sh), Integer(8 * n + 5));
    t -= ceil_div(pow2(sh), Integer(8 * n + 6));
    acc += t;
  }
  Integer rad = Integer(4) * (M + 1) + 2;
  ApproxReal out(std::move(acc), s, std::move(rad));
  if (!meets_quarter_tolerance(out, digits))
    throw precision_error("const_pi internal budget failure");
  return out;
}

ApproxReal const_sqrt3(unsigned digits) {
  long s = scale_for(digits + 1, 4);
  Integer target = 3 * pow2(2 * s);
  Integer v;
  mpz_sqrt(v.get_mpz_t(), target.get_mpz_t());
  if (!(v * v <= target && target < (v + 1) * (v + 1)))
    throw std::logic_error("integer sqrt postcondition failed");
  ApproxReal out(std::move(v), s, 1);
  if (!meets_quarter_tolerance(out, digits))
    throw precision_error("const_sqrt3 internal budget failure");
  return out;
}

}  // namespace polyzeta
