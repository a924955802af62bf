#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "polyzeta/words.hpp"

namespace polyzeta {

/// Evaluation points of the series pipelines.  Rho is e^{i pi/3} = 1/2 + i sqrt(3)/2,
/// a primitive 6th root of unity (rho^2 = rho - 1); RhoBar its conjugate.
enum class EvalPoint { Half, MinusOne, Rho, RhoBar };

inline bool on_unit_circle(EvalPoint p) { return p != EvalPoint::Half; }
inline bool is_real_point(EvalPoint p) { return p == EvalPoint::Half || p == EvalPoint::MinusOne; }
const char* point_name(EvalPoint p);
EvalPoint parse_point(const std::string& name);

struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fixed-point real number with a rigorous error radius: the represented
/// quantity lies in [ (value - radius) 2^-scale, (value + radius) 2^-scale ].
/// Radii only ever grow; no operation drops them.
class ApproxReal {
public:
  ApproxReal() : v_(0), s_(16), r_(0) {}
  ApproxReal(Integer scaled_value, long scale_bits, Integer radius)
      : v_(std::move(scaled_value)), s_(scale_bits), r_(std::move(radius)) {
    if (s_ <= 0) throw std::invalid_argument("scale_bits must be positive");
    if (r_ < 0) throw std::invalid_argument("negative radius");
  }

  static ApproxReal exact_integer(const Integer& n, long scale);
  /// Nearest fixed-point value; at most one ulp off.
  static ApproxReal from_rational(const Rational& q, long scale);
  static ApproxReal zero(long scale) { return ApproxReal(0, scale, 0); }

  const Integer& scaled_value() const { return v_; }
  long scale_bits() const { return s_; }
  const Integer& radius_ulps() const { return r_; }

  Rational center() const;
  Rational radius() const;
  Rational upper() const { return center() + radius(); }
  Rational lower() const { return center() - radius(); }
  bool is_exact() const { return r_ == 0; }

  /// Exact when raising the scale; rounds (radius +1) when lowering.
  ApproxReal rescaled(long new_scale) const;

  ApproxReal operator-() const { return ApproxReal(-v_, s_, r_); }
  friend ApproxReal operator+(const ApproxReal& x, const ApproxReal& y);
  friend ApproxReal operator-(const ApproxReal& x, const ApproxReal& y);
  friend ApproxReal operator*(const ApproxReal& x, const ApproxReal& y);
  ApproxReal& operator+=(const ApproxReal& y) { return *this = *this + y; }
  ApproxReal& operator-=(const ApproxReal& y) { return *this = *this - y; }

  /// Multiplies by 2^-k (error-free apart from one ulp of rounding).
  ApproxReal shifted_down(unsigned long k) const;

  friend ApproxReal scale_by_rational(const ApproxReal& x, const Rational& q);
  friend ApproxReal div_by_integer(const ApproxReal& x, const Integer& n);

  bool encloses(const Rational& q) const;
  /// |center(x) - center(y)| <= radius(x) + radius(y): the two enclosures are
  /// consistent with a common true value.
  friend bool agrees(const ApproxReal& x, const ApproxReal& y);

  /// True if the radius certifies `digits` fractional decimal digits
  /// (radius <= 10^-digits).
  bool certifies(unsigned digits) const;

  /// Decimal string, correctly rounded to `digits` fractional digits.
  /// Throws precision_error if the radius does not certify them.
  std::string to_decimal(unsigned digits) const;

  /// Upper bound for the radius as a one-significant-digit decimal ("3e-31");
  /// "0" for exact values.
  std::string bound_string() const;

private:
  Integer v_;
  long s_;
  Integer r_;
};

/// Componentwise complex enclosure.
struct ApproxComplex {
  ApproxReal re, im;

  ApproxComplex() = default;
  ApproxComplex(ApproxReal r, ApproxReal i) : re(std::move(r)), im(std::move(i)) {}
  static ApproxComplex real(const ApproxReal& r) {
    return ApproxComplex(r, ApproxReal::zero(r.scale_bits()));
  }

  ApproxComplex operator-() const { return {-re, -im}; }
  friend ApproxComplex operator+(const ApproxComplex& x, const ApproxComplex& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend ApproxComplex operator-(const ApproxComplex& x, const ApproxComplex& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend ApproxComplex operator*(const ApproxComplex& x, const ApproxComplex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  ApproxComplex& operator+=(const ApproxComplex& y) { return *this = *this + y; }
};

ApproxComplex scale_by_rational(const ApproxComplex& x, const Rational& q);

/// Working scale for a computation: ceil(digits log2 10) + 32 guard bits +
/// room for the expected operation count.
long scale_for(unsigned digits, unsigned long expected_ops);

/// 10^-digits expressed in ulps at the given scale, rounded down.
Integer decimal_tolerance_ulps(unsigned digits, long scale);

/// Enclosures of log 2 (from sum 2^-n / n), pi (from the base-16 digit series),
/// and sqrt 3 (integer square root), each with radius <= 10^-digits / 4.
ApproxReal const_log2(unsigned digits);
ApproxReal const_pi(unsigned digits);
ApproxReal const_sqrt3(unsigned digits);

}  // namespace polyzeta
