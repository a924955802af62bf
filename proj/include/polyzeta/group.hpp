#pragma once

#include <cstdint>
#include <vector>

#include "polyzeta/transforms.hpp"
#include "polyzeta/words.hpp"

namespace polyzeta {

/// Noncommutative power series in a, b with rational coefficients, truncated
/// at a fixed total degree.  Group elements are the grouplike series (the
/// coefficient functional is shuffle-multiplicative), Lie elements the
/// primitive ones; both are checked, not assumed.
class NcSeries {
public:
  explicit NcSeries(std::uint32_t order);

  static NcSeries unit(std::uint32_t order);
  /// c * (single letter), a Lie generator multiple.
  static NcSeries generator(std::uint32_t order, Letter x, const Rational& c = 1);

  std::uint32_t order() const { return order_; }
  const Rational& coeff(const Word& w) const;
  void set_coeff(const Word& w, const Rational& c);
  Rational constant_term() const { return coeff(Word()); }

  NcSeries& operator+=(const NcSeries& o);
  NcSeries& operator-=(const NcSeries& o);
  NcSeries& operator*=(const Rational& c);
  friend NcSeries operator+(NcSeries x, const NcSeries& y) { x += y; return x; }
  friend NcSeries operator-(NcSeries x, const NcSeries& y) { x -= y; return x; }
  friend NcSeries operator*(const Rational& c, NcSeries x) { x *= c; return x; }
  NcSeries operator-() const;

  /// The degree-d homogeneous part.
  NcSeries degree_part(std::uint32_t d) const;
  bool is_zero() const;

  friend bool operator==(const NcSeries&, const NcSeries&) = default;

  std::string str() const;

private:
  std::uint32_t order_;
  std::vector<Rational> c_;  // indexed by (2^len - 1) + bits
};

/// Truncated concatenation product.
NcSeries nc_mul(const NcSeries& g, const NcSeries& h);
/// exp of a zero-constant-term series.
NcSeries nc_exp(const NcSeries& x);
/// log of a unit-constant-term series.
NcSeries nc_log(const NcSeries& g);
NcSeries nc_inv(const NcSeries& g);

/// <h, g> = sum over terms of coeff(h,w) coeff(g,w); exact.
Rational pair(const WordPoly& h, const NcSeries& g);

bool is_grouplike(const NcSeries& g);
bool is_primitive(const NcSeries& x);

/// The action on points dual to the word map: coeff(T(g), w) = <T(w), g>.
/// A concatenation anti-automorphism; grouplikes map to grouplikes.
NcSeries series_transform(TransformKind kind, const NcSeries& g);

/// Seeded product of exp(t_i letter_i); grouplike by construction.
NcSeries random_grouplike(std::uint32_t order, std::uint64_t seed,
                          std::uint32_t factors = 6);

/// g = p k with sigma(p) = p and sigma(k) = k^{-1}, solved degree by degree.
struct PKDecomposition {
  NcSeries p, k;
};
PKDecomposition pk_decompose(const NcSeries& g);

/// g = exp(q) exp(tau q) exp(l) with q in ker(tau^2 - tau + 1) and
/// l in ker(tau + 1) on the Lie algebra.
struct QLDecomposition {
  NcSeries q;  // Lie parameter
  NcSeries l;  // group element exp(l'), tau(l) = l^{-1}
};
QLDecomposition ql_decompose(const NcSeries& g);

}  // namespace polyzeta
