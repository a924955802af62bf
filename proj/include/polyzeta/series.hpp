#pragma once

#include <vector>

#include "polyzeta/approx.hpp"
#include "polyzeta/words.hpp"

namespace polyzeta {

/// Index of a relational multiple-polylogarithm sum
///   sum over 0 < n_1 R_2 n_2 ... R_k n_k of n_1^-r_1 ... n_k^-r_k z^{n_k},
/// where R_i is "<" when strict[i-1] and "<=" otherwise.  The leading
/// constraint "0 < n_1" is always strict.  All-strict indices are the
/// ordinary compositions.
struct RelationalIndex {
  std::vector<std::uint32_t> exponents;
  std::vector<bool> strict;

  RelationalIndex() = default;
  RelationalIndex(std::vector<std::uint32_t> exps, std::vector<bool> flags);

  static RelationalIndex all_strict(const Composition& c);
  /// r exponents 1 with constraints 0 < n_1 <= n_2 <= ... <= n_r.
  static RelationalIndex nondecreasing_ones(std::uint32_t r);

  std::uint32_t depth() const { return static_cast<std::uint32_t>(exponents.size()); }
  std::uint32_t weight() const;
  std::uint32_t trailing_exponent() const { return exponents.back(); }
};

struct EvalConfig {
  long max_terms = 5'000'000;  // cap on the length of any directly summed series
  bool force_direct = false;   // forbid rerouting -1 evaluations through 1/2
};

/// A certified truncation: summing n <= terms at scale_bits leaves a tail of
/// absolute value at most tail_bound (= tail_ulps * 2^-scale_bits >= tail_bound).
struct EvalPlan {
  long terms = 0;
  long scale_bits = 0;
  EvalPoint point = EvalPoint::Half;
  Rational tail_bound;
  Integer tail_ulps;
};

/// Chooses N with certified tail <= 10^-digits / 2.
/// Throws precision_error when the cap cfg.max_terms is not enough (only
/// possible on the unit circle) and std::domain_error for a unit-circle
/// point with trailing exponent 1.
EvalPlan truncation_bound(const RelationalIndex& idx, EvalPoint point, unsigned digits,
                          const EvalConfig& cfg = {});

struct SeriesValue {
  ApproxComplex value;
  long terms_used = 0;

  const ApproxReal& real_checked() const;
};

/// Direct dynamic-programming summation of the relational series; the result
/// radius is certified <= 10^-digits.
SeriesValue polylog(const RelationalIndex& idx, EvalPoint point, unsigned digits,
                    const EvalConfig& cfg = {});

/// L_w for w in W+ (empty word gives exactly 1).  Runs through the same
/// reduction machinery as polylog_helem, so every point of the closed disk
/// named by EvalPoint is usable for every W+ word.
SeriesValue polylog_word(const Word& w, EvalPoint point, unsigned digits,
                         const EvalConfig& cfg = {});

/// L_h for arbitrary h in H: leading-b powers become powers of log z, and on
/// the unit circle trailing-a powers become powers of -log(1-z), so every
/// series actually summed is absolutely convergent.
SeriesValue polylog_helem(const WordPoly& h, EvalPoint point, unsigned digits,
                          const EvalConfig& cfg = {});

/// Single weighted pass over the cone 0 < n_1 <= ... <= n_r with the
/// first-tie weight folded into the recurrence; equals zeta(r).
SeriesValue relational_sum_cor12(std::uint32_t r, unsigned digits,
                                 const EvalConfig& cfg = {});

// Tail-bound building blocks, exposed for the bound-validation tests.
namespace tails {
/// Upper bound for sum_{n>N} (1+ln n)^{k-1} n^-s, divided by (k-1)! when
/// `strict` (strictly increasing prefixes).
Rational integral_bound(long N, std::uint32_t k, std::uint32_t s, bool strict);
/// Upper bound for the |z| = 1/2 tail of a depth-k series.
Rational geometric_bound(long N, std::uint32_t k);
/// Summation-by-parts bound for the tail at a unit-circle point != 1.
Rational abel_bound(long N, std::uint32_t k, std::uint32_t s, EvalPoint point);
Rational ln_upper(long n);
Rational ln_lower(long n);
}  // namespace tails

}  // namespace polyzeta
