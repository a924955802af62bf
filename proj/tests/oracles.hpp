#pragma once

// Test-only brute-force references, independent of the library's algorithms.

#include <vector>

#include "polyzeta/series.hpp"
#include "polyzeta/words.hpp"

namespace pz_test {

using namespace polyzeta;

// Shuffle by subset enumeration: every way to place the letters of u among
// n+m slots, keeping both orders.
inline WordPoly brute_shuffle(const Word& u, const Word& v) {
  const std::uint32_t n = u.size(), m = v.size();
  WordPoly out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n + m)); ++mask) {
    if (static_cast<std::uint32_t>(__builtin_popcountll(mask)) != n) continue;
    Word w;
    std::uint32_t iu = 0, iv = 0;
    for (std::uint32_t pos = 0; pos < n + m; ++pos) {
      if (mask & (std::uint64_t(1) << pos)) w = w.appended(u.at(iu++));
      else w = w.appended(v.at(iv++));
    }
    out.add_term(w, 1);
  }
  return out;
}

// Exact partial sum of the relational series by tuple enumeration, z = 1/2,
// -1, or 1 (z = 1 gives the zeta partial sums).
enum class BrutePoint { Half, MinusOne, One };

inline void brute_tuples(const RelationalIndex& idx, BrutePoint pt, long cap,
                         std::uint32_t layer, long last, Rational prod, Rational& acc) {
  const std::uint32_t k = idx.depth();
  long start = idx.strict[layer] ? last + 1 : last;
  for (long n = std::max(start, 1L); n <= cap; ++n) {
    Rational p = prod;
    Integer np;
    mpz_ui_pow_ui(np.get_mpz_t(), static_cast<unsigned long>(n), idx.exponents[layer]);
    p /= Rational(np);
    if (layer + 1 == k) {
      Rational z(1);
      if (pt == BrutePoint::Half) {
        Integer d;
        mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(n));
        z = Rational(1, d);
      } else if (pt == BrutePoint::MinusOne) {
        z = (n % 2 == 0) ? 1 : -1;
      }
      acc += p * z;
    } else {
      brute_tuples(idx, pt, cap, layer + 1, n, p, acc);
    }
  }
}

inline Rational brute_polylog(const RelationalIndex& idx, BrutePoint pt, long cap) {
  Rational acc(0);
  brute_tuples(idx, pt, cap, 0, 0, Rational(1), acc);
  return acc;
}

// Absolute-value tail mass between N+1 and cap (for validating tail bounds).
inline Rational brute_tail_mass(const RelationalIndex& idx, BrutePoint pt, long N,
                                long cap) {
  Rational full = brute_polylog(idx, pt == BrutePoint::MinusOne ? BrutePoint::One : pt,
                                cap);
  Rational head = brute_polylog(idx, pt == BrutePoint::MinusOne ? BrutePoint::One : pt,
                                N);
  return full - head;  // sum of |terms| with N < n_k <= cap
}

}  // namespace pz_test
