#pragma once

#include <span>

#include "polyzeta/words.hpp"

namespace polyzeta {

/// The three letter substitutions.  Sigma and Tau act on a word in reversed
/// order (concatenation anti-morphisms); SigmaPrime acts in direct order.
/// All three are algebra morphisms for the shuffle product.
enum class TransformKind { Sigma, Tau, SigmaPrime };

WordPoly apply_transform(TransformKind kind, const WordPoly& h);
WordPoly apply_transform(TransformKind kind, const Word& w);

/// box = shuffle o (id (x) sigma) o coproduct; nabla the same with tau.
WordPoly box(const WordPoly& h);
WordPoly nabla(const WordPoly& h);

/// Closed concatenation-polynomial forms of box(a b^{r-1}) and nabla(a b^{r-1}).
WordPoly box_closed_form(std::uint32_t r);
WordPoly nabla_closed_form(std::uint32_t r);

/// The per-word coefficients c(w), c_pm(w) with box(a b^{r-1}) = sum c(w) w and
/// nabla(a b^{r-1}) = sum c_pm(w) w over words of length r.
struct Lemma9Coeffs {
  long c;
  long c_pm;
};
Lemma9Coeffs lemma9_coeffs(const Word& w);

/// The same coefficients transported to compositions of weight r.
struct Theorem10Weights {
  long b;
  long b_pm;
};
Theorem10Weights theorem10_weights(const Composition& m);

/// Multiplicity of a nondecreasing positive tuple in the weighted cone:
/// the number of relation patterns C_i containing it.  Takes values in
/// {1,...,r-2, r}.
std::uint32_t cor12_weight(std::span<const std::uint32_t> tuple);

/// Closed-form restatement of cor12_weight (first-tie case analysis).
std::uint32_t cor12_weight_closed(std::span<const std::uint32_t> tuple);

}  // namespace polyzeta
