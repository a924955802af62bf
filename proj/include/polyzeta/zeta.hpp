#pragma once

#include <string>

#include "polyzeta/series.hpp"
#include "polyzeta/transforms.hpp"

namespace polyzeta {

enum class ZetaMethod {
  Direct,
  Thm7Half,
  Thm7Rho,
  Thm7RhoBar,
  Thm10,
  Cor12,
  Cor21,
  Lemma20MinusOne,
  Lemma20Rho,
};

const char* method_name(ZetaMethod m);
ZetaMethod parse_method(const std::string& name);
EvalPoint method_point(ZetaMethod m);

/// A composition whose zeta value diverges was requested on a direct pipeline.
struct divergent_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// A method precondition failed (depth, weight cap, circle digit cap, ...).
struct method_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct ZetaConfig {
  unsigned max_weight = 12;    // cap on the box-expansion weight
  unsigned rho_digit_cap = 8;  // circle-series methods are opt-in beyond this
  long oracle_cutoff = 100000;
  EvalConfig eval;
};

struct ZetaResult {
  ApproxComplex value;
  bool real = true;
  long terms_used = 0;
  double elapsed_ms = 0.0;
  ZetaMethod method = ZetaMethod::Thm7Half;

  /// Real results only.
  const ApproxReal& real_value() const;
};

/// Partial sum of the defining series up to n_k <= cutoff plus a certified
/// tail bound; the low-precision ground truth.
ApproxReal zeta_direct_oracle(const Composition& c, long cutoff);

/// The primary fast path: zeta(c) = L at 1/2 of box applied to the word of c.
ZetaResult zeta_conv(const Composition& c, unsigned digits, const ZetaConfig& cfg = {});

/// Regularized zeta: the shuffle-polynomial coefficients of h over W++ are
/// evaluated and the a,b generators are sent to 0.
ZetaResult zeta_reg(const WordPoly& h, unsigned digits, const ZetaConfig& cfg = {});

/// Signed regularization: the generator a is sent to (sign) i pi, b to 0;
/// the output splits as (real part) + i pi (real part).
ZetaResult zeta_pm(const WordPoly& h, int sign, unsigned digits, const ZetaConfig& cfg = {});

/// Depth-one specializations; every method agrees with every other within
/// combined radii.
ZetaResult zeta_r(std::uint32_t r, ZetaMethod method, unsigned digits,
                  const ZetaConfig& cfg = {});

/// Dispatcher used by the CLI: routes a composition to the chosen method.
ZetaResult compute_zeta(const Composition& c, ZetaMethod method, unsigned digits,
                        const ZetaConfig& cfg = {});

}  // namespace polyzeta
