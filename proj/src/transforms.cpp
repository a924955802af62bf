#include "polyzeta/transforms.hpp"

namespace polyzeta {

namespace {

WordPoly letter_image(TransformKind kind, Letter c) {
  WordPoly a(Word::single(Letter::A)), b(Word::single(Letter::B));
  switch (kind) {
    case TransformKind::Sigma:
      return c == Letter::A ? b : a;
    case TransformKind::Tau:
      return c == Letter::A ? a + b : -a;
    case TransformKind::SigmaPrime:
      return c == Letter::A ? -a : a + b;
  }
  throw std::logic_error("unreachable");
}

bool reverses(TransformKind kind) { return kind != TransformKind::SigmaPrime; }

}  // namespace

WordPoly apply_transform(TransformKind kind, const Word& w) {
  WordPoly out = WordPoly::one();
  if (reverses(kind)) {
    for (std::uint32_t i = w.size(); i-- > 0;)
      out = concat_mul(out, letter_image(kind, w.at(i)));
  } else {
    for (std::uint32_t i = 0; i < w.size(); ++i)
      out = concat_mul(out, letter_image(kind, w.at(i)));
  }
  return out;
}

WordPoly apply_transform(TransformKind kind, const WordPoly& h) {
  WordPoly out;
  for (const auto& [w, c] : h.terms()) {
    WordPoly t = apply_transform(kind, w);
    t *= c;
    out += t;
  }
  return out;
}

namespace {

WordPoly box_like(const WordPoly& h, TransformKind kind) {
  WordPoly out;
  for (const auto& [w, c] : h.terms()) {
    for (const auto& [pre, suf] : coproduct(w)) {
      WordPoly t = shuffle(WordPoly(pre), apply_transform(kind, suf));
      t *= c;
      out += t;
    }
  }
  return out;
}

}  // namespace

WordPoly box(const WordPoly& h) { return box_like(h, TransformKind::Sigma); }
WordPoly nabla(const WordPoly& h) { return box_like(h, TransformKind::Tau); }

WordPoly box_closed_form(std::uint32_t r) {
  if (r < 2) throw std::invalid_argument("box_closed_form requires r >= 2");
  WordPoly a(Word::single(Letter::A)), b(Word::single(Letter::B));
  WordPoly apb = a + b;
  WordPoly out = Rational(2) * concat_mul(concat_pow(a, r - 1), apb);
  for (std::uint32_t j = 1; j + 2 <= r; ++j)
    out += concat_mul(concat_pow(a, j), concat_pow(apb, r - j));
  return out;
}

WordPoly nabla_closed_form(std::uint32_t r) {
  if (r < 2) throw std::invalid_argument("nabla_closed_form requires r >= 2");
  WordPoly a(Word::single(Letter::A)), b(Word::single(Letter::B));
  WordPoly bma = b - a;
  Rational lead = (r % 2 == 0) ? -3 : 3;  // (-1)^{r+1} * 3
  WordPoly out = lead * concat_pow(a, r);
  for (std::uint32_t j = 1; j + 2 <= r; ++j) {
    WordPoly t = concat_mul(concat_pow(a, j), concat_pow(bma, r - j));
    if (j % 2 == 0) t = -t;  // (-1)^{j+1}
    out += t;
  }
  return out;
}

Lemma9Coeffs lemma9_coeffs(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("lemma9_coeffs requires length >= 2");
  const std::uint32_t r = w.size();
  const std::uint32_t k = w.count(Letter::A);
  std::uint32_t j = 0;
  while (j < r && w.at(j) == Letter::A) ++j;
  long sign_k = (k % 2 == 0) ? -1 : 1;  // (-1)^{k+1}
  if (j == r)  // w = a^r
    return {static_cast<long>(r), sign_k * static_cast<long>(r + 1)};
  if (j == r - 1)  // w = a^{r-1} b, where k = r-1 so (-1)^r = (-1)^{k+1}
    return {static_cast<long>(r), sign_k * static_cast<long>(r - 2)};
  return {static_cast<long>(j), sign_k * static_cast<long>(j)};
}

Theorem10Weights theorem10_weights(const Composition& m) {
  if (m.empty() || m.weight() < 2)
    throw std::invalid_argument("theorem10_weights requires weight >= 2");
  const std::uint32_t r = m.weight();
  const std::uint32_t k = m.depth();
  const auto& parts = m.parts();
  std::uint32_t j = 1;
  while (j <= k && parts[j - 1] == 1) ++j;  // first index with part >= 2 (1-based)
  long sign_k = (k % 2 == 0) ? -1 : 1;      // (-1)^{k+1}
  if (j > k)  // all parts 1
    return {static_cast<long>(r), sign_k * static_cast<long>(r + 1)};
  if (j == k && parts[k - 1] == 2)  // (1,...,1,2), k = r-1
    return {static_cast<long>(r), sign_k * static_cast<long>(r - 2)};
  return {static_cast<long>(j), sign_k * static_cast<long>(j)};
}

std::uint32_t cor12_weight(std::span<const std::uint32_t> tuple) {
  const std::size_t r = tuple.size();
  if (r < 2) throw std::invalid_argument("cor12_weight requires r >= 2");
  for (std::size_t i = 0; i + 1 < r; ++i)
    if (tuple[i] > tuple[i + 1] || tuple[i] == 0)
      throw std::invalid_argument("tuple must be positive nondecreasing");
  std::uint32_t count = 0;
  // n belongs to C_i iff the first i entries are strictly increasing; C_r = C_{r-1}.
  for (std::size_t i = 1; i <= r; ++i) {
    std::size_t strict_upto = (i == r) ? r - 1 : i;
    bool ok = true;
    for (std::size_t p = 0; p + 1 < strict_upto; ++p)
      if (!(tuple[p] < tuple[p + 1])) { ok = false; break; }
    if (ok) ++count;
  }
  return count;
}

std::uint32_t cor12_weight_closed(std::span<const std::uint32_t> tuple) {
  const std::size_t r = tuple.size();
  if (r < 2) throw std::invalid_argument("cor12_weight requires r >= 2");
  for (std::size_t i = 0; i + 2 < r; ++i)
    if (tuple[i] == tuple[i + 1]) return static_cast<std::uint32_t>(i + 1);
  return static_cast<std::uint32_t>(r);
}

}  // namespace polyzeta
