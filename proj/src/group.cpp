#include "polyzeta/group.hpp"

#include <map>
#include <mutex>
#include <random>
#include <sstream>

namespace polyzeta {

namespace {

std::size_t word_index(const Word& w) {
  return (std::size_t(1) << w.size()) - 1 + static_cast<std::size_t>(w.bits());
}

std::size_t table_size(std::uint32_t order) {
  return (std::size_t(1) << (order + 1)) - 1;
}

}  // namespace

NcSeries::NcSeries(std::uint32_t order) : order_(order), c_(table_size(order)) {
  if (order == 0 || order > 16) throw std::invalid_argument("order must be in 1..16");
}

NcSeries NcSeries::unit(std::uint32_t order) {
  NcSeries g(order);
  g.c_[0] = 1;
  return g;
}

NcSeries NcSeries::generator(std::uint32_t order, Letter x, const Rational& c) {
  NcSeries g(order);
  g.set_coeff(Word::single(x), c);
  return g;
}

const Rational& NcSeries::coeff(const Word& w) const {
  if (w.size() > order_) throw std::out_of_range("word exceeds the series order");
  return c_[word_index(w)];
}

void NcSeries::set_coeff(const Word& w, const Rational& c) {
  if (w.size() > order_) throw std::out_of_range("word exceeds the series order");
  c_[word_index(w)] = c;
}

NcSeries& NcSeries::operator+=(const NcSeries& o) {
  if (o.order_ != order_) throw std::invalid_argument("order mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

NcSeries& NcSeries::operator-=(const NcSeries& o) {
  if (o.order_ != order_) throw std::invalid_argument("order mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

NcSeries& NcSeries::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

NcSeries NcSeries::operator-() const {
  NcSeries g = *this;
  for (auto& x : g.c_) x = -x;
  return g;
}

NcSeries NcSeries::degree_part(std::uint32_t d) const {
  NcSeries g(order_);
  if (d > order_) return g;
  for (const Word& w : all_words(order_))
    if (w.size() == d) g.c_[word_index(w)] = c_[word_index(w)];
  return g;
}

bool NcSeries::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

std::string NcSeries::str() const {
  WordPoly p;
  for (const Word& w : all_words(order_)) {
    const Rational& c = c_[word_index(w)];
    if (c != 0) p.add_term(w, c);
  }
  return p.str();
}

NcSeries nc_mul(const NcSeries& g, const NcSeries& h) {
  if (g.order() != h.order()) throw std::invalid_argument("order mismatch");
  NcSeries out(g.order());
  for (const Word& w : all_words(g.order())) {
    Rational sum(0);
    for (std::uint32_t i = 0; i <= w.size(); ++i) {
      const Rational& x = g.coeff(w.prefix(i));
      if (x == 0) continue;
      const Rational& y = h.coeff(w.suffix(i));
      if (y == 0) continue;
      sum += x * y;
    }
    out.set_coeff(w, sum);
  }
  return out;
}

NcSeries nc_exp(const NcSeries& x) {
  if (x.constant_term() != 0)
    throw std::invalid_argument("exp needs a zero constant term");
  NcSeries out = NcSeries::unit(x.order());
  NcSeries pw = NcSeries::unit(x.order());
  Rational fact(1);
  for (std::uint32_t i = 1; i <= x.order(); ++i) {
    pw = nc_mul(pw, x);
    fact *= i;
    NcSeries t = pw;
    t *= 1 / fact;
    out += t;
  }
  return out;
}

NcSeries nc_log(const NcSeries& g) {
  if (g.constant_term() != 1)
    throw std::invalid_argument("log needs a unit constant term");
  NcSeries u = g - NcSeries::unit(g.order());
  NcSeries out(g.order());
  NcSeries pw = NcSeries::unit(g.order());
  for (std::uint32_t i = 1; i <= g.order(); ++i) {
    pw = nc_mul(pw, u);
    NcSeries t = pw;
    t *= Rational(i % 2 == 1 ? 1 : -1, i);
    out += t;
  }
  return out;
}

NcSeries nc_inv(const NcSeries& g) {
  if (g.constant_term() != 1)
    throw std::invalid_argument("inverse needs a unit constant term");
  NcSeries u = g - NcSeries::unit(g.order());
  NcSeries out = NcSeries::unit(g.order());
  NcSeries pw = NcSeries::unit(g.order());
  for (std::uint32_t i = 1; i <= g.order(); ++i) {
    pw = nc_mul(pw, u);
    if (i % 2 == 1) out -= pw;
    else out += pw;
  }
  return out;
}

Rational pair(const WordPoly& h, const NcSeries& g) {
  if (h.max_word_length() > g.order())
    throw std::out_of_range("pairing exceeds the series order");
  Rational sum(0);
  for (const auto& [w, c] : h.terms()) sum += c * g.coeff(w);
  return sum;
}

bool is_grouplike(const NcSeries& g) {
  if (g.constant_term() != 1) return false;
  const auto& words = all_words(g.order());
  for (const Word& u : words) {
    if (u.empty()) continue;
    for (const Word& v : words) {
      if (v.empty() || u.size() + v.size() > g.order()) continue;
      if (pair(shuffle(u, v), g) != g.coeff(u) * g.coeff(v)) return false;
    }
  }
  return true;
}

bool is_primitive(const NcSeries& x) {
  if (x.constant_term() != 0) return false;
  const auto& words = all_words(x.order());
  for (const Word& u : words) {
    if (u.empty()) continue;
    for (const Word& v : words) {
      if (v.empty() || u.size() + v.size() > x.order()) continue;
      if (pair(shuffle(u, v), x) != 0) return false;
    }
  }
  return true;
}

NcSeries series_transform(TransformKind kind, const NcSeries& g) {
  NcSeries out(g.order());
  for (const Word& w : all_words(g.order()))
    out.set_coeff(w, pair(apply_transform(kind, w), g));
  return out;
}

NcSeries random_grouplike(std::uint32_t order, std::uint64_t seed,
                          std::uint32_t factors) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> pick(0, 1);
  NcSeries g = NcSeries::unit(order);
  for (std::uint32_t i = 0; i < factors; ++i) {
    Letter x = pick(rng) == 0 ? Letter::A : Letter::B;
    int p = num(rng);
    if (p == 0) p = 1;
    Rational t(p, den(rng));
    t.canonicalize();
    g = nc_mul(g, nc_exp(NcSeries::generator(order, x, t)));
  }
  return g;
}

namespace {

void require_grouplike(const NcSeries& g, const char* who) {
  if (!is_grouplike(g)) throw std::invalid_argument(std::string(who) + ": not grouplike");
}

}  // namespace

PKDecomposition pk_decompose(const NcSeries& g) {
  require_grouplike(g, "pk_decompose");
  const std::uint32_t n = g.order();
  NcSeries x(n), y(n);  // p-part and k-part of log, accumulated per degree
  for (std::uint32_t d = 1; d <= n; ++d) {
    NcSeries rem = nc_log(nc_mul(nc_mul(nc_exp(-x), g), nc_exp(-y)));
    NcSeries delta = rem.degree_part(d);
    if (delta.is_zero()) continue;
    NcSeries sd = series_transform(TransformKind::Sigma, delta);
    NcSeries xd = delta + sd;
    xd *= Rational(1, 2);
    NcSeries yd = delta - sd;
    yd *= Rational(1, 2);
    x += xd;
    y += yd;
  }
  PKDecomposition out{nc_exp(x), nc_exp(y)};
  if (!(nc_mul(out.p, out.k) == g))
    throw std::logic_error("pk_decompose lost exactness");
  return out;
}

QLDecomposition ql_decompose(const NcSeries& g) {
  require_grouplike(g, "ql_decompose");
  const std::uint32_t n = g.order();
  NcSeries q(n), l(n);
  auto tau = [](const NcSeries& s) { return series_transform(TransformKind::Tau, s); };
  for (std::uint32_t d = 1; d <= n; ++d) {
    NcSeries rem = nc_log(
        nc_mul(nc_exp(-tau(q)), nc_mul(nc_exp(-q), nc_mul(g, nc_exp(-l)))));
    NcSeries delta = rem.degree_part(d);
    if (delta.is_zero()) continue;
    NcSeries t1 = tau(delta);
    NcSeries t2 = tau(t1);
    // e_l = (tau^2 - tau + 1)/3 projects onto ker(tau + 1)
    NcSeries ld = t2 - t1 + delta;
    ld *= Rational(1, 3);
    NcSeries qdef = delta - ld;  // in ker(tau^2 - tau + 1)
    // (1 + tau)^{-1} = (2 - tau)/3 there
    NcSeries qd = Rational(2) * qdef - tau(qdef);
    qd *= Rational(1, 3);
    q += qd;
    l += ld;
  }
  NcSeries rebuilt = nc_mul(nc_exp(q), nc_mul(nc_exp(tau(q)), nc_exp(l)));
  if (!(rebuilt == g)) throw std::logic_error("ql_decompose lost exactness");
  return {q, nc_exp(l)};
}

}  // namespace polyzeta
