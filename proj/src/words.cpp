#include "polyzeta/words.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace polyzeta {

// --- Word ---------------------------------------------------------------------

Word Word::parse(std::string_view s) {
  if (s == "1") return Word();
  if (s.empty()) throw std::invalid_argument("empty word text; use '1' for the unit");
  Word w;
  for (char ch : s) {
    if (ch == 'a') w = w.appended(Letter::A);
    else if (ch == 'b') w = w.appended(Letter::B);
    else throw std::invalid_argument("invalid word character: " + std::string(1, ch));
  }
  return w;
}

Word Word::reversed() const {
  Word r;
  for (std::uint32_t i = 0; i < len_; ++i) r = r.prepended(at(i));
  return r;
}

Word Word::inserted(std::uint32_t pos, Letter c) const {
  return concat(prefix(pos).appended(c), suffix(pos));
}

std::uint32_t Word::count(Letter c) const {
  std::uint32_t n = 0;
  for (std::uint32_t i = 0; i < len_; ++i)
    if (at(i) == c) ++n;
  return n;
}

std::string Word::str() const {
  if (empty()) return "1";
  std::string s;
  s.reserve(len_);
  for (std::uint32_t i = 0; i < len_; ++i) s.push_back(letter_char(at(i)));
  return s;
}

Word concat(const Word& u, const Word& v) {
  if (u.len_ + v.len_ > Word::max_length) throw std::invalid_argument("word too long");
  return Word((u.bits_ << v.len_) | v.bits_, u.len_ + v.len_);
}

Word letter_power(Letter c, std::uint32_t n) {
  Word w;
  for (std::uint32_t i = 0; i < n; ++i) w = w.appended(c);
  return w;
}

const std::vector<Word>& all_words(std::uint32_t max_len) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<Word>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(max_len);
  if (it == cache.end()) {
    std::vector<Word> words;
    words.reserve((std::size_t(1) << (max_len + 1)) - 1);
    for (std::uint32_t len = 0; len <= max_len; ++len)
      for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << len); ++bits) {
        Word w;
        for (std::uint32_t i = 0; i < len; ++i)
          w = w.appended(static_cast<Letter>((bits >> (len - 1 - i)) & 1));
        words.push_back(w);
      }
    it = cache.emplace(max_len, std::move(words)).first;
  }
  return it->second;
}

// --- WordPoly -------------------------------------------------------------------

std::uint32_t WordPoly::max_word_length() const {
  std::uint32_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.size());
  return m;
}

Rational WordPoly::coeff(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& x) { return t.first < x; });
  if (it != terms_.end() && it->first == w) return it->second;
  return Rational(0);
}

void WordPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& x) { return t.first < x; });
  if (it != terms_.end() && it->first == w) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {w, c});
  }
}

WordPoly& WordPoly::operator+=(const WordPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae && b != be) {
    if (a->first < b->first) merged.push_back(*a++);
    else if (b->first < a->first) merged.push_back(*b++);
    else {
      Rational c = a->second + b->second;
      if (c != 0) merged.push_back({a->first, std::move(c)});
      ++a; ++b;
    }
  }
  merged.insert(merged.end(), a, ae);
  merged.insert(merged.end(), b, be);
  terms_ = std::move(merged);
  return *this;
}

WordPoly& WordPoly::operator-=(const WordPoly& o) { return *this += -o; }

WordPoly WordPoly::operator-() const {
  WordPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

WordPoly& WordPoly::operator*=(const Rational& c) {
  if (c == 0) { terms_.clear(); return *this; }
  for (auto& [w, q] : terms_) q *= c;
  return *this;
}

std::string WordPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational q = c;
    if (first) {
      if (q < 0) { os << "-"; q = -q; }
      first = false;
    } else {
      if (q < 0) { os << " - "; q = -q; }
      else os << " + ";
    }
    if (q == 1) os << w.str();
    else os << q.get_str() << "*" << w.str();
  }
  return os.str();
}

namespace {

Rational parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("invalid rational: " + std::string(s));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

WordPoly WordPoly::parse(std::string_view s) {
  WordPoly out;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  if (i == s.size()) throw std::invalid_argument("empty polynomial text");
  if (s.substr(i) == "0") return out;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    skip_ws();
    if (!first || (i < s.size() && (s[i] == '+' || s[i] == '-'))) {
      if (i >= s.size()) throw std::invalid_argument("dangling sign");
      if (s[i] == '+') ++i;
      else if (s[i] == '-') { sign = -1; ++i; }
      else if (!first) throw std::invalid_argument("expected '+' or '-'");
    }
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) &&
           s[i] != '+' && s[i] != '-')
      ++i;
    std::string_view tok = s.substr(start, i - start);
    if (tok.empty()) throw std::invalid_argument("expected term");
    Rational coeff(1);
    std::string_view word_text = tok;
    if (auto star = tok.find('*'); star != std::string_view::npos) {
      coeff = parse_rational(tok.substr(0, star));
      word_text = tok.substr(star + 1);
    } else if (tok.find_first_not_of("0123456789/") == std::string_view::npos) {
      // bare number: only "1" is a word (the unit); anything else is a coefficient
      // of the implicit unit word, e.g. "3" or "1/2".
      if (tok != "1") {
        coeff = parse_rational(tok);
        word_text = "1";
      }
    }
    Word w = Word::parse(word_text);
    if (sign < 0) coeff = -coeff;
    out.add_term(w, coeff);
    first = false;
    skip_ws();
  }
  return out;
}

// --- Composition ----------------------------------------------------------------

Composition::Composition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  for (auto p : parts_)
    if (p == 0) throw std::invalid_argument("composition parts must be positive");
}

Composition Composition::parse(std::string_view s) {
  std::vector<std::uint32_t> parts;
  std::istringstream is{std::string(s)};
  long v;
  while (is >> v) {
    if (v <= 0) throw std::invalid_argument("composition parts must be positive");
    parts.push_back(static_cast<std::uint32_t>(v));
  }
  if (!is.eof()) throw std::invalid_argument("invalid composition text");
  return Composition(std::move(parts));
}

std::uint32_t Composition::weight() const {
  std::uint32_t w = 0;
  for (auto p : parts_) w += p;
  return w;
}

std::string Composition::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ' ';
    os << parts_[i];
  }
  return os.str();
}

// --- shuffle ---------------------------------------------------------------------

namespace {

void shuffle_rec(const Word& u, std::uint32_t iu, const Word& v, std::uint32_t iv,
                 Word acc, std::map<Word, long>& out) {
  if (iu == u.size() && iv == v.size()) {
    ++out[acc];
    return;
  }
  if (iu < u.size()) shuffle_rec(u, iu + 1, v, iv, acc.appended(u.at(iu)), out);
  if (iv < v.size()) shuffle_rec(u, iu, v, iv + 1, acc.appended(v.at(iv)), out);
}

}  // namespace

WordPoly shuffle(const Word& u, const Word& v) {
  std::map<Word, long> counts;
  shuffle_rec(u, 0, v, 0, Word(), counts);
  WordPoly out;
  for (const auto& [w, n] : counts) out.add_term(w, Rational(n));
  return out;
}

WordPoly shuffle(const WordPoly& u, const WordPoly& v) {
  WordPoly out;
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms()) {
      WordPoly s = shuffle(wu, wv);
      s *= cu * cv;
      out += s;
    }
  return out;
}

WordPoly shuffle_power(const WordPoly& u, std::uint32_t n) {
  WordPoly r = WordPoly::one();
  for (std::uint32_t i = 0; i < n; ++i) r = shuffle(r, u);
  return r;
}

WordPoly concat_mul(const WordPoly& u, const WordPoly& v) {
  WordPoly out;
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms())
      out.add_term(concat(wu, wv), cu * cv);
  return out;
}

WordPoly concat_pow(const WordPoly& u, std::uint32_t n) {
  WordPoly r = WordPoly::one();
  for (std::uint32_t i = 0; i < n; ++i) r = concat_mul(r, u);
  return r;
}

// --- Hopf structure ----------------------------------------------------------------

std::vector<std::pair<Word, Word>> coproduct(const Word& w) {
  std::vector<std::pair<Word, Word>> out;
  out.reserve(w.size() + 1);
  for (std::uint32_t i = 0; i <= w.size(); ++i)
    out.push_back({w.prefix(i), w.suffix(i)});
  return out;
}

WordPoly antipode(const Word& w) {
  Rational sign = (w.size() % 2 == 0) ? 1 : -1;
  return WordPoly(sign, w.reversed());
}

WordPoly antipode(const WordPoly& h) {
  WordPoly out;
  for (const auto& [w, c] : h.terms()) {
    WordPoly t = antipode(w);
    t *= c;
    out += t;
  }
  return out;
}

// --- W+ / W++ and lambda ---------------------------------------------------------

WordClass classify(const Word& w) {
  if (w.empty()) return WordClass::PlusPlus;
  if (w.front() == Letter::B) return WordClass::Other;
  return w.back() == Letter::B ? WordClass::PlusPlus : WordClass::PlusOnly;
}

bool in_w_plus(const Word& w) { return classify(w) != WordClass::Other; }
bool in_w_plus_plus(const Word& w) { return classify(w) == WordClass::PlusPlus; }

Composition lambda_map(const Word& w) {
  if (w.empty()) return Composition();
  if (w.front() == Letter::B)
    throw std::invalid_argument("lambda is defined on W+ only (word starts with b)");
  std::vector<std::uint32_t> parts;
  for (std::uint32_t i = 0; i < w.size(); ++i) {
    if (w.at(i) == Letter::A) parts.push_back(1);
    else parts.back() += 1;
  }
  return Composition(std::move(parts));
}

Word lambda_inverse(const Composition& c) {
  Word w;
  for (auto r : c.parts()) {
    w = w.appended(Letter::A);
    for (std::uint32_t t = 1; t < r; ++t) w = w.appended(Letter::B);
  }
  return w;
}

// --- regularization ---------------------------------------------------------------

namespace {

using BDecomp = std::map<std::uint32_t, WordPoly>;

void add_into(BDecomp& dst, const BDecomp& src, const Rational& scale) {
  for (const auto& [j, p] : src) {
    WordPoly t = p;
    t *= scale;
    auto [it, inserted] = dst.try_emplace(j, t);
    if (!inserted) it->second += t;
    if (it->second.is_zero()) dst.erase(it);
  }
}

BDecomp shift_up(const BDecomp& d) {
  BDecomp out;
  for (const auto& [j, p] : d) out[j + 1] = p;
  return out;
}

// Leading-b strip.  For w = b^m u with u in W+ and m >= 1:
//   b * (b^{m-1} u) = m * w + (words with m-1 leading b's),
// so w = (1/m) [ b * (b^{m-1}u) - sum of insertions of b into the u-part ].
BDecomp decompose_b(const Word& w, std::map<Word, BDecomp>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  BDecomp out;
  if (!w.starts_with(Letter::B)) {
    out[0] = WordPoly(w);
  } else {
    std::uint32_t m = 0;
    while (m < w.size() && w.at(m) == Letter::B) ++m;
    Word v = w.suffix(1);  // b^{m-1} u
    add_into(out, shift_up(decompose_b(v, memo)), Rational(1, m));
    // gaps 0..m-1 of v reproduce w itself (m copies inside b*v); the rest are
    // insertions into the u-part and carry m-1 leading b's.
    for (std::uint32_t pos = m; pos <= v.size(); ++pos)
      add_into(out, decompose_b(v.inserted(pos, Letter::B), memo), Rational(-1, m));
  }
  memo.emplace(w, out);
  return out;
}

// Trailing-a strip, the mirror of decompose_b.
BDecomp decompose_a(const Word& w, std::map<Word, BDecomp>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  BDecomp out;
  if (!w.ends_with(Letter::A)) {
    out[0] = WordPoly(w);
  } else {
    std::uint32_t m = 0;
    while (m < w.size() && w.at(w.size() - 1 - m) == Letter::A) ++m;
    Word v = w.prefix(w.size() - 1);  // u a^{m-1}
    add_into(out, shift_up(decompose_a(v, memo)), Rational(1, m));
    std::uint32_t ulen = w.size() - m;
    for (std::uint32_t pos = 0; pos < ulen; ++pos)
      add_into(out, decompose_a(v.inserted(pos, Letter::A), memo), Rational(-1, m));
  }
  memo.emplace(w, out);
  return out;
}

}  // namespace

std::map<std::uint32_t, WordPoly> regularize_b(const WordPoly& h) {
  BDecomp out;
  std::map<Word, BDecomp> memo;
  for (const auto& [w, c] : h.terms()) add_into(out, decompose_b(w, memo), c);
  return out;
}

std::map<std::uint32_t, WordPoly> regularize_trailing_a(const WordPoly& h) {
  BDecomp out;
  std::map<Word, BDecomp> memo;
  for (const auto& [w, c] : h.terms()) add_into(out, decompose_a(w, memo), c);
  return out;
}

void ABPolynomial::add(std::uint32_t i, std::uint32_t j, const WordPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = coeffs.try_emplace({i, j}, p);
  if (!inserted) it->second += p;
  if (it->second.is_zero()) coeffs.erase(it);
}

WordPoly ABPolynomial::expand() const {
  WordPoly out;
  WordPoly a(Word::single(Letter::A)), b(Word::single(Letter::B));
  for (const auto& [key, p] : coeffs) {
    WordPoly t = shuffle(p, shuffle_power(a, key.first));
    t = shuffle(t, shuffle_power(b, key.second));
    out += t;
  }
  return out;
}

ABPolynomial regularize_ab(const WordPoly& h) {
  ABPolynomial out;
  for (const auto& [i, p] : regularize_trailing_a(h))
    for (const auto& [j, q] : regularize_b(p)) out.add(i, j, q);
  return out;
}

WordPoly expand_letter_poly(const std::map<std::uint32_t, WordPoly>& parts, Letter x) {
  WordPoly out;
  WordPoly gen(Word::single(x));
  for (const auto& [j, p] : parts) out += shuffle(p, shuffle_power(gen, j));
  return out;
}

}  // namespace polyzeta
