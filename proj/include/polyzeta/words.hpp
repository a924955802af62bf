#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace polyzeta {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Letter : std::uint8_t { A = 0, B = 1 };

inline char letter_char(Letter c) { return c == Letter::A ? 'a' : 'b'; }

/// A word over the two-letter alphabet {a,b}, packed into a machine word.
/// The first letter sits in the highest occupied bit, so that for equal
/// lengths the numeric order of `bits` is the lexicographic order with a < b.
class Word {
public:
  static constexpr std::uint32_t max_length = 62;

  Word() = default;

  static Word single(Letter c) { return Word(static_cast<std::uint64_t>(c), 1); }

  /// Parses the text form: "1" is the empty word, otherwise a string over 'a','b'.
  static Word parse(std::string_view s);

  std::uint32_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  /// Letter at position i, counted from the left (0-based).
  Letter at(std::uint32_t i) const {
    return static_cast<Letter>((bits_ >> (len_ - 1 - i)) & 1u);
  }

  Letter front() const { return at(0); }
  Letter back() const { return at(len_ - 1); }

  bool starts_with(Letter c) const { return !empty() && front() == c; }
  bool ends_with(Letter c) const { return !empty() && back() == c; }

  Word prefix(std::uint32_t i) const { return Word(bits_ >> (len_ - i), i); }
  Word suffix(std::uint32_t i) const {
    std::uint32_t n = len_ - i;
    return Word(bits_ & ((n == 64 ? ~0ull : (1ull << n) - 1)), n);
  }

  Word appended(Letter c) const { return Word((bits_ << 1) | static_cast<std::uint64_t>(c), len_ + 1); }
  Word prepended(Letter c) const {
    return Word(bits_ | (static_cast<std::uint64_t>(c) << len_), len_ + 1);
  }
  Word reversed() const;
  Word inserted(std::uint32_t pos, Letter c) const;

  std::uint32_t count(Letter c) const;

  std::string str() const;

  friend Word concat(const Word& u, const Word& v);

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& x, const Word& y) {
    return x.len_ != y.len_ ? x.len_ < y.len_ : x.bits_ < y.bits_;
  }

  std::uint64_t bits() const { return bits_; }

private:
  Word(std::uint64_t bits, std::uint32_t len) : bits_(bits), len_(len) {
    if (len > max_length) throw std::invalid_argument("word too long");
  }
  std::uint64_t bits_ = 0;
  std::uint32_t len_ = 0;
};

Word concat(const Word& u, const Word& v);

/// Repeated single letter a^n or b^n.
Word letter_power(Letter c, std::uint32_t n);

/// Every word of length <= max_len, empty word first, in (length, lex) order.
const std::vector<Word>& all_words(std::uint32_t max_len);

/// A finite Q-linear combination of words; the element type of the shuffle
/// algebra H.  Terms are kept sorted by word with nonzero coefficients, so
/// equality of values is equality of representations.
class WordPoly {
public:
  using Term = std::pair<Word, Rational>;

  WordPoly() = default;
  WordPoly(const Word& w) : terms_{{w, Rational(1)}} {}
  WordPoly(Rational c, const Word& w) {
    if (c != 0) terms_.push_back({w, std::move(c)});
  }

  static WordPoly zero() { return {}; }
  static WordPoly one() { return WordPoly(Word()); }

  static WordPoly parse(std::string_view s);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::uint32_t max_word_length() const;

  Rational coeff(const Word& w) const;

  WordPoly& operator+=(const WordPoly& o);
  WordPoly& operator-=(const WordPoly& o);
  WordPoly& operator*=(const Rational& c);
  friend WordPoly operator+(WordPoly x, const WordPoly& y) { x += y; return x; }
  friend WordPoly operator-(WordPoly x, const WordPoly& y) { x -= y; return x; }
  friend WordPoly operator*(const Rational& c, WordPoly x) { x *= c; return x; }
  WordPoly operator-() const;

  void add_term(const Word& w, const Rational& c);

  friend bool operator==(const WordPoly&, const WordPoly&) = default;

  std::string str() const;

private:
  std::vector<Term> terms_;
};

/// The index set of the polylogarithms: a sequence (r_1,...,r_k) of positive
/// integers, or the distinguished empty sequence.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<std::uint32_t> parts);

  static Composition parse(std::string_view s);  // whitespace separated

  const std::vector<std::uint32_t>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::uint32_t depth() const { return static_cast<std::uint32_t>(parts_.size()); }
  std::uint32_t weight() const;
  bool convergent() const { return !parts_.empty() && parts_.back() >= 2; }

  std::string str() const;  // space separated parts

  friend bool operator==(const Composition&, const Composition&) = default;
  friend bool operator<(const Composition& x, const Composition& y) {
    return x.parts_ < y.parts_;
  }

private:
  std::vector<std::uint32_t> parts_;
};

// --- operations --------------------------------------------------------------

/// Shuffle product, the commutative product of H.
WordPoly shuffle(const WordPoly& u, const WordPoly& v);
WordPoly shuffle(const Word& u, const Word& v);
WordPoly shuffle_power(const WordPoly& u, std::uint32_t n);

/// Concatenation product on H (noncommutative).
WordPoly concat_mul(const WordPoly& u, const WordPoly& v);
WordPoly concat_pow(const WordPoly& u, std::uint32_t n);

/// Deconcatenation coproduct: all n+1 prefix/suffix splits, in order.
std::vector<std::pair<Word, Word>> coproduct(const Word& w);

/// Hopf antipode: (-1)^len times the reversed word, extended linearly.
WordPoly antipode(const Word& w);
WordPoly antipode(const WordPoly& h);

enum class WordClass { PlusPlus, PlusOnly, Other };

/// Membership in W+ / W++: the empty word counts as both.
WordClass classify(const Word& w);
bool in_w_plus(const Word& w);
bool in_w_plus_plus(const Word& w);

/// The bijection W+ <-> compositions: a b^{t_1} ... a b^{t_k} |-> (1+t_1,...,1+t_k).
Composition lambda_map(const Word& w);
Word lambda_inverse(const Composition& c);

/// h as a polynomial in b with coefficients in H+ (shuffle powers of b):
/// h = sum_j coeff[j] * b^{*j}.
std::map<std::uint32_t, WordPoly> regularize_b(const WordPoly& h);

/// h as a shuffle-polynomial in a and b over H++:
/// h = sum_{i,j} coeff[(i,j)] * a^{*i} * b^{*j}.
class ABPolynomial {
public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;
  std::map<Key, WordPoly> coeffs;

  void add(std::uint32_t i, std::uint32_t j, const WordPoly& p);
  /// Re-expands sum coeff[(i,j)] * a^{*i} * b^{*j} through shuffle powers.
  WordPoly expand() const;
  friend bool operator==(const ABPolynomial&, const ABPolynomial&) = default;
};

ABPolynomial regularize_ab(const WordPoly& h);

/// Trailing-letter analogue of regularize_b: h = sum_j coeff[j] * a^{*j} with
/// every coefficient supported on words not ending in a.
std::map<std::uint32_t, WordPoly> regularize_trailing_a(const WordPoly& h);

/// Expands a map j -> coeff into sum_j coeff * x^{*j} for x a single letter.
WordPoly expand_letter_poly(const std::map<std::uint32_t, WordPoly>& parts, Letter x);

}  // namespace polyzeta
