#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "torsionlab/mat2.hpp"
#include "torsionlab/types.hpp"

namespace torsionlab {

enum class Gen : std::uint8_t { A = 0, B = 1 };

inline Gen other(Gen g) { return g == Gen::A ? Gen::B : Gen::A; }
inline char gen_char(Gen g) { return g == Gen::A ? 'a' : 'b'; }

struct Letter {
  Gen g;
  int e;  // +1 or -1
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Freely reduced word over {a, b}. Construction reduces adjacent
// g g^-1 pairs; every operation preserves reducedness.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word gen(Gen g, int e = 1) { return Word({Letter{g, e >= 0 ? 1 : -1}}); }

  const std::vector<Letter>& letters() const { return ls_; }
  bool empty() const { return ls_.empty(); }
  size_t size() const { return ls_.size(); }

  Word operator*(const Word& o) const;
  Word inverse() const;
  Word pow(int k) const;
  Word reversed() const;  // letters in reversed order, exponents unchanged

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> ls_;
};

// Letter-reversal (not inversion) of a word.
Word reverse_word(const Word& w);

// Canonical run-length text form; the empty word prints as "a^0".
std::string format_word(const Word& w);

using WordMacros = std::map<std::string, Word>;

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar:  word := term+ ; term := atom ('^' signed-int)? ;
//           atom := 'a' | 'b' | macro-name | '(' word ')'
// Whitespace separates terms and is otherwise ignored. Macro names expand
// eagerly before free reduction. An identifier that is not a known macro
// is consumed one letter at a time when it starts with 'a' or 'b', so
// compact strings like "ba^-1b^-1a" parse as single-letter terms.
Word parse_word(const std::string& text, const WordMacros& macros = {});

// Formal Z-linear combination of freely reduced words.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  static GroupRingElement zero() { return {}; }
  static GroupRingElement one() { return from_word(Word{}); }
  static GroupRingElement from_word(const Word& w, long long coeff = 1);

  const std::map<Word, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  friend GroupRingElement operator*(long long s, const GroupRingElement& e);
  friend GroupRingElement operator*(const Word& w, const GroupRingElement& e);

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  void add_term(const Word& w, long long coeff);

 private:
  std::map<Word, long long> terms_;
};

// Fox free derivative with respect to g:
// d(g)/dg = 1, d(h)/dg = 0, d(g^-1)/dg = -g^-1, d(uv)/dg = du/dg + u dv/dg.
GroupRingElement fox_derivative(const Word& w, Gen g);

struct SL2Assignment {
  Mat2 a;
  Mat2 b;
};

Mat2 evaluate_word(const Word& w, const SL2Assignment& rho);
Mat2 evaluate(const GroupRingElement& e, const SL2Assignment& rho);

// Reidemeister torsion of a two-generator one-relator group by the
// determinant formula: removing generator g's column keeps the Fox
// derivative by the other generator and divides by det(rho(g) - I).
// Throws std::domain_error when that determinant is below 1e-10.
Complex johnson_torsion(const Word& relator, const SL2Assignment& rho, Gen removed);

}  // namespace torsionlab
