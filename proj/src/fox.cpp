#include "torsionlab/fox.hpp"

#include <cctype>

namespace torsionlab {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().g == l.g && out.back().e == -l.e) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
  ls_.reserve(letters.size());
  for (const Letter& l : letters) push_reduced(ls_, l);
}

Word Word::operator*(const Word& o) const {
  std::vector<Letter> out = ls_;
  for (const Letter& l : o.ls_) push_reduced(out, l);
  Word w;
  w.ls_ = std::move(out);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.ls_.reserve(ls_.size());
  for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) w.ls_.push_back(Letter{it->g, -it->e});
  return w;  // inverse of a reduced word is reduced
}

Word Word::pow(int k) const {
  if (k == 0 || empty()) return Word{};
  const Word base = k > 0 ? *this : inverse();
  Word acc;
  for (int i = 0; i < std::abs(k); ++i) acc = acc * base;
  return acc;
}

Word Word::reversed() const {
  Word w;
  w.ls_.assign(ls_.rbegin(), ls_.rend());
  return w;  // reversal of a reduced word is reduced
}

Word reverse_word(const Word& w) { return w.reversed(); }

std::string format_word(const Word& w) {
  if (w.empty()) return "a^0";
  std::string out;
  const auto& ls = w.letters();
  size_t i = 0;
  while (i < ls.size()) {
    size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const int exp = ls[i].e * static_cast<int>(j - i);
    if (!out.empty()) out += ' ';
    out += gen_char(ls[i].g);
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

namespace {

struct Parser {
  const std::string& text;
  const WordMacros& macros;
  size_t pos = 0;

  explicit Parser(const std::string& t, const WordMacros& m) : text(t), macros(m) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() { return text[pos]; }

  int parse_exponent() {
    ++pos;  // consume '^'
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    size_t digits_from = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_from) throw ParseError("expected integer exponent after '^'", start);
    try {
      return std::stoi(text.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      throw ParseError("exponent out of range", start);
    }
  }

  Word parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    const char c = peek();
    if (c == '(') {
      const size_t open = pos;
      ++pos;
      Word inner = parse_word_body(true);
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') throw ParseError("unbalanced '('", open);
      ++pos;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const size_t start = pos;
      size_t end = pos;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_')) {
        ++end;
      }
      const std::string ident = text.substr(start, end - start);
      if (auto it = macros.find(ident); it != macros.end()) {
        pos = end;
        return it->second;
      }
      if (c == 'a' || c == 'b') {
        ++pos;  // single generator letter; the rest of the run parses on its own
        return Word::gen(c == 'a' ? Gen::A : Gen::B);
      }
      throw ParseError("unknown macro name '" + ident + "'", start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }

  Word parse_term() {
    Word atom = parse_atom();
    if (pos < text.size() && text[pos] == '^') {
      const int e = parse_exponent();
      return atom.pow(e);
    }
    return atom;
  }

  Word parse_word_body(bool inside_parens) {
    Word acc;
    bool any = false;
    while (!at_end()) {
      if (inside_parens && peek() == ')') break;
      acc = acc * parse_term();
      any = true;
    }
    if (!any) throw ParseError("empty word", pos);
    return acc;
  }
};

}  // namespace

Word parse_word(const std::string& text, const WordMacros& macros) {
  Parser p(text, macros);
  Word w = p.parse_word_body(false);
  if (!p.at_end()) throw ParseError("trailing input", p.pos);
  return w;
}

GroupRingElement GroupRingElement::from_word(const Word& w, long long coeff) {
  GroupRingElement e;
  e.add_term(w, coeff);
  return e;
}

void GroupRingElement::add_term(const Word& w, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  GroupRingElement r;
  for (const auto& [wl, cl] : terms_)
    for (const auto& [wr, cr] : o.terms_) r.add_term(wl * wr, cl * cr);
  return r;
}

GroupRingElement operator*(long long s, const GroupRingElement& e) {
  GroupRingElement r;
  if (s == 0) return r;
  for (const auto& [w, c] : e.terms()) r.add_term(w, s * c);
  return r;
}

GroupRingElement operator*(const Word& w, const GroupRingElement& e) {
  GroupRingElement r;
  for (const auto& [t, c] : e.terms()) r.add_term(w * t, c);
  return r;
}

GroupRingElement fox_derivative(const Word& w, Gen g) {
  GroupRingElement result;
  Word prefix;
  for (const Letter& l : w.letters()) {
    if (l.g == g) {
      if (l.e == 1) {
        result.add_term(prefix, 1);
      } else {
        result.add_term(prefix * Word::gen(g, -1), -1);
      }
    }
    prefix = prefix * Word({l});
  }
  return result;
}

Mat2 evaluate_word(const Word& w, const SL2Assignment& rho) {
  Mat2 acc = Mat2::identity();
  for (const Letter& l : w.letters()) {
    const Mat2& m = (l.g == Gen::A) ? rho.a : rho.b;
    acc = acc * (l.e == 1 ? m : m.inverse());
  }
  return acc;
}

Mat2 evaluate(const GroupRingElement& e, const SL2Assignment& rho) {
  Mat2 acc;  // zero matrix
  for (const auto& [w, c] : e.terms()) {
    acc = acc + Complex(double(c)) * evaluate_word(w, rho);
  }
  return acc;
}

Complex johnson_torsion(const Word& relator, const SL2Assignment& rho, Gen removed) {
  const Mat2 rg = (removed == Gen::A) ? rho.a : rho.b;
  const Complex denom = (rg - Mat2::identity()).det();
  if (std::abs(denom) < 1e-10) {
    throw std::domain_error("johnson_torsion: parabolic meridian, torsion formula inapplicable");
  }
  const GroupRingElement deriv = fox_derivative(relator, other(removed));
  return evaluate(deriv, rho).det() / denom;
}

}  // namespace torsionlab
