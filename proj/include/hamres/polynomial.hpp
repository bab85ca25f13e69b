#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hamres/monomial.hpp"
#include "hamres/rational.hpp"

namespace hamres {

struct Term {
  Monomial monomial;
  Rational coefficient;
};

// Sparse polynomial over Rational. Stored coefficients are never zero.
// Terms are kept in a fixed container order; the active term order is a
// parameter of leading(), to_string(), and the division routines.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }

  static Polynomial from_term(const Monomial& m, const Rational& c) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t index) {
    return from_term(Monomial::variable(nvars, index), 1);
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  Rational constant_term() const {
    auto it = terms_.find(Monomial(nvars_));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_)
      throw std::invalid_argument("term from different variable space");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Term leading(Ordering ord) const {
    if (terms_.empty()) throw std::invalid_argument("leading term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (compare(it->first, best->first, ord) > 0) best = it;
    return {best->first, best->second};
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
  }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial out(a.nvars_);
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial out(p.nvars_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : p.terms_) out.terms_.emplace(m, c * coeff);
    return out;
  }

  // c * m * p, the division-step workhorse.
  Polynomial times_term(const Monomial& m, const Rational& c) const {
    Polynomial out(nvars_);
    if (c == 0) return out;
    for (const auto& [mono, coeff] : terms_)
      out.terms_.emplace(mono * m, c * coeff);
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Rational eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars_)
      throw std::invalid_argument("evaluation point has wrong dimension");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (std::uint32_t e = 0; e < m.exponent(i); ++e) v *= point[i];
      total += v;
    }
    return total;
  }

  std::string to_string(Ordering ord = Ordering::Lex) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [ord](auto* x, auto* y) { return compare(x->first, y->first, ord) > 0; });
    std::ostringstream out;
    bool first = true;
    for (const auto* t : sorted) {
      const auto& [m, c] = *t;
      const bool negative = c < 0;
      if (first) {
        if (negative) out << '-';
        first = false;
      } else {
        out << (negative ? " - " : " + ");
      }
      const Rational mag = negative ? Rational(-c) : c;
      if (m.is_one()) {
        out << mag.get_str();
      } else {
        if (mag != 1) out << mag.get_str() << '*';
        bool first_factor = true;
        for (std::size_t i = 0; i < nvars_; ++i) {
          const std::uint32_t e = m.exponent(i);
          if (e == 0) continue;
          if (!first_factor) out << '*';
          first_factor = false;
          out << 'z' << (i + 1);
          if (e > 1) out << '^' << e;
        }
      }
    }
    return out.str();
  }

 private:
  std::size_t nvars_;
  std::map<Monomial, Rational> terms_;
};

namespace detail {

// Tokenizer for the polynomial grammar: integer/fraction coefficients,
// z<k> variables, ^ powers, * optional between factors.
struct PolyLexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char ch) {
    if (peek() != ch) return false;
    ++pos;
    return true;
  }

  std::string read_digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected digits in polynomial at position " + std::to_string(start));
    return std::string(text.substr(start, pos - start));
  }
};

}  // namespace detail

// Parses the grammar produced by Polynomial::to_string. Unknown variables
// (index beyond nvars) and malformed input raise invalid_argument.
inline Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  detail::PolyLexer lex{text};
  const VariableSpace space(nvars);
  Polynomial result(nvars);

  auto parse_exponent = [&]() -> std::uint32_t {
    const std::string digits = lex.read_digits();
    unsigned long value = std::stoul(digits);
    if (value > std::numeric_limits<std::uint32_t>::max())
      throw std::invalid_argument("exponent out of range: " + digits);
    return static_cast<std::uint32_t>(value);
  };

  auto parse_variable_factor = [&](Monomial& mono) {
    lex.consume('z');
    const std::string digits = lex.read_digits();
    auto index = space.index_of("z" + digits);
    if (!index)
      throw std::invalid_argument("unknown variable z" + digits + " (have " +
                                  std::to_string(nvars) + ")");
    std::uint32_t exp = 1;
    if (lex.consume('^')) exp = parse_exponent();
    const std::uint64_t sum = std::uint64_t{mono.exponent(*index)} + exp;
    if (sum > std::numeric_limits<std::uint32_t>::max())
      throw std::overflow_error("monomial exponent overflow in parse");
    mono.set_exponent(*index, static_cast<std::uint32_t>(sum));
  };

  int sign = 1;
  if (lex.consume('-')) sign = -1;
  else lex.consume('+');

  while (true) {
    if (lex.at_end()) throw std::invalid_argument("dangling sign in polynomial");
    Rational coeff = sign;
    Monomial mono(nvars);
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      const std::string num = lex.read_digits();
      Rational value = rational_from_string(num);
      if (lex.consume('/')) {
        const std::string den = lex.read_digits();
        if (rational_from_string(den) == 0)
          throw std::invalid_argument("zero denominator in coefficient");
        value /= rational_from_string(den);
      }
      coeff *= value;
      saw_factor = true;
      if (lex.consume('*') && lex.peek() != 'z')
        throw std::invalid_argument("expected variable after '*'");
    }
    while (lex.peek() == 'z') {
      parse_variable_factor(mono);
      saw_factor = true;
      if (lex.consume('*') && lex.peek() != 'z')
        throw std::invalid_argument("expected variable after '*'");
    }
    if (!saw_factor)
      throw std::invalid_argument("expected term in polynomial at position " +
                                  std::to_string(lex.pos));
    result.add_term(mono, coeff);

    if (lex.at_end()) break;
    if (lex.consume('+')) sign = 1;
    else if (lex.consume('-')) sign = -1;
    else
      throw std::invalid_argument("unexpected character '" +
                                  std::string(1, lex.peek()) +
                                  "' in polynomial at position " +
                                  std::to_string(lex.pos));
  }
  return result;
}

}  // namespace hamres
