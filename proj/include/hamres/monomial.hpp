#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hamres {

// Names the variables z1..zn of a fixed polynomial ring.
class VariableSpace {
 public:
  explicit VariableSpace(std::size_t count) : count_(count) {}

  std::size_t count() const { return count_; }

  std::string name(std::size_t index) const {
    if (index >= count_) throw std::out_of_range("variable index");
    return "z" + std::to_string(index + 1);
  }

  // "z7" -> 6; rejects anything else (no leading zeros, no overflow past n).
  std::optional<std::size_t> index_of(std::string_view name) const {
    if (name.size() < 2 || name[0] != 'z') return std::nullopt;
    if (name[1] == '0') return std::nullopt;
    std::size_t value = 0;
    for (char ch : name.substr(1)) {
      if (ch < '0' || ch > '9') return std::nullopt;
      value = value * 10 + static_cast<std::size_t>(ch - '0');
      if (value > count_) return std::nullopt;
    }
    return value - 1;
  }

  friend bool operator==(const VariableSpace&, const VariableSpace&) = default;

 private:
  std::size_t count_;
};

// Monomial in a fixed number of variables, stored as an exponent vector.
// operator< is plain lexicographic on exponents (container ordering only);
// term order semantics live in compare().
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}

  static Monomial variable(std::size_t nvars, std::size_t index,
                           std::uint32_t exp = 1) {
    Monomial m(nvars);
    m.set_exponent(index, exp);
    return m;
  }

  std::size_t nvars() const { return exps_.size(); }

  std::uint32_t exponent(std::size_t i) const { return exps_.at(i); }

  void set_exponent(std::size_t i, std::uint32_t e) { exps_.at(i) = e; }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (std::uint32_t e : exps_) d += e;
    return d;
  }

  bool is_one() const {
    for (std::uint32_t e : exps_)
      if (e != 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_space(a, b);
    Monomial out(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
      const std::uint64_t sum =
          std::uint64_t{a.exps_[i]} + std::uint64_t{b.exps_[i]};
      if (sum > std::numeric_limits<std::uint32_t>::max())
        throw std::overflow_error("monomial exponent overflow");
      out.exps_[i] = static_cast<std::uint32_t>(sum);
    }
    return out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  // Container ordering for canonical storage, not a term order.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.exps_ < b.exps_;
  }

 private:
  static void check_same_space(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
      throw std::invalid_argument("monomials from different variable spaces");
  }

  friend bool divides(const Monomial&, const Monomial&);
  friend Monomial quotient(const Monomial&, const Monomial&);
  friend Monomial lcm_monomial(const Monomial&, const Monomial&);

  std::vector<std::uint32_t> exps_;
};

inline bool divides(const Monomial& a, const Monomial& b) {
  Monomial::check_same_space(a, b);
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.exps_[i] > b.exps_[i]) return false;
  return true;
}

// b / a; requires divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial::check_same_space(a, b);
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a.exps_[i] > b.exps_[i])
      throw std::invalid_argument("monomial quotient not divisible");
    out.exps_[i] = b.exps_[i] - a.exps_[i];
  }
  return out;
}

inline Monomial lcm_monomial(const Monomial& a, const Monomial& b) {
  Monomial::check_same_space(a, b);
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i)
    out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return out;
}

enum class Ordering { Lex, Grlex, Grevlex };

inline std::string_view ordering_name(Ordering ord) {
  switch (ord) {
    case Ordering::Lex:
      return "lex";
    case Ordering::Grlex:
      return "grlex";
    case Ordering::Grevlex:
      return "grevlex";
  }
  throw std::invalid_argument("bad ordering");
}

inline std::optional<Ordering> ordering_from_name(std::string_view name) {
  if (name == "lex") return Ordering::Lex;
  if (name == "grlex") return Ordering::Grlex;
  if (name == "grevlex") return Ordering::Grevlex;
  return std::nullopt;
}

// Term order comparison. Lex: first differing exponent decides, larger wins.
// Grlex: total degree, then lex. Grevlex: total degree, then the last
// differing exponent decides, smaller wins.
inline std::strong_ordering compare(const Monomial& a, const Monomial& b,
                                    Ordering ord) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("monomials from different variable spaces");
  if (ord != Ordering::Lex) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  }
  if (ord == Ordering::Grevlex) {
    for (std::size_t i = a.nvars(); i-- > 0;)
      if (a.exponent(i) != b.exponent(i))
        return b.exponent(i) <=> a.exponent(i);
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) <=> b.exponent(i);
  return std::strong_ordering::equal;
}

}  // namespace hamres
