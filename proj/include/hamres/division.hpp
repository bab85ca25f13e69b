#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "hamres/polynomial.hpp"

namespace hamres {

namespace detail {

// Mutable polynomial keyed descending under a fixed ordering, so the
// leading term is begin(). Used only inside division loops.
struct TermAbove {
  Ordering ord;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, ord) > 0;
  }
};

using WorkingPoly = std::map<Monomial, Rational, TermAbove>;

inline WorkingPoly to_working(const Polynomial& p, Ordering ord) {
  WorkingPoly w{TermAbove{ord}};
  for (const auto& [m, c] : p.terms()) w.emplace(m, c);
  return w;
}

inline void add_scaled(WorkingPoly& target, const Polynomial& p,
                       const Monomial& mono, const Rational& coeff) {
  for (const auto& [m, c] : p.terms()) {
    const Monomial shifted = m * mono;
    auto [it, inserted] = target.emplace(shifted, coeff * c);
    if (!inserted) {
      it->second += coeff * c;
      if (it->second == 0) target.erase(it);
    }
  }
}

}  // namespace detail

struct DivisionResult {
  std::vector<Polynomial> quotients;  // parallel to the divisor list
  Polynomial remainder;
};

// Multivariate division: f = sum(quotients[i] * divisors[i]) + remainder,
// with no monomial of the remainder divisible by any divisor's LM. When
// several divisors' leading monomials divide the current leading monomial,
// the lowest index wins, which makes the result deterministic even for
// divisor lists that are not Groebner bases.
inline DivisionResult reduce(const Polynomial& f,
                             const std::vector<Polynomial>& divisors,
                             Ordering ord) {
  std::vector<Term> lead;
  lead.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.is_zero()) throw std::invalid_argument("zero divisor");
    lead.push_back(d.leading(ord));
  }

  DivisionResult out{std::vector<Polynomial>(divisors.size(), Polynomial(f.nvars())),
                     Polynomial(f.nvars())};
  detail::WorkingPoly work = detail::to_working(f, ord);
  while (!work.empty()) {
    const auto& [lm, lc] = *work.begin();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!divides(lead[i].monomial, lm)) continue;
      const Monomial q_mono = quotient(lm, lead[i].monomial);
      const Rational q_coeff = lc / lead[i].coefficient;
      out.quotients[i].add_term(q_mono, q_coeff);
      detail::add_scaled(work, divisors[i], q_mono, -q_coeff);
      divided = true;
      break;
    }
    if (!divided) {
      out.remainder.add_term(lm, lc);
      work.erase(work.begin());
    }
  }
  return out;
}

// Remainder-only division; same reduction path as reduce() without
// quotient bookkeeping.
inline Polynomial normal_form(const Polynomial& f,
                              const std::vector<Polynomial>& divisors,
                              Ordering ord) {
  std::vector<Term> lead;
  lead.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.is_zero()) throw std::invalid_argument("zero divisor");
    lead.push_back(d.leading(ord));
  }

  Polynomial remainder(f.nvars());
  detail::WorkingPoly work = detail::to_working(f, ord);
  while (!work.empty()) {
    const auto& [lm, lc] = *work.begin();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!divides(lead[i].monomial, lm)) continue;
      detail::add_scaled(work, divisors[i], quotient(lm, lead[i].monomial),
                         -lc / lead[i].coefficient);
      divided = true;
      break;
    }
    if (!divided) {
      remainder.add_term(lm, lc);
      work.erase(work.begin());
    }
  }
  return remainder;
}

// Spoly(p1, p2) = (lcm/LT(p1))p1 - (lcm/LT(p2))p2; the shared leading
// monomial cancels by construction.
inline Polynomial s_polynomial(const Polynomial& p1, const Polynomial& p2,
                               Ordering ord) {
  if (p1.is_zero() || p2.is_zero())
    throw std::invalid_argument("s_polynomial of zero");
  const Term l1 = p1.leading(ord);
  const Term l2 = p2.leading(ord);
  const Monomial lcm = lcm_monomial(l1.monomial, l2.monomial);
  return p1.times_term(quotient(lcm, l1.monomial), 1 / l1.coefficient) -
         p2.times_term(quotient(lcm, l2.monomial), 1 / l2.coefficient);
}

}  // namespace hamres
