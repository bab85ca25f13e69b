#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamres/division.hpp"
#include "hamres/polynomial.hpp"

namespace hamres {

struct GroebnerBasis {
  std::vector<Polynomial> polynomials;  // sorted by LM descending when reduced
  Ordering ordering = Ordering::Lex;
  bool reduced = false;
};

struct TrivialityVerdict {
  bool is_trivial_ideal = false;
};

struct GroebnerOptions {
  // Maximum number of S-polynomial reductions before giving up. Exceeding
  // it raises BudgetExhaustedError rather than returning a wrong basis.
  std::uint64_t step_budget = 1'000'000;
};

class BudgetExhaustedError : public std::runtime_error {
 public:
  BudgetExhaustedError(const std::string& what, std::uint64_t budget)
      : std::runtime_error(what + " exceeded its budget of " +
                           std::to_string(budget)),
        budget_(budget) {}

  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

namespace detail {

struct SPair {
  std::uint64_t lcm_degree;
  std::size_t i, j;
};

struct SPairLater {
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.lcm_degree != b.lcm_degree) return a.lcm_degree > b.lcm_degree;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  }
};

using SPairQueue = std::priority_queue<SPair, std::vector<SPair>, SPairLater>;

inline void push_pairs_with(SPairQueue& queue, const std::vector<Polynomial>& basis,
                            std::size_t j, Ordering ord) {
  const Monomial lm_j = basis[j].leading(ord).monomial;
  for (std::size_t i = 0; i < j; ++i) {
    const Monomial lcm = lcm_monomial(basis[i].leading(ord).monomial, lm_j);
    queue.push({lcm.degree(), i, j});
  }
}

// Core completion loop. `basis` already holds the seed polynomials and
// `queue` the pairs to process; both grow as S-polynomials survive.
inline void complete_basis(std::vector<Polynomial>& basis, SPairQueue& queue,
                           Ordering ord, const GroebnerOptions& opts) {
  std::uint64_t steps = 0;
  while (!queue.empty()) {
    const auto [deg, i, j] = queue.top();
    queue.pop();
    const Monomial lm_i = basis[i].leading(ord).monomial;
    const Monomial lm_j = basis[j].leading(ord).monomial;
    // First criterion: coprime leading monomials always reduce to zero.
    if (lcm_monomial(lm_i, lm_j) == lm_i * lm_j) continue;
    if (++steps > opts.step_budget)
      throw BudgetExhaustedError("basis completion", opts.step_budget);
    const Polynomial s = s_polynomial(basis[i], basis[j], ord);
    const Polynomial r = normal_form(s, basis, ord);
    if (r.is_zero()) continue;
    if (r.is_constant()) {
      // Unit ideal; nothing else can change the answer.
      basis.assign({Polynomial::constant(r.nvars(), 1)});
      return;
    }
    basis.push_back(r);
    push_pairs_with(queue, basis, basis.size() - 1, ord);
  }
}

// Drops zero inputs and runs one interreduction pass (each generator
// reduced by the others). Returns true if a unit was uncovered.
inline bool preprocess_generators(std::vector<Polynomial>& gens, Ordering ord) {
  std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
  for (const auto& g : gens)
    if (g.is_constant()) return true;
  for (std::size_t i = 0; i < gens.size();) {
    Polynomial g = std::move(gens[i]);
    std::vector<Polynomial> others;
    others.reserve(gens.size() - 1);
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    Polynomial r = others.empty() ? std::move(g) : normal_form(g, others, ord);
    if (r.is_zero()) {
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    } else if (r.is_constant()) {
      return true;
    } else {
      gens[i] = std::move(r);
      ++i;
    }
  }
  return false;
}

}  // namespace detail

// Minimizes then fully interreduces a basis satisfying Buchberger's
// criterion; the result is the unique reduced basis for the ordering,
// sorted by leading monomial descending.
inline GroebnerBasis reduce_basis(const GroebnerBasis& g) {
  const Ordering ord = g.ordering;
  std::vector<Polynomial> polys;
  for (const auto& p : g.polynomials)
    if (!p.is_zero()) polys.push_back(p);
  if (polys.empty()) throw std::invalid_argument("reducing an empty basis");

  // Minimal: drop any element whose LM is divisible by another's LM.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const Monomial lm = polys[i].leading(ord).monomial;
    bool redundant = false;
    for (std::size_t j = 0; j < polys.size() && !redundant; ++j) {
      if (j == i) continue;
      const Monomial other = polys[j].leading(ord).monomial;
      if (other == lm) {
        redundant = j < i;  // keep the first of equal leading monomials
      } else if (divides(other, lm)) {
        redundant = true;
      }
    }
    if (!redundant) minimal.push_back(polys[i]);
  }

  // Reduced: replace each element by its monic normal form w.r.t. the rest.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(j < i ? reduced[j] : minimal[j]);
    Polynomial r = others.empty() ? minimal[i] : normal_form(minimal[i], others, ord);
    reduced.push_back(Rational(1) / r.leading(ord).coefficient * r);
  }

  std::sort(reduced.begin(), reduced.end(), [ord](const Polynomial& x, const Polynomial& y) {
    return compare(x.leading(ord).monomial, y.leading(ord).monomial, ord) > 0;
  });
  return {std::move(reduced), ord, true};
}

// Buchberger's algorithm with normal selection (pairs popped by ascending
// LCM total degree) and the coprime-LM skip. Returns the reduced basis.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                                Ordering ord,
                                const GroebnerOptions& opts = {}) {
  std::vector<Polynomial> basis = generators;
  const bool unit = detail::preprocess_generators(basis, ord);
  if (basis.empty() && !unit) throw std::invalid_argument("empty generator set");
  if (unit) {
    const std::size_t nvars = generators.empty() ? 1 : generators.front().nvars();
    return {{Polynomial::constant(nvars, 1)}, ord, true};
  }

  detail::SPairQueue queue;
  for (std::size_t j = 1; j < basis.size(); ++j)
    detail::push_pairs_with(queue, basis, j, ord);
  detail::complete_basis(basis, queue, ord, opts);
  return reduce_basis({std::move(basis), ord, false});
}

// Incremental step: given an existing Groebner basis, adjoin new_polys and
// recomplete, seeding the pair queue only with pairs that involve a new
// polynomial. Pairs internal to `g` already reduce to zero and stay out.
inline GroebnerBasis extend_basis(const GroebnerBasis& g,
                                  const std::vector<Polynomial>& new_polys,
                                  const GroebnerOptions& opts = {}) {
  if (!g.reduced) throw std::invalid_argument("extend_basis needs a reduced basis");
  std::vector<Polynomial> additions;
  for (const auto& p : new_polys) {
    if (p.is_zero()) continue;
    Polynomial r = normal_form(p, g.polynomials, g.ordering);
    if (!r.is_zero()) additions.push_back(std::move(r));
  }
  if (additions.empty()) return g;
  for (const auto& p : additions)
    if (p.is_constant())
      return {{Polynomial::constant(p.nvars(), 1)}, g.ordering, true};

  std::vector<Polynomial> basis = g.polynomials;
  detail::SPairQueue queue;
  for (auto& p : additions) {
    basis.push_back(std::move(p));
    detail::push_pairs_with(queue, basis, basis.size() - 1, g.ordering);
  }
  detail::complete_basis(basis, queue, g.ordering, opts);
  return reduce_basis({std::move(basis), g.ordering, false});
}

inline TrivialityVerdict is_trivial(const GroebnerBasis& g) {
  if (!g.reduced) throw std::invalid_argument("triviality test needs a reduced basis");
  return {g.polynomials.size() == 1 && g.polynomials.front().is_constant() &&
          g.polynomials.front().constant_term() == 1};
}

// For f with no constant term and a reduced basis g != {1}: the normal form
// of f - c equals NF(f) - c, because no leading monomial of g divides a
// constant. One division serves every shift.
inline std::vector<Polynomial> shifted_reductions(const GroebnerBasis& g,
                                                  const Polynomial& f,
                                                  const std::vector<Rational>& shifts) {
  if (!g.reduced) throw std::invalid_argument("shifted_reductions needs a reduced basis");
  if (is_trivial(g).is_trivial_ideal)
    throw std::invalid_argument("shifted_reductions undefined for the unit ideal");
  if (f.constant_term() != 0)
    throw std::invalid_argument("shifted_reductions needs a constant-free polynomial");
  const Polynomial r = normal_form(f, g.polynomials, g.ordering);
  std::vector<Polynomial> out;
  out.reserve(shifts.size());
  for (const auto& c : shifts)
    out.push_back(r - Polynomial::constant(f.nvars(), c));
  return out;
}

// One polynomial per line, already LM-descending for reduced bases.
inline std::string dump_basis(const GroebnerBasis& g) {
  std::vector<const Polynomial*> order;
  order.reserve(g.polynomials.size());
  for (const auto& p : g.polynomials) order.push_back(&p);
  std::sort(order.begin(), order.end(), [&](const Polynomial* x, const Polynomial* y) {
    return compare(x->leading(g.ordering).monomial, y->leading(g.ordering).monomial,
                   g.ordering) > 0;
  });
  std::ostringstream out;
  for (const auto* p : order) out << p->to_string(g.ordering) << '\n';
  return out.str();
}

}  // namespace hamres
