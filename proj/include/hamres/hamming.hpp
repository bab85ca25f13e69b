#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamres/log.hpp"

namespace hamres {

// Word of length k over the alphabet {0..a-1}. Comparison is lexicographic
// on symbols, which matches vertex-index order.
struct Vertex {
  std::vector<int> symbols;

  auto operator<=>(const Vertex&) const = default;
};

// H_{k,a}: all length-k words over an a-symbol alphabet; graph distance
// equals Hamming distance.
class HammingGraph {
 public:
  HammingGraph(std::size_t k, std::size_t a) : k_(k), a_(a) {
    if (k < 1) throw std::invalid_argument("word length must be at least 1");
    if (a < 2) throw std::invalid_argument("alphabet size must be at least 2");
  }

  std::size_t k() const { return k_; }
  std::size_t a() const { return a_; }
  std::size_t nvars() const { return a_ * k_; }

  std::uint64_t vertex_count() const {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      if (n > std::numeric_limits<std::uint64_t>::max() / a_)
        throw std::overflow_error("vertex count overflows 64 bits");
      n *= a_;
    }
    return n;
  }

  bool contains(const Vertex& v) const {
    if (v.symbols.size() != k_) return false;
    for (int s : v.symbols)
      if (s < 0 || static_cast<std::size_t>(s) >= a_) return false;
    return true;
  }

  // Index order: first symbol most significant, so ascending index is
  // ascending lexicographic order.
  Vertex vertex_at(std::uint64_t index) const {
    Vertex v;
    v.symbols.assign(k_, 0);
    for (std::size_t j = k_; j-- > 0;) {
      v.symbols[j] = static_cast<int>(index % a_);
      index /= a_;
    }
    if (index != 0) throw std::out_of_range("vertex index out of range");
    return v;
  }

  std::uint64_t index_of(const Vertex& v) const {
    require_vertex(v);
    std::uint64_t index = 0;
    for (int s : v.symbols) index = index * a_ + static_cast<std::uint64_t>(s);
    return index;
  }

  std::vector<Vertex> all_vertices() const {
    const std::uint64_t n = vertex_count();
    if (n > (std::uint64_t{1} << 24))
      throw std::overflow_error("refusing to materialize more than 2^24 vertices");
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(vertex_at(i));
    return out;
  }

  void require_vertex(const Vertex& v) const {
    if (!contains(v))
      throw std::invalid_argument("vertex does not belong to the graph");
  }

  friend bool operator==(const HammingGraph&, const HammingGraph&) = default;

 private:
  std::size_t k_;
  std::size_t a_;
};

inline std::size_t hamming_distance(const Vertex& x, const Vertex& y) {
  if (x.symbols.size() != y.symbols.size())
    throw std::invalid_argument("hamming distance of unequal lengths");
  std::size_t d = 0;
  for (std::size_t j = 0; j < x.symbols.size(); ++j)
    if (x.symbols[j] != y.symbols[j]) ++d;
  return d;
}

// a x k binary matrix with exactly one 1 per column: row i marks the
// positions where the word carries symbol i.
class OneHot {
 public:
  OneHot(const HammingGraph& g, const Vertex& v) : a_(g.a()), k_(g.k()) {
    g.require_vertex(v);
    bits_.assign(a_ * k_, 0);
    for (std::size_t j = 0; j < k_; ++j)
      bits_[static_cast<std::size_t>(v.symbols[j]) * k_ + j] = 1;
  }

  std::size_t rows() const { return a_; }
  std::size_t cols() const { return k_; }

  int at(std::size_t symbol, std::size_t position) const {
    return bits_.at(symbol * k_ + position);
  }

  // Column-wise vectorization with the symbol index varying fastest:
  // entry j*a + i is matrix entry (i, j). Block j of length a describes
  // position j of the word.
  std::vector<int> vectorization() const {
    std::vector<int> vec(a_ * k_, 0);
    for (std::size_t j = 0; j < k_; ++j)
      for (std::size_t i = 0; i < a_; ++i) vec[j * a_ + i] = at(i, j);
    return vec;
  }

  Vertex decode() const {
    Vertex v;
    v.symbols.assign(k_, 0);
    for (std::size_t j = 0; j < k_; ++j)
      for (std::size_t i = 0; i < a_; ++i)
        if (at(i, j)) v.symbols[j] = static_cast<int>(i);
    return v;
  }

 private:
  std::size_t a_, k_;
  std::vector<std::uint8_t> bits_;
};

inline OneHot one_hot(const HammingGraph& g, const Vertex& v) {
  return OneHot(g, v);
}

// Difference of two vectorized one-hot encodings: per length-a block,
// either all zeros or exactly one +1 and one -1.
struct AdmissibleVector {
  std::vector<int> z;

  friend bool operator==(const AdmissibleVector&, const AdmissibleVector&) = default;
};

inline bool is_admissible(const HammingGraph& g, const std::vector<int>& z) {
  if (z.size() != g.nvars()) return false;
  for (std::size_t b = 0; b < g.k(); ++b) {
    int plus = 0, minus = 0;
    for (std::size_t i = 0; i < g.a(); ++i) {
      const int v = z[b * g.a() + i];
      if (v == 1) ++plus;
      else if (v == -1) ++minus;
      else if (v != 0) return false;
    }
    if (!((plus == 0 && minus == 0) || (plus == 1 && minus == 1))) return false;
  }
  return true;
}

// Rebuilds a colliding vertex pair from a nonzero admissible vector
// z = X - Y: a +1/-1 block names the two differing symbols, a zero block
// gets a shared symbol. Any reference set whose one-hot rows annihilate z
// then sees equal distance vectors for the pair. The smaller vertex comes
// first.
inline std::pair<Vertex, Vertex> admissible_to_pair(const HammingGraph& g,
                                                    const std::vector<int>& z) {
  if (!is_admissible(g, z))
    throw std::invalid_argument("vector is not admissible");
  Vertex x, y;
  x.symbols.assign(g.k(), 0);
  y.symbols.assign(g.k(), 0);
  bool nonzero = false;
  for (std::size_t b = 0; b < g.k(); ++b)
    for (std::size_t i = 0; i < g.a(); ++i) {
      const int v = z[b * g.a() + i];
      if (v == 1) x.symbols[b] = static_cast<int>(i);
      if (v == -1) y.symbols[b] = static_cast<int>(i);
      if (v != 0) nonzero = true;
    }
  if (!nonzero)
    throw std::invalid_argument("zero vector names no vertex pair");
  if (y < x) std::swap(x, y);
  return {std::move(x), std::move(y)};
}

enum class CheckMethod { BruteForce, Rank, Groebner, Enumeration, Hypercube };

inline std::string_view method_name(CheckMethod m) {
  switch (m) {
    case CheckMethod::BruteForce:
      return "bruteforce";
    case CheckMethod::Rank:
      return "rank";
    case CheckMethod::Groebner:
      return "groebner";
    case CheckMethod::Enumeration:
      return "enumeration";
    case CheckMethod::Hypercube:
      return "hypercube";
  }
  throw std::invalid_argument("bad method");
}

struct ResolvabilityVerdict {
  bool resolving = false;
  CheckMethod method = CheckMethod::BruteForce;
  // At most one witness kind is set, and only for negative verdicts:
  // oracles report a vertex pair with equal distance vectors, enumeration
  // reports a nonzero admissible kernel vector.
  std::optional<std::pair<Vertex, Vertex>> unresolved_pair;
  std::optional<AdmissibleVector> kernel_witness;
};

// Compares all a^k distance vectors pairwise. The reported witness is the
// lexicographically smallest unresolved pair.
inline ResolvabilityVerdict brute_force_is_resolving(const HammingGraph& g,
                                                     const std::vector<Vertex>& r) {
  for (const auto& v : r) g.require_vertex(v);
  const std::uint64_t n = g.vertex_count();
  std::map<std::vector<int>, std::uint64_t> first_seen;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> best;
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    const Vertex v = g.vertex_at(idx);
    std::vector<int> dv;
    dv.reserve(r.size());
    for (const auto& ref : r)
      dv.push_back(static_cast<int>(hamming_distance(v, ref)));
    auto [it, inserted] = first_seen.emplace(std::move(dv), idx);
    if (!inserted) {
      const std::pair<std::uint64_t, std::uint64_t> pair{it->second, idx};
      if (!best || pair < *best) best = pair;
    }
  }
  ResolvabilityVerdict verdict;
  verdict.method = CheckMethod::BruteForce;
  if (best) {
    verdict.resolving = false;
    verdict.unresolved_pair = {g.vertex_at(best->first), g.vertex_at(best->second)};
  } else {
    verdict.resolving = true;
  }
  return verdict;
}

struct MetricDimensionResult {
  std::size_t dimension = 0;
  std::vector<Vertex> witness;
};

struct MetricDimensionOptions {
  std::uint64_t subset_budget = 10'000'000;
};

class SearchBudgetError : public std::runtime_error {
 public:
  explicit SearchBudgetError(std::uint64_t budget)
      : std::runtime_error("subset search exceeds budget of " +
                           std::to_string(budget)) {}
};

namespace detail {

// C(n, r) saturating at the cap instead of overflowing.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t r,
                                     std::uint64_t cap) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    if (result > cap / (n - r + i)) return cap + 1;
    result = result * (n - r + i) / i;
  }
  return result;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t s = idx.size();
  for (std::size_t pos = s; pos-- > 0;) {
    if (idx[pos] < n - (s - pos)) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < s; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Smallest s <= max_size such that some s-subset resolves, found by
// exhaustive subset scan in combination order; nullopt if none does.
// Refuses up front when the subset count exceeds the budget.
inline std::optional<MetricDimensionResult> metric_dimension_exhaustive(
    const HammingGraph& g, std::size_t max_size,
    const MetricDimensionOptions& opts = {}) {
  const std::uint64_t n = g.vertex_count();
  std::uint64_t total = 0;
  for (std::size_t s = 1; s <= max_size; ++s) {
    total += detail::binomial_capped(n, s, opts.subset_budget);
    if (total > opts.subset_budget) throw SearchBudgetError(opts.subset_budget);
  }

  const std::vector<Vertex> vertices = g.all_vertices();
  for (std::size_t s = 1; s <= max_size && s <= vertices.size(); ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      std::vector<Vertex> subset;
      subset.reserve(s);
      for (std::size_t i : idx) subset.push_back(vertices[i]);
      if (brute_force_is_resolving(g, subset).resolving)
        return MetricDimensionResult{s, std::move(subset)};
    } while (detail::next_combination(idx, vertices.size()));
  }
  return std::nullopt;
}

using DistanceVector = std::vector<int>;

// Coordinate i of row j is the Hamming distance from inputs[j] to r[i].
// Injective over distinct inputs whenever r is resolving.
inline std::vector<DistanceVector> embed(const HammingGraph& g,
                                         const std::vector<Vertex>& r,
                                         const std::vector<Vertex>& inputs) {
  for (const auto& v : r) g.require_vertex(v);
  std::vector<DistanceVector> out;
  out.reserve(inputs.size());
  for (const auto& v : inputs) {
    g.require_vertex(v);
    DistanceVector dv;
    dv.reserve(r.size());
    for (const auto& ref : r)
      dv.push_back(static_cast<int>(hamming_distance(v, ref)));
    out.push_back(std::move(dv));
  }
  return out;
}

// Textual vertex form: digit string for a <= 10, comma-separated symbol
// values for larger alphabets.
inline std::string format_vertex(const HammingGraph& g, const Vertex& v) {
  g.require_vertex(v);
  std::string out;
  if (g.a() <= 10) {
    for (int s : v.symbols) out += static_cast<char>('0' + s);
  } else {
    for (std::size_t j = 0; j < v.symbols.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(v.symbols[j]);
    }
  }
  return out;
}

inline Vertex parse_vertex(const HammingGraph& g, std::string_view text) {
  Vertex v;
  if (g.a() <= 10) {
    for (char ch : text) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("bad symbol '" + std::string(1, ch) +
                                    "' in vertex \"" + std::string(text) + "\"");
      v.symbols.push_back(ch - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t comma = text.find(',', start);
      const std::string_view tok =
          text.substr(start, comma == std::string_view::npos ? comma : comma - start);
      if (tok.empty())
        throw std::invalid_argument("empty symbol in vertex \"" + std::string(text) + "\"");
      int value = 0;
      for (char ch : tok) {
        if (ch < '0' || ch > '9')
          throw std::invalid_argument("bad symbol \"" + std::string(tok) +
                                      "\" in vertex \"" + std::string(text) + "\"");
        value = value * 10 + (ch - '0');
        if (value > 1'000'000) throw std::invalid_argument("symbol value out of range");
      }
      v.symbols.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (v.symbols.size() != g.k())
    throw std::invalid_argument("vertex \"" + std::string(text) + "\" has length " +
                                std::to_string(v.symbols.size()) + ", expected " +
                                std::to_string(g.k()));
  if (!g.contains(v))
    throw std::invalid_argument("vertex \"" + std::string(text) +
                                "\" has symbols outside the alphabet");
  return v;
}

// One vertex per line; '#' starts a comment; blank lines ignored.
inline std::vector<Vertex> parse_vertex_set(const HammingGraph& g, std::istream& in) {
  std::vector<Vertex> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    try {
      out.push_back(parse_vertex(g, std::string_view(line).substr(begin, end - begin + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline void write_vertex_set(const HammingGraph& g, const std::vector<Vertex>& set,
                             std::ostream& out) {
  for (const auto& v : set) out << format_vertex(g, v) << '\n';
}

}  // namespace hamres
