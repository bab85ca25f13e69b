#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hamres/log.hpp"
#include "hamres/resolver.hpp"

namespace hamres {

// Deterministic randomness: mt19937_64 has a standard-specified output
// sequence, and the rejection sampler and Fisher-Yates shuffle below avoid
// the library distributions, whose results vary across implementations.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n) without modulo bias.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below(0)");
    constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t m = max % n;
    if (m + 1 == n) return engine_() % n;
    std::uint64_t x = engine_();
    while (x >= max - m) x = engine_();
    return x % n;
  }

  template <class T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i)
      std::swap(values[i - 1], values[static_cast<std::size_t>(next_below(i))]);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

class NotResolvingError : public std::runtime_error {
 public:
  explicit NotResolvingError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Row set kept in echelon form for cheap rank-increase queries.
class IncrementalRank {
 public:
  explicit IncrementalRank(std::size_t cols) : cols_(cols) {}

  std::size_t rank() const { return rows_.size(); }

  // Reduces the row against the stored basis; keeps it when independent.
  bool add(std::vector<Rational> row) {
    if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
    for (const auto& [pivot, basis_row] : rows_) {
      if (row[pivot] == 0) continue;
      const Rational factor = row[pivot];
      for (std::size_t c = pivot; c < cols_; ++c) row[c] -= factor * basis_row[c];
    }
    std::size_t pivot = cols_;
    for (std::size_t c = 0; c < cols_; ++c)
      if (row[c] != 0) {
        pivot = c;
        break;
      }
    if (pivot == cols_) return false;
    const Rational inv = 1 / row[pivot];
    for (std::size_t c = pivot; c < cols_; ++c) row[c] *= inv;
    rows_.emplace_back(pivot, std::move(row));
    return true;
  }

 private:
  std::size_t cols_;
  std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

inline std::vector<Rational> one_hot_row(const HammingGraph& g, const Vertex& v) {
  const std::vector<int> vec = one_hot(g, v).vectorization();
  std::vector<Rational> row(vec.size());
  for (std::size_t c = 0; c < vec.size(); ++c) row[c] = vec[c];
  return row;
}

// Keeps the earliest subsequence of vertices whose one-hot rows are
// linearly independent; dropped rows leave the kernel of A unchanged, so
// resolvability is unaffected.
inline std::vector<Vertex> independent_subset(const HammingGraph& g,
                                              const std::vector<Vertex>& r) {
  IncrementalRank tracker(g.nvars());
  std::vector<Vertex> kept;
  for (const auto& v : r) {
    g.require_vertex(v);
    if (tracker.add(one_hot_row(g, v))) {
      kept.push_back(v);
    } else {
      log::debug("dropping rank-redundant vertex " + format_vertex(g, v));
    }
  }
  return kept;
}

}  // namespace detail

// Removes vertices one at a time in shuffled order, keeping a removal only
// if the remainder still resolves. Linearly dependent rows go first without
// any checks. The result is inclusion-minimal: once a vertex fails to come
// out, shrinking the set further can never make it removable.
inline std::vector<Vertex> reduce_top_down(const HammingGraph& g,
                                           const std::vector<Vertex>& r,
                                           RandomSource& rng,
                                           const CheckOptions& opts = {}) {
  CheckSession session(g, opts);
  std::vector<Vertex> set = detail::independent_subset(g, r);
  if (!session.check(set).resolving)
    throw NotResolvingError("input set does not resolve the graph");
  std::vector<Vertex> order = set;
  rng.shuffle(order);
  for (const auto& v : order) {
    std::vector<Vertex> smaller;
    smaller.reserve(set.size() - 1);
    for (const auto& u : set)
      if (!(u == v)) smaller.push_back(u);
    if (session.check(smaller).resolving) set = std::move(smaller);
  }
  return set;
}

// Rebuilds a resolving subset bottom-up: vertices are drawn in shuffled
// order and accumulated until the prefix resolves. Exhausting the stream
// means the input itself never resolved.
inline std::vector<Vertex> reduce_generative(const HammingGraph& g,
                                             const std::vector<Vertex>& r,
                                             RandomSource& rng,
                                             const CheckOptions& opts = {}) {
  CheckSession session(g, opts);
  std::vector<Vertex> order = detail::independent_subset(g, r);
  rng.shuffle(order);
  std::vector<Vertex> out;
  out.reserve(order.size());
  for (const auto& v : order) {
    out.push_back(v);
    if (session.check(out).resolving) return out;
  }
  throw NotResolvingError("input set does not resolve the graph");
}

// Draws unvisited vertices uniformly at random, admitting only those that
// increase rank(A), until the set resolves. Rank can only reach the rank
// of the full vertex set, at which point the kernel is the full-set kernel
// and the check accepts, so termination needs no full-rank fallback.
inline std::vector<Vertex> generate_resolving(const HammingGraph& g,
                                              RandomSource& rng,
                                              const CheckOptions& opts = {}) {
  CheckSession session(g, opts);
  const std::uint64_t n = g.vertex_count();
  if (n > (std::uint64_t{1} << 24))
    throw std::overflow_error("refusing to sample from more than 2^24 vertices");
  std::vector<std::uint64_t> stream(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) stream[static_cast<std::size_t>(i)] = i;
  rng.shuffle(stream);

  detail::IncrementalRank tracker(g.nvars());
  std::vector<Vertex> set;
  std::size_t pos = 0;
  while (true) {
    if (!set.empty() && session.check(set).resolving) return set;
    bool admitted = false;
    while (pos < stream.size()) {
      Vertex v = g.vertex_at(stream[pos++]);
      if (tracker.add(detail::one_hot_row(g, v))) {
        set.push_back(std::move(v));
        admitted = true;
        break;
      }
    }
    if (!admitted)
      throw std::logic_error("vertex stream exhausted before resolving");
  }
}

}  // namespace hamres
