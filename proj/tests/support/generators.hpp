#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "balcx/complex.hpp"

namespace balcx::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// A random c-multiset over [labels]; repeated labels only when allowed.
inline Simplex random_simplex(Rng& rng, int labels, std::size_t c, bool singular) {
  std::vector<int> entries;
  if (singular) {
    for (std::size_t i = 0; i < c; ++i) entries.push_back(uniform(rng, 1, labels));
  } else {
    std::vector<int> pool(labels);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    entries.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(c));
  }
  return Simplex(std::move(entries));
}

/// Up to `count` distinct simplices (fewer when collisions exhaust retries).
inline Complex random_complex(Rng& rng, int n, std::size_t c, std::size_t count, bool singular) {
  std::set<Simplex> simplices;
  for (std::size_t tries = 0; simplices.size() < count && tries < 20 * count; ++tries) {
    simplices.insert(random_simplex(rng, n - 1, c, singular));
  }
  return Complex(n, std::vector<Simplex>(simplices.begin(), simplices.end()));
}

inline Scalar random_nonzero(Rng& rng, FieldSpec field, int bound = 5) {
  while (true) {
    const int v = uniform(rng, -bound, bound);
    const Scalar s = Scalar::from_integer(v, field);
    if (!s.is_zero()) return s;
  }
}

inline std::vector<Scalar> random_weights(Rng& rng, std::size_t count, FieldSpec field) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_nonzero(rng, field));
  return out;
}

/// Applies a random permutation of [labels] to every simplex.
inline Complex random_relabel(Rng& rng, const Complex& c, int labels) {
  std::vector<int> perm(labels + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<Simplex> out;
  for (const auto& s : c.simplices()) {
    std::vector<int> entries;
    for (int v : s.entries()) entries.push_back(perm[v]);
    out.emplace_back(std::move(entries));
  }
  return Complex(c.n(), std::move(out));
}

using EdgeList = std::vector<std::pair<int, int>>;

inline Complex graph(int n, const EdgeList& edges) {
  std::vector<Simplex> simplices;
  for (auto [a, b] : edges) simplices.push_back(Simplex{a, b});
  return Complex(n, std::move(simplices));
}

/// A cycle of `length` edges through `start` and fresh vertices; length 1 is a loop.
inline void append_cycle(EdgeList& edges, int start, int length, int& next_vertex) {
  if (length == 1) {
    edges.emplace_back(start, start);
    return;
  }
  int prev = start;
  for (int i = 1; i < length; ++i) {
    edges.emplace_back(prev, next_vertex);
    prev = next_vertex++;
  }
  edges.emplace_back(prev, start);
}

inline void append_path(EdgeList& edges, int from, int to, int length, int& next_vertex) {
  int prev = from;
  for (int i = 1; i < length; ++i) {
    edges.emplace_back(prev, next_vertex);
    prev = next_vertex++;
  }
  edges.emplace_back(prev, to);
}

/// Graphs near the minimal patterns: cycles, figure-eights, dumbbells, thetas
/// and pairs of disjoint cycles on at most max_vertices vertices, sometimes
/// with one extra random edge. Labels are shuffled.
inline Complex structured_graph(Rng& rng, int max_vertices) {
  while (true) {
    EdgeList edges;
    int next = 2;
    const int kind = uniform(rng, 0, 4);
    if (kind == 0) {
      append_cycle(edges, 1, uniform(rng, 1, max_vertices), next);
    } else if (kind == 1) {
      append_cycle(edges, 1, uniform(rng, 1, 5), next);
      append_cycle(edges, 1, uniform(rng, 1, 5), next);
    } else if (kind == 2) {
      append_cycle(edges, 1, uniform(rng, 1, 4), next);
      const int other = next++;
      append_path(edges, 1, other, uniform(rng, 1, 3), next);
      append_cycle(edges, other, uniform(rng, 1, 4), next);
    } else if (kind == 3) {
      const int other = next++;
      for (int k = 0; k < 3; ++k) append_path(edges, 1, other, uniform(rng, 1, 3), next);
    } else {
      append_cycle(edges, 1, uniform(rng, 1, 4), next);
      const int second = next++;
      append_cycle(edges, second, uniform(rng, 1, 4), next);
    }
    const int vertices = next - 1;
    if (vertices > max_vertices) continue;
    if (coin(rng, 0.2)) {
      int a = uniform(rng, 1, vertices), b = uniform(rng, 1, vertices);
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::set<std::pair<int, int>> unique;
    for (auto [a, b] : edges) unique.emplace(std::min(a, b), std::max(a, b));
    if (unique.size() != edges.size()) continue;  // a repeated edge is not a simplicial set
    return random_relabel(rng, graph(max_vertices + 1, edges), max_vertices);
  }
}

/// Every slot (a <= b) in [vertices] kept independently with probability p.
inline std::optional<Complex> uniform_graph(Rng& rng, int vertices, double p) {
  EdgeList edges;
  for (int a = 1; a <= vertices; ++a) {
    for (int b = a; b <= vertices; ++b) {
      if (coin(rng, p)) edges.emplace_back(a, b);
    }
  }
  if (edges.empty()) return std::nullopt;
  return graph(vertices + 1, edges);
}

}  // namespace balcx::testing
