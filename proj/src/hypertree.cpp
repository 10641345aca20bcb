#include "balcx/hypertree.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "balcx/errors.hpp"

namespace balcx {

namespace {

constexpr int kMaxVertices = 30;
constexpr std::size_t kMaxConvexityParts = 20;

std::uint32_t to_mask(const std::vector<int>& part) {
  std::uint32_t mask = 0;
  for (int v : part) mask |= std::uint32_t{1} << v;
  return mask;
}

std::vector<int> from_mask(std::uint32_t mask) {
  std::vector<int> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

int excess(std::uint32_t mask) { return std::popcount(mask) - 2; }

// Convexity over all S with 1 < |S| < d.
bool convex(const std::vector<std::uint32_t>& parts) {
  const std::size_t d = parts.size();
  if (d < 3) return true;
  const std::uint32_t full = (std::uint32_t{1} << d) - 1;
  for (std::uint32_t s = 1; s < full; ++s) {
    if (std::popcount(s) < 2) continue;
    std::uint32_t uni = 0;
    int sum = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (s & (std::uint32_t{1} << i)) {
        uni |= parts[i];
        sum += excess(parts[i]);
      }
    }
    if (excess(uni) <= sum) return false;
  }
  return true;
}

std::vector<std::vector<int>> sorted_parts(std::vector<std::vector<int>> parts) {
  std::sort(parts.begin(), parts.end());
  return parts;
}

// Vertex colors from alternating refinement of vertices and parts: a vertex
// starts at its valence, a part at its size, and each is repeatedly extended by
// the sorted colors of its incident partners. Colors are isomorphism-invariant.
std::vector<int> refined_colors(const Hypertree& h) {
  const auto& parts = h.parts();
  std::vector<std::vector<std::size_t>> incident(h.n() + 1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int v : parts[i]) incident[v].push_back(i);
  }
  auto relabel = [](const auto& signatures) {
    std::map<std::decay_t<decltype(signatures[0])>, int> palette;
    for (const auto& sig : signatures) palette.emplace(sig, 0);
    int next = 0;
    for (auto& [sig, c] : palette) c = next++;
    std::vector<int> out;
    for (const auto& sig : signatures) out.push_back(palette.at(sig));
    return std::pair{out, next};
  };

  std::vector<int> vertex_color(h.n() + 1, 0);
  std::vector<int> part_color(parts.size(), 0);
  for (int v = 1; v <= h.n(); ++v) vertex_color[v] = static_cast<int>(incident[v].size());
  for (std::size_t i = 0; i < parts.size(); ++i) part_color[i] = static_cast<int>(parts[i].size());
  int classes = 0;
  for (int round = 0; round <= h.n(); ++round) {
    std::vector<std::pair<int, std::vector<int>>> part_sig;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::vector<int> around;
      for (int v : parts[i]) around.push_back(vertex_color[v]);
      std::sort(around.begin(), around.end());
      part_sig.emplace_back(part_color[i], std::move(around));
    }
    if (!part_sig.empty()) part_color = relabel(part_sig).first;
    std::vector<std::pair<int, std::vector<int>>> vertex_sig;
    for (int v = 1; v <= h.n(); ++v) {
      std::vector<int> around;
      for (auto i : incident[v]) around.push_back(part_color[i]);
      std::sort(around.begin(), around.end());
      vertex_sig.emplace_back(vertex_color[v], std::move(around));
    }
    auto [colors, count] = relabel(vertex_sig);
    std::copy(colors.begin(), colors.end(), vertex_color.begin() + 1);
    if (count == classes) break;
    classes = count;
  }
  return vertex_color;
}

// Tries every permutation inside each block of equal color.
void permute_blocks(std::vector<int>& order, const std::vector<std::pair<int, int>>& blocks,
                    std::size_t block, const Hypertree& h,
                    std::vector<std::vector<int>>& best) {
  if (block == blocks.size()) {
    std::vector<int> relabel(h.n() + 1);
    for (std::size_t k = 0; k < order.size(); ++k) relabel[order[k]] = static_cast<int>(k) + 1;
    std::vector<std::vector<int>> parts;
    for (const auto& part : h.parts()) {
      std::vector<int> mapped;
      for (int v : part) mapped.push_back(relabel[v]);
      std::sort(mapped.begin(), mapped.end());
      parts.push_back(std::move(mapped));
    }
    std::sort(parts.begin(), parts.end());
    if (best.empty() || parts < best) best = std::move(parts);
    return;
  }
  const auto [begin, end] = blocks[block];
  std::sort(order.begin() + begin, order.begin() + end);
  do {
    permute_blocks(order, blocks, block + 1, h, best);
  } while (std::next_permutation(order.begin() + begin, order.begin() + end));
}

}  // namespace

Hypertree::Hypertree(int n, std::vector<std::vector<int>> parts) : n_(n), parts_(std::move(parts)) {
  if (n < 1 || n > kMaxVertices) {
    throw DomainError("hypertree vertex count must lie in [1, " + std::to_string(kMaxVertices) + "]");
  }
  for (auto& part : parts_) {
    std::sort(part.begin(), part.end());
    if (std::adjacent_find(part.begin(), part.end()) != part.end()) {
      throw DomainError("hypertree part repeats a vertex");
    }
    for (int v : part) {
      if (v < 1 || v > n) throw DomainError("hypertree vertex " + std::to_string(v) + " outside [1, n]");
    }
  }
}

std::vector<int> Hypertree::valences() const {
  std::vector<int> out(n_, 0);
  for (const auto& part : parts_) {
    for (int v : part) ++out[v - 1];
  }
  return out;
}

AxiomVerdict check_axioms(const Hypertree& candidate) {
  AxiomVerdict verdict;
  auto fail = [&verdict](int axiom, std::string message) {
    if (!verdict.first_violated) {
      verdict.first_violated = axiom;
      verdict.message = std::move(message);
    }
    verdict.violated.push_back(axiom);
  };

  const auto& parts = candidate.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() < 3) {
      fail(1, "part " + std::to_string(i + 1) + " has fewer than 3 elements");
      break;
    }
  }

  int excess_sum = 0;
  for (const auto& part : parts) excess_sum += static_cast<int>(part.size()) - 2;
  if (candidate.n() - 2 != excess_sum) {
    fail(4, "normality: |N| - 2 = " + std::to_string(candidate.n() - 2) +
                " but the parts contribute " + std::to_string(excess_sum));
  }

  const auto valences = candidate.valences();
  for (std::size_t v = 0; v < valences.size(); ++v) {
    if (valences[v] < 2) {
      fail(2, "vertex " + std::to_string(v + 1) + " lies in " + std::to_string(valences[v]) +
                  " part(s)");
      break;
    }
  }

  if (parts.size() > kMaxConvexityParts) {
    throw DomainError("convexity check is limited to " + std::to_string(kMaxConvexityParts) +
                      " parts");
  }
  std::vector<std::uint32_t> masks;
  for (const auto& part : parts) masks.push_back(to_mask(part));
  if (!convex(masks)) fail(3, "convexity fails for some proper sub-collection");

  std::sort(verdict.violated.begin(), verdict.violated.end());
  verdict.passes = verdict.violated.empty();
  return verdict;
}

int hypertree_degree(const Hypertree& h, std::optional<int> vertex) {
  const auto verdict = check_axioms(h);
  if (!verdict.passes) throw DomainError("not a hypertree: " + verdict.message);
  const int d = static_cast<int>(h.part_count());
  if (!vertex) return d - 1;
  if (*vertex < 1 || *vertex > h.n()) throw DomainError("vertex outside [1, n]");
  return d - h.valences()[*vertex - 1];
}

int minimal_degree(const Hypertree& h) {
  const auto verdict = check_axioms(h);
  if (!verdict.passes) throw DomainError("not a hypertree: " + verdict.message);
  const auto valences = h.valences();
  return static_cast<int>(h.part_count()) - *std::max_element(valences.begin(), valences.end());
}

Hypertree canonical_form(const Hypertree& h) {
  const auto color = refined_colors(h);
  std::vector<int> order(h.n());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
  std::vector<std::pair<int, int>> blocks;
  for (int begin = 0; begin < h.n();) {
    int end = begin;
    while (end < h.n() && color[order[end]] == color[order[begin]]) ++end;
    blocks.emplace_back(begin, end);
    begin = end;
  }
  std::vector<std::vector<int>> best;
  permute_blocks(order, blocks, 0, h, best);
  return Hypertree(h.n(), sorted_parts(std::move(best)));
}

std::vector<Hypertree> enumerate_hypertrees(int n, int max_part_size,
                                            const EnumerationOptions& options) {
  if (n < 1 || n > kMaxVertices) throw DomainError("hypertree enumeration needs 1 <= n <= 30");
  const int largest = std::min(max_part_size, n);

  // Candidate parts in lexicographic order of their label lists, so every
  // part containing vertex 1 precedes every part that does not.
  std::vector<std::vector<int>> listed;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size >= 3 && size <= largest) listed.push_back(from_mask(mask << 1));
  }
  std::sort(listed.begin(), listed.end());
  std::vector<std::uint32_t> candidates;
  for (const auto& part : listed) candidates.push_back(to_mask(part));
  const std::uint32_t vertex_one = std::uint32_t{1} << 1;

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> over_budget{false};

  // Any hypertree has d >= 3, and convexity on pairs then forces any two parts
  // to share at most one vertex; that is the only pruning applied before the
  // full axiom check.
  auto search_from = [&](std::size_t first, std::set<std::vector<std::vector<int>>>& found) {
    std::vector<std::uint32_t> chosen{candidates[first]};
    auto recurse = [&](auto&& self, std::size_t next, int remaining) -> void {
      if (over_budget.load(std::memory_order_relaxed)) return;
      if (nodes.fetch_add(1, std::memory_order_relaxed) >= options.budget) {
        over_budget = true;
        return;
      }
      if (remaining == 0) {
        std::vector<std::vector<int>> parts;
        for (auto m : chosen) parts.push_back(from_mask(m));
        Hypertree h(n, std::move(parts));
        if (check_axioms(h).passes) found.insert(canonical_form(h).parts());
        return;
      }
      for (std::size_t i = next; i < candidates.size(); ++i) {
        const std::uint32_t part = candidates[i];
        if (excess(part) > remaining) continue;
        const bool overlaps = std::any_of(chosen.begin(), chosen.end(), [part](std::uint32_t c) {
          return std::popcount(c & part) > 1;
        });
        if (overlaps) continue;
        chosen.push_back(part);
        self(self, i + 1, remaining - excess(part));
        chosen.pop_back();
      }
    };
    const int remaining = n - 2 - excess(candidates[first]);
    if (remaining >= 0) recurse(recurse, first + 1, remaining);
  };

  std::vector<std::size_t> firsts;
  for (std::size_t i = 0; i < candidates.size() && (candidates[i] & vertex_one); ++i) firsts.push_back(i);

  std::set<std::vector<std::vector<int>>> found;
  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    for (auto first : firsts) search_from(first, found);
  } else {
    std::vector<std::set<std::vector<std::vector<int>>>> partial(jobs);
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        for (std::size_t k = j; k < firsts.size(); k += jobs) search_from(firsts[k], partial[j]);
      });
    }
    for (auto& w : workers) w.join();
    for (auto& p : partial) found.insert(p.begin(), p.end());
  }
  if (over_budget) {
    throw BudgetExceeded("hypertree enumeration at n = " + std::to_string(n) +
                         " exceeded its budget of " + std::to_string(options.budget) + " nodes");
  }

  std::vector<Hypertree> out;
  for (const auto& parts : found) out.emplace_back(n, parts);
  return out;
}

}  // namespace balcx
