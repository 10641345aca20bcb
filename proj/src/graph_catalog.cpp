#include "balcx/graph_catalog.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "balcx/balance_solver.hpp"
#include "balcx/errors.hpp"

namespace balcx {

namespace {

using Edge = std::pair<int, int>;

struct Incidence {
  int neighbor;
  std::size_t edge;
};

// A loop appears twice in its vertex's incidence list, so list sizes are degrees.
struct Graph {
  std::vector<Edge> edges;
  std::map<int, std::vector<Incidence>> adjacency;

  explicit Graph(const Complex& complex) {
    if (complex.cardinality() != 2) {
      throw DomainError("graph operations need simplices of cardinality 2");
    }
    for (const auto& s : complex.simplices()) {
      const auto e = s.entries();
      const std::size_t id = edges.size();
      edges.emplace_back(e[0], e[1]);
      adjacency[e[0]].push_back({e[1], id});
      adjacency[e[1]].push_back({e[0], id});
    }
  }

  std::size_t degree(int v) const { return adjacency.at(v).size(); }

  std::vector<std::vector<int>> components() const {
    std::set<int> seen;
    std::vector<std::vector<int>> out;
    for (const auto& [start, unused] : adjacency) {
      if (seen.contains(start)) continue;
      std::vector<int> component;
      std::vector<int> stack{start};
      seen.insert(start);
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        component.push_back(v);
        for (const auto& inc : adjacency.at(v)) {
          if (seen.insert(inc.neighbor).second) stack.push_back(inc.neighbor);
        }
      }
      out.push_back(std::move(component));
    }
    return out;
  }

  std::size_t edge_count(const std::vector<int>& component) const {
    std::size_t twice = 0;
    for (int v : component) twice += degree(v);
    return twice / 2;
  }

  // Follows the trail that leaves `start` along `first`, through bivalent
  // vertices, until it reaches a vertex of degree other than 2 (or `start`).
  // Returns the end vertex and the number of edges walked.
  std::pair<int, int> walk(int start, std::size_t first, std::vector<bool>& used) const {
    int length = 0;
    int here = start;
    std::size_t edge = first;
    while (true) {
      used[edge] = true;
      ++length;
      const auto [a, b] = edges[edge];
      here = (a == here) ? b : a;
      if (here == start || degree(here) != 2) return {here, length};
      const auto& incident = adjacency.at(here);
      auto next = std::find_if(incident.begin(), incident.end(),
                               [&used](const Incidence& inc) { return !used[inc.edge]; });
      if (next == incident.end()) return {here, length};
      edge = next->edge;
    }
  }
};

GraphShape not_minimal() { return GraphShape{}; }

GraphShape odd_pair(GraphTag tag, int m1, int m2, std::optional<int> path = std::nullopt) {
  if (m1 % 2 == 0 || m2 % 2 == 0) return not_minimal();
  return GraphShape{tag, {std::min(m1, m2), std::max(m1, m2)}, path};
}

std::optional<int> cycle_length(const Graph& g, const std::vector<int>& component) {
  const bool two_regular =
      std::all_of(component.begin(), component.end(), [&g](int v) { return g.degree(v) == 2; });
  if (!two_regular || g.edge_count(component) != component.size()) return std::nullopt;
  return static_cast<int>(component.size());
}

GraphShape classify_connected(const Graph& g, const std::vector<int>& vertices, bool char_two) {
  const std::size_t v_count = vertices.size();
  const std::size_t e_count = g.edge_count(vertices);
  if (auto m = cycle_length(g, vertices)) {
    return (*m % 2 == 0) ? GraphShape{GraphTag::EvenCycle, {*m}, std::nullopt} : not_minimal();
  }
  if (e_count != v_count + 1) return not_minimal();

  std::vector<int> branch;
  for (int v : vertices) {
    if (g.degree(v) != 2) branch.push_back(v);
  }
  std::vector<bool> used(g.edges.size(), false);

  if (branch.size() == 1 && g.degree(branch[0]) == 4) {
    const int center = branch[0];
    std::vector<int> lengths;
    for (const auto& inc : g.adjacency.at(center)) {
      if (used[inc.edge]) continue;
      const auto [end, length] = g.walk(center, inc.edge, used);
      if (end != center) return not_minimal();
      lengths.push_back(length);
    }
    if (lengths.size() != 2) return not_minimal();
    return odd_pair(GraphTag::TwoOddCyclesSharedVertex, lengths[0], lengths[1]);
  }

  if (branch.size() == 2 && g.degree(branch[0]) == 3 && g.degree(branch[1]) == 3) {
    const int u = branch[0];
    const int v = branch[1];
    std::optional<int> cycle_u, cycle_v, path;
    for (const auto& inc : g.adjacency.at(u)) {
      if (used[inc.edge]) continue;
      const auto [end, length] = g.walk(u, inc.edge, used);
      if (end == u) {
        cycle_u = length;
      } else if (path) {
        return not_minimal();  // two chains from u to v: a theta graph
      } else {
        path = length;
      }
    }
    for (const auto& inc : g.adjacency.at(v)) {
      if (used[inc.edge]) continue;
      const auto [end, length] = g.walk(v, inc.edge, used);
      if (end == v) cycle_v = length;
    }
    if (!cycle_u || !cycle_v || !path || char_two) return not_minimal();
    return odd_pair(GraphTag::TwoOddCyclesPath, *cycle_u, *cycle_v, path);
  }
  return not_minimal();
}

// Vertex colors from iterated neighbor refinement; isomorphism-invariant.
std::vector<int> refined_colors(int k, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> neighbors(k + 1);
  for (const auto& [a, b] : edges) {
    neighbors[a].push_back(b);
    neighbors[b].push_back(a);
  }
  std::vector<int> color(k + 1, 0);
  for (int v = 1; v <= k; ++v) color[v] = static_cast<int>(neighbors[v].size());
  for (int round = 0; round < k; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> palette;
    std::vector<std::pair<int, std::vector<int>>> signature(k + 1);
    for (int v = 1; v <= k; ++v) {
      std::vector<int> around;
      for (int w : neighbors[v]) around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      signature[v] = {color[v], std::move(around)};
      palette.emplace(signature[v], 0);
    }
    int next = 0;
    for (auto& [sig, c] : palette) c = next++;
    std::vector<int> refined(k + 1, 0);
    for (int v = 1; v <= k; ++v) refined[v] = palette.at(signature[v]);
    const bool stable = std::set<int>(refined.begin() + 1, refined.end()).size() ==
                        std::set<int>(color.begin() + 1, color.end()).size();
    color = std::move(refined);
    if (stable) break;
  }
  return color;
}

std::vector<Edge> relabeled(const std::vector<Edge>& edges, const std::vector<int>& map) {
  std::vector<Edge> out;
  for (const auto& [a, b] : edges) out.emplace_back(std::minmax(map[a], map[b]));
  std::sort(out.begin(), out.end());
  return out;
}

// Least relabeled edge list over bijections that list vertices by color
// class; the color classes are invariant, so the minimum is too.
std::vector<Edge> canonical_edges(int k, const std::vector<Edge>& edges) {
  const auto color = refined_colors(k, edges);
  std::vector<int> order(k);
  for (int v = 1; v <= k; ++v) order[v - 1] = v;
  std::stable_sort(order.begin(), order.end(), [&color](int a, int b) { return color[a] < color[b]; });
  std::vector<std::pair<int, int>> blocks;
  for (int begin = 0; begin < k;) {
    int end = begin;
    while (end < k && color[order[end]] == color[order[begin]]) ++end;
    blocks.emplace_back(begin, end);
    begin = end;
  }
  std::vector<Edge> best;
  std::vector<int> map(k + 1);
  auto recurse = [&](auto&& self, std::size_t block) -> void {
    if (block == blocks.size()) {
      for (int i = 0; i < k; ++i) map[order[i]] = i + 1;
      auto candidate = relabeled(edges, map);
      if (best.empty() || candidate < best) best = std::move(candidate);
      return;
    }
    const auto [begin, end] = blocks[block];
    std::sort(order.begin() + begin, order.begin() + end);
    do {
      self(self, block + 1);
    } while (std::next_permutation(order.begin() + begin, order.begin() + end));
  };
  recurse(recurse, 0);
  return best;
}

Complex to_complex(int n, const std::vector<Edge>& edges) {
  std::vector<Simplex> simplices;
  for (const auto& [a, b] : edges) simplices.push_back(Simplex{a, b});
  return Complex(n, std::move(simplices));
}

}  // namespace

std::string to_string(GraphTag tag) {
  switch (tag) {
    case GraphTag::EvenCycle: return "EvenCycle";
    case GraphTag::TwoOddCyclesSharedVertex: return "TwoOddCyclesSharedVertex";
    case GraphTag::TwoOddCyclesDisjoint: return "TwoOddCyclesDisjoint";
    case GraphTag::TwoOddCyclesPath: return "TwoOddCyclesPath";
    case GraphTag::NotMinimalPattern: return "NotMinimalPattern";
  }
  return "NotMinimalPattern";
}

GraphTag parse_graph_tag(std::string_view name) {
  for (auto tag : {GraphTag::EvenCycle, GraphTag::TwoOddCyclesSharedVertex,
                   GraphTag::TwoOddCyclesDisjoint, GraphTag::TwoOddCyclesPath,
                   GraphTag::NotMinimalPattern}) {
    if (to_string(tag) == name) return tag;
  }
  throw DomainError("unknown graph tag \"" + std::string(name) + "\"");
}

GraphShape classify_graph(const Complex& graph, FieldSpec field) {
  const Graph g(graph);
  for (const auto& [v, incident] : g.adjacency) {
    if (incident.size() < 2) return not_minimal();
  }
  const bool char_two = field.characteristic() == 2;
  const auto components = g.components();
  if (components.size() == 1) return classify_connected(g, components[0], char_two);
  if (components.size() == 2 && char_two) {
    const auto m1 = cycle_length(g, components[0]);
    const auto m2 = cycle_length(g, components[1]);
    if (m1 && m2) return odd_pair(GraphTag::TwoOddCyclesDisjoint, *m1, *m2);
  }
  return not_minimal();
}

bool is_irreducible_degree_two(const Complex& graph, FieldSpec field, int n) {
  if (n < 6) throw DomainError("degree-two irreducibility needs n >= 6, got " + std::to_string(n));
  if (graph.cardinality() != 2) throw DomainError("a degree-two class comes from a 1-complex");
  const auto support = graph.support();
  if (support.back() > n - 1) throw DomainError("graph labels exceed n - 1");
  const auto shape = classify_graph(graph, field);
  if (!shape.is_minimal() || graph.is_singular()) return false;
  return !(shape.tag == GraphTag::EvenCycle && shape.cycle_lengths == std::vector<int>{4});
}

Complex canonical_graph(const Complex& graph) {
  const Graph g(graph);
  const auto support = graph.support();
  std::map<int, int> compress;
  for (std::size_t i = 0; i < support.size(); ++i) compress[support[i]] = static_cast<int>(i) + 1;
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges) edges.emplace_back(compress[a], compress[b]);
  return to_complex(graph.n(), canonical_edges(static_cast<int>(support.size()), edges));
}

std::vector<Complex> enumerate_minimal_graphs(int max_vertices, FieldSpec field,
                                              const EnumerationOptions& options) {
  if (max_vertices < 1) throw DomainError("enumeration needs at least one vertex");
  if (max_vertices > 8) throw DomainError("minimal-graph enumeration is limited to 8 vertices");
  const int n = max_vertices + 1;

  struct Task {
    int k;
    int edges;
  };
  std::vector<Task> tasks;
  for (int k = 1; k <= max_vertices; ++k) {
    for (int e = k; e <= k + 2; ++e) tasks.push_back({k, e});
  }

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> over_budget{false};

  auto run = [&](const Task& task, std::set<std::vector<Edge>>& found) {
    const int k = task.k;
    std::vector<Edge> slots;
    for (int a = 1; a <= k; ++a) {
      for (int b = a; b <= k; ++b) slots.emplace_back(a, b);
    }
    // last_slot[v]: index of the final slot touching v.
    std::vector<std::size_t> last_slot(k + 1, 0);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      last_slot[slots[i].first] = std::max(last_slot[slots[i].first], i);
      last_slot[slots[i].second] = std::max(last_slot[slots[i].second], i);
    }
    std::vector<std::vector<int>> closing(slots.size());
    for (int v = 1; v <= k; ++v) closing[last_slot[v]].push_back(v);

    std::vector<int> degree(k + 1, 0);
    std::vector<Edge> chosen;
    auto recurse = [&](auto&& self, std::size_t slot) -> void {
      if (over_budget.load(std::memory_order_relaxed)) return;
      if (nodes.fetch_add(1, std::memory_order_relaxed) >= options.budget) {
        over_budget = true;
        return;
      }
      if (static_cast<int>(chosen.size()) == task.edges) {
        for (int v = 1; v <= k; ++v) {
          if (degree[v] < 2) return;
        }
        if (is_minimal(to_complex(n, chosen), field)) found.insert(canonical_edges(k, chosen));
        return;
      }
      if (slot == slots.size()) return;
      int deficit = 0;
      for (int v = 1; v <= k; ++v) deficit += std::max(0, 2 - degree[v]);
      if (deficit > 2 * (task.edges - static_cast<int>(chosen.size()))) return;

      auto closes_ok = [&] {
        return std::all_of(closing[slot].begin(), closing[slot].end(),
                           [&degree](int v) { return degree[v] >= 2; });
      };
      const auto [a, b] = slots[slot];
      chosen.push_back(slots[slot]);
      degree[a] += 1;
      degree[b] += 1;
      if (closes_ok()) self(self, slot + 1);
      degree[a] -= 1;
      degree[b] -= 1;
      chosen.pop_back();
      if (closes_ok()) self(self, slot + 1);
    };
    recurse(recurse, 0);
  };

  std::set<std::vector<Edge>> found;
  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    for (const auto& task : tasks) run(task, found);
  } else {
    std::vector<std::set<std::vector<Edge>>> partial(jobs);
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        for (std::size_t t = j; t < tasks.size(); t += jobs) run(tasks[t], partial[j]);
      });
    }
    for (auto& w : workers) w.join();
    for (auto& p : partial) found.insert(p.begin(), p.end());
  }
  if (over_budget) {
    throw BudgetExceeded("minimal-graph enumeration on " + std::to_string(max_vertices) +
                         " vertices exceeded its budget of " + std::to_string(options.budget) +
                         " nodes");
  }

  std::vector<Complex> out;
  for (const auto& edges : found) out.push_back(to_complex(n, edges));
  return out;
}

}  // namespace balcx
