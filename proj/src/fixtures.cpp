#include "balcx/fixtures.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>

#include "balcx/errors.hpp"

namespace balcx {

namespace {

constexpr std::string_view kScheme = "fixtures://";

Complex edges(int n, std::initializer_list<std::pair<int, int>> list) {
  std::vector<Simplex> simplices;
  for (auto [a, b] : list) simplices.push_back(Simplex{a, b});
  return Complex(n, std::move(simplices));
}

WeightedComplex weighted_edges(int n, std::initializer_list<std::tuple<int, int, int>> list,
                               FieldSpec field = FieldSpec{}) {
  std::vector<std::pair<Simplex, Scalar>> pairs;
  for (auto [a, b, w] : list) pairs.emplace_back(Simplex{a, b}, Scalar::from_integer(w, field));
  return WeightedComplex::from_pairs(n, std::move(pairs), field);
}

Json tagged(std::string kind, Json body) {
  Json out{{"kind", std::move(kind)}, {"version", kFixtureVersion}};
  for (auto& [key, value] : body.items()) out[key] = value;
  return out;
}

CurveClass curve_f9() {
  return CurveClass(9, 3,
                    {{IndexSet{1, 3, 5, 7}, 2},
                     {IndexSet{2, 4, 6, 8}, 1},
                     {IndexSet{1, 4, 6}, 1},
                     {IndexSet{3, 6, 8}, 1},
                     {IndexSet{2, 5, 8}, 1},
                     {IndexSet{2, 4, 7}, 1}});
}

CurveClass curve_f7() {
  std::map<IndexSet, std::int64_t> dot_e;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 4; j <= 6; ++j) dot_e[IndexSet{i, j}] = 1;
  }
  return CurveClass(7, 4, dot_e);
}

using Builder = std::function<Json()>;

const std::map<std::string, Builder, std::less<>>& complex_builders() {
  static const std::map<std::string, Builder, std::less<>> builders = [] {
    std::map<std::string, Builder, std::less<>> b;
    auto weighted = [](WeightedComplex wc) { return tagged("weighted-complex", to_json(wc)); };
    auto plain = [](const Complex& c) { return tagged("complex", to_json(c)); };

    b["octagon"] = [=] { return weighted(alternating_cycle(8, 9)); };
    b["hexagon"] = [=] { return weighted(alternating_cycle(6, 7)); };
    b["square"] = [=] { return weighted(alternating_cycle(4, 5)); };
    b["triangle"] = [=] { return plain(edges(5, {{1, 2}, {2, 3}, {1, 3}})); };
    b["K4"] = [=] { return plain(edges(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})); };
    b["two-triangles-disjoint"] = [=] {
      return weighted(weighted_edges(
          7, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}, {4, 5, 1}, {5, 6, 1}, {4, 6, 1}}, FieldSpec(2)));
    };
    b["two-triangles-shared-vertex"] = [=] {
      return weighted(weighted_edges(
          6, {{1, 2, 1}, {2, 4, -1}, {1, 4, 1}, {1, 3, -1}, {3, 5, 1}, {1, 5, -1}}));
    };
    b["triangle-bridge-triangle"] = [=] {
      return weighted(weighted_edges(
          7, {{1, 3, 1}, {1, 2, -1}, {2, 3, 1}, {3, 4, -2}, {4, 5, 1}, {5, 6, -1}, {4, 6, 1}}));
    };
    for (int m : {3, 4, 5}) {
      b["tetra-cycle-" + std::to_string(m)] = [=] { return weighted(tetrahedra_cycle(m)); };
    }
    for (int d : {2, 3}) {
      b["orthoplex-" + std::to_string(d)] = [=] { return weighted(orthoplex(d)); };
    }
    return b;
  }();
  return builders;
}

const std::map<std::string, Builder, std::less<>>& builders() {
  static const std::map<std::string, Builder, std::less<>> all = [] {
    auto b = complex_builders();
    for (const auto& [name, build] : complex_builders()) {
      b["class-" + name] = [build] {
        const Json doc = build();
        return tagged("divisor-class", to_json(divisor_class_of(complex_from_json(doc))));
      };
    }
    b["class-oct"] = b.at("class-octagon");
    b["class-tri"] = b.at("class-two-triangles-disjoint");
    b["F9"] = [] { return tagged("curve-class", to_json(curve_f9())); };
    b["F7"] = [] { return tagged("curve-class", to_json(curve_f7())); };
    b["hypertree-6"] = [] {
      return tagged("hypertree", to_json(Hypertree(6, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}})));
    };
    b["hypertree-7"] = [] {
      return tagged("hypertree",
                    to_json(Hypertree(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {3, 5, 7}})));
    };
    return b;
  }();
  return all;
}

}  // namespace

WeightedComplex alternating_cycle(int m, int n, FieldSpec field) {
  if (m < 3) throw DomainError("a cycle needs at least 3 vertices");
  std::vector<std::pair<Simplex, Scalar>> pairs;
  for (int i = 1; i <= m; ++i) {
    const int next = (i == m) ? 1 : i + 1;
    pairs.emplace_back(Simplex{i, next}, Scalar::from_integer(i % 2 == 1 ? 1 : -1, field));
  }
  return WeightedComplex::from_pairs(n, std::move(pairs), field);
}

WeightedComplex tetrahedra_cycle(int m, FieldSpec field) {
  if (m < 3) throw DomainError("a cycle of tetrahedra needs m >= 3");
  std::vector<std::pair<Simplex, Scalar>> pairs;
  const Scalar plus = Scalar::one(field);
  const Scalar minus = -plus;
  for (int i = 1; i <= m; ++i) {
    const int a = 2 * i - 1;
    const int b = 2 * i;
    const int c = (i == m) ? 1 : 2 * i + 1;
    const int d = (i == m) ? 2 : 2 * i + 2;
    pairs.emplace_back(Simplex{a, b, c}, plus);
    pairs.emplace_back(Simplex{a, b, d}, plus);
    pairs.emplace_back(Simplex{a, c, d}, minus);
    pairs.emplace_back(Simplex{b, c, d}, minus);
  }
  return WeightedComplex::from_pairs(2 * m + 1, std::move(pairs), field);
}

WeightedComplex orthoplex(int d, FieldSpec field) {
  if (d < 1) throw DomainError("orthoplex dimension must be positive");
  std::vector<std::pair<std::vector<int>, Scalar>> facets{{{}, Scalar::one(field)}};
  for (int i = 1; i <= d; ++i) {
    std::vector<std::pair<std::vector<int>, Scalar>> next;
    for (const auto& [labels, w] : facets) {
      auto plus = labels;
      plus.push_back(2 * i - 1);
      next.emplace_back(std::move(plus), w);
      auto minus = labels;
      minus.push_back(2 * i);
      next.emplace_back(std::move(minus), -w);
    }
    facets = std::move(next);
  }
  std::vector<std::pair<Simplex, Scalar>> pairs;
  for (auto& [labels, w] : facets) pairs.emplace_back(Simplex(std::move(labels)), w);
  return WeightedComplex::from_pairs(2 * d + 1, std::move(pairs), field);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, build] : builders()) names.push_back(name);
  return names;
}

Json fixture(std::string_view name) {
  const auto& all = builders();
  auto it = all.find(name);
  if (it == all.end()) throw DomainError("unknown fixture \"" + std::string(name) + "\"");
  return it->second();
}

Json load_document(std::string_view source) {
  if (source.starts_with(kScheme)) return fixture(source.substr(kScheme.size()));
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in{std::string(source)};
    if (!in) throw DomainError("cannot read \"" + std::string(source) + "\"");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace balcx
