#include "balcx/json_io.hpp"

#include <cstdint>

#include "balcx/errors.hpp"

namespace balcx {

namespace {

template <typename F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw DomainError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw DomainError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& j) {
  if (!j.is_number_integer()) throw DomainError("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::int64_t integer(const Json& j, const char* key) { return integer(member(j, key)); }

int small_integer(const Json& j, const char* key) {
  const auto value = integer(j, key);
  if (value < INT32_MIN || value > INT32_MAX) throw DomainError(std::string("\"") + key + "\" out of range");
  return static_cast<int>(value);
}

FieldSpec field_from(const Json& j, FieldSpec fallback) {
  auto it = j.find("char");
  if (it == j.end()) return fallback;
  const auto p = integer(*it);
  if (p < 0) throw DomainError("characteristic must be non-negative");
  return FieldSpec(static_cast<std::uint64_t>(p));
}

std::vector<int> labels_from(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of labels, got " + j.dump());
  std::vector<int> out;
  for (const auto& x : j) {
    const auto v = integer(x);
    if (v < 1 || v > INT32_MAX) throw DomainError("label out of range: " + x.dump());
    out.push_back(static_cast<int>(v));
  }
  return out;
}

Json labels_to_json(const Multiset& m) { return Json(std::vector<int>(m.entries().begin(), m.entries().end())); }

std::vector<Simplex> simplices_from(const Json& j) {
  const Json& list = member(j, "simplices");
  if (!list.is_array()) throw DomainError("\"simplices\" must be an array");
  std::vector<Simplex> out;
  for (const auto& s : list) out.emplace_back(labels_from(s));
  return out;
}

Json index_map_to_json(const std::map<IndexSet, std::int64_t>& e) {
  Json out = Json::object();
  for (const auto& [set, value] : e) out[set.to_string()] = value;
  return out;
}

std::map<IndexSet, std::int64_t> index_map_from(const Json& j) {
  if (!j.is_object()) throw DomainError("expected an object keyed by index sets");
  std::map<IndexSet, std::int64_t> out;
  for (const auto& [key, value] : j.items()) {
    if (!out.emplace(IndexSet::parse(key), integer(value)).second) {
      throw DomainError("duplicate index set \"" + key + "\"");
    }
  }
  return out;
}

}  // namespace

Json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j, FieldSpec field) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), field);
  if (j.is_number_integer()) return Scalar::from_integer(j.get<std::int64_t>(), field);
  throw DomainError("scalars are exact strings such as \"-3/4\", got " + j.dump());
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

Vector vector_from_json(const Json& j, FieldSpec field) {
  if (!j.is_array()) throw DomainError("expected an array of scalars");
  Vector out;
  for (const auto& x : j) out.push_back(scalar_from_json(x, field));
  return out;
}

Json to_json(const Complex& c) {
  Json simplices = Json::array();
  for (const auto& s : c.simplices()) simplices.push_back(labels_to_json(s));
  return Json{{"n", c.n()}, {"simplices", std::move(simplices)}};
}

Complex complex_from_json(const Json& j) {
  return guarded("complex", [&] { return Complex(small_integer(j, "n"), simplices_from(j)); });
}

Json to_json(const WeightedComplex& wc) {
  Json out = to_json(wc.complex());
  out["char"] = wc.field().characteristic();
  out["weights"] = to_json(Vector(wc.weights().begin(), wc.weights().end()));
  return out;
}

WeightedComplex weighted_complex_from_json(const Json& j, FieldSpec fallback) {
  return guarded("weighted complex", [&] {
    const FieldSpec field = field_from(j, fallback);
    auto simplices = simplices_from(j);
    const Vector weights = vector_from_json(member(j, "weights"), field);
    if (weights.size() != simplices.size()) {
      throw DomainError("\"weights\" must be parallel to \"simplices\"");
    }
    std::vector<std::pair<Simplex, Scalar>> pairs;
    for (std::size_t i = 0; i < simplices.size(); ++i) pairs.emplace_back(simplices[i], weights[i]);
    return WeightedComplex::from_pairs(small_integer(j, "n"), std::move(pairs), field);
  });
}

Json to_json(const DivisorClass& d) {
  return Json{{"n", d.n()}, {"H", d.h()}, {"E", index_map_to_json(d.e())}};
}

DivisorClass divisor_class_from_json(const Json& j) {
  return guarded("divisor class", [&] {
    auto it = j.find("E");
    const auto e = (it == j.end()) ? std::map<IndexSet, std::int64_t>{} : index_map_from(*it);
    return DivisorClass(small_integer(j, "n"), integer(j, "H"), e);
  });
}

Json to_json(const CurveClass& c) {
  return Json{{"n", c.n()}, {"dotH", c.dot_h()}, {"dotE", index_map_to_json(c.dot_e())}};
}

CurveClass curve_class_from_json(const Json& j) {
  return guarded("curve class", [&] {
    auto it = j.find("dotE");
    const auto e = (it == j.end()) ? std::map<IndexSet, std::int64_t>{} : index_map_from(*it);
    return CurveClass(small_integer(j, "n"), integer(j, "dotH"), e);
  });
}

Json to_json(const Hypertree& h) { return Json{{"n", h.n()}, {"parts", h.parts()}}; }

Hypertree hypertree_from_json(const Json& j) {
  return guarded("hypertree", [&] {
    const Json& list = member(j, "parts");
    if (!list.is_array()) throw DomainError("\"parts\" must be an array");
    std::vector<std::vector<int>> parts;
    for (const auto& part : list) parts.push_back(labels_from(part));
    return Hypertree(small_integer(j, "n"), std::move(parts));
  });
}

Json to_json(const CoxElement& g) {
  Json terms = Json::array();
  for (const auto& [monomial, c] : g.terms()) {
    Json x = Json::object();
    for (const auto& [set, exponent] : monomial.x) x[set.to_string()] = exponent;
    terms.push_back(Json{{"coeff", to_json(c)}, {"y", labels_to_json(monomial.y)}, {"x", std::move(x)}});
  }
  return Json{{"n", g.n()},
              {"char", g.field().characteristic()},
              {"invariant", g.invariant()},
              {"class", to_json(g.pic_class())},
              {"terms", std::move(terms)}};
}

CoxElement cox_element_from_json(const Json& j) {
  return guarded("Cox element", [&] {
    const int n = small_integer(j, "n");
    const FieldSpec field = field_from(j, FieldSpec{});
    const Json& list = member(j, "terms");
    if (!list.is_array()) throw DomainError("\"terms\" must be an array");
    CoxElement::Terms terms;
    for (const auto& t : list) {
      CoxMonomial m{Multiset(labels_from(member(t, "y"))), {}};
      for (const auto& [set, exponent] : index_map_from(member(t, "x"))) {
        if (exponent <= 0) throw DomainError("x exponents must be positive");
        if (!is_admissible(set, n)) throw DomainError("x index {" + set.to_string() + "} not admissible");
        m.x.emplace(set, static_cast<int>(exponent));
      }
      if (!terms.emplace(std::move(m), scalar_from_json(member(t, "coeff"), field)).second) {
        throw DomainError("repeated monomial in Cox element");
      }
    }
    auto it = j.find("invariant");
    const bool invariant = (it == j.end()) ? true : it->get<bool>();
    CoxElement g(n, field, std::move(terms), invariant);
    if (auto cls = j.find("class"); cls != j.end() && divisor_class_from_json(*cls) != g.pic_class()) {
      throw DomainError("stated class disagrees with the monomials");
    }
    return g;
  });
}

Json to_json(const BalanceVerdict& v) {
  Json basis = Json::array();
  for (const auto& b : v.nullspace_basis) basis.push_back(to_json(b));
  return Json{{"char", v.field.characteristic()},
              {"balanceable", v.balanceable},
              {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)},
              {"dim", v.nullspace_dimension},
              {"basis", std::move(basis)}};
}

BalanceVerdict verdict_from_json(const Json& j) {
  return guarded("verdict", [&] {
    BalanceVerdict v;
    v.field = field_from(j, FieldSpec{});
    v.balanceable = member(j, "balanceable").get<bool>();
    if (const Json& w = member(j, "witness"); !w.is_null()) v.witness = vector_from_json(w, v.field);
    v.nullspace_dimension = static_cast<std::size_t>(integer(j, "dim"));
    if (auto it = j.find("basis"); it != j.end()) {
      for (const auto& b : *it) v.nullspace_basis.push_back(vector_from_json(b, v.field));
    }
    return v;
  });
}

Json to_json(const GraphShape& s) {
  Json out{{"tag", to_string(s.tag)}};
  if (s.cycle_lengths.size() == 1) out["m"] = s.cycle_lengths[0];
  if (s.cycle_lengths.size() == 2) {
    out["m1"] = s.cycle_lengths[0];
    out["m2"] = s.cycle_lengths[1];
  }
  if (s.path_length) out["L"] = *s.path_length;
  return out;
}

GraphShape graph_shape_from_json(const Json& j) {
  return guarded("graph shape", [&] {
    GraphShape s;
    s.tag = parse_graph_tag(member(j, "tag").get<std::string>());
    if (j.contains("m")) s.cycle_lengths = {small_integer(j, "m")};
    if (j.contains("m1")) s.cycle_lengths = {small_integer(j, "m1"), small_integer(j, "m2")};
    if (j.contains("L")) s.path_length = small_integer(j, "L");
    return s;
  });
}

Json invariance_report(const LaurentElement& f) {
  Json expansion = Json::array();
  for (const auto& coefficient : ga_expand(f)) expansion.push_back(pretty(coefficient));
  return Json{{"polynomial", pretty(f)}, {"invariant", is_invariant(f)}, {"expansion", std::move(expansion)}};
}

}  // namespace balcx
