#include "balcx/cox_poly.hpp"

#include <algorithm>
#include <sstream>

#include "balcx/errors.hpp"

namespace balcx {

LaurentElement::LaurentElement(int n, std::size_t degree, FieldSpec field)
    : n_(n), degree_(degree), field_(field) {
  if (n < 2) throw DomainError("Laurent elements need n >= 2");
}

LaurentElement LaurentElement::constant(int n, const Scalar& value) {
  LaurentElement f(n, 0, value.field());
  f.add_term(Multiset{}, value);
  return f;
}

LaurentElement LaurentElement::variable(int i, int n, FieldSpec field) {
  LaurentElement f(n, 1, field);
  f.add_term(Multiset{i}, Scalar::one(field));
  return f;
}

LaurentElement LaurentElement::difference(int i, int j, int n, FieldSpec field) {
  return variable(i, n, field) - variable(j, n, field);
}

void LaurentElement::add_term(const Multiset& monomial, const Scalar& coefficient) {
  if (monomial.cardinality() != degree_) {
    throw DomainError("monomial of degree " + std::to_string(monomial.cardinality()) +
                      " in an element of degree " + std::to_string(degree_));
  }
  if (monomial.max_label() > n_ - 1) throw DomainError("variable index outside [1, n-1]");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LaurentElement::require_compatible(const LaurentElement& other) const {
  if (n_ != other.n_ || field_ != other.field_) {
    throw DomainError("Laurent elements over different n or fields");
  }
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& rhs) {
  require_compatible(rhs);
  if (degree_ != rhs.degree_) throw DomainError("sum of Laurent elements of different degrees");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& rhs) {
  require_compatible(rhs);
  if (degree_ != rhs.degree_) throw DomainError("difference of Laurent elements of different degrees");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
  a.require_compatible(b);
  LaurentElement out(a.n_, a.degree_ + b.degree_, a.field_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(merge(ma, mb), ca * cb);
  }
  return out;
}

LaurentElement operator*(const Scalar& c, LaurentElement a) {
  if (c.field() != a.field_) throw DomainError("scalar from a different field");
  LaurentElement out(a.n_, a.degree_, a.field_);
  for (const auto& [m, coeff] : a.terms_) out.add_term(m, c * coeff);
  return out;
}

WeightedComplex LaurentElement::to_weighted_complex() const {
  if (degree_ == 0) throw DomainError("degree-0 element has no complex");
  if (terms_.empty()) throw DomainError("the zero element has no complex");
  std::vector<std::pair<Simplex, Scalar>> pairs;
  for (const auto& [m, c] : terms_) pairs.emplace_back(Simplex(m), c);
  return WeightedComplex::from_pairs(n_, std::move(pairs), field_);
}

LaurentElement laurent_of(const WeightedComplex& wc) {
  const Complex& complex = wc.complex();
  LaurentElement f(complex.n(), complex.cardinality(), wc.field());
  for (std::size_t i = 0; i < complex.size(); ++i) f.add_term(complex.simplices()[i], wc.weights()[i]);
  return f;
}

std::vector<LaurentElement> ga_expand(const LaurentElement& f) {
  // Polynomial in (s, u): key (power of s, u-monomial).
  using Key = std::pair<std::size_t, Multiset>;
  const FieldSpec field = f.field();
  const Scalar one = Scalar::one(field);

  std::map<Key, Scalar> total;
  for (const auto& [monomial, coefficient] : f.terms()) {
    std::map<Key, Scalar> partial{{Key{0, Multiset{}}, coefficient}};
    for (int label : monomial.entries()) {
      std::map<Key, Scalar> next;
      auto accumulate = [&next](Key key, const Scalar& value) {
        auto [it, inserted] = next.try_emplace(std::move(key), value);
        if (!inserted) it->second += value;
      };
      for (const auto& [key, value] : partial) {
        accumulate(Key{key.first, merge(key.second, Multiset{label})}, value);  // * u_label
        accumulate(Key{key.first + 1, key.second}, value);                     // * s
      }
      partial = std::move(next);
    }
    for (const auto& [key, value] : partial) {
      auto [it, inserted] = total.try_emplace(key, value);
      if (!inserted) it->second += value;
    }
  }

  std::vector<LaurentElement> coefficients;
  for (std::size_t j = 0; j <= f.degree(); ++j) coefficients.emplace_back(f.n(), f.degree() - j, field);
  for (const auto& [key, value] : total) coefficients[key.first].add_term(key.second, value);
  return coefficients;
}

bool is_invariant(const LaurentElement& f) {
  const auto coefficients = ga_expand(f);
  return std::all_of(coefficients.begin() + 1, coefficients.end(),
                     [](const LaurentElement& c) { return c.is_zero(); });
}

CoxMonomial multiply(const CoxMonomial& a, const CoxMonomial& b) {
  CoxMonomial out{merge(a.y, b.y), a.x};
  for (const auto& [set, exponent] : b.x) out.x[set] += exponent;
  return out;
}

DivisorClass monomial_class(const CoxMonomial& m, int n) {
  DivisorClass total(n);
  for (const auto& [set, exponent] : m.x) {
    if (exponent < 0) throw DomainError("negative x exponent");
    total += exponent * DivisorClass::exceptional(n, set);
  }
  for (const auto& [label, exponent] : m.y.counts()) {
    if (label > n - 1) throw DomainError("y index outside [1, n-1]");
    DivisorClass y_class = DivisorClass::hyperplane(n);
    for_each_admissible(n, [&](IndexSet set) {
      if (!set.contains(label)) y_class.add_to(set, -1);
    });
    total += exponent * y_class;
  }
  return total;
}

CoxElement::CoxElement(int n, FieldSpec field, Terms terms, bool invariant)
    : n_(n), field_(field), terms_(std::move(terms)), pic_class_(n), invariant_(invariant) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  if (terms_.empty()) throw DomainError("the zero polynomial has no Pic class");
  pic_class_ = monomial_class(terms_.begin()->first, n);
  for (const auto& [monomial, coefficient] : terms_) {
    if (coefficient.field() != field_) throw DomainError("coefficient from a different field");
    if (monomial_class(monomial, n) != pic_class_) {
      throw DomainError("Cox element is not multi-homogeneous");
    }
  }
}

CoxElement CoxElement::one(int n, FieldSpec field) {
  return CoxElement(n, field, Terms{{CoxMonomial{}, Scalar::one(field)}});
}

CoxElement clear_denominators(const LaurentElement& f) {
  if (f.is_zero()) throw DomainError("cannot clear denominators of zero");
  const int n = f.n();
  std::vector<std::pair<IndexSet, int>> sets;
  for_each_admissible(n, [&](IndexSet set) { sets.emplace_back(set, 0); });

  auto degree_in = [](const Multiset& monomial, IndexSet set) {
    int d = 0;
    for (int label : monomial.entries()) d += set.contains(label) ? 1 : 0;
    return d;
  };
  for (auto& [set, m] : sets) {
    for (const auto& [monomial, c] : f.terms()) m = std::max(m, degree_in(monomial, set));
  }

  CoxElement::Terms terms;
  for (const auto& [monomial, c] : f.terms()) {
    CoxMonomial cm{monomial, {}};
    for (const auto& [set, m] : sets) {
      const int exponent = m - degree_in(monomial, set);
      if (exponent != 0) cm.x.emplace(set, exponent);
    }
    terms.emplace(std::move(cm), c);
  }
  return CoxElement(n, f.field(), std::move(terms), is_invariant(f));
}

CoxElement cox_multiply(const CoxElement& a, const CoxElement& b) {
  if (a.n() != b.n() || a.field() != b.field()) {
    throw DomainError("product of Cox elements over different n or fields");
  }
  CoxElement::Terms terms;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto [it, inserted] = terms.try_emplace(multiply(ma, mb), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return CoxElement(a.n(), a.field(), std::move(terms), a.invariant() && b.invariant());
}

namespace {

void append_coefficient(std::ostringstream& out, const Scalar& c, bool first, bool has_monomial) {
  std::string text = c.to_string();
  bool negative = !text.empty() && text.front() == '-';
  if (negative) text.erase(0, 1);
  if (first) {
    if (negative) out << "-";
  } else {
    out << (negative ? " - " : " + ");
  }
  if (text != "1" || !has_monomial) out << text;
}

void append_power(std::ostringstream& out, const std::string& base, int exponent) {
  out << base;
  if (exponent != 1) out << '^' << exponent;
}

}  // namespace

std::string pretty(const LaurentElement& f, char variable) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [monomial, c] : f.terms()) {
    append_coefficient(out, c, first, !monomial.empty());
    for (const auto& [label, exponent] : monomial.counts()) {
      append_power(out, std::string(1, variable) + std::to_string(label), exponent);
    }
    first = false;
  }
  return out.str();
}

std::string pretty(const CoxElement& g) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [monomial, c] : g.terms()) {
    append_coefficient(out, c, first, !monomial.y.empty() || !monomial.x.empty());
    for (const auto& [label, exponent] : monomial.y.counts()) {
      append_power(out, "y" + std::to_string(label), exponent);
    }
    for (const auto& [set, exponent] : monomial.x) {
      append_power(out, "x{" + set.to_string() + "}", exponent);
    }
    first = false;
  }
  return out.str();
}

}  // namespace balcx
