#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "balcx/complex.hpp"
#include "balcx/picard.hpp"

namespace balcx {

/// Homogeneous polynomial in the ratios u_i = y_i / z_i, i in [n-1]. A
/// monomial is the multiset of its variable indices, so a degree-c monomial
/// is exactly a simplex of cardinality c.
class LaurentElement {
 public:
  using Terms = std::map<Multiset, Scalar>;

  /// The zero element of the given degree.
  LaurentElement(int n, std::size_t degree, FieldSpec field);

  static LaurentElement constant(int n, const Scalar& value);
  static LaurentElement variable(int i, int n, FieldSpec field);
  /// u_i - u_j, a translation-invariant linear form.
  static LaurentElement difference(int i, int j, int n, FieldSpec field);

  int n() const { return n_; }
  std::size_t degree() const { return degree_; }
  FieldSpec field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * u^m; zero coefficients are erased.
  void add_term(const Multiset& monomial, const Scalar& coefficient);

  LaurentElement& operator+=(const LaurentElement& rhs);
  LaurentElement& operator-=(const LaurentElement& rhs);
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);
  friend LaurentElement operator*(const Scalar& c, LaurentElement a);

  /// Inverse of laurent_of: one simplex per monomial, weighted by its
  /// coefficient. Throws on the zero element or in degree 0.
  WeightedComplex to_weighted_complex() const;

  friend bool operator==(const LaurentElement&, const LaurentElement&) = default;

 private:
  void require_compatible(const LaurentElement& other) const;

  int n_;
  std::size_t degree_;
  FieldSpec field_;
  Terms terms_;
};

LaurentElement laurent_of(const WeightedComplex& wc);

/// Substitutes u_i -> u_i + s in every variable, multiplying the linear
/// factors out term by term. Entry j is the coefficient of s^j, for
/// j = 0..degree; entry 0 equals f.
std::vector<LaurentElement> ga_expand(const LaurentElement& f);

/// Every positive power of s vanishes in ga_expand(f).
bool is_invariant(const LaurentElement& f);

/// A monomial y^a * prod x_I^{b_I} in the Cox ring of the toric variety.
struct CoxMonomial {
  Multiset y;
  /// Nonzero exponents only.
  std::map<IndexSet, int> x;

  friend bool operator==(const CoxMonomial&, const CoxMonomial&) = default;
  friend auto operator<=>(const CoxMonomial&, const CoxMonomial&) = default;
};

CoxMonomial multiply(const CoxMonomial& a, const CoxMonomial& b);

/// Sum of generator classes: [x_I] = E_I, [y_i] = H - sum_{I not containing i} E_I.
DivisorClass monomial_class(const CoxMonomial& m, int n);

/// A nonzero multi-homogeneous polynomial in the y_i and x_I.
class CoxElement {
 public:
  using Terms = std::map<CoxMonomial, Scalar>;

  /// Checks that every monomial has the same class; throws DomainError
  /// otherwise or when `terms` is empty.
  CoxElement(int n, FieldSpec field, Terms terms, bool invariant = true);

  static CoxElement one(int n, FieldSpec field);

  int n() const { return n_; }
  FieldSpec field() const { return field_; }
  const Terms& terms() const { return terms_; }
  const DivisorClass& pic_class() const { return pic_class_; }
  /// False when built by clearing denominators of a non-invariant element.
  bool invariant() const { return invariant_; }

  friend bool operator==(const CoxElement&, const CoxElement&) = default;

 private:
  int n_;
  FieldSpec field_;
  Terms terms_;
  DivisorClass pic_class_;
  bool invariant_;
};

/// Multiplies f by prod_I x_I^{m_I}, m_I = max over terms of the u-degree in
/// the labels of I, and rewrites each u_sigma as y_sigma times leftover x's.
CoxElement clear_denominators(const LaurentElement& f);

CoxElement cox_multiply(const CoxElement& a, const CoxElement& b);

std::string pretty(const LaurentElement& f, char variable = 'u');
std::string pretty(const CoxElement& g);

}  // namespace balcx
