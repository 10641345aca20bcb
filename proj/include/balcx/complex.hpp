#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "balcx/exact_arith.hpp"

namespace balcx {

/// A finite multiset of positive vertex labels, stored sorted ascending with
/// repetition. The empty multiset is allowed; it is the degree-0 face.
class Multiset {
 public:
  Multiset() = default;
  Multiset(std::initializer_list<int> labels);
  explicit Multiset(std::vector<int> labels);

  std::span<const int> entries() const { return entries_; }
  std::size_t cardinality() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  int multiplicity(int label) const;
  /// Distinct labels, ascending.
  std::vector<int> support() const;
  /// (label, multiplicity) pairs, ascending by label.
  std::vector<std::pair<int, int>> counts() const;
  int max_label() const { return entries_.empty() ? 0 : entries_.back(); }

  /// Some label occurs more than once.
  bool is_singular() const;
  /// Sub-multiset test: every multiplicity of `sub` is at most ours.
  bool contains(const Multiset& sub) const;

  /// Multiset union with multiplicities added (monomial product).
  friend Multiset merge(const Multiset& a, const Multiset& b);

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset&, const Multiset&) = default;

 private:
  std::vector<int> entries_;
};

/// A d-simplex: a nonempty multiset of cardinality d+1.
class Simplex : public Multiset {
 public:
  Simplex(std::initializer_list<int> labels);
  explicit Simplex(std::vector<int> labels);
  explicit Simplex(Multiset m);
};

using FaceMultiset = Multiset;

/// Every sub-multiset of `m` of the given cardinality, ascending.
std::vector<Multiset> sub_multisets(const Multiset& m, std::size_t size);

/// Product over labels of binom(mult_i(sigma), mult_i(face)): the number of
/// ways `face` embeds in `sigma`. Zero iff face is not a sub-multiset.
std::int64_t embedding_multiplicity(const Multiset& face, const Multiset& sigma);

/// A pure complex on the labels [n-1]: a nonempty set of simplices of equal
/// cardinality, held sorted and deduplicated.
class Complex {
 public:
  Complex(int n, std::vector<Simplex> simplices);

  int n() const { return n_; }
  std::span<const Simplex> simplices() const { return simplices_; }
  std::size_t size() const { return simplices_.size(); }
  /// Simplex cardinality c = d + 1.
  std::size_t cardinality() const { return simplices_.front().cardinality(); }
  int dimension() const { return static_cast<int>(cardinality()) - 1; }
  bool is_singular() const;
  std::vector<int> support() const;
  /// Position of `s` in simplices(), or -1.
  std::ptrdiff_t index_of(const Simplex& s) const;

  /// Same simplices viewed on a different number of marked points.
  Complex with_n(int n) const { return Complex(n, simplices_); }

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  int n_;
  std::vector<Simplex> simplices_;
};

/// A complex with one nonzero weight per simplex, aligned with
/// Complex::simplices().
class WeightedComplex {
 public:
  WeightedComplex(Complex complex, std::vector<Scalar> weights, FieldSpec field);
  /// Builds from unsorted (simplex, weight) pairs; duplicate simplices throw.
  static WeightedComplex from_pairs(int n, std::vector<std::pair<Simplex, Scalar>> pairs,
                                    FieldSpec field);

  const Complex& complex() const { return complex_; }
  std::span<const Scalar> weights() const { return weights_; }
  FieldSpec field() const { return field_; }

  friend bool operator==(const WeightedComplex&, const WeightedComplex&) = default;

 private:
  Complex complex_;
  std::vector<Scalar> weights_;
  FieldSpec field_;
};

/// The rows of the balancing system: the empty face plus every sub-multiset of
/// cardinality 1..c-1 of some simplex, sorted by (cardinality, entries).
std::vector<Multiset> balancing_faces(const Complex& complex);

/// Sum over simplices of embedding_multiplicity(face, sigma) * w_sigma.
/// Requires |face| <= c - 1.
Scalar balancing_sum(const WeightedComplex& wc, const Multiset& face);

/// Balanced in every degree 0..c-1.
bool is_balanced(const WeightedComplex& wc);

/// {s1 + s2 : s1 in a, s2 in b} as multiset unions, deduplicated.
Complex product(const Complex& a, const Complex& b);

struct Restriction {
  WeightedComplex complex;
  /// original_labels[k] is the label that became k + 1.
  std::vector<int> original_labels;
};

/// Relabels a balanced complex onto 1..|Supp| order-preservingly, with
/// n = |Supp| + 1. Throws DomainError if the input is not balanced.
Restriction restrict_to_support(const WeightedComplex& wc);

}  // namespace balcx
