#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "balcx/complex.hpp"

namespace balcx {

/// A subset of the labels 1..63, stored as a bitmask. Ordering is
/// lexicographic on the ascending label sequence, so {1,2} < {1,3} < {2}.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> labels);
  explicit IndexSet(std::span<const int> labels);
  static IndexSet from_mask(std::uint64_t mask);

  std::uint64_t mask() const { return mask_; }
  std::size_t size() const;
  bool contains(int label) const { return (mask_ >> label) & 1U; }
  std::vector<int> labels() const;

  /// Comma-joined ascending labels, e.g. "1,3,5,7".
  std::string to_string() const;
  static IndexSet parse(std::string_view text);

  friend bool operator==(IndexSet, IndexSet) = default;
  friend std::strong_ordering operator<=>(IndexSet a, IndexSet b);

 private:
  std::uint64_t mask_ = 0;
};

/// Labels of [n-1] may index exceptional divisors: 1 <= |I| <= n-4.
bool is_admissible(IndexSet set, int n);

/// A class h*H + sum e_I E_I in Pic of the n-pointed moduli space. The
/// exceptional coefficients are signed and only nonzero ones are stored.
class DivisorClass {
 public:
  explicit DivisorClass(int n, std::int64_t h = 0, const std::map<IndexSet, std::int64_t>& e = {});

  static DivisorClass hyperplane(int n) { return DivisorClass(n, 1); }
  static DivisorClass exceptional(int n, IndexSet set);

  int n() const { return n_; }
  std::int64_t h() const { return h_; }
  const std::map<IndexSet, std::int64_t>& e() const { return e_; }
  std::int64_t coefficient(IndexSet set) const;
  void add_to(IndexSet set, std::int64_t delta);

  DivisorClass& operator+=(const DivisorClass& rhs);
  DivisorClass& operator-=(const DivisorClass& rhs);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(std::int64_t m, DivisorClass d);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  void require_same_n(const DivisorClass& other) const;

  int n_;
  std::int64_t h_;
  std::map<IndexSet, std::int64_t> e_;
};

DivisorClass class_add(const DivisorClass& a, const DivisorClass& b);
DivisorClass class_sub(const DivisorClass& a, const DivisorClass& b);
DivisorClass class_scale(std::int64_t m, const DivisorClass& d);

/// A curve recorded only through its intersection numbers with H and the E_I.
class CurveClass {
 public:
  explicit CurveClass(int n, std::int64_t dot_h = 0,
                      const std::map<IndexSet, std::int64_t>& dot_e = {});

  int n() const { return n_; }
  std::int64_t dot_h() const { return dot_h_; }
  const std::map<IndexSet, std::int64_t>& dot_e() const { return dot_e_; }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  int n_;
  std::int64_t dot_h_;
  std::map<IndexSet, std::int64_t> dot_e_;
};

/// Calls fn(IndexSet) for every admissible index set of [n-1].
template <typename Fn>
void for_each_admissible(int n, Fn&& fn) {
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    const auto set = IndexSet::from_mask(bits << 1);
    if (is_admissible(set, n)) fn(set);
  }
}

/// The class c*H - sum_I (c - max_sigma sum_{i in I} mult_i(sigma)) E_I.
/// Defined for every complex; requires 5 <= n <= 24.
DivisorClass divisor_class_of(const Complex& complex);

/// Class of the binomial cleared from u_i - u_j: H - sum_{I avoiding i,j} E_I.
DivisorClass boundary_binomial_class(int i, int j, int n);

std::int64_t pair(const CurveClass& curve, const DivisorClass& divisor);

/// h = 0 and every E-coefficient >= 0.
bool is_effective_sum_of_exceptionals(const DivisorClass& d);

/// Reads the unique non-singular complex with class `d` back off its zero
/// coefficients. Requires c <= n - 4; returns nullopt when no complex has
/// this class.
std::optional<Complex> unique_complex_for_class(const DivisorClass& d, std::size_t c);

}  // namespace balcx
