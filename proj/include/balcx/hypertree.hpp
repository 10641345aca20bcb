#pragma once

#include <optional>
#include <string>
#include <vector>

#include "balcx/enumeration.hpp"

namespace balcx {

/// A candidate hypertree: subsets Gamma_1..Gamma_d of the vertex set [n].
/// Construction only checks labels; the axioms are checked separately.
class Hypertree {
 public:
  Hypertree(int n, std::vector<std::vector<int>> parts);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& parts() const { return parts_; }
  std::size_t part_count() const { return parts_.size(); }
  /// valences()[v - 1] = number of parts containing v.
  std::vector<int> valences() const;

  friend bool operator==(const Hypertree&, const Hypertree&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> parts_;
};

struct AxiomVerdict {
  bool passes = false;
  /// Axiom numbers: 1 part size, 2 valence, 3 convexity, 4 normality. They are
  /// checked in the order 1, 4, 2, 3 (cheapest first); `first_violated` is the
  /// first failure in that order.
  std::optional<int> first_violated;
  std::vector<int> violated;
  std::string message;
};

AxiomVerdict check_axioms(const Hypertree& candidate);

/// d - v_i for a vertex i, or d - 1 when `vertex` is empty (a point outside
/// the hypertree's vertex set). Throws DomainError unless the axioms hold.
int hypertree_degree(const Hypertree& h, std::optional<int> vertex);

/// d - v_max.
int minimal_degree(const Hypertree& h);

/// Relabeling-invariant normal form: the least sorted part list over the
/// relabelings that order vertices by an invariant refined coloring (seeded
/// by valence and part sizes).
Hypertree canonical_form(const Hypertree& h);

/// Every hypertree on [n] with parts of size at most max_part_size, one per
/// isomorphism class, sorted by canonical form.
std::vector<Hypertree> enumerate_hypertrees(
    int n, int max_part_size, const EnumerationOptions& options = EnumerationOptions::from_environment());

}  // namespace balcx
