#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "balcx/complex.hpp"
#include "balcx/linear_algebra.hpp"

namespace balcx {

/// The balancing conditions of a complex as a linear system: one row per face
/// in balancing_faces(), one column per simplex, entries the field image of
/// the embedding multiplicity.
struct ConstraintSystem {
  std::vector<Multiset> rows;
  std::vector<Simplex> columns;
  Matrix matrix;
};

ConstraintSystem build_constraints(const Complex& complex, FieldSpec field);

Nullspace nullspace(const ConstraintSystem& system);

struct SolverOptions {
  /// Finite-field witness search runs only while p^dim <= 2^max_search_bits
  /// (for p = 2 this caps the nullspace dimension at max_search_bits).
  std::size_t max_search_bits = 16;
  /// Worker threads for the finite-field search. Results do not depend on it.
  unsigned jobs = 1;

  /// Defaults, overridden by BC_MAX_NULLSPACE_DIM when set.
  static SolverOptions from_environment();
};

struct BalanceVerdict {
  FieldSpec field;
  bool balanceable = false;
  /// All-nonzero balancing weights, aligned with Complex::simplices(). Over Q
  /// normalized to a primitive integer vector with positive first entry, over
  /// F_p to first entry 1.
  std::optional<Vector> witness;
  std::size_t nullspace_dimension = 0;
  std::vector<Vector> nullspace_basis;
};

/// Throws BudgetExceeded when the finite-field search would exceed the cap.
BalanceVerdict decide_balanceable(const Complex& complex, FieldSpec field,
                                  const SolverOptions& options = SolverOptions::from_environment());

/// Nullspace of dimension exactly one whose generator has full support.
bool is_minimal(const Complex& complex, FieldSpec field);

/// Literal definition: balanceable, and no proper nonempty subset is. At most
/// 20 simplices.
bool brute_force_minimal_oracle(const Complex& complex, FieldSpec field);

}  // namespace balcx
