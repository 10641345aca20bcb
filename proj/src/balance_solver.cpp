#include "balcx/balance_solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "balcx/errors.hpp"

namespace balcx {

namespace {

bool full_support(const Vector& v) {
  return std::none_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector combine(const std::vector<Vector>& basis, const Vector& coefficients, FieldSpec field) {
  Vector out(basis.front().size(), Scalar::zero(field));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coefficients[i].is_zero()) continue;
    for (std::size_t c = 0; c < out.size(); ++c) {
      if (!basis[i][c].is_zero()) out[c] += coefficients[i] * basis[i][c];
    }
  }
  return out;
}

void normalize_witness(Vector& w) {
  const FieldSpec field = w.front().field();
  if (!field.is_rational()) {
    const Scalar inv = w.front().inverse();
    for (auto& x : w) x *= inv;
    return;
  }
  mpz_class den_lcm = 1;
  for (const auto& x : w) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.rational().get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& x : w) {
    mpz_class scaled = x.rational().get_num() * (den_lcm / x.rational().get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  mpq_class factor(den_lcm, num_gcd);
  if (sgn(w.front().rational()) < 0) factor = -factor;
  const Scalar s = Scalar::from_rational(factor, field);
  for (auto& x : w) x *= s;
}

// Char 0: each coordinate of sum_i t^i v_i is a polynomial in t of degree
// < dim that is not identically zero, so at most cols * dim values of t fail.
Vector rational_witness(const std::vector<Vector>& basis, FieldSpec field) {
  const std::size_t dim = basis.size();
  const std::size_t bound = basis.front().size() * dim + 1;
  for (std::size_t t = 1; t <= bound; ++t) {
    Vector coefficients;
    Scalar power = Scalar::one(field);
    const Scalar step = lift_integer(static_cast<std::int64_t>(t), field);
    for (std::size_t i = 0; i < dim; ++i) {
      coefficients.push_back(power);
      power *= step;
    }
    Vector candidate = combine(basis, coefficients, field);
    if (full_support(candidate)) return candidate;
  }
  throw DomainError("internal: t-sweep exhausted its provable bound");
}

// Decodes `index` as base-p digits (most significant = first basis vector).
Vector decode_coefficients(std::uint64_t index, std::size_t dim, FieldSpec field) {
  const std::uint64_t p = field.characteristic();
  Vector coefficients(dim, Scalar::zero(field));
  for (std::size_t i = dim; i-- > 0;) {
    coefficients[i] = Scalar::from_integer(static_cast<std::int64_t>(index % p), field);
    index /= p;
  }
  return coefficients;
}

bool leading_coefficient_is_one(const Vector& coefficients) {
  for (const auto& c : coefficients) {
    if (!c.is_zero()) return c.is_one();
  }
  return false;
}

// Searches the projectivized nullspace in lexicographic order of coefficient
// vectors; the first hit is returned regardless of the worker count.
std::optional<Vector> finite_field_witness(const std::vector<Vector>& basis, FieldSpec field,
                                           std::uint64_t total, unsigned jobs) {
  const std::size_t dim = basis.size();
  auto scan = [&](std::uint64_t begin, std::uint64_t end) -> std::optional<std::uint64_t> {
    for (std::uint64_t index = begin; index < end; ++index) {
      const Vector coefficients = decode_coefficients(index, dim, field);
      if (!leading_coefficient_is_one(coefficients)) continue;
      if (full_support(combine(basis, coefficients, field))) return index;
    }
    return std::nullopt;
  };

  std::optional<std::uint64_t> hit;
  if (jobs <= 1 || total < 1024) {
    hit = scan(1, total);
  } else {
    std::vector<std::optional<std::uint64_t>> hits(jobs);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      const std::uint64_t begin = std::max<std::uint64_t>(1, j * chunk);
      const std::uint64_t end = std::min<std::uint64_t>(total, (j + 1) * chunk);
      workers.emplace_back([&, j, begin, end] {
        if (begin < end) hits[j] = scan(begin, end);
      });
    }
    for (auto& w : workers) w.join();
    for (const auto& h : hits) {
      if (h) {
        hit = h;
        break;
      }
    }
  }
  if (!hit) return std::nullopt;
  return combine(basis, decode_coefficients(*hit, dim, field), field);
}

}  // namespace

SolverOptions SolverOptions::from_environment() {
  SolverOptions options;
  if (const char* env = std::getenv("BC_MAX_NULLSPACE_DIM")) {
    try {
      options.max_search_bits = std::stoul(env);
    } catch (const std::exception&) {
      throw DomainError(std::string("BC_MAX_NULLSPACE_DIM is not a number: ") + env);
    }
  }
  return options;
}

ConstraintSystem build_constraints(const Complex& complex, FieldSpec field) {
  std::vector<Multiset> rows = balancing_faces(complex);
  std::vector<Simplex> columns(complex.simplices().begin(), complex.simplices().end());
  Matrix matrix(rows.size(), columns.size(), field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const std::int64_t k = embedding_multiplicity(rows[r], columns[c]);
      if (k != 0) matrix.at(r, c) = lift_integer(k, field);
    }
  }
  return ConstraintSystem{std::move(rows), std::move(columns), std::move(matrix)};
}

Nullspace nullspace(const ConstraintSystem& system) { return nullspace(system.matrix); }

BalanceVerdict decide_balanceable(const Complex& complex, FieldSpec field,
                                  const SolverOptions& options) {
  Nullspace ns = nullspace(build_constraints(complex, field));
  BalanceVerdict verdict;
  verdict.field = field;
  verdict.nullspace_dimension = ns.dimension;
  verdict.nullspace_basis = ns.basis;
  if (ns.dimension == 0) return verdict;

  // A simplex that is zero in every basis vector is zero in every solution.
  for (std::size_t c = 0; c < complex.size(); ++c) {
    const bool dead = std::all_of(ns.basis.begin(), ns.basis.end(),
                                  [c](const Vector& v) { return v[c].is_zero(); });
    if (dead) return verdict;
  }

  if (field.is_rational()) {
    verdict.witness = rational_witness(ns.basis, field);
  } else {
    const std::uint64_t p = field.characteristic();
    const std::size_t cap_bits = std::min<std::size_t>(options.max_search_bits, 62);
    const std::uint64_t cap = std::uint64_t{1} << cap_bits;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < ns.dimension; ++i) {
      if (total > cap / p) {
        throw BudgetExceeded("nullspace dimension " + std::to_string(ns.dimension) +
                             " over F_" + std::to_string(p) + " exceeds the search cap 2^" +
                             std::to_string(cap_bits));
      }
      total *= p;
    }
    verdict.witness = finite_field_witness(ns.basis, field, total, options.jobs);
  }
  if (verdict.witness) {
    normalize_witness(*verdict.witness);
    verdict.balanceable = true;
  }
  return verdict;
}

bool is_minimal(const Complex& complex, FieldSpec field) {
  const Nullspace ns = nullspace(build_constraints(complex, field));
  return ns.dimension == 1 && full_support(ns.basis.front());
}

bool brute_force_minimal_oracle(const Complex& complex, FieldSpec field) {
  constexpr std::size_t kMaxSimplices = 20;
  if (complex.size() > kMaxSimplices) {
    throw DomainError("brute-force minimality oracle is limited to " +
                      std::to_string(kMaxSimplices) + " simplices");
  }
  const auto simplices = complex.simplices();
  const std::uint32_t all = (std::uint32_t{1} << simplices.size()) - 1;
  const SolverOptions options;
  auto balanceable = [&](std::uint32_t mask) {
    std::vector<Simplex> subset;
    for (std::size_t i = 0; i < simplices.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) subset.push_back(simplices[i]);
    }
    return decide_balanceable(Complex(complex.n(), std::move(subset)), field, options).balanceable;
  };
  if (!balanceable(all)) return false;
  for (std::uint32_t mask = 1; mask < all; ++mask) {
    if (balanceable(mask)) return false;
  }
  return true;
}

}  // namespace balcx
