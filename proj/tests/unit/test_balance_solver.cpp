#include "doctest.h"

#include <cstdlib>

#include "balcx/balance_solver.hpp"
#include "balcx/errors.hpp"
#include "balcx/fixtures.hpp"
#include "support/generators.hpp"

using namespace balcx;
using namespace balcx::testing;

namespace {

const Complex kTriangle(5, {Simplex{1, 2}, Simplex{2, 3}, Simplex{1, 3}});
const Complex kSquare(5, {Simplex{1, 2}, Simplex{2, 3}, Simplex{3, 4}, Simplex{1, 4}});
const Complex kK4(5, {Simplex{1, 2}, Simplex{1, 3}, Simplex{1, 4}, Simplex{2, 3}, Simplex{2, 4}, Simplex{3, 4}});
const Complex kTwoTriangles(7, {Simplex{1, 2}, Simplex{2, 3}, Simplex{1, 3}, Simplex{4, 5}, Simplex{5, 6},
                                Simplex{4, 6}});

// Number of solutions of M v = 0 over F_p by enumeration; equals p^dim.
std::uint64_t count_solutions(const Matrix& m) {
  const std::uint64_t p = m.field().characteristic();
  std::vector<std::uint64_t> digits(m.cols(), 0);
  std::uint64_t count = 0;
  while (true) {
    Vector v;
    for (auto d : digits) v.push_back(Scalar::from_integer(static_cast<std::int64_t>(d), m.field()));
    const auto image = m.multiply(v);
    if (std::all_of(image.begin(), image.end(), [](const Scalar& s) { return s.is_zero(); })) ++count;
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == p - 1) digits[k++] = 0;
    if (k == digits.size()) break;
    ++digits[k];
  }
  return count;
}

std::uint64_t power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

}  // namespace

TEST_CASE("nullspace examples") {
  const auto octagon = alternating_cycle(8, 9).complex();
  const auto ns = nullspace(build_constraints(octagon, FieldSpec{}));
  REQUIRE(ns.dimension == 1);
  const auto verdict = decide_balanceable(octagon, FieldSpec{});
  REQUIRE(verdict.witness);
  for (std::size_t i = 0; i < octagon.size(); ++i) {
    // Alternating around the cycle: +1 exactly on the edges {i, i+1} with i odd.
    const auto e = octagon.simplices()[i].entries();
    const bool odd_edge = (e[1] == e[0] + 1) && (e[0] % 2 == 1);
    CHECK((*verdict.witness)[i].to_string() == (odd_edge ? "1" : "-1"));
  }
  CHECK(nullspace(build_constraints(kTriangle, FieldSpec{})).dimension == 0);
  CHECK(nullspace(build_constraints(kK4, FieldSpec{})).dimension == 2);
}

TEST_CASE("constraint rows are the embedded faces plus the empty face") {
  const auto system = build_constraints(kSquare, FieldSpec{});
  CHECK(system.rows.size() == 5);
  CHECK(system.rows.front() == Multiset{});
  CHECK(system.columns.size() == 4);
  const auto loops = build_constraints(Complex(5, {Simplex{1, 1}, Simplex{1, 2}}), FieldSpec(2));
  CHECK(loops.matrix.at(1, 0).is_zero());  // face {1} in {1,1}: 2 = 0 in F_2
}

TEST_CASE("nullspace dimension matches solution counts over small fields") {
  Rng rng(41);
  for (std::uint64_t p : {2ULL, 3ULL}) {
    const FieldSpec f(p);
    for (int i = 0; i < 60; ++i) {
      const auto c = random_complex(rng, 6, static_cast<std::size_t>(uniform(rng, 1, 3)),
                                    static_cast<std::size_t>(uniform(rng, 1, p == 2 ? 9 : 6)), coin(rng));
      const auto system = build_constraints(c, f);
      const auto ns = nullspace(system);
      CHECK(count_solutions(system.matrix) == power(p, ns.dimension));
      for (const auto& v : ns.basis) {
        const auto image = system.matrix.multiply(v);
        CHECK(std::all_of(image.begin(), image.end(), [](const Scalar& s) { return s.is_zero(); }));
      }
    }
  }
}

TEST_CASE("characteristic decides two disjoint triangles") {
  const auto two = decide_balanceable(kTwoTriangles, FieldSpec(2));
  CHECK(two.balanceable);
  REQUIRE(two.witness);
  for (const auto& w : *two.witness) CHECK(w.is_one());
  for (std::uint64_t p : {0ULL, 3ULL, 5ULL}) CHECK_FALSE(decide_balanceable(kTwoTriangles, FieldSpec(p)).balanceable);
  CHECK(decide_balanceable(alternating_cycle(6, 7).complex(), FieldSpec{}).balanceable);
  const auto empty = decide_balanceable(kTriangle, FieldSpec{});
  CHECK_FALSE(empty.balanceable);
  CHECK(empty.nullspace_dimension == 0);
  CHECK_FALSE(empty.witness);
}

TEST_CASE("witnesses are full-support balanced weightings") {
  Rng rng(43);
  int balanceable = 0;
  for (std::uint64_t p : {0ULL, 2ULL, 3ULL, 7ULL}) {
    const FieldSpec f(p);
    for (int i = 0; i < 150; ++i) {
      const auto c = random_complex(rng, 6, static_cast<std::size_t>(uniform(rng, 1, 3)),
                                    static_cast<std::size_t>(uniform(rng, 2, 10)), coin(rng));
      const auto verdict = decide_balanceable(c, f);
      CHECK(verdict.balanceable == verdict.witness.has_value());
      if (!verdict.witness) continue;
      ++balanceable;
      const WeightedComplex wc(c, *verdict.witness, f);
      CHECK(is_balanced(wc));
      if (p == 0) {
        CHECK(verdict.witness->front().rational() > 0);
        mpz_class g = 0;
        for (const auto& w : *verdict.witness) {
          CHECK(w.rational().get_den() == 1);
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.rational().get_num_mpz_t());
        }
        CHECK(g == 1);
      } else {
        CHECK(verdict.witness->front().is_one());
      }
      // Any nonzero multiple balances too.
      std::vector<Scalar> scaled;
      const Scalar r = random_nonzero(rng, f);
      for (const auto& w : *verdict.witness) scaled.push_back(r * w);
      CHECK(is_balanced(WeightedComplex(c, scaled, f)));
    }
  }
  CHECK(balanceable > 20);
}

TEST_CASE("minimality agrees with the subset oracle") {
  CHECK(is_minimal(alternating_cycle(8, 9).complex(), FieldSpec{}));
  CHECK_FALSE(is_minimal(kK4, FieldSpec{}));
  CHECK_FALSE(brute_force_minimal_oracle(kK4, FieldSpec{}));
  CHECK(brute_force_minimal_oracle(kSquare, FieldSpec{}));
  CHECK(is_minimal(kTwoTriangles, FieldSpec(2)));
  CHECK(brute_force_minimal_oracle(Complex(5, {Simplex{1}, Simplex{2}}), FieldSpec{}));

  Rng rng(47);
  int minimal = 0;
  for (std::uint64_t p : {0ULL, 2ULL, 3ULL}) {
    const FieldSpec f(p);
    for (int i = 0; i < 250; ++i) {
      const auto c = random_complex(rng, uniform(rng, 4, 6), static_cast<std::size_t>(uniform(rng, 1, 3)),
                                    static_cast<std::size_t>(uniform(rng, 1, 12)), coin(rng));
      const bool fast = is_minimal(c, f);
      CHECK(fast == brute_force_minimal_oracle(c, f));
      if (fast) {
        ++minimal;
        CHECK(nullspace(build_constraints(c, f)).dimension == 1);
      }
    }
  }
  CHECK(minimal > 10);
  std::vector<Simplex> many;
  for (int a = 1; a <= 7; ++a) {
    for (int b = a; b <= 7; ++b) many.push_back(Simplex{a, b});
  }
  CHECK_THROWS_AS(brute_force_minimal_oracle(Complex(8, many), FieldSpec{}), DomainError);
}

TEST_CASE("finite-field search respects its budget") {
  // Seven disjoint squares: nullspace dimension 7 over F_3, 3^7 > 2^10.
  std::vector<Simplex> squares;
  for (int k = 0; k < 7; ++k) {
    const int b = 4 * k;
    for (auto [x, y] : {std::pair{1, 2}, {2, 3}, {3, 4}, {1, 4}}) squares.push_back(Simplex{b + x, b + y});
  }
  const Complex c(30, squares);
  SolverOptions tight;
  tight.max_search_bits = 10;
  CHECK_THROWS_AS(decide_balanceable(c, FieldSpec(3), tight), BudgetExceeded);
  SolverOptions roomy;
  roomy.max_search_bits = 12;
  CHECK(decide_balanceable(c, FieldSpec(3), roomy).balanceable);
  CHECK(decide_balanceable(c, FieldSpec{}, tight).balanceable);  // char 0 never searches
}

TEST_CASE("worker count does not change verdicts") {
  Rng rng(53);
  for (int i = 0; i < 40; ++i) {
    const auto c = random_complex(rng, 7, 2, static_cast<std::size_t>(uniform(rng, 3, 12)), true);
    for (std::uint64_t p : {2ULL, 3ULL}) {
      SolverOptions one;
      SolverOptions four;
      four.jobs = 4;
      const auto a = decide_balanceable(c, FieldSpec(p), one);
      const auto b = decide_balanceable(c, FieldSpec(p), four);
      CHECK(a.balanceable == b.balanceable);
      CHECK(a.witness == b.witness);
    }
  }
}

TEST_CASE("search cap reads the environment") {
  setenv("BC_MAX_NULLSPACE_DIM", "5", 1);
  CHECK(SolverOptions::from_environment().max_search_bits == 5);
  setenv("BC_MAX_NULLSPACE_DIM", "many", 1);
  CHECK_THROWS_AS(SolverOptions::from_environment(), DomainError);
  unsetenv("BC_MAX_NULLSPACE_DIM");
  CHECK(SolverOptions::from_environment().max_search_bits == 16);
}
