#include "doctest.h"

#include <algorithm>
#include <set>

#include "balcx/errors.hpp"
#include "balcx/fixtures.hpp"
#include "balcx/hypertree.hpp"
#include "support/generators.hpp"

using namespace balcx;
using namespace balcx::testing;

namespace {

const Hypertree kSix(6, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}});
const Hypertree kSeven(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {3, 5, 7}});

Hypertree relabel(Rng& rng, const Hypertree& h) {
  std::vector<int> perm(static_cast<std::size_t>(h.n()) + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<std::vector<int>> parts;
  for (const auto& part : h.parts()) {
    std::vector<int> mapped;
    for (int v : part) mapped.push_back(perm[static_cast<std::size_t>(v)]);
    parts.push_back(std::move(mapped));
  }
  std::shuffle(parts.begin(), parts.end(), rng);
  return Hypertree(h.n(), std::move(parts));
}

/// Convexity straight from the definition, over every proper subfamily.
bool convex_by_definition(const Hypertree& h) {
  const auto d = h.part_count();
  for (std::uint32_t mask = 1; mask + 1 < (1U << d); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::set<int> uni;
    int rhs = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (!((mask >> i) & 1U)) continue;
      uni.insert(h.parts()[i].begin(), h.parts()[i].end());
      rhs += static_cast<int>(h.parts()[i].size()) - 2;
    }
    if (static_cast<int>(uni.size()) - 2 <= rhs) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("construction validates labels") {
  CHECK_THROWS_AS(Hypertree(6, {{1, 2, 7}}), DomainError);
  CHECK_THROWS_AS(Hypertree(6, {{1, 1, 2}}), DomainError);
  CHECK_THROWS_AS(Hypertree(0, {}), DomainError);
  CHECK(Hypertree(6, {{3, 2, 1}}).parts()[0] == std::vector<int>{1, 2, 3});
  CHECK(kSix.valences() == std::vector<int>(6, 2));
}

TEST_CASE("axiom checks on worked candidates") {
  CHECK(check_axioms(kSix).passes);
  CHECK(check_axioms(kSeven).passes);

  const auto single = check_axioms(Hypertree(3, {{1, 2, 3}}));
  CHECK_FALSE(single.passes);
  CHECK(single.first_violated == 2);
  CHECK(single.violated == std::vector<int>{2});

  const auto disjoint = check_axioms(Hypertree(6, {{1, 2, 3}, {4, 5, 6}}));
  CHECK_FALSE(disjoint.passes);
  CHECK(disjoint.first_violated == 4);

  const auto small_part = check_axioms(Hypertree(4, {{1, 2}, {1, 2, 3, 4}}));
  CHECK(small_part.first_violated == 1);

  // Normal and 2-valent but two parts share two vertices.
  const auto nonconvex = check_axioms(Hypertree(5, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}, {5, 1, 2}}));
  CHECK_FALSE(nonconvex.passes);
}

TEST_CASE("hypertree degrees") {
  for (int v = 1; v <= 6; ++v) CHECK(hypertree_degree(kSix, v) == 2);
  CHECK(hypertree_degree(kSix, std::nullopt) == 3);
  CHECK(minimal_degree(kSix) == 2);
  CHECK(hypertree_degree(kSeven, 1) == 2);
  for (int v = 2; v <= 7; ++v) CHECK(hypertree_degree(kSeven, v) == 3);
  CHECK(hypertree_degree(kSeven, std::nullopt) == 4);
  CHECK(minimal_degree(kSeven) == 2);
  CHECK_THROWS_AS(hypertree_degree(Hypertree(6, {{1, 2, 3}, {4, 5, 6}}), 1), DomainError);
  CHECK_THROWS_AS(hypertree_degree(kSix, 7), DomainError);
}

TEST_CASE("fixtures carry the small hypertrees") {
  CHECK(hypertree_from_json(fixture("hypertree-6")) == kSix);
  CHECK(hypertree_from_json(fixture("hypertree-7")) == kSeven);
}

TEST_CASE("canonical form is a relabeling invariant") {
  Rng rng(97);
  for (const auto& h : {kSix, kSeven}) {
    const auto canon = canonical_form(h);
    CHECK(check_axioms(canon).passes);
    for (int i = 0; i < 50; ++i) CHECK(canonical_form(relabel(rng, h)) == canon);
  }
  for (int i = 0; i < 100; ++i) {
    const int n = uniform(rng, 5, 9);
    std::vector<std::vector<int>> parts;
    for (int k = uniform(rng, 1, 5); k > 0; --k) {
      const auto s = random_simplex(rng, n, static_cast<std::size_t>(uniform(rng, 3, 4)), false);
      parts.emplace_back(s.entries().begin(), s.entries().end());
    }
    const Hypertree h(n, parts);
    CHECK(canonical_form(relabel(rng, h)) == canonical_form(h));
  }
  CHECK_FALSE(canonical_form(kSix) == canonical_form(Hypertree(6, {{1, 2, 3}, {4, 5, 6}})));
}

TEST_CASE("enumeration at small n") {
  CHECK(enumerate_hypertrees(5, 5).empty());
  const auto six = enumerate_hypertrees(6, 3);
  REQUIRE(six.size() == 1);
  CHECK(six[0] == canonical_form(kSix));
  CHECK(enumerate_hypertrees(6, 6).size() == 1);
  const auto seven = enumerate_hypertrees(7, 4);
  REQUIRE(seven.size() == 1);
  CHECK(seven[0] == canonical_form(kSeven));
  CHECK(enumerate_hypertrees(4, 4).empty());
}

TEST_CASE("enumerated hypertrees satisfy the structural properties") {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& h : enumerate_hypertrees(n, n)) {
      CHECK(check_axioms(h).passes);
      CHECK(convex_by_definition(h));
      CHECK(minimal_degree(h) >= 2);
      CHECK(minimal_degree(h) == 2);
      for (std::size_t i = 0; i < h.part_count(); ++i) {
        for (std::size_t j = i + 1; j < h.part_count(); ++j) {
          std::vector<int> common;
          std::set_intersection(h.parts()[i].begin(), h.parts()[i].end(), h.parts()[j].begin(),
                                h.parts()[j].end(), std::back_inserter(common));
          CHECK(common.size() <= 1);
        }
      }
    }
  }
}

TEST_CASE("enumeration honours the budget and job count") {
  EnumerationOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(enumerate_hypertrees(7, 4, tiny), BudgetExceeded);
  EnumerationOptions parallel;
  parallel.jobs = 3;
  CHECK(enumerate_hypertrees(7, 4, parallel) == enumerate_hypertrees(7, 4));
  CHECK_THROWS_AS(enumerate_hypertrees(31, 3), DomainError);
}

TEST_CASE("no hypertree on 8 vertices reaches minimal degree 2") {
  const auto eight = enumerate_hypertrees(8, 8);
  CHECK_FALSE(eight.empty());
  for (const auto& h : eight) {
    CHECK(check_axioms(h).passes);
    CHECK(minimal_degree(h) > 2);
  }
}
