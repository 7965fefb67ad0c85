#include <doctest.h>

#include <random>

#include "tamagawa/group.hpp"

using namespace tamagawa;

TEST_CASE("group basics") {
  const FiniteAbelianGroup g({2, 4});
  CHECK(g.order() == 8);
  CHECK(g.rank() == 2);
  CHECK(g.to_string() == "Z/2 x Z/4");
  CHECK(FiniteAbelianGroup::trivial().to_string() == "0");
  CHECK(g.torsion_count(2) == 4);
  CHECK(g.torsion_count(4) == 8);
  CHECK(g.torsion_count(3) == 1);
  for (std::int64_t x = 0; x < g.order(); ++x) {
    CHECK(g.encode(g.decode(x)) == x);
    CHECK(g.add(x, g.negate(x)) == 0);
    CHECK(g.multiply(4, x) == 0);
  }
  CHECK_THROWS(FiniteAbelianGroup({0}));
}

TEST_CASE("canonical form uses invariant factors") {
  CHECK(FiniteAbelianGroup({6, 4}).canonical() == FiniteAbelianGroup({2, 12}));
  CHECK(FiniteAbelianGroup({3, 5}).canonical() == FiniteAbelianGroup({15}));
  CHECK(FiniteAbelianGroup({1, 2, 1}).canonical() == FiniteAbelianGroup({2}));
  CHECK(FiniteAbelianGroup({1}).canonical() == FiniteAbelianGroup::trivial());
  CHECK(FiniteAbelianGroup({2, 12}).is_canonical());
  CHECK_FALSE(FiniteAbelianGroup({12, 2}).is_canonical());
}

TEST_CASE("automorphisms are validated") {
  const FiniteAbelianGroup v4({2, 2});
  const GroupAutomorphism swap(v4, {{0, 1}, {1, 0}});
  CHECK(swap.order(v4) == 2);
  const GroupAutomorphism cycle(v4, {{0, 1}, {1, 1}});
  CHECK(cycle.order(v4) == 3);
  CHECK(cycle.power(v4, 3).is_identity(v4));
  CHECK_THROWS(GroupAutomorphism(v4, {{1, 1}, {1, 1}}));  // not bijective

  const FiniteAbelianGroup g({2, 4});
  CHECK_THROWS(GroupAutomorphism(g, {{1, 1}, {1, 1}}));  // Z/2 -> Z/4 by 1 is not well defined
  CHECK_NOTHROW(GroupAutomorphism(g, {{1, 1}, {2, 1}}));

  CHECK(GroupAutomorphism::negation(FiniteAbelianGroup::cyclic(6)).order(FiniteAbelianGroup::cyclic(6)) == 2);
  CHECK(GroupAutomorphism::negation(FiniteAbelianGroup::cyclic(2)).is_identity(FiniteAbelianGroup::cyclic(2)));
}

TEST_CASE("apply is a homomorphism and compose matches sequential application") {
  std::mt19937_64 rng(2);
  const FiniteAbelianGroup g({3, 9});
  const GroupAutomorphism a(g, {{1, 1}, {3, 2}});
  const GroupAutomorphism b(g, {{2, 0}, {0, 4}});
  const auto ab = a.compose(g, b);
  for (std::int64_t x = 0; x < g.order(); ++x) {
    const std::int64_t y = static_cast<std::int64_t>(rng() % g.order());
    CHECK(a.apply(g, g.add(x, y)) == g.add(a.apply(g, x), a.apply(g, y)));
    CHECK(ab.apply(g, x) == a.apply(g, b.apply(g, x)));
  }
}

TEST_CASE("torsion counts recover the group") {
  for (const auto& g : {FiniteAbelianGroup({2, 12}), FiniteAbelianGroup({5}), FiniteAbelianGroup({3, 3, 9})}) {
    CHECK(group_from_torsion_counts(g.order(), [&](std::int64_t m) { return g.torsion_count(m); }) == g.canonical());
  }
}

TEST_CASE("component group models") {
  const auto split = ComponentGroupModel::cyclic(5, false);
  CHECK(split.frobenius_order() == 1);
  const auto nonsplit = ComponentGroupModel::cyclic(6, true);
  CHECK(nonsplit.frobenius_order() == 2);
  CHECK(ComponentGroupModel::trivial().frobenius_order() == 1);
}
