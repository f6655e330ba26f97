#include <doctest.h>

#include "oracles.hpp"
#include "sgcat/errors.hpp"
#include "sgcat/semigroup.hpp"

using namespace sgcat;

TEST_CASE("from_cayley_table validates and finds the identity") {
  Semigroup const U1 = oracle::fixture("U1");
  CHECK(U1.size() == 2);
  REQUIRE(U1.identity());
  CHECK(*U1.identity() == 0);
  CHECK(U1.name(0) == "1");

  Semigroup const C21 = oracle::fixture("C21");
  CHECK_FALSE(C21.identity());
  for (Element i = 0; i < 2; ++i) {
    for (Element j = 0; j < 2; ++j) {
      for (Element k = 0; k < 2; ++k) {
        CHECK(C21.product(C21.product(i, j), k)
              == C21.product(i, C21.product(j, k)));
      }
    }
  }
}

TEST_CASE("non-associative tables name the first failing triple") {
  // a*a = b and every other product is a: (a*a)*b = a but a*(a*b) = b.
  try {
    Semigroup::from_cayley_table({{1, 0}, {0, 0}});
    FAIL("expected NonAssociative");
  } catch (NonAssociative const& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 0);
    CHECK(e.k == 1);
  }
  CHECK_THROWS_AS(Semigroup::from_cayley_table({{0, 2}, {0, 0}}), OutOfRange);
  CHECK_THROWS_AS(Semigroup::from_cayley_table({{0, 0}, {0}}), OutOfRange);
  CHECK_THROWS_AS(Semigroup::from_cayley_table({}), OutOfRange);
}

TEST_CASE("transformation closure") {
  SUBCASE("swap and constant generate T2 in discovery order") {
    auto const g = generate_from_transformations(
        {make_transformation({0, 1}), make_transformation({1, 0}),
         make_transformation({0, 0})});
    REQUIRE(g.semigroup.size() == 4);
    CHECK(g.representatives[2].images == std::vector<Element>{0, 0});
    CHECK(g.representatives[3].images == std::vector<Element>{1, 1});
    // The table agrees with composing representatives, first s then t.
    for (Element s = 0; s < 4; ++s) {
      for (Element t = 0; t < 4; ++t) {
        CHECK(g.representatives[g.semigroup.product(s, t)]
              == then(g.representatives[s], g.representatives[t]));
      }
    }
  }
  SUBCASE("the fixture file matches") {
    CHECK(oracle::fixture("T2").table()
          == generate_from_transformations(
                 {make_transformation({0, 1}), make_transformation({1, 0}),
                  make_transformation({0, 0})})
                 .semigroup.table());
  }
  SUBCASE("degenerate generator sets") {
    CHECK(generate_from_transformations({make_transformation({0, 1, 2})})
              .semigroup.size()
          == 1);
    CHECK(generate_from_transformations({make_transformation({0, 0})})
              .semigroup.size()
          == 1);
    CHECK_THROWS_AS(generate_from_transformations({}), EmptyGeneratorSet);
    CHECK_THROWS_AS(generate_from_transformations(
                        {make_transformation({0}), make_transformation({0, 1})}),
                    ValidationError);
  }
  SUBCASE("composition is apply-left-first") {
    auto const swap = make_transformation({1, 0});
    auto const c0   = make_transformation({0, 0});
    CHECK(then(swap, c0).images == std::vector<Element>{0, 0});
    CHECK(then(c0, swap).images == std::vector<Element>{1, 1});
    CHECK(c0.rank() == 1);
    CHECK(swap.rank() == 2);
  }
}

TEST_CASE("idempotents") {
  CHECK(idempotents(oracle::fixture("T2")) == ElementSet{0, 2, 3});
  CHECK(idempotents(oracle::fixture("U1")) == ElementSet{0, 1});
  CHECK(idempotents(oracle::fixture("C21")) == ElementSet{1});
  for (auto const& name : oracle::fixture_names()) {
    Semigroup const S = oracle::fixture(name);
    ElementSet      want;
    for (Element x = 0; x < S.size(); ++x) {
      if (oracle::idempotent(S, x)) {
        want.push_back(x);
      }
    }
    CHECK(idempotents(S) == want);
  }
}

TEST_CASE("local units") {
  auto const n2 = local_units_subsemigroup(oracle::fixture("N2"));
  CHECK(n2.embedding == std::vector<Element>{1});
  CHECK(local_units_subsemigroup(oracle::fixture("T2")).embedding.size() == 4);
  CHECK(local_units_subsemigroup(oracle::fixture("C21")).embedding
        == std::vector<Element>{1});
  CHECK(has_local_units(oracle::fixture("RB22")));
  CHECK_FALSE(has_local_units(oracle::fixture("C21")));

  // E(S) S E(S) from the definition, and LU(LU(S)) = LU(S).
  for (auto const& name : oracle::fixture_names()) {
    Semigroup const S = oracle::fixture(name);
    oracle::Set     want;
    for (Element e = 0; e < S.size(); ++e) {
      for (Element f = 0; f < S.size(); ++f) {
        if (!oracle::idempotent(S, e) || !oracle::idempotent(S, f)) {
          continue;
        }
        for (Element s = 0; s < S.size(); ++s) {
          want.insert(S.product(S.product(e, s), f));
        }
      }
    }
    auto const lu = local_units_subsemigroup(S);
    CHECK(lu.embedding == std::vector<Element>(want.begin(), want.end()));
    CHECK(local_units_subsemigroup(lu.semigroup).semigroup.size()
          == lu.semigroup.size());
  }
}

TEST_CASE("induced subsemigroups reject empty and non-closed carriers") {
  CHECK_THROWS_AS(induced_subsemigroup(oracle::fixture("T2"), {}),
                  ValidationError);
  CHECK_THROWS_AS(induced_subsemigroup(oracle::fixture("T2"), {1}),
                  ValidationError);
}

TEST_CASE("regularity and opposite") {
  Semigroup const C21 = oracle::fixture("C21");
  CHECK_FALSE(is_regular(C21, 0));
  CHECK(is_regular(C21, 1));
  CHECK(is_regular(oracle::fixture("B2"), 1));

  Semigroup const op = opposite(oracle::fixture("RZ2"));
  for (Element x = 0; x < 2; ++x) {
    for (Element y = 0; y < 2; ++y) {
      CHECK(op.product(x, y) == x);
    }
  }
  for (auto const& name : oracle::fixture_names()) {
    Semigroup const S = oracle::fixture(name);
    CHECK(opposite(opposite(S)) == S);
    for (Element s = 0; s < S.size(); ++s) {
      CHECK(is_regular(S, s) == oracle::regular(S, s));
    }
  }
}

TEST_CASE("small semigroups up to isomorphism") {
  CHECK(small_semigroups(1).size() == 1);
  CHECK(small_semigroups(2).size() == oracle::semigroups_of_order(2).size());
  CHECK(small_semigroups(2).size() == 5);
  CHECK(small_semigroups(3).size() == 24);
  CHECK_THROWS_AS(small_semigroups(4), SizeCapExceeded);
}
