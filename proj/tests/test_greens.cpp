#include <doctest.h>

#include "oracles.hpp"
#include "sgcat/greens.hpp"

using namespace sgcat;

namespace {
  ElementSet as_vector(oracle::Set const& s) {
    return ElementSet(s.begin(), s.end());
  }
}  // namespace

TEST_CASE("principal ideals") {
  Semigroup const C21 = oracle::fixture("C21");
  CHECK(principal_right_ideal(C21, 0) == ElementSet{0, 1});
  Semigroup const T2 = oracle::fixture("T2");
  CHECK(principal_right_ideal(T2, 2) == ElementSet{2, 3});
  CHECK(principal_left_ideal(T2, 2) == ElementSet{2});

  for (auto const& name : oracle::fixture_names()) {
    Semigroup const S = oracle::fixture(name);
    for (Element s = 0; s < S.size(); ++s) {
      CHECK(principal_right_ideal(S, s) == as_vector(oracle::right_ideal(S, s)));
      CHECK(principal_left_ideal(S, s) == as_vector(oracle::left_ideal(S, s)));
      CHECK(principal_ideal(S, s) == as_vector(oracle::ideal(S, s)));
      for (Element t = 0; t < S.size(); ++t) {
        CHECK(right_left_intersection(S, s, t)
              == as_vector(oracle::intersect(oracle::right_ideal(S, s),
                                             oracle::left_ideal(S, t))));
      }
    }
  }
}

TEST_CASE("Green's relations agree with ideal equality") {
  for (auto const& name : oracle::fixture_names()) {
    CAPTURE(name);
    Semigroup const  S = oracle::fixture(name);
    GreensData const g = greens_data(S);
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = 0; t < S.size(); ++t) {
        CHECK(g.r_related(s, t) == oracle::r_rel(S, s, t));
        CHECK(g.l_related(s, t) == oracle::l_rel(S, s, t));
        CHECK(g.h_related(s, t)
              == (oracle::r_rel(S, s, t) && oracle::l_rel(S, s, t)));
        // D (join of R and L) is J on finite semigroups.
        CHECK(g.d_related(s, t) == oracle::j_rel(S, s, t));
        CHECK(g.leq_j(s, t) == oracle::j_leq(S, s, t));
        CHECK(g.leq_r(s, t) == (oracle::right_ideal(S, t).count(s) > 0));
        CHECK(g.leq_l(s, t) == (oracle::left_ideal(S, t).count(s) > 0));
      }
    }
    // Regular D-classes are exactly those with an idempotent, and every
    // member of one is regular.
    for (std::size_t d = 0; d < g.d_classes.size(); ++d) {
      bool has_idempotent = false;
      for (Element s : g.d_classes[d]) {
        has_idempotent = has_idempotent || oracle::idempotent(S, s);
      }
      CHECK(g.d_class_regular[d] == has_idempotent);
      for (Element s : g.d_classes[d]) {
        CHECK(oracle::regular(S, s) == has_idempotent);
      }
    }
  }
}

TEST_CASE("Green's data on named examples") {
  Semigroup const  T2 = oracle::fixture("T2");
  GreensData const g  = greens_data(T2);
  CHECK(g.d_classes == std::vector<ElementSet>{{0, 1}, {2, 3}});
  CHECK(g.r_related(2, 3));
  CHECK_FALSE(g.l_related(2, 3));

  GreensData const n2 = greens_data(oracle::fixture("N2"));
  CHECK(n2.d_classes.size() == 2);
  CHECK_FALSE(n2.d_class_regular[0]);
  CHECK(n2.d_class_regular[1]);

  // A group is a single D-class.
  GreensData const z2 = greens_data(
      Semigroup::from_cayley_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
  CHECK(z2.d_classes.size() == 1);
}

TEST_CASE("D-class preorder") {
  DClassPreorder const t2 = d_class_preorder(oracle::fixture("T2"));
  REQUIRE(t2.classes.size() == 2);
  CHECK(t2.leq(1, 0));
  CHECK_FALSE(t2.leq(0, 1));
  CHECK(covering_pairs(t2.leq)
        == std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}});

  CHECK(d_class_preorder(oracle::fixture("TRIV")).classes.size() == 1);

  DClassPreorder const b2 = d_class_preorder(oracle::fixture("B2"));
  REQUIRE(b2.classes.size() == 2);
  CHECK(b2.classes[1] == ElementSet{4});
  CHECK(b2.leq(1, 0));

  for (auto const& name : oracle::fixture_names()) {
    DClassPreorder const D = d_class_preorder(oracle::fixture(name));
    std::size_t const    n = D.classes.size();
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(D.leq(a, a));
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b) {
          CHECK_FALSE((D.leq(a, b) && D.leq(b, a)));
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (D.leq(a, b) && D.leq(b, c)) {
            CHECK(D.leq(a, c));
          }
        }
      }
    }
  }
}

TEST_CASE("relations in LU(S) are restrictions of those in S") {
  for (auto const& name : oracle::fixture_names()) {
    Semigroup const    S  = oracle::fixture(name);
    Subsemigroup const LU = local_units_subsemigroup(S);
    GreensData const   gs = greens_data(S);
    GreensData const   gl = greens_data(LU.semigroup);
    std::size_t const  k  = LU.embedding.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Element const s = LU.embedding[i], t = LU.embedding[j];
        CHECK(gl.leq_r(i, j) == gs.leq_r(s, t));
        CHECK(gl.leq_l(i, j) == gs.leq_l(s, t));
        CHECK(gl.leq_j(i, j) == gs.leq_j(s, t));
      }
    }
  }
}
