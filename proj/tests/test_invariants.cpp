#include <doctest.h>

#include "oracles.hpp"
#include "sgcat/errors.hpp"
#include "sgcat/invariants.hpp"
#include "sgcat/lift.hpp"

using namespace sgcat;

namespace {
  std::vector<std::string> action_names() {
    return {"t2_points",   "t2_points_conjugated", "u1_chain",
            "u1_chain_relabeled", "u1_trivial",    "rb22_column",
            "triv_point",  "c21_right_regular"};
  }

  // q LU(S) for every q in Q E(S), straight from the definitions.
  std::set<std::set<State>> orbits_by_brute_force(SAction const& A) {
    Semigroup const& S = A.semigroup();
    std::set<Element> lu;
    for (Element e = 0; e < S.size(); ++e) {
      for (Element f = 0; f < S.size(); ++f) {
        if (!oracle::idempotent(S, e) || !oracle::idempotent(S, f)) {
          continue;
        }
        for (Element s = 0; s < S.size(); ++s) {
          lu.insert(S.product(S.product(e, s), f));
        }
      }
    }
    std::set<std::set<State>> out;
    for (State q = 0; q < A.size(); ++q) {
      for (Element e = 0; e < S.size(); ++e) {
        if (!oracle::idempotent(S, e)) {
          continue;
        }
        std::set<State> orbit;
        for (Element s : lu) {
          orbit.insert(A.act(A.act(q, e), s));
        }
        out.insert(orbit);
      }
    }
    return out;
  }

  BitMatrix chain(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        m.set(i, j, true);
      }
    }
    return m;
  }

  BitMatrix antichain(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m.set(i, i, true);
    }
    return m;
  }

  bool always(std::size_t, std::size_t) {
    return true;
  }
}  // namespace

TEST_CASE("action validation") {
  Semigroup const U1 = oracle::fixture("U1");
  CHECK_THROWS_AS(SAction::make(U1, {{0, 1}, {1}}), OutOfRange);
  CHECK_THROWS_AS(SAction::make(U1, {{0, 2}, {1, 1}}), OutOfRange);
  // q.0 = 0 then 0.1 would have to agree with q.(0 * 1) = q.0.
  CHECK_THROWS_AS(SAction::make(U1, {{1, 0}, {0, 1}}), ActionAxiomViolation);
  CHECK_NOTHROW(SAction::make(U1, {{0, 1}, {1, 1}}));
}

TEST_CASE("faithfulness, images and ranks") {
  CHECK(is_faithful(oracle::action_fixture("t2_points")));
  CHECK(is_faithful(oracle::action_fixture("u1_chain")));
  CHECK_FALSE(is_faithful(oracle::action_fixture("u1_trivial")));
  CHECK_FALSE(is_faithful(oracle::action_fixture("rb22_column")));
  for (auto const& name : oracle::fixture_names()) {
    Semigroup const S = oracle::fixture(name);
    SAction const   R = right_regular_action(S);
    CHECK(R.size() == S.size() + 1);
    CHECK(is_faithful(R));
  }
  for (auto const& name : action_names()) {
    SAction const A = oracle::action_fixture(name);
    for (Element s = 0; s < A.semigroup().size(); ++s) {
      std::set<State> image;
      for (State q = 0; q < A.size(); ++q) {
        image.insert(A.act(q, s));
      }
      CHECK(A.image(s) == StateSet(image.begin(), image.end()));
      CHECK(A.rank(s) == image.size());
    }
  }
}

TEST_CASE("the presheaves A_Q and B_Q") {
  for (auto const& name : action_names()) {
    CAPTURE(name);
    SAction const    A  = oracle::action_fixture(name);
    Semigroup const& S  = A.semigroup();
    auto const       K  = share(build_karoubi(S));
    auto const       D  = share(build_schutzcat(S));
    Presheaf const   PA = presheaf_A(A, K);
    Presheaf const   PB = presheaf_B(A, D);
    CHECK_FALSE(check_presheaf(PA));
    CHECK_FALSE(check_presheaf(PB));
    CHECK(restricts_to(PB, PA));
    for (ObjectId a = 0; a < D->number_of_objects(); ++a) {
      CHECK(PB.values[a] == A.image(D->label(a)));
    }
    for (MorphismId m = 0; m < D->number_of_morphisms(); ++m) {
      auto const [s, u, t] = D->payload(m);
      for (State q = 0; q < A.size(); ++q) {
        CHECK(PB.maps[m][A.act(q, s)] == A.act(q, u));
      }
    }
    if (is_faithful(A)) {
      CHECK(is_faithful(PB));
      CHECK(is_faithful(PA));
    }
    CHECK_FALSE(check_presheaf_transformation(
        PB, PB, identity_functor(D), identity_components(PB)));
    CHECK(components_bijective(PB, PB, identity_functor(D),
                               identity_components(PB)));
  }
}

TEST_CASE("restriction to a subsemigroup") {
  SAction const      A   = oracle::action_fixture("t2_points");
  Subsemigroup const sub = local_units_subsemigroup(A.semigroup());
  SAction const      R   = restrict_action(A, sub);
  REQUIRE(R.semigroup().size() == sub.embedding.size());
  for (State q = 0; q < A.size(); ++q) {
    for (Element i = 0; i < sub.embedding.size(); ++i) {
      CHECK(R.act(q, i) == A.act(q, sub.embedding[i]));
    }
  }
}

TEST_CASE("the poset P(Q)") {
  ActionPoset const chain_poset = action_poset(oracle::action_fixture("u1_chain"));
  CHECK(chain_poset.orbits == std::vector<StateSet>{{0, 1}, {1}});
  CHECK(chain_poset.leq(0, 1));
  CHECK_FALSE(chain_poset.leq(1, 0));

  for (auto const& name : action_names()) {
    CAPTURE(name);
    SAction const     A = oracle::action_fixture(name);
    ActionPoset const P = action_poset(A);
    std::set<std::set<State>> got;
    for (auto const& o : P.orbits) {
      got.emplace(o.begin(), o.end());
    }
    CHECK(got == orbits_by_brute_force(A));
    for (std::size_t i = 0; i < P.orbits.size(); ++i) {
      for (State q : P.generators[i]) {
        CHECK(P.class_of[q] == i);
      }
      for (std::size_t j = 0; j < P.orbits.size(); ++j) {
        std::set<State> const oi(P.orbits[i].begin(), P.orbits[i].end());
        bool contained = true;
        for (State x : P.orbits[j]) {
          contained = contained && oi.count(x);
        }
        CHECK(P.leq(i, j) == contained);
      }
    }
  }
}

TEST_CASE("labeled preorders of D-classes") {
  LabeledPreorder const t2 = labeled_dl(oracle::fixture("T2"));
  REQUIRE(t2.nodes.size() == 2);
  CHECK(t2.labels[0].group.order() == 2);
  CHECK(t2.labels[1].group.order() == 1);
  CHECK(t2.leq(1, 0));
  CHECK_FALSE(t2.leq(0, 1));

  LabeledPreorder const dq = labeled_dq(oracle::action_fixture("t2_points"));
  CHECK(dq.labels[0].rank == 2);
  CHECK(dq.labels[1].rank == 1);

  CHECK_FALSE(labeled_preorders_isomorphic(labeled_dl(oracle::fixture("U1")),
                                           labeled_dl(oracle::fixture("RZ2"))));
  CHECK(labeled_preorders_isomorphic(labeled_dl(oracle::fixture("TRIV")),
                                     labeled_dl(oracle::fixture("RB22"))));
  // K(RZ2) is indiscrete on two objects, hence equivalent to K(TRIV).
  CHECK(labeled_preorders_isomorphic(labeled_dl(oracle::fixture("TRIV")),
                                     labeled_dl(oracle::fixture("RZ2"))));
  CHECK(find_equivalence(share(build_karoubi(oracle::fixture("TRIV"))),
                               share(build_karoubi(oracle::fixture("RZ2")))));

  // C21 has no local units at x, so LU(C21) = {x^2}.
  LabeledPreorder const lu = labeled_dl_local_units(oracle::fixture("C21"));
  CHECK(lu.nodes == std::vector<ElementSet>{{1}});
  LabeledPreorder const kept
      = remove_classes_outside(labeled_dl(oracle::fixture("C21")), {1});
  CHECK(kept.nodes == lu.nodes);

  for (auto const& name : oracle::fixture_names()) {
    LabeledPreorder const P = labeled_dl(oracle::fixture(name));
    CHECK(labeled_preorders_isomorphic(P, P));
    for (std::size_t i = 0; i < P.nodes.size(); ++i) {
      Element const s = P.nodes[i].front();
      CHECK(P.labels[i].regular == oracle::regular(oracle::fixture(name), s));
      CHECK(P.labels[i].group.order()
            == oracle::h_class(oracle::fixture(name), s).size());
    }
  }
}

TEST_CASE("preorder isomorphism search") {
  CHECK(find_preorder_isomorphism(chain(3), chain(3), always));
  CHECK_FALSE(find_preorder_isomorphism(chain(3), antichain(3), always));
  CHECK_FALSE(find_preorder_isomorphism(chain(3), chain(2), always));
  auto const phi = find_preorder_isomorphism(
      chain(3), chain(3), [](std::size_t i, std::size_t j) { return i == j; });
  REQUIRE(phi);
  CHECK(*phi == std::vector<std::size_t>{0, 1, 2});
  CHECK_FALSE(find_preorder_isomorphism(
      chain(3), chain(3), [](std::size_t i, std::size_t j) { return i != j; }));
  // Node 7 fits only where node 0 goes first, so the search backtracks.
  auto const late = [](std::size_t i, std::size_t j) { return i < 7 || j == 0; };
  CHECK(find_preorder_isomorphism(antichain(8), antichain(8), late));
  CHECK_THROWS_AS(find_preorder_isomorphism(antichain(8), antichain(8), late, 3),
                  SearchBudgetExceeded);
}

TEST_CASE("equivalent actions") {
  struct Pair {
    char const* a;
    char const* b;
  };
  for (auto [a, b] : {Pair{"triv_point", "rb22_column"},
                      Pair{"t2_points", "t2_points_conjugated"},
                      Pair{"u1_chain", "u1_chain_relabeled"}}) {
    CAPTURE(a);
    SAction const A = oracle::action_fixture(a);
    SAction const B = oracle::action_fixture(b);
    auto const    w = actions_equivalent(A, B);
    REQUIRE(w);
    CHECK(is_equivalence(w->functor));
    Presheaf const PA = presheaf_A(A, w->functor.source);
    Presheaf const PB = presheaf_A(B, w->functor.target);
    CHECK_FALSE(check_presheaf_transformation(PA, PB, w->functor, w->eta));
    CHECK(components_bijective(PA, PB, w->functor, w->eta));

    std::vector<std::size_t> const f = induced_poset_iso(*w, A, B);
    ActionPoset const              P = action_poset(A);
    ActionPoset const              Q = action_poset(B);
    REQUIRE(f.size() == P.orbits.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        CHECK(P.leq(i, j) == Q.leq(f[i], f[j]));
      }
    }
    CHECK(posets_isomorphic(P, Q));
    CHECK(labeled_preorders_isomorphic(labeled_dq_local_units(A),
                                       labeled_dq_local_units(B)));
    CHECK(actions_equivalent(B, A));
  }

  CHECK_FALSE(actions_equivalent(oracle::action_fixture("u1_chain"),
                                 oracle::action_fixture("u1_trivial")));
  CHECK_FALSE(actions_equivalent(oracle::action_fixture("t2_points"),
                                 oracle::action_fixture("u1_chain")));
}

TEST_CASE("induced_poset_iso rejects a bad witness") {
  SAction const A = oracle::action_fixture("u1_chain");
  SAction const B = oracle::action_fixture("u1_chain_relabeled");
  auto          w = actions_equivalent(A, B);
  REQUIRE(w);
  for (auto& component : w->eta) {
    for (auto& x : component) {
      if (x != npos) {
        x = 0;
      }
    }
  }
  CHECK_THROWS_AS(induced_poset_iso(*w, A, B), WitnessInvalid);
}
