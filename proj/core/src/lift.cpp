#include "sgcat/lift.hpp"

#include <algorithm>  // for sort
#include <string>     // for to_string
#include <utility>    // for move

#include "sgcat/errors.hpp"
#include "sgcat/greens.hpp"

namespace sgcat {

  LocalUnitFamily local_unit_families(Semigroup const& S) {
    ElementSet const E = idempotents(S);
    LocalUnitFamily  fam;
    for (Element s = 0; s < S.size(); ++s) {
      if (is_idempotent(S, s)) {
        fam.left.push_back(s);
        fam.right.push_back(s);
        continue;
      }
      Element left = npos, right = npos;
      for (Element e : E) {
        if (left == npos && S.product(e, s) == s) {
          left = e;
        }
        if (right == npos && S.product(s, e) == s) {
          right = e;
        }
      }
      if (left == npos || right == npos) {
        throw NoLocalUnits(s);
      }
      fam.left.push_back(left);
      fam.right.push_back(right);
    }
    return fam;
  }

  bool is_local_unit_family(Semigroup const& S, LocalUnitFamily const& fam) {
    if (fam.left.size() != S.size() || fam.right.size() != S.size()) {
      return false;
    }
    for (Element s = 0; s < S.size(); ++s) {
      Element const e = fam.left[s], f = fam.right[s];
      if (e >= S.size() || f >= S.size() || !is_idempotent(S, e)
          || !is_idempotent(S, f)
          || S.product(S.product(e, s), f) != s) {
        return false;
      }
      if (is_idempotent(S, s) && (e != s || f != s)) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::pair<MorphismId, MorphismId>>
  find_semifunctor_violation(FiniteCategory const& C, Semigroup const& S) {
    for (MorphismId g = 0; g < C.number_of_morphisms(); ++g) {
      for (MorphismId f = 0; f < C.number_of_morphisms(); ++f) {
        if (C.dom(g) != C.cod(f)) {
          continue;
        }
        Element const lhs = project_middle(C.payload(C.compose(g, f)));
        Element const rhs = S.product(project_middle(C.payload(g)),
                                      project_middle(C.payload(f)));
        if (lhs != rhs) {
          return std::pair{g, f};
        }
      }
    }
    return std::nullopt;
  }

  bool middle_projection_faithful(FiniteCategory const& C) {
    for (ObjectId a = 0; a < C.number_of_objects(); ++a) {
      for (ObjectId b = 0; b < C.number_of_objects(); ++b) {
        std::vector<Element> middles;
        for (MorphismId m : C.hom(a, b)) {
          middles.push_back(project_middle(C.payload(m)));
        }
        std::sort(middles.begin(), middles.end());
        if (std::adjacent_find(middles.begin(), middles.end())
            != middles.end()) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Element> middle_map(Functor const& F) {
    std::vector<Element> out;
    for (MorphismId m : F.morphisms) {
      out.push_back(project_middle(F.target->payload(m)));
    }
    return out;
  }

  namespace {
    void require_karoubi_functor(Functor const& F) {
      if (F.source->kind() != CategoryKind::karoubi
          || F.target->kind() != CategoryKind::karoubi) {
        throw InvalidFunctor("expected a functor between Karoubi envelopes");
      }
      if (auto v = check_functor(F)) {
        throw InvalidFunctor("not a functor: " + v->law);
      }
    }
  }  // namespace

  LiftedFunctor lift_functor(Semigroup const& S,
                             Semigroup const& T,
                             Functor const&   F,
                             CategoryPtr      DS,
                             CategoryPtr      DT,
                             LocalUnitFamily  fam) {
    require_karoubi_functor(F);
    if (DS->number_of_objects() != S.size()
        || DT->number_of_objects() != T.size()) {
      throw InvalidFunctor("D-categories do not match the semigroups");
    }
    if (!is_local_unit_family(S, fam)) {
      throw ValidationError("not a local-unit family");
    }
    FiniteCategory const& KS = *F.source;
    FiniteCategory const& KT = *F.target;
    auto                  Fm = [&](Element e, Element u, Element f) {
      auto m = KS.find_morphism({e, u, f});
      if (!m) {
        throw InternalError("(" + std::to_string(e) + "," + std::to_string(u)
                            + "," + std::to_string(f) + ") is not in K(S)");
      }
      return project_middle(KT.payload(F.morphisms[*m]));
    };

    LiftedFunctor out{Functor{DS, DT, {}, {}}, std::move(fam), {}, false};
    LocalUnitFamily const& fm = out.family;
    for (ObjectId a = 0; a < DS->number_of_objects(); ++a) {
      Element const s  = DS->label(a);
      Element const hs = Fm(fm.left[s], s, fm.right[s]);
      out.object_elements.push_back(hs);
      auto b = DT->find_object(hs);
      if (!b) {
        throw InternalError("lifted object is not in D(T)");
      }
      out.functor.objects.push_back(*b);
    }
    for (MorphismId m = 0; m < DS->number_of_morphisms(); ++m) {
      auto const [s, u, t] = DS->payload(m);
      Triple const image{out.object_elements[*DS->find_object(s)],
                         Fm(fm.left[s], u, fm.right[t]),
                         out.object_elements[*DS->find_object(t)]};
      auto n = DT->find_morphism(image);
      if (!n) {
        throw InternalError("lifted arrow is not in D(T)");
      }
      out.functor.morphisms.push_back(*n);
    }
    if (auto v = check_functor(out.functor)) {
      throw InternalError("lift is not a functor: " + v->law);
    }

    bool restricts = true;
    for (MorphismId m = 0; m < KS.number_of_morphisms() && restricts; ++m) {
      auto n = DS->find_morphism(KS.payload(m));
      restricts = n
                  && DT->payload(out.functor.morphisms[*n])
                         == KT.payload(F.morphisms[m]);
    }
    out.restricts_to_source = restricts;
    return out;
  }

  LiftedFunctor lift_functor(Semigroup const& S,
                             Semigroup const& T,
                             Functor const&   F) {
    return lift_functor(S,
                        T,
                        F,
                        share(build_schutzcat(S)),
                        share(build_schutzcat(T)),
                        local_unit_families(S));
  }

  namespace {
    Element object_element(Functor const& G, Element s) {
      return G.target->label(G.objects[*G.source->find_object(s)]);
    }
  }  // namespace

  std::optional<Functor> restrict_to_karoubi(Functor const&   G,
                                             Semigroup const& S,
                                             Semigroup const& T) {
    auto    KS = share(build_karoubi(S));
    auto    KT = share(build_karoubi(T));
    Functor F{KS, KT, {}, {}};
    for (ObjectId a = 0; a < KS->number_of_objects(); ++a) {
      auto b = KT->find_object(object_element(G, KS->label(a)));
      if (!b) {
        return std::nullopt;
      }
      F.objects.push_back(*b);
    }
    for (MorphismId m = 0; m < KS->number_of_morphisms(); ++m) {
      auto n = G.source->find_morphism(KS->payload(m));
      if (!n) {
        return std::nullopt;
      }
      auto k = KT->find_morphism(G.target->payload(G.morphisms[*n]));
      if (!k) {
        return std::nullopt;
      }
      F.morphisms.push_back(*k);
    }
    return F;
  }

  GoodnessReport
  is_good_functor(Functor const& G, Semigroup const& S, Semigroup const& T) {
    GoodnessReport report;
    if (auto F = restrict_to_karoubi(G, S, T)) {
      report.restricts_to_k_equivalence
          = !check_functor(*F) && is_equivalence(*F);
    }

    FiniteCategory const& DS = *G.source;
    FiniteCategory const& DT = *G.target;
    auto                  image_is = [&](Triple const& p, Triple const& want) {
      auto m = DS.find_morphism(p);
      return m && DT.payload(G.morphisms[*m]) == want;
    };
    auto left_ok = [&](Element e, Element s) {
      Element const gs = object_element(G, s);
      return image_is({e, s, s}, {object_element(G, e), gs, gs});
    };
    auto right_ok = [&](Element s, Element f) {
      Element const gs = object_element(G, s);
      return image_is({s, s, f}, {gs, gs, object_element(G, f)});
    };

    ElementSet const E = idempotents(S);
    std::optional<LocalUnitFamily> canonical;
    try {
      canonical = local_unit_families(S);
    } catch (NoLocalUnits const&) {
    }
    report.canonical_family_works = canonical.has_value();
    report.triples_ok             = true;
    for (Element s = 0; s < S.size(); ++s) {
      Element left = npos, right = npos;
      if (canonical) {
        if (left_ok(canonical->left[s], s)) {
          left = canonical->left[s];
        }
        if (right_ok(s, canonical->right[s])) {
          right = canonical->right[s];
        }
      }
      if (left == npos || right == npos) {
        report.canonical_family_works = false;
      }
      // e s f = s splits into e s = s and s f = s, so both sides can be
      // searched independently.
      for (Element e : E) {
        if (left == npos && S.product(e, s) == s && left_ok(e, s)) {
          left = e;
        }
        if (right == npos && S.product(s, e) == s && right_ok(s, e)) {
          right = e;
        }
      }
      report.left_witness.push_back(left);
      report.right_witness.push_back(right);
      if (left == npos || right == npos) {
        report.triples_ok = false;
      }
    }
    report.good = report.restricts_to_k_equivalence && report.triples_ok;
    return report;
  }

  bool reflects_regularity(Functor const&   G,
                           Semigroup const& S,
                           Semigroup const& T) {
    for (Element s = 0; s < S.size(); ++s) {
      if (is_regular(S, s) != is_regular(T, object_element(G, s))) {
        return false;
      }
    }
    return true;
  }

  bool reflects_j_order_on_objects(Functor const&   G,
                                   Semigroup const& S,
                                   Semigroup const& T) {
    GreensData const gs = greens_data(S);
    GreensData const gt = greens_data(T);
    std::vector<Element> image;
    for (Element s = 0; s < S.size(); ++s) {
      image.push_back(object_element(G, s));
    }
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = 0; t < S.size(); ++t) {
        if (gs.leq_j(s, t) != gt.leq_j(image[s], image[t])) {
          return false;
        }
      }
    }
    return true;
  }

  LiftedTransformation lift_natural_transformation(LiftedFunctor const& lift,
                                                   Functor const&       F,
                                                   SAction const&       Q,
                                                   SAction const&       R,
                                                   PresheafMap const&   eta) {
    Presheaf const AQ = presheaf_A(Q, F.source);
    Presheaf const AR = presheaf_A(R, F.target);
    if (eta.size() != F.source->number_of_objects()
        || check_presheaf_transformation(AQ, AR, F, eta)) {
      throw InvalidNaturalTransformation(
          "eta is not a natural transformation A_Q => A_R o F");
    }
    Presheaf const BQ = presheaf_B(Q, lift.functor.source);
    Presheaf const BR = presheaf_B(R, lift.functor.target);

    FiniteCategory const& KS = *F.source;
    FiniteCategory const& DS = *lift.functor.source;
    auto                  eta_at = [&](Element e) -> std::vector<State> const& {
      return eta[*KS.find_object(e)];
    };

    LiftedTransformation out;
    out.key_identity = true;
    for (ObjectId a = 0; a < DS.number_of_objects(); ++a) {
      Element const s  = DS.label(a);
      Element const es = lift.family.left[s];
      Element const fs = lift.family.right[s];
      Element const hs = lift.object_elements[a];
      std::vector<State> component(Q.size(), npos);
      for (State q = 0; q < Q.size(); ++q) {
        State const x = Q.act(q, s);
        component[x]  = eta_at(fs)[x];
        if (eta_at(fs)[x] != R.act(eta_at(es)[Q.act(q, es)], hs)) {
          out.key_identity = false;
        }
      }
      out.components.push_back(std::move(component));
    }
    out.natural
        = !check_presheaf_transformation(BQ, BR, lift.functor, out.components);
    out.eta_iso = components_bijective(AQ, AR, F, eta);
    out.iso     = out.natural
              && components_bijective(BQ, BR, lift.functor, out.components);
    return out;
  }

}  // namespace sgcat
