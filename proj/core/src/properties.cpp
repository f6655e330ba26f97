#include "sgcat/properties.hpp"

#include "sgcat/category.hpp"
#include "sgcat/functor.hpp"
#include "sgcat/greens.hpp"
#include "sgcat/localstruct.hpp"

namespace sgcat {

  namespace {
    std::size_t composition_witness_mismatches(Semigroup const&      S,
                                               FiniteCategory const& D) {
      SemigroupOne const S1(S);
      std::size_t        bad = 0;
      for (MorphismId g = 0; g < D.number_of_morphisms(); ++g) {
        for (MorphismId f = 0; f < D.number_of_morphisms(); ++f) {
          if (D.dom(g) != D.cod(f)) {
            continue;
          }
          auto const [s, u, t] = D.payload(g);
          Element const v      = D.payload(f)[1];
          Element const want   = D.payload(D.compose(g, f))[1];
          for (Element x = 0; x < S1.size(); ++x) {
            if (S1.product(x, t) == u && S1.product(x, v) != want) {
              ++bad;
              break;
            }
          }
        }
      }
      return bad;
    }
  }  // namespace

  PropertySummary check_properties(Semigroup const& S) {
    PropertySummary  out;
    GreensData const g  = greens_data(S);
    auto const       K  = share(build_karoubi(S));
    auto const       D  = share(build_schutzcat(S));
    std::size_t const n = S.size();

    out.category_axioms = !check_category_axioms(*K) && !check_category_axioms(*D);

    for (Element s = 0; s < n; ++s) {
      ObjectId const a = *D->find_object(s);
      for (Element t = 0; t < n; ++t) {
        ObjectId const b = *D->find_object(t);
        if (D->hom(b, a).size() != right_left_intersection(S, s, t).size()) {
          ++out.hom_count_mismatches;
        }
        if (objects_isomorphic(*D, a, b) != g.d_related(s, t)) {
          ++out.object_iso_mismatches;
        }
      }
    }
    for (MorphismId m = 0; m < D->number_of_morphisms(); ++m) {
      auto const [s, u, t] = D->payload(m);
      if (is_isomorphism(*D, m) != (g.r_related(s, u) && g.l_related(u, t))) {
        ++out.arrow_iso_mismatches;
      }
    }
    out.composition_witness_mismatches = composition_witness_mismatches(S, *D);

    for (Element s = 0; s < n; ++s) {
      ObjectId const  a     = *D->find_object(s);
      PermGroup const left  = schutzenberger_group(S, s, Side::left);
      PermGroup const right = schutzenberger_group(S, s, Side::right);
      if (!perm_groups_isomorphic(automorphism_group_at(*D, a), left)) {
        ++out.automorphism_mismatches;
      }
      LocalDivisor const ld = local_divisor(S, s);
      if (!monoids_isomorphic(endomorphism_monoid(*D, a), ld.monoid)) {
        ++out.local_divisor_mismatches;
      }
      if (!perm_groups_isomorphic(group_of_units(ld.monoid), left)) {
        ++out.unit_group_mismatches;
      }
      if (!perm_groups_isomorphic(left, right)) {
        ++out.left_right_mismatches;
      }
    }

    Subcategory const sub = full_subcategory_on_labels(*D, idempotents(S));
    out.karoubi_is_full_subcategory = payload_isomorphic(sub.category, *K);

    Semigroup const op = opposite(S);
    out.duality_schutzenberger
        = payload_isomorphic(opposite_category(*D), build_schutzcat(op),
                             opposite_payload);
    out.duality_karoubi = payload_isomorphic(opposite_category(*K),
                                             build_karoubi(op),
                                             opposite_payload);

    Functor inclusion{K, D, {}, {}};
    for (ObjectId a = 0; a < K->number_of_objects(); ++a) {
      inclusion.objects.push_back(*D->find_object(K->label(a)));
    }
    for (MorphismId m = 0; m < K->number_of_morphisms(); ++m) {
      inclusion.morphisms.push_back(*D->find_morphism(K->payload(m)));
    }
    bool regular = true;
    for (Element s = 0; s < n && regular; ++s) {
      regular = is_regular(S, s);
    }
    out.inclusion_matches_regularity = is_equivalence(inclusion) == regular;
    return out;
  }

}  // namespace sgcat
