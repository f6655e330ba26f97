#ifndef SGCAT_LIFT_HPP_
#define SGCAT_LIFT_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include "sgcat/action.hpp"
#include "sgcat/category.hpp"
#include "sgcat/functor.hpp"
#include "sgcat/semigroup.hpp"

namespace sgcat {

  //! Idempotents e_s, f_s with e_s s f_s = s for every s, and e = f = s
  //! when s is itself idempotent.
  struct LocalUnitFamily {
    std::vector<Element> left;
    std::vector<Element> right;
  };

  //! The forced choice on idempotents, least-index units elsewhere. Throws
  //! NoLocalUnits for the first s without an idempotent unit pair.
  LocalUnitFamily local_unit_families(Semigroup const& S);

  bool is_local_unit_family(Semigroup const& S, LocalUnitFamily const& fam);

  //! A composable pair (g, f) of C where the middle of g o f is not the
  //! product of the middles. K(S) never has one; D(S) may.
  std::optional<std::pair<MorphismId, MorphismId>>
  find_semifunctor_violation(FiniteCategory const& C, Semigroup const& S);

  //! Whether distinct arrows of each hom-set have distinct middles.
  bool middle_projection_faithful(FiniteCategory const& C);

  //! F_m: the middle of F(m) for every arrow m of the source.
  std::vector<Element> middle_map(Functor const& F);

  struct LiftedFunctor {
    Functor         functor;  // D(S) -> D(T)
    LocalUnitFamily family;
    //! F-hat(s) as an element of T.
    std::vector<Element> object_elements;
    //! F-hat agrees with F on K(S), matched by payload.
    bool restricts_to_source = false;
  };

  //! Lifts F : K(S) -> K(T) to D(S) -> D(T) by
  //! s -> F_m(e_s, s, f_s) and (s, u, t) -> (F(s), F_m(e_s, u, f_t), F(t)).
  //! Throws InvalidFunctor when F is not a functor between the Karoubi
  //! envelopes, and NoLocalUnits via the default family.
  LiftedFunctor lift_functor(Semigroup const& S,
                             Semigroup const& T,
                             Functor const&   F,
                             CategoryPtr      DS,
                             CategoryPtr      DT,
                             LocalUnitFamily  fam);

  LiftedFunctor lift_functor(Semigroup const& S,
                             Semigroup const& T,
                             Functor const&   F);

  struct GoodnessReport {
    bool restricts_to_k_equivalence = false;
    //! Per element: whether some idempotent e with es = s gives
    //! G(e, s, s) = (G(e), G(s), G(s)), and the least such e (npos if none).
    std::vector<Element> left_witness;
    std::vector<Element> right_witness;
    //! The canonical family already satisfied the triple equalities.
    bool canonical_family_works = false;
    bool triples_ok             = false;
    bool good                   = false;
  };

  //! The restriction of G : D(S) -> D(T) to K(S) -> K(T), if G sends
  //! idempotents to idempotents.
  std::optional<Functor> restrict_to_karoubi(Functor const&   G,
                                             Semigroup const& S,
                                             Semigroup const& T);

  //! Both conditions of goodness; the triple condition is searched over all
  //! idempotent units, the canonical family first.
  GoodnessReport
  is_good_functor(Functor const& G, Semigroup const& S, Semigroup const& T);

  //! s regular iff G(s) regular, for all s.
  bool reflects_regularity(Functor const&   G,
                           Semigroup const& S,
                           Semigroup const& T);

  //! s <=_J s' iff G(s) <=_J G(s'), for all s, s'.
  bool reflects_j_order_on_objects(Functor const&   G,
                                   Semigroup const& S,
                                   Semigroup const& T);

  struct LiftedTransformation {
    PresheafMap components;  // lambda_s on Q.s, by D(S) object
    //! eta_{f_s}(qs) = eta_{e_s}(q e_s) . F(s) for all q and s.
    bool key_identity = false;
    bool natural      = false;
    bool eta_iso      = false;
    bool iso          = false;
  };

  //! lambda_s = eta_{f_s} restricted to Q.s, for eta : A_Q => A_R o F.
  //! Throws InvalidNaturalTransformation if eta is not natural.
  LiftedTransformation lift_natural_transformation(LiftedFunctor const& lift,
                                                   Functor const&       F,
                                                   SAction const&       Q,
                                                   SAction const&       R,
                                                   PresheafMap const&   eta);

}  // namespace sgcat

#endif  // SGCAT_LIFT_HPP_
