#ifndef SGCAT_INVARIANTS_HPP_
#define SGCAT_INVARIANTS_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <optional>    // for optional
#include <vector>      // for vector

#include "sgcat/action.hpp"
#include "sgcat/functor.hpp"
#include "sgcat/greens.hpp"
#include "sgcat/localstruct.hpp"
#include "sgcat/semigroup.hpp"

namespace sgcat {

  //! An equivalence F : K(S) -> K(T) with A_Q isomorphic to A_R o F via eta.
  struct ActionEquivalence {
    Functor     functor;
    PresheafMap eta;
  };

  //! Searches every equivalence K(S) -> K(T) up to natural isomorphism and,
  //! for each, every bijective natural eta. The budget bounds both searches
  //! separately; SearchBudgetExceeded means the answer is unknown.
  std::optional<ActionEquivalence>
  actions_equivalent(SAction const& A,
                     SAction const& B,
                     std::size_t    budget = default_search_budget);

  //! A natural isomorphism A_Q => A_R o F for one fixed F, if any.
  std::optional<PresheafMap>
  find_presheaf_isomorphism(Presheaf const& P,
                            Presheaf const& Pprime,
                            Functor const&  F,
                            std::size_t     budget = default_search_budget);

  //! P(Q): the sets q LU(S) for q in Q E(S), ordered by reverse inclusion.
  struct ActionPoset {
    std::vector<StateSet> orbits;      // q LU(S), ordered by least generator
    std::vector<StateSet> generators;  // states of I in each class
    std::vector<std::size_t> class_of;  // per state; npos outside I
    BitMatrix                leq;       // leq(i, j) iff orbits[j] in orbits[i]
  };

  //! Empty when S has no idempotents.
  ActionPoset action_poset(SAction const& A);

  struct Label {
    bool                       regular;
    PermGroup                  group;
    std::optional<std::size_t> rank;
  };

  //! D-classes with the J-preorder and a label per class.
  struct LabeledPreorder {
    std::vector<ElementSet> nodes;
    BitMatrix               leq;
    std::vector<Label>      labels;
  };

  //! Labels (regular, Schutzenberger group).
  LabeledPreorder labeled_dl(Semigroup const& S);

  //! Labels (regular, Schutzenberger group, rank on Q). Throws InternalError
  //! if the rank is not constant on some D-class.
  LabeledPreorder labeled_dq(SAction const& A);

  //! Drops the classes not contained in `carrier`, keeping the rest in
  //! order.
  LabeledPreorder remove_classes_outside(LabeledPreorder const& P,
                                         ElementSet const&      carrier);

  //! labeled_dl of LU(S), with nodes given as elements of S.
  LabeledPreorder labeled_dl_local_units(Semigroup const& S);

  //! labeled_dq of the action restricted to LU(S), nodes as elements of S.
  LabeledPreorder labeled_dq_local_units(SAction const& A);

  //! A bijection phi with leq(i, j) iff leq'(phi i, phi j) and
  //! compatible(i, phi i) everywhere.
  std::optional<std::vector<std::size_t>> find_preorder_isomorphism(
      BitMatrix const&                                       A,
      BitMatrix const&                                       B,
      std::function<bool(std::size_t, std::size_t)> const& compatible,
      std::size_t budget = default_search_budget);

  //! Labels must agree exactly on regularity and rank, and up to
  //! isomorphism on groups. Throws SizeCapExceeded on large groups.
  std::optional<std::vector<std::size_t>>
  find_labeled_preorder_isomorphism(LabeledPreorder const& P,
                                    LabeledPreorder const& Q);

  bool labeled_preorders_isomorphic(LabeledPreorder const& P,
                                    LabeledPreorder const& Q);

  bool posets_isomorphic(ActionPoset const& P, ActionPoset const& Q);

  //! f(q LU(S)) = eta_e(q) LU(T) for q in Qe. Throws WitnessInvalid if f is
  //! not well defined, not an order embedding, or not surjective.
  std::vector<std::size_t> induced_poset_iso(ActionEquivalence const& witness,
                                             SAction const&           A,
                                             SAction const&           B);

}  // namespace sgcat

#endif  // SGCAT_INVARIANTS_HPP_
