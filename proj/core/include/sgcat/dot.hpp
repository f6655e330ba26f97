#ifndef SGCAT_DOT_HPP_
#define SGCAT_DOT_HPP_

#include <string>  // for string

#include "sgcat/category.hpp"
#include "sgcat/greens.hpp"
#include "sgcat/invariants.hpp"
#include "sgcat/semigroup.hpp"

namespace sgcat {

  //! Hasse diagram of the D-classes, larger classes on top.
  std::string dot_d_classes(Semigroup const& S, DClassPreorder const& D);

  //! One node per object, one edge per nonempty hom-set labelled with its
  //! size. Edges run from domain to codomain.
  std::string dot_category(FiniteCategory const& C, Semigroup const& S);

  //! Hasse diagram of P(Q); each node lists its cyclic subset.
  std::string dot_action_poset(ActionPoset const& P);

  //! Hasse diagram of a labelled preorder, labels drawn as "e/|G|/r".
  std::string dot_labeled_preorder(LabeledPreorder const& P,
                                   Semigroup const&       S);

}  // namespace sgcat

#endif  // SGCAT_DOT_HPP_
