#ifndef SGCAT_FUNCTOR_HPP_
#define SGCAT_FUNCTOR_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <memory>      // for shared_ptr
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "sgcat/category.hpp"

namespace sgcat {

  using CategoryPtr = std::shared_ptr<FiniteCategory const>;

  inline CategoryPtr share(FiniteCategory category) {
    return std::make_shared<FiniteCategory const>(std::move(category));
  }

  //! A map of finite categories given by its object and arrow tables.
  struct Functor {
    CategoryPtr             source;
    CategoryPtr             target;
    std::vector<ObjectId>   objects;
    std::vector<MorphismId> morphisms;
  };

  Functor identity_functor(CategoryPtr const& C);

  //! G o F. Requires F.target and G.source to be the same category.
  Functor compose(Functor const& G, Functor const& F);

  //! Replaces each F(a) by the codomain of `isos[a]`, an isomorphism out of
  //! F(a), conjugating arrows accordingly. The result is isomorphic to F.
  Functor conjugate(Functor const& F, std::vector<MorphismId> const& isos);

  struct FunctorViolation {
    std::string             law;
    std::vector<MorphismId> witnesses;
  };

  //! First violated functor law: endpoints, identities, composition.
  std::optional<FunctorViolation> check_functor(Functor const& F);

  bool is_fully_faithful(Functor const& F);
  bool is_essentially_surjective(Functor const& F);

  //! Fully faithful and essentially surjective (F must be a functor).
  bool is_equivalence(Functor const& F);

  //! Components eta_a : F(a) -> G(a) of a transformation F => G.
  struct NaturalTransformation {
    Functor                 from;
    Functor                 to;
    std::vector<MorphismId> components;
  };

  //! First arrow whose naturality square fails, or whose component has the
  //! wrong endpoints.
  std::optional<MorphismId>
  check_natural_transformation(NaturalTransformation const& eta);

  //! An isomorphism of categories, object and arrow tables.
  struct CategoryIsomorphism {
    std::vector<ObjectId>   objects;
    std::vector<MorphismId> morphisms;
  };

  constexpr std::size_t default_search_budget = 1'000'000;

  //! Calls `visit` on every isomorphism A -> B until it returns false.
  //! Throws SearchBudgetExceeded once more than `budget` nodes are expanded.
  //! Returns the number of isomorphisms visited.
  std::size_t for_each_isomorphism(
      FiniteCategory const&                                  A,
      FiniteCategory const&                                  B,
      std::function<bool(CategoryIsomorphism const&)> const& visit,
      std::size_t budget = default_search_budget);

  std::optional<CategoryIsomorphism>
  find_isomorphism(FiniteCategory const& A,
                   FiniteCategory const& B,
                   std::size_t           budget = default_search_budget);

  //! Extends an isomorphism of skeletons to an equivalence C -> D that
  //! sends each object to the representative of its image class.
  Functor equivalence_from_skeleton_iso(CategoryPtr const&         C,
                                        Skeleton const&            skC,
                                        CategoryPtr const&         D,
                                        Skeleton const&            skD,
                                        CategoryIsomorphism const& iso);

  //! Skeletons first, then an isomorphism search between them.
  std::optional<Functor>
  find_equivalence(CategoryPtr const& C,
                   CategoryPtr const& D,
                   std::size_t        budget = default_search_budget);

  //! Every equivalence C -> D up to natural isomorphism, one per
  //! isomorphism of skeletons, until `visit` returns false.
  std::size_t
  for_each_equivalence(CategoryPtr const&                         C,
                       CategoryPtr const&                         D,
                       std::function<bool(Functor const&)> const& visit,
                       std::size_t budget = default_search_budget);

}  // namespace sgcat

#endif  // SGCAT_FUNCTOR_HPP_
