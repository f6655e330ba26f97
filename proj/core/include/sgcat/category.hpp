#ifndef SGCAT_CATEGORY_HPP_
#define SGCAT_CATEGORY_HPP_

#include <array>       // for array
#include <cstddef>     // for size_t
#include <functional>  // for function
#include <map>         // for map
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "sgcat/localstruct.hpp"
#include "sgcat/semigroup.hpp"

namespace sgcat {

  using ObjectId   = std::size_t;
  using MorphismId = std::size_t;

  //! Morphism payload. For K(S) this is (e, s, f) and for D(S) it is
  //! (s, u, t); both denote an arrow with codomain the first entry and domain
  //! the last.
  using Triple = std::array<Element, 3>;

  //! How payloads should be read. Generic categories carry opaque payloads.
  enum class CategoryKind { generic, karoubi, schutzenberger };

  //! An explicit finite category with a full composition table.
  //!
  //! Composition follows the usual convention: `compose(g, f)` is g o f and
  //! is defined iff `dom(g) == cod(f)`. Objects carry an element label and
  //! morphisms a payload; payloads are unique within a category.
  class FiniteCategory {
   public:
    struct Morphism {
      ObjectId dom;
      ObjectId cod;
      Triple   payload;
    };

    //! Called once for every composable pair (g, f) to fill the table.
    using Composer = std::function<MorphismId(MorphismId g, MorphismId f)>;

    FiniteCategory(CategoryKind             kind,
                   std::vector<Element>     object_labels,
                   std::vector<Morphism>    morphisms,
                   std::vector<MorphismId>  identities,
                   Composer const&          compose);

    CategoryKind kind() const noexcept {
      return _kind;
    }

    std::size_t number_of_objects() const noexcept {
      return _labels.size();
    }

    std::size_t number_of_morphisms() const noexcept {
      return _morphisms.size();
    }

    Element label(ObjectId a) const {
      return _labels[a];
    }

    std::vector<Element> const& labels() const noexcept {
      return _labels;
    }

    Morphism const& morphism(MorphismId m) const {
      return _morphisms[m];
    }

    ObjectId dom(MorphismId m) const {
      return _morphisms[m].dom;
    }

    ObjectId cod(MorphismId m) const {
      return _morphisms[m].cod;
    }

    Triple const& payload(MorphismId m) const {
      return _morphisms[m].payload;
    }

    MorphismId identity(ObjectId a) const {
      return _identities[a];
    }

    bool is_identity(MorphismId m) const {
      return _identities[dom(m)] == m;
    }

    //! Morphisms from `from` to `to`, in increasing id order.
    std::vector<MorphismId> const& hom(ObjectId from, ObjectId to) const {
      return _homs[from * number_of_objects() + to];
    }

    //! g o f; requires dom(g) == cod(f).
    MorphismId compose(MorphismId g, MorphismId f) const {
      return _compose[g][_incoming_pos[f]];
    }

    std::optional<MorphismId> find_morphism(Triple const& payload) const;
    std::optional<ObjectId>   find_object(Element label) const;

   private:
    CategoryKind                         _kind;
    std::vector<Element>                 _labels;
    std::vector<Morphism>                _morphisms;
    std::vector<MorphismId>              _identities;
    std::vector<std::vector<MorphismId>> _homs;
    std::vector<std::size_t>             _incoming_pos;
    std::vector<std::vector<MorphismId>> _compose;
    std::map<Triple, MorphismId>         _by_payload;
    std::map<Element, ObjectId>          _by_label;
  };

  //! First violated category law (identity or associativity), if any.
  std::optional<std::string> check_category_axioms(FiniteCategory const& C);

  //! K(S): objects E(S), arrows (e, s, f) with s in eSf, ordered by payload.
  FiniteCategory build_karoubi(Semigroup const& S);

  //! D(S): objects S, arrows (s, u, t) with u in sS^1 n S^1 t, ordered by
  //! payload. (s, u, t) o (t, v, r) = (s, xv, r) for the least x in S^1 with
  //! xt = u.
  FiniteCategory build_schutzcat(Semigroup const& S);

  //! A full subcategory with the ids of its objects and arrows in the parent.
  struct Subcategory {
    FiniteCategory          category;
    std::vector<ObjectId>   objects;
    std::vector<MorphismId> morphisms;
  };

  Subcategory full_subcategory(FiniteCategory const&        C,
                               std::vector<ObjectId> const& objects);

  //! The full subcategory on the objects with the given labels.
  Subcategory full_subcategory_on_labels(FiniteCategory const&       C,
                                         std::vector<Element> const& labels);

  //! Same ids and payloads, dom/cod swapped, composition reversed.
  FiniteCategory opposite_category(FiniteCategory const& C);

  //! (s, u, t) -> (t, u, s): the payload of the matching arrow in D(S^op).
  Triple opposite_payload(Triple const& p);

  //! Whether matching objects by label and arrows by `relabel(payload)` is an
  //! isomorphism of categories.
  bool payload_isomorphic(FiniteCategory const&                      A,
                          FiniteCategory const&                      B,
                          std::function<Triple(Triple const&)> const& relabel
                          = [](Triple const& p) { return p; });

  std::optional<MorphismId> inverse(FiniteCategory const& C, MorphismId m);

  bool is_isomorphism(FiniteCategory const& C, MorphismId m);

  //! Least-id isomorphism from `a` to `b`.
  std::optional<MorphismId>
  find_isomorphism_between(FiniteCategory const& C, ObjectId a, ObjectId b);

  bool objects_isomorphic(FiniteCategory const& C, ObjectId a, ObjectId b);

  //! Invertible endomorphisms at `a`, as a permutation group acting on
  //! themselves by left composition (carrier = morphism ids).
  PermGroup automorphism_group_at(FiniteCategory const& C, ObjectId a);

  //! hom(a, a) as a monoid over positions in `C.hom(a, a)`.
  Semigroup endomorphism_monoid(FiniteCategory const& C, ObjectId a);

  //! One least-id object per isomorphism class with chosen isomorphisms.
  struct Skeleton {
    Subcategory sub;
    //! For each object of the parent, its representative as a skeleton id.
    std::vector<ObjectId> representative;
    //! Least-id isomorphism a -> rep(a) in the parent, and its inverse.
    std::vector<MorphismId> to_rep;
    std::vector<MorphismId> from_rep;
    //! For each parent arrow, its id in the skeleton (or npos).
    std::vector<MorphismId> skeleton_morphism;
  };

  constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Skeleton skeleton(FiniteCategory const& C);

  //! f <=_J g iff f = a o g o b for some arrows a, b.
  bool j_order_arrows(FiniteCategory const& C, MorphismId f, MorphismId g);

  //! The middle entry of a K- or D-payload.
  inline Element project_middle(Triple const& p) {
    return p[1];
  }

}  // namespace sgcat

#endif  // SGCAT_CATEGORY_HPP_
