#ifndef SGCAT_LOCALSTRUCT_HPP_
#define SGCAT_LOCALSTRUCT_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "sgcat/semigroup.hpp"

namespace sgcat {

  //! A permutation of a carrier, by positions: `p[i] = j` sends the `i`-th
  //! carrier point to the `j`-th.
  using Permutation = std::vector<std::size_t>;

  //! A finite group of permutations of a sorted carrier.
  //!
  //! Elements are stored sorted and deduplicated; the product `a * b` applies
  //! `a` first, then `b`.
  class PermGroup {
   public:
    //! Throws ValidationError unless `perms` is a nonempty set of bijections
    //! closed under products and inverses.
    PermGroup(ElementSet carrier, std::vector<Permutation> perms);

    ElementSet const& carrier() const noexcept {
      return _carrier;
    }

    std::vector<Permutation> const& elements() const noexcept {
      return _elements;
    }

    std::size_t order() const noexcept {
      return _elements.size();
    }

    std::size_t identity_index() const noexcept {
      return _identity;
    }

    //! Index of `elements()[a] * elements()[b]`.
    std::size_t multiply(std::size_t a, std::size_t b) const {
      return _table[a * order() + b];
    }

    bool is_abelian() const;

    //! Order of each element, indexed like `elements()`.
    std::vector<std::size_t> element_orders() const;

    //! The group as an abstract Cayley table.
    Semigroup cayley_table() const;

    //! Left regular representation of a group given by its table.
    static PermGroup regular_representation(Semigroup const& group);

    //! The trivial group on a one-point carrier.
    static PermGroup trivial(Element point = 0);

   private:
    ElementSet               _carrier;
    std::vector<Permutation> _elements;
    std::vector<std::size_t> _table;
    std::size_t              _identity = 0;
  };

  enum class Side { left, right };

  //! Schutzenberger group of the H-class of `h`: the translations x -> ux
  //! (left) or x -> xu (right), u in S^1, that stabilise H_h, restricted to
  //! H_h.
  PermGroup schutzenberger_group(Semigroup const& S, Element h, Side side);

  //! eSe with identity e. Throws NotIdempotent.
  Subsemigroup local_monoid(Semigroup const& S, Element e);

  //! Diekert's local divisor at `s`: the monoid on sS^1 n S^1 s with
  //! (xs) o v = xv and identity s.
  struct LocalDivisor {
    Element    element;
    ElementSet carrier;
    Semigroup  monoid;    // over positions in `carrier`
    std::size_t identity;  // position of `element` in `carrier`
  };

  //! Uses the least-index x in S^1 with x * s = u to evaluate u o v.
  LocalDivisor local_divisor(Semigroup const& S, Element s);

  //! Whether every witness x with x * s = u gives the same u o v.
  bool local_divisor_well_defined(Semigroup const& S, Element s);

  //! Group of units of a monoid, as a permutation group on its units.
  //! Throws ValidationError when `monoid` has no identity.
  PermGroup group_of_units(Semigroup const& monoid);

  constexpr std::size_t default_isomorphism_cap = 256;

  //! An isomorphism `map` with `map[a * b] = map[a] * map[b]`, if any.
  //! Throws SizeCapExceeded when either side is larger than `cap`.
  std::optional<std::vector<Element>>
  find_semigroup_isomorphism(Semigroup const& A,
                             Semigroup const& B,
                             std::size_t      cap = default_isomorphism_cap);

  bool semigroups_isomorphic(Semigroup const& A,
                             Semigroup const& B,
                             std::size_t      cap = default_isomorphism_cap);

  bool monoids_isomorphic(Semigroup const& A,
                          Semigroup const& B,
                          std::size_t      cap = default_isomorphism_cap);

  //! Order, element-order multiset and commutativity first, then a
  //! generator-image search.
  bool perm_groups_isomorphic(PermGroup const& G,
                              PermGroup const& H,
                              std::size_t      cap = default_isomorphism_cap);

}  // namespace sgcat

#endif  // SGCAT_LOCALSTRUCT_HPP_
