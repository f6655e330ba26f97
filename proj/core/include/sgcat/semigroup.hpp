#ifndef SGCAT_SEMIGROUP_HPP_
#define SGCAT_SEMIGROUP_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace sgcat {

  //! Elements are identified by their index in the multiplication table.
  using Element = std::size_t;

  //! A set of elements, always kept sorted and duplicate free.
  using ElementSet = std::vector<Element>;

  //! A finite semigroup given by its multiplication table.
  //!
  //! Values are immutable once constructed; the only way to obtain one is
  //! through a validating factory, so every instance is associative.
  class Semigroup {
   public:
    //! Validates and wraps a Cayley table; `table[i][j]` is `i * j`.
    //!
    //! Throws OutOfRange for ragged tables or entries `>= n`, and
    //! NonAssociative for the first triple (in lexicographic order) that
    //! breaks associativity.
    static Semigroup from_cayley_table(
        std::vector<std::vector<Element>> const& table,
        std::vector<std::string>                 names = {});

    std::size_t size() const noexcept {
      return _size;
    }

    Element product(Element a, Element b) const noexcept {
      return _table[a * _size + b];
    }

    std::optional<Element> identity() const noexcept {
      return _identity;
    }

    bool has_names() const noexcept {
      return _has_names;
    }

    //! Display name; falls back to the decimal index.
    std::string const& name(Element x) const {
      return _names[x];
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::optional<Element> find_name(std::string_view name) const;

    std::vector<std::vector<Element>> table() const;

    friend bool operator==(Semigroup const& a, Semigroup const& b) {
      return a._size == b._size && a._table == b._table;
    }

   private:
    Semigroup() = default;

    std::size_t              _size = 0;
    std::vector<Element>     _table;
    std::vector<std::string> _names;
    bool                     _has_names = false;
    std::optional<Element>   _identity;
  };

  //! S with an external identity adjoined. Never materialised: the formal
  //! identity is the index `size()` of the base, so "least index" searches
  //! over S^1 visit the base elements first.
  class SemigroupOne {
   public:
    explicit SemigroupOne(Semigroup const& base) : _base(&base) {}

    std::size_t size() const noexcept {
      return _base->size() + 1;
    }

    Element one() const noexcept {
      return _base->size();
    }

    bool is_one(Element x) const noexcept {
      return x == _base->size();
    }

    Element product(Element a, Element b) const noexcept {
      if (is_one(a)) {
        return b;
      } else if (is_one(b)) {
        return a;
      }
      return _base->product(a, b);
    }

    Semigroup const& base() const noexcept {
      return *_base;
    }

   private:
    Semigroup const* _base;
  };

  //! A full transformation of {0, ..., degree - 1}; `images[p]` is the image
  //! of the point `p`.
  struct Transformation {
    std::vector<Element> images;

    std::size_t degree() const noexcept {
      return images.size();
    }

    Element operator[](Element p) const {
      return images[p];
    }

    std::size_t rank() const;

    auto operator<=>(Transformation const&) const = default;
  };

  //! Validates degree and image range; throws OutOfRange.
  Transformation make_transformation(std::vector<Element> images);

  //! Right-action product: apply `s`, then `t`.
  Transformation then(Transformation const& s, Transformation const& t);

  struct GeneratedSemigroup {
    Semigroup                   semigroup;
    std::vector<Transformation> representatives;
  };

  //! Closure of `gens` under the right-action product.
  //!
  //! Elements are numbered in discovery order: the distinct generators first,
  //! then products `x * g` scanning elements in order and generators in order.
  //! Throws EmptyGeneratorSet and OutOfRange (mixed degrees).
  GeneratedSemigroup
  generate_from_transformations(std::vector<Transformation> const& gens,
                                std::vector<std::string>           names = {});

  bool is_idempotent(Semigroup const& S, Element x);

  //! E(S), in increasing order.
  ElementSet idempotents(Semigroup const& S);

  //! A subsemigroup together with its inclusion; `embedding[i]` is the
  //! element of the parent realised by element `i`.
  struct Subsemigroup {
    Semigroup            semigroup;
    std::vector<Element> embedding;
  };

  //! The subsemigroup on a product-closed subset (names are inherited).
  //! Throws ValidationError if `carrier` is empty or not closed.
  Subsemigroup induced_subsemigroup(Semigroup const& S, ElementSet const& carrier);

  //! LU(S) = E(S) S E(S). Throws EmptyLocalUnits when E(S) is empty.
  Subsemigroup local_units_subsemigroup(Semigroup const& S);

  //! Whether LU(S) = S.
  bool has_local_units(Semigroup const& S);

  //! Whether some x in S has s * x * s = s.
  bool is_regular(Semigroup const& S, Element s);

  //! The transposed table, with names kept.
  Semigroup opposite(Semigroup const& S);

  //! Every semigroup of order n up to isomorphism, each as the least
  //! relabelled table. Brute force over all tables, so n is capped at 3.
  std::vector<Semigroup> small_semigroups(std::size_t n);

}  // namespace sgcat

#endif  // SGCAT_SEMIGROUP_HPP_
