#ifndef SGCAT_GREENS_HPP_
#define SGCAT_GREENS_HPP_

#include <cstddef>  // for size_t
#include <utility>  // for pair
#include <vector>   // for vector

#include "sgcat/semigroup.hpp"

namespace sgcat {

  //! Dense square boolean matrix used for preorders.
  class BitMatrix {
   public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : _n(n), _bits(n * n, false) {}

    std::size_t size() const noexcept {
      return _n;
    }

    bool operator()(std::size_t i, std::size_t j) const {
      return _bits[i * _n + j];
    }

    void set(std::size_t i, std::size_t j, bool value = true) {
      _bits[i * _n + j] = value;
    }

    friend bool operator==(BitMatrix const&, BitMatrix const&) = default;

   private:
    std::size_t       _n = 0;
    std::vector<bool> _bits;
  };

  //! sS^1 = {s} u sS.
  ElementSet principal_right_ideal(Semigroup const& S, Element s);
  //! S^1 s = {s} u Ss.
  ElementSet principal_left_ideal(Semigroup const& S, Element s);
  //! S^1 s S^1.
  ElementSet principal_ideal(Semigroup const& S, Element s);

  //! sS^1 n S^1 t, the middle components of D(S)-arrows from t to s.
  ElementSet right_left_intersection(Semigroup const& S, Element s, Element t);

  //! Green's preorders and equivalences of a finite semigroup.
  //!
  //! Class ids are dense and numbered by the smallest element of each class,
  //! so element 0 always lies in class 0.
  struct GreensData {
    BitMatrix leq_r;  // leq_r(s, t) iff s in tS^1
    BitMatrix leq_l;
    BitMatrix leq_j;

    std::vector<std::size_t> r_class;
    std::vector<std::size_t> l_class;
    std::vector<std::size_t> j_class;
    std::vector<std::size_t> h_class;
    std::vector<std::size_t> d_class;

    std::vector<ElementSet> d_classes;
    std::vector<bool>       d_class_regular;

    bool r_related(Element s, Element t) const {
      return r_class[s] == r_class[t];
    }
    bool l_related(Element s, Element t) const {
      return l_class[s] == l_class[t];
    }
    bool h_related(Element s, Element t) const {
      return h_class[s] == h_class[t];
    }
    bool d_related(Element s, Element t) const {
      return d_class[s] == d_class[t];
    }

    //! Members of the H-class of `s`, sorted.
    ElementSet h_class_of(Element s) const;
  };

  //! Computes every relation above. D is the join of R and L; a mismatch with
  //! J raises InternalError.
  GreensData greens_data(Semigroup const& S);

  //! The preordered set of D-classes: D1 <= D2 iff d1 <=_J d2 for some
  //! members.
  struct DClassPreorder {
    std::vector<ElementSet> classes;
    std::vector<bool>       regular;
    BitMatrix               leq;
  };

  DClassPreorder d_class_preorder(Semigroup const& S);
  DClassPreorder d_class_preorder(GreensData const& greens);

  //! Covering pairs (lower, upper) of a partial order, for Hasse diagrams.
  std::vector<std::pair<std::size_t, std::size_t>>
  covering_pairs(BitMatrix const& leq);

}  // namespace sgcat

#endif  // SGCAT_GREENS_HPP_
