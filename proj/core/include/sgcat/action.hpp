#ifndef SGCAT_ACTION_HPP_
#define SGCAT_ACTION_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for move
#include <vector>    // for vector

#include "sgcat/functor.hpp"
#include "sgcat/semigroup.hpp"

namespace sgcat {

  using State    = std::size_t;
  using StateSet = std::vector<State>;

  //! A right action of a finite semigroup on {0, ..., size() - 1}.
  class SAction {
   public:
    //! `table[q][s]` is q.s. Throws OutOfRange on shape errors and
    //! ActionAxiomViolation on the first (q, s, t) with (q.s).t != q.(st).
    static SAction make(Semigroup                              S,
                        std::vector<std::vector<State>> const& table);

    Semigroup const& semigroup() const noexcept {
      return _semigroup;
    }

    std::size_t size() const noexcept {
      return _size;
    }

    State act(State q, Element s) const {
      return _table[q * _semigroup.size() + s];
    }

    //! Q.s, sorted.
    StateSet image(Element s) const;

    //! |Q.s|, the rank of s as a transformation of Q.
    std::size_t rank(Element s) const {
      return image(s).size();
    }

    std::vector<std::vector<State>> table() const;

   private:
    SAction(Semigroup S) : _semigroup(std::move(S)) {}

    Semigroup          _semigroup;
    std::size_t        _size = 0;
    std::vector<State> _table;
  };

  //! Whether distinct elements act as distinct maps.
  bool is_faithful(SAction const& A);

  //! The action of a subsemigroup obtained by restriction.
  SAction restrict_action(SAction const& A, Subsemigroup const& sub);

  //! S acting on S^1 by right multiplication; state `size()` is the adjoined
  //! identity. Always faithful.
  SAction right_regular_action(Semigroup const& S);

  //! A contravariant functor from `base` to subsets of Q.
  //!
  //! `values[a]` is the subset at object a. An arrow m : a -> b acts from
  //! values[b] to values[a]; `maps[m][x]` is npos for x outside values[b].
  struct Presheaf {
    CategoryPtr                     base;
    std::size_t                     qsize = 0;
    std::vector<StateSet>           values;
    std::vector<std::vector<State>> maps;
  };

  //! A_Q on K(S): A(e) = Qe and x.(e, s, f) = xs.
  Presheaf presheaf_A(SAction const& A, CategoryPtr const& karoubi);

  //! B_Q on D(S): B(s) = Qs and (qs).(s, u, t) = qu. Throws InternalError if
  //! some q1 s = q2 s has q1 u != q2 u.
  Presheaf presheaf_B(SAction const& A, CategoryPtr const& schutzcat);

  //! First violated presheaf law, if any.
  std::optional<std::string> check_presheaf(Presheaf const& P);

  //! Distinct coterminal arrows act differently on some point.
  bool is_faithful(Presheaf const& P);

  //! Whether `P` restricted to the objects and arrows of `Q.base` (matched
  //! by label and payload) is exactly `Q`.
  bool restricts_to(Presheaf const& P, Presheaf const& Q);

  //! Components of a transformation P => P' o F: `components[a][x]` for x
  //! in P(a), npos elsewhere.
  using PresheafMap = std::vector<std::vector<State>>;

  //! First object (as its identity arrow) or arrow where eta : P => P' o F
  //! fails to be a natural transformation.
  std::optional<MorphismId>
  check_presheaf_transformation(Presheaf const&    P,
                                Presheaf const&    Pprime,
                                Functor const&     F,
                                PresheafMap const& eta);

  //! Every component is a bijection P(a) -> P'(F(a)).
  bool components_bijective(Presheaf const&    P,
                            Presheaf const&    Pprime,
                            Functor const&     F,
                            PresheafMap const& eta);

  //! Identity components on each P(a).
  PresheafMap identity_components(Presheaf const& P);

}  // namespace sgcat

#endif  // SGCAT_ACTION_HPP_
