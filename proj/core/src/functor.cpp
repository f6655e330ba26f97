#include "sgcat/functor.hpp"

#include <algorithm>  // for find, sort
#include <string>     // for to_string
#include <tuple>      // for tuple
#include <utility>    // for move

#include "sgcat/errors.hpp"

namespace sgcat {

  Functor identity_functor(CategoryPtr const& C) {
    Functor F{C, C, {}, {}};
    for (ObjectId a = 0; a < C->number_of_objects(); ++a) {
      F.objects.push_back(a);
    }
    for (MorphismId m = 0; m < C->number_of_morphisms(); ++m) {
      F.morphisms.push_back(m);
    }
    return F;
  }

  Functor compose(Functor const& G, Functor const& F) {
    Functor GF{F.source, G.target, {}, {}};
    for (ObjectId a : F.objects) {
      GF.objects.push_back(G.objects[a]);
    }
    for (MorphismId m : F.morphisms) {
      GF.morphisms.push_back(G.morphisms[m]);
    }
    return GF;
  }

  Functor conjugate(Functor const& F, std::vector<MorphismId> const& isos) {
    FiniteCategory const&   D = *F.target;
    std::vector<MorphismId> inv(isos.size());
    Functor                 out{F.source, F.target, {}, {}};
    for (ObjectId a = 0; a < isos.size(); ++a) {
      if (D.dom(isos[a]) != F.objects[a]) {
        throw InvalidFunctor("conjugating isomorphism does not start at F(a)");
      }
      auto i = inverse(D, isos[a]);
      if (!i) {
        throw InvalidFunctor("conjugating arrow is not an isomorphism");
      }
      inv[a] = *i;
      out.objects.push_back(D.cod(isos[a]));
    }
    FiniteCategory const& C = *F.source;
    for (MorphismId m = 0; m < C.number_of_morphisms(); ++m) {
      out.morphisms.push_back(D.compose(
          isos[C.cod(m)], D.compose(F.morphisms[m], inv[C.dom(m)])));
    }
    return out;
  }

  std::optional<FunctorViolation> check_functor(Functor const& F) {
    FiniteCategory const& C = *F.source;
    FiniteCategory const& D = *F.target;
    if (F.objects.size() != C.number_of_objects()
        || F.morphisms.size() != C.number_of_morphisms()) {
      return FunctorViolation{"tables do not cover the source", {}};
    }
    for (ObjectId a = 0; a < C.number_of_objects(); ++a) {
      if (F.objects[a] >= D.number_of_objects()) {
        return FunctorViolation{"object image out of range", {}};
      }
    }
    for (MorphismId m = 0; m < C.number_of_morphisms(); ++m) {
      MorphismId const fm = F.morphisms[m];
      if (fm >= D.number_of_morphisms() || D.dom(fm) != F.objects[C.dom(m)]
          || D.cod(fm) != F.objects[C.cod(m)]) {
        return FunctorViolation{"endpoints not preserved", {m}};
      }
    }
    for (ObjectId a = 0; a < C.number_of_objects(); ++a) {
      if (F.morphisms[C.identity(a)] != D.identity(F.objects[a])) {
        return FunctorViolation{"identity not preserved", {C.identity(a)}};
      }
    }
    std::size_t const n = C.number_of_objects();
    for (ObjectId a = 0; a < n; ++a) {
      for (ObjectId b = 0; b < n; ++b) {
        for (MorphismId f : C.hom(a, b)) {
          for (ObjectId c = 0; c < n; ++c) {
            for (MorphismId g : C.hom(b, c)) {
              if (F.morphisms[C.compose(g, f)]
                  != D.compose(F.morphisms[g], F.morphisms[f])) {
                return FunctorViolation{"composition not preserved", {g, f}};
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_fully_faithful(Functor const& F) {
    FiniteCategory const& C = *F.source;
    FiniteCategory const& D = *F.target;
    for (ObjectId a = 0; a < C.number_of_objects(); ++a) {
      for (ObjectId b = 0; b < C.number_of_objects(); ++b) {
        auto const& src = C.hom(a, b);
        auto const& tgt = D.hom(F.objects[a], F.objects[b]);
        if (src.size() != tgt.size()) {
          return false;
        }
        std::vector<MorphismId> images;
        for (MorphismId m : src) {
          images.push_back(F.morphisms[m]);
        }
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_essentially_surjective(Functor const& F) {
    FiniteCategory const& D = *F.target;
    std::vector<bool>     image(D.number_of_objects(), false);
    for (ObjectId a : F.objects) {
      image[a] = true;
    }
    for (ObjectId d = 0; d < D.number_of_objects(); ++d) {
      bool reached = image[d];
      for (ObjectId e = 0; e < D.number_of_objects() && !reached; ++e) {
        reached = image[e] && objects_isomorphic(D, e, d);
      }
      if (!reached) {
        return false;
      }
    }
    return true;
  }

  bool is_equivalence(Functor const& F) {
    return is_fully_faithful(F) && is_essentially_surjective(F);
  }

  std::optional<MorphismId>
  check_natural_transformation(NaturalTransformation const& eta) {
    FiniteCategory const& C = *eta.from.source;
    FiniteCategory const& D = *eta.from.target;
    for (ObjectId a = 0; a < C.number_of_objects(); ++a) {
      MorphismId const c = eta.components[a];
      if (D.dom(c) != eta.from.objects[a] || D.cod(c) != eta.to.objects[a]) {
        return C.identity(a);
      }
    }
    for (MorphismId m = 0; m < C.number_of_morphisms(); ++m) {
      MorphismId const lhs
          = D.compose(eta.to.morphisms[m], eta.components[C.dom(m)]);
      MorphismId const rhs
          = D.compose(eta.components[C.cod(m)], eta.from.morphisms[m]);
      if (lhs != rhs) {
        return m;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism search
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using MorphismSignature = std::tuple<bool, bool, std::size_t, std::size_t>;

    std::vector<MorphismSignature> morphism_signatures(FiniteCategory const& C) {
      std::vector<MorphismSignature> out;
      for (MorphismId m = 0; m < C.number_of_morphisms(); ++m) {
        bool const iso = is_isomorphism(C, m);
        if (C.dom(m) != C.cod(m)) {
          out.emplace_back(iso, false, 0, 0);
          continue;
        }
        std::vector<MorphismId> powers{m};
        while (true) {
          MorphismId const next = C.compose(powers.back(), m);
          auto it = std::find(powers.cbegin(), powers.cend(), next);
          if (it != powers.cend()) {
            std::size_t const index = static_cast<std::size_t>(
                                          it - powers.cbegin())
                                      + 1;
            out.emplace_back(iso, true, index, powers.size() + 1 - index);
            break;
          }
          powers.push_back(next);
        }
      }
      return out;
    }

    // Non-identity arrows generating every arrow under composition.
    std::vector<MorphismId> generating_arrows(FiniteCategory const& C) {
      std::size_t const       m = C.number_of_morphisms();
      std::vector<bool>       covered(m, false);
      std::vector<MorphismId> gens;
      for (ObjectId a = 0; a < C.number_of_objects(); ++a) {
        covered[C.identity(a)] = true;
      }
      for (MorphismId x = 0; x < m; ++x) {
        if (covered[x]) {
          continue;
        }
        gens.push_back(x);
        std::vector<MorphismId> queue;
        for (MorphismId y = 0; y < m; ++y) {
          if (covered[y]) {
            queue.push_back(y);
          }
        }
        for (MorphismId g : gens) {
          if (!covered[g]) {
            covered[g] = true;
            queue.push_back(g);
          }
        }
        for (std::size_t i = 0; i < queue.size(); ++i) {
          for (MorphismId g : gens) {
            if (C.dom(queue[i]) != C.cod(g)) {
              continue;
            }
            MorphismId const y = C.compose(queue[i], g);
            if (!covered[y]) {
              covered[y] = true;
              queue.push_back(y);
            }
          }
        }
      }
      return gens;
    }

    class CategoryIsoSearch {
     public:
      CategoryIsoSearch(
          FiniteCategory const&                                  A,
          FiniteCategory const&                                  B,
          std::function<bool(CategoryIsomorphism const&)> const& visit,
          std::size_t                                            budget)
          : _A(A),
            _B(B),
            _visit(visit),
            _budget(budget),
            _sigA(morphism_signatures(A)),
            _sigB(morphism_signatures(B)),
            _gens(generating_arrows(A)) {}

      std::size_t run() {
        if (_A.number_of_objects() != _B.number_of_objects()
            || _A.number_of_morphisms() != _B.number_of_morphisms()) {
          return 0;
        }
        auto a = _sigA, b = _sigB;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          return 0;
        }
        _objects.clear();
        _used.assign(_B.number_of_objects(), false);
        assign_objects();
        return _found;
      }

     private:
      void tick() {
        if (++_nodes > _budget) {
          throw SearchBudgetExceeded(_budget);
        }
      }

      // Returns false when the visitor asked to stop.
      bool assign_objects() {
        std::size_t const k = _objects.size();
        if (k == _A.number_of_objects()) {
          _images.clear();
          return assign_arrows();
        }
        for (ObjectId b = 0; b < _B.number_of_objects(); ++b) {
          if (_used[b]) {
            continue;
          }
          tick();
          bool ok = true;
          for (ObjectId i = 0; i <= k && ok; ++i) {
            ObjectId const bi = i == k ? b : _objects[i];
            ok = _A.hom(k, i).size() == _B.hom(b, bi).size()
                 && _A.hom(i, k).size() == _B.hom(bi, b).size();
          }
          if (!ok) {
            continue;
          }
          _used[b] = true;
          _objects.push_back(b);
          bool const go_on = assign_objects();
          _objects.pop_back();
          _used[b] = false;
          if (!go_on) {
            return false;
          }
        }
        return true;
      }

      bool assign_arrows() {
        if (!propagate()) {
          return true;
        }
        std::size_t const k = _images.size();
        if (k == _gens.size()) {
          if (!complete()) {
            return true;
          }
          ++_found;
          return _visit(CategoryIsomorphism{_objects, _map});
        }
        MorphismId const g = _gens[k];
        for (MorphismId h :
             _B.hom(_objects[_A.dom(g)], _objects[_A.cod(g)])) {
          tick();
          if (_sigA[g] != _sigB[h]) {
            continue;
          }
          _images.push_back(h);
          bool const go_on = assign_arrows();
          _images.pop_back();
          if (!go_on) {
            return false;
          }
        }
        return true;
      }

      bool propagate() {
        std::size_t const m = _A.number_of_morphisms();
        _map.assign(m, npos);
        std::vector<MorphismId> inverse(m, npos);
        std::vector<MorphismId> queue;
        auto                    assign = [&](MorphismId x, MorphismId y) {
          if (_map[x] == npos) {
            if (inverse[y] != npos) {
              return false;
            }
            _map[x]    = y;
            inverse[y] = x;
            queue.push_back(x);
            return true;
          }
          return _map[x] == y;
        };
        for (ObjectId a = 0; a < _A.number_of_objects(); ++a) {
          if (!assign(_A.identity(a), _B.identity(_objects[a]))) {
            return false;
          }
        }
        for (std::size_t i = 0; i < _images.size(); ++i) {
          if (!assign(_gens[i], _images[i])) {
            return false;
          }
        }
        for (std::size_t q = 0; q < queue.size(); ++q) {
          MorphismId const x = queue[q];
          for (std::size_t i = 0; i < _images.size(); ++i) {
            MorphismId const g = _gens[i];
            if (_A.dom(x) != _A.cod(g)) {
              continue;
            }
            if (!assign(_A.compose(x, g), _B.compose(_map[x], _images[i]))) {
              return false;
            }
          }
        }
        return true;
      }

      bool complete() const {
        for (MorphismId x = 0; x < _A.number_of_morphisms(); ++x) {
          if (_map[x] == npos) {
            return false;
          }
        }
        std::size_t const n = _A.number_of_objects();
        for (ObjectId a = 0; a < n; ++a) {
          for (ObjectId b = 0; b < n; ++b) {
            for (MorphismId f : _A.hom(a, b)) {
              for (ObjectId c = 0; c < n; ++c) {
                for (MorphismId g : _A.hom(b, c)) {
                  if (_map[_A.compose(g, f)]
                      != _B.compose(_map[g], _map[f])) {
                    return false;
                  }
                }
              }
            }
          }
        }
        return true;
      }

      FiniteCategory const&                                  _A;
      FiniteCategory const&                                  _B;
      std::function<bool(CategoryIsomorphism const&)> const& _visit;
      std::size_t                                            _budget;
      std::size_t                                            _nodes = 0;
      std::size_t                                            _found = 0;
      std::vector<MorphismSignature>                         _sigA;
      std::vector<MorphismSignature>                         _sigB;
      std::vector<MorphismId>                                _gens;
      std::vector<ObjectId>                                  _objects;
      std::vector<bool>                                      _used;
      std::vector<MorphismId>                                _images;
      std::vector<MorphismId>                                _map;
    };

  }  // namespace

  std::size_t for_each_isomorphism(
      FiniteCategory const&                                  A,
      FiniteCategory const&                                  B,
      std::function<bool(CategoryIsomorphism const&)> const& visit,
      std::size_t                                            budget) {
    return CategoryIsoSearch(A, B, visit, budget).run();
  }

  std::optional<CategoryIsomorphism> find_isomorphism(FiniteCategory const& A,
                                                      FiniteCategory const& B,
                                                      std::size_t budget) {
    std::optional<CategoryIsomorphism> out;
    for_each_isomorphism(
        A,
        B,
        [&out](CategoryIsomorphism const& iso) {
          out = iso;
          return false;
        },
        budget);
    return out;
  }

  Functor equivalence_from_skeleton_iso(CategoryPtr const&         C,
                                        Skeleton const&            skC,
                                        CategoryPtr const&         D,
                                        Skeleton const&            skD,
                                        CategoryIsomorphism const& iso) {
    Functor F{C, D, {}, {}};
    for (ObjectId a = 0; a < C->number_of_objects(); ++a) {
      F.objects.push_back(
          skD.sub.objects[iso.objects[skC.representative[a]]]);
    }
    for (MorphismId m = 0; m < C->number_of_morphisms(); ++m) {
      MorphismId const into_skeleton = C->compose(
          skC.to_rep[C->cod(m)], C->compose(m, skC.from_rep[C->dom(m)]));
      MorphismId const local = skC.skeleton_morphism[into_skeleton];
      F.morphisms.push_back(skD.sub.morphisms[iso.morphisms[local]]);
    }
    return F;
  }

  std::size_t
  for_each_equivalence(CategoryPtr const&                         C,
                       CategoryPtr const&                         D,
                       std::function<bool(Functor const&)> const& visit,
                       std::size_t                                budget) {
    Skeleton const skC = skeleton(*C);
    Skeleton const skD = skeleton(*D);
    return for_each_isomorphism(
        skC.sub.category,
        skD.sub.category,
        [&](CategoryIsomorphism const& iso) {
          return visit(equivalence_from_skeleton_iso(C, skC, D, skD, iso));
        },
        budget);
  }

  namespace {
    bool same_tables(FiniteCategory const& A, FiniteCategory const& B) {
      if (A.labels() != B.labels()
          || A.number_of_morphisms() != B.number_of_morphisms()) {
        return false;
      }
      for (MorphismId m = 0; m < A.number_of_morphisms(); ++m) {
        if (A.payload(m) != B.payload(m)) {
          return false;
        }
      }
      return payload_isomorphic(A, B);
    }
  }  // namespace

  std::optional<Functor> find_equivalence(CategoryPtr const& C,
                                          CategoryPtr const& D,
                                          std::size_t        budget) {
    // Identical categories get the identity rather than a retraction onto
    // the skeleton.
    if (C == D || same_tables(*C, *D)) {
      Functor F = identity_functor(C);
      F.target  = D;
      return F;
    }
    std::optional<Functor> out;
    for_each_equivalence(
        C,
        D,
        [&out](Functor const& F) {
          out = F;
          return false;
        },
        budget);
    return out;
  }

}  // namespace sgcat
