#include "sgcat/action.hpp"

#include <algorithm>  // for sort, unique, binary_search
#include <string>     // for to_string
#include <utility>    // for move

#include "sgcat/errors.hpp"

namespace sgcat {

  SAction SAction::make(Semigroup                              S,
                        std::vector<std::vector<State>> const& table) {
    SAction           A(std::move(S));
    std::size_t const n = A._semigroup.size();
    A._size             = table.size();
    for (State q = 0; q < table.size(); ++q) {
      if (table[q].size() != n) {
        throw OutOfRange("action row " + std::to_string(q) + " has length "
                         + std::to_string(table[q].size()) + ", expected "
                         + std::to_string(n));
      }
      for (Element s = 0; s < n; ++s) {
        if (table[q][s] >= table.size()) {
          throw OutOfRange("action entry (" + std::to_string(q) + ","
                           + std::to_string(s) + ") = "
                           + std::to_string(table[q][s])
                           + " is not a state");
        }
        A._table.push_back(table[q][s]);
      }
    }
    Semigroup const& T = A._semigroup;
    for (State q = 0; q < A._size; ++q) {
      for (Element s = 0; s < n; ++s) {
        for (Element t = 0; t < n; ++t) {
          if (A.act(A.act(q, s), t) != A.act(q, T.product(s, t))) {
            throw ActionAxiomViolation(q, s, t);
          }
        }
      }
    }
    return A;
  }

  StateSet SAction::image(Element s) const {
    StateSet out;
    for (State q = 0; q < _size; ++q) {
      out.push_back(act(q, s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<std::vector<State>> SAction::table() const {
    std::vector<std::vector<State>> out(_size);
    for (State q = 0; q < _size; ++q) {
      for (Element s = 0; s < _semigroup.size(); ++s) {
        out[q].push_back(act(q, s));
      }
    }
    return out;
  }

  bool is_faithful(SAction const& A) {
    std::size_t const n = A.semigroup().size();
    for (Element s = 0; s < n; ++s) {
      for (Element t = s + 1; t < n; ++t) {
        bool same = true;
        for (State q = 0; q < A.size() && same; ++q) {
          same = A.act(q, s) == A.act(q, t);
        }
        if (same) {
          return false;
        }
      }
    }
    return true;
  }

  SAction restrict_action(SAction const& A, Subsemigroup const& sub) {
    std::vector<std::vector<State>> table(A.size());
    for (State q = 0; q < A.size(); ++q) {
      for (Element x : sub.embedding) {
        table[q].push_back(A.act(q, x));
      }
    }
    return SAction::make(sub.semigroup, table);
  }

  SAction right_regular_action(Semigroup const& S) {
    SemigroupOne const              S1(S);
    std::vector<std::vector<State>> table(S1.size());
    for (State q = 0; q < S1.size(); ++q) {
      for (Element s = 0; s < S.size(); ++s) {
        table[q].push_back(S1.product(q, s));
      }
    }
    return SAction::make(S, table);
  }

  namespace {
    Presheaf make_presheaf(SAction const& A, CategoryPtr const& C, bool karoubi) {
      FiniteCategory const& cat = *C;
      Presheaf              P{C, A.size(), {}, {}};
      for (ObjectId a = 0; a < cat.number_of_objects(); ++a) {
        P.values.push_back(A.image(cat.label(a)));
      }
      for (MorphismId m = 0; m < cat.number_of_morphisms(); ++m) {
        auto const& [a, u, b] = cat.payload(m);
        (void) b;
        std::vector<State> map(A.size(), npos);
        if (karoubi) {
          for (State x : P.values[cat.cod(m)]) {
            map[x] = A.act(x, u);
          }
        } else {
          for (State q = 0; q < A.size(); ++q) {
            State const x = A.act(q, a);
            State const y = A.act(q, u);
            if (map[x] == npos) {
              map[x] = y;
            } else if (map[x] != y) {
              throw InternalError("B_Q is not well defined at arrow "
                                  + std::to_string(m));
            }
          }
        }
        P.maps.push_back(std::move(map));
      }
      return P;
    }

    bool contains(StateSet const& set, State x) {
      return std::binary_search(set.cbegin(), set.cend(), x);
    }
  }  // namespace

  Presheaf presheaf_A(SAction const& A, CategoryPtr const& karoubi) {
    return make_presheaf(A, karoubi, true);
  }

  Presheaf presheaf_B(SAction const& A, CategoryPtr const& schutzcat) {
    return make_presheaf(A, schutzcat, false);
  }

  std::optional<std::string> check_presheaf(Presheaf const& P) {
    FiniteCategory const& C = *P.base;
    for (MorphismId m = 0; m < C.number_of_morphisms(); ++m) {
      for (State x = 0; x < P.qsize; ++x) {
        bool const defined = P.maps[m][x] != npos;
        if (defined != contains(P.values[C.cod(m)], x)) {
          return "arrow " + std::to_string(m) + " has the wrong domain";
        }
        if (defined && !contains(P.values[C.dom(m)], P.maps[m][x])) {
          return "arrow " + std::to_string(m) + " leaves its codomain";
        }
      }
    }
    for (ObjectId a = 0; a < C.number_of_objects(); ++a) {
      for (State x : P.values[a]) {
        if (P.maps[C.identity(a)][x] != x) {
          return "identity of object " + std::to_string(a)
                 + " does not act trivially";
        }
      }
    }
    std::size_t const n = C.number_of_objects();
    for (ObjectId a = 0; a < n; ++a) {
      for (ObjectId b = 0; b < n; ++b) {
        for (MorphismId f : C.hom(a, b)) {
          for (ObjectId c = 0; c < n; ++c) {
            for (MorphismId g : C.hom(b, c)) {
              MorphismId const gf = C.compose(g, f);
              for (State x : P.values[c]) {
                if (P.maps[gf][x] != P.maps[f][P.maps[g][x]]) {
                  return "composition of arrows " + std::to_string(g) + ","
                         + std::to_string(f) + " is not reversed";
                }
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_faithful(Presheaf const& P) {
    FiniteCategory const& C = *P.base;
    for (ObjectId a = 0; a < C.number_of_objects(); ++a) {
      for (ObjectId b = 0; b < C.number_of_objects(); ++b) {
        auto const& h = C.hom(a, b);
        for (std::size_t i = 0; i < h.size(); ++i) {
          for (std::size_t j = i + 1; j < h.size(); ++j) {
            if (P.maps[h[i]] == P.maps[h[j]]) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool restricts_to(Presheaf const& P, Presheaf const& Q) {
    FiniteCategory const& big   = *P.base;
    FiniteCategory const& small = *Q.base;
    if (P.qsize != Q.qsize) {
      return false;
    }
    for (ObjectId a = 0; a < small.number_of_objects(); ++a) {
      auto b = big.find_object(small.label(a));
      if (!b || P.values[*b] != Q.values[a]) {
        return false;
      }
    }
    for (MorphismId m = 0; m < small.number_of_morphisms(); ++m) {
      auto n = big.find_morphism(small.payload(m));
      if (!n || P.maps[*n] != Q.maps[m]) {
        return false;
      }
    }
    return true;
  }

  std::optional<MorphismId>
  check_presheaf_transformation(Presheaf const&    P,
                                Presheaf const&    Pprime,
                                Functor const&     F,
                                PresheafMap const& eta) {
    FiniteCategory const& C = *P.base;
    if (eta.size() != C.number_of_objects()) {
      return C.number_of_objects() == 0 ? std::nullopt
                                        : std::optional<MorphismId>(0);
    }
    for (ObjectId a = 0; a < C.number_of_objects(); ++a) {
      StateSet const& target = Pprime.values[F.objects[a]];
      if (eta[a].size() != P.qsize) {
        return C.identity(a);
      }
      for (State x : P.values[a]) {
        if (eta[a][x] == npos || !contains(target, eta[a][x])) {
          return C.identity(a);
        }
      }
    }
    for (MorphismId m = 0; m < C.number_of_morphisms(); ++m) {
      ObjectId const a = C.dom(m), b = C.cod(m);
      auto const&    Fm = Pprime.maps[F.morphisms[m]];
      for (State x : P.values[b]) {
        if (eta[a][P.maps[m][x]] != Fm[eta[b][x]]) {
          return m;
        }
      }
    }
    return std::nullopt;
  }

  bool components_bijective(Presheaf const&    P,
                            Presheaf const&    Pprime,
                            Functor const&     F,
                            PresheafMap const& eta) {
    for (ObjectId a = 0; a < P.values.size(); ++a) {
      StateSet image;
      for (State x : P.values[a]) {
        image.push_back(eta[a][x]);
      }
      std::sort(image.begin(), image.end());
      if (image != Pprime.values[F.objects[a]]) {
        return false;
      }
    }
    return true;
  }

  PresheafMap identity_components(Presheaf const& P) {
    PresheafMap out;
    for (auto const& values : P.values) {
      std::vector<State> c(P.qsize, npos);
      for (State x : values) {
        c[x] = x;
      }
      out.push_back(std::move(c));
    }
    return out;
  }

}  // namespace sgcat
