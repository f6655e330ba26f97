#include "sgcat/invariants.hpp"

#include <algorithm>  // for sort, unique, binary_search
#include <map>        // for map
#include <string>     // for to_string
#include <utility>    // for move

#include "sgcat/errors.hpp"

namespace sgcat {

  ////////////////////////////////////////////////////////////////////////
  // Equivalence of actions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // One backtracking search for bijective components eta_a, state by
    // state, checking each naturality equation as soon as both of its
    // states are assigned.
    class PresheafIsoSearch {
     public:
      PresheafIsoSearch(Presheaf const& P,
                        Presheaf const& Pp,
                        Functor const&  F,
                        std::size_t     budget)
          : _P(P), _Pp(Pp), _F(F), _budget(budget) {
        FiniteCategory const& C = *P.base;
        std::size_t const     n = C.number_of_objects();
        _eta.assign(n, std::vector<State>(P.qsize, npos));
        _used.assign(n, std::vector<bool>(Pp.qsize, false));
        _watch.assign(n * P.qsize, {});
        for (ObjectId a = 0; a < n; ++a) {
          for (State x : P.values[a]) {
            _vars.emplace_back(a, x);
          }
        }
        for (MorphismId m = 0; m < C.number_of_morphisms(); ++m) {
          if (C.is_identity(m)) {
            continue;
          }
          ObjectId const a = C.dom(m), b = C.cod(m);
          for (State x : P.values[b]) {
            std::size_t const c = _equations.size();
            _equations.push_back({m, x});
            _watch[b * P.qsize + x].push_back(c);
            _watch[a * P.qsize + P.maps[m][x]].push_back(c);
          }
        }
      }

      std::optional<PresheafMap> run() {
        FiniteCategory const& C = *_P.base;
        for (ObjectId a = 0; a < C.number_of_objects(); ++a) {
          if (_P.values[a].size() != _Pp.values[_F.objects[a]].size()) {
            return std::nullopt;
          }
        }
        if (extend(0)) {
          return _eta;
        }
        return std::nullopt;
      }

     private:
      struct Equation {
        MorphismId m;
        State      x;  // in P(cod m)
      };

      bool holds(Equation const& eq) const {
        FiniteCategory const& C = *_P.base;
        ObjectId const        a = C.dom(eq.m), b = C.cod(eq.m);
        State const           y  = _P.maps[eq.m][eq.x];
        State const           lhs = _eta[a][y];
        State const           rhs = _eta[b][eq.x];
        if (lhs == npos || rhs == npos) {
          return true;
        }
        return lhs == _Pp.maps[_F.morphisms[eq.m]][rhs];
      }

      bool extend(std::size_t i) {
        if (i == _vars.size()) {
          return true;
        }
        auto const [a, x] = _vars[i];
        for (State v : _Pp.values[_F.objects[a]]) {
          if (_used[a][v]) {
            continue;
          }
          if (++_nodes > _budget) {
            throw SearchBudgetExceeded(_budget);
          }
          _eta[a][x]  = v;
          _used[a][v] = true;
          bool ok     = true;
          for (std::size_t c : _watch[a * _P.qsize + x]) {
            if (!holds(_equations[c])) {
              ok = false;
              break;
            }
          }
          if (ok && extend(i + 1)) {
            return true;
          }
          _eta[a][x]  = npos;
          _used[a][v] = false;
        }
        return false;
      }

      Presheaf const&                           _P;
      Presheaf const&                           _Pp;
      Functor const&                            _F;
      std::size_t                               _budget;
      std::size_t                               _nodes = 0;
      PresheafMap                               _eta;
      std::vector<std::vector<bool>>            _used;
      std::vector<std::pair<ObjectId, State>>   _vars;
      std::vector<Equation>                     _equations;
      std::vector<std::vector<std::size_t>>     _watch;
    };
  }  // namespace

  std::optional<PresheafMap> find_presheaf_isomorphism(Presheaf const& P,
                                                       Presheaf const& Pprime,
                                                       Functor const&  F,
                                                       std::size_t budget) {
    return PresheafIsoSearch(P, Pprime, F, budget).run();
  }

  std::optional<ActionEquivalence>
  actions_equivalent(SAction const& A, SAction const& B, std::size_t budget) {
    auto           KS = share(build_karoubi(A.semigroup()));
    auto           KT = share(build_karoubi(B.semigroup()));
    Presheaf const PA = presheaf_A(A, KS);
    Presheaf const PB = presheaf_A(B, KT);

    std::optional<ActionEquivalence> found;
    for_each_equivalence(
        KS,
        KT,
        [&](Functor const& F) {
          if (auto eta = find_presheaf_isomorphism(PA, PB, F, budget)) {
            found = ActionEquivalence{F, std::move(*eta)};
            return false;
          }
          return true;
        },
        budget);
    return found;
  }

  ////////////////////////////////////////////////////////////////////////
  // P(Q)
  ////////////////////////////////////////////////////////////////////////

  ActionPoset action_poset(SAction const& A) {
    ActionPoset P;
    P.class_of.assign(A.size(), npos);
    Semigroup const& S = A.semigroup();
    ElementSet const E = idempotents(S);
    if (E.empty()) {
      return P;
    }
    Subsemigroup const LU = local_units_subsemigroup(S);

    std::vector<bool> in_I(A.size(), false);
    for (State q = 0; q < A.size(); ++q) {
      for (Element e : E) {
        in_I[A.act(q, e)] = true;
      }
    }
    std::map<StateSet, std::size_t> index;
    for (State q = 0; q < A.size(); ++q) {
      if (!in_I[q]) {
        continue;
      }
      StateSet orbit;
      for (Element s : LU.embedding) {
        orbit.push_back(A.act(q, s));
      }
      std::sort(orbit.begin(), orbit.end());
      orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
      auto [it, inserted] = index.emplace(orbit, P.orbits.size());
      if (inserted) {
        P.orbits.push_back(std::move(orbit));
        P.generators.emplace_back();
      }
      P.class_of[q] = it->second;
      P.generators[it->second].push_back(q);
    }
    std::size_t const n = P.orbits.size();
    P.leq               = BitMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        P.leq.set(i,
                  j,
                  std::includes(P.orbits[i].begin(),
                                P.orbits[i].end(),
                                P.orbits[j].begin(),
                                P.orbits[j].end()));
      }
    }
    return P;
  }

  ////////////////////////////////////////////////////////////////////////
  // Labeled preorders of D-classes
  ////////////////////////////////////////////////////////////////////////

  LabeledPreorder labeled_dl(Semigroup const& S) {
    DClassPreorder  D = d_class_preorder(S);
    LabeledPreorder P{D.classes, D.leq, {}};
    for (std::size_t i = 0; i < D.classes.size(); ++i) {
      P.labels.push_back(
          {D.regular[i],
           schutzenberger_group(S, D.classes[i].front(), Side::left),
           std::nullopt});
    }
    return P;
  }

  LabeledPreorder labeled_dq(SAction const& A) {
    LabeledPreorder P = labeled_dl(A.semigroup());
    for (std::size_t i = 0; i < P.nodes.size(); ++i) {
      std::size_t const r = A.rank(P.nodes[i].front());
      for (Element s : P.nodes[i]) {
        if (A.rank(s) != r) {
          throw InternalError("rank is not constant on the D-class of "
                              + std::to_string(s));
        }
      }
      P.labels[i].rank = r;
    }
    return P;
  }

  LabeledPreorder remove_classes_outside(LabeledPreorder const& P,
                                         ElementSet const&      carrier) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < P.nodes.size(); ++i) {
      bool inside = true;
      for (Element s : P.nodes[i]) {
        inside = inside
                 && std::binary_search(carrier.begin(), carrier.end(), s);
      }
      if (inside) {
        keep.push_back(i);
      }
    }
    LabeledPreorder out{{}, BitMatrix(keep.size()), {}};
    for (std::size_t i = 0; i < keep.size(); ++i) {
      out.nodes.push_back(P.nodes[keep[i]]);
      out.labels.push_back(P.labels[keep[i]]);
      for (std::size_t j = 0; j < keep.size(); ++j) {
        out.leq.set(i, j, P.leq(keep[i], keep[j]));
      }
    }
    return out;
  }

  namespace {
    // Rewrites nodes of LU(S) as elements of S; the embedding is increasing
    // so node order is unchanged. Group carriers stay in LU(S) positions.
    LabeledPreorder to_parent(LabeledPreorder        P,
                              std::vector<Element> const& embedding) {
      for (auto& node : P.nodes) {
        for (auto& x : node) {
          x = embedding[x];
        }
      }
      return P;
    }
  }  // namespace

  LabeledPreorder labeled_dl_local_units(Semigroup const& S) {
    Subsemigroup const LU = local_units_subsemigroup(S);
    return to_parent(labeled_dl(LU.semigroup), LU.embedding);
  }

  LabeledPreorder labeled_dq_local_units(SAction const& A) {
    Subsemigroup const LU = local_units_subsemigroup(A.semigroup());
    return to_parent(labeled_dq(restrict_action(A, LU)), LU.embedding);
  }

  std::optional<std::vector<std::size_t>> find_preorder_isomorphism(
      BitMatrix const&                                       A,
      BitMatrix const&                                       B,
      std::function<bool(std::size_t, std::size_t)> const& compatible,
      std::size_t                                            budget) {
    std::size_t const n = A.size();
    if (B.size() != n) {
      return std::nullopt;
    }
    // Cheap invariant: numbers of elements above and below each node.
    auto degrees = [n](BitMatrix const& M, std::size_t i) {
      std::size_t up = 0, down = 0;
      for (std::size_t j = 0; j < n; ++j) {
        up += M(i, j);
        down += M(j, i);
      }
      return std::pair{up, down};
    };
    std::vector<std::size_t> phi(n, npos);
    std::vector<bool>        used(n, false);
    std::size_t              nodes = 0;

    std::function<bool(std::size_t)> extend = [&](std::size_t i) {
      if (i == n) {
        return true;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (used[j] || degrees(A, i) != degrees(B, j) || !compatible(i, j)) {
          continue;
        }
        if (++nodes > budget) {
          throw SearchBudgetExceeded(budget);
        }
        bool ok = A(i, i) == B(j, j);
        for (std::size_t k = 0; k < i && ok; ++k) {
          ok = A(i, k) == B(j, phi[k]) && A(k, i) == B(phi[k], j);
        }
        if (!ok) {
          continue;
        }
        phi[i]  = j;
        used[j] = true;
        if (extend(i + 1)) {
          return true;
        }
        used[j] = false;
      }
      phi[i] = npos;
      return false;
    };
    if (extend(0)) {
      return phi;
    }
    return std::nullopt;
  }

  std::optional<std::vector<std::size_t>>
  find_labeled_preorder_isomorphism(LabeledPreorder const& P,
                                    LabeledPreorder const& Q) {
    std::size_t const n = P.nodes.size();
    if (Q.nodes.size() != n) {
      return std::nullopt;
    }
    // Group comparisons are the expensive part, so they are done once.
    std::vector<bool> compatible(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Label const& a = P.labels[i];
        Label const& b = Q.labels[j];
        compatible[i * n + j] = a.regular == b.regular && a.rank == b.rank
                                && perm_groups_isomorphic(a.group, b.group);
      }
    }
    return find_preorder_isomorphism(
        P.leq, Q.leq, [&](std::size_t i, std::size_t j) {
          return compatible[i * n + j];
        });
  }

  bool labeled_preorders_isomorphic(LabeledPreorder const& P,
                                    LabeledPreorder const& Q) {
    return find_labeled_preorder_isomorphism(P, Q).has_value();
  }

  bool posets_isomorphic(ActionPoset const& P, ActionPoset const& Q) {
    return find_preorder_isomorphism(
               P.leq, Q.leq, [](std::size_t, std::size_t) { return true; })
        .has_value();
  }

  std::vector<std::size_t> induced_poset_iso(ActionEquivalence const& witness,
                                             SAction const&           A,
                                             SAction const&           B) {
    Functor const&        F  = witness.functor;
    FiniteCategory const& KS = *F.source;
    ActionPoset const     P  = action_poset(A);
    ActionPoset const     Pp = action_poset(B);
    if (witness.eta.size() != KS.number_of_objects()) {
      throw WitnessInvalid("eta has the wrong number of components");
    }

    std::vector<std::size_t> f(P.orbits.size(), npos);
    for (ObjectId a = 0; a < KS.number_of_objects(); ++a) {
      Element const e = KS.label(a);
      for (State q = 0; q < A.size(); ++q) {
        if (A.act(q, e) != q) {
          continue;
        }
        State const image = witness.eta[a][q];
        if (image == npos || image >= B.size() || Pp.class_of[image] == npos) {
          throw WitnessInvalid("eta_" + std::to_string(e) + " is undefined at "
                               + std::to_string(q));
        }
        std::size_t const c = P.class_of[q];
        std::size_t const d = Pp.class_of[image];
        if (f[c] != npos && f[c] != d) {
          throw WitnessInvalid("f is not well defined on class "
                               + std::to_string(c));
        }
        f[c] = d;
      }
    }
    for (std::size_t c = 0; c < f.size(); ++c) {
      if (f[c] == npos) {
        throw WitnessInvalid("f is undefined on class " + std::to_string(c));
      }
      for (std::size_t d = 0; d < f.size(); ++d) {
        if (P.leq(c, d) != Pp.leq(f[c], f[d])) {
          throw WitnessInvalid("f is not an order embedding");
        }
      }
    }
    std::vector<bool> hit(Pp.orbits.size(), false);
    for (std::size_t d : f) {
      hit[d] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      throw WitnessInvalid("f is not surjective");
    }
    return f;
  }

}  // namespace sgcat
