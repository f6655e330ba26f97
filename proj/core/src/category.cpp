#include "sgcat/category.hpp"

#include <algorithm>  // for sort, unique, find
#include <string>     // for to_string
#include <utility>    // for move

#include "sgcat/errors.hpp"
#include "sgcat/greens.hpp"

namespace sgcat {

  FiniteCategory::FiniteCategory(CategoryKind            kind,
                                 std::vector<Element>    object_labels,
                                 std::vector<Morphism>   morphisms,
                                 std::vector<MorphismId> identities,
                                 Composer const&         compose)
      : _kind(kind),
        _labels(std::move(object_labels)),
        _morphisms(std::move(morphisms)),
        _identities(std::move(identities)) {
    std::size_t const n = _labels.size();
    if (_identities.size() != n) {
      throw InternalError("one identity per object required");
    }
    for (ObjectId a = 0; a < n; ++a) {
      if (!_by_label.emplace(_labels[a], a).second) {
        throw InternalError("duplicate object label "
                            + std::to_string(_labels[a]));
      }
    }
    _homs.resize(n * n);
    std::vector<std::vector<MorphismId>> incoming(n);
    _incoming_pos.resize(_morphisms.size());
    for (MorphismId m = 0; m < _morphisms.size(); ++m) {
      auto const& mor = _morphisms[m];
      if (mor.dom >= n || mor.cod >= n) {
        throw InternalError("morphism endpoint out of range");
      }
      if (!_by_payload.emplace(mor.payload, m).second) {
        throw InternalError("duplicate morphism payload");
      }
      _homs[mor.dom * n + mor.cod].push_back(m);
      _incoming_pos[m] = incoming[mor.cod].size();
      incoming[mor.cod].push_back(m);
    }
    for (ObjectId a = 0; a < n; ++a) {
      MorphismId const id = _identities[a];
      if (id >= _morphisms.size() || dom(id) != a || cod(id) != a) {
        throw InternalError("identity is not an endomorphism of its object");
      }
    }
    _compose.resize(_morphisms.size());
    for (MorphismId g = 0; g < _morphisms.size(); ++g) {
      auto const& in = incoming[dom(g)];
      _compose[g].reserve(in.size());
      for (MorphismId f : in) {
        MorphismId const gf = compose(g, f);
        if (gf >= _morphisms.size() || dom(gf) != dom(f)
            || cod(gf) != cod(g)) {
          throw InternalError("composite has the wrong endpoints");
        }
        _compose[g].push_back(gf);
      }
    }
  }

  std::optional<MorphismId>
  FiniteCategory::find_morphism(Triple const& payload) const {
    auto it = _by_payload.find(payload);
    if (it == _by_payload.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<ObjectId> FiniteCategory::find_object(Element label) const {
    auto it = _by_label.find(label);
    if (it == _by_label.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<std::string> check_category_axioms(FiniteCategory const& C) {
    std::size_t const n = C.number_of_objects();
    for (MorphismId f = 0; f < C.number_of_morphisms(); ++f) {
      if (C.compose(C.identity(C.cod(f)), f) != f
          || C.compose(f, C.identity(C.dom(f))) != f) {
        return "identity law fails at morphism " + std::to_string(f);
      }
    }
    for (ObjectId a = 0; a < n; ++a) {
      for (ObjectId b = 0; b < n; ++b) {
        for (MorphismId f : C.hom(a, b)) {
          for (ObjectId c = 0; c < n; ++c) {
            for (MorphismId g : C.hom(b, c)) {
              MorphismId const gf = C.compose(g, f);
              for (ObjectId d = 0; d < n; ++d) {
                for (MorphismId h : C.hom(c, d)) {
                  if (C.compose(h, gf) != C.compose(C.compose(h, g), f)) {
                    return "associativity fails at (" + std::to_string(h)
                           + "," + std::to_string(g) + "," + std::to_string(f)
                           + ")";
                  }
                }
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  FiniteCategory build_karoubi(Semigroup const& S) {
    ElementSet const                     E = idempotents(S);
    std::vector<ObjectId>                obj(S.size(), npos);
    std::vector<FiniteCategory::Morphism> morphisms;
    for (std::size_t i = 0; i < E.size(); ++i) {
      obj[E[i]] = i;
    }
    for (Element e : E) {
      for (Element s = 0; s < S.size(); ++s) {
        if (S.product(e, s) != s) {
          continue;
        }
        for (Element f : E) {
          if (S.product(s, f) == s) {
            morphisms.push_back({obj[f], obj[e], {e, s, f}});
          }
        }
      }
    }
    std::map<Triple, MorphismId> index;
    for (MorphismId m = 0; m < morphisms.size(); ++m) {
      index.emplace(morphisms[m].payload, m);
    }
    std::vector<MorphismId> identities;
    for (Element e : E) {
      identities.push_back(index.at({e, e, e}));
    }
    return FiniteCategory(
        CategoryKind::karoubi,
        E,
        morphisms,
        identities,
        [&](MorphismId g, MorphismId f) {
          auto const& [e, s, f1] = morphisms[g].payload;
          auto const& [f2, t, h] = morphisms[f].payload;
          (void) f1;
          (void) f2;
          return index.at({e, S.product(s, t), h});
        });
  }

  FiniteCategory build_schutzcat(Semigroup const& S) {
    std::size_t const  n = S.size();
    SemigroupOne const S1(S);
    // witness[u * n + t] = least x in S^1 with x t = u, or npos.
    std::vector<Element> witness(n * n, npos);
    for (Element t = 0; t < n; ++t) {
      for (Element x = 0; x < S1.size(); ++x) {
        Element const u = S1.product(x, t);
        if (witness[u * n + t] == npos) {
          witness[u * n + t] = x;
        }
      }
    }
    std::vector<bool> in_right(n * n, false);  // in_right[s * n + u]
    for (Element s = 0; s < n; ++s) {
      for (Element x = 0; x < S1.size(); ++x) {
        in_right[s * n + S1.product(s, x)] = true;
      }
    }
    std::vector<FiniteCategory::Morphism> morphisms;
    for (Element s = 0; s < n; ++s) {
      for (Element u = 0; u < n; ++u) {
        if (!in_right[s * n + u]) {
          continue;
        }
        for (Element t = 0; t < n; ++t) {
          if (witness[u * n + t] != npos) {
            morphisms.push_back({t, s, {s, u, t}});
          }
        }
      }
    }
    std::map<Triple, MorphismId> index;
    for (MorphismId m = 0; m < morphisms.size(); ++m) {
      index.emplace(morphisms[m].payload, m);
    }
    std::vector<Element>    labels(n);
    std::vector<MorphismId> identities(n);
    for (Element s = 0; s < n; ++s) {
      labels[s]     = s;
      identities[s] = index.at({s, s, s});
    }
    return FiniteCategory(
        CategoryKind::schutzenberger,
        labels,
        morphisms,
        identities,
        [&](MorphismId g, MorphismId f) {
          auto const& [s, u, t] = morphisms[g].payload;
          auto const& [t2, v, r] = morphisms[f].payload;
          (void) t2;
          Element const x = witness[u * n + t];
          return index.at({s, S1.product(x, v), r});
        });
  }

  Subcategory full_subcategory(FiniteCategory const&        C,
                               std::vector<ObjectId> const& objects) {
    std::vector<ObjectId> objs = objects;
    std::sort(objs.begin(), objs.end());
    objs.erase(std::unique(objs.begin(), objs.end()), objs.end());
    std::vector<ObjectId> local(C.number_of_objects(), npos);
    std::vector<Element>  labels;
    for (std::size_t i = 0; i < objs.size(); ++i) {
      local[objs[i]] = i;
      labels.push_back(C.label(objs[i]));
    }
    std::vector<MorphismId>               origin;
    std::vector<MorphismId>               local_mor(C.number_of_morphisms(), npos);
    std::vector<FiniteCategory::Morphism> morphisms;
    for (MorphismId m = 0; m < C.number_of_morphisms(); ++m) {
      if (local[C.dom(m)] != npos && local[C.cod(m)] != npos) {
        local_mor[m] = morphisms.size();
        origin.push_back(m);
        morphisms.push_back(
            {local[C.dom(m)], local[C.cod(m)], C.payload(m)});
      }
    }
    std::vector<MorphismId> identities;
    for (ObjectId a : objs) {
      identities.push_back(local_mor[C.identity(a)]);
    }
    FiniteCategory cat(C.kind(),
                       std::move(labels),
                       std::move(morphisms),
                       std::move(identities),
                       [&](MorphismId g, MorphismId f) {
                         return local_mor[C.compose(origin[g], origin[f])];
                       });
    return Subcategory{std::move(cat), std::move(objs), std::move(origin)};
  }

  Subcategory full_subcategory_on_labels(FiniteCategory const&       C,
                                         std::vector<Element> const& labels) {
    std::vector<ObjectId> objs;
    for (Element x : labels) {
      if (auto a = C.find_object(x)) {
        objs.push_back(*a);
      }
    }
    return full_subcategory(C, objs);
  }

  FiniteCategory opposite_category(FiniteCategory const& C) {
    std::vector<FiniteCategory::Morphism> morphisms;
    for (MorphismId m = 0; m < C.number_of_morphisms(); ++m) {
      morphisms.push_back({C.cod(m), C.dom(m), C.payload(m)});
    }
    std::vector<MorphismId> identities;
    for (ObjectId a = 0; a < C.number_of_objects(); ++a) {
      identities.push_back(C.identity(a));
    }
    return FiniteCategory(
        CategoryKind::generic,
        C.labels(),
        std::move(morphisms),
        std::move(identities),
        [&C](MorphismId g, MorphismId f) { return C.compose(f, g); });
  }

  Triple opposite_payload(Triple const& p) {
    return {p[2], p[1], p[0]};
  }

  bool payload_isomorphic(FiniteCategory const&                       A,
                          FiniteCategory const&                       B,
                          std::function<Triple(Triple const&)> const& relabel) {
    if (A.number_of_objects() != B.number_of_objects()
        || A.number_of_morphisms() != B.number_of_morphisms()) {
      return false;
    }
    std::vector<ObjectId> obj(A.number_of_objects());
    for (ObjectId a = 0; a < A.number_of_objects(); ++a) {
      auto b = B.find_object(A.label(a));
      if (!b) {
        return false;
      }
      obj[a] = *b;
    }
    std::vector<MorphismId> mor(A.number_of_morphisms());
    std::vector<bool>       hit(B.number_of_morphisms(), false);
    for (MorphismId m = 0; m < A.number_of_morphisms(); ++m) {
      auto n = B.find_morphism(relabel(A.payload(m)));
      if (!n || hit[*n] || B.dom(*n) != obj[A.dom(m)]
          || B.cod(*n) != obj[A.cod(m)]) {
        return false;
      }
      hit[*n] = true;
      mor[m]  = *n;
    }
    for (ObjectId a = 0; a < A.number_of_objects(); ++a) {
      if (mor[A.identity(a)] != B.identity(obj[a])) {
        return false;
      }
    }
    std::size_t const k = A.number_of_objects();
    for (ObjectId a = 0; a < k; ++a) {
      for (ObjectId b = 0; b < k; ++b) {
        for (MorphismId f : A.hom(a, b)) {
          for (ObjectId c = 0; c < k; ++c) {
            for (MorphismId g : A.hom(b, c)) {
              if (mor[A.compose(g, f)] != B.compose(mor[g], mor[f])) {
                return false;
              }
            }
          }
        }
      }
    }
    return true;
  }

  std::optional<MorphismId> inverse(FiniteCategory const& C, MorphismId m) {
    ObjectId const a = C.dom(m), b = C.cod(m);
    for (MorphismId g : C.hom(b, a)) {
      if (C.compose(g, m) == C.identity(a) && C.compose(m, g) == C.identity(b)) {
        return g;
      }
    }
    return std::nullopt;
  }

  bool is_isomorphism(FiniteCategory const& C, MorphismId m) {
    return inverse(C, m).has_value();
  }

  std::optional<MorphismId>
  find_isomorphism_between(FiniteCategory const& C, ObjectId a, ObjectId b) {
    for (MorphismId m : C.hom(a, b)) {
      if (is_isomorphism(C, m)) {
        return m;
      }
    }
    return std::nullopt;
  }

  bool objects_isomorphic(FiniteCategory const& C, ObjectId a, ObjectId b) {
    return find_isomorphism_between(C, a, b).has_value();
  }

  PermGroup automorphism_group_at(FiniteCategory const& C, ObjectId a) {
    ElementSet autos;
    for (MorphismId m : C.hom(a, a)) {
      if (is_isomorphism(C, m)) {
        autos.push_back(m);
      }
    }
    std::vector<Permutation> perms;
    for (MorphismId g : autos) {
      Permutation p(autos.size());
      for (std::size_t i = 0; i < autos.size(); ++i) {
        MorphismId const gx = C.compose(g, autos[i]);
        p[i] = static_cast<std::size_t>(
            std::find(autos.cbegin(), autos.cend(), gx) - autos.cbegin());
      }
      perms.push_back(std::move(p));
    }
    return PermGroup(std::move(autos), std::move(perms));
  }

  Semigroup endomorphism_monoid(FiniteCategory const& C, ObjectId a) {
    auto const&                       endo = C.hom(a, a);
    std::vector<std::vector<Element>> table(endo.size(),
                                            std::vector<Element>(endo.size()));
    for (std::size_t i = 0; i < endo.size(); ++i) {
      for (std::size_t j = 0; j < endo.size(); ++j) {
        MorphismId const ij = C.compose(endo[i], endo[j]);
        table[i][j]         = static_cast<Element>(
            std::find(endo.cbegin(), endo.cend(), ij) - endo.cbegin());
      }
    }
    return Semigroup::from_cayley_table(table);
  }

  Skeleton skeleton(FiniteCategory const& C) {
    std::size_t const     n = C.number_of_objects();
    std::vector<ObjectId> rep_of(n, npos);
    std::vector<ObjectId> reps;
    std::vector<MorphismId> to_rep(n), from_rep(n);
    for (ObjectId a = 0; a < n; ++a) {
      for (ObjectId r : reps) {
        if (auto m = find_isomorphism_between(C, a, r)) {
          rep_of[a]   = r;
          to_rep[a]   = *m;
          from_rep[a] = *inverse(C, *m);
          break;
        }
      }
      if (rep_of[a] == npos) {
        rep_of[a]   = a;
        to_rep[a]   = C.identity(a);
        from_rep[a] = C.identity(a);
        reps.push_back(a);
      }
    }
    Subcategory           sub = full_subcategory(C, reps);
    std::vector<ObjectId> representative(n);
    for (ObjectId a = 0; a < n; ++a) {
      representative[a] = static_cast<ObjectId>(
          std::find(sub.objects.cbegin(), sub.objects.cend(), rep_of[a])
          - sub.objects.cbegin());
    }
    std::vector<MorphismId> skeleton_morphism(C.number_of_morphisms(), npos);
    for (MorphismId m = 0; m < sub.morphisms.size(); ++m) {
      skeleton_morphism[sub.morphisms[m]] = m;
    }
    return Skeleton{std::move(sub),
                    std::move(representative),
                    std::move(to_rep),
                    std::move(from_rep),
                    std::move(skeleton_morphism)};
  }

  bool j_order_arrows(FiniteCategory const& C, MorphismId f, MorphismId g) {
    for (MorphismId b : C.hom(C.dom(f), C.dom(g))) {
      MorphismId const gb = C.compose(g, b);
      for (MorphismId a : C.hom(C.cod(g), C.cod(f))) {
        if (C.compose(a, gb) == f) {
          return true;
        }
      }
    }
    return false;
  }

}  // namespace sgcat
