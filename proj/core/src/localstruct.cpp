#include "sgcat/localstruct.hpp"

#include <algorithm>  // for sort, unique, find, lower_bound
#include <map>        // for map
#include <string>     // for to_string
#include <tuple>      // for tuple
#include <utility>    // for move

#include "sgcat/errors.hpp"
#include "sgcat/greens.hpp"

namespace sgcat {

  ////////////////////////////////////////////////////////////////////////
  // PermGroup
  ////////////////////////////////////////////////////////////////////////

  PermGroup::PermGroup(ElementSet carrier, std::vector<Permutation> perms)
      : _carrier(std::move(carrier)), _elements(std::move(perms)) {
    std::size_t const k = _carrier.size();
    if (_elements.empty()) {
      throw ValidationError("a permutation group needs at least one element");
    }
    for (auto const& p : _elements) {
      std::vector<bool> hit(k, false);
      if (p.size() != k) {
        throw ValidationError("permutation of the wrong degree");
      }
      for (std::size_t i : p) {
        if (i >= k || hit[i]) {
          throw ValidationError("map is not a permutation of the carrier");
        }
        hit[i] = true;
      }
    }
    std::sort(_elements.begin(), _elements.end());
    _elements.erase(std::unique(_elements.begin(), _elements.end()),
                    _elements.end());

    auto index_of = [this](Permutation const& p) {
      auto it = std::lower_bound(_elements.cbegin(), _elements.cend(), p);
      if (it == _elements.cend() || *it != p) {
        throw ValidationError("permutations are not closed under products");
      }
      return static_cast<std::size_t>(it - _elements.cbegin());
    };

    Permutation id(k);
    for (std::size_t i = 0; i < k; ++i) {
      id[i] = i;
    }
    _identity = index_of(id);

    std::size_t const n = _elements.size();
    _table.resize(n * n);
    Permutation prod(k);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t i = 0; i < k; ++i) {
          prod[i] = _elements[b][_elements[a][i]];
        }
        _table[a * n + b] = index_of(prod);
      }
    }
  }

  bool PermGroup::is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a) {
      for (std::size_t b = a + 1; b < order(); ++b) {
        if (multiply(a, b) != multiply(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::size_t> PermGroup::element_orders() const {
    std::vector<std::size_t> out(order());
    for (std::size_t a = 0; a < order(); ++a) {
      std::size_t x = a, k = 1;
      while (x != _identity) {
        x = multiply(x, a);
        ++k;
      }
      out[a] = k;
    }
    return out;
  }

  Semigroup PermGroup::cayley_table() const {
    std::vector<std::vector<Element>> t(order(), std::vector<Element>(order()));
    for (std::size_t a = 0; a < order(); ++a) {
      for (std::size_t b = 0; b < order(); ++b) {
        t[a][b] = multiply(a, b);
      }
    }
    return Semigroup::from_cayley_table(t);
  }

  PermGroup PermGroup::regular_representation(Semigroup const& group) {
    ElementSet carrier(group.size());
    for (Element x = 0; x < group.size(); ++x) {
      carrier[x] = x;
    }
    std::vector<Permutation> perms;
    for (Element g = 0; g < group.size(); ++g) {
      Permutation p(group.size());
      for (Element x = 0; x < group.size(); ++x) {
        p[x] = group.product(g, x);
      }
      perms.push_back(std::move(p));
    }
    return PermGroup(std::move(carrier), std::move(perms));
  }

  PermGroup PermGroup::trivial(Element point) {
    return PermGroup({point}, {Permutation{0}});
  }

  ////////////////////////////////////////////////////////////////////////
  // Local structure of a semigroup
  ////////////////////////////////////////////////////////////////////////

  PermGroup schutzenberger_group(Semigroup const& S, Element h, Side side) {
    ElementSet const         H = greens_data(S).h_class_of(h);
    std::vector<std::size_t> pos(S.size(), S.size());
    for (std::size_t i = 0; i < H.size(); ++i) {
      pos[H[i]] = i;
    }
    SemigroupOne const       S1(S);
    std::vector<Permutation> perms;
    for (Element u = 0; u < S1.size(); ++u) {
      Permutation p(H.size());
      bool        stable = true;
      for (std::size_t i = 0; i < H.size() && stable; ++i) {
        Element const y = side == Side::left ? S1.product(u, H[i])
                                             : S1.product(H[i], u);
        stable          = pos[y] != S.size();
        p[i]            = pos[y];
      }
      if (stable) {
        perms.push_back(std::move(p));
      }
    }
    return PermGroup(H, std::move(perms));
  }

  Subsemigroup local_monoid(Semigroup const& S, Element e) {
    if (!is_idempotent(S, e)) {
      throw NotIdempotent(e);
    }
    std::vector<bool> in(S.size(), false);
    for (Element x = 0; x < S.size(); ++x) {
      in[S.product(S.product(e, x), e)] = true;
    }
    ElementSet carrier;
    for (Element x = 0; x < S.size(); ++x) {
      if (in[x]) {
        carrier.push_back(x);
      }
    }
    return induced_subsemigroup(S, carrier);
  }

  namespace {
    std::size_t position(ElementSet const& set, Element x) {
      auto it = std::lower_bound(set.cbegin(), set.cend(), x);
      if (it == set.cend() || *it != x) {
        throw InternalError("element " + std::to_string(x)
                            + " missing from carrier");
      }
      return static_cast<std::size_t>(it - set.cbegin());
    }
  }  // namespace

  LocalDivisor local_divisor(Semigroup const& S, Element s) {
    SemigroupOne const S1(S);
    ElementSet const   carrier = right_left_intersection(S, s, s);
    std::size_t const  k       = carrier.size();
    std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
    for (std::size_t i = 0; i < k; ++i) {
      Element x = 0;
      while (S1.product(x, s) != carrier[i]) {
        ++x;  // terminates: carrier[i] lies in S^1 s
      }
      for (std::size_t j = 0; j < k; ++j) {
        table[i][j] = position(carrier, S1.product(x, carrier[j]));
      }
    }
    std::vector<std::string> names;
    if (S.has_names()) {
      for (Element u : carrier) {
        names.push_back(S.name(u));
      }
    }
    return LocalDivisor{s,
                        carrier,
                        Semigroup::from_cayley_table(table, std::move(names)),
                        position(carrier, s)};
  }

  bool local_divisor_well_defined(Semigroup const& S, Element s) {
    SemigroupOne const S1(S);
    ElementSet const   carrier = right_left_intersection(S, s, s);
    for (Element u : carrier) {
      std::optional<std::vector<Element>> first;
      for (Element x = 0; x < S1.size(); ++x) {
        if (S1.product(x, s) != u) {
          continue;
        }
        std::vector<Element> row;
        for (Element v : carrier) {
          row.push_back(S1.product(x, v));
        }
        if (!first) {
          first = std::move(row);
        } else if (*first != row) {
          return false;
        }
      }
    }
    return true;
  }

  PermGroup group_of_units(Semigroup const& monoid) {
    auto const one = monoid.identity();
    if (!one) {
      throw ValidationError("group of units of a semigroup without identity");
    }
    ElementSet units;
    for (Element u = 0; u < monoid.size(); ++u) {
      for (Element v = 0; v < monoid.size(); ++v) {
        if (monoid.product(u, v) == *one && monoid.product(v, u) == *one) {
          units.push_back(u);
          break;
        }
      }
    }
    std::vector<Permutation> perms;
    for (Element u : units) {
      Permutation p(units.size());
      for (std::size_t i = 0; i < units.size(); ++i) {
        p[i] = position(units, monoid.product(u, units[i]));
      }
      perms.push_back(std::move(p));
    }
    return PermGroup(std::move(units), std::move(perms));
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism testing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Signature = std::tuple<std::size_t,   // index of x
                                 std::size_t,   // period of x
                                 std::size_t,   // #{y : xy = x}
                                 std::size_t,   // #{y : yx = x}
                                 std::size_t>;  // #{y : xy = yx}

    std::vector<Signature> signatures(Semigroup const& S) {
      std::vector<Signature> out;
      std::size_t const      n = S.size();
      for (Element x = 0; x < n; ++x) {
        std::vector<std::size_t> seen(n, n);
        Element                  p = x;
        std::size_t              k = 1;
        while (seen[p] == n) {
          seen[p] = k++;
          p       = S.product(p, x);
        }
        std::size_t const index  = seen[p];
        std::size_t const period = k - seen[p];
        std::size_t       rfix = 0, lfix = 0, comm = 0;
        for (Element y = 0; y < n; ++y) {
          rfix += S.product(x, y) == x;
          lfix += S.product(y, x) == x;
          comm += S.product(x, y) == S.product(y, x);
        }
        out.emplace_back(index, period, rfix, lfix, comm);
      }
      return out;
    }

    ElementSet closure(Semigroup const& S, ElementSet const& gens) {
      std::vector<bool>    in(S.size(), false);
      std::vector<Element> queue;
      for (Element g : gens) {
        if (!in[g]) {
          in[g] = true;
          queue.push_back(g);
        }
      }
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Element g : gens) {
          Element const y = S.product(queue[i], g);
          if (!in[y]) {
            in[y] = true;
            queue.push_back(y);
          }
        }
      }
      return queue;
    }

    ElementSet generating_set(Semigroup const& S) {
      ElementSet        gens;
      std::vector<bool> covered(S.size(), false);
      std::size_t       count = 0;
      for (Element x = 0; x < S.size() && count < S.size(); ++x) {
        if (covered[x]) {
          continue;
        }
        gens.push_back(x);
        for (Element y : closure(S, gens)) {
          if (!covered[y]) {
            covered[y] = true;
            ++count;
          }
        }
      }
      return gens;
    }

    class IsoSearch {
     public:
      IsoSearch(Semigroup const& A, Semigroup const& B)
          : _A(A),
            _B(B),
            _sigA(signatures(A)),
            _sigB(signatures(B)),
            _gens(generating_set(A)) {}

      std::optional<std::vector<Element>> run() {
        auto a = _sigA, b = _sigB;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          return std::nullopt;
        }
        _images.clear();
        if (search(0)) {
          return _map;
        }
        return std::nullopt;
      }

     private:
      bool search(std::size_t k) {
        if (!propagate()) {
          return false;
        }
        if (k == _gens.size()) {
          return verify();
        }
        for (Element b = 0; b < _B.size(); ++b) {
          if (_sigB[b] != _sigA[_gens[k]]
              || std::find(_images.cbegin(), _images.cend(), b)
                     != _images.cend()) {
            continue;
          }
          _images.push_back(b);
          if (search(k + 1)) {
            return true;
          }
          _images.pop_back();
        }
        return false;
      }

      // Extends the images of the assigned generators to the subsemigroup
      // they generate; fails on any inconsistency or collision.
      bool propagate() {
        std::size_t const n = _A.size();
        _map.assign(n, n);
        std::vector<Element> inverse(n, n);
        std::vector<Element> queue;
        auto                 assign = [&](Element x, Element y) {
          if (_map[x] == n) {
            if (inverse[y] != n) {
              return false;
            }
            _map[x]    = y;
            inverse[y] = x;
            queue.push_back(x);
            return true;
          }
          return _map[x] == y;
        };
        for (std::size_t i = 0; i < _images.size(); ++i) {
          if (!assign(_gens[i], _images[i])) {
            return false;
          }
        }
        for (std::size_t q = 0; q < queue.size(); ++q) {
          for (std::size_t i = 0; i < _images.size(); ++i) {
            Element const x = queue[q];
            if (!assign(_A.product(x, _gens[i]),
                        _B.product(_map[x], _images[i]))) {
              return false;
            }
          }
        }
        return true;
      }

      bool verify() const {
        for (Element x = 0; x < _A.size(); ++x) {
          if (_map[x] == _A.size()) {
            return false;
          }
          for (Element y = 0; y < _A.size(); ++y) {
            if (_map[_A.product(x, y)] != _B.product(_map[x], _map[y])) {
              return false;
            }
          }
        }
        return true;
      }

      Semigroup const&       _A;
      Semigroup const&       _B;
      std::vector<Signature> _sigA;
      std::vector<Signature> _sigB;
      ElementSet             _gens;
      std::vector<Element>   _images;
      std::vector<Element>   _map;
    };
  }  // namespace

  std::optional<std::vector<Element>>
  find_semigroup_isomorphism(Semigroup const& A,
                             Semigroup const& B,
                             std::size_t      cap) {
    if (A.size() > cap || B.size() > cap) {
      throw SizeCapExceeded(std::max(A.size(), B.size()), cap);
    }
    if (A.size() != B.size()) {
      return std::nullopt;
    }
    return IsoSearch(A, B).run();
  }

  bool semigroups_isomorphic(Semigroup const& A,
                             Semigroup const& B,
                             std::size_t      cap) {
    return find_semigroup_isomorphism(A, B, cap).has_value();
  }

  bool monoids_isomorphic(Semigroup const& A,
                          Semigroup const& B,
                          std::size_t      cap) {
    // A semigroup isomorphism between monoids preserves the identity.
    return A.identity().has_value() && B.identity().has_value()
           && semigroups_isomorphic(A, B, cap);
  }

  bool perm_groups_isomorphic(PermGroup const& G,
                              PermGroup const& H,
                              std::size_t      cap) {
    if (G.order() > cap || H.order() > cap) {
      throw SizeCapExceeded(std::max(G.order(), H.order()), cap);
    }
    if (G.order() != H.order() || G.is_abelian() != H.is_abelian()) {
      return false;
    }
    auto og = G.element_orders(), oh = H.element_orders();
    std::sort(og.begin(), og.end());
    std::sort(oh.begin(), oh.end());
    if (og != oh) {
      return false;
    }
    return semigroups_isomorphic(G.cayley_table(), H.cayley_table(), cap);
  }

}  // namespace sgcat
