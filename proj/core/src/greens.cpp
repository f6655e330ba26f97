#include "sgcat/greens.hpp"

#include <numeric>  // for iota
#include <utility>  // for pair

#include "sgcat/errors.hpp"

namespace sgcat {

  namespace {
    ElementSet to_set(std::vector<bool> const& mask) {
      ElementSet out;
      for (Element x = 0; x < mask.size(); ++x) {
        if (mask[x]) {
          out.push_back(x);
        }
      }
      return out;
    }

    // Dense ids numbered by smallest member, from an equivalence predicate
    // given as a matrix (assumed to be an equivalence).
    std::vector<std::size_t> class_ids(std::size_t n, auto&& related) {
      std::vector<std::size_t> id(n, n);
      std::size_t              next = 0;
      for (Element x = 0; x < n; ++x) {
        if (id[x] != n) {
          continue;
        }
        for (Element y = x; y < n; ++y) {
          if (id[y] == n && related(x, y)) {
            id[y] = next;
          }
        }
        ++next;
      }
      return id;
    }

    struct UnionFind {
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a < b) {
          parent[b] = a;
        } else if (b < a) {
          parent[a] = b;
        }
      }
      std::vector<std::size_t> parent;
    };
  }  // namespace

  ElementSet principal_right_ideal(Semigroup const& S, Element s) {
    std::vector<bool> in(S.size(), false);
    in[s] = true;
    for (Element x = 0; x < S.size(); ++x) {
      in[S.product(s, x)] = true;
    }
    return to_set(in);
  }

  ElementSet principal_left_ideal(Semigroup const& S, Element s) {
    std::vector<bool> in(S.size(), false);
    in[s] = true;
    for (Element x = 0; x < S.size(); ++x) {
      in[S.product(x, s)] = true;
    }
    return to_set(in);
  }

  ElementSet principal_ideal(Semigroup const& S, Element s) {
    SemigroupOne const S1(S);
    std::vector<bool>  in(S.size(), false);
    for (Element x = 0; x < S1.size(); ++x) {
      Element const xs = S1.product(x, s);
      for (Element y = 0; y < S1.size(); ++y) {
        in[S1.product(xs, y)] = true;
      }
    }
    return to_set(in);
  }

  ElementSet right_left_intersection(Semigroup const& S, Element s, Element t) {
    std::vector<bool> right(S.size(), false);
    right[s] = true;
    for (Element x = 0; x < S.size(); ++x) {
      right[S.product(s, x)] = true;
    }
    ElementSet out;
    for (Element u = 0; u < S.size(); ++u) {
      if (!right[u]) {
        continue;
      }
      bool in_left = (u == t);
      for (Element x = 0; x < S.size() && !in_left; ++x) {
        in_left = S.product(x, t) == u;
      }
      if (in_left) {
        out.push_back(u);
      }
    }
    return out;
  }

  ElementSet GreensData::h_class_of(Element s) const {
    ElementSet out;
    for (Element x = 0; x < h_class.size(); ++x) {
      if (h_class[x] == h_class[s]) {
        out.push_back(x);
      }
    }
    return out;
  }

  GreensData greens_data(Semigroup const& S) {
    std::size_t const n = S.size();
    GreensData        g;
    g.leq_r = BitMatrix(n);
    g.leq_l = BitMatrix(n);
    g.leq_j = BitMatrix(n);
    for (Element t = 0; t < n; ++t) {
      for (Element s : principal_right_ideal(S, t)) {
        g.leq_r.set(s, t);
      }
      for (Element s : principal_left_ideal(S, t)) {
        g.leq_l.set(s, t);
      }
      for (Element s : principal_ideal(S, t)) {
        g.leq_j.set(s, t);
      }
    }
    auto sym = [](BitMatrix const& m) {
      return [&m](Element x, Element y) { return m(x, y) && m(y, x); };
    };
    g.r_class = class_ids(n, sym(g.leq_r));
    g.l_class = class_ids(n, sym(g.leq_l));
    g.j_class = class_ids(n, sym(g.leq_j));
    g.h_class = class_ids(n, [&g](Element x, Element y) {
      return g.r_class[x] == g.r_class[y] && g.l_class[x] == g.l_class[y];
    });

    UnionFind uf(n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (g.r_class[x] == g.r_class[y] || g.l_class[x] == g.l_class[y]) {
          uf.unite(x, y);
        }
      }
    }
    g.d_class = class_ids(
        n, [&uf](Element x, Element y) { return uf.find(x) == uf.find(y); });
    if (g.d_class != g.j_class) {
      throw InternalError("D and J differ on a finite semigroup");
    }

    for (Element x = 0; x < n; ++x) {
      if (g.d_class[x] == g.d_classes.size()) {
        g.d_classes.emplace_back();
        g.d_class_regular.push_back(false);
      }
      g.d_classes[g.d_class[x]].push_back(x);
      if (is_idempotent(S, x)) {
        g.d_class_regular[g.d_class[x]] = true;
      }
    }
    return g;
  }

  DClassPreorder d_class_preorder(GreensData const& greens) {
    DClassPreorder p;
    p.classes = greens.d_classes;
    p.regular = greens.d_class_regular;
    p.leq     = BitMatrix(p.classes.size());
    std::size_t const n = greens.d_class.size();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (greens.leq_j(x, y)) {
          p.leq.set(greens.d_class[x], greens.d_class[y]);
        }
      }
    }
    return p;
  }

  DClassPreorder d_class_preorder(Semigroup const& S) {
    return d_class_preorder(greens_data(S));
  }

  std::vector<std::pair<std::size_t, std::size_t>>
  covering_pairs(BitMatrix const& leq) {
    std::size_t const                                n = leq.size();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    auto strictly = [&](std::size_t a, std::size_t b) {
      return leq(a, b) && !leq(b, a);
    };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!strictly(a, b)) {
          continue;
        }
        bool covered = true;
        for (std::size_t c = 0; c < n && covered; ++c) {
          covered = !(strictly(a, c) && strictly(c, b));
        }
        if (covered) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

}  // namespace sgcat
