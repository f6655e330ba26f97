// Brute-force reference computations for the test suites. Nothing here
// calls into the library beyond Semigroup::product, so the suites compare
// two independent derivations.

#ifndef SGCAT_TESTS_ORACLES_HPP_
#define SGCAT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgcat/action.hpp"
#include "sgcat/io.hpp"
#include "sgcat/semigroup.hpp"

namespace oracle {

  using sgcat::Element;
  using sgcat::Semigroup;
  using Set = std::set<Element>;

  inline Semigroup fixture(std::string const& name) {
    return sgcat::parse_semigroup(
               sgcat::read_json_file(std::string(SGCAT_TEST_FIXTURES) + "/"
                                     + name + ".json"))
        .semigroup;
  }

  inline sgcat::SAction action_fixture(std::string const& name) {
    std::string const path
        = std::string(SGCAT_TEST_FIXTURES) + "/actions/" + name + ".json";
    return sgcat::load_action(path);
  }

  inline std::vector<std::string> fixture_names() {
    return {"TRIV", "U1", "RZ2", "N2", "C21", "T2", "RB22", "B2"};
  }

  inline Semigroup cyclic_group(std::size_t n) {
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t[i][j] = (i + j) % n;
      }
    }
    return Semigroup::from_cayley_table(t);
  }

  inline Semigroup klein_group() {
    return Semigroup::from_cayley_table(
        {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  }

  // Every product is the zero, which is the last element.
  inline Semigroup null_semigroup(std::size_t n) {
    return Semigroup::from_cayley_table(
        std::vector<std::vector<Element>>(n, std::vector<Element>(n, n - 1)));
  }

  // S^1 as "nothing or an element": x = n stands for the adjoined one.
  inline Element mul1(Semigroup const& S, Element a, Element b) {
    Element const n = S.size();
    return a == n ? b : b == n ? a : S.product(a, b);
  }

  inline Set right_ideal(Semigroup const& S, Element s) {
    Set out;
    for (Element x = 0; x <= S.size(); ++x) {
      out.insert(mul1(S, s, x));
    }
    return out;
  }

  inline Set left_ideal(Semigroup const& S, Element s) {
    Set out;
    for (Element x = 0; x <= S.size(); ++x) {
      out.insert(mul1(S, x, s));
    }
    return out;
  }

  inline Set ideal(Semigroup const& S, Element s) {
    Set out;
    for (Element x = 0; x <= S.size(); ++x) {
      for (Element y = 0; y <= S.size(); ++y) {
        out.insert(mul1(S, mul1(S, x, s), y));
      }
    }
    return out;
  }

  inline Set intersect(Set const& a, Set const& b) {
    Set out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()));
    return out;
  }

  inline bool r_rel(Semigroup const& S, Element s, Element t) {
    return right_ideal(S, s) == right_ideal(S, t);
  }
  inline bool l_rel(Semigroup const& S, Element s, Element t) {
    return left_ideal(S, s) == left_ideal(S, t);
  }
  inline bool j_rel(Semigroup const& S, Element s, Element t) {
    return ideal(S, s) == ideal(S, t);
  }
  inline bool j_leq(Semigroup const& S, Element s, Element t) {
    return ideal(S, t).count(s) > 0;
  }

  inline bool regular(Semigroup const& S, Element s) {
    for (Element x = 0; x < S.size(); ++x) {
      if (S.product(S.product(s, x), s) == s) {
        return true;
      }
    }
    return false;
  }

  inline bool idempotent(Semigroup const& S, Element e) {
    return S.product(e, e) == e;
  }

  inline Set h_class(Semigroup const& S, Element s) {
    Set out;
    for (Element t = 0; t < S.size(); ++t) {
      if (r_rel(S, s, t) && l_rel(S, s, t)) {
        out.insert(t);
      }
    }
    return out;
  }

  // Number of D(S) arrows from t to s, straight from the definition.
  inline std::size_t d_hom_count(Semigroup const& S, Element s, Element t) {
    std::size_t count = 0;
    for (Element u = 0; u < S.size(); ++u) {
      bool in_right = false, in_left = false;
      for (Element x = 0; x <= S.size(); ++x) {
        in_right = in_right || mul1(S, s, x) == u;
        in_left  = in_left || mul1(S, x, t) == u;
      }
      count += in_right && in_left;
    }
    return count;
  }

  // Whether the multiplication tables a and b (as functions on 0..n-1) are
  // isomorphic, by trying every bijection. Only for tiny n.
  template <typename MulA, typename MulB>
  bool tables_isomorphic(std::size_t n, MulA const& a, MulB const& b) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = 0; j < n && ok; ++j) {
          ok = p[a(i, j)] == b(p[i], p[j]);
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  inline bool semigroups_isomorphic(Semigroup const& A, Semigroup const& B) {
    if (A.size() != B.size()) {
      return false;
    }
    return tables_isomorphic(
        A.size(),
        [&](std::size_t i, std::size_t j) { return A.product(i, j); },
        [&](std::size_t i, std::size_t j) { return B.product(i, j); });
  }

  // Associative tables of order n, up to isomorphism, by exhaustive
  // listing and pairwise comparison.
  inline std::vector<Semigroup> semigroups_of_order(std::size_t n) {
    std::vector<Semigroup>  found;
    std::vector<Element>    flat(n * n, 0);
    while (true) {
      std::vector<std::vector<Element>> table(n);
      for (std::size_t i = 0; i < n; ++i) {
        table[i].assign(flat.begin() + i * n, flat.begin() + (i + 1) * n);
      }
      bool assoc = true;
      for (std::size_t i = 0; i < n && assoc; ++i) {
        for (std::size_t j = 0; j < n && assoc; ++j) {
          for (std::size_t k = 0; k < n && assoc; ++k) {
            assoc = table[table[i][j]][k] == table[i][table[j][k]];
          }
        }
      }
      if (assoc) {
        Semigroup S = Semigroup::from_cayley_table(table);
        bool      seen = false;
        for (auto const& T : found) {
          if (oracle::semigroups_isomorphic(S, T)) {
            seen = true;
            break;
          }
        }
        if (!seen) {
          found.push_back(S);
        }
      }
      std::size_t c = 0;
      while (c < flat.size() && ++flat[c] == n) {
        flat[c++] = 0;
      }
      if (c == flat.size()) {
        break;
      }
    }
    return found;
  }

  // Equivariant maps f : sS^1 -> tS^1 (f(xr) = f(x)r), by trying every
  // function on the domain. Returns the image of s under each map and
  // whether the map is left multiplication by some element of S^1.
  struct Map {
    std::vector<std::pair<Element, Element>> graph;
    bool                                     inner;
  };

  inline std::vector<Map> sset_maps(Semigroup const& S, Element s, Element t) {
    Set const            sS = right_ideal(S, s);
    Set const            tS = right_ideal(S, t);
    std::vector<Element> dom(sS.begin(), sS.end());
    std::vector<Element> cod(tS.begin(), tS.end());
    std::vector<std::size_t> choice(dom.size(), 0);
    std::vector<Map>         out;
    auto index_of = [&](Element x) {
      return std::find(dom.begin(), dom.end(), x) - dom.begin();
    };
    while (true) {
      bool ok = true;
      for (std::size_t i = 0; i < dom.size() && ok; ++i) {
        for (Element r = 0; r < S.size() && ok; ++r) {
          Element const xr = S.product(dom[i], r);
          ok = cod[choice[index_of(xr)]] == S.product(cod[choice[i]], r);
        }
      }
      if (ok) {
        Map m{{}, false};
        for (std::size_t i = 0; i < dom.size(); ++i) {
          m.graph.emplace_back(dom[i], cod[choice[i]]);
        }
        for (Element u = 0; u <= S.size() && !m.inner; ++u) {
          bool all = true;
          for (auto [x, y] : m.graph) {
            all = all && mul1(S, u, x) == y;
          }
          m.inner = all;
        }
        out.push_back(std::move(m));
      }
      std::size_t c = 0;
      while (c < choice.size() && ++choice[c] == cod.size()) {
        choice[c++] = 0;
      }
      if (c == choice.size()) {
        break;
      }
    }
    return out;
  }

}  // namespace oracle

#endif  // SGCAT_TESTS_ORACLES_HPP_
