#include "sgcat/semigroup.hpp"

#include <algorithm>  // for sort, unique, find
#include <map>        // for map
#include <numeric>    // for iota
#include <set>        // for set
#include <string>     // for to_string
#include <utility>    // for move

#include "sgcat/errors.hpp"

namespace sgcat {

  Semigroup Semigroup::from_cayley_table(
      std::vector<std::vector<Element>> const& table,
      std::vector<std::string>                 names) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw OutOfRange("Cayley table must have at least one row");
    }
    Semigroup S;
    S._size = n;
    S._table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw OutOfRange("row " + std::to_string(i) + " has length "
                         + std::to_string(table[i].size()) + ", expected "
                         + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j] >= n) {
          throw OutOfRange("entry (" + std::to_string(i) + ","
                           + std::to_string(j) + ") = "
                           + std::to_string(table[i][j]) + " is not below "
                           + std::to_string(n));
        }
        S._table.push_back(table[i][j]);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Element const ij = S.product(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          if (S.product(ij, k) != S.product(i, S.product(j, k))) {
            throw NonAssociative(i, j, k);
          }
        }
      }
    }
    if (!names.empty()) {
      if (names.size() != n) {
        throw OutOfRange("expected " + std::to_string(n) + " names, got "
                         + std::to_string(names.size()));
      }
      S._names     = std::move(names);
      S._has_names = true;
    } else {
      S._names.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        S._names.push_back(std::to_string(i));
      }
    }
    for (Element e = 0; e < n && !S._identity; ++e) {
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) {
        ok = S.product(e, x) == x && S.product(x, e) == x;
      }
      if (ok) {
        S._identity = e;
      }
    }
    return S;
  }

  std::optional<Element> Semigroup::find_name(std::string_view name) const {
    auto it = std::find(_names.cbegin(), _names.cend(), name);
    if (it == _names.cend()) {
      return std::nullopt;
    }
    return static_cast<Element>(it - _names.cbegin());
  }

  std::vector<std::vector<Element>> Semigroup::table() const {
    std::vector<std::vector<Element>> out(_size, std::vector<Element>(_size));
    for (std::size_t i = 0; i < _size; ++i) {
      for (std::size_t j = 0; j < _size; ++j) {
        out[i][j] = product(i, j);
      }
    }
    return out;
  }

  std::size_t Transformation::rank() const {
    std::vector<Element> im = images;
    std::sort(im.begin(), im.end());
    return static_cast<std::size_t>(std::unique(im.begin(), im.end())
                                    - im.begin());
  }

  Transformation make_transformation(std::vector<Element> images) {
    for (std::size_t p = 0; p < images.size(); ++p) {
      if (images[p] >= images.size()) {
        throw OutOfRange("image " + std::to_string(images[p]) + " of point "
                         + std::to_string(p) + " exceeds degree "
                         + std::to_string(images.size()));
      }
    }
    return Transformation{std::move(images)};
  }

  Transformation then(Transformation const& s, Transformation const& t) {
    Transformation out;
    out.images.resize(s.degree());
    for (Element p = 0; p < s.degree(); ++p) {
      out.images[p] = t[s[p]];
    }
    return out;
  }

  GeneratedSemigroup
  generate_from_transformations(std::vector<Transformation> const& gens,
                                std::vector<std::string>           names) {
    if (gens.empty()) {
      throw EmptyGeneratorSet();
    }
    std::size_t const degree = gens.front().degree();
    for (auto const& g : gens) {
      if (g.degree() != degree) {
        throw OutOfRange("generators have mixed degrees "
                         + std::to_string(degree) + " and "
                         + std::to_string(g.degree()));
      }
      make_transformation(g.images);
    }

    std::vector<Transformation>       elts;
    std::map<Transformation, Element> index;
    auto                              add = [&](Transformation const& t) {
      if (index.emplace(t, elts.size()).second) {
        elts.push_back(t);
      }
    };
    for (auto const& g : gens) {
      add(g);
    }
    for (std::size_t i = 0; i < elts.size(); ++i) {
      for (auto const& g : gens) {
        add(then(elts[i], g));
      }
    }

    std::size_t const                 n = elts.size();
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i][j] = index.at(then(elts[i], elts[j]));
      }
    }
    return GeneratedSemigroup{
        Semigroup::from_cayley_table(table, std::move(names)), std::move(elts)};
  }

  bool is_idempotent(Semigroup const& S, Element x) {
    return S.product(x, x) == x;
  }

  ElementSet idempotents(Semigroup const& S) {
    ElementSet out;
    for (Element x = 0; x < S.size(); ++x) {
      if (is_idempotent(S, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  Subsemigroup induced_subsemigroup(Semigroup const&  S,
                                    ElementSet const& carrier) {
    if (carrier.empty()) {
      throw ValidationError("induced subsemigroup on the empty set");
    }
    std::vector<std::size_t> pos(S.size(), S.size());
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      pos[carrier[i]] = i;
    }
    std::vector<std::vector<Element>> table(
        carrier.size(), std::vector<Element>(carrier.size()));
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      for (std::size_t j = 0; j < carrier.size(); ++j) {
        Element const p = S.product(carrier[i], carrier[j]);
        if (pos[p] == S.size()) {
          throw ValidationError("subset is not closed: "
                                + std::to_string(carrier[i]) + "*"
                                + std::to_string(carrier[j]) + " = "
                                + std::to_string(p));
        }
        table[i][j] = pos[p];
      }
    }
    std::vector<std::string> names;
    if (S.has_names()) {
      for (Element x : carrier) {
        names.push_back(S.name(x));
      }
    }
    return Subsemigroup{Semigroup::from_cayley_table(table, std::move(names)),
                        carrier};
  }

  namespace {
    ElementSet local_units_set(Semigroup const& S) {
      ElementSet const  E = idempotents(S);
      std::vector<bool> in(S.size(), false);
      for (Element e : E) {
        for (Element s = 0; s < S.size(); ++s) {
          Element const es = S.product(e, s);
          for (Element f : E) {
            in[S.product(es, f)] = true;
          }
        }
      }
      ElementSet out;
      for (Element x = 0; x < S.size(); ++x) {
        if (in[x]) {
          out.push_back(x);
        }
      }
      return out;
    }
  }  // namespace

  Subsemigroup local_units_subsemigroup(Semigroup const& S) {
    ElementSet const lu = local_units_set(S);
    if (lu.empty()) {
      throw EmptyLocalUnits();
    }
    return induced_subsemigroup(S, lu);
  }

  bool has_local_units(Semigroup const& S) {
    return local_units_set(S).size() == S.size();
  }

  bool is_regular(Semigroup const& S, Element s) {
    for (Element x = 0; x < S.size(); ++x) {
      if (S.product(S.product(s, x), s) == s) {
        return true;
      }
    }
    return false;
  }

  Semigroup opposite(Semigroup const& S) {
    auto table = S.table();
    for (std::size_t i = 0; i < S.size(); ++i) {
      for (std::size_t j = 0; j < S.size(); ++j) {
        table[i][j] = S.product(j, i);
      }
    }
    std::vector<std::string> names;
    if (S.has_names()) {
      names = S.names();
    }
    return Semigroup::from_cayley_table(table, std::move(names));
  }

  std::vector<Semigroup> small_semigroups(std::size_t n) {
    if (n == 0 || n > 3) {
      throw SizeCapExceeded(n, 3);
    }
    std::size_t const cells = n * n;
    std::vector<Element> flat(cells, 0);
    std::vector<Element> perm(n);
    std::set<std::vector<Element>> seen;

    auto associative = [&] {
      for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
          for (Element k = 0; k < n; ++k) {
            if (flat[flat[i * n + j] * n + k] != flat[i * n + flat[j * n + k]]) {
              return false;
            }
          }
        }
      }
      return true;
    };

    while (true) {
      if (associative()) {
        std::vector<Element> best;
        std::iota(perm.begin(), perm.end(), 0);
        do {
          // perm[x] is the new name of x.
          std::vector<Element> relabelled(cells);
          for (Element i = 0; i < n; ++i) {
            for (Element j = 0; j < n; ++j) {
              relabelled[perm[i] * n + perm[j]] = perm[flat[i * n + j]];
            }
          }
          if (best.empty() || relabelled < best) {
            best = std::move(relabelled);
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
        seen.insert(std::move(best));
      }
      std::size_t c = 0;
      while (c < cells && ++flat[c] == n) {
        flat[c++] = 0;
      }
      if (c == cells) {
        break;
      }
    }

    std::vector<Semigroup> out;
    for (auto const& t : seen) {
      std::vector<std::vector<Element>> table(n);
      for (Element i = 0; i < n; ++i) {
        table[i].assign(t.begin() + i * n, t.begin() + (i + 1) * n);
      }
      out.push_back(Semigroup::from_cayley_table(table));
    }
    return out;
  }

}  // namespace sgcat
