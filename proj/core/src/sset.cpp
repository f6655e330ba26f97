#include "sgcat/sset.hpp"

#include <algorithm>  // for lower_bound

#include "sgcat/greens.hpp"

namespace sgcat {

  std::vector<SSetMorphism>
  enumerate_sset_morphisms(Semigroup const& S, Element s, Element t) {
    SemigroupOne const        S1(S);
    ElementSet const          dom = principal_right_ideal(S, s);
    ElementSet const          cod = principal_right_ideal(S, t);
    std::vector<SSetMorphism> out;
    auto pos = [&dom](Element x) {
      return static_cast<std::size_t>(
          std::lower_bound(dom.cbegin(), dom.cend(), x) - dom.cbegin());
    };
    std::vector<bool> in_cod(S.size(), false);
    for (Element y : cod) {
      in_cod[y] = true;
    }
    for (Element w : cod) {
      // f(s x) := w x for x in S^1; reject on a clash.
      std::vector<Element> images(dom.size(), S.size());
      bool                 ok = true;
      for (Element x = 0; x < S1.size() && ok; ++x) {
        std::size_t const i = pos(S1.product(s, x));
        Element const     y = S1.product(w, x);
        if (images[i] == S.size()) {
          images[i] = y;
        } else {
          ok = images[i] == y;
        }
        ok = ok && in_cod[y];
      }
      for (std::size_t i = 0; i < dom.size() && ok; ++i) {
        for (Element r = 0; r < S.size() && ok; ++r) {
          ok = images[pos(S.product(dom[i], r))]
               == S.product(images[i], r);
        }
      }
      if (!ok) {
        continue;
      }
      bool inner = false;
      for (Element u = 0; u < S1.size() && !inner; ++u) {
        inner = true;
        for (std::size_t i = 0; i < dom.size() && inner; ++i) {
          inner = S1.product(u, dom[i]) == images[i];
        }
      }
      out.push_back(SSetMorphism{dom, cod, std::move(images), inner});
    }
    return out;
  }

}  // namespace sgcat
