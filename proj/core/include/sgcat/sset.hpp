#ifndef SGCAT_SSET_HPP_
#define SGCAT_SSET_HPP_

#include <vector>  // for vector

#include "sgcat/semigroup.hpp"

namespace sgcat {

  //! An S-set map between principal right ideals, found by brute force.
  struct SSetMorphism {
    ElementSet           domain;    // sS^1
    ElementSet           codomain;  // tS^1
    std::vector<Element> images;    // images[i] = f(domain[i])
    //! Whether f(x) = ux on the whole domain for some u in S^1.
    bool inner = false;
  };

  //! Every map f : sS^1 -> tS^1 with f(xr) = f(x)r, by choosing f(s) and
  //! propagating; each result is tested for innerness by scanning S^1.
  std::vector<SSetMorphism>
  enumerate_sset_morphisms(Semigroup const& S, Element s, Element t);

}  // namespace sgcat

#endif  // SGCAT_SSET_HPP_
