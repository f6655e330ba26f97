#ifndef SGCAT_PROPERTIES_HPP_
#define SGCAT_PROPERTIES_HPP_

#include <cstddef>  // for size_t

#include "sgcat/semigroup.hpp"

namespace sgcat {

  //! Structural identities between S, K(S) and D(S), each checked
  //! exhaustively. Counts are numbers of failing elements or pairs.
  struct PropertySummary {
    bool        category_axioms = false;  // for both K(S) and D(S)
    std::size_t hom_count_mismatches = 0;  // |hom(t, s)| vs |sS^1 n S^1 t|
    std::size_t arrow_iso_mismatches = 0;  // invertible vs s R u L t
    std::size_t object_iso_mismatches = 0;  // isomorphic vs D-related
    std::size_t composition_witness_mismatches = 0;
    std::size_t automorphism_mismatches    = 0;  // Aut(s) vs H_s group
    std::size_t local_divisor_mismatches   = 0;  // End(s) vs local divisor
    std::size_t unit_group_mismatches      = 0;
    std::size_t left_right_mismatches      = 0;
    bool        karoubi_is_full_subcategory = false;
    bool        duality_karoubi             = false;
    bool        duality_schutzenberger      = false;
    //! K(S) -> D(S) is an equivalence exactly when S is regular.
    bool inclusion_matches_regularity = false;

    bool ok() const noexcept {
      return category_axioms && hom_count_mismatches == 0
             && arrow_iso_mismatches == 0 && object_iso_mismatches == 0
             && composition_witness_mismatches == 0
             && automorphism_mismatches == 0 && local_divisor_mismatches == 0
             && unit_group_mismatches == 0 && left_right_mismatches == 0
             && karoubi_is_full_subcategory && duality_karoubi
             && duality_schutzenberger && inclusion_matches_regularity;
    }
  };

  PropertySummary check_properties(Semigroup const& S);

}  // namespace sgcat

#endif  // SGCAT_PROPERTIES_HPP_
