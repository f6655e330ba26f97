#ifndef SGCAT_REPORT_HPP_
#define SGCAT_REPORT_HPP_

#include <cstddef>     // for size_t
#include <filesystem>  // for path
#include <string>      // for string

#include <nlohmann/json.hpp>

#include "sgcat/action.hpp"
#include "sgcat/functor.hpp"
#include "sgcat/semigroup.hpp"

// Report builders behind the sgcat subcommands. Every report is a JSON
// object with "schema": 1 and "command"; element references use display
// names. Keys keep insertion order, so identical inputs render identically.

namespace sgcat {

  inline constexpr int report_schema = 1;

  using Report = nlohmann::ordered_json;

  Report report_analyze(Semigroup const& S, std::string const& source);
  Report report_karoubi(Semigroup const& S, std::string const& source);
  Report report_dcat(Semigroup const& S, std::string const& source);
  Report report_schutz(Semigroup const&   S,
                       std::string const& source,
                       Element            h);
  Report report_local_divisor(Semigroup const&   S,
                              std::string const& source,
                              Element            s);
  Report report_dclasses(Semigroup const& S, std::string const& source);

  //! Karoubi equivalence, and on success the lifted D-level checks. With
  //! `converse` the D-categories are compared directly as well.
  Report report_compare(Semigroup const&   S,
                        std::string const& source_s,
                        Semigroup const&   T,
                        std::string const& source_t,
                        std::size_t        budget,
                        bool               converse);

  //! Lifts the first equivalence K(S) -> K(T) found to D(S) -> D(T).
  Report report_lift(Semigroup const&   S,
                     std::string const& source_s,
                     Semigroup const&   T,
                     std::string const& source_t,
                     std::size_t        budget);

  //! Lifts an action equivalence (F, eta) to (F-hat, lambda).
  Report report_lift_actions(SAction const&     A,
                             std::string const& source_a,
                             SAction const&     B,
                             std::string const& source_b,
                             std::size_t        budget);

  Report report_invariants(SAction const& A, std::string const& source);

  //! Every fixture, every action fixture and every fixture pair, in name
  //! order.
  Report report_corpus(std::filesystem::path const& fixtures,
                       std::size_t                  budget);

  //! Indented plain-text rendering of any report.
  std::string render_text(Report const& report);

}  // namespace sgcat

#endif  // SGCAT_REPORT_HPP_
