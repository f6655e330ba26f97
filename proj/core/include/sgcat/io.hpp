#ifndef SGCAT_IO_HPP_
#define SGCAT_IO_HPP_

#include <filesystem>  // for path
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include <nlohmann/json.hpp>

#include "sgcat/action.hpp"
#include "sgcat/category.hpp"
#include "sgcat/functor.hpp"
#include "sgcat/semigroup.hpp"

namespace sgcat {

  struct LoadedSemigroup {
    Semigroup semigroup;
    //! Generating transformations' closure, for generator files.
    std::optional<std::vector<Transformation>> representatives;
    std::string                                source;  // display name
  };

  //! Either {"order", "table", "names"?} or {"degree", "generators",
  //! "names"?}. Throws ParseError on shape problems and ValidationError
  //! subclasses on algebraic ones.
  LoadedSemigroup parse_semigroup(nlohmann::json const& j);

  nlohmann::json semigroup_to_json(Semigroup const& S);

  //! Reads a JSON file; ParseError if it is missing or malformed.
  nlohmann::json read_json_file(std::filesystem::path const& path);

  //! Where fixture names are looked up: $SGCAT_FIXTURES if set, else the
  //! directory baked in at build time.
  std::filesystem::path fixture_directory();

  //! `ref` is a path (tried relative to `base` first) or a fixture name
  //! such as "T2".
  std::filesystem::path resolve_file(std::string const&           ref,
                                     std::filesystem::path const& base,
                                     std::string const&           subdir = "");

  LoadedSemigroup load_semigroup(std::string const&           ref,
                                 std::filesystem::path const& base = ".");

  //! {"semigroup": <ref or inline object>, "qsize": m, "table": [[...]]},
  //! table[q][s] = q.s.
  SAction parse_action(nlohmann::json const&        j,
                       std::filesystem::path const& base);

  //! Action files are also looked up under <fixtures>/actions.
  SAction load_action(std::string const&           ref,
                      std::filesystem::path const& base = ".");

  nlohmann::json action_to_json(SAction const& A);

  //! A name wins over an index; "#k" always means index k. Throws
  //! UnknownElement.
  Element select_element(Semigroup const& S, std::string const& selector);

  //! Kind, semigroup, objects and payloads. Composition is not stored.
  nlohmann::json category_to_json(FiniteCategory const& C,
                                  Semigroup const&      S);

  //! Rebuilds K(S) or D(S) from the stored semigroup and checks that the
  //! stored objects and payloads match.
  FiniteCategory category_from_json(nlohmann::json const& j);

  nlohmann::json functor_to_json(Functor const&     F,
                                 std::string const& source_ref,
                                 std::string const& target_ref);

  //! Throws InvalidFunctor unless the tables form a functor.
  Functor functor_from_json(nlohmann::json const& j,
                            CategoryPtr const&    source,
                            CategoryPtr const&    target);

}  // namespace sgcat

#endif  // SGCAT_IO_HPP_
