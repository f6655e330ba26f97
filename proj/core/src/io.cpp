#include "sgcat/io.hpp"

#include <cstdlib>  // for getenv
#include <fstream>  // for ifstream
#include <string>   // for string, to_string
#include <utility>  // for move

#include "sgcat/errors.hpp"

#ifndef SGCAT_DEFAULT_FIXTURE_DIR
#define SGCAT_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace sgcat {

  namespace {
    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    std::size_t as_index(json const& j, std::string const& what) {
      if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ParseError(what + " must be a non-negative integer");
      }
      return j.get<std::size_t>();
    }

    std::vector<std::vector<std::size_t>> as_matrix(json const&        j,
                                                    std::string const& what) {
      if (!j.is_array()) {
        throw ParseError(what + " must be an array of arrays");
      }
      std::vector<std::vector<std::size_t>> out;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array()) {
          throw ParseError(what + " row " + std::to_string(i)
                           + " is not an array");
        }
        out.emplace_back();
        for (std::size_t k = 0; k < j[i].size(); ++k) {
          out.back().push_back(as_index(
              j[i][k],
              what + " entry (" + std::to_string(i) + "," + std::to_string(k)
                  + ")"));
        }
      }
      return out;
    }

    std::vector<std::string> names_of(json const& j) {
      std::vector<std::string> names;
      if (j.contains("names")) {
        json const& n = j.at("names");
        if (!n.is_array()) {
          throw ParseError("\"names\" must be an array of strings");
        }
        for (auto const& x : n) {
          if (!x.is_string()) {
            throw ParseError("\"names\" must be an array of strings");
          }
          names.push_back(x.get<std::string>());
        }
      }
      return names;
    }
  }  // namespace

  LoadedSemigroup parse_semigroup(json const& j) {
    if (!j.is_object()) {
      throw ParseError("a semigroup must be a JSON object");
    }
    std::vector<std::string> names = names_of(j);
    if (j.contains("generators")) {
      auto const gens = as_matrix(j.at("generators"), "generators");
      std::vector<Transformation> ts;
      for (auto const& g : gens) {
        ts.push_back(make_transformation(g));
      }
      if (j.contains("degree")) {
        std::size_t const k = as_index(j.at("degree"), "degree");
        for (auto const& t : ts) {
          if (t.degree() != k) {
            throw OutOfRange("generator of degree " + std::to_string(t.degree())
                             + " in a file of degree " + std::to_string(k));
          }
        }
      }
      auto gen = generate_from_transformations(ts, std::move(names));
      return {std::move(gen.semigroup), std::move(gen.representatives), ""};
    }
    auto const table = as_matrix(field(j, "table"), "table");
    if (j.contains("order")
        && as_index(j.at("order"), "order") != table.size()) {
      throw OutOfRange("\"order\" disagrees with the table size");
    }
    return {Semigroup::from_cayley_table(table, std::move(names)),
            std::nullopt,
            ""};
  }

  json semigroup_to_json(Semigroup const& S) {
    json j;
    j["order"] = S.size();
    j["table"] = S.table();
    if (S.has_names()) {
      j["names"] = S.names();
    }
    return j;
  }

  json read_json_file(fs::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open " + path.string());
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
  }

  fs::path fixture_directory() {
    if (char const* dir = std::getenv("SGCAT_FIXTURES"); dir && *dir) {
      return dir;
    }
    return SGCAT_DEFAULT_FIXTURE_DIR;
  }

  fs::path resolve_file(std::string const& ref,
                        fs::path const&    base,
                        std::string const& subdir) {
    std::vector<fs::path> candidates{base / ref, fs::path(ref)};
    fs::path dir = fixture_directory();
    if (!subdir.empty()) {
      dir /= subdir;
    }
    candidates.push_back(dir / ref);
    candidates.push_back(dir / (ref + ".json"));
    for (auto const& c : candidates) {
      std::error_code ec;
      if (fs::is_regular_file(c, ec)) {
        return c;
      }
    }
    throw ParseError("no file or fixture named '" + ref + "'");
  }

  LoadedSemigroup load_semigroup(std::string const& ref, fs::path const& base) {
    fs::path const  path = resolve_file(ref, base);
    LoadedSemigroup out  = parse_semigroup(read_json_file(path));
    out.source           = ref;
    return out;
  }

  SAction parse_action(json const& j, fs::path const& base) {
    json const& sg = field(j, "semigroup");
    Semigroup   S  = sg.is_string()
                         ? load_semigroup(sg.get<std::string>(), base).semigroup
                         : parse_semigroup(sg).semigroup;
    auto const table = as_matrix(field(j, "table"), "table");
    if (j.contains("qsize") && as_index(j.at("qsize"), "qsize") != table.size()) {
      throw OutOfRange("\"qsize\" disagrees with the table size");
    }
    return SAction::make(std::move(S), table);
  }

  SAction load_action(std::string const& ref, fs::path const& base) {
    fs::path const path = resolve_file(ref, base, "actions");
    return parse_action(read_json_file(path), path.parent_path());
  }

  json action_to_json(SAction const& A) {
    return json{{"semigroup", semigroup_to_json(A.semigroup())},
                {"qsize", A.size()},
                {"table", A.table()}};
  }

  Element select_element(Semigroup const& S, std::string const& selector) {
    if (selector.empty()) {
      throw UnknownElement(selector);
    }
    if (selector.front() != '#') {
      if (auto x = S.find_name(selector)) {
        return *x;
      }
    }
    std::string const digits
        = selector.front() == '#' ? selector.substr(1) : selector;
    if (digits.empty()
        || digits.find_first_not_of("0123456789") != std::string::npos
        || digits.size() > 9) {
      throw UnknownElement(selector);
    }
    Element const x = std::stoul(digits);
    if (x >= S.size()) {
      throw UnknownElement(selector);
    }
    return x;
  }

  namespace {
    char const* kind_name(CategoryKind k) {
      switch (k) {
        case CategoryKind::karoubi:
          return "karoubi";
        case CategoryKind::schutzenberger:
          return "schutzenberger";
        default:
          return "generic";
      }
    }
  }  // namespace

  json category_to_json(FiniteCategory const& C, Semigroup const& S) {
    json morphisms = json::array();
    for (MorphismId m = 0; m < C.number_of_morphisms(); ++m) {
      auto const& p = C.payload(m);
      morphisms.push_back({p[0], p[1], p[2]});
    }
    return json{{"kind", kind_name(C.kind())},
                {"semigroup", semigroup_to_json(S)},
                {"objects", C.labels()},
                {"morphisms", std::move(morphisms)}};
  }

  FiniteCategory category_from_json(json const& j) {
    std::string const kind = field(j, "kind").get<std::string>();
    Semigroup const   S    = parse_semigroup(field(j, "semigroup")).semigroup;
    FiniteCategory    C    = kind == "karoubi" ? build_karoubi(S)
                             : kind == "schutzenberger"
                                 ? build_schutzcat(S)
                                 : throw ParseError("unknown category kind '"
                                                    + kind + "'");
    if (field(j, "objects") != json(C.labels())) {
      throw ParseError("stored objects do not match the rebuilt category");
    }
    json const& ms = field(j, "morphisms");
    if (!ms.is_array() || ms.size() != C.number_of_morphisms()) {
      throw ParseError("stored arrows do not match the rebuilt category");
    }
    for (MorphismId m = 0; m < C.number_of_morphisms(); ++m) {
      auto const& p = C.payload(m);
      if (ms[m] != json{p[0], p[1], p[2]}) {
        throw ParseError("stored arrow " + std::to_string(m)
                         + " does not match the rebuilt category");
      }
    }
    return C;
  }

  json functor_to_json(Functor const&     F,
                       std::string const& source_ref,
                       std::string const& target_ref) {
    return json{{"source", source_ref},
                {"target", target_ref},
                {"objects", F.objects},
                {"morphisms", F.morphisms}};
  }

  Functor functor_from_json(json const&        j,
                            CategoryPtr const& source,
                            CategoryPtr const& target) {
    Functor F{source, target, {}, {}};
    for (auto const& x : field(j, "objects")) {
      F.objects.push_back(as_index(x, "object image"));
    }
    for (auto const& x : field(j, "morphisms")) {
      F.morphisms.push_back(as_index(x, "arrow image"));
    }
    if (auto v = check_functor(F)) {
      throw InvalidFunctor("not a functor: " + v->law);
    }
    return F;
  }

}  // namespace sgcat
