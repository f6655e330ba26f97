#include "sgcat/report.hpp"

#include <algorithm>  // for sort
#include <sstream>    // for ostringstream
#include <utility>    // for move
#include <vector>     // for vector

#include "sgcat/category.hpp"
#include "sgcat/errors.hpp"
#include "sgcat/greens.hpp"
#include "sgcat/invariants.hpp"
#include "sgcat/io.hpp"
#include "sgcat/lift.hpp"
#include "sgcat/localstruct.hpp"
#include "sgcat/properties.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace sgcat {

  namespace {
    json header(char const* command) {
      return json{{"schema", report_schema}, {"command", command}};
    }

    json names(Semigroup const& S, ElementSet const& xs) {
      json out = json::array();
      for (Element x : xs) {
        out.push_back(S.name(x));
      }
      return out;
    }

    json all_names(Semigroup const& S) {
      json out = json::array();
      for (Element x = 0; x < S.size(); ++x) {
        out.push_back(S.name(x));
      }
      return out;
    }

    json payload_names(Semigroup const& S, Triple const& p) {
      return json{S.name(p[0]), S.name(p[1]), S.name(p[2])};
    }

    json matrix_json(BitMatrix const& M) {
      json out = json::array();
      for (std::size_t i = 0; i < M.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < M.size(); ++j) {
          row.push_back(M(i, j) ? 1 : 0);
        }
        out.push_back(std::move(row));
      }
      return out;
    }

    json covers_json(BitMatrix const& M) {
      json out = json::array();
      for (auto [lo, hi] : covering_pairs(M)) {
        out.push_back({lo, hi});
      }
      return out;
    }

    bool all_regular(Semigroup const& S) {
      for (Element s = 0; s < S.size(); ++s) {
        if (!is_regular(S, s)) {
          return false;
        }
      }
      return true;
    }

    json d_class_json(Semigroup const& S, GreensData const& g) {
      json out = json::array();
      for (std::size_t i = 0; i < g.d_classes.size(); ++i) {
        Element const   rep = g.d_classes[i].front();
        PermGroup const G   = schutzenberger_group(S, rep, Side::left);
        out.push_back(json{
            {"elements", names(S, g.d_classes[i])},
            {"size", g.d_classes[i].size()},
            {"regular", static_cast<bool>(g.d_class_regular[i])},
            {"h_class_size", g.h_class_of(rep).size()},
            {"group_order", G.order()},
            {"label",
             std::string(g.d_class_regular[i] ? "1" : "0") + "/"
                 + std::to_string(G.order())}});
      }
      return out;
    }

    json category_summary(FiniteCategory const& C) {
      return json{{"objects", C.number_of_objects()},
                  {"morphisms", C.number_of_morphisms()},
                  {"skeleton_objects",
                   skeleton(C).sub.category.number_of_objects()}};
    }

    json category_detail(FiniteCategory const& C, Semigroup const& S) {
      json j = category_summary(C);
      json objects = json::array();
      for (ObjectId a = 0; a < C.number_of_objects(); ++a) {
        objects.push_back(S.name(C.label(a)));
      }
      json arrows = json::array();
      for (MorphismId m = 0; m < C.number_of_morphisms(); ++m) {
        arrows.push_back(payload_names(S, C.payload(m)));
      }
      json homs = json::array();
      for (ObjectId a = 0; a < C.number_of_objects(); ++a) {
        json row = json::array();
        for (ObjectId b = 0; b < C.number_of_objects(); ++b) {
          row.push_back(C.hom(b, a).size());
        }
        homs.push_back(std::move(row));
      }
      j["object_names"]   = std::move(objects);
      j["arrows"]         = std::move(arrows);
      j["hom_sizes"]      = std::move(homs);  // [cod][dom]
      return j;
    }

    // Object map of a functor between categories whose labels are
    // elements of S and T.
    json object_map(Functor const& F, Semigroup const& S, Semigroup const& T) {
      json out = json::array();
      for (ObjectId a = 0; a < F.source->number_of_objects(); ++a) {
        out.push_back({S.name(F.source->label(a)),
                       T.name(F.target->label(F.objects[a]))});
      }
      return out;
    }

    // LU(S) with the names of S, so reports can refer to its elements.
    Semigroup named_local_units(Semigroup const& S) {
      Subsemigroup const       LU = local_units_subsemigroup(S);
      std::vector<std::string> ns;
      for (Element x : LU.embedding) {
        ns.push_back(S.name(x));
      }
      return Semigroup::from_cayley_table(LU.semigroup.table(), std::move(ns));
    }

    json lift_checks(LiftedFunctor const& L,
                     Semigroup const&     S,
                     Semigroup const&     T) {
      GoodnessReport const good = is_good_functor(L.functor, S, T);
      json                 family = json::array();
      for (Element s = 0; s < S.size(); ++s) {
        family.push_back({S.name(L.family.left[s]),
                          S.name(s),
                          S.name(L.family.right[s])});
      }
      return json{{"family", std::move(family)},
                  {"objects", object_map(L.functor, S, T)},
                  {"is_functor", !check_functor(L.functor)},
                  {"restricts_to_source", L.restricts_to_source},
                  {"restricts_to_karoubi_equivalence",
                   good.restricts_to_k_equivalence},
                  {"good", good.good},
                  {"is_equivalence", is_equivalence(L.functor)},
                  {"reflects_regularity",
                   reflects_regularity(L.functor, S, T)},
                  {"reflects_j_order",
                   reflects_j_order_on_objects(L.functor, S, T)}};
    }

    json labeled_json(LabeledPreorder const& P, Semigroup const& S) {
      json nodes = json::array();
      for (std::size_t i = 0; i < P.nodes.size(); ++i) {
        Label const& l = P.labels[i];
        json         node{{"elements", names(S, P.nodes[i])},
                          {"regular", l.regular},
                          {"group_order", l.group.order()}};
        if (l.rank) {
          node["rank"] = *l.rank;
        }
        nodes.push_back(std::move(node));
      }
      return json{{"nodes", std::move(nodes)}, {"covers", covers_json(P.leq)}};
    }
  }  // namespace

  json report_analyze(Semigroup const& S, std::string const& source) {
    json             j = header("analyze");
    GreensData const g = greens_data(S);
    ElementSet const E = idempotents(S);
    j["semigroup"]     = source;
    j["order"]         = S.size();
    j["elements"]      = all_names(S);
    j["identity"]      = S.identity() ? json(S.name(*S.identity())) : json();
    j["idempotents"]   = names(S, E);
    j["regular"]       = all_regular(S);
    json lu{{"has_local_units", has_local_units(S)}};
    lu["elements"] = E.empty() ? json::array()
                               : names(S, local_units_subsemigroup(S).embedding);
    j["local_units"] = std::move(lu);
    j["d_classes"]   = d_class_json(S, g);
    j["karoubi"]     = category_summary(build_karoubi(S));
    j["schutzenberger"] = category_summary(build_schutzcat(S));
    return j;
  }

  json report_karoubi(Semigroup const& S, std::string const& source) {
    json j         = header("karoubi");
    j["semigroup"] = source;
    j["category"]  = category_detail(build_karoubi(S), S);
    return j;
  }

  json report_dcat(Semigroup const& S, std::string const& source) {
    json       j = header("dcat");
    auto const K = share(build_karoubi(S));
    auto const D = share(build_schutzcat(S));
    j["semigroup"] = source;
    j["category"]  = category_detail(*D, S);

    Functor inclusion{K, D, {}, {}};
    for (ObjectId a = 0; a < K->number_of_objects(); ++a) {
      inclusion.objects.push_back(*D->find_object(K->label(a)));
    }
    for (MorphismId m = 0; m < K->number_of_morphisms(); ++m) {
      inclusion.morphisms.push_back(*D->find_morphism(K->payload(m)));
    }
    j["karoubi_inclusion_is_equivalence"] = is_equivalence(inclusion);
    j["regular"]                          = all_regular(S);
    return j;
  }

  json report_schutz(Semigroup const&   S,
                     std::string const& source,
                     Element            h) {
    json             j = header("schutz");
    GreensData const g = greens_data(S);
    auto group_json    = [&](PermGroup const& G) {
      json perms = json::array();
      for (auto const& p : G.elements()) {
        json images = json::array();
        for (std::size_t i : p) {
          images.push_back(S.name(G.carrier()[i]));
        }
        perms.push_back(std::move(images));
      }
      return json{{"order", G.order()},
                  {"abelian", G.is_abelian()},
                  {"permutations", std::move(perms)}};
    };
    PermGroup const left  = schutzenberger_group(S, h, Side::left);
    PermGroup const right = schutzenberger_group(S, h, Side::right);
    j["semigroup"]        = source;
    j["element"]          = S.name(h);
    j["h_class"]          = names(S, g.h_class_of(h));
    j["left"]             = group_json(left);
    j["right"]            = group_json(right);
    j["left_right_isomorphic"] = perm_groups_isomorphic(left, right);
    return j;
  }

  json report_local_divisor(Semigroup const&   S,
                            std::string const& source,
                            Element            s) {
    json               j  = header("local-divisor");
    LocalDivisor const ld = local_divisor(S, s);
    json               table = json::array();
    for (std::size_t i = 0; i < ld.carrier.size(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < ld.carrier.size(); ++k) {
        row.push_back(S.name(ld.carrier[ld.monoid.product(i, k)]));
      }
      table.push_back(std::move(row));
    }
    PermGroup const units = group_of_units(ld.monoid);
    j["semigroup"]        = source;
    j["element"]          = S.name(s);
    j["carrier"]          = names(S, ld.carrier);
    j["identity"]         = S.name(ld.carrier[ld.identity]);
    j["table"]            = std::move(table);
    j["unit_group_order"] = units.order();
    j["units_match_schutzenberger_group"] = perm_groups_isomorphic(
        units, schutzenberger_group(S, s, Side::left));
    j["well_defined"] = local_divisor_well_defined(S, s);
    if (is_idempotent(S, s)) {
      j["equals_local_monoid"]
          = ld.carrier == local_monoid(S, s).embedding;
    }
    return j;
  }

  json report_dclasses(Semigroup const& S, std::string const& source) {
    json                 j = header("dclasses");
    GreensData const     g = greens_data(S);
    DClassPreorder const D = d_class_preorder(g);
    j["semigroup"]         = source;
    j["classes"]           = d_class_json(S, g);
    j["leq"]               = matrix_json(D.leq);
    j["covers"]            = covers_json(D.leq);
    return j;
  }

  json report_compare(Semigroup const&   S,
                      std::string const& source_s,
                      Semigroup const&   T,
                      std::string const& source_t,
                      std::size_t        budget,
                      bool               converse) {
    json       j  = header("compare");
    auto const KS = share(build_karoubi(S));
    auto const KT = share(build_karoubi(T));
    j["semigroups"] = {source_s, source_t};

    auto F               = find_equivalence(KS, KT, budget);
    j["karoubi_equivalent"] = F.has_value();

    bool const idempotents_exist
        = !idempotents(S).empty() && !idempotents(T).empty();
    std::optional<bool> labeled;
    if (idempotents_exist) {
      labeled = labeled_preorders_isomorphic(labeled_dl_local_units(S),
                                             labeled_dl_local_units(T));
      j["labeled_preorders_isomorphic"] = *labeled;
    }

    if (F && idempotents_exist) {
      // K(S) = K(LU(S)), so the lift is taken between the local-unit parts.
      Semigroup const SL = named_local_units(S);
      Semigroup const TL = named_local_units(T);
      j["lift_domain"]   = has_local_units(S) && has_local_units(T)
                               ? "semigroups"
                               : "local units";
      Functor const  G   = has_local_units(S) && has_local_units(T)
                               ? *F
                               : *find_equivalence(share(build_karoubi(SL)),
                                                   share(build_karoubi(TL)),
                                                   budget);
      j["equivalence"]   = object_map(G, SL, TL);
      j["lift"]          = lift_checks(lift_functor(SL, TL, G), SL, TL);
    } else if (!F) {
      json distinguishing = json::array();
      if (idempotents_exist) {
        std::size_t const a = labeled_dl_local_units(S).nodes.size();
        std::size_t const b = labeled_dl_local_units(T).nodes.size();
        if (a != b) {
          distinguishing.push_back(
              {{"invariant", "labeled_dl_nodes"}, {"values", {a, b}}});
        }
      }
      std::size_t const ka = skeleton(*KS).sub.category.number_of_objects();
      std::size_t const kb = skeleton(*KT).sub.category.number_of_objects();
      if (ka != kb) {
        distinguishing.push_back(
            {{"invariant", "karoubi_skeleton_objects"}, {"values", {ka, kb}}});
      }
      if (labeled && !*labeled) {
        distinguishing.push_back({{"invariant", "labeled_dl"}});
      }
      j["distinguishing"] = std::move(distinguishing);
    }

    if (converse) {
      bool const d_eq = find_equivalence(share(build_schutzcat(S)),
                                         share(build_schutzcat(T)),
                                         budget)
                            .has_value();
      j["schutzenberger_equivalent"] = d_eq;
      j["converse_candidate"]        = d_eq && !F;
    }
    return j;
  }

  json report_lift(Semigroup const&   S,
                   std::string const& source_s,
                   Semigroup const&   T,
                   std::string const& source_t,
                   std::size_t        budget) {
    json j          = header("lift");
    j["semigroups"] = {source_s, source_t};
    // Both sides need local units; this throws NoLocalUnits otherwise.
    local_unit_families(S);
    local_unit_families(T);
    auto const KS = share(build_karoubi(S));
    auto const KT = share(build_karoubi(T));
    auto       F  = find_equivalence(KS, KT, budget);
    j["karoubi_equivalent"] = F.has_value();
    if (F) {
      LiftedFunctor const L = lift_functor(S, T, *F);
      j["lift"]             = lift_checks(L, S, T);
      json arrows           = json::array();
      for (MorphismId m = 0; m < L.functor.source->number_of_morphisms(); ++m) {
        arrows.push_back(
            {payload_names(S, L.functor.source->payload(m)),
             payload_names(T, L.functor.target->payload(L.functor.morphisms[m]))});
      }
      j["lift"]["arrows"] = std::move(arrows);
    }
    return j;
  }

  json report_lift_actions(SAction const&     A,
                           std::string const& source_a,
                           SAction const&     B,
                           std::string const& source_b,
                           std::size_t        budget) {
    json             j = header("lift");
    Semigroup const& S = A.semigroup();
    Semigroup const& T = B.semigroup();
    j["actions"]       = {source_a, source_b};
    auto witness       = actions_equivalent(A, B, budget);
    j["actions_equivalent"] = witness.has_value();
    if (!witness) {
      return j;
    }
    local_unit_families(T);  // throws NoLocalUnits
    LiftedFunctor const L = lift_functor(S,
                                         T,
                                         witness->functor,
                                         share(build_schutzcat(S)),
                                         share(build_schutzcat(T)),
                                         local_unit_families(S));
    LiftedTransformation const lambda = lift_natural_transformation(
        L, witness->functor, A, B, witness->eta);
    j["lift"] = lift_checks(L, S, T);
    json components = json::array();
    for (ObjectId a = 0; a < L.functor.source->number_of_objects(); ++a) {
      json pairs = json::array();
      for (State x : A.image(L.functor.source->label(a))) {
        pairs.push_back({x, lambda.components[a][x]});
      }
      components.push_back(
          {{"object", S.name(L.functor.source->label(a))},
           {"map", std::move(pairs)}});
    }
    j["lambda"] = json{{"components", std::move(components)},
                       {"key_identity", lambda.key_identity},
                       {"natural", lambda.natural},
                       {"eta_isomorphism", lambda.eta_iso},
                       {"isomorphism", lambda.iso}};
    return j;
  }

  json report_invariants(SAction const& A, std::string const& source) {
    json             j = header("invariants");
    Semigroup const& S = A.semigroup();
    j["action"]        = source;
    j["order"]         = S.size();
    j["states"]        = A.size();
    j["faithful"]      = is_faithful(A);
    j["presheaf_B_faithful"]
        = is_faithful(presheaf_B(A, share(build_schutzcat(S))));

    ActionPoset const P = action_poset(A);
    j["poset"] = json{{"orbits", P.orbits},
                      {"covers", covers_json(P.leq)}};
    j["labeled_dq"] = labeled_json(labeled_dq(A), S);
    if (!idempotents(S).empty()) {
      j["labeled_dq_local_units"] = labeled_json(labeled_dq_local_units(A), S);
    }
    return j;
  }

  json report_corpus(fs::path const& fixtures, std::size_t budget) {
    json j = header("corpus-run");

    auto json_files = [](fs::path const& dir) {
      std::vector<fs::path> files;
      std::error_code       ec;
      for (auto const& entry : fs::directory_iterator(dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
          files.push_back(entry.path());
        }
      }
      std::sort(files.begin(), files.end());
      return files;
    };

    std::vector<std::pair<std::string, Semigroup>> corpus;
    json semigroups = json::array();
    for (auto const& path : json_files(fixtures)) {
      std::string const name = path.stem().string();
      Semigroup const   S    = parse_semigroup(read_json_file(path)).semigroup;
      PropertySummary const p = check_properties(S);
      json entry              = report_analyze(S, name);
      entry.erase("schema");
      entry.erase("command");
      entry["properties"] = json{
          {"ok", p.ok()},
          {"category_axioms", p.category_axioms},
          {"hom_count_mismatches", p.hom_count_mismatches},
          {"arrow_iso_mismatches", p.arrow_iso_mismatches},
          {"object_iso_mismatches", p.object_iso_mismatches},
          {"composition_witness_mismatches",
           p.composition_witness_mismatches},
          {"automorphism_mismatches", p.automorphism_mismatches},
          {"local_divisor_mismatches", p.local_divisor_mismatches},
          {"unit_group_mismatches", p.unit_group_mismatches},
          {"left_right_mismatches", p.left_right_mismatches},
          {"karoubi_is_full_subcategory", p.karoubi_is_full_subcategory},
          {"duality_karoubi", p.duality_karoubi},
          {"duality_schutzenberger", p.duality_schutzenberger},
          {"inclusion_matches_regularity", p.inclusion_matches_regularity}};
      semigroups.push_back(std::move(entry));
      corpus.emplace_back(name, S);
    }
    j["semigroups"] = std::move(semigroups);

    json actions = json::array();
    for (auto const& path : json_files(fixtures / "actions")) {
      SAction const A = parse_action(read_json_file(path), path.parent_path());
      json          entry = report_invariants(A, path.stem().string());
      entry.erase("schema");
      entry.erase("command");
      actions.push_back(std::move(entry));
    }
    j["actions"] = std::move(actions);

    json pairs = json::array();
    for (std::size_t a = 0; a < corpus.size(); ++a) {
      for (std::size_t b = a + 1; b < corpus.size(); ++b) {
        auto const& [na, S] = corpus[a];
        auto const& [nb, T] = corpus[b];
        bool const k_eq = find_equivalence(share(build_karoubi(S)),
                                           share(build_karoubi(T)),
                                           budget)
                              .has_value();
        pairs.push_back({{"pair", {na, nb}}, {"karoubi_equivalent", k_eq}});
      }
    }
    j["pairs"] = std::move(pairs);
    return j;
  }

  namespace {
    bool is_flat(json const& j) {
      if (!j.is_array()) {
        return !j.is_object();
      }
      for (auto const& x : j) {
        if (x.is_object() || (x.is_array() && !is_flat(x))) {
          return false;
        }
      }
      return true;
    }

    std::string scalar(json const& j) {
      return j.is_string() ? j.get<std::string>() : j.dump();
    }

    std::string inline_value(json const& j) {
      if (!j.is_array()) {
        return scalar(j);
      }
      std::string out = "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += (i ? ", " : "") + inline_value(j[i]);
      }
      return out + "]";
    }

    void render(std::ostringstream& out, json const& j, int indent) {
      std::string const pad(static_cast<std::size_t>(indent), ' ');
      if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
          if (is_flat(it.value())) {
            out << pad << it.key() << ": " << inline_value(it.value()) << "\n";
          } else {
            out << pad << it.key() << ":\n";
            render(out, it.value(), indent + 2);
          }
        }
      } else if (j.is_array()) {
        for (auto const& x : j) {
          if (is_flat(x)) {
            out << pad << "- " << inline_value(x) << "\n";
          } else {
            out << pad << "-\n";
            render(out, x, indent + 2);
          }
        }
      } else {
        out << pad << scalar(j) << "\n";
      }
    }
  }  // namespace

  std::string render_text(json const& report) {
    std::ostringstream out;
    render(out, report, 0);
    return out.str();
  }

}  // namespace sgcat
