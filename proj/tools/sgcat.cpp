// sgcat: command-line front end. Every subcommand loads its inputs, calls
// one report builder and prints the result.

#include <cstdlib>   // for EXIT_SUCCESS
#include <fstream>   // for ofstream
#include <iostream>  // for cout, cerr
#include <optional>  // for optional
#include <string>    // for string

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sgcat/category.hpp"
#include "sgcat/dot.hpp"
#include "sgcat/errors.hpp"
#include "sgcat/greens.hpp"
#include "sgcat/invariants.hpp"
#include "sgcat/io.hpp"
#include "sgcat/report.hpp"

namespace {

  enum Exit : int {
    ok              = 0,
    failure         = 1,
    parse_error     = 2,
    invalid_input   = 3,
    budget_exceeded = 4,
    unknown_element = 5,
    internal_error  = 70,
  };

  struct Options {
    bool        json = false;
    std::string dot;
    std::string dot_labeled;
    std::size_t budget = sgcat::default_search_budget;
    std::string element;
    bool        converse = false;
    bool        actions  = false;
    std::string fixtures;
    std::string first;
    std::string second;
  };

  void write_dot(std::string const& path, std::string const& text) {
    if (path.empty()) {
      return;
    }
    std::ofstream out(path);
    if (!out) {
      throw sgcat::ParseError("cannot write " + path);
    }
    out << text;
  }

  void emit(Options const& opt, nlohmann::ordered_json const& report) {
    if (opt.json) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << sgcat::render_text(report);
    }
  }

  void no_dot(Options const& opt, char const* command) {
    if (!opt.dot.empty()) {
      std::cerr << "sgcat: --dot is ignored by " << command << "\n";
    }
  }

  int run(std::string const& command, Options const& opt) {
    using namespace sgcat;
    if (command == "corpus-run") {
      no_dot(opt, "corpus-run");
      std::filesystem::path const dir
          = opt.fixtures.empty() ? fixture_directory()
                             : std::filesystem::path(opt.fixtures);
      emit(opt, report_corpus(dir, opt.budget));
      return ok;
    }
    if (command == "invariants") {
      // Either ACTION, or SEMIGROUP ACTION with the semigroup cross-checked.
      std::string const action_ref = opt.second.empty() ? opt.first : opt.second;
      SAction const     A          = load_action(action_ref);
      if (!opt.second.empty()
          && !(load_semigroup(opt.first).semigroup == A.semigroup())) {
        throw ValidationError("the action is over a different semigroup than "
                              + opt.first);
      }
      write_dot(opt.dot, dot_action_poset(action_poset(A)));
      write_dot(opt.dot_labeled,
                dot_labeled_preorder(labeled_dq(A), A.semigroup()));
      emit(opt, report_invariants(A, action_ref));
      return ok;
    }
    if (command == "lift" && opt.actions) {
      no_dot(opt, "lift");
      emit(opt,
           report_lift_actions(load_action(opt.first),
                               opt.first,
                               load_action(opt.second),
                               opt.second,
                               opt.budget));
      return ok;
    }

    Semigroup const S = load_semigroup(opt.first).semigroup;
    if (command == "analyze" || command == "dclasses") {
      write_dot(opt.dot, dot_d_classes(S, d_class_preorder(S)));
      emit(opt,
           command == "analyze" ? report_analyze(S, opt.first)
                                : report_dclasses(S, opt.first));
    } else if (command == "karoubi") {
      write_dot(opt.dot, dot_category(build_karoubi(S), S));
      emit(opt, report_karoubi(S, opt.first));
    } else if (command == "dcat") {
      write_dot(opt.dot, dot_category(build_schutzcat(S), S));
      emit(opt, report_dcat(S, opt.first));
    } else if (command == "schutz" || command == "local-divisor") {
      no_dot(opt, command.c_str());
      Element const x = select_element(S, opt.element);
      emit(opt,
           command == "schutz" ? report_schutz(S, opt.first, x)
                               : report_local_divisor(S, opt.first, x));
    } else if (command == "compare" || command == "lift") {
      no_dot(opt, command.c_str());
      Semigroup const T = load_semigroup(opt.second).semigroup;
      emit(opt,
           command == "compare"
               ? report_compare(S, opt.first, T, opt.second, opt.budget,
                                opt.converse)
               : report_lift(S, opt.first, T, opt.second, opt.budget));
    } else {
      return failure;
    }
    return ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Karoubi envelopes, Schutzenberger categories and action "
               "invariants of finite semigroups"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "print JSON instead of text");
  app.add_option("--dot", opt.dot, "also write a DOT diagram to this path");
  app.add_option("--budget", opt.budget, "node budget for searches")
      ->check(CLI::PositiveNumber);

  auto one = [&](char const* name, char const* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("semigroup", opt.first, "semigroup file or fixture name")
        ->required();
    return sub;
  };
  auto two = [&](char const* name, char const* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("first", opt.first)->required();
    sub->add_option("second", opt.second)->required();
    return sub;
  };

  one("analyze", "order, idempotents, local units, D-classes, category sizes");
  one("karoubi", "the Karoubi envelope K(S)");
  one("dcat", "the Schutzenberger category D(S)");
  one("dclasses", "the preordered set of D-classes");
  one("schutz", "left and right Schutzenberger groups of H_s")
      ->add_option("--element", opt.element, "index, name, or #index")
      ->required();
  one("local-divisor", "the local divisor at s")
      ->add_option("--element", opt.element, "index, name, or #index")
      ->required();
  two("compare", "decide K(S) ~ K(T) and check the lifted equivalence")
      ->add_flag("--converse",
                 opt.converse,
                 "also compare D(S) and D(T) directly");
  two("lift", "lift an equivalence K(S) -> K(T) to D(S) -> D(T)")
      ->add_flag("--actions",
                 opt.actions,
                 "arguments are action files; lift (F, eta) to (F-hat, "
                 "lambda)");
  auto* inv = app.add_subcommand("invariants", "P(Q) and labeled D-classes");
  inv->add_option("first", opt.first, "action, or semigroup then action")
      ->required();
  inv->add_option("second", opt.second);
  inv->add_option("--dot-labeled",
                  opt.dot_labeled,
                  "write the labeled D-class diagram to this path");
  app.add_subcommand("corpus-run", "every fixture, action and pair")
      ->add_option("--fixtures", opt.fixtures, "fixture directory");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return parse_error;
  }

  std::string const command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opt);
  } catch (sgcat::ParseError const& e) {
    std::cerr << "sgcat: parse error: " << e.what() << "\n";
    return parse_error;
  } catch (nlohmann::json::exception const& e) {
    std::cerr << "sgcat: parse error: " << e.what() << "\n";
    return parse_error;
  } catch (sgcat::ValidationError const& e) {
    std::cerr << "sgcat: invalid input: " << e.what() << "\n";
    return invalid_input;
  } catch (sgcat::SearchBudgetExceeded const& e) {
    std::cerr << "sgcat: " << e.what() << " (result inconclusive)\n";
    return budget_exceeded;
  } catch (sgcat::SizeCapExceeded const& e) {
    std::cerr << "sgcat: " << e.what() << "\n";
    return budget_exceeded;
  } catch (sgcat::UnknownElement const& e) {
    std::cerr << "sgcat: " << e.what() << "\n";
    return unknown_element;
  } catch (sgcat::Error const& e) {
    std::cerr << "sgcat: internal error: " << e.what() << "\n";
    return internal_error;
  }
}
