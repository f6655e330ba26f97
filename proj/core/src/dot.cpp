#include "sgcat/dot.hpp"

#include <sstream>  // for ostringstream

namespace sgcat {

  namespace {
    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }

    std::string element_list(ElementSet const& xs, Semigroup const& S) {
      std::string out = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? "," : "") + S.name(xs[i]);
      }
      return out + "}";
    }

    std::string state_list(StateSet const& xs) {
      std::string out = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? "," : "") + std::to_string(xs[i]);
      }
      return out + "}";
    }

    // Edges point from the lower node to the upper one so that dot draws
    // the order bottom-up.
    void hasse_edges(std::ostringstream& out, BitMatrix const& leq) {
      for (auto [lo, hi] : covering_pairs(leq)) {
        out << "  n" << lo << " -> n" << hi << ";\n";
      }
    }
  }  // namespace

  std::string dot_d_classes(Semigroup const& S, DClassPreorder const& D) {
    std::ostringstream out;
    out << "digraph dclasses {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < D.classes.size(); ++i) {
      out << "  n" << i << " [label="
          << quoted(element_list(D.classes[i], S) + "\\nsize "
                    + std::to_string(D.classes[i].size())
                    + (D.regular[i] ? ", regular" : ", not regular"))
          << (D.regular[i] ? "" : ", style=dashed") << "];\n";
    }
    hasse_edges(out, D.leq);
    out << "}\n";
    return out.str();
  }

  std::string dot_category(FiniteCategory const& C, Semigroup const& S) {
    std::ostringstream out;
    out << "digraph category {\n";
    for (ObjectId a = 0; a < C.number_of_objects(); ++a) {
      out << "  o" << a << " [label=" << quoted(S.name(C.label(a))) << "];\n";
    }
    for (ObjectId a = 0; a < C.number_of_objects(); ++a) {
      for (ObjectId b = 0; b < C.number_of_objects(); ++b) {
        if (auto n = C.hom(a, b).size()) {
          out << "  o" << a << " -> o" << b << " [label=\"" << n << "\"];\n";
        }
      }
    }
    out << "}\n";
    return out.str();
  }

  std::string dot_action_poset(ActionPoset const& P) {
    std::ostringstream out;
    out << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < P.orbits.size(); ++i) {
      out << "  n" << i << " [label=" << quoted(state_list(P.orbits[i]))
          << "];\n";
    }
    // Under reverse inclusion smaller subsets sit higher.
    hasse_edges(out, P.leq);
    out << "}\n";
    return out.str();
  }

  std::string dot_labeled_preorder(LabeledPreorder const& P,
                                   Semigroup const&       S) {
    std::ostringstream out;
    out << "digraph labeled {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < P.nodes.size(); ++i) {
      Label const& l    = P.labels[i];
      std::string  text = std::string(l.regular ? "1" : "0") + "/"
                         + std::to_string(l.group.order()) + "/"
                         + (l.rank ? std::to_string(*l.rank) : "-");
      out << "  n" << i << " [label="
          << quoted(element_list(P.nodes[i], S) + "\\n" + text) << "];\n";
    }
    hasse_edges(out, P.leq);
    out << "}\n";
    return out.str();
  }

}  // namespace sgcat
