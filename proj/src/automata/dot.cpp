#include "eqhilb/automata/dot.hpp"

#include <map>
#include <sstream>

namespace eqhilb {

namespace {
std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}
}  // namespace

std::string to_dot(const Dfa& a, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << quoted(graph_name) << " {\n  rankdir=LR;\n";
  os << "  __start [shape=point];\n";
  for (State q = 0; q < a.state_count(); ++q)
    os << "  " << quoted(a.state_name(q)) << " [shape=" << (a.accepting(q) ? "doublecircle" : "circle")
       << "];\n";
  if (a.state_count() > 0) os << "  __start -> " << quoted(a.state_name(a.start())) << ";\n";
  for (State q = 0; q < a.state_count(); ++q) {
    std::map<State, std::string> labels;
    for (SymbolId s = 0; s < a.alphabet().size(); ++s) {
      const State r = a.next(q, s);
      if (r == Dfa::kNone) continue;
      auto& l = labels[r];
      if (!l.empty()) l += ", ";
      l += a.alphabet()[s].name;
    }
    for (const auto& [r, label] : labels)
      os << "  " << quoted(a.state_name(q)) << " -> " << quoted(a.state_name(r))
         << " [label=" << quoted(label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace eqhilb
