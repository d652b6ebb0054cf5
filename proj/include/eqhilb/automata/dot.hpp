#ifndef EQHILB_AUTOMATA_DOT_HPP
#define EQHILB_AUTOMATA_DOT_HPP

#include <string>

#include "eqhilb/automata/dfa.hpp"

namespace eqhilb {

// Graphviz text. Accepting states are doublecircles, the start state gets
// an arrow from an invisible point, and parallel edges share one label
// listing their symbols in alphabet order. States ascend; output is
// deterministic.
std::string to_dot(const Dfa& a, const std::string& graph_name = "automaton");

}  // namespace eqhilb

#endif  // EQHILB_AUTOMATA_DOT_HPP
