#include "eqhilb/automata/dfa.hpp"

#include "eqhilb/errors.hpp"

namespace eqhilb {

Dfa::Dfa(Alphabet alphabet, std::size_t states)
    : alphabet_(std::move(alphabet)),
      accepting_(states, false),
      table_(states * alphabet_.size(), kNone) {}

void Dfa::check(State q) const {
  if (q >= state_count()) throw UsageError("state " + std::to_string(q) + " out of range");
}

std::size_t Dfa::transition_count() const {
  std::size_t n = 0;
  for (State t : table_) n += t != kNone;
  return n;
}

std::string Dfa::state_name(State q) const {
  check(q);
  if (q < names_.size() && !names_[q].empty()) return names_[q];
  return std::to_string(q);
}

State Dfa::add_state(bool accepting, std::string name) {
  const State q = static_cast<State>(accepting_.size());
  accepting_.push_back(accepting);
  table_.resize(table_.size() + alphabet_.size(), kNone);
  if (!name.empty() || !names_.empty()) {
    names_.resize(accepting_.size());
    names_[q] = std::move(name);
  }
  return q;
}

void Dfa::set_start(State q) {
  check(q);
  start_ = q;
}

void Dfa::set_accepting(State q, bool accepting) {
  check(q);
  accepting_[q] = accepting;
}

void Dfa::set_transition(State from, SymbolId a, State to) {
  check(from);
  if (to != kNone) check(to);
  if (a >= alphabet_.size()) throw UsageError("symbol id out of range");
  table_[from * alphabet_.size() + a] = to;
}

State Dfa::state_named(const std::string& name) const {
  for (State q = 0; q < state_count(); ++q)
    if (state_name(q) == name) return q;
  throw UsageError("no state named '" + name + "'");
}

void Dfa::set_transition(const std::string& from, const std::string& symbol, const std::string& to) {
  set_transition(state_named(from), alphabet_.id(symbol), state_named(to));
}

State Dfa::run(State q, std::span<const SymbolId> w) const {
  for (SymbolId a : w) {
    if (q == kNone) return kNone;
    q = next(q, a);
  }
  return q;
}

Nfa Dfa::to_nfa() const {
  Nfa n(alphabet_, state_count());
  if (state_count() == 0) return nfa_empty(alphabet_);
  n.set_start(start_);
  for (State q = 0; q < state_count(); ++q) {
    n.set_accepting(q, accepting_[q]);
    for (SymbolId a = 0; a < alphabet_.size(); ++a)
      if (next(q, a) != kNone) n.add_move(q, a, next(q, a));
  }
  return n;
}

}  // namespace eqhilb
