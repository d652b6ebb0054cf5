#include "eqhilb/automata/nfa.hpp"

#include "eqhilb/errors.hpp"

namespace eqhilb {

Nfa::Nfa(Alphabet alphabet, std::size_t states)
    : alphabet_(std::move(alphabet)), accepting_(states, false), moves_(states), eps_(states) {}

void Nfa::check(State q) const {
  if (q >= state_count()) throw UsageError("state " + std::to_string(q) + " out of range");
}

State Nfa::add_state(bool accepting) {
  accepting_.push_back(accepting);
  moves_.emplace_back();
  eps_.emplace_back();
  return static_cast<State>(accepting_.size() - 1);
}

void Nfa::set_start(State q) {
  check(q);
  start_ = q;
}

void Nfa::set_accepting(State q, bool accepting) {
  check(q);
  accepting_[q] = accepting;
}

void Nfa::add_move(State from, SymbolId a, State to) {
  check(from);
  check(to);
  if (a >= alphabet_.size()) throw UsageError("symbol id out of range");
  moves_[from].emplace_back(a, to);
}

void Nfa::add_epsilon(State from, State to) {
  check(from);
  check(to);
  eps_[from].push_back(to);
}

namespace {

// Copies b's states into a with an offset; returns the offset.
State append(Nfa& a, const Nfa& b) {
  const State off = static_cast<State>(a.state_count());
  for (State q = 0; q < b.state_count(); ++q) a.add_state(false);
  for (State q = 0; q < b.state_count(); ++q) {
    for (auto [sym, to] : b.moves(q)) a.add_move(q + off, sym, to + off);
    for (State to : b.epsilon(q)) a.add_epsilon(q + off, to + off);
  }
  return off;
}

void require_same(const Nfa& a, const Nfa& b) {
  if (!(a.alphabet() == b.alphabet())) throw UsageError("automata over different alphabets");
}

}  // namespace

Nfa nfa_empty(const Alphabet& alphabet) {
  Nfa n(alphabet, 1);
  return n;
}

Nfa nfa_epsilon(const Alphabet& alphabet) {
  Nfa n(alphabet, 1);
  n.set_accepting(0);
  return n;
}

Nfa nfa_symbol(const Alphabet& alphabet, SymbolId a) {
  Nfa n(alphabet, 2);
  n.set_accepting(1);
  n.add_move(0, a, 1);
  return n;
}

Nfa nfa_union(const Nfa& a, const Nfa& b) {
  require_same(a, b);
  Nfa n(a.alphabet(), 1);
  const State oa = append(n, a);
  const State ob = append(n, b);
  n.add_epsilon(0, a.start() + oa);
  n.add_epsilon(0, b.start() + ob);
  for (State q = 0; q < a.state_count(); ++q)
    if (a.accepting(q)) n.set_accepting(q + oa);
  for (State q = 0; q < b.state_count(); ++q)
    if (b.accepting(q)) n.set_accepting(q + ob);
  return n;
}

Nfa nfa_concat(const Nfa& a, const Nfa& b) {
  require_same(a, b);
  Nfa n(a.alphabet());
  const State oa = append(n, a);
  const State ob = append(n, b);
  n.set_start(a.start() + oa);
  for (State q = 0; q < a.state_count(); ++q)
    if (a.accepting(q)) n.add_epsilon(q + oa, b.start() + ob);
  for (State q = 0; q < b.state_count(); ++q)
    if (b.accepting(q)) n.set_accepting(q + ob);
  return n;
}

Nfa nfa_star(const Nfa& a) {
  Nfa n(a.alphabet(), 1);
  n.set_accepting(0);
  const State oa = append(n, a);
  n.add_epsilon(0, a.start() + oa);
  for (State q = 0; q < a.state_count(); ++q)
    if (a.accepting(q)) n.add_epsilon(q + oa, 0);
  return n;
}

Nfa nfa_lift(const Nfa& a, const Alphabet& target) {
  std::vector<SymbolId> map(a.alphabet().size());
  for (SymbolId s = 0; s < a.alphabet().size(); ++s) map[s] = target.id(a.alphabet()[s].name);
  Nfa n(target, a.state_count());
  n.set_start(a.start());
  for (State q = 0; q < a.state_count(); ++q) {
    n.set_accepting(q, a.accepting(q));
    for (auto [sym, to] : a.moves(q)) n.add_move(q, map[sym], to);
    for (State to : a.epsilon(q)) n.add_epsilon(q, to);
  }
  return n;
}

}  // namespace eqhilb
