#include "eqhilb/automata/ops.hpp"

#include <algorithm>
#include <deque>

#include "eqhilb/errors.hpp"

namespace eqhilb {

Homomorphism::Homomorphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size()) throw UsageError("homomorphism is not total");
  for (const auto& w : images_)
    for (SymbolId a : w)
      if (a >= target_.size()) throw UsageError("homomorphism image outside target alphabet");
}

Homomorphism::Homomorphism(Alphabet source, Alphabet target,
                           const std::map<std::string, std::vector<std::string>>& images)
    : source_(std::move(source)), target_(std::move(target)) {
  for (const auto& [name, _] : images) source_.id(name);
  for (const auto& sym : source_.symbols()) {
    auto it = images.find(sym.name);
    if (it == images.end()) throw UsageError("homomorphism has no image for '" + sym.name + "'");
    Word w;
    for (const auto& n : it->second) w.push_back(target_.id(n));
    images_.push_back(std::move(w));
  }
}

Word Homomorphism::apply(std::span<const SymbolId> w) const {
  Word out;
  for (SymbolId a : w) out.insert(out.end(), images_.at(a).begin(), images_.at(a).end());
  return out;
}

namespace {

void closure(const Nfa& a, std::vector<State>& set) {
  std::vector<bool> in(a.state_count(), false);
  for (State q : set) in[q] = true;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (State r : a.epsilon(set[i]))
      if (!in[r]) {
        in[r] = true;
        set.push_back(r);
      }
  std::sort(set.begin(), set.end());
}

Dfa empty_dfa(const Alphabet& alphabet) { return Dfa(alphabet, 1); }

// Drops states that cannot reach an accepting state or are unreachable,
// then refines and renumbers canonically.
Dfa trim_and_minimize(const Dfa& a) {
  const std::size_t n = a.state_count();
  const std::size_t k = a.alphabet().size();
  if (n == 0) return empty_dfa(a.alphabet());

  std::vector<std::vector<State>> rev(n);
  for (State q = 0; q < n; ++q)
    for (SymbolId s = 0; s < k; ++s)
      if (a.next(q, s) != Dfa::kNone) rev[a.next(q, s)].push_back(q);
  std::vector<bool> live(n, false);
  std::deque<State> work;
  for (State q = 0; q < n; ++q)
    if (a.accepting(q)) {
      live[q] = true;
      work.push_back(q);
    }
  while (!work.empty()) {
    const State q = work.front();
    work.pop_front();
    for (State p : rev[q])
      if (!live[p]) {
        live[p] = true;
        work.push_back(p);
      }
  }
  if (!live[a.start()]) return empty_dfa(a.alphabet());
  auto step = [&](State q, SymbolId s) {
    const State r = a.next(q, s);
    return (r != Dfa::kNone && live[r]) ? r : Dfa::kNone;
  };

  // Moore refinement over live states; a missing move is its own class.
  std::vector<std::size_t> block(n, 0);
  std::size_t blocks = 0;
  {
    std::map<bool, std::size_t> init;
    for (State q = 0; q < n; ++q)
      if (live[q]) {
        auto [it, fresh] = init.emplace(a.accepting(q), init.size());
        block[q] = it->second;
      }
    blocks = init.size();
  }
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> sig;
    std::vector<std::size_t> next_block(n, 0);
    for (State q = 0; q < n; ++q) {
      if (!live[q]) continue;
      std::vector<std::size_t> key{block[q]};
      for (SymbolId s = 0; s < k; ++s) {
        const State r = step(q, s);
        key.push_back(r == Dfa::kNone ? SIZE_MAX : block[r]);
      }
      auto [it, fresh] = sig.emplace(std::move(key), sig.size());
      next_block[q] = it->second;
    }
    block = std::move(next_block);
    if (sig.size() == blocks) break;
    blocks = sig.size();
  }

  // Canonical breadth-first renumbering of blocks.
  std::vector<State> rep(blocks, Dfa::kNone);
  for (State q = 0; q < n; ++q)
    if (live[q] && rep[block[q]] == Dfa::kNone) rep[block[q]] = q;
  std::vector<State> number(blocks, Dfa::kNone);
  std::vector<std::size_t> order;
  number[block[a.start()]] = 0;
  order.push_back(block[a.start()]);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const State q = rep[order[i]];
    for (SymbolId s = 0; s < k; ++s) {
      const State r = step(q, s);
      if (r == Dfa::kNone || number[block[r]] != Dfa::kNone) continue;
      number[block[r]] = static_cast<State>(order.size());
      order.push_back(block[r]);
    }
  }
  Dfa out(a.alphabet(), order.size());
  out.set_start(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const State q = rep[order[i]];
    out.set_accepting(static_cast<State>(i), a.accepting(q));
    for (SymbolId s = 0; s < k; ++s) {
      const State r = step(q, s);
      if (r != Dfa::kNone) out.set_transition(static_cast<State>(i), s, number[block[r]]);
    }
  }
  return out;
}

}  // namespace

Dfa determinize_trim_minimize(const Nfa& a) {
  const std::size_t k = a.alphabet().size();
  if (a.state_count() == 0) return empty_dfa(a.alphabet());
  std::map<std::vector<State>, State> index;
  std::vector<std::vector<State>> sets;
  std::vector<State> first{a.start()};
  closure(a, first);
  Dfa d(a.alphabet());
  auto intern = [&](std::vector<State> set) {
    auto it = index.find(set);
    if (it != index.end()) return it->second;
    bool acc = false;
    for (State q : set) acc = acc || a.accepting(q);
    const State id = d.add_state(acc);
    index.emplace(set, id);
    sets.push_back(std::move(set));
    return id;
  };
  d.set_start(intern(std::move(first)));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<std::vector<State>> targets(k);
    for (State q : sets[i])
      for (auto [sym, to] : a.moves(q)) targets[sym].push_back(to);
    for (SymbolId s = 0; s < k; ++s) {
      auto& t = targets[s];
      if (t.empty()) continue;
      std::sort(t.begin(), t.end());
      t.erase(std::unique(t.begin(), t.end()), t.end());
      closure(a, t);
      const State to = intern(std::move(t));
      d.set_transition(static_cast<State>(i), s, to);
    }
  }
  return trim_and_minimize(d);
}

Dfa minimize(const Dfa& a) { return trim_and_minimize(a); }

Dfa intersect(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) throw UsageError("intersection of automata over different alphabets");
  const std::size_t k = a.alphabet().size();
  std::map<std::pair<State, State>, State> index;
  std::vector<std::pair<State, State>> pairs;
  Dfa d(a.alphabet());
  auto intern = [&](std::pair<State, State> p) {
    auto it = index.find(p);
    if (it != index.end()) return it->second;
    const State id = d.add_state(a.accepting(p.first) && b.accepting(p.second));
    index.emplace(p, id);
    pairs.push_back(p);
    return id;
  };
  d.set_start(intern({a.start(), b.start()}));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    for (SymbolId s = 0; s < k; ++s) {
      const State x = a.next(p, s), y = b.next(q, s);
      if (x == Dfa::kNone || y == Dfa::kNone) continue;
      d.set_transition(static_cast<State>(i), s, intern({x, y}));
    }
  }
  return trim_and_minimize(d);
}

Dfa hom_preimage(const Dfa& a, const Homomorphism& h) {
  if (!(h.target() == a.alphabet())) throw UsageError("homomorphism target is not the automaton's alphabet");
  Dfa d(h.source(), a.state_count());
  if (a.state_count() == 0) return d;
  d.set_start(a.start());
  for (State q = 0; q < a.state_count(); ++q) {
    d.set_accepting(q, a.accepting(q));
    for (SymbolId c = 0; c < h.source().size(); ++c) {
      const State r = a.run(q, h.image(c));
      if (r != Dfa::kNone) d.set_transition(q, c, r);
    }
  }
  return d;
}

bool identical(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet()) || a.state_count() != b.state_count() || a.start() != b.start())
    return false;
  for (State q = 0; q < a.state_count(); ++q) {
    if (a.accepting(q) != b.accepting(q)) return false;
    for (SymbolId s = 0; s < a.alphabet().size(); ++s)
      if (a.next(q, s) != b.next(q, s)) return false;
  }
  return true;
}

Dfa with_alphabet(const Dfa& a, const Alphabet& alphabet) {
  if (alphabet.size() != a.alphabet().size()) throw UsageError("renamed alphabet has a different size");
  Dfa d(alphabet);
  for (State q = 0; q < a.state_count(); ++q)
    d.add_state(a.accepting(q), a.has_state_names() ? a.state_name(q) : std::string());
  if (a.state_count() == 0) return d;
  d.set_start(a.start());
  for (State q = 0; q < a.state_count(); ++q)
    for (SymbolId s = 0; s < alphabet.size(); ++s)
      if (a.next(q, s) != Dfa::kNone) d.set_transition(q, s, a.next(q, s));
  return d;
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) throw UsageError("comparing automata over different alphabets");
  return identical(minimize(a), minimize(b));
}

}  // namespace eqhilb
