#include "eqhilb/automata/count.hpp"

#include "eqhilb/errors.hpp"

namespace eqhilb {

Profile profile_of(const Alphabet& alphabet, std::span<const SymbolId> w) {
  Profile p;
  p.classes.assign(alphabet.count_classes(), 0);
  for (SymbolId a : w) {
    const auto& cls = alphabet[a].cls;
    if (cls.is_content()) ++p.content;
    else ++p.classes[cls.var - 1];
  }
  return p;
}

namespace {

std::vector<std::string> count_axes(std::size_t classes) {
  if (classes == 0) return {"d"};
  if (classes == 1) return {"d", "m"};
  if (classes == 2) return {"d", "m", "n"};
  std::vector<std::string> axes{"d"};
  for (std::size_t k = 1; k <= classes; ++k) axes.push_back("m" + std::to_string(k));
  return axes;
}

}  // namespace

CountTable dp_count(const Dfa& a, unsigned dmax, std::span<const unsigned> class_bounds) {
  const Alphabet& sigma = a.alphabet();
  if (class_bounds.size() != sigma.count_classes())
    throw UsageError("need one tau bound per count class (" + std::to_string(sigma.count_classes()) + ")");
  std::vector<unsigned> bounds{dmax};
  bounds.insert(bounds.end(), class_bounds.begin(), class_bounds.end());
  CountTable out(count_axes(class_bounds.size()), bounds);

  // Linear-index stride contributed by each symbol.
  std::vector<std::size_t> stride(bounds.size(), 1);
  for (std::size_t i = bounds.size() - 1; i-- > 0;) stride[i] = stride[i + 1] * (bounds[i + 1] + 1);
  std::vector<std::size_t> axis(sigma.size());
  for (SymbolId s = 0; s < sigma.size(); ++s)
    axis[s] = sigma[s].cls.is_content() ? 0 : sigma[s].cls.var;

  const std::size_t n = a.state_count();
  std::vector<std::vector<Integer>> ways(out.size(), std::vector<Integer>(n, 0));
  if (n == 0) return out;
  ways[0][a.start()] = 1;
  for (std::size_t li = 0; li < out.size(); ++li) {
    const auto idx = out.index_of(li);
    for (State q = 0; q < n; ++q) {
      const Integer& w = ways[li][q];
      if (w == 0) continue;
      if (a.accepting(q)) out.data()[li] += w;
      for (SymbolId s = 0; s < sigma.size(); ++s) {
        const State r = a.next(q, s);
        if (r == Dfa::kNone || idx[axis[s]] == bounds[axis[s]]) continue;
        ways[li + stride[axis[s]]][r] += w;
      }
    }
    ways[li].clear();
    ways[li].shrink_to_fit();
  }
  return out;
}

CountTable dp_count(const Dfa& a, unsigned dmax, unsigned class_bound) {
  std::vector<unsigned> b(a.alphabet().count_classes(), class_bound);
  return dp_count(a, dmax, b);
}

bool accepts(const Dfa& a, std::span<const SymbolId> w) {
  if (a.state_count() == 0) return false;
  const State q = a.run(a.start(), w);
  return q != Dfa::kNone && a.accepting(q);
}

std::vector<Word> enumerate_words(const Dfa& a, const Profile& p) {
  const Alphabet& sigma = a.alphabet();
  if (p.classes.size() != sigma.count_classes()) throw UsageError("profile does not match alphabet");
  std::vector<Word> out;
  if (a.state_count() == 0) return out;
  Profile left = p;
  Word w;
  std::function<void(State)> rec = [&](State q) {
    bool done = left.content == 0;
    for (unsigned c : left.classes) done = done && c == 0;
    if (done) {
      if (a.accepting(q)) out.push_back(w);
      return;
    }
    for (SymbolId s = 0; s < sigma.size(); ++s) {
      const State r = a.next(q, s);
      if (r == Dfa::kNone) continue;
      unsigned& budget = sigma[s].cls.is_content() ? left.content : left.classes[sigma[s].cls.var - 1];
      if (budget == 0) continue;
      --budget;
      w.push_back(s);
      rec(r);
      w.pop_back();
      ++budget;
    }
  };
  rec(a.start());
  return out;
}

AgreementReport check_agreement(const Dfa& a, const WordPredicate& predicate, unsigned max_length) {
  AgreementReport rep;
  const std::size_t k = a.alphabet().size();
  Word w;
  w.reserve(max_length);
  // Depth-first; the automaton state is carried along, kNone once dead.
  std::function<bool(State)> rec = [&](State q) {
    ++rep.words_checked;
    const bool by_automaton = q != Dfa::kNone && a.accepting(q);
    if (by_automaton != predicate(w)) {
      rep.counterexample = w;
      return false;
    }
    if (w.size() == max_length) return true;
    for (SymbolId s = 0; s < k; ++s) {
      w.push_back(s);
      const bool ok = rec(q == Dfa::kNone ? Dfa::kNone : a.next(q, s));
      w.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  rec(a.state_count() == 0 ? Dfa::kNone : a.start());
  return rep;
}

}  // namespace eqhilb
