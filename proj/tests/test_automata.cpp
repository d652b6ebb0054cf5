#include <set>

#include "doctest.h"
#include "eqhilb/automata/count.hpp"
#include "eqhilb/automata/dot.hpp"
#include "eqhilb/automata/ops.hpp"
#include "eqhilb/automata/regex.hpp"
#include "eqhilb/errors.hpp"
#include "oracles.hpp"

using namespace eqhilb;

namespace {

Alphabet ta(unsigned first, unsigned last) {
  std::vector<Symbol> s{{"tau", SymbolClass::count_var(1)}};
  for (unsigned i = first; i <= last; ++i) s.push_back({"a" + std::to_string(i), SymbolClass::content()});
  return Alphabet(s);
}

Dfa build(const Regex& r, const Alphabet& a) { return determinize_trim_minimize(regex_build(r, a)); }

Dfa sigma_star(const Alphabet& a) {
  std::vector<std::string> names;
  for (const auto& s : a.symbols()) names.push_back(s.name);
  return build(Regex::star(Regex::any_of(names)), a);
}

// Hand transcription of the three-state gap figure, independent of langlib.
Dfa gap_fig() {
  Dfa d(ta(1, 2));
  for (const char* n : {"1", "2", "3"}) d.add_state(true, n);
  d.set_transition("1", "tau", "1");
  d.set_transition("1", "a1", "1");
  d.set_transition("1", "a2", "2");
  d.set_transition("2", "a2", "2");
  d.set_transition("2", "tau", "3");
  d.set_transition("3", "a1", "1");
  d.set_transition("3", "tau", "1");
  return d;
}

Regex window_regex(unsigned c) {
  std::vector<Regex> steps{Regex::symbol("tau"), Regex::symbol("a0")};
  std::vector<Regex> last{Regex::epsilon(), Regex::symbol("a0")};
  for (unsigned i = 1; i <= c; ++i) {
    std::vector<Regex> w{Regex::symbol("a" + std::to_string(i))};
    for (unsigned k = 0; k < i; ++k) w.push_back(Regex::symbol("tau"));
    steps.push_back(Regex::cat(w));
    last.push_back(Regex::symbol("a" + std::to_string(i)));
  }
  return Regex::cat({Regex::star(Regex::alt(steps)), Regex::alt(last), Regex::star(Regex::symbol("tau"))});
}

WordPredicate wrap(bool (*f)(const std::vector<int>&)) {
  return [f](std::span<const SymbolId> w) { return f(std::vector<int>(w.begin(), w.end())); };
}

}  // namespace

TEST_CASE("alphabet rules") {
  CHECK_THROWS_AS(Alphabet({{"x", SymbolClass::content()}, {"x", SymbolClass::content()}}), UsageError);
  const Alphabet a = ta(1, 2);
  CHECK(a.count_classes() == 1);
  CHECK(a.spell(a.parse_word("a2 tau a1")) == "a2 tau a1");
  CHECK_THROWS_AS(a.parse_word("a3"), UsageError);
}

TEST_CASE("regex basics") {
  const Alphabet a = ta(1, 1);
  const Dfa star = build(Regex::star(Regex::symbol("tau")), a);
  CHECK(star.state_count() == 1);
  CHECK(accepts(star, Word{}));
  CHECK(accepts(star, Word{0, 0, 0}));
  CHECK_FALSE(accepts(star, Word{1}));

  const Dfa eps = build(Regex::epsilon(), a);
  CHECK(eps.state_count() == 1);
  CHECK(eps.accepting(eps.start()));
  CHECK(eps.transition_count() == 0);

  const Dfa twice = build(Regex::alt({Regex::star(Regex::symbol("tau")), Regex::star(Regex::symbol("tau"))}), a);
  CHECK(identical(twice, star));
  CHECK_THROWS_AS(regex_build(Regex::symbol("zz"), a), UsageError);
}

TEST_CASE("determinized window-squares regex matches the hand-coded automaton") {
  const unsigned c = 2;
  const Alphabet a = ta(0, c);
  const Dfa from_regex = build(window_regex(c), a);
  Dfa fig(a);
  for (unsigned i = 0; i <= c; ++i)
    for (unsigned j = 0; j <= i; ++j) fig.add_state(true, std::to_string(i) + std::to_string(j));
  for (unsigned i = 0; i <= c; ++i) {
    const std::string ii = std::to_string(i) + std::to_string(i);
    fig.set_transition(ii, "tau", ii);
    for (unsigned j = 0; j < i; ++j)
      fig.set_transition(std::to_string(i) + std::to_string(j), "tau", std::to_string(i) + std::to_string(j + 1));
    for (unsigned j = 0; j <= c; ++j) fig.set_transition(ii, "a" + std::to_string(j), std::to_string(j) + "0");
  }
  // Word agreement to length 10, then structural equivalence.
  const auto rep = check_agreement(from_regex, [&](std::span<const SymbolId> w) { return accepts(fig, w); }, 10);
  CHECK(rep.agree());
  CHECK(rep.words_checked == 1398101);  // sum of 4^k, k <= 10
  CHECK(equivalent(from_regex, fig));
  CHECK(check_agreement(from_regex, wrap(oracle::window_squares_word), 10).agree());
}

TEST_CASE("intersection") {
  const Dfa g = gap_fig();
  CHECK(equivalent(intersect(g, sigma_star(g.alphabet())), g));
  const Dfa none = build(Regex::empty(), g.alphabet());
  const Dfa meet = intersect(g, none);
  CHECK(meet.state_count() == 1);
  CHECK_FALSE(meet.accepting(0));
  const Alphabet other = ta(1, 3);
  CHECK_THROWS_AS(intersect(g, sigma_star(other)), UsageError);
}

TEST_CASE("inverse homomorphism") {
  const Dfa g = gap_fig();
  const Alphabet& a = g.alphabet();
  const Homomorphism id(a, a, std::vector<Word>{{0}, {1}, {2}});
  CHECK(equivalent(hom_preimage(g, id), g));

  const Alphabet c({{"x", SymbolClass::content()}, {"y", SymbolClass::count_var(1)}});
  const Homomorphism erase(c, a, std::vector<Word>{{}, {}});
  CHECK(equivalent(hom_preimage(g, erase), sigma_star(c)));
  Dfa nonempty = build(Regex::cat({Regex::symbol("a1"), Regex::star(Regex::symbol("a1"))}), a);
  const Dfa pre = minimize(hom_preimage(nonempty, erase));
  CHECK_FALSE(pre.accepting(pre.start()));
  CHECK(pre.transition_count() == 0);

  // x -> a2 tau, y -> a2: words whose image passes through the figure.
  const Homomorphism h(c, a, {{"x", {"a2", "tau"}}, {"y", {"a2"}}});
  const Dfa p = hom_preimage(g, h);
  oracle::for_each_word(2, 6, [&](const std::vector<int>& w) {
    const Word ww(w.begin(), w.end());
    CHECK(accepts(p, ww) == accepts(g, h.apply(ww)));
  });
}

TEST_CASE("counting the gap figure") {
  const Dfa g = gap_fig();
  const auto t = dp_count(g, 8, 8);
  for (unsigned d = 0; d <= 8; ++d) CHECK(t.at({d, 0}) == d + 1);
  CHECK(t.at({2, 1}) == 9);
  for (unsigned d = 0; d <= 4; ++d)
    for (unsigned m = 0; m <= 4; ++m) CHECK(t.at({d, m}) == oracle::brute_count(2, d, m, oracle::gap_word));
}

TEST_CASE("membership on the gap figure") {
  const Dfa g = gap_fig();
  const Alphabet& a = g.alphabet();
  CHECK_FALSE(accepts(g, a.parse_word("a2 tau a2")));
  CHECK(accepts(g, a.parse_word("a1 a2")));
  CHECK(accepts(g, Word{}) == g.accepting(g.start()));
  CHECK(check_agreement(g, wrap(oracle::gap_word), 10).agree());
}

TEST_CASE("window-squares counts") {
  const Dfa w1 = build(window_regex(1), ta(0, 1));
  CHECK(dp_count(w1, 4, 4).at({2, 0}) == 2);
  const Dfa w2 = build(window_regex(2), ta(0, 2));
  CHECK(dp_count(w2, 4, 4).at({1, 0}) == 3);
}

TEST_CASE("enumeration size equals the count") {
  const Dfa g = gap_fig();
  const auto t = dp_count(g, 4, 4);
  for (unsigned d = 0; d <= 4; ++d)
    for (unsigned m = 0; m <= 4; ++m) {
      const auto words = enumerate_words(g, Profile{d, {m}});
      CHECK(t.at({d, m}) == words.size());
      std::set<Word> distinct(words.begin(), words.end());
      CHECK(distinct.size() == words.size());
      for (const auto& w : words) CHECK(oracle::gap_word(std::vector<int>(w.begin(), w.end())));
    }
}

TEST_CASE("determinization preserves counts; intersection counts are bounded") {
  const Alphabet a = ta(0, 2);
  const Nfa n = regex_build(window_regex(2), a);
  const Dfa d1 = determinize_trim_minimize(n);
  const Dfa d2 = determinize_trim_minimize(nfa_union(n, n));
  CHECK(dp_count(d1, 6, 6) == dp_count(d2, 6, 6));

  const Dfa g = gap_fig();
  const Dfa p = minimize(Dfa(g));
  const Dfa poly = build(Regex::star(Regex::any_of({"tau", "a1"})), g.alphabet());
  const auto both = dp_count(intersect(g, poly), 6, 6), lg = dp_count(g, 6, 6), lp = dp_count(poly, 6, 6);
  for (std::size_t i = 0; i < both.size(); ++i) {
    CHECK(both.data()[i] <= lg.data()[i]);
    CHECK(both.data()[i] <= lp.data()[i]);
  }
  CHECK(dp_count(p, 6, 6) == lg);
}

TEST_CASE("two-class counting") {
  const Alphabet a({{"tau1", SymbolClass::count_var(1)}, {"tau2", SymbolClass::count_var(2)}, {"g", SymbolClass::content()}});
  const Dfa d = build(Regex::star(Regex::cat({Regex::star(Regex::symbol("tau1")), Regex::star(Regex::symbol("tau2")),
                                              Regex::symbol("g")})),
                      a);
  const auto t = dp_count(d, 4, std::vector<unsigned>{4, 4});
  CHECK(t.axes() == std::vector<std::string>{"d", "m", "n"});
  // d g-letters with m tau1 and n tau2 split into d blocks: C(m+d-1, d-1) C(n+d-1, d-1).
  for (unsigned dd = 1; dd <= 4; ++dd)
    for (unsigned m = 0; m <= 4; ++m)
      for (unsigned n = 0; n <= 4; ++n)
        CHECK(t.at({dd, m, n}) == oracle::choose(m + dd - 1, dd - 1) * oracle::choose(n + dd - 1, dd - 1));
}

TEST_CASE("dot export") {
  const std::string dot = to_dot(gap_fig(), "gap");
  CHECK(dot.find("\"1\" [shape=doublecircle]") != std::string::npos);
  CHECK(dot.find("\"1\" -> \"2\" [label=\"a2\"]") != std::string::npos);
  CHECK(dot.find("\"2\" -> \"3\" [label=\"tau\"]") != std::string::npos);
  CHECK(dot.find("\"1\" -> \"1\" [label=\"tau, a1\"]") != std::string::npos);
  CHECK(dot.find("__start -> \"1\"") != std::string::npos);
  CHECK(to_dot(gap_fig(), "gap") == dot);
}
