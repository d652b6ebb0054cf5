#include "doctest.h"
#include "eqhilb/automata/count.hpp"
#include "eqhilb/exactalg/parse.hpp"
#include "eqhilb/exactalg/series.hpp"
#include "eqhilb/genfun/genfun.hpp"
#include "oracles.hpp"

using namespace eqhilb;

namespace {

const VarSet kTS{"t", "s"};
RatFun R(const char* text) { return parse_ratfun(text, kTS); }

Alphabet ta(unsigned c) {
  std::vector<Symbol> s{{"tau", SymbolClass::count_var(1)}};
  for (unsigned i = 1; i <= c; ++i) s.push_back({"a" + std::to_string(i), SymbolClass::content()});
  return Alphabet(s);
}

// The three-state automaton for nondecreasing runs of a1, a2 (figure order).
Dfa fig1() {
  Dfa d(ta(2));
  for (const char* n : {"1", "2", "3"}) d.add_state(true, n);
  d.set_transition("1", "tau", "1");
  d.set_transition("1", "a1", "2");
  d.set_transition("1", "a2", "3");
  d.set_transition("2", "a1", "2");
  d.set_transition("2", "a2", "3");
  d.set_transition("2", "tau", "1");
  d.set_transition("3", "a2", "3");
  d.set_transition("3", "tau", "1");
  return d;
}

Dfa gap_fig() {
  Dfa d(ta(2));
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

}  // namespace

TEST_CASE("transfer matrix entries follow the edge convention") {
  const auto m = transfer_matrix(fig1(), WeightFn::standard(fig1().alphabet()));
  const char* expected[3][3] = {{"1-s", "-s", "-s"}, {"-t", "1-t", "0"}, {"-t", "-t", "1-t"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m[i][j] == parse_poly(expected[i][j], kTS));
}

TEST_CASE("transfer series golden values") {
  CHECK(rat_equal(transfer_series(fig1(), WeightFn::standard(fig1().alphabet())), R("1/((1-t)^2-s)")));
  CHECK(rat_equal(transfer_series(gap_fig(), WeightFn::standard(gap_fig().alphabet())),
                  R("(t*s+1)/(-t^2*s - t*s^2 + t^2 + t*s - 2*t - s + 1)")));
  Dfa loop(ta(0), 1);
  loop.set_accepting(0);
  loop.set_transition(0, 0, 0);
  CHECK(rat_equal(transfer_series(loop, WeightFn::standard(loop.alphabet())), R("1/(1-s)")));
}

TEST_CASE("series check") {
  std::vector<unsigned> b{8, 8};
  for (const Dfa& d : {fig1(), gap_fig()}) {
    const auto rep = series_check(d, b);
    CHECK(rep.ok());
    CHECK(rep.mismatches == 0);
  }
  Dfa empty(ta(2), 1);
  const auto rep = series_check(empty, b);
  CHECK(rep.series.is_zero());
  CHECK(rep.ok());
  for (const auto& v : rep.counted.data()) CHECK(v == 0);
}

TEST_CASE("weights re-index the series") {
  // rho(tau) = s^2, rho(a_i) = t*s: the coefficient of t^d s^(2m+d) equals
  // the standard count at (d, m).
  const Dfa d = gap_fig();
  const VarSet v = kTS;
  std::vector<MPoly> w{MPoly::variable(v, 1, 2), MPoly::variable(v, 0) * MPoly::variable(v, 1),
                       MPoly::variable(v, 0) * MPoly::variable(v, 1)};
  const RatFun f = transfer_series(d, WeightFn(d.alphabet(), v, w));
  std::vector<unsigned> bounds{4, 12};
  const auto table = series_expand(f, bounds);
  const auto counts = dp_count(d, 4, 4);
  for (unsigned dd = 0; dd <= 4; ++dd)
    for (unsigned n = 0; n <= 12; ++n) {
      if (n < dd || (n - dd) % 2 != 0)
        CHECK(table.at({dd, n}) == 0);
      else if ((n - dd) / 2 <= 4)
        CHECK(table.at({dd, n}) == counts.at({dd, (n - dd) / 2}));
    }
}

TEST_CASE("weights must be monomials over one variable set") {
  const Dfa d = gap_fig();
  std::vector<MPoly> w{parse_poly("s+t", kTS), parse_poly("t", kTS), parse_poly("t", kTS)};
  CHECK_THROWS(WeightFn(d.alphabet(), kTS, w));
}
