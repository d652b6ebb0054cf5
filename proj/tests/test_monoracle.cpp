#include <doctest.h>

#include <random>
#include <sstream>

#include "eqhilb/errors.hpp"
#include "eqhilb/monoracle/monoracle.hpp"
#include "oracles.hpp"

using namespace eqhilb;

namespace {
Monomial mon(std::initializer_list<int> idx) { return Monomial::from_indices(idx); }
}  // namespace

TEST_CASE("monomial arithmetic") {
  const Monomial a = mon({1, 2, 2});
  const Monomial b = mon({2, 4});
  CHECK((a * b) == mon({1, 2, 2, 2, 4}));
  CHECK((a * b).degree() == 5);
  CHECK((a * b).exponent(2) == 3);
  CHECK(((a * b) / b) == a);
  CHECK_THROWS_AS(a / b, ArithmeticError);
  CHECK(a.shifted(2) == mon({3, 4, 4}));
  CHECK(a.to_string() == "x1*x2^2");
  CHECK(Monomial().to_string() == "1");
}

TEST_CASE("enumerate: degree zero is the unit") {
  for (const auto& f : {GeneratorFamily::gap(), GeneratorFamily::window_squares(2), GeneratorFamily::poly_ring(2)})
    for (auto conv : {Convention::Algebra, Convention::StringBounded}) {
      const auto s = enumerate_monomials(f, 3, 0, conv);
      REQUIRE(s.size() == 1);
      CHECK(s.begin()->is_one());
    }
}

TEST_CASE("gap family at n = 2, d = 2 under both conventions") {
  const auto f = GeneratorFamily::gap();
  const auto algebra = enumerate_monomials(f, 2, 2, Convention::Algebra);
  const auto bounded = enumerate_monomials(f, 2, 2, Convention::StringBounded);
  CHECK(algebra.size() == 10);
  CHECK(bounded.size() == 9);
  CHECK(algebra.contains(mon({1, 2, 3, 4})));
  CHECK_FALSE(bounded.contains(mon({1, 2, 3, 4})));
}

TEST_CASE("window squares (1) at n = 2, d = 2") {
  CHECK(enumerate_monomials(GeneratorFamily::window_squares(1), 2, 2, Convention::StringBounded).size() == 8);
  // x1x2 * x1x2 has sorted pairing (1,1)(2,2), whose last pair starts past n = 1
  CHECK(enumerate_monomials(GeneratorFamily::window_squares(1), 1, 2, Convention::StringBounded).size() == 2);
  CHECK(enumerate_monomials(GeneratorFamily::window_squares(1), 1, 2, Convention::Algebra).size() == 3);
}

TEST_CASE("poly ring counts match stars and bars") {
  for (unsigned c = 1; c <= 3; ++c) {
    const auto t = hilbert_counts(GeneratorFamily::poly_ring(c), 4, 4, Convention::Algebra);
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned d = 0; d <= 4; ++d) CHECK(t.at({d, n}) == oracle::choose(c * n + d - 1, d));
    CHECK(t == hilbert_counts(GeneratorFamily::poly_ring(c), 4, 4, Convention::StringBounded));
  }
}

TEST_CASE("normal forms: examples") {
  const auto ws2 = GeneratorFamily::window_squares(2);
  const auto p = normal_form(mon({1, 2}) * mon({1, 3}) * mon({3, 3}), ws2);
  REQUIRE(p);
  CHECK(to_string(*p, ws2) == "(1,1)(2,3)(3,3)");

  const auto gap = GeneratorFamily::gap();
  const auto q = normal_form(mon({1, 3}) * mon({2, 4}), gap);
  REQUIRE(q);
  CHECK(to_string(*q, gap) == "(1,2)(3,4)");

  CHECK_FALSE(normal_form(mon({1}), ws2));
  CHECK_FALSE(normal_form(mon({1}), gap));
  CHECK_FALSE(normal_form(mon({1, 4}), gap));
  CHECK_FALSE(normal_form(mon({1, 5}), ws2));
}

namespace {
// Conditions (a) to (d) on a gap-family string.
bool gap_canonical(const StringPresentation& p) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k].offset < 1 || p[k].offset > 2) return false;
    if (k + 1 == p.size()) break;
    const auto& x = p[k];
    const auto& y = p[k + 1];
    if (x.start > y.start) return false;
    if (x.start == y.start && x.offset > y.offset) return false;
    if (y.start == x.start + 1 && x.offset == 2 && y.offset == 2) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("gap normal form: canonical, preserves the monomial, independent of the factorization") {
  const auto f = GeneratorFamily::gap();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned d = 1 + rng() % 7;
    StringPresentation s;
    for (unsigned k = 0; k < d; ++k) s.push_back({1 + static_cast<int>(rng() % 5), 1 + static_cast<unsigned>(rng() % 2)});
    const Monomial m = realize(s, f);
    const auto p = normal_form(m, f);
    REQUIRE(p);
    CHECK(gap_canonical(*p));
    CHECK(realize(*p, f) == m);
    CHECK(normal_form(realize(*p, f), f) == p);
    // a shuffled copy of the same factorization lands on the same form
    std::shuffle(s.begin(), s.end(), rng);
    CHECK(normal_form(realize(s, f), f) == p);
  }
}

namespace {
// Number of strings satisfying (a) to (d) with d entries and starts <= n.
std::size_t canonical_gap_strings(int n, unsigned d) {
  std::size_t strings = 0;
  StringPresentation cur;
  std::function<void()> rec = [&] {
    if (cur.size() == d) {
      strings += gap_canonical(cur);
      return;
    }
    for (int i = 1; i <= n; ++i)
      for (unsigned j = 1; j <= 2; ++j) {
        if (!cur.empty() && GeneratorRef{i, j} < cur.back()) continue;
        cur.push_back({i, j});
        rec();
        cur.pop_back();
      }
  };
  rec();
  return strings;
}
}  // namespace

TEST_CASE("canonical gap strings match monomials only up to d = 2") {
  const auto f = GeneratorFamily::gap();
  for (int n = 1; n <= 4; ++n)
    for (unsigned d = 0; d <= 2; ++d)
      CHECK(canonical_gap_strings(n, d) == enumerate_monomials(f, n, d, Convention::StringBounded).size());
  CHECK(canonical_gap_strings(2, 3) == 17);
  CHECK(enumerate_monomials(f, 2, 3, Convention::StringBounded).size() == 16);

  // two strings, both satisfying (a) to (d), for the same monomial
  const StringPresentation first{{1, 1}, {2, 1}, {3, 1}};
  const StringPresentation second{{1, 2}, {2, 1}, {2, 2}};
  CHECK(gap_canonical(first));
  CHECK(gap_canonical(second));
  CHECK(realize(first, f) == realize(second, f));
  CHECK(realize(first, f) == mon({1, 2, 2, 3, 3, 4}));
}

TEST_CASE("window-squares normal form is idempotent") {
  for (unsigned c = 0; c <= 3; ++c) {
    const auto f = GeneratorFamily::window_squares(c);
    for (const auto& m : enumerate_monomials(f, 3, 3, Convention::Algebra)) {
      const auto p = normal_form(m, f);
      REQUIRE(p);
      CHECK(realize(*p, f) == m);
      CHECK(normal_form(realize(*p, f), f) == p);
    }
  }
}

TEST_CASE("segre and tensor tables") {
  const auto a = hilbert_counts(GeneratorFamily::poly_ring(1), 3, 3, Convention::Algebra);
  const auto b = hilbert_counts(GeneratorFamily::gap(), 3, 3, Convention::StringBounded);
  const auto seg = segre_counts(a, b);
  CHECK(seg.axes() == std::vector<std::string>{"d", "m", "n"});
  for (unsigned d = 0; d <= 3; ++d)
    for (unsigned m = 0; m <= 3; ++m)
      for (unsigned n = 0; n <= 3; ++n) CHECK(seg.at({d, m, n}) == a.at({d, m}) * b.at({d, n}));

  // tensoring with the base field: everything at d = 0
  CountTable field({"d", "n"}, {3, 0});
  field.at({0, 0}) = 1;
  const auto ten = tensor_counts(a, field);
  for (unsigned d = 0; d <= 3; ++d)
    for (unsigned m = 0; m <= 3; ++m) CHECK(ten.at({d, m, 0}) == a.at({d, m}));

  const auto conv = tensor_counts(a, b);
  CHECK(conv.at({2, 1, 1}) == a.at({0, 1}) * b.at({2, 1}) + a.at({1, 1}) * b.at({1, 1}) + a.at({2, 1}) * b.at({0, 1}));
  CHECK_THROWS_AS(segre_counts(a, hilbert_counts(GeneratorFamily::gap(), 3, 2, Convention::Algebra)), UsageError);
}

TEST_CASE("word to monomial map") {
  const auto lang = lang_window_squares(2);
  const auto f = GeneratorFamily::window_squares(2);
  auto m = [&](const char* w) { return word_to_monomial(lang.alphabet.parse_word(w), lang.alphabet, f); };
  CHECK(m("a1 tau a0 a2 tau tau") == mon({1, 2, 2, 2, 2, 4}));
  CHECK(m("") == Monomial());
  for (unsigned k = 0; k <= 3; ++k)
    for (unsigned i = 0; i <= 2; ++i) {
      std::string w;
      for (unsigned r = 0; r < k; ++r) w += "tau ";
      w += "a" + std::to_string(i);
      CHECK(m(w.c_str()) == mon({static_cast<int>(k + 1), static_cast<int>(i + k + 1)}));
    }
}

TEST_CASE("word maps are bijections onto the string-bounded sets") {
  for (unsigned c = 0; c <= 2; ++c) {
    const auto lang = lang_window_squares(c);
    for (int n = 1; n <= 4; ++n)
      for (unsigned d = 0; d <= 3; ++d) CHECK(word_monomial_maps(lang, GeneratorFamily::window_squares(c), n, d).bijective());
  }
  const auto gap = lang_gap();
  for (int n = 1; n <= 4; ++n)
    for (unsigned d = 0; d <= 2; ++d) CHECK(word_monomial_maps(gap, GeneratorFamily::gap(), n, d).bijective());
  // from d = 3 two words reach x1x2^2x3^2x4
  const auto collide = word_monomial_maps(gap, GeneratorFamily::gap(), 3, 3);
  CHECK_FALSE(collide.injective);
  CHECK(collide.pairs.size() == 47);
  CHECK(collide.target_size == 45);
  const auto pr = lang_poly_ring(2);
  CHECK(word_monomial_maps(pr, GeneratorFamily::poly_ring(2), 3, 3).bijective());

  // under the algebra convention the map misses x1x2x3x4 at (n, d) = (2, 2)
  const auto alg = word_monomial_maps(gap, GeneratorFamily::gap(), 2, 2, Convention::Algebra);
  CHECK(alg.injective);
  CHECK(alg.into);
  CHECK_FALSE(alg.surjective);
  CHECK(alg.target_size == 10);
}

TEST_CASE("compare report") {
  const auto gap = lang_gap();
  const auto bounded = compare_report(gap, GeneratorFamily::gap(), Convention::StringBounded, 3, 4);
  for (const auto& cell : bounded.cells) {
    if (cell.d <= 2 || cell.n == 1) CHECK(cell.equal());
    else CHECK(cell.language > cell.oracle);
  }
  const auto algebra = compare_report(gap, GeneratorFamily::gap(), Convention::Algebra, 2, 2);
  bool seen = false;
  for (const auto& cell : algebra.cells)
    if (cell.d == 2 && cell.n == 2) {
      seen = true;
      CHECK(cell.language == 9);
      CHECK(cell.oracle == 10);
      CHECK_FALSE(cell.equal());
    }
  CHECK(seen);
  const auto ws1 = compare_report(lang_window_squares(1), GeneratorFamily::window_squares(1), Convention::StringBounded, 2, 2);
  CHECK(ws1.cells.back().language == 8);
  CHECK(ws1.cells.back().oracle == 8);
  CHECK(ws1.mismatches() == 0);
}
