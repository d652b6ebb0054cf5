#include "eqhilb/monoracle/monoracle.hpp"

#include <algorithm>
#include <map>

#include "eqhilb/errors.hpp"

namespace eqhilb {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(int index, unsigned power) {
  if (index < 1) throw UsageError("variable index must be positive");
  Monomial m;
  if (power > 0) m.terms_.push_back({index, power});
  return m;
}

Monomial Monomial::from_indices(const std::vector<int>& indices) {
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  Monomial m;
  for (int i : sorted) {
    if (i < 1) throw UsageError("variable index must be positive");
    if (!m.terms_.empty() && m.terms_.back().first == i)
      ++m.terms_.back().second;
    else
      m.terms_.push_back({i, 1});
  }
  return m;
}

unsigned Monomial::exponent(int index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair<int, unsigned>{index, 0});
  return it != terms_.end() && it->first == index ? it->second : 0;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [i, e] : terms_) d += e;
  return d;
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  for (const auto& [i, e] : terms_) out.insert(out.end(), e, i);
  return out;
}

int Monomial::max_index() const { return terms_.empty() ? 0 : terms_.back().first; }

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [i, e] : terms_)
    if (other.exponent(i) < e) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.terms_.push_back(*b++);
    } else {
      out.terms_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw ArithmeticError("monomial division is not exact");
  Monomial out;
  for (const auto& [i, e] : terms_) {
    const unsigned f = other.exponent(i);
    if (e > f) out.terms_.push_back({i, e - f});
  }
  return out;
}

Monomial Monomial::shifted(int by) const {
  Monomial out = *this;
  for (auto& t : out.terms_) {
    t.first += by;
    if (t.first < 1) throw UsageError("shift leaves the positive indices");
  }
  return out;
}

std::string Monomial::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "1";
  std::string out;
  for (const auto& [i, e] : terms_) {
    if (!out.empty()) out += '*';
    out += prefix + std::to_string(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

// --------------------------------------------------------- GeneratorFamily

GeneratorFamily GeneratorFamily::poly_ring(unsigned c) {
  if (c < 1) throw UsageError("poly-ring family needs c >= 1");
  return {Kind::PolyRing, c};
}

std::string GeneratorFamily::name() const {
  switch (kind_) {
    case Kind::WindowSquares: return "window-squares(" + std::to_string(c_) + ")";
    case Kind::Gap: return "gap";
    case Kind::PolyRing: return "poly-ring(" + std::to_string(c_) + ")";
  }
  return {};
}

Monomial GeneratorFamily::generator(int i, unsigned offset) const {
  if (i < 1 || offset < first_offset() || offset > last_offset())
    throw UsageError("no generator (" + std::to_string(i) + "," + std::to_string(offset) + ") in " + name());
  if (kind_ == Kind::PolyRing) return Monomial::variable(static_cast<int>(c_) * (i - 1) + static_cast<int>(offset));
  return Monomial::variable(i) * Monomial::variable(i + static_cast<int>(offset));
}

std::vector<Monomial> GeneratorFamily::generators(int n) const {
  std::vector<Monomial> out;
  for (int i = 1; i <= n; ++i)
    for (unsigned j = first_offset(); j <= last_offset(); ++j) out.push_back(generator(i, j));
  return out;
}

const char* convention_name(Convention c) { return c == Convention::Algebra ? "algebra" : "string-bounded"; }

Convention parse_convention(const std::string& text) {
  if (text == "algebra") return Convention::Algebra;
  if (text == "string-bounded" || text == "string") return Convention::StringBounded;
  throw UsageError("unknown convention '" + text + "' (expected algebra or string-bounded)");
}

// ------------------------------------------------------------ presentations

std::string to_string(const StringPresentation& p, const GeneratorFamily& f) {
  std::string out;
  for (const auto& g : p) {
    const int second = f.kind() == GeneratorFamily::Kind::PolyRing ? g.start : g.start + static_cast<int>(g.offset);
    const int first = f.kind() == GeneratorFamily::Kind::PolyRing ? static_cast<int>(g.offset) : g.start;
    out += "(" + std::to_string(first) + "," + std::to_string(second) + ")";
  }
  return out;
}

Monomial realize(const StringPresentation& p, const GeneratorFamily& f) {
  Monomial m;
  for (const auto& g : p) m = m * f.generator(g.start, g.offset);
  return m;
}

namespace {

std::optional<StringPresentation> window_squares_form(const Monomial& m, unsigned c) {
  const auto idx = m.indices();
  if (idx.size() % 2 != 0) return std::nullopt;
  StringPresentation out;
  for (std::size_t k = 0; k < idx.size(); k += 2) {
    const unsigned gap = static_cast<unsigned>(idx[k + 1] - idx[k]);
    if (gap > c) return std::nullopt;
    out.push_back({idx[k], gap});
  }
  return out;
}

// Some factorization into x_i x_(i+1), x_i x_(i+2): the smallest index
// must be the lower end of its generator.
bool gap_factor(std::vector<int>& rest, StringPresentation& out) {
  if (rest.empty()) return true;
  const int low = rest.front();
  for (unsigned j = 1; j <= 2; ++j) {
    auto it = std::lower_bound(rest.begin() + 1, rest.end(), low + static_cast<int>(j));
    if (it == rest.end() || *it != low + static_cast<int>(j)) continue;
    std::vector<int> next(rest.begin() + 1, rest.end());
    next.erase(next.begin() + (it - rest.begin() - 1));
    out.push_back({low, j});
    if (gap_factor(next, out)) return true;
    out.pop_back();
  }
  return false;
}

std::optional<StringPresentation> gap_form(const Monomial& m) {
  auto idx = m.indices();
  if (idx.size() % 2 != 0) return std::nullopt;
  StringPresentation start;
  if (!gap_factor(idx, start)) return std::nullopt;

  // Run-length form: (i, j) -> exponent, ordered by (i, j).
  std::map<GeneratorRef, unsigned> runs;
  for (const auto& g : start) ++runs[g];
  for (;;) {
    // Leftmost adjacent pair of runs (i,2), (i+1,2).
    auto hit = runs.end();
    for (auto it = runs.begin(); it != runs.end(); ++it) {
      auto nx = std::next(it);
      if (nx == runs.end()) break;
      if (it->first.offset == 2 && nx->first.offset == 2 && nx->first.start == it->first.start + 1) {
        hit = it;
        break;
      }
    }
    if (hit == runs.end()) break;
    const int i = hit->first.start;
    const unsigned lower = hit->second;
    const unsigned upper = runs[{i + 1, 2}];
    const unsigned moved = std::min(lower, upper);
    // (x_i x_(i+2))^e (x_(i+1) x_(i+3))^e = (x_i x_(i+1))^e (x_(i+2) x_(i+3))^e
    runs[{i, 1}] += moved;
    runs[{i + 2, 1}] += moved;
    if (lower == moved) runs.erase({i, 2}); else runs[{i, 2}] = lower - moved;
    if (upper == moved) runs.erase({i + 1, 2}); else runs[{i + 1, 2}] = upper - moved;
  }
  StringPresentation out;
  for (const auto& [g, e] : runs) out.insert(out.end(), e, g);
  return out;
}

std::optional<StringPresentation> poly_ring_form(const Monomial& m, unsigned c) {
  StringPresentation out;
  for (int key : m.indices()) {
    const int cc = static_cast<int>(c);
    out.push_back({(key - 1) / cc + 1, static_cast<unsigned>((key - 1) % cc + 1)});
  }
  return out;
}

int last_start(const StringPresentation& p) {
  int s = 0;
  for (const auto& g : p) s = std::max(s, g.start);
  return s;
}

// Level d of the BFS is the set of distinct products of d generators.
std::vector<std::set<Monomial>> algebra_levels(const GeneratorFamily& f, int n, unsigned dmax) {
  const auto gens = f.generators(n);
  std::vector<std::set<Monomial>> levels(dmax + 1);
  levels[0].insert(Monomial());
  for (unsigned d = 1; d <= dmax; ++d)
    for (const auto& m : levels[d - 1])
      for (const auto& g : gens) levels[d].insert(m * g);
  return levels;
}

bool string_bounded(const Monomial& m, const GeneratorFamily& f, int n) {
  const auto p = normal_form(m, f);
  return p && last_start(*p) <= n;
}

std::size_t select_count(const std::set<Monomial>& level, const GeneratorFamily& f, int n, Convention conv) {
  if (conv == Convention::Algebra) return level.size();
  return static_cast<std::size_t>(
      std::count_if(level.begin(), level.end(), [&](const Monomial& m) { return string_bounded(m, f, n); }));
}

}  // namespace

std::optional<StringPresentation> normal_form(const Monomial& m, const GeneratorFamily& f) {
  switch (f.kind()) {
    case GeneratorFamily::Kind::WindowSquares: return window_squares_form(m, f.c());
    case GeneratorFamily::Kind::Gap: return gap_form(m);
    case GeneratorFamily::Kind::PolyRing: return poly_ring_form(m, f.c());
  }
  return std::nullopt;
}

std::set<Monomial> enumerate_monomials(const GeneratorFamily& f, int n, unsigned d, Convention conv) {
  if (n < 1) throw UsageError("window size must be >= 1");
  auto levels = algebra_levels(f, n, d);
  std::set<Monomial> out = std::move(levels[d]);
  if (conv == Convention::StringBounded)
    std::erase_if(out, [&](const Monomial& m) { return !string_bounded(m, f, n); });
  return out;
}

CountTable hilbert_counts(const GeneratorFamily& f, unsigned nmax, unsigned dmax, Convention conv) {
  CountTable table({"d", "n"}, {dmax, nmax});
  for (unsigned n = 1; n <= nmax; ++n) {
    const auto levels = algebra_levels(f, static_cast<int>(n), dmax);
    for (unsigned d = 0; d <= dmax; ++d)
      table.at({d, n}) = static_cast<unsigned long>(select_count(levels[d], f, static_cast<int>(n), conv));
  }
  return table;
}

namespace {
void check_pair(const CountTable& a, const CountTable& b) {
  if (a.rank() != 2 || b.rank() != 2) throw UsageError("factor tables must have axes (d, n)");
  if (a.bounds()[0] != b.bounds()[0]) throw UsageError("factor tables must share the d range");
}
}  // namespace

CountTable segre_counts(const CountTable& a, const CountTable& b) {
  check_pair(a, b);
  const unsigned dmax = a.bounds()[0], mmax = a.bounds()[1], nmax = b.bounds()[1];
  CountTable out({"d", "m", "n"}, {dmax, mmax, nmax});
  for (unsigned d = 0; d <= dmax; ++d)
    for (unsigned m = 0; m <= mmax; ++m)
      for (unsigned n = 0; n <= nmax; ++n) out.at({d, m, n}) = a.at({d, m}) * b.at({d, n});
  return out;
}

CountTable tensor_counts(const CountTable& a, const CountTable& b) {
  check_pair(a, b);
  const unsigned dmax = a.bounds()[0], mmax = a.bounds()[1], nmax = b.bounds()[1];
  CountTable out({"d", "m", "n"}, {dmax, mmax, nmax});
  for (unsigned d = 0; d <= dmax; ++d)
    for (unsigned m = 0; m <= mmax; ++m)
      for (unsigned n = 0; n <= nmax; ++n) {
        Integer sum = 0;
        for (unsigned d1 = 0; d1 <= d; ++d1) sum += a.at({d1, m}) * b.at({d - d1, n});
        out.at({d, m, n}) = sum;
      }
  return out;
}

// ------------------------------------------------------------ word maps

namespace {
// Content letters are named a<offset>.
unsigned letter_offset(const Symbol& s) {
  if (s.name.size() < 2 || s.name[0] != 'a') throw UsageError("cannot map letter '" + s.name + "' to a generator");
  return static_cast<unsigned>(std::stoul(s.name.substr(1)));
}
}  // namespace

Monomial word_to_monomial(std::span<const SymbolId> w, const Alphabet& alphabet, const GeneratorFamily& f) {
  Monomial m;
  for (std::size_t k = w.size(); k-- > 0;) {
    const Symbol& s = alphabet[w[k]];
    if (s.cls.is_content())
      m = f.generator(1, letter_offset(s)) * m;
    else
      m = m.shifted(f.shift_step());
  }
  return m;
}

WordMonomialMap word_monomial_maps(const Language& lang, const GeneratorFamily& f, int n, unsigned d,
                                   Convention conv) {
  if (n < 1) throw UsageError("window size must be >= 1");
  if (lang.alphabet.count_classes() != 1) throw UsageError("word maps need a single-class language");
  WordMonomialMap out;
  const auto target = enumerate_monomials(f, n, d, conv);
  out.target_size = target.size();
  std::set<Monomial> image;
  out.into = true;
  for (auto& w : enumerate_words(lang.dfa, Profile{d, {static_cast<unsigned>(n - 1)}})) {
    Monomial m = word_to_monomial(w, lang.alphabet, f);
    if (!target.contains(m)) out.into = false;
    image.insert(m);
    out.pairs.emplace_back(std::move(w), std::move(m));
  }
  out.injective = image.size() == out.pairs.size();
  out.surjective = std::includes(image.begin(), image.end(), target.begin(), target.end());
  return out;
}

// ------------------------------------------------------------ comparison

std::size_t CompareReport::mismatches() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return !c.equal(); }));
}

CompareReport compare_report(const Language& lang, const GeneratorFamily& f, Convention conv, unsigned dmax,
                             unsigned nmax) {
  if (nmax < 1) throw UsageError("compare needs n >= 1");
  const CountTable words = dp_count(lang.dfa, dmax, nmax - 1);
  const CountTable mons = hilbert_counts(f, nmax, dmax, conv);
  CompareReport report;
  for (unsigned d = 0; d <= dmax; ++d)
    for (unsigned n = 1; n <= nmax; ++n) report.cells.push_back({d, n, words.at({d, n - 1}), mons.at({d, n})});
  return report;
}

}  // namespace eqhilb
