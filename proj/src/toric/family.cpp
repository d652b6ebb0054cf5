#include <algorithm>
#include <functional>
#include <set>

#include "eqhilb/errors.hpp"
#include "eqhilb/toric/toric.hpp"

namespace eqhilb {

namespace {
// The total order on edges: (i,j) <= (k,l) iff i <= k and j <= l.
bool edge_le(Edge a, Edge b) { return a.lo <= b.lo && a.hi <= b.hi; }

int weight_at(const std::map<Edge, int>& w, Edge e) {
  auto it = w.find(e);
  return it == w.end() ? 0 : it->second;
}

std::string sequence_label(const std::vector<unsigned>& seq) {
  std::string out = "g(";
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + std::to_string(seq[i]);
  return out + ")";
}
}  // namespace

Binomial quadratic_generator() {
  return Binomial::from_weights({{{1, 2}, 1}, {{3, 4}, 1}, {{1, 3}, -1}, {{2, 4}, -1}});
}

Binomial seed_generator() {
  return Binomial::from_weights(
      {{{1, 2}, 1}, {{3, 5}, 2}, {{6, 7}, 1}, {{1, 3}, -1}, {{2, 3}, -1}, {{5, 6}, -1}, {{5, 7}, -1}});
}

Binomial extend_generator(const Binomial& g, unsigned step) {
  if (step != 1 && step != 2) throw UsageError("sequence entries are 1 or 2");
  const auto w = g.weights();
  const int k = g.max_vertex();
  std::map<Edge, int> out;
  for (const auto& [e, x] : w)
    if (edge_le(e, {k - 4, k - 2})) out[e] = x;
  if (step == 1) {
    out[{k - 2, k}] = 2 * weight_at(w, {k - 2, k});
    // edges at or beyond [k,k+1] copy the shifted-by-two weights, negated
    for (const auto& [e, x] : w) {
      const Edge moved{e.lo + 2, e.hi + 2};
      if (edge_le({k, k + 1}, moved)) out[moved] = -x;
    }
  } else {
    out[{k - 2, k - 1}] = 2 * weight_at(w, {k - 2, k - 1});
    out[{k - 1, k + 1}] = -2 * weight_at(w, {k - 2, k - 1});
    for (const auto& [e, x] : w) {
      const Edge moved{e.lo + 3, e.hi + 3};
      if (edge_le({k + 1, k + 2}, moved)) out[moved] = x;
    }
  }
  return Binomial::from_weights(out);
}

std::vector<GenElement> build_gen_family(unsigned max_degree) {
  if (max_degree < 2) throw UsageError("family needs max degree >= 2");
  std::vector<GenElement> out;
  out.push_back({"g2", true, {}, quadratic_generator(), 4});
  std::function<void(const Binomial&, std::vector<unsigned>&)> grow = [&](const Binomial& g, std::vector<unsigned>& seq) {
    if (g.degree() > max_degree) return;
    out.push_back({sequence_label(seq), false, seq, g, g.max_vertex()});
    for (unsigned step : {1u, 2u}) {
      seq.push_back(step);
      grow(extend_generator(g, step), seq);
      seq.pop_back();
    }
  };
  std::vector<unsigned> seq;
  grow(seed_generator(), seq);
  std::stable_sort(out.begin(), out.end(), [](const GenElement& a, const GenElement& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.sequence < b.sequence;
  });
  return out;
}

bool structure_check(const GenElement& g) {
  const auto w = g.binomial.weights();
  const int k = g.binomial.max_vertex();
  if (g.quadric) return g.binomial == quadratic_generator();
  if (k < 7) return false;
  if (weight_at(w, {1, 2}) != 1 || weight_at(w, {1, 3}) != -1 || weight_at(w, {2, 3}) != -1) return false;
  const int end = weight_at(w, {k - 2, k - 1});
  if ((end != 1 && end != -1) || weight_at(w, {k - 2, k}) != end || weight_at(w, {k - 1, k}) != -end) return false;

  std::set<Edge> triangles{{1, 2}, {1, 3}, {2, 3}, {k - 2, k - 1}, {k - 2, k}, {k - 1, k}};
  std::vector<std::pair<Edge, int>> path;
  for (const auto& [e, x] : w)
    if (!triangles.contains(e)) path.push_back({e, x});
  if (path.empty() || path.front().first != Edge{3, 5} || path.back().first != Edge{k - 4, k - 2}) return false;
  if (path.front().second != 2) return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto& [a, wa] = path[i];
    const auto& [b, wb] = path[i + 1];
    if (a.hi != b.lo) return false;  // not a path
    if (wa != -wb || (wa != 2 && wa != -2)) return false;
    if (a.hi - a.lo == 1 && b.hi - b.lo == 1) return false;
  }
  return w.size() == path.size() + triangles.size();
}

std::map<unsigned, std::size_t> degree_census(const std::vector<GenElement>& family) {
  std::map<unsigned, std::size_t> out;
  for (const auto& g : family)
    if (!g.quadric) ++out[g.degree()];
  return out;
}

std::vector<Binomial> quadric_family(unsigned c, int n) {
  if (c < 1) throw UsageError("quadric family needs c >= 1");
  const ToricMap map = ToricMap::window_squares(c);
  const int cc = static_cast<int>(c);
  std::set<Binomial> seen;
  std::vector<Binomial> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= i + cc; ++j)
      for (int k = j + 1; k <= i + cc; ++k)
        for (int l = std::max(i + 1, k - cc); l <= j + cc; ++l) {
          const Edge a{i, j}, b{std::min(k, l), std::max(k, l)}, p{i, k}, q{std::min(j, l), std::max(j, l)};
          const Binomial quad{EdgeMonomial::variable(a) * EdgeMonomial::variable(b),
                              EdgeMonomial::variable(p) * EdgeMonomial::variable(q)};
          if (quad.is_zero() || !map.fits(quad, n)) continue;
          if (seen.insert(quad.oriented()).second) out.push_back(quad);
        }
  return out;
}

unsigned degree_formula(int n) {
  switch (n % 3) {
    case 0: return static_cast<unsigned>(2 * n / 3);
    case 1: return static_cast<unsigned>((2 * n + 1) / 3);
    default: return static_cast<unsigned>((2 * n - 1) / 3);
  }
}

DegreeStats gen_degree_stats(int n) {
  if (n < 6) throw UsageError("degree stats need n >= 6");
  DegreeStats stats;
  stats.n = n;
  stats.formula = degree_formula(n);
  // max vertex grows at least as fast as the degree, so degree n suffices
  const ToricMap map = ToricMap::gap();
  for (const auto& g : build_gen_family(static_cast<unsigned>(std::max(n, 4))))
    if (map.fits(g.binomial, n) && g.degree() > stats.computed) {
      stats.computed = g.degree();
      stats.witness = g.label;
    }
  return stats;
}

}  // namespace eqhilb
