#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include "eqhilb/errors.hpp"
#include "eqhilb/toric/toric.hpp"

namespace eqhilb {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::vector<std::size_t>> groups() {
    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t i = 0; i < parent.size(); ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [r, g] : by_root) out.push_back(std::move(g));
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Calls f with the exponent vector of every monomial of degree d in
// nvars variables.
void for_each_exponents(std::size_t nvars, unsigned d, const std::function<void(const std::vector<unsigned>&)>& f) {
  std::vector<unsigned> exps(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
    if (var + 1 == nvars) {
      exps[var] = left;
      f(exps);
      exps[var] = 0;
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      exps[var] = e;
      rec(var + 1, left - e);
    }
    exps[var] = 0;
  };
  if (nvars == 0) {
    if (d == 0) f(exps);
    return;
  }
  rec(0, d);
}

EdgeMonomial assemble(const std::vector<Edge>& vars, const std::vector<unsigned>& exps) {
  std::vector<std::pair<Edge, unsigned>> terms;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (exps[i]) terms.push_back({vars[i], exps[i]});
  return EdgeMonomial::from_terms(std::move(terms));
}

// Image exponents as a byte string indexed by vertex.
std::string image_key(const std::vector<Edge>& vars, const std::vector<unsigned>& exps, int vertices) {
  std::string key(static_cast<std::size_t>(vertices) + 1, '\0');
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (exps[i]) {
      key[static_cast<std::size_t>(vars[i].lo)] = static_cast<char>(key[static_cast<std::size_t>(vars[i].lo)] + exps[i]);
      key[static_cast<std::size_t>(vars[i].hi)] = static_cast<char>(key[static_cast<std::size_t>(vars[i].hi)] + exps[i]);
    }
  return key;
}

Monomial key_to_monomial(const std::string& key) {
  std::vector<int> idx;
  for (std::size_t v = 1; v < key.size(); ++v) idx.insert(idx.end(), static_cast<unsigned char>(key[v]), static_cast<int>(v));
  return Monomial::from_indices(idx);
}

int top_vertex(const ToricMap& map, int n) { return n + static_cast<int>(map.family().last_offset()); }

// Groups of member indices sharing an image, over all degree-d monomials.
struct FiberTable {
  std::vector<Edge> vars;
  std::vector<std::vector<unsigned>> monomials;
  std::map<std::string, std::vector<std::size_t>> groups;
};

FiberTable fiber_table(const ToricMap& map, int n, unsigned d) {
  FiberTable t;
  t.vars = map.variables(n);
  const int top = top_vertex(map, n);
  std::unordered_map<std::string, std::vector<std::size_t>> groups;
  for_each_exponents(t.vars.size(), d, [&](const std::vector<unsigned>& exps) {
    groups[image_key(t.vars, exps, top)].push_back(t.monomials.size());
    t.monomials.push_back(exps);
  });
  for (auto& [k, g] : groups)
    if (g.size() > 1) t.groups.emplace(k, std::move(g));
  return t;
}

}  // namespace

std::vector<Binomial> window_moves(const std::vector<Binomial>& base, const ToricMap& map, int n) {
  std::set<Binomial> seen;
  std::vector<Binomial> out;
  for (const auto& b : base) {
    if (b.is_zero()) continue;
    for (int by = 1 - b.min_vertex(); by + b.min_vertex() <= n; ++by) {
      Binomial s = b.shifted(by);
      if (map.fits(s, n) && seen.insert(s.oriented()).second) out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<EdgeMonomial> fiber_of(const ToricMap& map, int n, const Monomial& target) {
  const auto vars = map.variables(n);
  const int top = top_vertex(map, n);
  std::vector<unsigned> left(static_cast<std::size_t>(std::max(top, target.max_index())) + 1, 0);
  for (const auto& [v, e] : target.support()) left[static_cast<std::size_t>(v)] = e;
  if (target.max_index() > top) return {};

  std::vector<EdgeMonomial> out;
  std::vector<unsigned> exps(vars.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t var) {
    // vertices below the next edge's lo are settled
    if (var > 0 && var < vars.size())
      for (int v = vars[var - 1].lo; v < vars[var].lo; ++v)
        if (left[static_cast<std::size_t>(v)] != 0) return;
    if (var == vars.size()) {
      if (std::all_of(left.begin(), left.end(), [](unsigned x) { return x == 0; })) out.push_back(assemble(vars, exps));
      return;
    }
    const auto lo = static_cast<std::size_t>(vars[var].lo), hi = static_cast<std::size_t>(vars[var].hi);
    const unsigned cap = lo == hi ? left[lo] / 2 : std::min(left[lo], left[hi]);
    for (unsigned e = 0; e <= cap; ++e) {
      exps[var] = e;
      left[lo] -= e;
      left[hi] -= e;
      rec(var + 1);
      left[lo] += e;
      left[hi] += e;
    }
    exps[var] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

FiberGraph fiber_connected(const ToricMap& map, int n, const Monomial& target, const std::vector<Binomial>& moves) {
  FiberGraph g;
  g.target = target;
  g.members = fiber_of(map, n, target);
  std::map<EdgeMonomial, std::size_t> index;
  for (std::size_t i = 0; i < g.members.size(); ++i) index[g.members[i]] = i;
  DisjointSets sets(g.members.size());
  std::vector<bool> used(moves.size(), false);
  for (std::size_t i = 0; i < g.members.size(); ++i)
    for (std::size_t k = 0; k < moves.size(); ++k)
      for (const auto& [from, to] : {std::pair{&moves[k].head, &moves[k].tail}, std::pair{&moves[k].tail, &moves[k].head}}) {
        if (!from->divides(g.members[i])) continue;
        auto it = index.find(g.members[i] / *from * *to);
        if (it == index.end()) continue;  // move leaves the window
        sets.join(i, it->second);
        used[k] = true;
      }
  g.components = sets.groups();
  g.moves_used = static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
  return g;
}

std::vector<Monomial> nontrivial_fibers(const ToricMap& map, int n, unsigned d) {
  std::vector<Monomial> out;
  for (const auto& [key, members] : fiber_table(map, n, d).groups) out.push_back(key_to_monomial(key));
  std::sort(out.begin(), out.end());
  return out;
}

FiberSweep fiber_sweep(const ToricMap& map, int n, unsigned dmax, const std::vector<Binomial>& moves) {
  FiberSweep sweep;
  for (unsigned d = 2; d <= dmax; ++d)
    for (const auto& target : nontrivial_fibers(map, n, d)) {
      ++sweep.fibers;
      if (!fiber_connected(map, n, target, moves).connected()) {
        ++sweep.disconnected;
        if (!sweep.first_disconnected) sweep.first_disconnected = target;
      }
    }
  return sweep;
}

nlohmann::json fiber_report(const FiberGraph& g, NameStyle style) {
  nlohmann::json components = nlohmann::json::array();
  for (const auto& comp : g.components) {
    nlohmann::json c = nlohmann::json::array();
    for (std::size_t i : comp) c.push_back(g.members[i].to_string(style));
    components.push_back(std::move(c));
  }
  return {{"target", g.target.to_string()},
          {"fiber_size", g.members.size()},
          {"components", std::move(components)},
          {"moves_used", g.moves_used}};
}

Binomial reduce_binomial(const Binomial& h, const std::vector<Binomial>& moves) {
  if (!kernel_test(h)) throw UsageError("binomial is not in the kernel: " + h.to_string());
  Binomial cur = h.cancelled();
  for (;;) {
    if (cur.is_zero()) return {};
    bool stepped = false;
    for (const auto& g : moves) {
      if (g.is_zero()) continue;
      for (int by = 1 - g.min_vertex(); by + g.min_vertex() <= cur.max_vertex() && !stepped; ++by) {
        const Binomial s = g.shifted(by);
        for (const auto& [from, to] : {std::pair{&s.head, &s.tail}, std::pair{&s.tail, &s.head}}) {
          // rewrite the side divisible by `from`; `to` must meet the other side
          if (from->divides(cur.head) && !to->coprime(cur.tail)) {
            cur = Binomial{cur.head / *from * *to, cur.tail}.cancelled();
            stepped = true;
          } else if (from->divides(cur.tail) && !to->coprime(cur.head)) {
            cur = Binomial{cur.head, cur.tail / *from * *to}.cancelled();
            stepped = true;
          }
          if (stepped) break;
        }
      }
      if (stepped) break;
    }
    if (!stepped) return cur;
  }
}

std::map<unsigned, std::size_t> minimal_generator_degrees(const ToricMap& map, int n, unsigned dmax) {
  std::map<unsigned, std::size_t> out;
  for (unsigned d = 2; d <= dmax; ++d) {
    const FiberTable t = fiber_table(map, n, d);
    std::size_t count = 0;
    for (const auto& [key, members] : t.groups) {
      DisjointSets sets(members.size());
      for (std::size_t v = 0; v < t.vars.size(); ++v) {
        std::optional<std::size_t> first;
        for (std::size_t i = 0; i < members.size(); ++i)
          if (t.monomials[members[i]][v]) {
            if (first) sets.join(*first, i);
            else first = i;
          }
      }
      count += sets.groups().size() - 1;
    }
    if (count) out[d] = count;
  }
  return out;
}

}  // namespace eqhilb
