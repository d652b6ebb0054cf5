#include "eqhilb/genfun/genfun.hpp"

#include "eqhilb/automata/count.hpp"
#include "eqhilb/errors.hpp"
#include "eqhilb/exactalg/linsolve.hpp"
#include "eqhilb/exactalg/series.hpp"

namespace eqhilb {

WeightFn::WeightFn(Alphabet alphabet, VarSet vars, std::vector<MPoly> weights)
    : alphabet_(std::move(alphabet)), vars_(std::move(vars)), weights_(std::move(weights)) {
  if (weights_.size() != alphabet_.size()) throw UsageError("weight function must map every symbol");
  for (const auto& w : weights_) {
    if (!(w.vars() == vars_)) throw UsageError("weight over a different variable set");
    if (w.term_count() != 1) throw UsageError("weights must be monomials");
  }
}

WeightFn WeightFn::standard(const Alphabet& alphabet) {
  const unsigned classes = alphabet.count_classes();
  VarSet vars = VarSet::for_count_classes(classes);
  std::vector<MPoly> w;
  for (const auto& sym : alphabet.symbols()) {
    const std::size_t var = sym.cls.is_content() ? 0 : sym.cls.var;
    w.push_back(MPoly::variable(vars, var));
  }
  return WeightFn(alphabet, vars, std::move(w));
}

std::vector<std::vector<MPoly>> transfer_matrix(const Dfa& a, const WeightFn& rho) {
  if (!(rho.alphabet() == a.alphabet())) throw UsageError("weight function over a different alphabet");
  const std::size_t n = a.state_count();
  std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly(rho.vars())));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = MPoly(rho.vars(), 1);
  for (State j = 0; j < n; ++j)
    for (SymbolId s = 0; s < a.alphabet().size(); ++s) {
      const State i = a.next(j, s);
      if (i != Dfa::kNone) m[i][j] -= rho[s];
    }
  return m;
}

RatFun transfer_series(const Dfa& a, const WeightFn& rho) {
  const std::size_t n = a.state_count();
  bool any_accepting = false;
  for (State q = 0; q < n; ++q) any_accepting = any_accepting || a.accepting(q);
  if (!any_accepting) return RatFun(rho.vars());
  const auto m = transfer_matrix(a, rho);
  PolyMatrix aug(n, n + 1, MPoly(rho.vars()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m[i][j];
  aug(a.start(), n) = MPoly(rho.vars(), 1);
  auto sol = eliminate(std::move(aug));
  MPoly num(rho.vars());
  for (State q = 0; q < n; ++q)
    if (a.accepting(q)) num += sol.numerators[q];
  return RatFun(std::move(num), std::move(sol.determinant));
}

SeriesCheck series_check(const Dfa& a, std::span<const unsigned> bounds) {
  if (bounds.size() != 1 + a.alphabet().count_classes())
    throw UsageError("series check needs a content bound plus one bound per count class");
  const WeightFn rho = WeightFn::standard(a.alphabet());
  RatFun f = transfer_series(a, rho);
  CountTable expanded = series_expand(f, bounds);
  CountTable counted = dp_count(a, bounds[0], bounds.subspan(1));
  SeriesCheck rep{std::move(f), std::move(expanded), std::move(counted), {}, 0};
  rep.equal.resize(rep.counted.size());
  for (std::size_t i = 0; i < rep.counted.size(); ++i) {
    rep.equal[i] = rep.expanded.data()[i] == rep.counted.data()[i];
    rep.mismatches += !rep.equal[i];
  }
  return rep;
}

}  // namespace eqhilb
