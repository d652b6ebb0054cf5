#include "eqhilb/errors.hpp"
#include "eqhilb/toric/toric.hpp"

namespace eqhilb {

RatFun ideal_series(const RatFun& algebra_series) {
  const VarSet& vars = algebra_series.vars();
  if (vars.size() != 2) throw UsageError("ideal series expects a series in t and s");
  const MPoly one(vars, 1);
  const MPoly u = one - MPoly::variable(vars, 0);  // 1 - t
  const MPoly s = MPoly::variable(vars, 1);
  const RatFun ring(u * u, u * u - s);
  return ring - RatFun(one) - algebra_series;
}

CountTable ideal_counts(unsigned nmax, unsigned dmax, Convention conv) {
  CountTable out = hilbert_counts(GeneratorFamily::gap(), nmax, dmax, conv);
  for (unsigned n = 1; n <= nmax; ++n)
    for (unsigned d = 0; d <= dmax; ++d) {
      Integer ring;
      mpz_bin_uiui(ring.get_mpz_t(), 2 * n + d - 1, d);
      out.at({d, n}) = ring - out.at({d, n});
    }
  return out;
}

}  // namespace eqhilb
