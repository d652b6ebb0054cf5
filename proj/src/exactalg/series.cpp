#include "eqhilb/exactalg/series.hpp"

#include "eqhilb/errors.hpp"

namespace eqhilb {

std::string axis_label(const std::string& var, std::size_t nvars) {
  if (var == "t") return "d";
  if (var == "s") return "n";
  if (var == "s1") return nvars > 2 ? "m" : "n";
  if (var == "s2") return "n";
  return var;
}

CountTable series_expand(const RatFun& f, std::span<const unsigned> bounds) {
  const VarSet& vars = f.vars();
  if (bounds.size() != vars.size()) throw UsageError("series bounds do not match variable set");
  const Integer d0 = f.den().constant_term();
  if (d0 == 0) throw ArithmeticError("rational function is not expandable at origin");

  std::vector<std::string> axes;
  for (const auto& v : vars.names()) axes.push_back(axis_label(v, vars.size()));
  CountTable out(axes, std::vector<unsigned>(bounds.begin(), bounds.end()));

  struct DenTerm {
    std::vector<unsigned> e;
    Integer coef;
  };
  std::vector<DenTerm> den;
  for (const auto& t : f.den().terms())
    if (t.key != 0) den.push_back({exponent::unpack(t.key, vars.size()), t.coef});

  // Lexicographic cell order visits e - f before e for every f > 0.
  std::vector<unsigned> back(vars.size());
  for (std::size_t li = 0; li < out.size(); ++li) {
    const auto e = out.index_of(li);
    Integer acc = f.num().coefficient(e);
    for (const auto& dt : den) {
      bool fits = true;
      for (std::size_t i = 0; i < e.size() && fits; ++i) {
        fits = dt.e[i] <= e[i];
        if (fits) back[i] = e[i] - dt.e[i];
      }
      if (fits) acc -= dt.coef * out.at(back);
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t()))
      throw ArithmeticError("series coefficient is not an integer");
    mpz_divexact(out.data()[li].get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
  }
  return out;
}

CountTable series_expand(const RatFun& f, unsigned bound_per_axis) {
  std::vector<unsigned> b(f.vars().size(), bound_per_axis);
  return series_expand(f, b);
}

MPoly table_to_poly(const CountTable& table, const VarSet& vars) {
  if (table.rank() != vars.size()) throw UsageError("table rank does not match variable set");
  MPoly p(vars);
  table.for_each([&](std::span<const unsigned> idx, const Integer& v) {
    if (v != 0) p += MPoly::monomial(vars, idx, v);
  });
  return p;
}

}  // namespace eqhilb
