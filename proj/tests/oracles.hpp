// Test-only reference computations. Nothing here calls into the library's
// series, automaton or counting code.
#ifndef EQHILB_TESTS_ORACLES_HPP
#define EQHILB_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

inline mpz_class choose(long n, long k) {
  if (k < 0 || n < 0 || k > n) return (n == -1 && k == 0) ? 1 : 0;
  mpz_class r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Coefficient of t^d s^n in 1/((1-t)^2 - s) = sum_n s^n (1-t)^(-2n-2).
inline mpz_class inverse_quadratic_coeff(long d, long n) { return choose(2 * n + 1 + d, d); }

// Number of degree-d monomials in v variables.
inline mpz_class monomials_in(long v, long d) {
  if (d == 0) return 1;
  if (v <= 0) return 0;
  return choose(v + d - 1, d);
}

// Coefficient of t^d s^e in num/den by naive truncated-series division
// (dense double loop, independent of the library's recurrence).
struct Series2 {
  std::vector<std::vector<mpz_class>> c;  // c[d][n]
};

inline Series2 divide_series(const std::map<std::pair<int, int>, long>& num,
                             const std::map<std::pair<int, int>, long>& den, int dmax, int nmax) {
  Series2 out;
  out.c.assign(dmax + 1, std::vector<mpz_class>(nmax + 1, 0));
  const long d0 = den.at({0, 0});
  for (int total = 0; total <= dmax + nmax; ++total)
    for (int d = 0; d <= dmax; ++d) {
      const int n = total - d;
      if (n < 0 || n > nmax) continue;
      mpz_class acc = 0;
      auto it = num.find({d, n});
      if (it != num.end()) acc = it->second;
      for (const auto& [e, v] : den) {
        if (e == std::make_pair(0, 0) || e.first > d || e.second > n) continue;
        acc -= mpz_class(v) * out.c[d - e.first][n - e.second];
      }
      out.c[d][n] = acc / d0;
    }
  return out;
}

// Words over an alphabet of `letters` symbols with length <= maxlen.
inline void for_each_word(int letters, int maxlen, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> w;
  std::function<void()> rec = [&]() {
    f(w);
    if (static_cast<int>(w.size()) == maxlen) return;
    for (int a = 0; a < letters; ++a) {
      w.push_back(a);
      rec();
      w.pop_back();
    }
  };
  rec();
}

// A word tau^k1 a_i1 tau^k2 ... a_id tau^k(d+1) split into its parts.
// Letter 0 is tau; letter x > 0 stands for alpha index x - 1 + first_index.
struct Decomposed {
  std::vector<long> k;  // d + 1 entries
  std::vector<long> i;  // d entries
};

inline Decomposed decompose(const std::vector<int>& w, int first_index) {
  Decomposed out;
  out.k.push_back(0);
  for (int a : w) {
    if (a == 0) {
      ++out.k.back();
    } else {
      out.i.push_back(a - 1 + first_index);
      out.k.push_back(0);
    }
  }
  return out;
}

// Condition of the window-squares language: k_{j+1} >= i_j for j < d.
inline bool window_squares_word(const std::vector<int>& w) {
  const auto p = decompose(w, 0);
  const std::size_t d = p.i.size();
  for (std::size_t j = 0; j + 1 < d; ++j)
    if (p.k[j + 1] < p.i[j]) return false;
  return true;
}

// Consecutive alphas with no tau between are nondecreasing.
inline bool poly_ring_word(const std::vector<int>& w) {
  const auto p = decompose(w, 1);
  for (std::size_t j = 1; j < p.i.size(); ++j)
    if (p.k[j] == 0 && p.i[j - 1] > p.i[j]) return false;
  return true;
}

// Conditions (a), (b) of the gap language.
inline bool gap_word(const std::vector<int>& w) {
  const auto p = decompose(w, 1);
  const std::size_t d = p.i.size();
  for (std::size_t nu = 1; nu < d; ++nu) {
    if (p.k[nu] == 0 && p.i[nu - 1] > p.i[nu]) return false;
    if (p.i[nu - 1] == 2 && p.k[nu] == 1 && p.i[nu] != 1) return false;
  }
  return true;
}

// Number of words with d alphas and m taus satisfying `pred`, by brute force
// over all (d + m)-letter words with `alphas` alpha letters.
inline mpz_class brute_count(int alphas, int d, int m, bool (*pred)(const std::vector<int>&)) {
  mpz_class total = 0;
  std::vector<int> w;
  std::function<void(int, int)> rec = [&](int dl, int ml) {
    if (dl == 0 && ml == 0) {
      if (pred(w)) ++total;
      return;
    }
    if (ml > 0) {
      w.push_back(0);
      rec(dl, ml - 1);
      w.pop_back();
    }
    if (dl > 0)
      for (int a = 1; a <= alphas; ++a) {
        w.push_back(a);
        rec(dl - 1, ml);
        w.pop_back();
      }
  };
  rec(d, m);
  return total;
}

// Fibonacci with F_1 = F_2 = 1.
inline std::uint64_t fibonacci(int k) {
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    const auto c = a + b;
    a = b;
    b = c;
  }
  return a;
}

}  // namespace oracle

#endif  // EQHILB_TESTS_ORACLES_HPP
