#include "eqhilb/exactalg/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "eqhilb/errors.hpp"

namespace eqhilb {

VarSet::VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarSet::VarSet(std::initializer_list<std::string> names)
    : VarSet(std::vector<std::string>(names)) {}

VarSet::VarSet(std::vector<std::string> names) {
  if (names.size() > kMaxVars)
    throw UsageError("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw UsageError("duplicate variable name '" + names[i] + "'");
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarSet VarSet::for_count_classes(std::size_t classes) {
  if (classes <= 1) return VarSet{"t", "s"};
  std::vector<std::string> names{"t"};
  for (std::size_t k = 1; k <= classes; ++k) names.push_back("s" + std::to_string(k));
  return VarSet(std::move(names));
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

namespace exponent {

Key pack(std::span<const unsigned> e) {
  if (e.size() > VarSet::kMaxVars) throw UsageError("exponent vector too long");
  Key k = 0;
  unsigned long deg = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > kMaxExponent) throw ArithmeticError("exponent overflow");
    deg += e[i];
    k |= static_cast<Key>(e[i]) << (32 - kFieldBits * i);
  }
  if (deg > kMaxExponent) throw ArithmeticError("total degree overflow");
  return k | (static_cast<Key>(deg) << 48);
}

std::vector<unsigned> unpack(Key k, std::size_t nvars) {
  std::vector<unsigned> e(nvars);
  for (std::size_t i = 0; i < nvars; ++i) e[i] = get(k, i);
  return e;
}

bool divides(Key a, Key b) {
  for (std::size_t i = 0; i < 4; ++i) {
    const unsigned shift = kFieldBits * static_cast<unsigned>(i);
    if (((a >> shift) & kFieldMask) > ((b >> shift) & kFieldMask)) return false;
  }
  return true;
}

Key multiply(Key a, Key b) {
  for (std::size_t i = 0; i < 4; ++i) {
    const unsigned shift = kFieldBits * static_cast<unsigned>(i);
    if (((a >> shift) & kFieldMask) + ((b >> shift) & kFieldMask) > kMaxExponent)
      throw ArithmeticError("exponent overflow");
  }
  return a + b;
}

}  // namespace exponent

MPoly::MPoly(VarSet vars, const Integer& constant) : vars_(std::move(vars)) {
  if (constant != 0) terms_.push_back({0, constant});
}

MPoly MPoly::variable(const VarSet& vars, std::size_t index, unsigned power) {
  if (index >= vars.size()) throw UsageError("variable index out of range");
  std::vector<unsigned> e(vars.size(), 0);
  e[index] = power;
  return monomial(vars, e);
}

MPoly MPoly::monomial(const VarSet& vars, std::span<const unsigned> e, const Integer& coef) {
  if (e.size() != vars.size()) throw UsageError("exponent vector does not match variable set");
  MPoly p(vars);
  if (coef != 0) p.terms_.push_back({exponent::pack(e), coef});
  return p;
}

bool MPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0);
}

Integer MPoly::coefficient(exponent::Key k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, exponent::Key key) { return t.key < key; });
  if (it != terms_.end() && it->key == k) return it->coef;
  return 0;
}

Integer MPoly::coefficient(std::span<const unsigned> e) const {
  if (e.size() != vars_.size()) throw UsageError("exponent vector does not match variable set");
  return coefficient(exponent::pack(e));
}

Integer MPoly::constant_term() const { return coefficient(exponent::Key{0}); }

unsigned MPoly::total_degree() const {
  return terms_.empty() ? 0 : exponent::degree(terms_.back().key);
}

unsigned MPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, exponent::get(t.key, var));
  return d;
}

Integer MPoly::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

const MPoly::Term& MPoly::lowest_term() const {
  if (terms_.empty()) throw ArithmeticError("zero polynomial has no terms");
  return terms_.front();
}

const MPoly::Term& MPoly::highest_term() const {
  if (terms_.empty()) throw ArithmeticError("zero polynomial has no terms");
  return terms_.back();
}

void MPoly::check_same_vars(const MPoly& b) const {
  if (!(vars_ == b.vars_)) throw UsageError("polynomials over different variable sets");
}

std::vector<MPoly::Term> MPoly::merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                      bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].key < b[j].key)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].key < a[i].key) {
      out.push_back({b[j].key, subtract ? Integer(-b[j].coef) : b[j].coef});
      ++j;
    } else {
      Integer c = subtract ? Integer(a[i].coef - b[j].coef) : Integer(a[i].coef + b[j].coef);
      if (c != 0) out.push_back({a[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& b) {
  check_same_vars(b);
  terms_ = merge(terms_, b.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& b) {
  check_same_vars(b);
  terms_ = merge(terms_, b.terms_, true);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_same_vars(b);
  MPoly r(a.vars_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  std::vector<MPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({exponent::multiply(x.key, y.key), x.coef * y.coef});
  std::sort(prod.begin(), prod.end(),
            [](const MPoly::Term& p, const MPoly::Term& q) { return p.key < q.key; });
  for (auto& t : prod) {
    if (!r.terms_.empty() && r.terms_.back().key == t.key) {
      r.terms_.back().coef += t.coef;
    } else {
      if (!r.terms_.empty() && r.terms_.back().coef == 0) r.terms_.pop_back();
      r.terms_.push_back(std::move(t));
    }
  }
  if (!r.terms_.empty() && r.terms_.back().coef == 0) r.terms_.pop_back();
  return r;
}

MPoly& MPoly::operator*=(const MPoly& b) {
  *this = *this * b;
  return *this;
}

MPoly& MPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

MPoly MPoly::exact_divide(const Integer& c) const {
  if (c == 0) throw ArithmeticError("division by zero");
  MPoly r(*this);
  for (auto& t : r.terms_) {
    if (!mpz_divisible_p(t.coef.get_mpz_t(), c.get_mpz_t()))
      throw ArithmeticError("inexact integer division of polynomial");
    mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

MPoly MPoly::exact_divide(const MPoly& b) const {
  check_same_vars(b);
  if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
  if (b.is_constant()) return exact_divide(b.terms_.front().coef);
  const Term& lead = b.terms_.back();
  std::vector<Term> rem = terms_;
  std::vector<Term> quot;
  std::vector<Term> scaled;
  while (!rem.empty()) {
    const Term& top = rem.back();
    if (!exponent::divides(lead.key, top.key) ||
        !mpz_divisible_p(top.coef.get_mpz_t(), lead.coef.get_mpz_t()))
      throw ArithmeticError("inexact polynomial division");
    const exponent::Key qk = top.key - lead.key;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), top.coef.get_mpz_t(), lead.coef.get_mpz_t());
    scaled.clear();
    scaled.reserve(b.terms_.size());
    for (const auto& t : b.terms_) scaled.push_back({exponent::multiply(t.key, qk), t.coef * qc});
    rem = merge(rem, scaled, true);
    quot.push_back({qk, std::move(qc)});
  }
  MPoly q(vars_);
  q.terms_.assign(quot.rbegin(), quot.rend());
  return q;
}

Integer MPoly::evaluate(std::span<const Integer> point) const {
  if (point.size() != vars_.size()) throw UsageError("evaluation point does not match variable set");
  Integer sum = 0;
  for (const auto& t : terms_) {
    Integer v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i) {
      const unsigned e = exponent::get(t.key, i);
      if (e == 0) continue;
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), e);
      v *= pw;
    }
    sum += v;
  }
  return sum;
}

MPoly MPoly::truncated(std::span<const unsigned> bounds) const {
  if (bounds.size() != vars_.size()) throw UsageError("bounds do not match variable set");
  MPoly r(vars_);
  for (const auto& t : terms_) {
    bool keep = true;
    for (std::size_t i = 0; i < bounds.size() && keep; ++i)
      keep = exponent::get(t.key, i) <= bounds[i];
    if (keep) r.terms_.push_back(t);
  }
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  a.check_same_vars(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool negative = it->coef < 0;
    Integer mag = abs(it->coef);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const unsigned e = exponent::get(it->key, i);
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_.name(i);
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << '*' << mono;
    }
  }
  return os.str();
}

}  // namespace eqhilb
