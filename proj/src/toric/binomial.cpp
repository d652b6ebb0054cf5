#include <algorithm>

#include "eqhilb/errors.hpp"
#include "eqhilb/toric/toric.hpp"

namespace eqhilb {

EdgeMonomial EdgeMonomial::variable(Edge e, unsigned power) { return from_terms({{e, power}}); }

EdgeMonomial EdgeMonomial::from_terms(std::vector<std::pair<Edge, unsigned>> terms) {
  std::sort(terms.begin(), terms.end());
  EdgeMonomial m;
  for (const auto& [e, p] : terms) {
    if (e.lo < 1 || e.hi < e.lo) throw UsageError("bad edge [" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "]");
    if (p == 0) continue;
    if (!m.terms_.empty() && m.terms_.back().first == e)
      m.terms_.back().second += p;
    else
      m.terms_.push_back({e, p});
  }
  return m;
}

unsigned EdgeMonomial::exponent(Edge e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair<Edge, unsigned>{e, 0});
  return it != terms_.end() && it->first == e ? it->second : 0;
}

unsigned EdgeMonomial::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d += t.second;
  return d;
}

int EdgeMonomial::min_vertex() const {
  int v = 0;
  for (const auto& [e, p] : terms_) v = v == 0 ? e.lo : std::min(v, e.lo);
  return v;
}

int EdgeMonomial::max_vertex() const {
  int v = 0;
  for (const auto& [e, p] : terms_) v = std::max(v, e.hi);
  return v;
}

bool EdgeMonomial::divides(const EdgeMonomial& other) const {
  for (const auto& [e, p] : terms_)
    if (other.exponent(e) < p) return false;
  return true;
}

bool EdgeMonomial::coprime(const EdgeMonomial& other) const {
  for (const auto& [e, p] : terms_)
    if (other.exponent(e) > 0) return false;
  return true;
}

EdgeMonomial EdgeMonomial::operator*(const EdgeMonomial& other) const {
  auto terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return from_terms(std::move(terms));
}

EdgeMonomial EdgeMonomial::operator/(const EdgeMonomial& other) const {
  if (!other.divides(*this)) throw ArithmeticError("monomial division is not exact");
  EdgeMonomial out;
  for (const auto& [e, p] : terms_) {
    const unsigned q = other.exponent(e);
    if (p > q) out.terms_.push_back({e, p - q});
  }
  return out;
}

EdgeMonomial EdgeMonomial::gcd(const EdgeMonomial& other) const {
  EdgeMonomial out;
  for (const auto& [e, p] : terms_) {
    const unsigned q = std::min(p, other.exponent(e));
    if (q > 0) out.terms_.push_back({e, q});
  }
  return out;
}

EdgeMonomial EdgeMonomial::shifted(int by) const {
  EdgeMonomial out = *this;
  for (auto& [e, p] : out.terms_) {
    e.lo += by;
    e.hi += by;
    if (e.lo < 1) throw UsageError("shift leaves the positive indices");
  }
  return out;
}

std::string EdgeMonomial::to_string(NameStyle style) const {
  if (terms_.empty()) return "1";
  std::string out;
  for (const auto& [e, p] : terms_) {
    if (!out.empty()) out += '*';
    const int span = e.hi - e.lo;
    if (style == NameStyle::Indexed && (span == 1 || span == 2))
      out += "x(" + std::to_string(span) + "," + std::to_string(e.lo) + ")";
    else
      out += "x[" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "]";
    if (p > 1) out += '^' + std::to_string(p);
  }
  return out;
}

// ---------------------------------------------------------------- Binomial

Binomial Binomial::from_weights(const std::map<Edge, int>& weights) {
  std::vector<std::pair<Edge, unsigned>> pos, neg;
  for (const auto& [e, w] : weights) {
    if (w > 0) pos.push_back({e, static_cast<unsigned>(w)});
    if (w < 0) neg.push_back({e, static_cast<unsigned>(-w)});
  }
  return {EdgeMonomial::from_terms(std::move(pos)), EdgeMonomial::from_terms(std::move(neg))};
}

std::map<Edge, int> Binomial::weights() const {
  std::map<Edge, int> w;
  for (const auto& [e, p] : head.support()) w[e] += static_cast<int>(p);
  for (const auto& [e, p] : tail.support()) w[e] -= static_cast<int>(p);
  std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
  return w;
}

int Binomial::min_vertex() const {
  const int a = head.min_vertex(), b = tail.min_vertex();
  if (a == 0) return b;
  if (b == 0) return a;
  return std::min(a, b);
}

int Binomial::max_vertex() const { return std::max(head.max_vertex(), tail.max_vertex()); }

Binomial Binomial::cancelled() const {
  const EdgeMonomial common = head.gcd(tail);
  return {head / common, tail / common};
}

Binomial Binomial::oriented() const { return tail < head ? negated() : *this; }

std::string Binomial::to_string(NameStyle style) const {
  return head.to_string(style) + " - " + tail.to_string(style);
}

// ----------------------------------------------------------------- ToricMap

ToricMap::ToricMap(GeneratorFamily family) : family_(family) {
  if (family.kind() == GeneratorFamily::Kind::PolyRing)
    throw UsageError("the poly-ring family has no presentation map here");
}

bool ToricMap::admits(Edge e) const {
  const int span = e.hi - e.lo;
  return e.lo >= 1 && span >= static_cast<int>(family_.first_offset()) && span <= static_cast<int>(family_.last_offset());
}

bool ToricMap::fits(const Binomial& b, int n) const {
  for (const auto* side : {&b.head, &b.tail})
    for (const auto& [e, p] : side->support())
      if (!admits(e, n)) return false;
  return true;
}

std::vector<Edge> ToricMap::variables(int n) const {
  std::vector<Edge> out;
  for (int i = 1; i <= n; ++i)
    for (unsigned j = family_.first_offset(); j <= family_.last_offset(); ++j) out.push_back({i, i + static_cast<int>(j)});
  return out;
}

Monomial presentation_image(const EdgeMonomial& m, const ToricMap& map, int n) {
  std::vector<int> idx;
  for (const auto& [e, p] : m.support()) {
    if (!map.admits(e, n))
      throw UsageError("x[" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "] is not a variable of window " +
                       std::to_string(n));
    for (unsigned r = 0; r < p; ++r) {
      idx.push_back(e.lo);
      idx.push_back(e.hi);
    }
  }
  return Monomial::from_indices(idx);
}

std::map<int, int> vertex_weights(const Binomial& b) {
  std::map<int, int> out;
  for (const auto& [e, w] : b.weights()) {
    out[e.lo] += w;
    out[e.hi] += w;
  }
  return out;
}

bool kernel_test(const Binomial& b) {
  for (const auto& [v, w] : vertex_weights(b))
    if (w != 0) return false;
  return true;
}

}  // namespace eqhilb

namespace eqhilb {

namespace {

class BinomialReader {
 public:
  explicit BinomialReader(std::string_view text) : text_(text) {}

  Binomial read() {
    EdgeMonomial head = monomial();
    skip_space();
    expect('-');
    EdgeMonomial tail = monomial();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return {std::move(head), std::move(tail)};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("binomial: " + what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }
  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  unsigned number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected a number");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }
  EdgeMonomial monomial() {
    if (peek('1')) {
      ++pos_;
      return {};
    }
    std::vector<std::pair<Edge, unsigned>> terms;
    do {
      if (!terms.empty()) ++pos_;  // '*'
      expect('x');
      Edge e;
      if (peek('[')) {
        ++pos_;
        e.lo = static_cast<int>(number());
        expect(',');
        e.hi = static_cast<int>(number());
        expect(']');
      } else {
        expect('(');
        const unsigned row = number();
        expect(',');
        const int i = static_cast<int>(number());
        expect(')');
        if (row != 1 && row != 2) fail("row must be 1 or 2");
        e = {i, i + static_cast<int>(row)};
      }
      if (e.lo < 1 || e.hi < e.lo) fail("bad variable");
      unsigned power = 1;
      if (peek('^')) {
        ++pos_;
        power = number();
      }
      terms.push_back({e, power});
    } while (peek('*'));
    return EdgeMonomial::from_terms(std::move(terms));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Binomial parse_binomial(std::string_view text) { return BinomialReader(text).read(); }

}  // namespace eqhilb
