#include "eqhilb/automata/regex.hpp"

#include "eqhilb/errors.hpp"

namespace eqhilb {

Regex Regex::empty() { return Regex(); }

Regex Regex::epsilon() {
  Regex r;
  r.kind_ = Kind::Epsilon;
  return r;
}

Regex Regex::symbol(std::string name) {
  Regex r;
  r.kind_ = Kind::Symbol;
  r.name_ = std::move(name);
  return r;
}

Regex Regex::alt(std::vector<Regex> parts) {
  if (parts.empty()) return empty();
  if (parts.size() == 1) return parts.front();
  Regex r;
  r.kind_ = Kind::Union;
  r.parts_ = std::move(parts);
  return r;
}

Regex Regex::cat(std::vector<Regex> parts) {
  if (parts.empty()) return epsilon();
  if (parts.size() == 1) return parts.front();
  Regex r;
  r.kind_ = Kind::Concat;
  r.parts_ = std::move(parts);
  return r;
}

Regex Regex::star(Regex inner) {
  Regex r;
  r.kind_ = Kind::Star;
  r.parts_.push_back(std::move(inner));
  return r;
}

Regex Regex::any_of(const std::vector<std::string>& names) {
  std::vector<Regex> parts;
  for (const auto& n : names) parts.push_back(symbol(n));
  return alt(std::move(parts));
}

Regex Regex::word(const std::vector<std::string>& names) {
  std::vector<Regex> parts;
  for (const auto& n : names) parts.push_back(symbol(n));
  return cat(std::move(parts));
}

std::string Regex::to_string() const {
  switch (kind_) {
    case Kind::Empty:
      return "{}";
    case Kind::Epsilon:
      return "eps";
    case Kind::Symbol:
      return name_;
    case Kind::Star:
      return "(" + parts_[0].to_string() + ")*";
    case Kind::Union:
    case Kind::Concat: {
      std::string out = "(";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += kind_ == Kind::Union ? " | " : " ";
        out += parts_[i].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

Nfa regex_build(const Regex& expr, const Alphabet& alphabet) {
  switch (expr.kind()) {
    case Regex::Kind::Empty:
      return nfa_empty(alphabet);
    case Regex::Kind::Epsilon:
      return nfa_epsilon(alphabet);
    case Regex::Kind::Symbol:
      return nfa_symbol(alphabet, alphabet.id(expr.name()));
    case Regex::Kind::Star:
      return nfa_star(regex_build(expr.parts()[0], alphabet));
    case Regex::Kind::Union: {
      Nfa acc = regex_build(expr.parts()[0], alphabet);
      for (std::size_t i = 1; i < expr.parts().size(); ++i)
        acc = nfa_union(acc, regex_build(expr.parts()[i], alphabet));
      return acc;
    }
    case Regex::Kind::Concat: {
      Nfa acc = regex_build(expr.parts()[0], alphabet);
      for (std::size_t i = 1; i < expr.parts().size(); ++i)
        acc = nfa_concat(acc, regex_build(expr.parts()[i], alphabet));
      return acc;
    }
  }
  throw UsageError("malformed regular expression");
}

}  // namespace eqhilb
