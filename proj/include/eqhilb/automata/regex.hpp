#ifndef EQHILB_AUTOMATA_REGEX_HPP
#define EQHILB_AUTOMATA_REGEX_HPP

#include <memory>
#include <string>
#include <vector>

#include "eqhilb/automata/nfa.hpp"

namespace eqhilb {

// Regular expression tree with symbols referenced by name; names are
// resolved against an alphabet when the Nfa is built.
class Regex {
 public:
  enum class Kind { Empty, Epsilon, Symbol, Union, Concat, Star };

  static Regex empty();
  static Regex epsilon();
  static Regex symbol(std::string name);
  static Regex alt(std::vector<Regex> parts);
  static Regex cat(std::vector<Regex> parts);
  static Regex star(Regex inner);
  // {a, b, ...} as a union of single symbols.
  static Regex any_of(const std::vector<std::string>& names);
  // The word a b c ... as a concatenation.
  static Regex word(const std::vector<std::string>& names);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Regex>& parts() const noexcept { return parts_; }

  std::string to_string() const;

  // Same tree with every symbol name passed through `rename`.
  template <typename F>
  Regex renamed(const F& rename) const {
    Regex r = *this;
    if (kind_ == Kind::Symbol) r.name_ = rename(name_);
    for (auto& p : r.parts_) p = p.renamed(rename);
    return r;
  }

 private:
  Kind kind_ = Kind::Empty;
  std::string name_;
  std::vector<Regex> parts_;
};

// Thompson construction. Unknown symbol names throw UsageError.
Nfa regex_build(const Regex& expr, const Alphabet& alphabet);

}  // namespace eqhilb

#endif  // EQHILB_AUTOMATA_REGEX_HPP
