#ifndef EQHILB_AUTOMATA_ALPHABET_HPP
#define EQHILB_AUTOMATA_ALPHABET_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eqhilb {

using SymbolId = std::uint32_t;
using Word = std::vector<SymbolId>;

// How a letter is counted: a tau-type letter bumps the s_k exponent, a
// content letter bumps the t exponent.
struct SymbolClass {
  enum class Kind { CountVar, Content };
  Kind kind = Kind::Content;
  unsigned var = 0;    // k >= 1 for CountVar
  std::string label;   // free-form tag for Content letters

  static SymbolClass count_var(unsigned k) { return {Kind::CountVar, k, {}}; }
  static SymbolClass content(std::string label = {}) { return {Kind::Content, 0, std::move(label)}; }
  bool is_content() const noexcept { return kind == Kind::Content; }

  friend bool operator==(const SymbolClass&, const SymbolClass&) = default;
};

struct Symbol {
  std::string name;
  SymbolClass cls;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

class Alphabet {
 public:
  Alphabet() : symbols_(std::make_shared<const std::vector<Symbol>>()) {}
  explicit Alphabet(std::vector<Symbol> symbols);

  std::size_t size() const noexcept { return symbols_->size(); }
  const Symbol& operator[](SymbolId id) const { return (*symbols_)[id]; }
  const std::vector<Symbol>& symbols() const noexcept { return *symbols_; }

  std::optional<SymbolId> find(std::string_view name) const;
  SymbolId id(std::string_view name) const;  // throws UsageError if unknown

  // Largest k among CountVar(k) letters (0 if none).
  unsigned count_classes() const;

  // Space-separated symbol names.
  std::string spell(std::span<const SymbolId> word) const;
  // Inverse of spell; throws UsageError on unknown names.
  Word parse_word(std::string_view text) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_ || *a.symbols_ == *b.symbols_;
  }

 private:
  std::shared_ptr<const std::vector<Symbol>> symbols_;
};

}  // namespace eqhilb

#endif  // EQHILB_AUTOMATA_ALPHABET_HPP
