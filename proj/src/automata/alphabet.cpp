#include "eqhilb/automata/alphabet.hpp"

#include <algorithm>
#include <sstream>

#include "eqhilb/errors.hpp"

namespace eqhilb {

Alphabet::Alphabet(std::vector<Symbol> symbols) {
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i].name.empty()) throw UsageError("empty symbol name");
    if (symbols[i].name.find_first_of(" \t\n") != std::string::npos)
      throw UsageError("symbol name '" + symbols[i].name + "' contains whitespace");
    if (symbols[i].cls.kind == SymbolClass::Kind::CountVar && symbols[i].cls.var == 0)
      throw UsageError("count class index must be at least 1");
    for (std::size_t j = 0; j < i; ++j)
      if (symbols[i].name == symbols[j].name)
        throw UsageError("duplicate symbol name '" + symbols[i].name + "'");
  }
  symbols_ = std::make_shared<const std::vector<Symbol>>(std::move(symbols));
}

std::optional<SymbolId> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_->size(); ++i)
    if ((*symbols_)[i].name == name) return static_cast<SymbolId>(i);
  return std::nullopt;
}

SymbolId Alphabet::id(std::string_view name) const {
  auto r = find(name);
  if (!r) throw UsageError("unknown symbol '" + std::string(name) + "'");
  return *r;
}

unsigned Alphabet::count_classes() const {
  unsigned k = 0;
  for (const auto& s : *symbols_)
    if (!s.cls.is_content()) k = std::max(k, s.cls.var);
  return k;
}

std::string Alphabet::spell(std::span<const SymbolId> word) const {
  std::string out;
  for (SymbolId a : word) {
    if (!out.empty()) out += ' ';
    out += (*symbols_)[a].name;
  }
  return out;
}

Word Alphabet::parse_word(std::string_view text) const {
  std::istringstream is{std::string(text)};
  Word w;
  for (std::string tok; is >> tok;) w.push_back(id(tok));
  return w;
}

}  // namespace eqhilb
