#ifndef EQHILB_AUTOMATA_COUNT_HPP
#define EQHILB_AUTOMATA_COUNT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "eqhilb/automata/dfa.hpp"
#include "eqhilb/exactalg/count_table.hpp"

namespace eqhilb {

using WordPredicate = std::function<bool(std::span<const SymbolId>)>;

// Letter profile of a word: content letters, then one count per tau class.
struct Profile {
  unsigned content = 0;
  std::vector<unsigned> classes;
  friend bool operator==(const Profile&, const Profile&) = default;
};

Profile profile_of(const Alphabet& alphabet, std::span<const SymbolId> w);

// Entry (d, m[, n]) counts accepted words with d content letters and the
// given per-class tau counts. `class_bounds` has one bound per tau class
// of the alphabet; axes are labeled d, m (one class) or d, m, n (two).
CountTable dp_count(const Dfa& a, unsigned dmax, std::span<const unsigned> class_bounds);
CountTable dp_count(const Dfa& a, unsigned dmax, unsigned class_bound);

bool accepts(const Dfa& a, std::span<const SymbolId> w);

// All accepted words with exactly this profile, in lexicographic order of
// symbol ids.
std::vector<Word> enumerate_words(const Dfa& a, const Profile& p);

struct AgreementReport {
  std::uint64_t words_checked = 0;
  std::optional<Word> counterexample;  // first word where they differ
  bool agree() const noexcept { return !counterexample; }
};

// Compares automaton acceptance with a predicate on every word of length
// <= max_length.
AgreementReport check_agreement(const Dfa& a, const WordPredicate& predicate, unsigned max_length);

}  // namespace eqhilb

#endif  // EQHILB_AUTOMATA_COUNT_HPP
