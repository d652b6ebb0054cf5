#include "eqhilb/langlib/langlib.hpp"

#include <stdexcept>

#include "eqhilb/errors.hpp"

namespace eqhilb {

RatFun Language::equivariant_series() const {
  const RatFun p = transfer();
  return RatFun(p.num() * offset, p.den());
}

const FigureAutomaton* Language::figure(const std::string& label) const {
  for (const auto& f : figures)
    if (f.label == label) return &f;
  return nullptr;
}

bool LanguageCheck::ok() const {
  if (!predicate_vs_dfa.agree()) return false;
  for (const auto& [label, good] : constructions)
    if (label == "regex" && !good) return false;
  return true;
}

LanguageCheck verify_language(const Language& lang, unsigned max_length) {
  LanguageCheck rep;
  rep.predicate_vs_dfa = check_agreement(lang.dfa, lang.predicate, max_length);
  if (lang.regex)
    rep.constructions.emplace_back(
        "regex", equivalent(determinize_trim_minimize(regex_build(*lang.regex, lang.alphabet)), lang.dfa));
  for (const auto& f : lang.figures) rep.constructions.emplace_back(f.label, equivalent(f.dfa, lang.dfa));
  return rep;
}

namespace {

void finish(const Language& lang, CheckMode mode) {
  if (mode == CheckMode::Unchecked) return;
  const auto rep = verify_language(lang);
  if (!rep.predicate_vs_dfa.agree())
    throw std::logic_error(lang.name + ": automaton and predicate disagree on '" +
                           lang.alphabet.spell(*rep.predicate_vs_dfa.counterexample) + "'");
  if (!rep.ok()) throw std::logic_error(lang.name + ": regular expression and automaton disagree");
}

MPoly offset_for(const WeightFn& w, unsigned k) {
  const VarSet& v = w.vars();
  return MPoly::variable(v, v.size() == 2 ? 1 : k);
}

Alphabet tau_alpha(unsigned first, unsigned last) {
  std::vector<Symbol> syms{{"tau", SymbolClass::count_var(1)}};
  for (unsigned i = first; i <= last; ++i) syms.push_back({"a" + std::to_string(i), SymbolClass::content()});
  return Alphabet(std::move(syms));
}

std::vector<std::string> alpha_names(unsigned first, unsigned last) {
  std::vector<std::string> out;
  for (unsigned i = first; i <= last; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

}  // namespace

Dfa poly_ring_automaton(unsigned c) {
  if (c < 1) throw UsageError("poly-ring needs c >= 1");
  const Alphabet sigma = tau_alpha(1, c);
  Dfa d(sigma);
  // "1" is the start and the state after tau; "k+1" follows alpha_k.
  for (unsigned q = 1; q <= c + 1; ++q) d.add_state(true, std::to_string(q));
  d.set_start(0);
  const SymbolId tau = sigma.id("tau");
  d.set_transition(0, tau, 0);
  for (unsigned k = 1; k <= c; ++k) {
    d.set_transition(0, sigma.id("a" + std::to_string(k)), k);
    d.set_transition(k, tau, 0);
    for (unsigned j = k; j <= c; ++j) d.set_transition(k, sigma.id("a" + std::to_string(j)), j);
  }
  return d;
}

Language lang_poly_ring(unsigned c, CheckMode mode) {
  if (c < 1) throw UsageError("poly-ring needs c >= 1");
  const Alphabet sigma = tau_alpha(1, c);
  auto pred = [](std::span<const SymbolId> w) {
    SymbolId prev = 0;  // 0 = no alpha since the last tau
    for (SymbolId a : w) {
      if (a == 0) prev = 0;
      else if (a < prev) return false;
      else prev = a;
    }
    return true;
  };
  std::vector<Regex> runs;
  for (const auto& n : alpha_names(1, c)) runs.push_back(Regex::star(Regex::symbol(n)));
  const Regex block = Regex::cat(runs);
  Regex re = Regex::cat({Regex::star(Regex::cat({block, Regex::symbol("tau")})), block});
  const Dfa fig = poly_ring_automaton(c);
  const WeightFn w = WeightFn::standard(sigma);
  Language lang{"poly-ring(" + std::to_string(c) + ")", sigma, pred, minimize(fig), re,
                     {{"figure", fig}}, w, offset_for(w, 1)};
  finish(lang, mode);
  return lang;
}

namespace {

std::string pair_name(unsigned i, unsigned j, unsigned c) {
  if (c < 10) return std::to_string(i) + std::to_string(j);
  return std::to_string(i) + "," + std::to_string(j);
}

Dfa window_squares_states(unsigned c, bool all_accepting) {
  const Alphabet sigma = tau_alpha(0, c);
  Dfa d(sigma);
  for (unsigned i = 0; i <= c; ++i)
    for (unsigned j = 0; j <= i; ++j)
      d.add_state(all_accepting || j == 0 || j == i, pair_name(i, j, c));
  d.set_start(d.state_named(pair_name(0, 0, c)));
  auto st = [&](unsigned i, unsigned j) { return d.state_named(pair_name(i, j, c)); };
  const SymbolId tau = sigma.id("tau");
  for (unsigned i = 0; i <= c; ++i) {
    d.set_transition(st(i, i), tau, st(i, i));
    for (unsigned j = 0; j < i; ++j) d.set_transition(st(i, j), tau, st(i, j + 1));
    for (unsigned j = 0; j <= c; ++j) d.set_transition(st(i, i), sigma.id("a" + std::to_string(j)), st(j, 0));
  }
  return d;
}

}  // namespace

Dfa window_squares_automaton(unsigned c) { return window_squares_states(c, true); }
Dfa window_squares_printed_automaton(unsigned c) { return window_squares_states(c, false); }

Language lang_window_squares(unsigned c, CheckMode mode) {
  const Alphabet sigma = tau_alpha(0, c);
  auto pred = [](std::span<const SymbolId> w) {
    long need = -1;  // tau count required after the previous alpha
    long seen = 0;
    for (SymbolId a : w) {
      if (a == 0) {
        ++seen;
        continue;
      }
      if (need >= 0 && seen < need) return false;
      need = static_cast<long>(a) - 1;
      seen = 0;
    }
    return true;
  };
  std::vector<Regex> steps{Regex::symbol("tau"), Regex::symbol("a0")};
  for (unsigned i = 1; i <= c; ++i) {
    std::vector<Regex> w{Regex::symbol("a" + std::to_string(i))};
    for (unsigned k = 0; k < i; ++k) w.push_back(Regex::symbol("tau"));
    steps.push_back(Regex::cat(w));
  }
  std::vector<Regex> last{Regex::epsilon()};
  for (const auto& n : alpha_names(0, c)) last.push_back(Regex::symbol(n));
  Regex re = Regex::cat({Regex::star(Regex::alt(steps)), Regex::alt(last), Regex::star(Regex::symbol("tau"))});
  const WeightFn w = WeightFn::standard(sigma);
  Language lang{"window-squares(" + std::to_string(c) + ")",
                     sigma,
                     pred,
                     determinize_trim_minimize(regex_build(re, sigma)),
                     re,
                     {{"figure", window_squares_automaton(c)}, {"as-printed", window_squares_printed_automaton(c)}},
                     w,
                     offset_for(w, 1)};
  finish(lang, mode);
  return lang;
}

Dfa gap_automaton() {
  const Alphabet sigma = tau_alpha(1, 2);
  Dfa d(sigma);
  for (const char* n : {"1", "2", "3"}) d.add_state(true, n);
  d.set_start(0);
  d.set_transition("1", "tau", "1");
  d.set_transition("1", "a1", "1");
  d.set_transition("1", "a2", "2");
  d.set_transition("2", "a2", "2");
  d.set_transition("2", "tau", "3");
  d.set_transition("3", "a1", "1");
  d.set_transition("3", "tau", "1");
  return d;
}

Language lang_gap(CheckMode mode) {
  const Alphabet sigma = tau_alpha(1, 2);
  auto pred = [](std::span<const SymbolId> w) {
    SymbolId prev = 0;
    long gap = 0;
    for (SymbolId a : w) {
      if (a == 0) {
        ++gap;
        continue;
      }
      if (prev != 0) {
        if (gap == 0 && prev > a) return false;
        if (prev == 2 && gap == 1 && a != 1) return false;
      }
      prev = a;
      gap = 0;
    }
    return true;
  };
  const Dfa fig = gap_automaton();
  const WeightFn w = WeightFn::standard(sigma);
  Language lang{"gap", sigma, pred, minimize(fig), std::nullopt, {{"figure", fig}}, w, offset_for(w, 1)};
  finish(lang, mode);
  return lang;
}

Language as_factor(const Language& lang, unsigned k) {
  if (k < 1) throw UsageError("factor index must be at least 1");
  std::vector<Symbol> syms;
  std::map<std::string, std::string> rename;
  for (const auto& s : lang.alphabet.symbols()) {
    if (!s.cls.is_content() && s.cls.var != 1)
      throw UsageError("as_factor expects a single-class language");
    Symbol r = s;
    if (s.cls.is_content()) {
      r.name = s.name + "_" + std::to_string(k);
    } else {
      r.name = s.name == "tau" ? "tau" + std::to_string(k) : s.name + "_" + std::to_string(k);
      r.cls = SymbolClass::count_var(k);
    }
    rename[s.name] = r.name;
    syms.push_back(std::move(r));
  }
  const Alphabet sigma(std::move(syms));
  const WeightFn w = WeightFn::standard(sigma);
  Language out{lang.name, sigma, lang.predicate, with_alphabet(lang.dfa, sigma), std::nullopt, {}, w,
                    offset_for(w, k)};
  if (lang.regex) out.regex = lang.regex->renamed([&](const std::string& n) { return rename.at(n); });
  for (const auto& f : lang.figures) out.figures.push_back({f.label, with_alphabet(f.dfa, sigma)});
  return out;
}

namespace {

void require_class(const Language& lang, unsigned k, const char* role) {
  for (const auto& s : lang.alphabet.symbols())
    if (!s.cls.is_content() && s.cls.var != k)
      throw UsageError(std::string(role) + " factor must only use tau class s" + std::to_string(k) + " ('" +
                       s.name + "')");
}

std::vector<SymbolId> ids_of_kind(const Alphabet& a, bool content) {
  std::vector<SymbolId> out;
  for (SymbolId s = 0; s < a.size(); ++s)
    if (a[s].cls.is_content() == content) out.push_back(s);
  return out;
}

}  // namespace

Language lang_segre(const Language& a, const Language& b, CheckMode mode) {
  require_class(a, 1, "first");
  require_class(b, 2, "second");
  const auto taus_a = ids_of_kind(a.alphabet, false), taus_b = ids_of_kind(b.alphabet, false);
  const auto cont_a = ids_of_kind(a.alphabet, true), cont_b = ids_of_kind(b.alphabet, true);

  std::vector<Symbol> syms;
  std::vector<Word> to_a, to_b;
  std::vector<std::string> t1_names, t2_names, g_names;
  for (SymbolId s : taus_a) {
    syms.push_back(a.alphabet[s]);
    to_a.push_back({s});
    to_b.push_back({});
    t1_names.push_back(a.alphabet[s].name);
  }
  for (SymbolId s : taus_b) {
    syms.push_back(b.alphabet[s]);
    to_a.push_back({});
    to_b.push_back({s});
    t2_names.push_back(b.alphabet[s].name);
  }
  for (SymbolId x : cont_a)
    for (SymbolId y : cont_b) {
      const std::string n = "g(" + a.alphabet[x].name + "," + b.alphabet[y].name + ")";
      syms.push_back({n, SymbolClass::content()});
      to_a.push_back({x});
      to_b.push_back({y});
      g_names.push_back(n);
    }
  const Alphabet sigma(std::move(syms));
  const Homomorphism fa(sigma, a.alphabet, to_a), fb(sigma, b.alphabet, to_b);

  const Regex t1 = Regex::star(Regex::any_of(t1_names)), t2 = Regex::star(Regex::any_of(t2_names));
  const Regex scaffold = Regex::cat({Regex::star(Regex::cat({t1, t2, Regex::any_of(g_names)})), t1, t2});
  const Dfa shape = determinize_trim_minimize(regex_build(scaffold, sigma));
  const Dfa dfa = intersect(intersect(hom_preimage(a.dfa, fa), hom_preimage(b.dfa, fb)), shape);

  const std::size_t n1 = taus_a.size(), n2 = taus_b.size();
  auto pred = [fa, fb, pa = a.predicate, pb = b.predicate, n1, n2](std::span<const SymbolId> w) {
    // Within each block before a g-letter (and at the end) all tau1
    // letters precede all tau2 letters.
    bool in_tau2 = false;
    for (SymbolId s : w) {
      if (s < n1) {
        if (in_tau2) return false;
      } else if (s < n1 + n2) {
        in_tau2 = true;
      } else {
        in_tau2 = false;
      }
    }
    return pa(fa.apply(w)) && pb(fb.apply(w));
  };
  const WeightFn wts = WeightFn::standard(sigma);
  Language lang{a.name + " x " + b.name, sigma, pred, dfa, std::nullopt, {}, wts,
                     MPoly::variable(wts.vars(), 1) * MPoly::variable(wts.vars(), 2)};
  finish(lang, mode);
  return lang;
}

Language lang_concat(const Language& a, const Language& b, CheckMode mode) {
  require_class(a, 1, "first");
  require_class(b, 2, "second");
  std::vector<Symbol> syms = a.alphabet.symbols();
  for (const auto& s : b.alphabet.symbols()) {
    if (a.alphabet.find(s.name)) throw UsageError("concatenated alphabets overlap in '" + s.name + "'");
    syms.push_back(s);
  }
  const Alphabet sigma(std::move(syms));
  const Nfa n = nfa_concat(nfa_lift(a.dfa.to_nfa(), sigma), nfa_lift(b.dfa.to_nfa(), sigma));
  const SymbolId split = static_cast<SymbolId>(a.alphabet.size());
  auto pred = [pa = a.predicate, pb = b.predicate, split](std::span<const SymbolId> w) {
    std::size_t i = 0;
    while (i < w.size() && w[i] < split) ++i;
    Word rest;
    for (std::size_t j = i; j < w.size(); ++j) {
      if (w[j] < split) return false;
      rest.push_back(w[j] - split);
    }
    return pa(w.subspan(0, i)) && pb(rest);
  };
  const WeightFn wts = WeightFn::standard(sigma);
  Language lang{a.name + " . " + b.name, sigma, pred, determinize_trim_minimize(n), std::nullopt, {}, wts,
                     MPoly::variable(wts.vars(), 1) * MPoly::variable(wts.vars(), 2)};
  finish(lang, mode);
  return lang;
}

Language lang_trivial(unsigned k) {
  const Alphabet sigma({{"tau" + std::to_string(k), SymbolClass::count_var(k)}});
  auto pred = [](std::span<const SymbolId> w) { return w.empty(); };
  Dfa d(sigma, 1);
  d.set_accepting(0);
  const WeightFn w = WeightFn::standard(sigma);
  return Language{"epsilon", sigma, pred, d, Regex::epsilon(), {}, w, offset_for(w, k)};
}

}  // namespace eqhilb
