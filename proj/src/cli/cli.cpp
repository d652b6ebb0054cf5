#include "eqhilb/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "eqhilb/automata/dot.hpp"
#include "eqhilb/errors.hpp"
#include "eqhilb/exactalg/parse.hpp"
#include "eqhilb/exactalg/series.hpp"
#include "eqhilb/langlib/langlib.hpp"
#include "eqhilb/monoracle/monoracle.hpp"
#include "eqhilb/toric/toric.hpp"

namespace eqhilb {

namespace {

using nlohmann::json;

constexpr unsigned kCap = 10;

const char* const kPrintedIdealSeries =
    "(t*s^4-t*s^3-t^2*s+s^3+t*s-s)/(t^2*s^3+t*s^4-t^3*s-4*t^2*s^2-3*t*s^3+t^3+4*t^2*s+5*t*s^2+s^3-2*t^2-6*t*s"
    "-3*s^2+3*t+3*s-1)";

// Raised when a --strict assertion fails.
struct StrictFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "text";
  bool strict = false;
  bool unsafe = false;
};

void check_cap(const Common& common, const char* what, unsigned value) {
  if (!common.unsafe && value > kCap)
    throw UsageError(std::string(what) + " = " + std::to_string(value) + " exceeds the cap of " + std::to_string(kCap) +
                     " (pass --unsafe to override)");
}

void write_json(std::ostream& out, const std::string& command, json params, json results) {
  out << json{{"command", command}, {"params", std::move(params)}, {"results", std::move(results)}}.dump(2) << '\n';
}

// "name" or "name:c"
std::pair<std::string, std::optional<unsigned>> split_selector(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {text, std::nullopt};
  try {
    return {text.substr(0, colon), static_cast<unsigned>(std::stoul(text.substr(colon + 1)))};
  } catch (const std::exception&) {
    throw UsageError("bad selector '" + text + "'");
  }
}

Language base_language(const std::string& text, unsigned default_c) {
  const auto [name, c_opt] = split_selector(text);
  const unsigned c = c_opt.value_or(default_c);
  if (name == "poly-ring") return lang_poly_ring(c);
  if (name == "window-squares") return lang_window_squares(c);
  if (name == "gap") return lang_gap();
  throw UsageError("unknown language '" + text + "' (expected poly-ring, window-squares or gap)");
}

GeneratorFamily family_for(const std::string& name, unsigned c) {
  if (name == "poly-ring") return GeneratorFamily::poly_ring(c);
  if (name == "window-squares") return GeneratorFamily::window_squares(c);
  if (name == "gap") return GeneratorFamily::gap();
  throw UsageError("unknown family '" + name + "' (expected poly-ring, window-squares or gap)");
}

struct LanguageOptions {
  std::string selector;
  unsigned c = 1;
  std::string left, right;
  bool as_printed = false;
};

Language select_language(const LanguageOptions& o) {
  if (o.selector == "segre" || o.selector == "concat") {
    if (o.left.empty() || o.right.empty()) throw UsageError(o.selector + " needs --left and --right");
    const auto a = as_factor(base_language(o.left, o.c), 1);
    const auto b = as_factor(base_language(o.right, o.c), 2);
    return o.selector == "segre" ? lang_segre(a, b) : lang_concat(a, b);
  }
  Language lang = base_language(o.selector, o.c);
  if (o.as_printed) {
    const FigureAutomaton* fig = lang.figure("as-printed");
    if (!fig) throw UsageError("--as-printed only applies to window-squares");
    lang.dfa = fig->dfa;
  }
  return lang;
}

json language_params(const LanguageOptions& o) {
  json p{{"language", o.selector}, {"c", o.c}};
  if (!o.left.empty()) p["left"] = o.left;
  if (!o.right.empty()) p["right"] = o.right;
  if (o.as_printed) p["as_printed"] = true;
  return p;
}

void write_table(std::ostream& out, const CountTable& table, const std::string& format, const std::string& command,
                 json params) {
  if (format == "json") {
    json results = json::array();
    table.for_each([&](std::span<const unsigned> idx, const Integer& v) {
      json cell = json::object();
      for (std::size_t i = 0; i < idx.size(); ++i) cell[table.axes()[i]] = idx[i];
      results.push_back({{"cell", cell}, {"value", v.get_str()}});
    });
    write_json(out, command, std::move(params), std::move(results));
  } else {
    table.write_csv(out);
  }
}

// ------------------------------------------------------------------ series

int cmd_series(const LanguageOptions& lo, std::optional<unsigned> truncate, const Common& common, std::ostream& out) {
  json params = language_params(lo);
  if (truncate) params["truncate"] = *truncate;

  if (lo.selector == "ideal-gap") {
    const RatFun computed = ideal_series(lang_gap().equivariant_series());
    const RatFun printed = parse_ratfun(kPrintedIdealSeries, computed.vars());
    const bool equal = rat_equal(computed, printed);
    std::optional<std::vector<unsigned>> first_diff;
    CountTable ce, pe;
    if (truncate) {
      ce = series_expand(computed, *truncate);
      pe = series_expand(printed, *truncate);
      for (std::size_t i = 0; i < ce.size() && !first_diff; ++i)
        if (ce.data()[i] != pe.data()[i]) first_diff = ce.index_of(i);
    }
    if (common.format == "json") {
      json r{{"series", computed.to_string()}, {"printed", printed.to_string()}, {"equal", equal}};
      if (first_diff) r["first_difference"] = *first_diff;
      write_json(out, "series", params, json::array({r}));
    } else {
      out << "series: " << computed.to_string() << '\n';
      out << "printed: " << printed.to_string() << '\n';
      out << "equal: " << (equal ? "yes" : "no") << '\n';
      if (first_diff)
        out << "first difference at (d,n) = (" << (*first_diff)[0] << "," << (*first_diff)[1] << "): "
            << ce.at(*first_diff).get_str() << " vs " << pe.at(*first_diff).get_str() << '\n';
    }
    if (common.strict && !equal) throw StrictFailure("ideal series differs from the printed value");
    return 0;
  }

  const Language lang = select_language(lo);
  const RatFun series = lang.equivariant_series();
  std::optional<SeriesCheck> check;
  if (truncate) {
    check_cap(common, "--truncate", *truncate);
    std::vector<unsigned> bounds(1 + lang.alphabet.count_classes(), *truncate);
    check = series_check(lang.dfa, bounds);
  }
  if (common.format == "json") {
    json r{{"series", series.to_string()}, {"transfer", lang.transfer().to_string()}};
    if (check) {
      r["check"] = check->ok();
      r["mismatches"] = check->mismatches;
    }
    write_json(out, "series", params, json::array({r}));
  } else {
    out << "language: " << lang.name << '\n';
    out << "series: " << series.to_string() << '\n';
    if (check) {
      check->counted.write_csv(out);
      out << "check: " << (check->ok() ? "ok" : "MISMATCH (" + std::to_string(check->mismatches) + " cells)") << '\n';
    }
  }
  if (common.strict && check && !check->ok()) throw StrictFailure("series and automaton counts disagree");
  return 0;
}

// ----------------------------------------------------------------- compare

int cmd_compare(const std::string& family, unsigned c, const std::string& conv_text, unsigned dmax, unsigned nmax,
                const Common& common, std::ostream& out) {
  check_cap(common, "--dmax", dmax);
  check_cap(common, "--nmax", nmax);
  const Convention conv = parse_convention(conv_text);
  const auto lang = base_language(family, c);
  const auto report = compare_report(lang, family_for(family, c), conv, dmax, nmax);
  const json params{{"family", family}, {"c", c}, {"conv", convention_name(conv)}, {"dmax", dmax}, {"nmax", nmax}};
  if (common.format == "json") {
    json results = json::array();
    for (const auto& cell : report.cells)
      results.push_back({{"cell", {{"d", cell.d}, {"n", cell.n}}},
                         {"language", cell.language.get_str()},
                         {"oracle", cell.oracle.get_str()},
                         {"equal", cell.equal()}});
    write_json(out, "compare", params, std::move(results));
  } else {
    out << "compare " << family << " (c=" << c << ", " << convention_name(conv) << "), d <= " << dmax
        << ", n <= " << nmax << '\n';
    out << "d,n,language,oracle,equal\n";
    for (const auto& cell : report.cells)
      out << cell.d << ',' << cell.n << ',' << cell.language.get_str() << ',' << cell.oracle.get_str() << ','
          << (cell.equal() ? "yes" : "NO  <-- mismatch") << '\n';
    out << "mismatches: " << report.mismatches() << '\n';
  }
  if (common.strict && report.mismatches() > 0)
    throw StrictFailure(std::to_string(report.mismatches()) + " cells differ");
  return 0;
}

// ------------------------------------------------------------------- toric

std::string canonical_label(const std::string& label) { return label == "g-empty" ? "g()" : label; }

const GenElement& find_element(const std::vector<GenElement>& family, const std::string& label) {
  const std::string want = canonical_label(label);
  for (const auto& g : family)
    if (g.label == want) return g;
  throw UsageError("no family element '" + label + "' (labels look like g2, g-empty, g(1,2))");
}

Monomial parse_target(const std::string& text) {
  std::vector<int> idx;
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    factor.erase(std::remove(factor.begin(), factor.end(), ' '), factor.end());
    if (factor == "1") continue;
    if (factor.size() < 2 || factor[0] != 'x') throw ParseError("bad monomial factor '" + factor + "'");
    const auto caret = factor.find('^');
    try {
      const int var = std::stoi(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
      const int power = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
      if (var < 1 || power < 0) throw ParseError("bad monomial factor '" + factor + "'");
      idx.insert(idx.end(), static_cast<std::size_t>(power), var);
    } catch (const std::logic_error&) {
      throw ParseError("bad monomial factor '" + factor + "'");
    }
  }
  return Monomial::from_indices(idx);
}

ToricMap select_map(const std::string& name, unsigned c) {
  if (name == "gap") return ToricMap::gap();
  if (name == "window-squares") return ToricMap::window_squares(c);
  throw UsageError("unknown map '" + name + "' (expected gap or window-squares)");
}

NameStyle parse_style(const std::string& s) { return s == "indexed" ? NameStyle::Indexed : NameStyle::Edge; }

int cmd_gens(unsigned dmax, const std::string& style_text, const Common& common, std::ostream& out) {
  check_cap(common, "--dmax", dmax > 10 ? dmax - 10 : 0);  // family listing is cheap; cap at 20
  const NameStyle style = parse_style(style_text);
  const auto family = build_gen_family(dmax);
  const auto census = degree_census(family);
  bool all_ok = true;
  json results = json::array();
  for (const auto& g : family) {
    const bool kernel = kernel_test(g.binomial), shape = structure_check(g);
    all_ok = all_ok && kernel && shape;
    if (common.format == "json")
      results.push_back({{"label", g.label},
                         {"degree", g.degree()},
                         {"binomial", g.binomial.to_string(style)},
                         {"kernel", kernel},
                         {"structure", shape}});
    else
      out << g.label << "  degree " << g.degree() << "  " << g.binomial.to_string(style) << "  kernel "
          << (kernel ? "yes" : "NO") << "  structure " << (shape ? "yes" : "NO") << '\n';
  }
  json census_json = json::object();
  for (const auto& [d, k] : census) census_json[std::to_string(d)] = k;
  if (common.format == "json") {
    results.push_back({{"census", census_json}});
    write_json(out, "toric gens", {{"dmax", dmax}}, std::move(results));
  } else {
    out << "census:";
    for (const auto& [d, k] : census) out << ' ' << d << ':' << k;
    out << '\n';
  }
  if (common.strict && !all_ok) throw StrictFailure("a family element failed kernel or structure checks");
  return 0;
}

struct FiberOptions {
  std::string map = "gap";
  unsigned c = 1;
  unsigned n = 6;
  std::string target;
  std::string target_of;
  std::vector<std::string> exclude;
  unsigned dmax = 4;
  std::string style = "edge";
};

std::vector<Binomial> fiber_moves(const FiberOptions& o, const ToricMap& map, unsigned move_degree) {
  std::vector<Binomial> base;
  if (o.map == "gap") {
    std::vector<std::string> excluded;
    for (const auto& e : o.exclude) excluded.push_back(canonical_label(e));
    for (const auto& g : build_gen_family(std::max(move_degree, 2u)))
      if (std::find(excluded.begin(), excluded.end(), g.label) == excluded.end()) base.push_back(g.binomial);
  } else {
    if (!o.exclude.empty()) throw UsageError("--exclude only applies to the gap map");
    base = quadric_family(o.c, static_cast<int>(o.n));
  }
  return window_moves(base, map, static_cast<int>(o.n));
}

int cmd_fibers(const FiberOptions& o, const Common& common, std::ostream& out) {
  check_cap(common, "--n", o.n);
  check_cap(common, "--dmax", o.dmax);
  const ToricMap map = select_map(o.map, o.c);
  const NameStyle style = parse_style(o.style);
  json params{{"map", o.map}, {"n", o.n}, {"exclude", o.exclude}};
  if (o.map == "window-squares") params["c"] = o.c;

  std::optional<Monomial> target;
  if (!o.target_of.empty()) {
    const auto family = build_gen_family(2 * o.n);
    target = presentation_image(find_element(family, o.target_of).binomial.head, map, static_cast<int>(o.n));
    params["target_of"] = o.target_of;
  } else if (!o.target.empty()) {
    target = parse_target(o.target);
  }

  if (target) {
    const auto graph = fiber_connected(map, static_cast<int>(o.n), *target, fiber_moves(o, map, target->degree() / 2));
    if (common.format == "json") {
      write_json(out, "toric fibers", params, json::array({fiber_report(graph, style)}));
    } else {
      out << "target: " << graph.target.to_string() << '\n'
          << "fiber size: " << graph.members.size() << '\n'
          << "components: " << graph.components.size() << '\n'
          << "moves used: " << graph.moves_used << '\n'
          << "connected: " << (graph.connected() ? "yes" : "no") << '\n';
      for (std::size_t k = 0; k < graph.components.size(); ++k) {
        out << "  component " << k + 1 << ":";
        for (std::size_t i : graph.components[k]) out << ' ' << graph.members[i].to_string(style);
        out << '\n';
      }
    }
    if (common.strict && !graph.connected()) throw StrictFailure("fiber is disconnected");
    return 0;
  }

  params["dmax"] = o.dmax;
  const auto sweep = fiber_sweep(map, static_cast<int>(o.n), o.dmax, fiber_moves(o, map, o.dmax));
  if (common.format == "json") {
    json r{{"fibers", sweep.fibers}, {"disconnected", sweep.disconnected}};
    if (sweep.first_disconnected) r["first_disconnected"] = sweep.first_disconnected->to_string();
    write_json(out, "toric fibers", params, json::array({r}));
  } else {
    out << "fibers checked: " << sweep.fibers << '\n' << "disconnected: " << sweep.disconnected << '\n';
    if (sweep.first_disconnected) out << "first disconnected: " << sweep.first_disconnected->to_string() << '\n';
  }
  if (common.strict && !sweep.all_connected()) throw StrictFailure("some fibers are disconnected");
  return 0;
}

int cmd_reduce(const std::string& text, const std::string& map_name, unsigned c, const std::string& moves_name,
               const std::string& style_text, const Common& common, std::ostream& out) {
  const Binomial h = parse_binomial(text);
  const NameStyle style = parse_style(style_text);
  std::vector<Binomial> moves;
  const std::string which = moves_name.empty() ? (map_name == "gap" ? "family" : "quadrics") : moves_name;
  if (which == "g2") {
    moves = {quadratic_generator()};
  } else if (which == "family") {
    for (const auto& g : build_gen_family(std::max(h.degree(), 2u))) moves.push_back(g.binomial);
  } else if (which == "quadrics") {
    moves = quadric_family(c, std::max(h.max_vertex(), 1));
  } else {
    throw UsageError("unknown move set '" + which + "' (expected g2, family or quadrics)");
  }
  const Binomial rest = reduce_binomial(h, moves);
  const std::string shown = rest.is_zero() ? "0" : rest.to_string(style);
  if (common.format == "json")
    write_json(out, "toric reduce", {{"binomial", text}, {"map", map_name}, {"moves", which}},
               json::array({{{"remainder", shown}, {"reduced", rest.is_zero()}}}));
  else
    out << "remainder: " << shown << '\n';
  if (common.strict && !rest.is_zero()) throw StrictFailure("binomial does not reduce to zero");
  return 0;
}

int cmd_degree_stats(unsigned nmin, unsigned nmax, bool profile, const Common& common, std::ostream& out) {
  if (nmin < 6) throw UsageError("degree stats need n >= 6");
  if (nmax < nmin) nmax = nmin;
  if (profile) check_cap(common, "--nmax (with --profile)", nmax);
  json results = json::array();
  bool all = true;
  if (common.format != "json") out << "n,computed,formula,agrees,witness" << (profile ? ",fiber_max" : "") << '\n';
  for (unsigned n = nmin; n <= nmax; ++n) {
    const auto st = gen_degree_stats(static_cast<int>(n));
    all = all && st.agrees();
    std::optional<unsigned> fiber_max;
    if (profile) {
      const auto degrees = minimal_generator_degrees(ToricMap::gap(), static_cast<int>(n), std::max(st.computed, st.formula));
      fiber_max = degrees.empty() ? 0 : degrees.rbegin()->first;
    }
    if (common.format == "json") {
      json r{{"cell", {{"n", n}}}, {"computed", st.computed}, {"formula", st.formula}, {"equal", st.agrees()},
             {"witness", st.witness}};
      if (fiber_max) r["fiber_max"] = *fiber_max;
      results.push_back(std::move(r));
    } else {
      out << n << ',' << st.computed << ',' << st.formula << ',' << (st.agrees() ? "yes" : "NO") << ',' << st.witness;
      if (fiber_max) out << ',' << *fiber_max;
      out << '\n';
    }
  }
  if (common.format == "json") write_json(out, "toric degree-stats", {{"nmin", nmin}, {"nmax", nmax}}, std::move(results));
  if (common.strict && !all) throw StrictFailure("computed maximum degree differs from the formula");
  return 0;
}

// ------------------------------------------------------------------ export

int cmd_export(const std::string& selector, unsigned c, bool as_printed, bool canonical, std::ostream& out) {
  if (selector == "gap-automaton" || selector == "gap") {
    out << to_dot(canonical ? lang_gap().dfa : gap_automaton(), "gap");
  } else if (selector == "window-squares") {
    const std::string name = selector + "-" + std::to_string(c);
    if (canonical) out << to_dot(lang_window_squares(c).dfa, name);
    else out << to_dot(as_printed ? window_squares_printed_automaton(c) : window_squares_automaton(c), name);
  } else if (selector == "poly-ring") {
    out << to_dot(canonical ? lang_poly_ring(c).dfa : poly_ring_automaton(c), selector + "-" + std::to_string(c));
  } else {
    throw UsageError("unknown automaton '" + selector + "' (expected gap-automaton, window-squares or poly-ring)");
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant Hilbert series of shift-invariant monomial algebras via regular languages", "eqhilb"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", common.format, "output format")->check(CLI::IsMember(formats));
    sub->add_flag("--strict", common.strict, "exit 1 when a reported comparison fails");
    sub->add_flag("--unsafe", common.unsafe, "lift the d, n <= 10 caps");
  };

  LanguageOptions lo;
  std::optional<unsigned> truncate;
  auto* series = app.add_subcommand("series", "rational equivariant series of a language");
  series->add_option("language", lo.selector, "poly-ring | window-squares | gap | segre | concat | ideal-gap")->required();
  series->add_option("--c", lo.c, "window parameter");
  series->add_option("--left", lo.left, "first factor for segre/concat, e.g. poly-ring:1");
  series->add_option("--right", lo.right, "second factor for segre/concat, e.g. gap");
  series->add_flag("--as-printed", lo.as_printed, "use the printed window-squares automaton");
  series->add_option("--truncate", truncate, "also print the counts up to this bound and check them");
  add_common(series, {"text", "json"});

  std::string family = "gap", conv = "string-bounded";
  unsigned c = 1, dmax = 6, nmax = 6;
  auto* compare = app.add_subcommand("compare", "language counts against monomial enumeration");
  compare->add_option("family", family, "poly-ring | window-squares | gap")->required();
  compare->add_option("--c", c, "window parameter");
  compare->add_option("--conv", conv, "algebra | string-bounded");
  compare->add_option("--dmax", dmax);
  compare->add_option("--nmax", nmax);
  add_common(compare, {"text", "json"});

  auto* counts = app.add_subcommand("counts", "automaton word counts as CSV");
  counts->add_option("language", lo.selector)->required();
  counts->add_option("--c", lo.c);
  counts->add_option("--left", lo.left);
  counts->add_option("--right", lo.right);
  counts->add_option("--dmax", dmax);
  counts->add_option("--nmax", nmax, "bound on every tau count");
  add_common(counts, {"csv", "json"});

  auto* oracle = app.add_subcommand("oracle", "monomial counts as CSV");
  oracle->add_option("family", family)->required();
  oracle->add_option("--c", c);
  oracle->add_option("--conv", conv);
  oracle->add_option("--dmax", dmax);
  oracle->add_option("--nmax", nmax);
  add_common(oracle, {"csv", "json"});

  auto* toric = app.add_subcommand("toric", "presentation ideal tools");
  toric->require_subcommand(1);
  unsigned gens_dmax = 8;
  std::string style = "edge";
  auto* gens = toric->add_subcommand("gens", "the recursive generator family with census");
  gens->add_option("--dmax", gens_dmax);
  gens->add_option("--style", style)->check(CLI::IsMember({"edge", "indexed"}));
  add_common(gens, {"text", "json"});

  FiberOptions fo;
  auto* fibers = toric->add_subcommand("fibers", "fiber connectivity under family or quadric moves");
  fibers->add_option("--map", fo.map, "gap | window-squares");
  fibers->add_option("--c", fo.c);
  fibers->add_option("--n", fo.n);
  fibers->add_option("--target", fo.target, "x-monomial, e.g. x1*x2^2*x3");
  fibers->add_option("--target-of", fo.target_of, "family element whose head gives the target");
  fibers->add_option("--exclude", fo.exclude, "family elements to drop from the moves");
  fibers->add_option("--dmax", fo.dmax, "sweep bound when no target is given");
  fibers->add_option("--style", fo.style)->check(CLI::IsMember({"edge", "indexed"}));
  add_common(fibers, {"text", "json"});

  std::string binomial, map_name = "gap", moves;
  auto* reduce = toric->add_subcommand("reduce", "reduce a kernel binomial by moves");
  reduce->add_option("binomial", binomial, "e.g. \"x[1,2]*x[3,4] - x[1,3]*x[2,4]\"")->required();
  reduce->add_option("--map", map_name);
  reduce->add_option("--c", c);
  reduce->add_option("--moves", moves, "g2 | family | quadrics");
  reduce->add_option("--style", style)->check(CLI::IsMember({"edge", "indexed"}));
  add_common(reduce, {"text", "json"});

  unsigned stats_n = 0, stats_nmin = 6, stats_nmax = 15;
  bool profile = false;
  auto* stats = toric->add_subcommand("degree-stats", "max generator degree per window against the formula");
  stats->add_option("--n", stats_n);
  stats->add_option("--nmin", stats_nmin);
  stats->add_option("--nmax", stats_nmax);
  stats->add_flag("--profile", profile, "add the max minimal-generator degree computed from fibers");
  add_common(stats, {"text", "json"});

  std::string automaton;
  bool as_printed = false, canonical = false;
  auto* exp = app.add_subcommand("export", "DOT for the hand-built automata");
  exp->add_option("automaton", automaton, "gap-automaton | window-squares | poly-ring")->required();
  exp->add_option("--c", c);
  exp->add_flag("--as-printed", as_printed, "printed acceptance set (window-squares)");
  exp->add_flag("--canonical", canonical, "minimal automaton instead of the hand-built one");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*series) return cmd_series(lo, truncate, common, out);
    if (*compare) return cmd_compare(family, c, conv, dmax, nmax, common, out);
    if (*counts) {
      check_cap(common, "--dmax", dmax);
      check_cap(common, "--nmax", nmax);
      const auto lang = select_language(lo);
      write_table(out, dp_count(lang.dfa, dmax, nmax), common.format, "counts", language_params(lo));
      return 0;
    }
    if (*oracle) {
      check_cap(common, "--dmax", dmax);
      check_cap(common, "--nmax", nmax);
      const Convention cv = parse_convention(conv);
      write_table(out, hilbert_counts(family_for(family, c), nmax, dmax, cv), common.format, "oracle",
                  {{"family", family}, {"c", c}, {"conv", convention_name(cv)}});
      return 0;
    }
    if (*gens) return cmd_gens(gens_dmax, style, common, out);
    if (*fibers) return cmd_fibers(fo, common, out);
    if (*reduce) return cmd_reduce(binomial, map_name, c, moves, style, common, out);
    if (*stats) {
      if (stats_n) stats_nmin = stats_nmax = stats_n;
      return cmd_degree_stats(stats_nmin, stats_nmax, profile, common, out);
    }
    if (*exp) return cmd_export(automaton, c, as_printed, canonical, out);
  } catch (const StrictFailure& e) {
    err << "strict: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace eqhilb
