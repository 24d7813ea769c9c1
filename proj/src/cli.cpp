#include "pseudoknot/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <cctype>
#include <optional>
#include <ostream>

#include "pseudoknot/conway.hpp"
#include "pseudoknot/determinant.hpp"
#include "pseudoknot/homotopy.hpp"
#include "pseudoknot/invariants.hpp"
#include "pseudoknot/table.hpp"
#include "pseudoknot/unknotting.hpp"

namespace pk {

namespace {

using nlohmann::json;

struct Options {
  std::optional<std::size_t> max_chords;
  std::size_t max_states = 100000;
  bool json = false;
  bool trace = false;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string bound(std::size_t v) { return v == kInfinity ? "inf" : std::to_string(v); }

json bound_json(std::size_t v) { return v == kInfinity ? json("inf") : json(v); }

json path_json(const MovePath& p) {
  json moves = json::array();
  for (const auto& m : p.moves) moves.push_back(format_move(m));
  return moves;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err, const Options& o) : out_(out), err_(err), o_(o) {}

  SearchBudget budget(std::size_t chords) const {
    SearchBudget b{o_.max_chords.value_or(chords + 2), o_.max_states};
    err_ << "budget: max_chords=" << b.max_chords << " max_states=" << b.max_states << '\n';
    return b;
  }

  void emit(const json& j, const std::string& text) {
    if (o_.json) out_ << j.dump() << '\n';
    else out_ << text << '\n';
  }

  void emit_trace(const MovePath& p) {
    if (o_.trace && !o_.json) out_ << p.trace();
  }

  int parse(const std::string& input) {
    auto d = read_diagram(input);
    auto code = canonical_code(d);
    emit({{"canonical", code}, {"chords", d.chord_count()}, {"precrossings", d.precrossing_count()}}, code);
    return kExitAffirmative;
  }

  int inv(const std::string& map, const std::string& input) {
    auto d = read_diagram(input);
    auto value = canonical_decorated(map == "I" ? compute_I(d) : compute_Ih(d));
    emit({{"map", map}, {"value", value}}, value);
    return kExitAffirmative;
  }

  int conway(const std::string& expr, bool gauss) {
    auto e = parse_conway(expr);
    auto p = build_pseudodiagram(e);
    auto d = pd_to_gauss(p);
    auto code = format_gauss_code(d);
    json j{{"conway", format_conway(e)}, {"vertices", p.vertex_count()}, {"gauss", code},
           {"realizable", is_realizable(d)}};
    emit(j, gauss ? code : format_conway(e) + " : " + std::to_string(p.vertex_count()) + " vertices");
    return kExitAffirmative;
  }

  int equiv(const std::string& a_text, const std::string& b_text) {
    auto a = read_diagram(a_text), b = read_diagram(b_text);
    auto ia = canonical_decorated(compute_I(a)), ib = canonical_decorated(compute_I(b));
    auto bud = budget(std::max(a.chord_count(), b.chord_count()));
    if (ia != ib) {
      emit({{"result", "inequivalent"}, {"I_a", ia}, {"I_b", ib}}, "inequivalent (I differs)");
      return kExitNegative;
    }
    auto r = equivalent_bounded(a, b, bud);
    if (r.equivalent()) {
      emit({{"result", "equivalent"}, {"moves", path_json(*r.path)}, {"states", r.stats.states_visited}},
           "equivalent (" + std::to_string(r.path->size()) + " moves)");
      emit_trace(*r.path);
      return kExitAffirmative;
    }
    emit({{"result", "unknown"}, {"states", r.stats.states_visited}}, "unknown (not within budget)");
    return kExitUnknown;
  }

  int homotopy(const std::string& a_text, const std::string& b_text) {
    auto a = read_diagram(a_text), b = read_diagram(b_text);
    auto r = homotopy_equivalent_bounded(a, b, budget(std::max(a.chord_count(), b.chord_count())));
    if (r.obstructed()) {
      emit({{"result", "not_homotopic"}, {"Ih_a", r.ih_a}, {"Ih_b", r.ih_b}},
           "not homotopic (Ih \"" + r.ih_a + "\" vs \"" + r.ih_b + "\")");
      return kExitNegative;
    }
    if (r.homotopic()) {
      emit({{"result", "homotopic"}, {"moves", path_json(*r.path)}, {"states", r.stats.states_visited}},
           "homotopic (" + std::to_string(r.path->size()) + " moves)");
      emit_trace(*r.path);
      return kExitAffirmative;
    }
    emit({{"result", "unknown"}, {"states", r.stats.states_visited}}, "unknown (not within budget)");
    return kExitUnknown;
  }

  int certify(const std::string& input) {
    auto d = read_diagram(input);
    auto c = nontrivial_certificate(d, budget(d.chord_count()));
    json j{{"verdict", verdict_name(c.verdict)}};
    std::string text = verdict_name(c.verdict);
    if (!c.invariant.empty()) {
      j["invariant"] = c.invariant;
      text += " \"" + c.invariant + "\"";
    }
    if (c.verdict == Verdict::nontrivial_by_resolution_det) {
      j["resolution_signs"] = c.resolution_signs;
      j["determinant"] = c.resolution_determinant;
      text += " det=" + std::to_string(c.resolution_determinant);
    }
    if (c.path) j["moves"] = path_json(*c.path);
    emit(j, text);
    if (c.path) emit_trace(*c.path);
    if (c.trivial()) return kExitAffirmative;
    return c.nontrivial() ? kExitNegative : kExitUnknown;
  }

  int unknot(const std::string& input, bool fixed, std::size_t limit) {
    auto d = read_diagram(input);
    UnknottingResult r;
    if (fixed) {
      r = unknotting_fixed(d, limit, budget(d.chord_count()));
    } else {
      SearchBudget b = budget(d.chord_count());
      r = u_jb(d, limit, {b.max_chords - std::min(b.max_chords, d.chord_count()), b.max_states});
    }
    std::string text = r.exact() ? bound(r.upper) : "[" + bound(r.lower) + ", " + bound(r.upper) + "]";
    json steps = json::array();
    for (const auto& s : r.witness)
      steps.push_back({{"diagram", format_gauss_code(s.before)},
                       {"chord", s.chord},
                       {"result", format_gauss_code(s.after())},
                       {"moves", path_json(s.simplification)}});
    emit({{"lower", bound_json(r.lower)}, {"upper", bound_json(r.upper)}, {"exact", r.exact()}, {"witness", steps}},
         text);
    if (o_.trace && !o_.json)
      for (const auto& s : r.witness) {
        out_ << "change " << s.chord << " in " << format_gauss_code(s.before) << '\n';
        out_ << s.simplification.trace();
      }
    if (r.exact()) return r.upper == kInfinity ? kExitNegative : kExitAffirmative;
    return kExitUnknown;
  }

  int realizable(const std::string& input) {
    bool r = is_realizable(read_diagram(input));
    emit({{"realizable", r}}, r ? "true" : "false");
    return r ? kExitAffirmative : kExitNegative;
  }

  int determinant_of(const std::string& input) {
    auto det = determinant(read_diagram(input));
    emit({{"determinant", det}}, std::to_string(det));
    return kExitAffirmative;
  }

  int table(const std::string& file, bool skip_ujb, std::size_t depth) {
    auto entries = load_table(file);
    VerifyOptions v;
    v.compute_ujb = !skip_ujb;
    v.depth_max = depth;
    v.budget.max_states = o_.max_states;
    err_ << "budget: extra_chords=" << v.budget.extra_chords << " max_states=" << v.budget.max_states << '\n';
    auto report = verify_table(entries, v);
    if (o_.json) {
      for (const auto& e : report.entries) {
        json j{{"name", e.entry.name}, {"conway", e.entry.conway}, {"expected", e.entry.expected},
               {"status", status_name(e.status)}, {"Ih", e.ih}, {"message", e.message}};
        if (e.ujb) j["ujb"] = {{"lower", bound_json(e.ujb->lower)}, {"upper", bound_json(e.ujb->upper)}};
        out_ << j.dump() << '\n';
      }
    } else {
      out_ << format_report(report);
    }
    if (report.count(EntryStatus::mismatch) || report.count(EntryStatus::error)) return kExitNegative;
    return report.count(EntryStatus::unknown) ? kExitUnknown : kExitAffirmative;
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  const Options& o_;
};

}  // namespace

GaussDiagram read_diagram(std::string_view text) {
  std::string t = trim(text);
  if (t.empty()) return GaussDiagram();
  if (t[0] == '(' || t[0] == '-' || std::isdigit(static_cast<unsigned char>(t[0]))) return conway_to_gauss(t);
  return parse_gauss_code(t);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudoknots as decorated Gauss diagrams", "pk"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-chords", o.max_chords, "Largest diagram a search may visit (default: input + 2)");
  app.add_option("--max-states", o.max_states, "Distinct diagrams a search may visit")->check(CLI::PositiveNumber);
  app.add_flag("--json", o.json, "One JSON object per result");
  app.add_flag("--trace", o.trace, "Print move paths");

  std::string input, second, map = "Ih", file;
  bool gauss = false, fixed = false, ujb = false, skip_ujb = false;
  std::size_t limit = 3;

  auto* parse = app.add_subcommand("parse", "Validate a diagram and print its canonical code");
  parse->add_option("diagram", input)->required();
  auto* inv = app.add_subcommand("inv", "Compute I or Ih");
  inv->add_option("--map", map)->check(CLI::IsMember({"I", "Ih"}));
  inv->add_option("diagram", input)->required();
  auto* conway = app.add_subcommand("conway", "Conway notation");
  auto* build = conway->add_subcommand("build", "Build the diagram of a Conway symbol");
  conway->require_subcommand(1);
  build->add_option("expr", input)->required();
  build->add_flag("--gauss", gauss, "Print the Gauss code");
  auto* equiv = app.add_subcommand("equiv", "Bounded search for a move path between two diagrams");
  equiv->add_option("a", input)->required();
  equiv->add_option("b", second)->required();
  auto* homotopy = app.add_subcommand("homotopy", "Like equiv, allowing crossing changes");
  homotopy->add_option("a", input)->required();
  homotopy->add_option("b", second)->required();
  auto* certify = app.add_subcommand("certify", "Certify triviality or nontriviality");
  certify->add_option("diagram", input)->required();
  auto* unknot = app.add_subcommand("unknot", "Unknotting number bounds");
  auto* mode = unknot->add_option_group("mode");
  mode->add_flag("--fixed", fixed, "Simultaneous changes in the fixed diagram");
  mode->add_flag("--ujb", ujb, "Bernhard-Jablan unknotting number");
  mode->require_option(1);
  unknot->add_option("--limit", limit, "Largest subset size (--fixed) or depth (--ujb)");
  unknot->add_option("diagram", input)->required();
  auto* realizable = app.add_subcommand("realizable", "Is the Gauss word planar");
  realizable->add_option("diagram", input)->required();
  auto* det = app.add_subcommand("determinant", "Knot determinant of a classical diagram");
  det->add_option("diagram", input)->required();
  auto* table = app.add_subcommand("table", "Fixture tables");
  auto* verify = table->add_subcommand("verify", "Check a fixture table");
  table->require_subcommand(1);
  verify->add_option("--file", file)->required();
  verify->add_flag("--skip-ujb", skip_ujb, "Only compute Ih");
  verify->add_option("--depth", limit, "u_JB depth limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  Runner r(out, err, o);
  try {
    if (*parse) return r.parse(input);
    if (*inv) return r.inv(map, input);
    if (*build) return r.conway(input, gauss);
    if (*equiv) return r.equiv(input, second);
    if (*homotopy) return r.homotopy(input, second);
    if (*certify) return r.certify(input);
    if (*unknot) return r.unknot(input, fixed, limit);
    if (*realizable) return r.realizable(input);
    if (*det) return r.determinant_of(input);
    if (*verify) return r.table(file, skip_ujb, limit);
  } catch (const BudgetInvalid& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitUsage;
}

}  // namespace pk
