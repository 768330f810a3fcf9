#include "cli/cli.hpp"

#include "cli/emit.hpp"
#include "cli/verify.hpp"
#include "symcurv/errors.hpp"
#include "symcurv/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace symcurv::cli {
namespace {

struct InvalidArguments : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Selector {
  std::string label;
  std::optional<int> n, p, q;
  std::string type;
};

struct Options {
  std::string format = "markdown";
  CatalogLimits limits;
  std::string family;
  Selector sel;
  std::string criterion = "both";
  std::string lie_type;
  std::string expectations;
};

std::size_t output_width() {
  const char* env = std::getenv("SYMCURV_OUTPUT_WIDTH");
  if (!env || !*env) return 80;
  try {
    return static_cast<std::size_t>(std::stoul(env));
  } catch (const std::exception&) {
    return 80;
  }
}

// "GROUP(G2)" or "GROUP" plus --type.
SpaceSpec select(const Selector& s) {
  std::string text = s.label;
  std::string type = s.type;
  if (auto open = text.find('('); open != std::string::npos) {
    if (text.back() != ')') throw InvalidArguments("malformed label '" + text + "'");
    if (!type.empty()) throw InvalidArguments("--type given twice");
    type = text.substr(open + 1, text.size() - open - 2);
    text = text.substr(0, open);
  }
  Label label = parse_label(text);
  bool has_pq = s.p || s.q;
  if (label == Label::Group) {
    if (type.empty()) throw InvalidArguments("GROUP needs a Lie type, e.g. GROUP(G2) or --type G2");
    if (s.n || has_pq) throw InvalidArguments("GROUP takes no --n, --p or --q");
    return resolve_group(LieType::parse(type));
  }
  if (!type.empty()) throw InvalidArguments("--type applies only to GROUP");
  if (!is_parametric(label)) {
    if (s.n || has_pq) throw InvalidArguments(label_name(label) + " takes no parameters");
    return resolve(label);
  }
  if (is_pq_family(label)) {
    if (s.n) throw InvalidArguments(label_name(label) + " takes --p and --q, not --n");
    if (!s.p || !s.q) throw InvalidArguments(label_name(label) + " needs both --p and --q");
    return resolve(label, {*s.p, *s.q});
  }
  if (has_pq) throw InvalidArguments(label_name(label) + " takes --n, not --p/--q");
  if (!s.n) throw InvalidArguments(label_name(label) + " needs --n");
  return resolve(label, {*s.n});
}

std::vector<Criterion> criteria(const std::string& c) {
  if (c == "conservative") return {Criterion::Conservative};
  if (c == "relaxed") return {Criterion::Relaxed};
  return {Criterion::Conservative, Criterion::Relaxed};
}

std::string join_roots(const std::vector<Root>& rs) {
  std::string out;
  for (const Root& r : rs) out += (out.empty() ? "" : ", ") + to_string(r);
  return out;
}

std::string verdict_text(const SampsonVerdict& v) {
  return std::string(v.passes ? "pass" : "fail") + " (margin " + v.margin.str() + ")";
}

void cmd_table(const Options& o, Format f, std::ostream& out) {
  std::vector<TableRow> rows = curvature_table(o.limits);
  if (!o.family.empty()) {
    std::string fam = o.family;
    std::erase_if(rows, [&](const TableRow& r) {
      return r.type != fam && label_name(r.space.label) != fam;
    });
  }
  out << emit_table(rows, f);
}

void cmd_bound(const Options& o, Format f, std::ostream& out) {
  CurvatureReport rep = curvature_report(select(o.sel));
  if (f == Format::Json) {
    nlohmann::json j = to_json(rep);
    j["compact_type"] = rep.space.space_name();
    j["bound_formula"] = rep.space.bound_formula;
    out << j.dump(2) << '\n';
    return;
  }
  auto cons = sampson_check(rep, Criterion::Conservative);
  auto rel = sampson_check(rep, Criterion::Relaxed);
  TextTable t{{"field", "value"}, {"field", "value"}, {}};
  auto add = [&](std::string k, std::string v) { t.rows.push_back({std::move(k), std::move(v)}); };
  add("space", rep.space.name());
  add("compact type", rep.space.space_name());
  add("Lie type", rep.space.lie_type.name());
  add("case", case_tag_name(rep.restricted.rule));
  add("rank", std::to_string(rep.rank));
  add("dimension", std::to_string(rep.dim));
  add("bound", rep.upper_bound.str());
  add("closed form", rep.space.bound_formula);
  add("lower bound", rep.lower_bound ? rep.lower_bound->str() : "NOT_COMPUTED");
  add("dual curvature", "[" + rep.dual_lower_bound().str() + ", 0]");
  add("dual Ricci", rep.dual_ricci().str());
  add("argmax root", to_string(rep.restricted.argmax_root));
  if (!rep.restricted.gammas.empty()) add("gammas", join_roots(rep.restricted.gammas));
  add("conservative", verdict_text(cons));
  add("relaxed", verdict_text(rel));
  out << render(t, f);
  if (f == Format::Markdown && !rep.notes.empty()) {
    out << '\n';
    std::size_t width = output_width();
    for (const std::string& n : rep.notes) {
      auto lines = wrap(n, width > 2 ? width - 2 : 0);
      for (std::size_t i = 0; i < lines.size(); ++i) out << (i ? "  " : "- ") << lines[i] << '\n';
    }
  }
}

void cmd_thresholds(const Options& o, Label family, Format f, std::ostream& out) {
  std::vector<Threshold> all;
  for (Criterion c : criteria(o.criterion)) {
    auto ts = sampson_thresholds(family, c, o.limits);
    all.insert(all.end(), ts.begin(), ts.end());
  }
  if (f == Format::Json) {
    auto arr = nlohmann::json::array();
    for (const Threshold& t : all) {
      arr.push_back({{"family", label_name(t.family)},
                     {"rank_class", rank_class_name(t.rank_class)},
                     {"criterion", criterion_name(t.criterion)},
                     {"parameter", t.parameter},
                     {"minimal", t.minimal ? nlohmann::json(*t.minimal) : nlohmann::json(nullptr)},
                     {"swept", {t.first_value, t.last_value}}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  TextTable t{{"family", "rank class", "criterion", "parameter", "minimal", "swept"},
              {"family", "rank_class", "criterion", "parameter", "minimal", "swept"},
              {}};
  for (const Threshold& th : all) {
    t.rows.push_back({label_name(th.family), rank_class_name(th.rank_class), criterion_name(th.criterion),
                      th.parameter, th.minimal ? std::to_string(*th.minimal) : "none",
                      std::to_string(th.first_value) + ".." + std::to_string(th.last_value)});
  }
  out << render(t, f);
}

void cmd_sampson(const Options& o, Format f, std::ostream& out) {
  const Selector& s = o.sel;
  if (s.type.empty() && !s.n && !s.p && !s.q && s.label.find('(') == std::string::npos) {
    Label l = parse_label(s.label);
    if (is_parametric(l)) {
      cmd_thresholds(o, l, f, out);
      return;
    }
  }
  CurvatureReport rep = curvature_report(select(s));
  std::vector<SampsonVerdict> vs;
  for (Criterion c : criteria(o.criterion)) vs.push_back(sampson_check(rep, c));
  auto cons = sampson_check(rep, Criterion::Conservative);
  auto rel = sampson_check(rep, Criterion::Relaxed);
  bool disagree = cons.passes != rel.passes;
  if (f == Format::Json) {
    auto arr = nlohmann::json::array();
    for (const auto& v : vs) arr.push_back(to_json(v));
    nlohmann::json j{{"space", rep.space.name()}, {"verdicts", arr}, {"criteria_agree", !disagree}};
    out << j.dump(2) << '\n';
    return;
  }
  TextTable t{{"space", "criterion", "a^2", "b^2", "result", "margin"},
              {"space", "criterion", "a_sq", "b_sq", "passes", "margin"},
              {}};
  for (const auto& v : vs) {
    t.rows.push_back({rep.space.name(), criterion_name(v.criterion), v.a_sq.str(), v.b_sq.str(),
                      v.passes ? "pass" : "fail", v.margin.str()});
  }
  out << render(t, f);
  if (f == Format::Markdown && disagree) {
    out << "\nThe criteria disagree: " << (cons.passes ? "passes" : "fails") << " b >= 2a, "
        << (rel.passes ? "passes" : "fails") << " b >= sqrt(2) a.\n";
  }
}

void cmd_roots(const Options& o, Format f, std::ostream& out) {
  RootSystem rs(LieType::parse(o.lie_type));
  const auto& roots = rs.positive_roots();
  if (f == Format::Json) {
    out << roots_to_json(roots).dump() << '\n';
    return;
  }
  TextTable t{{"#", "height", "root", "coefficients", "length"}, {"index", "height", "root", "coefficients", "length"}, {}};
  for (std::size_t k = 0; k < roots.size(); ++k) {
    std::string coeffs;
    for (int c : roots[k].coeffs) coeffs += (coeffs.empty() ? "" : " ") + std::to_string(c);
    t.rows.push_back({std::to_string(k + 1), std::to_string(roots[k].height()), to_string(roots[k]), coeffs,
                      rs.sq_length(roots[k]).str()});
  }
  out << render(t, f);
}

bool cmd_verify(const Options& o, Format f, std::ostream& out) {
  std::optional<Expectations> loaded;
  if (!o.expectations.empty()) {
    std::ifstream in(o.expectations);
    if (!in) throw InvalidArguments("cannot read " + o.expectations);
    std::ostringstream buf;
    buf << in.rdbuf();
    loaded = parse_expectations(buf.str());
  }
  const Expectations& e = loaded ? *loaded : embedded_expectations();
  auto results = verify_all(e);
  int passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  bool ok = passed == static_cast<int>(results.size());
  if (f == Format::Json) {
    auto arr = nlohmann::json::array();
    for (const auto& r : results) {
      arr.push_back({{"id", r.id}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    out << nlohmann::json{{"passed", ok}, {"checks", arr}}.dump(2) << '\n';
    return ok;
  }
  TextTable t{{"#", "check", "result", "detail"}, {"id", "check", "result", "detail"}, {}};
  for (const auto& r : results) {
    t.rows.push_back({std::to_string(r.id), r.name, r.passed ? "PASS" : "FAIL", r.detail});
  }
  out << render(t, f);
  if (f == Format::Markdown) out << '\n' << passed << '/' << results.size() << " checks passed\n";
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact curvature bounds of compact symmetric spaces", "symcurv"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"markdown", "csv", "json"};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-n", o.limits.max_n, "Largest n in the sweep")->check(CLI::PositiveNumber);
    sub->add_option("--max-pq", o.limits.max_pq, "Largest p+q in the sweep")->check(CLI::PositiveNumber);
  };
  auto add_selector = [&](CLI::App* sub) {
    sub->add_option("label", o.sel.label, "Family label, e.g. AIII, EIV, GROUP(G2)")->required();
    auto* n = sub->add_option("--n", o.sel.n, "Family parameter n");
    auto* p = sub->add_option("--p", o.sel.p, "Family parameter p");
    auto* q = sub->add_option("--q", o.sel.q, "Family parameter q");
    n->excludes(p)->excludes(q);
    sub->add_option("--type", o.sel.type, "Lie type for GROUP");
  };

  auto* table = app.add_subcommand("table", "Curvature table over the sweep");
  add_limits(table);
  table->add_option("--family", o.family, "Keep only rows of this family");
  add_format(table);

  auto* bound = app.add_subcommand("bound", "Curvature report of one space");
  add_selector(bound);
  add_format(bound);

  auto* sampson = app.add_subcommand("sampson", "Sampson criteria for one space, or thresholds of a family");
  add_selector(sampson);
  sampson->add_option("--criterion", o.criterion, "conservative, relaxed or both")
      ->check(CLI::IsMember({"conservative", "relaxed", "both"}));
  add_limits(sampson);
  add_format(sampson);

  auto* roots = app.add_subcommand("roots", "Positive roots of a simple Lie type");
  roots->add_option("lie_type", o.lie_type, "e.g. E6, F4, G2")->required();
  add_format(roots);

  auto* verify = app.add_subcommand("verify", "Check the reference expectations");
  verify->add_option("--expectations", o.expectations, "Expectations JSON (default: embedded copy)");
  add_format(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalidArguments;
  }

  try {
    Format f = parse_format(o.format);
    if (table->parsed()) cmd_table(o, f, out);
    if (bound->parsed()) cmd_bound(o, f, out);
    if (sampson->parsed()) cmd_sampson(o, f, out);
    if (roots->parsed()) cmd_roots(o, f, out);
    if (verify->parsed() && !cmd_verify(o, f, out)) return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "symcurv: " << e.what() << '\n';
    return kExitInvalidArguments;
  }
  return kExitOk;
}

}  // namespace symcurv::cli
