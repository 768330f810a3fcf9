#include "cli/verify.hpp"

#include "symcurv/errors.hpp"
#include "symcurv/linalg.hpp"
#include "symcurv/restricted_roots.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iterator>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace symcurv::cli {
namespace {

using Clock = std::chrono::steady_clock;

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str() + ")";
}

// Collects failures; keeps the first message for the summary line.
class Tally {
 public:
  void fail(std::string msg) {
    if (failures_++ == 0) first_ = std::move(msg);
  }
  void ok() { ++checked_; }
  void expect(bool cond, const std::function<std::string()>& msg) {
    ++checked_;
    if (!cond) fail(msg());
  }
  bool passed() const { return failures_ == 0; }
  std::string summary(const std::string& what) const {
    if (failures_) return std::to_string(failures_) + " failure(s); first: " + first_;
    return std::to_string(checked_) + " " + what;
  }

 private:
  int checked_ = 0;
  int failures_ = 0;
  std::string first_;
};

struct Entry {
  SpaceSpec spec;
  std::optional<CurvatureReport> report;
  std::string error;
};

class Context {
 public:
  Context(const Expectations& e, const VerifyOptions& o) : exp(e), opts(o) {}

  const RootSystem& roots(LieType t) {
    auto it = cache_.find(t);
    if (it == cache_.end()) it = cache_.emplace(t, std::make_unique<RootSystem>(t)).first;
    return *it->second;
  }

  // The whole default sweep, computed once.
  std::vector<Entry>& entries() {
    if (!built_) {
      for (SpaceSpec& s : catalog(exp.sweep)) {
        Entry en{std::move(s), std::nullopt, {}};
        try {
          en.report = curvature_report(en.spec, roots(en.spec.lie_type));
        } catch (const Error& ex) {
          en.error = ex.what();
        }
        entries_.push_back(std::move(en));
      }
      built_ = true;
    }
    return entries_;
  }

  const Expectations& exp;
  const VerifyOptions& opts;

 private:
  std::map<LieType, std::unique_ptr<RootSystem>> cache_;
  std::vector<Entry> entries_;
  bool built_ = false;
};

bool type_one(const SpaceSpec& s) { return s.datum.tag != CaseTag::GroupManifold; }

CheckResult table_reproduction(Context& ctx) {
  Tally t;
  auto start = Clock::now();
  for (const Entry& en : ctx.entries()) {
    if (!type_one(en.spec)) continue;
    if (!en.report) {
      t.fail(en.error);
      continue;
    }
    Rational want = ctx.exp.expected_bound(en.spec);
    t.expect(en.report->upper_bound == want, [&] {
      return en.spec.name() + ": bound " + en.report->upper_bound.str() + " != " + want.str();
    });
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  t.expect(secs < ctx.opts.table_time_limit_seconds, [&] { return "sweep took " + std::to_string(secs) + " s"; });
  return {1, "table closed forms", t.passed(), t.summary("bounds equal their closed forms"), secs};
}

CheckResult root_lists(Context& ctx) {
  Tally t;
  for (const auto& [name, listed] : ctx.exp.root_lists) {
    const RootSystem& rs = ctx.roots(LieType::parse(name));
    std::set<std::vector<int>> want(listed.begin(), listed.end());
    t.expect(want.size() == listed.size(), [&] { return name + ": duplicate entries in the reference list"; });
    if (auto it = ctx.exp.errata.find(name); it != ctx.exp.errata.end()) {
      for (const Erratum& er : it->second) {
        t.expect(!rs.is_root(er.listed).has_value(), [&] { return name + ": listed " + join(er.listed) + " is a root"; });
        t.expect(want.erase(er.listed) == 1, [&] { return name + ": erratum " + join(er.listed) + " not in list"; });
        want.insert(er.corrected);
      }
    }
    std::set<std::vector<int>> got;
    for (const Root& r : rs.positive_roots()) got.insert(r.coeffs);
    t.expect(got == want, [&] {
      std::vector<std::vector<int>> extra, missing;
      std::ranges::set_difference(got, want, std::back_inserter(extra));
      std::ranges::set_difference(want, got, std::back_inserter(missing));
      return name + ": " + std::to_string(extra.size()) + " extra, " + std::to_string(missing.size()) + " missing" +
             (missing.empty() ? "" : ", e.g. " + join(missing.front()));
    });
  }
  return {2, "reference root lists", t.passed(), t.summary("root-list comparisons"), 0};
}

CheckResult killing_normalization(Context& ctx) {
  Tally t;
  for (LieType type : all_types_up_to(ctx.opts.normalization_max_rank)) {
    const RootSystem& rs = ctx.roots(type);
    const auto& pos = rs.positive_roots();
    for (const Root& a : pos) {
      for (const Root& signed_a : {a, -a}) {
        Rational s;
        for (const Root& b : pos) {
          int c = rs.cartan_integer(b, signed_a);
          s += Rational(c * c);
        }
        Rational lhs = rs.sq_length(signed_a) * s;
        t.expect(lhs == Rational(2), [&] { return type.name() + " " + to_string(signed_a) + ": " + lhs.str(); });
      }
    }
    std::size_t l = rs.rank();
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = i; j < l; ++j) {
        Root ai = Root::simple(l, i), aj = Root::simple(l, j);
        Rational s;
        for (const Root& b : pos) s += rs.inner(b, ai) * rs.inner(b, aj);
        t.expect(rs.inner(ai, aj) == Rational(2) * s, [&] {
          return type.name() + " trace identity at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        });
      }
    }
  }
  return {3, "Killing normalization", t.passed(), t.summary("identities"), 0};
}

bool has_oracle(CaseTag tag) {
  return tag == CaseTag::Inner || tag == CaseTag::SplitAI || tag == CaseTag::PureOuter ||
         tag == CaseTag::GroupManifold;
}

CheckResult oracle_equivalence(Context& ctx) {
  Tally t;
  for (const Entry& en : ctx.entries()) {
    if (!has_oracle(en.spec.datum.tag) || en.spec.lie_type.rank > ctx.opts.oracle_max_rank) continue;
    if (!en.report) {
      t.fail(en.error);
      continue;
    }
    Rational brute = brute_force_bound(en.spec, ctx.roots(en.spec.lie_type));
    t.expect(brute == en.report->restricted.max_sq_length, [&] {
      return en.spec.name() + ": exhaustive " + brute.str() + " != " + en.report->restricted.max_sq_length.str();
    });
  }
  return {4, "oracle equivalence", t.passed(), t.summary("entries agree with the exhaustive search"), 0};
}

CheckResult rank_dimension(Context& ctx) {
  Tally t;
  for (const Entry& en : ctx.entries()) {
    CaseTag tag = en.spec.datum.tag;
    if (tag != CaseTag::Inner && tag != CaseTag::SplitAI && tag != CaseTag::PureOuter) continue;
    if (!en.report) {
      // curvature_report refuses entries whose computed rank or dimension
      // disagrees with the metadata
      t.fail(en.error);
      continue;
    }
    const auto& res = en.report->restricted;
    int rank = ctx.exp.expected_rank(en.spec);
    t.expect(res.computed_rank == rank, [&] {
      return en.spec.name() + ": computed rank " + (res.computed_rank ? std::to_string(*res.computed_rank) : "none") +
             " != " + std::to_string(rank);
    });
    if (tag == CaseTag::Inner) {
      int dim = ctx.exp.expected_dim(en.spec);
      t.expect(res.computed_dim == dim, [&] {
        return en.spec.name() + ": 2|noncompact roots| = " +
               (res.computed_dim ? std::to_string(*res.computed_dim) : "none") + " != " + std::to_string(dim);
      });
    }
  }
  return {5, "rank and dimension", t.passed(), t.summary("rank/dimension comparisons"), 0};
}

CheckResult thresholds(Context& ctx) {
  Tally t;
  for (const ExpectedThreshold& want : ctx.exp.conservative) {
    auto got = sampson_thresholds(want.family, Criterion::Conservative, ctx.exp.sweep);
    auto it = std::ranges::find(got, want.rank_class, &Threshold::rank_class);
    std::string what = label_name(want.family) + " (" + rank_class_name(want.rank_class) + ")";
    if (it == got.end()) {
      t.fail(what + ": no threshold computed");
      continue;
    }
    t.expect(it->minimal == want.minimal, [&] {
      return what + ": minimal " + want.parameter + " " + (it->minimal ? std::to_string(*it->minimal) : "none") +
             " != " + std::to_string(want.minimal);
    });
  }
  auto report_of = [&](Label l) -> const Entry* {
    for (const Entry& en : ctx.entries()) {
      if (en.spec.label == l) return &en;
    }
    return nullptr;
  };
  for (Label l : ctx.exp.always_pass) {
    const Entry* en = report_of(l);
    if (!en || !en->report) {
      t.fail(label_name(l) + ": no report");
      continue;
    }
    t.expect(sampson_check(*en->report, Criterion::Conservative).passes,
             [&] { return label_name(l) + " fails the conservative criterion"; });
  }
  for (Label l : ctx.exp.relaxed_only) {
    const Entry* en = report_of(l);
    if (!en || !en->report) {
      t.fail(label_name(l) + ": no report");
      continue;
    }
    auto cons = sampson_check(*en->report, Criterion::Conservative);
    auto rel = sampson_check(*en->report, Criterion::Relaxed);
    t.expect(!cons.passes, [&] { return label_name(l) + " passes the conservative criterion"; });
    t.expect(rel.passes && rel.margin.is_zero(),
             [&] { return label_name(l) + ": relaxed margin " + rel.margin.str() + ", expected 0"; });
    bool flagged = std::ranges::any_of(en->report->notes, [](const std::string& n) {
      return n.find("sqrt(2)") != std::string::npos;
    });
    t.expect(flagged, [&] { return label_name(l) + ": report does not flag the criterion discrepancy"; });
  }
  return {6, "Sampson thresholds", t.passed(), t.summary("threshold checks"), 0};
}

CheckResult structural(Context& ctx) {
  Tally t;
  // bound per family, keyed by (p for pq families, else 0) then by the
  // increasing parameter
  std::map<std::pair<Label, int>, std::vector<std::pair<int, const SpaceSpec*>>> series;
  std::map<const SpaceSpec*, Rational> bounds;

  for (const Entry& en : ctx.entries()) {
    if (!en.report) {
      t.fail(en.error);
      continue;
    }
    const RootSystem& rs = ctx.roots(en.spec.lie_type);
    const auto& res = en.report->restricted;

    for (std::size_t i = 0; i < res.gammas.size(); ++i) {
      for (std::size_t j = i + 1; j < res.gammas.size(); ++j) {
        const Root& a = res.gammas[i];
        const Root& b = res.gammas[j];
        t.expect(rs.inner(a, b).is_zero() && strongly_orthogonal(rs, a, b), [&] {
          return en.spec.name() + ": " + to_string(a) + " and " + to_string(b) + " not strongly orthogonal";
        });
      }
    }

    std::size_t l = rs.rank();
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = i; j < l; ++j) {
        Root ai = Root::simple(l, i), aj = Root::simple(l, j);
        Root ti = theta0_on_root(en.spec.datum, ai), tj = theta0_on_root(en.spec.datum, aj);
        t.expect(rs.inner(ti, tj) == rs.inner(ai, aj),
                 [&] { return en.spec.name() + ": theta0 does not preserve the form"; });
      }
    }

    if (!res.gammas.empty() || !res.vector_basis.empty()) {
      std::vector<RatVector> basis;
      for (const Root& g : res.gammas) basis.push_back(to_rational(g.coeffs));
      basis.insert(basis.end(), res.vector_basis.begin(), res.vector_basis.end());
      Projector proj(basis, rs.gram());
      for (const Root& a : rs.positive_roots()) {
        Rational p = proj.sq_length(a.coeffs);
        Rational full = rs.sq_length(a);
        t.expect(p.sign() >= 0 && p <= full, [&] {
          return en.spec.name() + ": projection of " + to_string(a) + " has length " + p.str() + " > " + full.str();
        });
      }
    }

    if (is_parametric(en.spec.label)) {
      const auto& ps = en.spec.params;
      int key = ps.size() == 2 ? ps[0] : 0;
      int var = ps.size() == 2 ? ps[1] : ps[0];
      series[{en.spec.label, key}].push_back({var, &en.spec});
      bounds[&en.spec] = en.report->upper_bound;
    }
  }

  for (auto& [key, pts] : series) {
    std::ranges::sort(pts, {}, &std::pair<int, const SpaceSpec*>::first);
    for (std::size_t k = 1; k < pts.size(); ++k) {
      const SpaceSpec* prev = pts[k - 1].second;
      const SpaceSpec* cur = pts[k].second;
      t.expect(bounds[cur] < bounds[prev], [&] {
        return cur->name() + " bound " + bounds[cur].str() + " not below " + prev->name() + " bound " +
               bounds[prev].str();
      });
    }
  }
  return {7, "structural properties", t.passed(), t.summary("structural checks"), 0};
}

}  // namespace

std::vector<CheckResult> verify_all(const Expectations& e, const VerifyOptions& opts) {
  struct Named {
    const char* name;
    CheckResult (*run)(Context&);
  };
  const Named checks[] = {
      {"table closed forms", table_reproduction},  {"reference root lists", root_lists},
      {"Killing normalization", killing_normalization}, {"oracle equivalence", oracle_equivalence},
      {"rank and dimension", rank_dimension},      {"Sampson thresholds", thresholds},
      {"structural properties", structural},
  };
  Context ctx(e, opts);
  std::vector<CheckResult> out;
  for (const Named& c : checks) {
    auto start = Clock::now();
    CheckResult r;
    try {
      r = c.run(ctx);
    } catch (const std::exception& ex) {
      r = {static_cast<int>(out.size()) + 1, c.name, false, std::string("exception: ") + ex.what(), 0};
    }
    if (r.seconds == 0) r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace symcurv::cli
