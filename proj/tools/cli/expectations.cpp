#include "cli/expectations.hpp"

#include "cli/expression.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace symcurv::cli {
namespace {

using nlohmann::json;

Bindings bindings(const SpaceSpec& s, const ClosedForms& f) {
  if (f.params.size() != s.params.size()) {
    throw std::invalid_argument(s.name() + ": parameter count differs from closed-form data");
  }
  Bindings b;
  for (std::size_t i = 0; i < f.params.size(); ++i) b[f.params[i]] = Rational(s.params[i]);
  return b;
}

int as_int(const Rational& r, const std::string& what) {
  if (!r.is_integer()) throw std::invalid_argument(what + " evaluates to non-integer " + r.str());
  return static_cast<int>(r.numerator());
}

std::vector<Label> labels(const json& arr) {
  std::vector<Label> out;
  for (const auto& x : arr) out.push_back(parse_label(x.get<std::string>()));
  return out;
}

}  // namespace

Rational Expectations::expected_bound(const SpaceSpec& s) const {
  const ClosedForms& f = closed_forms.at(s.label);
  const std::string& expr = (f.bound_rank1 && s.params.size() == 2 && s.params[0] == 1) ? *f.bound_rank1 : f.bound;
  return evaluate(expr, bindings(s, f));
}

int Expectations::expected_rank(const SpaceSpec& s) const {
  const ClosedForms& f = closed_forms.at(s.label);
  return as_int(evaluate(f.rank, bindings(s, f)), s.name() + " rank");
}

int Expectations::expected_dim(const SpaceSpec& s) const {
  const ClosedForms& f = closed_forms.at(s.label);
  return as_int(evaluate(f.dimension, bindings(s, f)), s.name() + " dimension");
}

Expectations parse_expectations(std::string_view json_text) {
  Expectations e;
  try {
    json j = json::parse(json_text);
    e.version = j.at("version").get<int>();
    e.sweep.max_n = j.at("sweep").at("max_n").get<int>();
    e.sweep.max_pq = j.at("sweep").at("max_pq").get<int>();

    for (const auto& [name, v] : j.at("closed_forms").items()) {
      ClosedForms f;
      if (v.contains("params")) f.params = v.at("params").get<std::vector<std::string>>();
      f.rank = v.at("rank").get<std::string>();
      f.dimension = v.at("dimension").get<std::string>();
      f.bound = v.at("bound").get<std::string>();
      if (v.contains("bound_rank1")) f.bound_rank1 = v.at("bound_rank1").get<std::string>();
      e.closed_forms.emplace(parse_label(name), std::move(f));
    }

    for (const auto& [name, v] : j.at("root_lists").items()) {
      e.root_lists[name] = v.get<std::vector<std::vector<int>>>();
    }
    if (j.contains("root_list_errata")) {
      for (const auto& [name, v] : j.at("root_list_errata").items()) {
        for (const auto& x : v) {
          e.errata[name].push_back({x.at("listed").get<std::vector<int>>(),
                                    x.at("corrected").get<std::vector<int>>(),
                                    x.value("reason", "")});
        }
      }
    }

    const json& th = j.at("thresholds");
    for (const auto& [name, v] : th.at("conservative").items()) {
      Label l = parse_label(name);
      std::string param = v.at("parameter").get<std::string>();
      if (v.contains("minimal")) e.conservative.push_back({l, RankClass::Any, param, v.at("minimal").get<int>()});
      if (v.contains("rank=1")) e.conservative.push_back({l, RankClass::RankOne, param, v.at("rank=1").get<int>()});
      if (v.contains("rank>1")) {
        e.conservative.push_back({l, RankClass::HigherRank, param, v.at("rank>1").get<int>()});
      }
    }
    e.always_pass = labels(th.at("always_pass"));
    e.relaxed_only = labels(th.at("relaxed_only"));
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("malformed expectations: ") + ex.what());
  }
  return e;
}

const Expectations& embedded_expectations() {
  static const Expectations e = parse_expectations(embedded_expectations_text());
  return e;
}

}  // namespace symcurv::cli
