#include "cotrans/cli.hpp"

#include <algorithm>
#include <sstream>
#include <variant>

#include "cotrans/duality.hpp"
#include "cotrans/error.hpp"
#include "cotrans/io.hpp"
#include "cotrans/linalg.hpp"
#include "json.hpp"

namespace cotrans::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string_view name_of(FieldMode f) { return f == FieldMode::fp ? "fp" : "rational"; }

std::string_view name_of(CheckTarget c) {
  switch (c) {
    case CheckTarget::exchange: return "exchange";
    case CheckTarget::lgv: return "lgv";
    case CheckTarget::orthogonal: return "orthogonal";
    case CheckTarget::duality: return "duality";
    case CheckTarget::all: return "all";
  }
  return "all";
}

std::string header(const RunConfig& c) {
  std::ostringstream os;
  os << "# command=" << c.command << " field=" << name_of(c.field);
  if (c.field == FieldMode::fp) os << " modulus=" << Fp::kModulus;
  os << " seed=" << c.seed << '\n';
  return os.str();
}

Json matroid_json(const Matroid& m) { return Json::parse(to_json(m)); }

Matroid matroid_of(const Input& input) {
  if (const auto* p = std::get_if<Presentation>(&input)) return transversal_matroid(*p);
  const auto& d = std::get<DigraphInput>(input);
  return gammoid_matroid(d.digraph, d.sinks);
}

std::string render_matroid(const RunConfig& c, const Matroid& m) {
  if (c.format == OutputFormat::json) return to_json(m) + "\n";
  std::ostringstream os;
  os << header(c) << "n " << m.ground_size() << "\nrank " << m.rank() << '\n';
  for (const auto& b : m.bases()) {
    os << "basis";
    for (int x : b) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

std::string cmd_rank(const RunConfig& c, const Input& input) {
  if (!c.subset) throw UsageError("rank needs --subset");
  const int r = rank_of(matroid_of(input), *c.subset);
  if (c.format == OutputFormat::json) {
    Json j;
    j["command"] = "rank";
    j["subset"] = *c.subset;
    j["rank"] = r;
    return j.dump() + "\n";
  }
  return header(c) + "rank " + std::to_string(r) + "\n";
}

template <Field F>
std::string render_matrix(const RunConfig& c, std::string_view name, const Matrix<F>& m,
                          const WeightMap<F>& weights, std::uint64_t seed_used) {
  if (c.format == OutputFormat::json) {
    Json j;
    j["command"] = "represent";
    j["matrix"] = name;
    j["field"] = name_of(c.field);
    if (c.field == FieldMode::fp) j["modulus"] = Fp::kModulus;
    j["seed"] = c.seed;
    j["seed_used"] = seed_used;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json w = Json::array();
    for (const auto& [key, value] : weights) w.push_back({key.first, key.second, value.str()});
    j["weights"] = std::move(w);
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
      entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j.dump() + "\n";
  }
  std::ostringstream os;
  os << header(c);
  if (seed_used != c.seed) os << "# seed_used=" << seed_used << '\n';
  os << "matrix " << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (const auto& [key, value] : weights)
    os << "weight " << key.first << ' ' << key.second << ' ' << value.str() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "row";
    for (std::size_t k = 0; k < m.cols(); ++k) os << ' ' << m(i, k).str();
    os << '\n';
  }
  return os.str();
}

std::string cmd_represent(const RunConfig& c, const Input& input) {
  if (const auto* p = std::get_if<Presentation>(&input)) {
    TransversalOptions options;
    options.normalize = c.normalize;
    if (c.field == FieldMode::fp) {
      const auto rep = transversal_representation(*p, sample_entry_weights(*p, c.seed), options);
      return render_matrix(c, "X", rep.matrix, rep.weights, c.seed);
    }
    const auto rep = transversal_representation(*p, sample_rational_entry_weights(*p, c.seed), options);
    return render_matrix(c, "X", rep.matrix, rep.weights, c.seed);
  }
  const auto& d = std::get<DigraphInput>(input);
  if (c.field == FieldMode::fp) {
    const auto rep = gammoid_representation(d.digraph, d.sinks, c.seed, c.max_retries);
    return render_matrix(c, "Y", rep.matrix, rep.weights, rep.seed);
  }
  const WeightedDigraph h = sinkify(d.digraph, d.sinks);
  const auto weights = nonsingular_rational_edge_weights(h, c.seed, c.max_retries);
  return render_matrix(c, "Y", gammoid_representation(h, d.sinks, weights), weights, c.seed);
}

std::string cmd_convert(const RunConfig& c, const Input& input) {
  std::string text;
  std::string kind;
  if (const auto* p = std::get_if<Presentation>(&input)) {
    const DualPair pair = bipartite_to_digraph(*p);
    text = render(pair.digraph, pair.sinks);
    kind = "digraph";
  } else {
    const auto& d = std::get<DigraphInput>(input);
    text = render(digraph_to_bipartite(sinkify(d.digraph, d.sinks), d.sinks).presentation);
    kind = "presentation";
  }
  if (c.format == OutputFormat::json) {
    Json j;
    j["command"] = "convert";
    j["format"] = kind;
    j["text"] = text;
    return j.dump() + "\n";
  }
  return text;
}

struct Report {
  std::string check;
  bool pass;
  Json details;
};

Report check_exchange(const Matroid& m) {
  Json details;
  details["bases"] = m.bases().size();
  details["rank"] = m.rank();
  const auto violation = validate_basis_exchange(m);
  const auto dual_violation = validate_basis_exchange(dual(m));
  const bool involution = dual(dual(m)) == m;
  auto encode = [](const std::optional<ExchangeViolation>& v) -> Json {
    if (!v) return nullptr;
    return Json{{"first", v->first}, {"second", v->second}, {"element", v->element}};
  };
  details["violation"] = encode(violation);
  details["dual_violation"] = encode(dual_violation);
  details["dual_involution"] = involution;
  return {"exchange", !violation && !dual_violation && involution, std::move(details)};
}

template <Field F>
Report check_lgv(const DualPair& pair, const WeightMap<F>& weights) {
  std::size_t subsets = 0;
  std::size_t nonzero = 0;
  std::size_t mismatches = 0;
  for (const auto& b : k_subsets(pair.digraph.vertex_count(), pair.sinks.size())) {
    const auto report = lgv_check(pair.digraph, pair.sinks, b, weights);
    ++subsets;
    if (!report.determinant.is_zero()) ++nonzero;
    if (!report.equal) ++mismatches;
  }
  Json details{{"subsets", subsets}, {"nonzero", nonzero}, {"mismatches", mismatches}};
  return {"lgv", mismatches == 0, std::move(details)};
}

template <Field F>
Report check_orthogonal(const DualPair& pair, const OrthogonalityReport<F>& o) {
  bool recurrence = true;
  for (std::size_t i = 0; i < o.y.rows(); ++i)
    recurrence = recurrence && verify_recurrence(o.y.row(i), pair.digraph, pair.sinks, o.weights);
  Json details{{"n", pair.digraph.vertex_count()},
               {"r", pair.presentation.set_count()},
               {"rank_x", o.rank_x},
               {"rank_y", o.rank_y},
               {"product_is_zero", o.product_is_zero},
               {"complementary", o.complementary},
               {"rows_satisfy_recurrence", recurrence}};
  return {"orthogonal", o.complementary && recurrence, std::move(details)};
}

Report skipped(std::string check, std::string reason) {
  return {std::move(check), true, Json{{"skipped", std::move(reason)}}};
}

std::vector<Report> cmd_verify(const RunConfig& c, const Input& input) {
  std::optional<DualPair> pair;
  std::string no_pair_reason;
  if (const auto* p = std::get_if<Presentation>(&input)) {
    try {
      pair = bipartite_to_digraph(*p);
    } catch (const NoCompleteMatching& e) {
      no_pair_reason = e.what();
    }
  } else {
    const auto& d = std::get<DigraphInput>(input);
    pair = digraph_to_bipartite(sinkify(d.digraph, d.sinks), d.sinks);
  }

  const bool all = c.check == CheckTarget::all;
  auto wants = [&](CheckTarget t) { return all || c.check == t; };
  // A check that cannot run on this input is skipped under `all` and an
  // error when requested by name.
  auto need_pair = [&](std::string_view check) {
    if (pair) return true;
    if (!all) throw NoCompleteMatching(no_pair_reason);
    (void)check;
    return false;
  };

  std::vector<Report> reports;
  if (wants(CheckTarget::exchange)) reports.push_back(check_exchange(matroid_of(input)));

  if (wants(CheckTarget::lgv)) {
    if (!need_pair("lgv")) {
      reports.push_back(skipped("lgv", no_pair_reason));
    } else if (!pair->digraph.is_acyclic()) {
      if (!all) throw CyclicGraph("lgv check requires an acyclic graph");
      reports.push_back(skipped("lgv", "graph has a directed cycle"));
    } else if (c.field == FieldMode::fp) {
      reports.push_back(check_lgv(*pair, sample_edge_weights(pair->digraph, c.seed)));
    } else {
      reports.push_back(check_lgv(*pair, rational_edge_weights(pair->digraph, c.seed)));
    }
  }

  if (wants(CheckTarget::orthogonal)) {
    if (!need_pair("orthogonal")) {
      reports.push_back(skipped("orthogonal", no_pair_reason));
    } else if (c.field == FieldMode::fp) {
      reports.push_back(check_orthogonal(*pair, verify_orthogonality(*pair, c.seed, c.max_retries)));
    } else {
      reports.push_back(check_orthogonal(
          *pair, verify_orthogonality(*pair, nonsingular_rational_edge_weights(pair->digraph, c.seed, c.max_retries))));
    }
  }

  if (wants(CheckTarget::duality)) {
    if (!need_pair("duality")) {
      reports.push_back(skipped("duality", no_pair_reason));
    } else {
      const auto d = verify_cotransversal_duality(*pair);
      reports.push_back({"duality", d.equal,
                         Json{{"equal", d.equal},
                              {"gammoid", matroid_json(d.left)},
                              {"dual_transversal", matroid_json(d.right)}}});
    }
  }
  return reports;
}

std::string render_reports(const RunConfig& c, const std::vector<Report>& reports, bool pass) {
  if (c.format == OutputFormat::json) {
    Json j;
    j["command"] = "verify";
    j["check"] = name_of(c.check);
    j["field"] = name_of(c.field);
    j["seed"] = c.seed;
    Json list = Json::array();
    for (const auto& r : reports) list.push_back({{"check", r.check}, {"pass", r.pass}, {"details", r.details}});
    j["reports"] = std::move(list);
    j["pass"] = pass;
    return j.dump() + "\n";
  }
  std::ostringstream os;
  os << header(c);
  for (const auto& r : reports)
    os << "check " << r.check << ' ' << (r.pass ? "pass" : "FAIL") << ' ' << r.details.dump() << '\n';
  os << "verdict " << (pass ? "pass" : "FAIL") << '\n';
  return os.str();
}

RunResult error_result(const RunConfig& c, const Error& e) {
  RunResult result;
  result.exit_code = kExitUsage;
  if (c.format == OutputFormat::json) {
    Json err{{"kind", e.kind()}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
      err["line"] = pe->line();
      err["column"] = pe->column();
    }
    result.out = Json{{"error", std::move(err)}}.dump() + "\n";
  } else {
    result.err = std::string("error: ") + e.kind() + ": " + e.what() + "\n";
  }
  return result;
}

}  // namespace

Subset parse_subset(const std::string& text) {
  Subset s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      s.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("bad subset element '" + item + "'");
    }
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw UsageError("subset repeats an element");
  return s;
}

RunResult run(const RunConfig& c) {
  try {
    const Input input = parse_input_file(c.input);
    RunResult result;
    if (c.command == "bases") {
      result.out = render_matroid(c, matroid_of(input));
    } else if (c.command == "dualize") {
      result.out = render_matroid(c, dual(matroid_of(input)));
    } else if (c.command == "rank") {
      result.out = cmd_rank(c, input);
    } else if (c.command == "represent") {
      result.out = cmd_represent(c, input);
    } else if (c.command == "convert") {
      result.out = cmd_convert(c, input);
    } else if (c.command == "verify") {
      const auto reports = cmd_verify(c, input);
      const bool pass = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
      result.out = render_reports(c, reports, pass);
      result.exit_code = pass ? kExitOk : kExitVerificationFailed;
    } else {
      throw UsageError("unknown command '" + c.command + "'");
    }
    return result;
  } catch (const Error& e) {
    return error_result(c, e);
  }
}

}  // namespace cotrans::cli
