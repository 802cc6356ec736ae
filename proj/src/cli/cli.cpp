#include "nesthilb/cli.hpp"

#include "nesthilb/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <stdexcept>

namespace nesthilb::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string surface = "p2";
  std::string bundle = "O";
  std::string divisor;
  int n1 = 0;
  int n2 = 0;
  int cap = 2;
  std::string route = "nested";
  std::string compare;
  std::string format = "json";
  std::uint64_t seed = SpecializationSource::kDefaultSeed;
  unsigned jobs = 1;
  std::string suite;
  int suite_cap = -1;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("NESTHILB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("NESTHILB_SEED is not an unsigned integer");
    }
  }
  return SpecializationSource::kDefaultSeed;
}

ToricSurface resolve_surface(const std::string& spec) {
  try {
    return builtin_surface(spec);
  } catch (const std::invalid_argument&) {
    if (std::filesystem::exists(spec)) return load_surface_config(spec);
    throw std::invalid_argument("unknown surface '" + spec +
                                "' (expected p2, p1xp1, hirzebruch(a) or a config file)");
  }
}

EquivariantLineBundle resolve_bundle(const ToricSurface& s, const RunConfig& c) {
  if (c.divisor.empty()) return bundle_by_label(s, c.bundle);
  std::vector<int> coeffs;
  std::stringstream in(c.divisor);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      coeffs.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad divisor coefficient '" + item + "'");
    }
  }
  return line_bundle(s, std::move(coeffs));
}

std::vector<Route> resolve_routes(const std::string& route) {
  if (route == "nested") return {Route::nested};
  if (route == "product") return {Route::product};
  return {Route::nested, Route::product};
}

Json rational_json(const Rational& r) { return {{"num", r.num_string()}, {"den", r.den_string()}}; }

Json record_json(const InvariantRecord& r) {
  Json specs = Json::array();
  for (const auto& s : r.specializations) specs.push_back({{"x", rational_json(s.x)}, {"y", rational_json(s.y)}});
  return {{"surface", r.surface}, {"bundle", r.bundle},     {"n1", r.n1},
          {"n2", r.n2},           {"route", to_string(r.route)}, {"value", rational_json(r.value)},
          {"specializations", specs}, {"agreement", r.agreement}};
}

EngineOptions engine_options(const RunConfig& c) {
  EngineOptions o;
  o.seed = c.seed;
  o.jobs = std::max(1u, c.jobs);
  return o;
}

int cmd_integrate(const RunConfig& c, std::ostream& out) {
  const ToricSurface s = resolve_surface(c.surface);
  const EquivariantLineBundle m = resolve_bundle(s, c);
  const auto routes = resolve_routes(c.route);
  if (c.n1 < 0 || c.n2 < 0) throw std::invalid_argument("n1 and n2 must be nonnegative");
  if (c.n1 < c.n2 && std::find(routes.begin(), routes.end(), Route::nested) != routes.end())
    throw std::invalid_argument("n1 < n2: the nested route needs n1 >= n2");
  std::vector<InvariantRecord> records;
  for (Route r : routes) records.push_back(integrate(s, m, c.n1, c.n2, r, engine_options(c)));
  bool agreement = true;
  for (const auto& r : records) agreement = agreement && r.value == records.front().value;
  for (auto& r : records) r.agreement = r.agreement && agreement;
  if (c.format == "csv") {
    out << "surface,bundle,n1,n2,route,value,agreement\n";
    for (const auto& r : records)
      out << r.surface << ",\"" << r.bundle << "\"," << r.n1 << "," << r.n2 << ","
          << to_string(r.route) << "," << r.value.to_string() << ","
          << (r.agreement ? "true" : "false") << "\n";
  } else {
    Json doc;
    doc["command"] = "integrate";
    doc["seed"] = std::to_string(c.seed);
    doc["records"] = Json::array();
    for (const auto& r : records) doc["records"].push_back(record_json(r));
    doc["agreement"] = agreement;
    out << doc.dump(2) << "\n";
  }
  if (!agreement) throw InconsistencyError("route disagreement");
  return kOk;
}

int cmd_series(const RunConfig& c, std::ostream& out) {
  if (c.cap < 0) throw std::invalid_argument("cap must be nonnegative");
  if (c.route == "both") throw std::invalid_argument("series takes --route nested or product");
  if (!c.compare.empty() && c.compare != "closed-form")
    throw std::invalid_argument("--compare accepts only closed-form");
  const ToricSurface s = resolve_surface(c.surface);
  const EquivariantLineBundle m = resolve_bundle(s, c);
  const Route route = resolve_routes(c.route).front();
  const Series2 z = z_series(s, m, c.cap, route, engine_options(c));
  const bool compare = !c.compare.empty();
  const Series2 closed = compare ? closed_form_series(s, m, c.cap) : Series2(c.cap);
  bool all_match = true;
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "n1,n2,value" << (compare ? ",closed_form,match" : "") << "\n";
  for (int total = 0; total <= c.cap; ++total)
    for (int n2 = 0; 2 * n2 <= total; ++n2) {
      const int n1 = total - n2;
      Json row{{"n1", n1}, {"n2", n2}, {"value", rational_json(z.coefficient(n1, n2))}};
      csv << n1 << "," << n2 << "," << z.coefficient(n1, n2).to_string();
      if (compare) {
        const bool match = z.coefficient(n1, n2) == closed.coefficient(n1, n2);
        all_match = all_match && match;
        row["closed_form"] = rational_json(closed.coefficient(n1, n2));
        row["match"] = match;
        csv << "," << closed.coefficient(n1, n2).to_string() << "," << (match ? "true" : "false");
      }
      csv << "\n";
      rows.push_back(std::move(row));
    }
  if (c.format == "csv") {
    out << csv.str();
  } else {
    Json doc;
    doc["command"] = "series";
    doc["surface"] = s.name();
    doc["bundle"] = m.label;
    doc["route"] = to_string(route);
    doc["cap"] = c.cap;
    doc["seed"] = std::to_string(c.seed);
    doc["rows"] = std::move(rows);
    if (compare) doc["all_match"] = all_match;
    out << doc.dump(2) << "\n";
  }
  return compare && !all_match ? kVerifyFailed : kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const int cap = c.suite_cap >= 0 ? c.suite_cap : default_suite_cap(c.suite);
  return run_suite(c.suite, cap, engine_options(c), out) ? kOk : kVerifyFailed;
}

void add_common(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--seed", c.seed, "Seed for generic specializations (default: $NESTHILB_SEED or 7919)");
  cmd->add_option("--jobs", c.jobs, "Worker threads for fixed-point sums")->check(CLI::Range(1u, 256u));
}

void add_target(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--surface", c.surface, "p2, p1xp1, hirzebruch(a) or a surface config file");
  auto* bundle = cmd->add_option("--bundle", c.bundle, "O, K, D<i> or a named bundle of the surface");
  cmd->add_option("--divisor", c.divisor, "Divisor coefficients a_1,...,a_k")->excludes(bundle);
  cmd->add_option("--route", c.route, "Localization route")
      ->check(CLI::IsMember({"nested", "product", "both"}));
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Localization invariants of nested Hilbert schemes of points on toric surfaces",
               "nesthilb"};
  app.require_subcommand(1);
  auto* integrate_cmd = app.add_subcommand("integrate", "Compute one invariant");
  add_target(integrate_cmd, c);
  integrate_cmd->add_option("--n1", c.n1, "Length of the larger subscheme");
  integrate_cmd->add_option("--n2", c.n2, "Length of the smaller subscheme");
  add_common(integrate_cmd, c);

  auto* series_cmd = app.add_subcommand("series", "Generating series up to total degree cap");
  add_target(series_cmd, c);
  series_cmd->add_option("--cap", c.cap, "Maximum n1 + n2");
  series_cmd->add_option("--compare", c.compare, "Compare against the closed form (closed-form)");
  add_common(series_cmd, c);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", c.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--cap", c.suite_cap, "Suite size parameter");
  add_common(verify_cmd, c);

  try {
    c.seed = default_seed();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*integrate_cmd) return cmd_integrate(c, out);
    if (*series_cmd) return cmd_series(c, out);
    return cmd_verify(c, out);
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const DegenerateSpecialization& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInconsistent;
  }
}

}  // namespace nesthilb::cli
