#include "normbound/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "normbound/briancon_skoda.hpp"
#include "normbound/newton.hpp"

namespace normbound::cli {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Ideal files

namespace {

std::string line_of(const std::string& text, std::size_t byte) {
  const auto stop = std::min(byte, text.size());
  const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(stop), '\n');
  return "line " + std::to_string(line);
}

[[noreturn]] void field_error(const std::string& source, const std::string& field, const std::string& what) {
  throw ParseError(source + ": field '" + field + "': " + what);
}

}  // namespace

ParsedIdeal parse_ideal_json(const Json& doc, const std::string& source) {
  if (!doc.is_object()) throw ParseError(source + ": top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "variables" && key != "generators" && key != "label") field_error(source, key, "unknown field");
  }
  if (!doc.contains("variables")) field_error(source, "variables", "missing");
  if (!doc.contains("generators")) field_error(source, "generators", "missing");

  const auto& vars = doc.at("variables");
  if (!vars.is_array()) field_error(source, "variables", "expected an array of strings");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) field_error(source, "variables[" + std::to_string(i) + "]", "expected a string");
    names.push_back(vars[i].get<std::string>());
  }
  RingDescriptor ring;
  try {
    ring = RingDescriptor::make(names);
  } catch (const InvalidArgument& e) {
    field_error(source, "variables", e.what());
  }

  const auto& gens = doc.at("generators");
  if (!gens.is_array()) field_error(source, "generators", "expected an array of exponent tuples");
  if (gens.empty()) throw EmptyGenerators();
  std::vector<ExponentVector> exps;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string field = "generators[" + std::to_string(i) + "]";
    if (!gens[i].is_array()) field_error(source, field, "expected an array of integers");
    if (gens[i].size() != names.size())
      throw DimensionMismatch(source + ": field '" + field + "' has " + std::to_string(gens[i].size()) +
                              " entries, expected " + std::to_string(names.size()));
    std::vector<Exponent> coords;
    for (std::size_t j = 0; j < gens[i].size(); ++j) {
      const auto& e = gens[i][j];
      const std::string entry = field + "[" + std::to_string(j) + "]";
      if (!e.is_number_integer()) field_error(source, entry, "expected an integer");
      if (e.is_number_unsigned())
        coords.push_back(to_exponent(Integer(e.get<std::uint64_t>())));
      else if (e.get<std::int64_t>() < 0)
        field_error(source, entry, "exponent must be non-negative");
      else
        coords.push_back(e.get<std::int64_t>());
    }
    exps.emplace_back(std::move(coords));
  }

  ParsedIdeal out{minimalize(exps, ring), {}, {}};
  if (out.ideal.is_unit()) throw UnitIdeal();
  if (out.ideal.generators().size() != exps.size()) {
    std::ostringstream os;
    os << source << ": " << exps.size() - out.ideal.generators().size()
       << " redundant generator(s) dropped; minimal form " << out.ideal;
    out.notices.push_back(os.str());
  }
  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) field_error(source, "label", "expected a string");
    out.label = doc.at("label").get<std::string>();
  }
  return out;
}

ParsedIdeal parse_ideal(std::istream& in, const std::string& source) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": " + line_of(text, e.byte) + ": malformed JSON");
  }
  return parse_ideal_json(doc, source);
}

ParsedIdeal parse_ideal(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  ParsedIdeal parsed = parse_ideal(in, path.string());
  if (parsed.label.empty()) parsed.label = path.stem().string();
  return parsed;
}

namespace {

Json exponents_json(const ExponentVector& v) {
  Json a = Json::array();
  for (auto e : v.coords()) a.push_back(e);
  return a;
}

Json generators_json(const MonomialIdeal& ideal) {
  Json a = Json::array();
  for (const auto& g : ideal.generators()) a.push_back(exponents_json(g));
  return a;
}

}  // namespace

Json ideal_json(const MonomialIdeal& ideal, const std::string& label) {
  Json j;
  j["variables"] = ideal.ring().variables;
  j["generators"] = generators_json(ideal);
  if (!label.empty()) j["label"] = label;
  return j;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

Json integer_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(z);
  return z.str();
}

template <class T, class F>
Json field_json(const Field<T>& f, F&& convert) {
  if (!f.present()) return Json{{"na", f.reason}};
  return convert(*f);
}

Json field_json(const Field<Integer>& f) {
  return field_json(f, [](const Integer& z) { return integer_json(z); });
}

Json field_json(const Field<int>& f) {
  return field_json(f, [](int v) { return Json(v); });
}

constexpr const char* kNormalityBasis =
    "powers 1..max(d-1,1) compared; a monomial ideal in d variables whose first d-1 powers are integrally "
    "closed is normal (Reid-Roberts-Vitulli)";

Json normality_json(const NormalityResult& n, const RingDescriptor& ring, bool default_horizon) {
  Json j;
  j["normal"] = n.normal;
  j["horizon"] = n.horizon;
  j["failing_power"] = n.failing_power ? Json(*n.failing_power) : Json(nullptr);
  if (n.witness) {
    j["witness"] = exponents_json(*n.witness);
    j["witness_monomial"] = monomial_string(*n.witness, ring);
  } else {
    j["witness"] = nullptr;
    j["witness_monomial"] = nullptr;
  }
  j["basis"] = default_horizon ? kNormalityBasis : "powers 1..horizon compared (user horizon)";
  return j;
}

Json config_json(const AnalysisConfig& c) {
  Json j;
  j["max_power"] = c.max_power;
  j["fit_budget"] = c.hilbert.fit_budget;
  j["window"] = c.hilbert.window ? Json(*c.hilbert.window) : Json(nullptr);
  j["validation_samples"] = c.hilbert.validation_samples;
  j["normality_horizon"] = c.normality_horizon ? Json(*c.normality_horizon) : Json(nullptr);
  j["dimension_cap"] = c.dimension_cap;
  return j;
}

Json check_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["citation"] = c.citation;
  j["relation"] = to_string(c.relation);
  if (c.skipped) {
    j["status"] = "skipped";
    j["reason"] = *c.skipped;
  } else {
    j["status"] = c.holds ? "holds" : "fails";
    j["lhs"] = to_string(*c.lhs);
    j["rhs"] = to_string(*c.rhs);
  }
  j["specialized"] = c.specialized;
  return j;
}

std::array<std::string, 2> fraction_parts(const Rational& q) {
  return {boost::multiprecision::numerator(q).str(), boost::multiprecision::denominator(q).str()};
}

}  // namespace

Json report_json(const AnalysisReport& r) {
  const Invariants& inv = r.invariants;
  Json j;
  j["schema"] = kReportSchema;
  j["label"] = r.label;

  Json ring;
  ring["variables"] = r.ideal.ring().variables;
  ring["dimension"] = r.ideal.dimension();
  ring["regular"] = r.ideal.ring().regular;
  ring["type"] = r.ideal.ring().type;
  ring["degree"] = 1;
  j["ring"] = ring;

  std::ostringstream text;
  text << r.ideal;
  j["ideal"] = {{"generators", generators_json(r.ideal)}, {"text", text.str()}};

  Json v;
  v["d"] = inv.d;
  v["height"] = inv.height;
  v["analytic_spread"] = inv.analytic_spread;
  v["equimultiple"] = inv.equimultiple;
  v["m_primary"] = inv.m_primary;
  v["complete_intersection"] = inv.complete_intersection;
  v["integrally_closed"] = inv.integrally_closed;
  v["e0"] = field_json(inv.e0);
  v["e1"] = field_json(inv.e1);
  v["e0bar"] = field_json(inv.e0bar);
  v["e1bar"] = field_json(inv.e1bar);
  v["colength"] = field_json(inv.colength);
  v["closure_colength"] = field_json(inv.closure_colength);
  v["volume_e0"] = field_json(inv.volume_e0);
  v["E0"] = field_json(inv.E0);
  v["E1"] = field_json(inv.E1);
  v["E0bar"] = field_json(inv.E0bar);
  v["E1bar"] = field_json(inv.E1bar);
  v["degree"] = field_json(inv.degree);
  v["closure_degree"] = field_json(inv.closure_degree);
  v["vertex_reduction"] =
      field_json(inv.vertex_reduction, [](const MonomialIdeal& m) { return generators_json(m); });
  v["E0_reduction"] = field_json(inv.E0_reduction);
  v["degree_reduction"] = field_json(inv.degree_reduction);
  v["generating_degree"] = field_json(inv.generating_degree, [](const std::optional<Exponent>& s) {
    return s ? Json(*s) : Json(nullptr);
  });
  v["b_emp"] = field_json(inv.b_emp);
  v["bs_horizon"] = inv.bs_horizon;
  v["bs_status"] = "certified-on-range";
  v["regular_bs_cap"] = inv.regular_bs_cap;
  v["equimultiple_bs_cap"] = field_json(inv.equimultiple_bs_cap);
  const bool default_horizon = !r.config.normality_horizon.has_value();
  v["normality"] = field_json(inv.normality, [&](const NormalityResult& n) {
    return normality_json(n, r.ideal.ring(), default_horizon);
  });
  v["chain_bound"] = field_json(inv.chain_bound);
  v["s2_inference"] = field_json(inv.s2, [](S2Inference s) { return Json(to_string(s)); });
  j["invariants"] = v;

  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  j["checks"] = checks;

  j["config"] = config_json(r.config);
  j["errors"] = r.errors;
  j["status"] = {{"exit_code", exit_code(r)},
                 {"any_check_fails", r.any_check_fails()},
                 {"budget_exhausted", r.budget_exhausted},
                 {"internal_error", r.internal_error}};
  return j;
}

namespace {

std::string field_text(const Json& value) {
  if (value.is_object() && value.contains("na")) return "n/a (" + value["na"].get<std::string>() + ")";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string report_text(const AnalysisReport& r) {
  const Json j = report_json(r);
  std::ostringstream os;
  os << "ideal " << j["ideal"]["text"].get<std::string>();
  if (!r.label.empty()) os << "  [" << r.label << "]";
  os << "\nring  k[";
  const auto& vars = r.ideal.ring().variables;
  for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? "," : "") << vars[i];
  os << "], d = " << r.ideal.dimension() << "\n\ninvariants\n";
  for (const auto& [key, value] : j["invariants"].items()) {
    if (key == "normality" && value.is_object() && !value.contains("na")) {
      os << "  normality: " << (value["normal"].get<bool>() ? "normal" : "not normal");
      if (!value["witness_monomial"].is_null())
        os << " (witness " << value["witness_monomial"].get<std::string>() << " at power "
           << value["failing_power"].get<int>() << ")";
      os << ", horizon " << value["horizon"].get<int>() << "\n";
      continue;
    }
    os << "  " << key << ": " << field_text(value) << "\n";
  }
  os << "\nchecks\n";
  for (const auto& c : r.checks) {
    os << "  " << (c.skipped ? "SKIP" : c.holds ? "OK  " : "FAIL") << "  " << c.name;
    if (c.skipped)
      os << "  (" << *c.skipped << ")";
    else
      os << "  " << to_string(*c.lhs) << ' ' << to_string(c.relation) << ' ' << to_string(*c.rhs);
    if (c.specialized) os << "  [specialized]";
    os << "  {" << c.citation << "}\n";
  }
  if (!r.errors.empty()) {
    os << "\nerrors\n";
    for (const auto& e : r.errors) os << "  " << e << "\n";
  }
  return os.str();
}

std::string report_csv(const AnalysisReport& r) {
  std::ostringstream os;
  os << "name,relation,status,lhs_num,lhs_den,rhs_num,rhs_den\n";
  for (const auto& c : r.checks) {
    os << c.name << ',' << to_string(c.relation) << ',' << (c.skipped ? "skipped" : c.holds ? "holds" : "fails");
    if (c.skipped) {
      os << ",,,,\n";
      continue;
    }
    const auto l = fraction_parts(*c.lhs);
    const auto rr = fraction_parts(*c.rhs);
    os << ',' << l[0] << ',' << l[1] << ',' << rr[0] << ',' << rr[1] << '\n';
  }
  return os.str();
}

}  // namespace

std::string render(const AnalysisReport& report, Format format) {
  switch (format) {
    case Format::Json: return report_json(report).dump(2) + "\n";
    case Format::Csv: return report_csv(report);
    case Format::Text: return report_text(report);
  }
  return {};
}

int exit_code(const AnalysisReport& report) {
  if (report.internal_error || report.any_check_fails()) return 2;
  if (report.budget_exhausted) return 3;
  return 0;
}

// ---------------------------------------------------------------------------
// Hilbert tables

HilbertRows hilbert_rows(const MonomialIdeal& ideal, int max_power) {
  if (max_power < 1) throw InvalidArgument("--max-power must be positive");
  ideal.require_proper();
  HilbertRows table;
  table.degree_mode = !is_primary_to_maximal(ideal);
  const auto mode = table.degree_mode ? DegreeMode::Degree : DegreeMode::Length;
  const auto powers = FiltrationProvider(ideal, FiltrationKind::Powers, mode).values(1, max_power);
  const auto closure = FiltrationProvider(ideal, FiltrationKind::ClosurePowers, mode).values(1, max_power);
  for (std::size_t i = 0; i < powers.size(); ++i) table.rows.push_back({powers[i], closure[i]});
  return table;
}

std::string hilbert_csv(const HilbertRows& table) {
  std::ostringstream os;
  os << (table.degree_mode ? "n,degree_powers,degree_closure\n" : "n,length_powers,length_closure\n");
  for (std::size_t i = 0; i < table.rows.size(); ++i)
    os << i + 1 << ',' << table.rows[i][0].str() << ',' << table.rows[i][1].str() << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Batch

std::vector<BatchEntry> batch_entries(const fs::path& path) {
  std::vector<BatchEntry> out;
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(path))
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back({f.string(), std::nullopt});
    return out;
  }
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open manifest");
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + line_of(text, e.byte) + ": malformed JSON");
  }
  if (!doc.is_array()) throw ParseError(path.string() + ": manifest must be a JSON array");
  const fs::path base = path.parent_path();
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    if (item.is_string())
      out.push_back({(base / item.get<std::string>()).string(), std::nullopt});
    else
      out.push_back({path.string() + "[" + std::to_string(i) + "]", item});
  }
  return out;
}

unsigned worker_cap() {
  if (const char* env = std::getenv("NORMBOUND_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

BatchResult run_batch(const std::vector<BatchEntry>& entries, const AnalysisConfig& config, unsigned workers) {
  struct Slot {
    std::optional<AnalysisReport> report;
    std::string error;
  };
  std::vector<Slot> slots(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      const auto& entry = entries[i];
      try {
        ParsedIdeal parsed = entry.ideal ? parse_ideal_json(*entry.ideal, entry.source) : parse_ideal(entry.source);
        if (parsed.label.empty()) parsed.label = entry.source;
        slots[i].report = analyze(parsed.ideal, config, parsed.label);
      } catch (const std::exception& e) {
        slots[i].error = e.what();
      }
    }
  };
  workers = std::clamp<unsigned>(workers, 1, std::max<std::size_t>(entries.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  BatchResult out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (slots[i].report)
      out.reports.push_back(std::move(*slots[i].report));
    else
      out.errors.emplace_back(entries[i].source, slots[i].error);
  }
  std::stable_sort(out.reports.begin(), out.reports.end(),
                   [](const AnalysisReport& a, const AnalysisReport& b) { return a.label < b.label; });
  return out;
}

namespace {

struct Aggregate {
  int holding = 0, failing = 0, skipped = 0;
  int cor34_evaluated = 0, cor34_equal = 0;
  std::vector<std::string> s2_certificates;
};

Aggregate aggregate(const BatchResult& batch) {
  Aggregate a;
  for (const auto& r : batch.reports) {
    for (const auto& c : r.checks) {
      if (c.skipped)
        ++a.skipped;
      else if (c.holds)
        ++a.holding;
      else
        ++a.failing;
      if (c.name == "e1bar_regular_bound" && c.evaluated()) {
        ++a.cor34_evaluated;
        if (*c.lhs == *c.rhs) ++a.cor34_equal;
      }
    }
    const auto& s2 = r.invariants.s2;
    if (s2.present() && *s2 == S2Inference::S2FailureCertificate) a.s2_certificates.push_back(r.label);
  }
  return a;
}

}  // namespace

Json batch_json(const BatchResult& batch, const AnalysisConfig& config) {
  const Aggregate a = aggregate(batch);
  Json j;
  j["schema"] = kBatchSchema;
  j["config"] = config_json(config);
  j["entries"] = batch.reports.size() + batch.errors.size();
  Json agg;
  agg["analyzed"] = batch.reports.size();
  agg["errors"] = batch.errors.size();
  agg["checks_holding"] = a.holding;
  agg["checks_failing"] = a.failing;
  agg["checks_skipped"] = a.skipped;
  agg["e1bar_regular_bound_evaluated"] = a.cor34_evaluated;
  agg["e1bar_regular_bound_equality"] = a.cor34_equal;
  agg["s2_failure_certificates"] = a.s2_certificates;
  j["aggregate"] = agg;
  Json errors = Json::array();
  for (const auto& [source, message] : batch.errors) errors.push_back({{"source", source}, {"error", message}});
  j["errors"] = errors;
  Json reports = Json::array();
  for (const auto& r : batch.reports) reports.push_back(report_json(r));
  j["reports"] = reports;
  return j;
}

std::string render(const BatchResult& batch, const AnalysisConfig& config, Format format) {
  if (format == Format::Json) return batch_json(batch, config).dump(2) + "\n";
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "label,holding,failing,skipped,exit_code\n";
    for (const auto& r : batch.reports) {
      int h = 0, f = 0, s = 0;
      for (const auto& c : r.checks) (c.skipped ? s : c.holds ? h : f)++;
      os << r.label << ',' << h << ',' << f << ',' << s << ',' << exit_code(r) << '\n';
    }
    return os.str();
  }
  const Aggregate a = aggregate(batch);
  os << "analyzed " << batch.reports.size() << ", errors " << batch.errors.size() << "\n";
  os << "checks: " << a.holding << " hold, " << a.failing << " fail, " << a.skipped << " skipped\n";
  os << "e1bar_regular_bound equality: " << a.cor34_equal << " of " << a.cor34_evaluated << "\n";
  os << "s2-failure certificates: " << a.s2_certificates.size() << "\n";
  for (const auto& l : a.s2_certificates) os << "  " << l << "\n";
  for (const auto& r : batch.reports)
    if (exit_code(r) != 0) os << "  " << r.label << ": exit " << exit_code(r) << "\n";
  for (const auto& [source, message] : batch.errors) os << "  error " << source << ": " << message << "\n";
  return os.str();
}

int exit_code(const BatchResult& batch) {
  int worst = 0;
  for (const auto& r : batch.reports) {
    const int code = exit_code(r);
    if (code == 2) return 2;
    worst = std::max(worst, code);
  }
  if (!batch.errors.empty()) return 1;
  return worst;
}

// ---------------------------------------------------------------------------
// Command line

namespace {

std::string bs_text(const BSResult& r) {
  std::ostringstream os;
  os << "b_emp = " << r.b_emp << " (" << r.status << ", n <= " << r.horizon << ")\n"
     << "ideal     " << r.ideal << "\n"
     << "reduction " << r.reduction << "\n";
  return os.str();
}

Json bs_json(const BSResult& r) {
  Json j;
  j["ideal"] = generators_json(r.ideal);
  j["reduction"] = generators_json(r.reduction);
  j["horizon"] = r.horizon;
  j["b_emp"] = r.b_emp;
  j["status"] = r.status;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral closure, Hilbert coefficients and Briancon-Skoda numbers of monomial ideals", "normbound"};
  app.require_subcommand(1);
  app.fallthrough();

  AnalysisConfig config;
  int window = 0;
  int horizon = 0;
  std::string format_name = "json";
  std::string output;
  app.add_option("--max-power", config.max_power, "Briancon-Skoda horizon and Hilbert table length")
      ->check(CLI::PositiveNumber);
  app.add_option("--fit-budget", config.hilbert.fit_budget, "maximum samples per Hilbert fit")
      ->check(CLI::PositiveNumber);
  app.add_option("--window", window, "confirmation window (default degree+2)")->check(CLI::PositiveNumber);
  app.add_option("--normality-horizon", horizon, "powers compared for normality (default max(d-1,1))")
      ->check(CLI::PositiveNumber);
  app.add_option("--dim-cap", config.dimension_cap, "largest accepted number of variables")
      ->check(CLI::PositiveNumber);
  auto* format_opt = app.add_option("--format", format_name, "json, csv or text (hilbert defaults to csv)")
                         ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", output, "write to this file instead of stdout");

  std::string path;
  int closure_power = 1;
  std::string reduction_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one ideal");
  analyze_cmd->add_option("ideal", path, "ideal file")->required();
  auto* hilbert_cmd = app.add_subcommand("hilbert", "table of lengths (or degrees) of R/I^n and R/closure(I^n)");
  hilbert_cmd->add_option("ideal", path, "ideal file")->required();
  auto* batch_cmd = app.add_subcommand("batch", "analyze a directory or manifest of ideal files");
  batch_cmd->add_option("corpus", path, "directory or manifest")->required();
  auto* closure_cmd = app.add_subcommand("closure", "generators of closure(I^n)");
  closure_cmd->add_option("ideal", path, "ideal file")->required();
  closure_cmd->add_option("-n,--power", closure_power, "n")->check(CLI::PositiveNumber);
  auto* bs_cmd = app.add_subcommand("bs", "empirical Briancon-Skoda number");
  bs_cmd->add_option("ideal", path, "ideal file")->required();
  bs_cmd->add_option("--reduction", reduction_path, "reduction file (default: vertex reduction)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "normbound: " << e.what() << "\n";
    return 1;
  }
  if (window > 0) config.hilbert.window = window;
  if (horizon > 0) config.normality_horizon = horizon;
  if (hilbert_cmd->parsed() && format_opt->count() == 0) format_name = "csv";
  const Format format = format_name == "csv" ? Format::Csv : format_name == "text" ? Format::Text : Format::Json;

  std::ofstream file;
  if (!output.empty()) {
    file.open(output, std::ios::binary);
    if (!file) {
      err << "normbound: cannot write " << output << "\n";
      return 1;
    }
  }
  std::ostream& sink = output.empty() ? out : file;

  auto load = [&](const std::string& p) {
    ParsedIdeal parsed = parse_ideal(fs::path(p));
    for (const auto& n : parsed.notices) err << "notice: " << n << "\n";
    if (parsed.ideal.dimension() > config.dimension_cap)
      throw DimensionCap(parsed.ideal.dimension(), config.dimension_cap);
    return parsed;
  };

  try {
    if (analyze_cmd->parsed()) {
      const ParsedIdeal parsed = load(path);
      const AnalysisReport report = analyze(parsed.ideal, config, parsed.label);
      sink << render(report, format);
      for (const auto& e : report.errors) err << "error: " << e << "\n";
      return exit_code(report);
    }
    if (hilbert_cmd->parsed()) {
      const ParsedIdeal parsed = load(path);
      const HilbertRows table = hilbert_rows(parsed.ideal, config.max_power);
      if (table.degree_mode) err << "notice: ideal is not m-primary; reporting degrees instead of lengths\n";
      if (format == Format::Json) {
        Json j;
        j["mode"] = table.degree_mode ? "degree" : "length";
        Json rows = Json::array();
        for (std::size_t i = 0; i < table.rows.size(); ++i)
          rows.push_back({i + 1, integer_json(table.rows[i][0]), integer_json(table.rows[i][1])});
        j["rows"] = rows;
        sink << j.dump(2) << "\n";
      } else {
        sink << hilbert_csv(table);
      }
      return 0;
    }
    if (closure_cmd->parsed()) {
      const ParsedIdeal parsed = load(path);
      const MonomialIdeal closed = integral_closure_power(NewtonPolyhedron(parsed.ideal, config.dimension_cap),
                                                          closure_power);
      if (format == Format::Json) {
        Json j = ideal_json(closed, parsed.label);
        j["power"] = closure_power;
        sink << j.dump(2) << "\n";
      } else if (format == Format::Csv) {
        for (const auto& v : parsed.ideal.ring().variables) sink << v << (&v == &parsed.ideal.ring().variables.back() ? "\n" : ",");
        for (const auto& g : closed.generators())
          for (std::size_t i = 0; i < g.size(); ++i) sink << g[i] << (i + 1 == g.size() ? "\n" : ",");
      } else {
        sink << closed << "\n";
      }
      return 0;
    }
    if (bs_cmd->parsed()) {
      const ParsedIdeal parsed = load(path);
      const BSResult result = reduction_path.empty()
                                  ? empirical_bs(parsed.ideal, config.max_power)
                                  : empirical_bs(parsed.ideal, load(reduction_path).ideal, config.max_power);
      if (format == Format::Json)
        sink << bs_json(result).dump(2) << "\n";
      else if (format == Format::Csv)
        sink << "b_emp,horizon\n" << result.b_emp << ',' << result.horizon << '\n';
      else
        sink << bs_text(result);
      return 0;
    }
    if (batch_cmd->parsed()) {
      const BatchResult batch = run_batch(batch_entries(path), config, worker_cap());
      sink << render(batch, config, format);
      for (const auto& [source, message] : batch.errors) err << "error: " << source << ": " << message << "\n";
      return exit_code(batch);
    }
  } catch (const NotStabilized& e) {
    err << "normbound: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    err << "normbound: internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "normbound: " << e.what() << "\n";
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << "normbound: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace normbound::cli
