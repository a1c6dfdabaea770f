// Command-line driver: inspect polytopes, compute invariants, classify
// smoothings, scan a reflexive-polytope database, and compute period
// sequences of Laurent polynomials.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <thread>

#include "fano3/fano3.hpp"

using json = nlohmann::ordered_json;
using namespace fano3;

namespace {

// exit codes: 0 ok, 1 usage, 2 invalid input, 3 pipeline failure
struct CommandError {
  int code;
  std::string type;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& type, const std::string& message) {
  throw CommandError{code, type, message};
}

LatticePolytope read_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(2, "FileError", "cannot open " + path);
  // first block of the polytope file format; reflexivity is not required here
  std::string line;
  int line_no = 0;
  long long rows = -1, cols = -1;
  std::vector<std::vector<long long>> data;
  while (std::getline(in, line)) {
    ++line_no;
    size_t pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    if (rows < 0) {
      if (!(ls >> rows >> cols)) {
        rows = -1;
        continue;  // blank line
      }
      if (rows != 3 && cols != 3)
        fail(2, "ParseError", "line " + std::to_string(line_no) + ": neither dimension is 3");
      if (rows < 1 || cols < 1 || rows > 64 || cols > 64)
        fail(2, "ParseError", "line " + std::to_string(line_no) + ": unreasonable block size");
      continue;
    }
    if (int(data.size()) == rows) break;
    std::vector<long long> r;
    long long x;
    while (ls >> x) r.push_back(x);
    if (r.empty()) continue;
    if (int(r.size()) != cols)
      fail(2, "ParseError",
           "line " + std::to_string(line_no) + ": expected " + std::to_string(cols) +
               " integers");
    data.push_back(std::move(r));
  }
  if (rows < 0 || int(data.size()) != rows)
    fail(2, "ParseError", "no complete polytope block in " + path);
  IntMatrix block(static_cast<int>(rows), static_cast<int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) block.at(i, j) = data[size_t(i)][size_t(j)];
  IntMatrix vertices = rows == 3 ? block : block.transpose();
  return convex_hull_3d(vertices);
}

json invariants_json(const PrincipalInvariants& inv) {
  return json{{"rho", inv.rho}, {"r", inv.r}, {"deg", inv.deg}, {"b", inv.b}, {"d", inv.d}};
}

int cmd_inspect(const std::string& file) {
  LatticePolytope p = read_polytope(file);
  json out;
  out["v"] = p.vertex_count();
  if (is_reflexive(p)) {
    auto [fcs, prof] = classify_facets(p);
    out["p"] = prof.p;
    out["f"] = prof.f;
    out["reflexive"] = true;
    out["nodal"] = prof.is_nodal;
    out["smooth"] = prof.is_smooth;
  } else {
    out["p"] = nullptr;
    out["f"] = int(p.facets().size());
    out["reflexive"] = false;
    out["nodal"] = false;
    out["smooth"] = false;
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_invariants(const std::string& file, bool resolution_check) {
  LatticePolytope p = read_polytope(file);
  Analysis base = analyze_polytope(p);
  if (resolution_check) {
    const int quads = base.profile.p;
    if (quads > 20) fail(3, "Error", "too many nodes for an exhaustive resolution check");
    for (unsigned mask = 1; mask < (1u << quads); ++mask) {
      std::vector<bool> flips(static_cast<size_t>(quads));
      for (int q = 0; q < quads; ++q) flips[size_t(q)] = (mask >> q) & 1;
      Analysis alt = analyze_polytope(p, flips);
      if (!(alt.inv == base.inv) || !(alt.pic.gram == base.pic.gram))
        fail(3, "InconsistentSystem",
             "invariants differ across crepant resolutions (flip mask " +
                 std::to_string(mask) + ")");
    }
  }
  std::cout << invariants_json(base.inv).dump() << "\n";
  return 0;
}

int cmd_classify(const std::string& file, const std::string& catalog_path) {
  FamilyCatalog cat = load_family_catalog(catalog_path);
  LatticePolytope p = read_polytope(file);
  Analysis a = analyze_polytope(p);
  MatchResult m = match(a.inv, cat, &a.pic.gram);
  json out;
  out["family"] = m.family.label;
  out["used_d"] = m.used_d;
  out["invariants"] = invariants_json(a.inv);
  std::cout << out.dump() << "\n";
  return 0;
}

json report_json(const ScanReport& rep) {
  json rows = json::array();
  for (const Table2Row& r : rep.rows) {
    json row;
    row["family"] = r.family;
    row["rho"] = r.rho;
    row["deg"] = r.deg;
    row["b"] = r.b;
    if (r.d) row["d"] = *r.d; else row["d"] = nullptr;
    row["v"] = r.v;
    row["p"] = r.p;
    row["f"] = r.f;
    row["count"] = r.count;
    rows.push_back(std::move(row));
  }
  json out;
  out["total"] = rep.total;
  out["nodal"] = rep.nodal;
  out["smooth_toric"] = rep.smooth_toric;
  out["singular_nodal"] = rep.singular_nodal;
  out["rows"] = std::move(rows);
  out["relation_violations"] = rep.relation_violations;
  return out;
}

int cmd_scan(const std::string& db, const std::string& catalog_path,
             const std::string& prefix, int jobs) {
  FamilyCatalog cat = load_family_catalog(catalog_path);
  auto records = parse_database(db);
  ScanReport rep = scan(records, cat, jobs);
  json out = report_json(rep);
  {
    std::ofstream jf(prefix + ".report.json");
    if (!jf) fail(2, "FileError", "cannot write " + prefix + ".report.json");
    jf << out.dump(2) << "\n";
  }
  {
    std::ofstream cf(prefix + ".table2.csv");
    if (!cf) fail(2, "FileError", "cannot write " + prefix + ".table2.csv");
    cf << table2_to_csv(rep.rows);
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_period(const std::string& file, const std::string& expr, int terms) {
  LaurentPolynomial f;
  if (!expr.empty()) {
    f = parse_laurent(expr);
  } else {
    LatticePolytope p = read_polytope(file);
    if (!is_reflexive(p)) fail(2, "NotReflexive", "polytope is not reflexive");
    f = laurent_from_polytope(p);
  }
  PeriodSequence s = constant_terms(f, terms);
  // coefficients are arbitrary-precision integers; emit the JSON by hand
  std::string out = "{\"coefficients\":[";
  for (size_t i = 0; i < s.coefficients.size(); ++i) {
    if (i) out += ',';
    out += s.coefficients[i].str();
  }
  out += "]}";
  std::cout << out << "\n";
  return 0;
}

int classify_exception(const std::exception& e, std::string& type) {
  if (dynamic_cast<const ParseError*>(&e)) { type = "ParseError"; return 2; }
  if (dynamic_cast<const ValidationError*>(&e)) { type = "ValidationError"; return 2; }
  if (dynamic_cast<const OriginNotInterior*>(&e)) { type = "OriginNotInterior"; return 2; }
  if (dynamic_cast<const RedundantColumn*>(&e)) { type = "RedundantColumn"; return 2; }
  if (dynamic_cast<const DegenerateSpan*>(&e)) { type = "DegenerateSpan"; return 2; }
  if (dynamic_cast<const NotReflexive*>(&e)) { type = "NotReflexive"; return 2; }
  if (dynamic_cast<const NotNodal*>(&e)) { type = "NotNodal"; return 2; }
  if (dynamic_cast<const MalformedCatalog*>(&e)) { type = "MalformedCatalog"; return 2; }
  if (dynamic_cast<const AmbiguityNotResolvable*>(&e)) {
    type = "AmbiguityNotResolvable";
    return 2;
  }
  if (dynamic_cast<const NoMatch*>(&e)) { type = "NoMatch"; return 3; }
  if (dynamic_cast<const Ambiguous*>(&e)) { type = "Ambiguous"; return 3; }
  if (dynamic_cast<const InconsistentSystem*>(&e)) { type = "InconsistentSystem"; return 3; }
  if (dynamic_cast<const TorsionDetected*>(&e)) { type = "TorsionDetected"; return 3; }
  if (dynamic_cast<const AntiCanonicalNotCartier*>(&e)) {
    type = "AntiCanonicalNotCartier";
    return 3;
  }
  if (dynamic_cast<const DimensionMismatch*>(&e)) { type = "DimensionMismatch"; return 3; }
  type = "Error";
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants, classification and periods of nodal toric Fano threefolds"};
  app.require_subcommand(1);

  std::string file, catalog, db, prefix, laurent_expr;
  bool resolution_check = false;
  int terms = 8;
  int jobs = int(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  auto* inspect = app.add_subcommand("inspect", "facet profile of a fan polytope");
  inspect->add_option("file", file, "polytope file")->required();

  auto* inv = app.add_subcommand("invariants", "principal invariants (rho, r, deg, b, d)");
  inv->add_option("file", file, "polytope file")->required();
  inv->add_flag("--resolution-check", resolution_check,
                "recompute under all diagonal flips and fail on mismatch");

  auto* cls = app.add_subcommand("classify", "name the smooth Fano smoothing");
  cls->add_option("file", file, "polytope file")->required();
  cls->add_option("--catalog", catalog, "family catalog CSV")->required();

  auto* scn = app.add_subcommand("scan", "scan a polytope database and emit the tables");
  scn->add_option("db", db, "polytope database file")->required();
  scn->add_option("--catalog", catalog, "family catalog CSV")->required();
  scn->add_option("--out", prefix, "output prefix")->required();
  scn->add_option("--jobs", jobs, "worker count (default: available parallelism)");

  auto* per = app.add_subcommand("period", "constant-term period sequence");
  per->add_option("file", file, "polytope file");
  per->add_option("--laurent", laurent_expr, "Laurent polynomial expression");
  per->add_option("--terms", terms, "number of terms after c_0")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << json{{"error", {{"type", "UsageError"}, {"message", e.what()}}}}.dump()
              << "\n";
    return 1;
  }

  try {
    try {
      if (inspect->parsed()) return cmd_inspect(file);
      if (inv->parsed()) return cmd_invariants(file, resolution_check);
      if (cls->parsed()) return cmd_classify(file, catalog);
      if (scn->parsed()) {
        if (jobs < 1) fail(1, "UsageError", "--jobs must be positive");
        return cmd_scan(db, catalog, prefix, jobs);
      }
      if (per->parsed()) {
        if (laurent_expr.empty() && file.empty())
          fail(1, "UsageError", "period needs a polytope file or --laurent");
        if (terms < 0) fail(1, "UsageError", "--terms must be nonnegative");
        return cmd_period(file, laurent_expr, terms);
      }
      fail(1, "UsageError", "no subcommand");
    } catch (const Error& e) {
      std::string type;
      int code = classify_exception(e, type);
      fail(code, type, e.what());
    }
  } catch (const CommandError& ce) {
    std::cerr << json{{"error", {{"type", ce.type}, {"message", ce.message}}}}.dump() << "\n";
    return ce.code;
  }
  return 0;
}
