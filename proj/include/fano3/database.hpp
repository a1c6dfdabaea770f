#pragma once

#include <atomic>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fano3/families.hpp"

namespace fano3 {

/// Canonical vertex matrix under GL(3,Z) x column permutation. For every
/// ordered triple of independent vertices, the unimodular transform that
/// brings the triple into Hermite form yields one candidate matrix; columns
/// are sorted descending and the lexicographically largest candidate wins.
/// Constant on orbits because triples of an image polytope are images of
/// triples, and the Hermite reduction absorbs the coordinate change.
inline IntMatrix normal_form(const LatticePolytope& poly) {
  const int v = poly.vertex_count();
  const IntMatrix& verts = poly.vertices();
  std::optional<IntMatrix> best;
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b)
      for (int c = 0; c < v; ++c) {
        if (a == b || a == c || b == c) continue;
        IntMatrix t(3, 3);
        for (int i = 0; i < 3; ++i) {
          t.at(i, 0) = verts.at(i, a);
          t.at(i, 1) = verts.at(i, b);
          t.at(i, 2) = verts.at(i, c);
        }
        if (determinant(t) == 0) continue;
        HermiteResult h = hermite_normal_form(t);
        IntMatrix cand = h.u * verts;
        // sort columns descending
        std::vector<std::vector<Integer>> cols(static_cast<size_t>(v));
        for (int j = 0; j < v; ++j) cols[size_t(j)] = cand.column(j);
        std::sort(cols.begin(), cols.end(),
                  [](const auto& x, const auto& y) { return y < x; });
        for (int j = 0; j < v; ++j)
          for (int i = 0; i < 3; ++i) cand.at(i, j) = cols[size_t(j)][size_t(i)];
        if (!best || cand > *best) best = std::move(cand);
      }
  if (!best) throw DegenerateSpan();
  return *best;
}

struct PolytopeRecord {
  int id = 0;  // index in the source file
  LatticePolytope polytope;
  IntMatrix normal_form;
};

/// Plain-text polytope list: repeated blocks of a header `R C` followed by R
/// lines of C integers; `#` lines are comments. A `3 v` block stores one
/// vertex per column, a `v 3` block one vertex per row.
inline std::vector<PolytopeRecord> parse_database(std::istream& in) {
  std::vector<PolytopeRecord> out;
  std::string line;
  int line_no = 0;
  auto next_content_line = [&](std::string& dst) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      size_t pos = line.find('#');
      if (pos != std::string::npos) line.erase(pos);
      bool blank = true;
      for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch))) { blank = false; break; }
      if (blank) continue;
      dst = line;
      return true;
    }
    return false;
  };

  std::string header;
  while (next_content_line(header)) {
    std::istringstream hs(header);
    long long r = 0, c = 0;
    if (!(hs >> r >> c)) throw ParseError(line_no, "expected a `rows cols` header");
    std::string trailing;
    if (hs >> trailing) throw ParseError(line_no, "unexpected token after header");
    if (r != 3 && c != 3) throw ParseError(line_no, "neither dimension equals 3");
    if (r < 1 || c < 1 || r > 64 || c > 64) throw ParseError(line_no, "unreasonable block size");

    IntMatrix block(static_cast<int>(r), static_cast<int>(c));
    for (int i = 0; i < r; ++i) {
      std::string row;
      if (!next_content_line(row)) throw ParseError(line_no, "unexpected end of file in block");
      std::istringstream rs(row);
      for (int j = 0; j < c; ++j) {
        long long x;
        if (!(rs >> x)) throw ParseError(line_no, "expected " + std::to_string(c) + " integers");
        block.at(i, j) = x;
      }
      long long extra;
      if (rs >> extra) throw ParseError(line_no, "too many integers on row");
    }

    IntMatrix vertices = (r == 3) ? block : block.transpose();
    const int id = int(out.size());
    try {
      LatticePolytope poly = convex_hull_3d(vertices);
      if (!is_reflexive(poly))
        throw ValidationError(id, "polytope is not reflexive");
      IntMatrix nf = normal_form(poly);
      out.push_back({id, std::move(poly), std::move(nf)});
    } catch (const ValidationError&) {
      throw;
    } catch (const Error& e) {
      throw ValidationError(id, e.what());
    }
  }
  return out;
}

inline std::vector<PolytopeRecord> parse_database(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open database file " + path);
  return parse_database(in);
}

struct ScanReport {
  long long total = 0;
  long long nodal = 0;
  long long smooth_toric = 0;
  long long singular_nodal = 0;
  Table2 rows;
  std::vector<std::string> relation_violations;  // expected empty
};

/// Filters nodal polytopes, splits smooth from singular, runs the invariant
/// and matching pipeline on the singular ones and assembles Table 2. The
/// per-record stage is pure, so records are distributed over `jobs` workers;
/// aggregation happens in file order and the report is deterministic.
inline ScanReport scan(const std::vector<PolytopeRecord>& records, const FamilyCatalog& cat,
                       int jobs = 1) {
  struct PerRecord {
    bool nodal = false;
    bool smooth = false;
    bool matched = false;
    MatchResult m;
    NodalProfile prof;
    std::string violation;
    std::exception_ptr error;
  };
  std::vector<PerRecord> results(records.size());

  auto work_one = [&](size_t idx) {
    PerRecord& r = results[idx];
    try {
      auto [facets, prof] = classify_facets(records[idx].polytope);
      r.prof = prof;
      if (!prof.is_nodal) return;
      r.nodal = true;
      if (prof.is_smooth) {
        r.smooth = true;  // smooth toric Fano: its own smoothing, no matching
        return;
      }
      Analysis a = analyze_polytope(records[idx].polytope);
      r.m = match(a.inv, cat, &a.pic.gram);
      r.matched = true;
      r.prof = a.profile;
      if (!check_relation_v_p_rho_b(a.profile, a.inv.rho, a.inv.b))
        r.violation = "record " + std::to_string(records[idx].id) + ": v - p = " +
                      std::to_string(a.profile.v - a.profile.p) + " but 3 + rho - b = " +
                      std::to_string(3 + a.inv.rho - a.inv.b);
    } catch (...) {
      r.error = std::current_exception();
    }
  };

  if (jobs <= 1 || records.size() < 2) {
    for (size_t i = 0; i < records.size(); ++i) work_one(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    int n = std::min<int>(jobs, int(records.size()));
    for (int t = 0; t < n; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < records.size(); i = next.fetch_add(1))
          work_one(i);
      });
    for (auto& th : pool) th.join();
  }

  ScanReport rep;
  rep.total = static_cast<long long>(records.size());
  std::vector<std::pair<MatchResult, NodalProfile>> items;
  for (size_t i = 0; i < records.size(); ++i) {
    const PerRecord& r = results[i];
    if (r.error) {
      try {
        std::rethrow_exception(r.error);
      } catch (const NoMatch& e) {
        throw NoMatch("record " + std::to_string(records[i].id) + ": " + e.what());
      } catch (const Ambiguous& e) {
        throw Ambiguous("record " + std::to_string(records[i].id) + ": " + e.what());
      } catch (const Error& e) {
        throw ValidationError(records[i].id, e.what());
      }
    }
    if (!r.nodal) continue;
    ++rep.nodal;
    if (r.smooth) {
      ++rep.smooth_toric;
      continue;
    }
    ++rep.singular_nodal;
    items.emplace_back(r.m, r.prof);
    if (!r.violation.empty()) rep.relation_violations.push_back(r.violation);
  }
  rep.rows = aggregate_table2(items);
  return rep;
}

}  // namespace fano3
