#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fano3/invariants.hpp"

namespace fano3 {

/// One deformation class of smooth Fano threefolds.
struct FamilyRecord {
  std::string label;  // e.g. "V2.22", "B5", "Q", "P3"
  int rho = 0;
  int r = 0;
  long long deg = 0;
  int b = 0;
  std::optional<long long> d;  // present when (rho, r, deg, b) is ambiguous
  bool is_toric = false;
};

struct FamilyCatalog {
  std::vector<FamilyRecord> records;

  const FamilyRecord* find(const std::string& label) const {
    for (const auto& r : records)
      if (r.label == label) return &r;
    return nullptr;
  }
};

struct MatchResult {
  FamilyRecord family;
  bool used_d = false;
};

// ----------------------------------------------------------------------
// Binary quadratic form tag, used as a last-resort disambiguator for the
// catalog pairs whose discriminants coincide. For a rank-2 Gram matrix whose
// form represents zero (square discriminant) the GL2(Z)-class is determined
// by (h, c mod h): bring an isotropic vector to (1, 0), so the form becomes
// h*x*y + c*y^2, and minimize over the two isotropic lines.
// ----------------------------------------------------------------------

namespace detail {

inline std::optional<std::pair<Integer, Integer>> square_disc_tag(const IntMatrix& g) {
  if (g.rows() != 2 || g.cols() != 2) return std::nullopt;
  Integer det = g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(0, 1);
  if (det >= 0) return std::nullopt;
  Integer disc = -det;  // = h'^2 for forms representing zero
  Integer hp = boost::multiprecision::sqrt(disc);
  if (hp * hp != disc) return std::nullopt;

  auto primitive2 = [](Integer a, Integer b) {
    Integer gg = gcd_int(abs_int(a), abs_int(b));
    if (gg > 1) { a /= gg; b /= gg; }
    return std::pair<Integer, Integer>(a, b);
  };
  std::vector<std::pair<Integer, Integer>> lines;
  if (g.at(0, 0) == 0) {
    lines.push_back({1, 0});
    lines.push_back(primitive2(-g.at(1, 1), 2 * g.at(0, 1)));
  } else {
    lines.push_back(primitive2(-g.at(0, 1) + hp, g.at(0, 0)));
    lines.push_back(primitive2(-g.at(0, 1) - hp, g.at(0, 0)));
  }

  std::optional<std::pair<Integer, Integer>> best;
  for (auto [a, b] : lines) {
    // complete (a, b) to a basis with (s, t): a*t - b*s = 1
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      Integer q = old_r / r;
      Integer nr = old_r - q * r, ns = old_s - q * s, nt = old_t - q * t;
      old_r = r; r = nr;
      old_s = s; s = ns;
      old_t = t; t = nt;
    }
    // old_r = gcd = +-1; a*old_s + b*old_t = old_r
    Integer ws = -old_t * old_r, wt = old_s * old_r;  // a*wt - b*ws = 1
    auto B = [&](const Integer& x1, const Integer& y1, const Integer& x2, const Integer& y2) {
      return g.at(0, 0) * x1 * x2 + g.at(0, 1) * (x1 * y2 + y1 * x2) + g.at(1, 1) * y1 * y2;
    };
    Integer qv = B(a, b, a, b);
    if (qv != 0) continue;  // not isotropic; cannot happen for true lines
    Integer n = B(a, b, ws, wt);
    Integer c = B(ws, wt, ws, wt);
    if (n < 0) n = -n;  // w -> -w
    if (n == 0) continue;
    Integer modulus = 2 * n;
    Integer cr = c % modulus;
    if (cr < 0) cr += modulus;
    std::pair<Integer, Integer> tag{modulus, cr};
    if (!best || tag < *best) best = tag;
  }
  return best;
}

/// Reference Gram forms for catalog entries that collide in all five
/// principal invariants. Both deg-54 families are toric with d = -9; their
/// anticanonical forms are inequivalent and settle the match.
inline const std::map<std::string, IntMatrix>& reference_forms() {
  static const std::map<std::string, IntMatrix> forms = {
      {"V2.33", IntMatrix{{4, 1}, {1, -2}}},
      {"V2.34", IntMatrix{{0, 3}, {3, 2}}},
  };
  return forms;
}

inline bool forms_distinguish(const std::vector<const FamilyRecord*>& tied) {
  std::vector<std::pair<Integer, Integer>> tags;
  for (const FamilyRecord* r : tied) {
    auto it = reference_forms().find(r->label);
    if (it == reference_forms().end()) return false;
    auto tag = square_disc_tag(it->second);
    if (!tag) return false;
    tags.push_back(*tag);
  }
  std::sort(tags.begin(), tags.end());
  return std::adjacent_find(tags.begin(), tags.end()) == tags.end();
}

}  // namespace detail

// ----------------------------------------------------------------------
// catalog loading
// ----------------------------------------------------------------------

inline FamilyCatalog load_family_catalog(std::istream& in) {
  FamilyCatalog cat;
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
      if (ch == ',') { fields.push_back(cur); cur.clear(); }
      else if (ch != '\r') cur += ch;
    }
    fields.push_back(cur);
    if (!saw_header) {
      if (line != "label,rho,r,deg,b,d,is_toric" &&
          line != "label,rho,r,deg,b,d,is_toric\r")
        throw MalformedCatalog("unexpected header: " + line);
      saw_header = true;
      continue;
    }
    if (fields.size() != 7)
      throw MalformedCatalog("line " + std::to_string(line_no) + ": expected 7 fields");
    FamilyRecord rec;
    try {
      rec.label = fields[0];
      rec.rho = std::stoi(fields[1]);
      rec.r = std::stoi(fields[2]);
      rec.deg = std::stoll(fields[3]);
      rec.b = std::stoi(fields[4]);
      if (!fields[5].empty()) rec.d = std::stoll(fields[5]);
      rec.is_toric = fields[6] == "1" || fields[6] == "true";
    } catch (const std::exception&) {
      throw MalformedCatalog("line " + std::to_string(line_no) + ": bad field");
    }
    if (rec.label.empty() || rec.rho < 1 || rec.r < 1 || rec.r > 4 || rec.deg <= 0 ||
        rec.b < 0)
      throw MalformedCatalog("line " + std::to_string(line_no) + ": invalid record");
    cat.records.push_back(std::move(rec));
  }
  if (!saw_header) throw MalformedCatalog("missing header");

  // label uniqueness
  {
    std::map<std::string, int> seen;
    for (const auto& r : cat.records)
      if (++seen[r.label] > 1) throw MalformedCatalog("duplicate label " + r.label);
  }
  // (rho, r, deg, b) collisions must be resolvable, by d or by the embedded
  // reference forms when d values coincide
  {
    std::map<std::tuple<int, int, long long, int>, std::vector<const FamilyRecord*>> groups;
    for (const auto& r : cat.records)
      groups[{r.rho, r.r, r.deg, r.b}].push_back(&r);
    for (const auto& [key, recs] : groups) {
      if (recs.size() < 2) continue;
      std::map<long long, std::vector<const FamilyRecord*>> by_d;
      for (const FamilyRecord* r : recs) {
        if (!r->d)
          throw AmbiguityNotResolvable("family " + r->label +
                                       " collides in (rho,r,deg,b) but carries no d");
        by_d[*r->d].push_back(r);
      }
      for (const auto& [dval, same_d] : by_d)
        if (same_d.size() > 1 && !detail::forms_distinguish(same_d))
          throw AmbiguityNotResolvable("families with equal invariants and d = " +
                                       std::to_string(dval) + " cannot be separated");
    }
  }
  if (cat.records.size() != 105)
    throw MalformedCatalog("expected 105 families, found " +
                           std::to_string(cat.records.size()));
  return cat;
}

inline FamilyCatalog load_family_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedCatalog("cannot open catalog file " + path);
  return load_family_catalog(in);
}

// ----------------------------------------------------------------------
// matching
// ----------------------------------------------------------------------

/// Unique family with the given invariants; `gram` is consulted only when
/// two catalog records agree even in d.
inline MatchResult match(const PrincipalInvariants& inv, const FamilyCatalog& cat,
                         const IntMatrix* gram = nullptr) {
  std::vector<const FamilyRecord*> hits;
  for (const auto& rec : cat.records)
    if (rec.rho == inv.rho && rec.r == inv.r && rec.deg == inv.deg && rec.b == inv.b)
      hits.push_back(&rec);
  if (hits.empty())
    throw NoMatch("no family with (rho,r,deg,b) = (" + std::to_string(inv.rho) + "," +
                  std::to_string(inv.r) + "," + std::to_string(inv.deg) + "," +
                  std::to_string(inv.b) + ")");
  if (hits.size() == 1) return {*hits[0], false};

  std::vector<const FamilyRecord*> by_d;
  for (const FamilyRecord* rec : hits)
    if (rec->d && *rec->d == inv.d) by_d.push_back(rec);
  if (by_d.empty())
    throw NoMatch("no family with d = " + std::to_string(inv.d) +
                  " among the ambiguous candidates");
  if (by_d.size() == 1) return {*by_d[0], true};

  if (gram) {
    auto tag = detail::square_disc_tag(*gram);
    if (tag) {
      std::vector<const FamilyRecord*> by_form;
      for (const FamilyRecord* rec : by_d) {
        auto it = detail::reference_forms().find(rec->label);
        if (it == detail::reference_forms().end()) continue;
        auto rtag = detail::square_disc_tag(it->second);
        if (rtag && *rtag == *tag) by_form.push_back(rec);
      }
      if (by_form.size() == 1) return {*by_form[0], true};
    }
  }
  throw Ambiguous("multiple families share (rho,r,deg,b,d)");
}

// ----------------------------------------------------------------------
// Table 2: singular nodal polytopes grouped by smoothing family and profile
// ----------------------------------------------------------------------

struct Table2Row {
  std::string family;
  int rho = 0;
  long long deg = 0;
  int b = 0;
  std::optional<long long> d;  // shown when the match needed it
  int v = 0, p = 0, f = 0;
  int count = 0;

  bool operator==(const Table2Row&) const = default;
};

using Table2 = std::vector<Table2Row>;

namespace detail {

inline void sort_table2(Table2& rows) {
  std::sort(rows.begin(), rows.end(), [](const Table2Row& a, const Table2Row& b) {
    return std::tie(a.rho, a.deg, a.family, a.v, a.p, a.f) <
           std::tie(b.rho, b.deg, b.family, b.v, b.p, b.f);
  });
}

}  // namespace detail

/// Aggregates match results; rows keyed by (family, (v,p,f)) with counts,
/// sorted by (rho, deg, label, v).
inline Table2 aggregate_table2(const std::vector<std::pair<MatchResult, NodalProfile>>& items) {
  std::map<std::pair<std::string, std::array<int, 3>>, Table2Row> acc;
  for (const auto& [m, prof] : items) {
    auto key = std::make_pair(m.family.label, std::array<int, 3>{prof.v, prof.p, prof.f});
    auto it = acc.find(key);
    if (it == acc.end()) {
      Table2Row row;
      row.family = m.family.label;
      row.rho = m.family.rho;
      row.deg = m.family.deg;
      row.b = m.family.b;
      if (m.used_d) row.d = m.family.d;
      row.v = prof.v;
      row.p = prof.p;
      row.f = prof.f;
      row.count = 1;
      acc.emplace(key, std::move(row));
    } else {
      ++it->second.count;
    }
  }
  Table2 rows;
  rows.reserve(acc.size());
  for (auto& [k, row] : acc) rows.push_back(std::move(row));
  detail::sort_table2(rows);
  return rows;
}

/// Runs the full pipeline on each polytope (all must be nodal; the singular
/// ones produce rows) and assembles the table.
inline Table2 build_table2(const FamilyCatalog& cat,
                           const std::vector<LatticePolytope>& polytopes) {
  std::vector<std::pair<MatchResult, NodalProfile>> items;
  for (const auto& poly : polytopes) {
    Analysis a = analyze_polytope(poly);
    if (a.profile.is_smooth) continue;
    MatchResult m = match(a.inv, cat, &a.pic.gram);
    items.emplace_back(std::move(m), a.profile);
  }
  return aggregate_table2(items);
}

inline std::string table2_to_csv(const Table2& rows) {
  std::string out = "family,rho,deg,b,d,v,p,f,count\n";
  for (const Table2Row& r : rows) {
    out += r.family + ',' + std::to_string(r.rho) + ',' + std::to_string(r.deg) + ',' +
           std::to_string(r.b) + ',' + (r.d ? std::to_string(*r.d) : std::string()) + ',' +
           std::to_string(r.v) + ',' + std::to_string(r.p) + ',' + std::to_string(r.f) +
           ',' + std::to_string(r.count) + '\n';
  }
  return out;
}

}  // namespace fano3
