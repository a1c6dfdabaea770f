#pragma once

#include <stdexcept>
#include <string>

namespace fano3 {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- geometry ----------------------------------------------------------

struct DegenerateSpan : Error {
  explicit DegenerateSpan(const std::string& msg = "points do not affinely span 3-space")
      : Error(msg) {}
};

struct OriginNotInterior : Error {
  explicit OriginNotInterior(const std::string& msg = "origin is not strictly interior")
      : Error(msg) {}
};

struct RedundantColumn : Error {
  int column;
  explicit RedundantColumn(int col)
      : Error("column " + std::to_string(col) + " lies in the convex hull of the others"),
        column(col) {}
};

struct NotReflexive : Error {
  explicit NotReflexive(const std::string& msg = "polytope is not reflexive") : Error(msg) {}
};

struct NotNodal : Error {
  explicit NotNodal(const std::string& msg = "polytope has a facet worse than a node")
      : Error(msg) {}
};

// -- linear algebra / intersection theory ------------------------------

struct InconsistentSystem : Error {
  explicit InconsistentSystem(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct TorsionDetected : Error {
  explicit TorsionDetected(const std::string& msg = "class group has torsion") : Error(msg) {}
};

struct AntiCanonicalNotCartier : Error {
  explicit AntiCanonicalNotCartier(const std::string& msg = "-K is not Cartier") : Error(msg) {}
};

// -- catalogs and matching ---------------------------------------------

struct MalformedCatalog : Error {
  explicit MalformedCatalog(const std::string& msg) : Error(msg) {}
};

struct AmbiguityNotResolvable : Error {
  explicit AmbiguityNotResolvable(const std::string& msg) : Error(msg) {}
};

struct NoMatch : Error {
  explicit NoMatch(const std::string& msg) : Error(msg) {}
};

struct Ambiguous : Error {
  explicit Ambiguous(const std::string& msg) : Error(msg) {}
};

// -- file ingestion ----------------------------------------------------

struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct ValidationError : Error {
  int record_id;
  ValidationError(int id, const std::string& msg)
      : Error("record " + std::to_string(id) + ": " + msg), record_id(id) {}
};

}  // namespace fano3
