#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "phidim/exactmat.hpp"

namespace phidim {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A natural number or infinity.
class ExtCount {
 public:
  static ExtCount finite(std::size_t n) { return ExtCount(n); }
  static ExtCount infinite() { return ExtCount(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  std::size_t value() const {
    if (!value_) throw DomainError("value of an infinite count");
    return *value_;
  }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }

  friend bool operator==(const ExtCount&, const ExtCount&) = default;

 private:
  ExtCount() = default;
  explicit ExtCount(std::size_t n) : value_(n) {}
  std::optional<std::size_t> value_;
};

/// Finite quiver stored as an arrow-multiplicity matrix: entry (i, j) counts
/// the arrows i -> j. Arrows carry no individual identity.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertex_names, IntMatrix arrow_mult);
  /// Vertices named "1".."n".
  explicit Quiver(IntMatrix arrow_mult);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const IntMatrix& arrow_mult() const noexcept { return mult_; }
  const Integer& arrows(std::size_t from, std::size_t to) const { return mult_(from, to); }
  bool has_arrow(std::size_t from, std::size_t to) const { return mult_(from, to) != 0; }
  Integer arrow_count() const;

  /// Index of a vertex by name; throws LookupError.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> names_;
  IntMatrix mult_;
};

struct VertexClassification {
  std::set<std::size_t> sources;
  std::set<std::size_t> sinks;
  std::set<std::size_t> isolated;
};

enum class Direction { Into, OutOf };

Quiver parse_quiver(std::string_view text);
std::string serialize_quiver(const Quiver& q);

IntMatrix adjacency(const Quiver& q);
Quiver opposite(const Quiver& q);
VertexClassification classify_vertices(const Quiver& q);
bool is_connected(const Quiver& q);
/// Connected, and every vertex has exactly one outgoing and one incoming arrow.
bool is_cycle(const Quiver& q);
ExtCount longest_path_length(const Quiver& q);
bool has_oriented_cycle(const Quiver& q);

bool has_exact_path(const Quiver& q, std::size_t v, std::size_t m, Direction direction);

/// For each length m in [0, max_length], which vertices end (Into) or start
/// (OutOf) a directed path of exactly that length.
class PathExistence {
 public:
  PathExistence(const Quiver& q, std::size_t max_length);

  std::size_t max_length() const noexcept { return into_.size() - 1; }
  bool into(std::size_t v, std::size_t m) const { return into_.at(m).at(v); }
  bool out_of(std::size_t v, std::size_t m) const { return out_.at(m).at(v); }

 private:
  std::vector<std::vector<bool>> into_;
  std::vector<std::vector<bool>> out_;
};

/// Full subquiver on the given vertex indices (kept in ascending order).
Quiver full_subquiver(const Quiver& q, const std::vector<std::size_t>& vertices);

/// Vertex sets of the connected components of the underlying undirected
/// graph, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> connected_components(const Quiver& q);

/// Full subquiver on vertices v with a length-l path in and a length-(k-l)
/// path out, for some 1 <= l <= k-1. Empty result is a 0-vertex marker.
std::optional<Quiver> reduced_core(const Quiver& q, std::size_t k);
std::vector<std::size_t> reduced_core_vertices(const Quiver& q, std::size_t k);

/// Adds one loop at every source and at every sink.
Quiver saturate_with_loops(const Quiver& q);

Quiver disjoint_union(const Quiver& a, const Quiver& b);

}  // namespace phidim
