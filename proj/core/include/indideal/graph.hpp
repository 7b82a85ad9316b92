#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indideal/bitset.hpp"

namespace indideal {

// Finite simple graph. Vertices are 0-indexed internally; all text I/O
// (edge lists, family specs, rendered variables) is 1-indexed.
// Immutable after construction and safe to share across threads.
class Graph {
 public:
  // `edges` are 0-indexed pairs; duplicates are collapsed, loops rejected.
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  explicit Graph(std::size_t n) : Graph(n, {}) {}

  std::size_t vertex_count() const { return n_; }
  const Bitset& neighbors(std::size_t v) const { return adj_[v]; }
  bool has_edge(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }
  std::size_t edge_count() const;

  // Sorted list of 0-indexed edges (u < v).
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  bool is_complete() const;
  bool is_independent(const Bitset& set) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t n_;
  std::vector<Bitset> adj_;
};

enum class FamilyKind { path, cycle, cycle_power, centipede, complete };

// Parameters for the named graph families. `d` is used by cycle_power only.
struct FamilySpec {
  FamilyKind kind;
  long long n = 0;
  long long d = 0;

  // Throws ArgumentError when the parameters violate the family's domain
  // (path/complete/centipede: n >= 1; cycle: n >= 2; cycle_power: d >= 1
  // and n >= d+1).
  void validate() const;
};

// Spec string syntax: "path:N", "cycle:N", "cyclepow:N:D", "centipede:N",
// "complete:N".
FamilySpec parse_family_spec(std::string_view text);

Graph build_family(const FamilySpec& spec);

// Edge-list text: first non-comment line is the vertex count, every further
// non-comment line is "u v" with 1-indexed endpoints. '#' starts a comment,
// blank lines are skipped, duplicate edges are tolerated. Errors name the
// offending line.
Graph parse_edge_list(std::string_view text);

std::string family_kind_name(FamilyKind kind);

}  // namespace indideal
