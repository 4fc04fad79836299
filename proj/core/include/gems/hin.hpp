#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gems/schema.hpp"

namespace gems {

/// Typed multigraph storage: per-relation edge lists plus adjacency indexed
/// from both endpoint sides. Relations are undirected; adjacency lists are
/// sorted so membership tests can bisect.
class Hin {
 public:
  Hin(const Schema& schema, std::vector<int> node_counts,
      std::vector<std::vector<std::pair<int, int>>> edges_per_relation);

  int node_count(int type) const { return node_counts_.at(type); }
  const std::vector<int>& node_counts() const { return node_counts_; }

  const std::vector<std::pair<int, int>>& edges(int relation) const {
    return edges_[relation];
  }
  std::size_t edge_count(int relation) const { return edges_[relation].size(); }

  /// Neighbors of `node` (a node of `from_type`) across `relation`.
  /// For a same-type relation the list merges both endpoints.
  const std::vector<int>& neighbors(int relation, int from_type,
                                    int node) const;

  /// True when `a` (of from_type) and `b` are joined by `relation`.
  bool has_edge(int relation, int from_type, int a, int b) const;

  /// Degree of one node under one relation.
  int degree(int relation, int from_type, int node) const {
    return static_cast<int>(neighbors(relation, from_type, node).size());
  }

  /// Total number of edge endpoints touching a type, over all relations.
  /// Used to pick the match-plan root ("biggest degree" type).
  std::int64_t type_degree_total(int type) const {
    return type_degree_total_.at(type);
  }

 private:
  std::vector<int> node_counts_;
  std::vector<std::vector<std::pair<int, int>>> edges_;
  // adj_[r][0]: a-side -> b neighbors; adj_[r][1]: b-side -> a neighbors.
  // Same-type relations use slot 0 only, symmetrized.
  std::vector<std::vector<std::vector<int>>> adj_a_;
  std::vector<std::vector<std::vector<int>>> adj_b_;
  std::vector<int> rel_a_;
  std::vector<int> rel_b_;
  std::vector<std::int64_t> type_degree_total_;
};

/// Loads a tab-separated edge file (`relation<TAB>src<TAB>dst`, optional
/// `#count <type> <n>` headers). Duplicate edges are dropped with a warning
/// counter; unknown relations and out-of-range ids throw ValidationError.
Hin load_hin(const Schema& schema, const std::string& edges_path);

/// Parses edge lines from text (same grammar as load_hin).
Hin hin_from_edge_text(const Schema& schema, const std::string& text);

/// Serializes the HIN back to the edge-file grammar, counts first.
std::string hin_to_edge_text(const Schema& schema, const Hin& hin);

/// Copy of `hin` with the target relation's edges replaced. Used to expose
/// only train-split interactions to instance matching.
Hin with_target_edges(const Schema& schema, const Hin& hin,
                      std::vector<std::pair<int, int>> target_edges);

}  // namespace gems
