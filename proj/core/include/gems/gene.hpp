#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gems/schema.hpp"

namespace gems {

/// Hard cap on gene size; keeps canonicalization brute-forceable.
inline constexpr int kMaxGeneNodes = 6;

inline constexpr std::int8_t kCellForbidden = -1;
inline constexpr std::int8_t kCellAbsent = 0;
inline constexpr std::int8_t kCellPresent = 1;

/// A meta-structure gene: ordered type list (positions 0 and 1 pinned to the
/// schema target source/sink) plus a masked upper-triangular adjacency with
/// cells in {-1, 0, 1}. Immutable value; every operation returns a new gene.
class MetaStructureGene {
 public:
  /// Builds the gene from a type list and present edges; forbidden cells are
  /// derived from the schema. Throws ValidationError if an edge lands on a
  /// forbidden cell or indices are out of range.
  MetaStructureGene(const Schema& schema, std::vector<int> type_list,
                    const std::vector<std::pair<int, int>>& edges);

  /// The [source, sink] gene with the single target edge.
  static MetaStructureGene direct(const Schema& schema);

  int size() const { return static_cast<int>(types_.size()); }
  int type_at(int pos) const { return types_.at(pos); }
  const std::vector<int>& type_list() const { return types_; }

  /// Cell (i, j) with i < j.
  std::int8_t cell(int i, int j) const { return cells_[idx(i, j)]; }
  bool has_edge(int i, int j) const { return cell(i, j) == kCellPresent; }

  /// Present edges, (i, j) with i < j, lexicographically sorted.
  std::vector<std::pair<int, int>> edge_list() const;
  int edge_count() const;

  /// Positions adjacent to `pos` via present edges.
  std::vector<int> adjacent(int pos) const;

  bool operator==(const MetaStructureGene& other) const {
    return types_ == other.types_ && cells_ == other.cells_;
  }

 private:
  int idx(int i, int j) const { return i * size() + j; }
  std::vector<int> types_;
  std::vector<std::int8_t> cells_;  // n*n, strict upper triangle meaningful
};

/// Upper-triangular schema mask for a type list: 0 where the type pair is a
/// schema relation, -1 elsewhere. Returned flat, row-major n*n; only i < j
/// cells are meaningful.
std::vector<std::int8_t> mask_matrix(const Schema& schema,
                                     const std::vector<int>& type_list);

/// Number of non-forbidden upper-triangle cells in a mask.
int free_cell_count(const std::vector<std::int8_t>& mask, int n);

/// Violated gene invariants by name; empty means valid. Violations are data,
/// not errors. Names: "size", "target-types", "mask-mismatch",
/// "forbidden-link", "targets-disconnected", "side-branch".
std::vector<std::string> validate(const MetaStructureGene& gene,
                                  const Schema& schema);

inline bool is_valid(const MetaStructureGene& gene, const Schema& schema) {
  return validate(gene, schema).empty();
}

/// Gene string: `[T0,T1,...](i-j)(i-j)...` with i < j and edges sorted.
std::string serialize(const MetaStructureGene& gene, const Schema& schema);

/// Inverse of serialize. Checks grammar, type names and the schema mask;
/// throws ValidationError on either. Connectivity is not enforced here —
/// use validate().
MetaStructureGene parse_gene(const std::string& text, const Schema& schema);

/// Canonical key: the lexicographically smallest serialization over all
/// permutations of the non-target positions. Equal keys iff the genes are
/// isomorphic as typed graphs with pinned targets.
std::string canonicalize(const MetaStructureGene& gene, const Schema& schema);

/// Multiset of simple source-to-sink paths, each projected to a '-'-joined
/// type-name string, sorted. Works on candidate genes too (possibly empty).
std::vector<std::string> path_signature(const MetaStructureGene& gene,
                                        const Schema& schema);

/// Exact worst-case search-space size C(m^n * 2^(n*n), k).
boost::multiprecision::cpp_int search_space_size(int m, int n, int k);

}  // namespace gems
