#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gems/gene.hpp"
#include "gems/hin.hpp"

namespace gems {

inline constexpr int kUncapped = std::numeric_limits<int>::max();

/// Per-source sampled sink lists induced by one gene (the materialized N_M).
/// Multiplicity is retained: a sink reachable through many instances appears
/// once per surviving instance.
struct NeighborTable {
  std::string gene_key;
  std::vector<std::vector<int>> neighbors;  // indexed by source node id
  int expansion_cap = kUncapped;
  int per_source_cap = kUncapped;

  std::size_t total_entries() const;
};

/// Forward (gene source -> sink) and reverse tables built from the same
/// instance enumeration.
struct TablePair {
  NeighborTable fwd;
  NeighborTable rev;
};

struct MatchCaps {
  int expansion = 20;    // neighbor candidates kept per DFS extension
  int per_source = 50;   // reservoir size per source list
};

struct MatchStep {
  enum class Kind { extend, check };
  Kind kind;
  int from_pos = -1;  // bound endpoint (extend) / first endpoint (check)
  int to_pos = -1;    // newly bound endpoint / second endpoint
  int relation = -1;
};

/// Spanning-tree visit order rooted at the gene position whose type has the
/// biggest total degree in the HIN; non-tree gene edges become junction
/// checks placed as early as both endpoints are bound.
struct MatchPlan {
  int root_pos = 0;
  std::vector<MatchStep> steps;

  int extension_count() const;
  int check_count() const;
};

MatchPlan plan(const MetaStructureGene& gene, const Schema& schema,
               const Hin& hin);

/// Sampled homomorphic instance matching over the match plan. Deterministic
/// under (gene, hin, caps, seed). Uncapped materialization enumerates every
/// instance exactly.
TablePair materialize(const MetaStructureGene& gene, const Schema& schema,
                      const Hin& hin, const MatchCaps& caps,
                      std::uint64_t seed);

/// Exhaustive backtracking oracle: binds gene positions in index order with
/// no sampling. Intended for small graphs and tests.
TablePair brute_force_instances(const MetaStructureGene& gene,
                                const Schema& schema, const Hin& hin);

/// Export grammar: gene-key header then `src<TAB>sink,sink,...` lines.
std::string table_to_text(const NeighborTable& table);

}  // namespace gems
