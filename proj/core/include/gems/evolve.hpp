#pragma once

#include <vector>

#include "gems/gene.hpp"
#include "gems/rng.hpp"

namespace gems {

struct MutationConfig {
  double p_mutate = 0.6;   // per gene per generation
  double p_complex = 0.5;  // node-add share among size-changing mutations
  int max_retries = 32;    // candidate attempts before giving up
  int max_nodes = kMaxGeneNodes;
};

/// One guarded mutation step. With probability p_mutate draws candidates
/// (edge flip / node add / node delete) until one passes all three rules:
/// only non-forbidden cells flip, the source-sink path multiset changes, and
/// side-branches are pruned away. Returns the input unchanged when the coin
/// says no or every retry fails.
MetaStructureGene mutate(const MetaStructureGene& gene, const Schema& schema,
                         const MutationConfig& cfg, Rng& rng);

/// Removes nodes (index >= 2) that lie on no simple source-sink path, to
/// fixpoint. Targets are never removed.
MetaStructureGene prune_side_branches(const MetaStructureGene& gene,
                                      const Schema& schema);

/// Uniformly random valid gene (used for population init on schemas where
/// the direct gene cannot mutate). Falls back to the direct gene when no
/// valid candidate is found within the attempt budget.
MetaStructureGene random_gene(const Schema& schema, int max_nodes, Rng& rng);

using GeneList = std::vector<MetaStructureGene>;

/// Per-slot gene exchange between random individual pairs. Genes themselves
/// are never modified; the population-wide multiset is preserved.
std::vector<GeneList> crossover(std::vector<GeneList> individuals,
                                double p_swap, Rng& rng);

/// Indices of the top ceil(survive_fraction * N) individuals by fitness,
/// ties broken toward the lower index. Result is in ascending index order.
std::vector<int> eliminate(const std::vector<double>& fitness,
                           double survive_fraction);

/// Fills a population back to target_size: every survivor is kept (elitism)
/// and the remaining slots sample survivors with probability proportional to
/// fitness - min(fitness) + epsilon. Returns source indices, the first
/// |survivors| being the survivors themselves.
std::vector<int> reproduce(const std::vector<int>& survivors,
                           const std::vector<double>& fitness, int target_size,
                           Rng& rng, double epsilon = 1e-6);

}  // namespace gems
