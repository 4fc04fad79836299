#pragma once

#include <array>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "gems/hin.hpp"
#include "gems/rng.hpp"
#include "gems/schema.hpp"

namespace gems {

enum class Split : std::uint8_t { train = 0, val = 1, test = 2 };

/// Positive interactions with their split tags and the train-side item
/// popularity used by frequency-proportional negative sampling.
struct InteractionDataset {
  std::vector<std::pair<int, int>> positives;  // (user, item)
  std::vector<Split> split_tags;               // parallel to positives
  std::vector<std::int64_t> item_frequency;    // over train positives
  int user_count = 0;
  int item_count = 0;

  std::vector<int> record_indices(Split s) const;
  std::vector<std::pair<int, int>> records(Split s) const;

  /// All positives of one user across every split (eval exclusion set).
  std::unordered_set<int> user_positive_items(int user) const;

  /// Train positives of one user (train-time exclusion set).
  std::unordered_set<int> user_train_items(int user) const;
};

/// Tags each target-relation edge train/val/test under a seeded permutation.
/// Bucket sizes are the rounded fractions of the edge count.
InteractionDataset split_dataset(const Schema& schema, const Hin& hin,
                                 std::array<double, 3> ratios,
                                 std::uint64_t seed);

/// Draws k item ids proportional to train frequency (with replacement,
/// rejecting `exclude`). Falls back to uniform over non-excluded items when
/// no non-excluded item carries frequency mass.
std::vector<int> sample_negatives(const InteractionDataset& ds, int k,
                                  const std::unordered_set<int>& exclude,
                                  Rng& rng);

}  // namespace gems
