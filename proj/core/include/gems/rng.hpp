#pragma once

#include <cstdint>
#include <random>

namespace gems {

// splitmix64 step; used to derive independent seed streams from a master
// seed plus structural coordinates (generation, individual, role, ...).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a) {
  return mix64(seed ^ mix64(a));
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b) {
  return derive_seed(derive_seed(seed, a), b);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b, std::uint64_t c) {
  return derive_seed(derive_seed(seed, a, b), c);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b, std::uint64_t c,
                                 std::uint64_t d) {
  return derive_seed(derive_seed(seed, a, b, c), d);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Role tags keep derived streams from colliding across call sites.
namespace role {
inline constexpr std::uint64_t split = 0x5350u;       // dataset split
inline constexpr std::uint64_t synth = 0x53594eu;     // synthetic generator
inline constexpr std::uint64_t init = 0x494e49u;      // parameter init
inline constexpr std::uint64_t mutate = 0x4d5554u;    // gene mutation
inline constexpr std::uint64_t crossover = 0x43524fu; // crossover
inline constexpr std::uint64_t dedup = 0x444455u;     // duplicate re-mutation
inline constexpr std::uint64_t tables = 0x544142u;    // adjacency search
inline constexpr std::uint64_t train = 0x54524eu;     // gcn training
inline constexpr std::uint64_t eval = 0x45564cu;      // ranking evaluation
inline constexpr std::uint64_t pool = 0x504f4fu;      // gene pool init
inline constexpr std::uint64_t predictor = 0x505244u; // surrogate
}  // namespace role

}  // namespace gems
