#pragma once

#include <optional>
#include <utility>

namespace tricrit::verify {

/// Recorded meet-in-the-middle total depths for the even-rank SL generation
/// search. These are verified decisions, not guesses: rank 4 finds all 12
/// elementary targets at depth 14 (7 forward + 7 backward, longest witness
/// 12), rank 6 needs depth 20 (depth 18 still misses one target). A rank
/// without an entry makes the even-rank check INCONCLUSIVE unless a depth is
/// passed explicitly.
inline constexpr std::pair<unsigned, unsigned> kPinnedEvenDepths[] = {{4, 14}, {6, 20}};

inline std::optional<unsigned> pinned_even_depth(unsigned n) {
  for (auto [rank, depth] : kPinnedEvenDepths)
    if (rank == n) return depth;
  return std::nullopt;
}

/// Ranks above this skip the subgroup enumerations (the signed-permutation
/// subgroup outgrows any reasonable closure cap) and the even-rank search.
inline constexpr unsigned kMaxEnumerationRank = 6;

}  // namespace tricrit::verify
