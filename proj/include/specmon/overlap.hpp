#ifndef SPECMON_OVERLAP_HPP_
#define SPECMON_OVERLAP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "specmon/word.hpp"

namespace specmon {

  using WordList = std::vector<Word>;

  // Drops empty words and later duplicates, keeping first occurrences.
  WordList reduce_list(std::span<Word const> xs);

  bool is_reduced_list(std::span<Word const> xs);

  // Sum of (|Y| - 1). Throws EmptyWordInList on an empty item.
  std::size_t omega(std::span<Word const> xs);

  // A split x = MN, y = NL with N and ML non-empty.
  struct OverlapSplit {
    Word m;
    Word n;
    Word l;
  };

  // Longest-N overlap of the ordered pair (x, y), if any. For x == y this is
  // a self-overlap at a proper offset.
  std::optional<OverlapSplit> find_overlap(Word const& x, Word const& y);

  bool overlaps(Word const& x, Word const& y);

  // True if some ordered pair of `xs` (self-pairs included) overlaps.
  bool has_overlap(std::span<Word const> xs);

  struct DeltaStep {
    std::size_t first;   // positions in the list before the step
    std::size_t second;
    OverlapSplit split;
    std::size_t omega_after;
  };

  struct DeltaTrace {
    std::size_t            omega_before = 0;
    std::vector<DeltaStep> steps;
  };

  // The fixpoint of the splitting algorithm. Pairs are scanned in
  // lexicographic order of positions, self-pairs included. Throws NotReduced
  // if `xs` has an empty word or a repeat.
  WordList delta(std::span<Word const> xs, DeltaTrace* trace = nullptr);

  // Greedy left-to-right factorization over a non-overlapping list. No member
  // is a prefix of another, so at most one member matches at each position.
  std::optional<std::vector<std::size_t>> factor_over(
      Word const& w, std::span<Word const> factors);

}  // namespace specmon

#endif  // SPECMON_OVERLAP_HPP_
