#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace cliquelab {

using Element = std::int64_t;

// Work profile of one sorting run. Comparison sorts fill comparisons and
// swaps; the radix sort fills moves and radix_passes and never compares.
struct SortTally {
  std::uint64_t comparisons = 0;
  std::uint64_t swaps = 0;
  std::uint64_t moves = 0;
  std::uint64_t radix_passes = 0;

  std::uint64_t total_ops() const noexcept { return comparisons + swaps; }

  friend bool operator==(const SortTally&, const SortTally&) = default;
};

struct SortResult {
  std::vector<Element> output;
  SortTally tally;
};

// Restart variant: scan from the left; after every swap the scan index
// returns to the front. Quadratic in swaps by design; kept literal because
// its operation counts are the object of study, not its speed.
SortResult bubble_restart(std::span<const Element> input);

// Textbook variant: bounded passes that shrink by one from the right, with
// an early exit after any pass that performs no swap.
SortResult bubble_textbook(std::span<const Element> input);

// Top-down stable merge sort; the left half takes ceil(n/2) elements.
// Comparisons count element pairs examined during merges; moves count
// every element write into or out of scratch.
SortResult merge_sort(std::span<const Element> input);

// LSD binary radix sort over bit_width passes with two ping-pong buffers;
// requires nonnegative elements that fit in bit_width bits. moves ends at
// exactly bit_width * n and comparisons stays 0.
SortResult radix_sort_binary(std::span<const Element> input,
                             unsigned bit_width);
SortResult radix_sort_binary(std::span<const Element> input);

// Bit length of the largest element (minimum 1); the default pass count.
unsigned default_radix_width(std::span<const Element> input);

// [n, n-1, ..., 1]: the input that maximizes work for both bubble variants.
std::vector<Element> descending_input(std::size_t n);

// Exact number of out-of-order pairs, by the O(n^2) definition. Every swap
// in either bubble variant removes exactly one inversion, so this is the
// oracle for their swap counts.
std::uint64_t inversion_count(std::span<const Element> input);

enum class SortAlgorithm { BubbleRestart, BubbleTextbook, Merge, Radix };

const char* algorithm_name(SortAlgorithm alg);
std::optional<SortAlgorithm> algorithm_from_name(std::string_view name);

// radix_width 0 means the default width; ignored by comparison sorts.
SortResult run_sort(SortAlgorithm alg, std::span<const Element> input,
                    unsigned radix_width = 0);

// Runs the algorithm on every permutation of {1..n} and reports the
// largest comparison count plus the lexicographically first permutation
// attaining it. Guarded at n <= 8 (8! = 40320 runs).
struct WorstCaseScan {
  std::uint64_t max_comparisons = 0;
  std::vector<Element> witness;
};
WorstCaseScan worst_case_scan(SortAlgorithm alg, unsigned n);

}  // namespace cliquelab
