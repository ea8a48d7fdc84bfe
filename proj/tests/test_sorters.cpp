#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cliquelab/rng.hpp"
#include "cliquelab/sorters.hpp"

using namespace cliquelab;

namespace {

std::vector<Element> sorted_copy(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Element> random_values(SplitMix64& rng, std::size_t n,
                                   std::uint64_t span) {
  std::vector<Element> v(n);
  for (auto& x : v) x = static_cast<Element>(rng.next_below(span));
  return v;
}

}  // namespace

TEST_CASE("restart bubble sort, hand-traced counts") {
  // [4,3,2,1]: 13 scan steps and 6 swaps when the index returns to the
  // front after every swap.
  SortResult r = bubble_restart(std::vector<Element>{4, 3, 2, 1});
  CHECK(r.output == std::vector<Element>{1, 2, 3, 4});
  CHECK(r.tally.comparisons == 13);
  CHECK(r.tally.swaps == 6);
  CHECK(r.tally.total_ops() == 19);

  SortResult r3 = bubble_restart(std::vector<Element>{3, 2, 1});
  CHECK(r3.tally.comparisons == 6);
  CHECK(r3.tally.swaps == 3);

  SortResult sorted = bubble_restart(std::vector<Element>{1, 2, 3});
  CHECK(sorted.tally.comparisons == 2);
  CHECK(sorted.tally.swaps == 0);

  CHECK(bubble_restart(std::vector<Element>{}).tally.comparisons == 0);
  CHECK(bubble_restart(std::vector<Element>{7}).tally.comparisons == 0);
}

TEST_CASE("textbook bubble sort with shrinking passes and early exit") {
  SortResult desc = bubble_textbook(std::vector<Element>{4, 3, 2, 1});
  CHECK(desc.output == std::vector<Element>{1, 2, 3, 4});
  CHECK(desc.tally.comparisons == 6);
  CHECK(desc.tally.swaps == 6);
  CHECK(desc.tally.total_ops() == 12);  // n^2 - n at n = 4

  // Already sorted: one clean pass of n-1 comparisons, then stop.
  SortResult flat = bubble_textbook(std::vector<Element>{1, 2, 3, 4, 5});
  CHECK(flat.tally.comparisons == 4);
  CHECK(flat.tally.swaps == 0);

  SortResult near = bubble_textbook(std::vector<Element>{2, 1, 3, 4});
  CHECK(near.tally.comparisons == 5);  // 3 in pass one, 2 in the clean pass
  CHECK(near.tally.swaps == 1);

  for (std::size_t n = 2; n <= 64; ++n) {
    SortResult r = bubble_textbook(descending_input(n));
    CHECK(r.tally.total_ops() == n * n - n);
    CHECK(std::is_sorted(r.output.begin(), r.output.end()));
  }
}

TEST_CASE("merge sort counts merge comparisons and buffer moves") {
  SortResult desc = merge_sort(descending_input(8));
  CHECK(desc.output == std::vector<Element>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(desc.tally.comparisons == 12);  // 4 + 4 + 4 across the three levels
  CHECK(desc.tally.moves == 48);        // every merge writes 2 * len
  CHECK(desc.tally.swaps == 0);

  SortResult asc = merge_sort(std::vector<Element>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(asc.tally.comparisons == 12);

  CHECK(merge_sort(std::vector<Element>{}).tally.moves == 0);
  CHECK(merge_sort(std::vector<Element>{5}).tally.comparisons == 0);

  SplitMix64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    auto input = random_values(rng, rng.next_below(80), 50);
    SortResult r = merge_sort(input);
    CHECK(r.output == sorted_copy(input));
  }
}

TEST_CASE("binary radix sort moves every element once per pass") {
  SortResult r = radix_sort_binary(std::vector<Element>{170, 85, 255, 0}, 8);
  CHECK(r.output == std::vector<Element>{0, 85, 170, 255});
  CHECK(r.tally.moves == 32);
  CHECK(r.tally.radix_passes == 8);
  CHECK(r.tally.comparisons == 0);
  CHECK(r.tally.swaps == 0);

  CHECK_THROWS_AS(radix_sort_binary(std::vector<Element>{256}, 8),
                  std::invalid_argument);
  CHECK_THROWS_AS(radix_sort_binary(std::vector<Element>{-1}, 8),
                  std::invalid_argument);
  CHECK_THROWS_AS(radix_sort_binary(std::vector<Element>{1}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(radix_sort_binary(std::vector<Element>{1}, 64),
                  std::invalid_argument);

  SplitMix64 rng(17);
  for (unsigned w : {1u, 5u, 11u, 16u}) {
    auto input = random_values(rng, 64, std::uint64_t{1} << w);
    SortResult rr = radix_sort_binary(input, w);
    CHECK(rr.output == sorted_copy(input));
    CHECK(rr.tally.moves == std::uint64_t{64} * w);
    CHECK(rr.tally.radix_passes == w);
  }
}

TEST_CASE("default radix width is the bit length of the maximum") {
  CHECK(default_radix_width(std::vector<Element>{0}) == 1);
  CHECK(default_radix_width(std::vector<Element>{1}) == 1);
  CHECK(default_radix_width(std::vector<Element>{2}) == 2);
  CHECK(default_radix_width(std::vector<Element>{255}) == 8);
  CHECK(default_radix_width(std::vector<Element>{256}) == 9);
  CHECK(default_radix_width(std::vector<Element>{}) == 1);

  SortResult r = radix_sort_binary(std::vector<Element>{3, 1, 2});
  CHECK(r.tally.radix_passes == 2);
}

TEST_CASE("inversion oracle") {
  CHECK(inversion_count(std::vector<Element>{}) == 0);
  CHECK(inversion_count(std::vector<Element>{1}) == 0);
  CHECK(inversion_count(std::vector<Element>{1, 2, 3}) == 0);
  CHECK(inversion_count(std::vector<Element>{2, 1, 3}) == 1);
  CHECK(inversion_count(std::vector<Element>{3, 1, 2}) == 2);
  for (std::size_t n : {2u, 5u, 9u, 30u}) {
    CHECK(inversion_count(descending_input(n)) == n * (n - 1) / 2);
  }
}

TEST_CASE("both bubble variants swap exactly one inversion at a time") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    auto input = random_values(rng, rng.next_below(48), 12);
    std::uint64_t inv = inversion_count(input);
    CHECK(bubble_restart(input).tally.swaps == inv);
    CHECK(bubble_textbook(input).tally.swaps == inv);
  }
}

TEST_CASE("every algorithm sorts an arbitrary multiset") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto input = random_values(rng, rng.next_below(40), 256);
    auto expect = sorted_copy(input);
    for (SortAlgorithm alg :
         {SortAlgorithm::BubbleRestart, SortAlgorithm::BubbleTextbook,
          SortAlgorithm::Merge, SortAlgorithm::Radix}) {
      CHECK(run_sort(alg, input).output == expect);
    }
  }
}

TEST_CASE("algorithm names round trip") {
  for (SortAlgorithm alg :
       {SortAlgorithm::BubbleRestart, SortAlgorithm::BubbleTextbook,
        SortAlgorithm::Merge, SortAlgorithm::Radix}) {
    auto back = algorithm_from_name(algorithm_name(alg));
    REQUIRE(back.has_value());
    CHECK(*back == alg);
  }
  CHECK_FALSE(algorithm_from_name("quick").has_value());
  CHECK_FALSE(algorithm_from_name("").has_value());
}

TEST_CASE("whole-permutation scans keep the first maximizer") {
  WorstCaseScan restart3 = worst_case_scan(SortAlgorithm::BubbleRestart, 3);
  CHECK(restart3.max_comparisons == 6);
  CHECK(restart3.witness == std::vector<Element>{3, 2, 1});

  WorstCaseScan textbook3 = worst_case_scan(SortAlgorithm::BubbleTextbook, 3);
  CHECK(textbook3.max_comparisons == 3);
  CHECK(textbook3.witness == std::vector<Element>{1, 3, 2});

  WorstCaseScan textbook4 = worst_case_scan(SortAlgorithm::BubbleTextbook, 4);
  CHECK(textbook4.max_comparisons == 6);
  CHECK(textbook4.witness == std::vector<Element>{1, 3, 4, 2});
  // The all-descending input is among the maximizers even though it is not
  // the lexicographically first one.
  CHECK(bubble_textbook(descending_input(4)).tally.comparisons == 6);

  WorstCaseScan merge4 = worst_case_scan(SortAlgorithm::Merge, 4);
  CHECK(merge4.max_comparisons == 5);
  CHECK(merge4.witness == std::vector<Element>{1, 3, 2, 4});

  WorstCaseScan radix3 = worst_case_scan(SortAlgorithm::Radix, 3);
  CHECK(radix3.max_comparisons == 0);
  CHECK(radix3.witness == std::vector<Element>{1, 2, 3});

  CHECK_THROWS_AS(worst_case_scan(SortAlgorithm::Merge, 0), std::domain_error);
  CHECK_THROWS_WITH_AS(worst_case_scan(SortAlgorithm::Merge, 9),
                       doctest::Contains("n <= 8"), std::domain_error);
}

TEST_CASE("restart variant's extra work shows against the textbook one") {
  // Same input, same swap count, but the restart rule rescans the prefix.
  auto input = descending_input(4);
  SortTally restart = bubble_restart(input).tally;
  SortTally textbook = bubble_textbook(input).tally;
  CHECK(restart.swaps == textbook.swaps);
  CHECK(restart.comparisons == 13);
  CHECK(textbook.comparisons == 6);
  CHECK(restart.comparisons > textbook.comparisons);
}
