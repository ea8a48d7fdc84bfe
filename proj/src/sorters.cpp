#include "cliquelab/sorters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cliquelab {

SortResult bubble_restart(std::span<const Element> input) {
  SortResult r;
  r.output.assign(input.begin(), input.end());
  auto& a = r.output;
  const std::size_t n = a.size();
  std::size_t index = 1;
  while (index < n) {
    ++r.tally.comparisons;
    if (a[index] < a[index - 1]) {
      std::swap(a[index], a[index - 1]);
      ++r.tally.swaps;
      index = 1;  // restart from the front after every swap
    } else {
      ++index;
    }
  }
  return r;
}

SortResult bubble_textbook(std::span<const Element> input) {
  SortResult r;
  r.output.assign(input.begin(), input.end());
  auto& a = r.output;
  if (a.size() < 2) return r;
  for (std::size_t end = a.size() - 1; end >= 1; --end) {
    bool swapped = false;
    for (std::size_t i = 0; i < end; ++i) {
      ++r.tally.comparisons;
      if (a[i + 1] < a[i]) {
        std::swap(a[i], a[i + 1]);
        ++r.tally.swaps;
        swapped = true;
      }
    }
    if (!swapped) break;  // a clean pass means the array is sorted
  }
  return r;
}

namespace {

void merge_recurse(std::vector<Element>& a, std::size_t lo, std::size_t hi,
                   std::vector<Element>& scratch, SortTally& tally) {
  const std::size_t len = hi - lo;
  if (len <= 1) return;
  const std::size_t mid = lo + (len + 1) / 2;  // left half takes ceil(n/2)
  merge_recurse(a, lo, mid, scratch, tally);
  merge_recurse(a, mid, hi, scratch, tally);

  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    ++tally.comparisons;
    // Strictly-less from the right keeps equal elements in left-first
    // order, so the sort is stable.
    if (a[j] < a[i]) {
      scratch[k++] = a[j++];
    } else {
      scratch[k++] = a[i++];
    }
    ++tally.moves;
  }
  while (i < mid) {
    scratch[k++] = a[i++];
    ++tally.moves;
  }
  while (j < hi) {
    scratch[k++] = a[j++];
    ++tally.moves;
  }
  for (std::size_t t = lo; t < hi; ++t) {
    a[t] = scratch[t];
    ++tally.moves;
  }
}

}  // namespace

SortResult merge_sort(std::span<const Element> input) {
  SortResult r;
  r.output.assign(input.begin(), input.end());
  std::vector<Element> scratch(r.output.size());
  merge_recurse(r.output, 0, r.output.size(), scratch, r.tally);
  return r;
}

unsigned default_radix_width(std::span<const Element> input) {
  Element mx = 0;
  for (Element v : input) mx = std::max(mx, v);
  unsigned w = 0;
  while (mx > 0) {
    ++w;
    mx >>= 1;
  }
  return std::max(w, 1u);
}

SortResult radix_sort_binary(std::span<const Element> input,
                             unsigned bit_width) {
  if (bit_width < 1 || bit_width > 63) {
    throw std::invalid_argument("radix width must be between 1 and 63, got " +
                                std::to_string(bit_width));
  }
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (input[i] < 0 || (input[i] >> bit_width) != 0) {
      throw std::invalid_argument(
          "element " + std::to_string(input[i]) + " at position " +
          std::to_string(i) + " does not fit in " +
          std::to_string(bit_width) + " unsigned bits");
    }
  }
  SortResult r;
  r.output.assign(input.begin(), input.end());
  std::vector<Element> other(r.output.size());
  // One stable partition per bit, low bit first; every element is written
  // to the other buffer once per pass, so moves ends at bit_width * n.
  for (unsigned bit = 0; bit < bit_width; ++bit) {
    std::size_t k = 0;
    for (Element v : r.output) {
      if (((v >> bit) & 1) == 0) {
        other[k++] = v;
        ++r.tally.moves;
      }
    }
    for (Element v : r.output) {
      if (((v >> bit) & 1) == 1) {
        other[k++] = v;
        ++r.tally.moves;
      }
    }
    r.output.swap(other);
    ++r.tally.radix_passes;
  }
  return r;
}

SortResult radix_sort_binary(std::span<const Element> input) {
  return radix_sort_binary(input, default_radix_width(input));
}

std::vector<Element> descending_input(std::size_t n) {
  std::vector<Element> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Element>(n - i);
  return v;
}

std::uint64_t inversion_count(std::span<const Element> input) {
  std::uint64_t inv = 0;
  for (std::size_t i = 0; i < input.size(); ++i) {
    for (std::size_t j = i + 1; j < input.size(); ++j) {
      if (input[i] > input[j]) ++inv;
    }
  }
  return inv;
}

const char* algorithm_name(SortAlgorithm alg) {
  switch (alg) {
    case SortAlgorithm::BubbleRestart:
      return "bubble-restart";
    case SortAlgorithm::BubbleTextbook:
      return "bubble";
    case SortAlgorithm::Merge:
      return "merge";
    case SortAlgorithm::Radix:
      return "radix";
  }
  return "unknown";
}

std::optional<SortAlgorithm> algorithm_from_name(std::string_view name) {
  if (name == "bubble-restart") return SortAlgorithm::BubbleRestart;
  if (name == "bubble") return SortAlgorithm::BubbleTextbook;
  if (name == "merge") return SortAlgorithm::Merge;
  if (name == "radix") return SortAlgorithm::Radix;
  return std::nullopt;
}

SortResult run_sort(SortAlgorithm alg, std::span<const Element> input,
                    unsigned radix_width) {
  switch (alg) {
    case SortAlgorithm::BubbleRestart:
      return bubble_restart(input);
    case SortAlgorithm::BubbleTextbook:
      return bubble_textbook(input);
    case SortAlgorithm::Merge:
      return merge_sort(input);
    case SortAlgorithm::Radix:
      return radix_width == 0 ? radix_sort_binary(input)
                              : radix_sort_binary(input, radix_width);
  }
  throw std::invalid_argument("unknown sort algorithm");
}

WorstCaseScan worst_case_scan(SortAlgorithm alg, unsigned n) {
  if (n < 1 || n > 8) {
    throw std::domain_error(
        "whole-permutation scan is limited to 1 <= n <= 8 (n! runs), got " +
        std::to_string(n));
  }
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{1});
  WorstCaseScan scan;
  scan.witness = perm;
  do {
    SortResult r = run_sort(alg, perm);
    // Strict > keeps the lexicographically first maximizer, since
    // next_permutation walks permutations in lexicographic order.
    if (r.tally.comparisons > scan.max_comparisons) {
      scan.max_comparisons = r.tally.comparisons;
      scan.witness = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return scan;
}

}  // namespace cliquelab
