#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquelab/bitgraph.hpp"

namespace cliquelab {

// Sorted set of 1-based node ids inside an ambient order n; cardinality is
// between 1 and n. Ordering between sets is lexicographic on the members.
class NodeSet {
 public:
  NodeSet(int order, std::vector<int> members);

  int order() const noexcept { return order_; }
  int cardinality() const noexcept { return static_cast<int>(members_.size()); }
  const std::vector<int>& members() const noexcept { return members_; }
  bool contains(int node) const;
  std::string to_text() const;  // "{2,3,4}"

  friend bool operator==(const NodeSet&, const NodeSet&) = default;
  friend bool operator<(const NodeSet& a, const NodeSet& b) {
    return a.members_ < b.members_;
  }

 private:
  int order_;
  std::vector<int> members_;
};

// Counts the work of a search: candidate subsets drawn from the enumerator,
// whole-matrix comparisons performed, and the word operations those
// comparisons cost at the counter's width.
struct ComparisonTally {
  explicit ComparisonTally(unsigned word_width = 64) : words(word_width) {}

  std::uint64_t candidates_enumerated = 0;
  std::uint64_t subnetwork_comparisons = 0;
  WordCounter words;

  void merge(const ComparisonTally& other);
};

// The q-clique pattern on the given members as a full order-n network:
// diagonal ones plus the all-ones block over the members.
Network clique_matrix(const NodeSet& members);

// Whole-matrix containment: Q is a subnetwork of N iff AND(flat(N),
// flat(Q)) == flat(Q). One call charges the tally one comparison plus the
// word cost of the AND pass and the equality scan (strict mode scans all
// words; otherwise the scan may stop at the first mismatch).
bool subnetwork_compare(const Network& q_net, const Network& n_net,
                        ComparisonTally& tally, bool strict = false);

// Lexicographic stream of the q-subsets of {1..n}, optionally restricted
// to the rank interval [rank_lo, rank_hi). Ranks are 0-based lexicographic.
class SubsetEnumerator {
 public:
  SubsetEnumerator(int n, int q);
  SubsetEnumerator(int n, int q, std::uint64_t rank_lo, std::uint64_t rank_hi);

  // The next subset's members, or nothing when the stream is exhausted.
  const std::vector<int>* next();
  void reset();

  static std::uint64_t count(int n, int q);  // C(n,q); throws if > 2^64-1
  static std::vector<int> unrank(int n, int q, std::uint64_t rank);
  static std::uint64_t rank(int n, int q, const std::vector<int>& members);

 private:
  int n_;
  int q_;
  std::uint64_t rank_lo_;
  std::uint64_t remaining_;
  std::uint64_t total_span_;
  bool fresh_ = true;
  std::vector<int> members_;
};

// Exhaustive search: every q-subset whose clique pattern is contained in
// net, in lexicographic order, with no pruning and no early exit. The
// tally always ends with candidates_enumerated == C(n, q). With more than
// one worker the rank space is split into contiguous slices; results and
// tallies are identical to the single-worker run.
std::vector<NodeSet> search_all(const Network& net, int q,
                                ComparisonTally& tally, bool strict = false,
                                unsigned workers = 1);

// Stops at the first hit in lexicographic order; the tally then holds
// exactly rank(hit)+1 comparisons, or C(n,q) when nothing is found.
std::optional<NodeSet> search_first(const Network& net, int q,
                                    ComparisonTally& tally,
                                    bool strict = false);

// Largest clique by running search_first at q = n, n-1, ... until a hit;
// q = 1 always succeeds (diagonals are cliques of size one).
struct MaxCliqueResult {
  int size = 0;
  NodeSet members;
};
MaxCliqueResult max_clique(const Network& net, ComparisonTally& tally,
                           bool strict = false);

// Instance generator: plants the clique on the given members, then adds
// each remaining upper-triangle edge independently with the given density.
// One generator draw is consumed per upper-triangle cell in row-major
// order, clique cells included (their draws are discarded), so the
// background stream does not depend on which clique is planted.
struct PlantSpec {
  PlantSpec(NodeSet members_in, double density_in, std::uint64_t seed_in);

  NodeSet members;
  double density;
  std::uint64_t seed;
};
Network plant_clique(const PlantSpec& spec);

// Reference oracle, kept deliberately dumb and structurally independent of
// the bit-string path: plain adjacency lookups in a double loop, subsets
// generated by recursion rather than by SubsetEnumerator.
bool clique_present_naive(const Network& net, const std::vector<int>& members);
std::vector<NodeSet> search_all_naive(const Network& net, int q);

}  // namespace cliquelab
