#include "cliquelab/cliquesearch.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

#include "cliquelab/bounds.hpp"
#include "cliquelab/rng.hpp"

namespace cliquelab {

NodeSet::NodeSet(int order, std::vector<int> members)
    : order_(order), members_(std::move(members)) {
  if (order_ < 1) {
    throw std::invalid_argument("node set needs a positive ambient order, "
                                "got " + std::to_string(order_));
  }
  if (members_.empty()) {
    throw std::invalid_argument("node set must have at least one member");
  }
  int prev = 0;
  for (int v : members_) {
    if (v < 1 || v > order_) {
      throw std::invalid_argument("member " + std::to_string(v) +
                                  " out of range for order " +
                                  std::to_string(order_));
    }
    if (v <= prev) {
      throw std::invalid_argument(
          "members must be strictly increasing; saw " + std::to_string(prev) +
          " before " + std::to_string(v));
    }
    prev = v;
  }
}

bool NodeSet::contains(int node) const {
  return std::binary_search(members_.begin(), members_.end(), node);
}

std::string NodeSet::to_text() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

void ComparisonTally::merge(const ComparisonTally& other) {
  candidates_enumerated += other.candidates_enumerated;
  subnetwork_comparisons += other.subnetwork_comparisons;
  words.merge(other.words);
}

namespace {

// Writes the clique pattern over `members` into an order-n flat string:
// diagonal ones plus the all-ones block over the members.
void write_clique_bits(int n, const std::vector<int>& members, FlatBits& out) {
  if (out.size() != static_cast<std::size_t>(n) * n) {
    out = FlatBits(static_cast<std::size_t>(n) * n);
  } else {
    out.clear_all();
  }
  for (int i = 1; i <= n; ++i) {
    out.set(static_cast<std::size_t>(i - 1) * n + (i - 1));
  }
  for (int a : members) {
    for (int b : members) {
      out.set(static_cast<std::size_t>(a - 1) * n + (b - 1));
    }
  }
}

}  // namespace

Network clique_matrix(const NodeSet& members) {
  FlatBits bits;
  write_clique_bits(members.order(), members.members(), bits);
  return unflatten(bits);
}

bool subnetwork_compare(const Network& q_net, const Network& n_net,
                        ComparisonTally& tally, bool strict) {
  if (q_net.order() != n_net.order()) {
    throw std::invalid_argument(
        "subnetwork comparison needs equal orders, got " +
        std::to_string(q_net.order()) + " and " +
        std::to_string(n_net.order()));
  }
  FlatBits meet = and_flat(flatten(n_net), flatten(q_net), tally.words);
  tally.subnetwork_comparisons += 1;
  return equals_flat(meet, flatten(q_net), tally.words, strict);
}

SubsetEnumerator::SubsetEnumerator(int n, int q)
    : SubsetEnumerator(n, q, 0, count(n, q)) {}

SubsetEnumerator::SubsetEnumerator(int n, int q, std::uint64_t rank_lo,
                                   std::uint64_t rank_hi)
    : n_(n), q_(q), rank_lo_(rank_lo) {
  std::uint64_t total = count(n, q);
  if (rank_lo > rank_hi || rank_hi > total) {
    throw std::out_of_range("rank slice [" + std::to_string(rank_lo) + ", " +
                            std::to_string(rank_hi) + ") outside [0, " +
                            std::to_string(total) + ")");
  }
  total_span_ = rank_hi - rank_lo;
  reset();
}

void SubsetEnumerator::reset() {
  remaining_ = total_span_;
  fresh_ = true;
  if (remaining_ > 0) members_ = unrank(n_, q_, rank_lo_);
}

const std::vector<int>* SubsetEnumerator::next() {
  if (remaining_ == 0) return nullptr;
  if (fresh_) {
    fresh_ = false;
  } else {
    // Standard lexicographic successor: bump the rightmost member that has
    // room, then pack the tail tightly after it.
    int i = q_ - 1;
    while (i >= 0 && members_[i] == n_ - (q_ - 1 - i)) --i;
    ++members_[i];
    for (int j = i + 1; j < q_; ++j) members_[j] = members_[j - 1] + 1;
  }
  --remaining_;
  return &members_;
}

std::uint64_t SubsetEnumerator::count(int n, int q) {
  if (n < 1 || q < 1 || q > n) {
    throw std::invalid_argument("subset size q must satisfy 1 <= q <= n, "
                                "got n=" + std::to_string(n) +
                                ", q=" + std::to_string(q));
  }
  ExactInt c = binomial(n, q);
  if (!c.fits_ulong_p()) {
    throw std::overflow_error("C(" + std::to_string(n) + ", " +
                              std::to_string(q) +
                              ") does not fit a 64-bit rank: " + c.get_str());
  }
  return c.get_ui();
}

std::vector<int> SubsetEnumerator::unrank(int n, int q, std::uint64_t rank) {
  if (rank >= count(n, q)) {
    throw std::out_of_range("rank " + std::to_string(rank) +
                            " out of range for C(" + std::to_string(n) + ", " +
                            std::to_string(q) + ")");
  }
  std::vector<int> members(q);
  ExactInt rest(static_cast<unsigned long>(rank));
  int v = 1;
  for (int t = 0; t < q; ++t) {
    for (;; ++v) {
      // Subsets starting with v at slot t: choose the remaining q-t-1
      // members from the n-v values above v.
      ExactInt block = binomial(n - v, q - t - 1);
      if (rest < block) break;
      rest -= block;
    }
    members[t] = v++;
  }
  return members;
}

std::uint64_t SubsetEnumerator::rank(int n, int q,
                                     const std::vector<int>& members) {
  NodeSet checked(n, members);  // validates shape
  if (checked.cardinality() != q) {
    throw std::invalid_argument("rank of a " +
                                std::to_string(checked.cardinality()) +
                                "-subset requested in a q=" +
                                std::to_string(q) + " stream");
  }
  ExactInt r = 0;
  int prev = 0;
  for (int t = 0; t < q; ++t) {
    for (int v = prev + 1; v < members[t]; ++v) {
      r += binomial(n - v, q - t - 1);
    }
    prev = members[t];
  }
  if (!r.fits_ulong_p()) {
    throw std::overflow_error("rank does not fit 64 bits: " + r.get_str());
  }
  return r.get_ui();
}

namespace {

struct SliceResult {
  std::vector<std::vector<int>> hits;
  std::uint64_t candidates = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t word_ops = 0;
};

// One contiguous rank slice of the exhaustive scan. Operates on flat bit
// strings directly; the work charged to the counter is identical to
// calling subnetwork_compare on materialized networks.
SliceResult scan_slice(const Network& net, int q, std::uint64_t lo,
                       std::uint64_t hi, unsigned width, bool strict) {
  SliceResult out;
  WordCounter words(width);
  const int n = net.order();
  const FlatBits& net_bits = flatten(net);
  FlatBits clique_bits;
  FlatBits meet;
  SubsetEnumerator stream(n, q, lo, hi);
  while (const std::vector<int>* members = stream.next()) {
    ++out.candidates;
    write_clique_bits(n, *members, clique_bits);
    and_flat_into(net_bits, clique_bits, meet, words);
    ++out.comparisons;
    if (equals_flat(meet, clique_bits, words, strict)) {
      out.hits.push_back(*members);
    }
  }
  out.word_ops = words.ops();
  return out;
}

void check_q(const Network& net, int q) {
  if (q < 1 || q > net.order()) {
    throw std::invalid_argument("clique size q must satisfy 1 <= q <= n, "
                                "got q=" + std::to_string(q) + " at order " +
                                std::to_string(net.order()));
  }
}

}  // namespace

std::vector<NodeSet> search_all(const Network& net, int q,
                                ComparisonTally& tally, bool strict,
                                unsigned workers) {
  check_q(net, q);
  if (workers < 1) {
    throw std::invalid_argument("worker count must be at least 1");
  }
  const std::uint64_t total = SubsetEnumerator::count(net.order(), q);
  if (workers > total) workers = static_cast<unsigned>(total);

  std::vector<SliceResult> parts(workers);
  if (workers == 1) {
    parts[0] = scan_slice(net, q, 0, total, tally.words.width(), strict);
  } else {
    // Balanced contiguous slices; merging in worker order reproduces the
    // single-worker lexicographic stream exactly.
    const std::uint64_t base = total / workers;
    const std::uint64_t extra = total % workers;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    std::uint64_t lo = 0;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t span = base + (w < extra ? 1 : 0);
      std::uint64_t hi = lo + span;
      pool.emplace_back([&, w, lo, hi] {
        try {
          parts[w] = scan_slice(net, q, lo, hi, tally.words.width(), strict);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
      lo = hi;
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<NodeSet> found;
  for (const SliceResult& part : parts) {
    tally.candidates_enumerated += part.candidates;
    tally.subnetwork_comparisons += part.comparisons;
    tally.words.add(part.word_ops);
    for (const auto& members : part.hits) {
      found.emplace_back(net.order(), members);
    }
  }
  return found;
}

std::optional<NodeSet> search_first(const Network& net, int q,
                                    ComparisonTally& tally, bool strict) {
  check_q(net, q);
  const int n = net.order();
  const FlatBits& net_bits = flatten(net);
  FlatBits clique_bits;
  FlatBits meet;
  SubsetEnumerator stream(n, q);
  while (const std::vector<int>* members = stream.next()) {
    ++tally.candidates_enumerated;
    write_clique_bits(n, *members, clique_bits);
    and_flat_into(net_bits, clique_bits, meet, tally.words);
    ++tally.subnetwork_comparisons;
    if (equals_flat(meet, clique_bits, tally.words, strict)) {
      return NodeSet(n, *members);
    }
  }
  return std::nullopt;
}

MaxCliqueResult max_clique(const Network& net, ComparisonTally& tally,
                           bool strict) {
  for (int q = net.order(); q >= 1; --q) {
    if (auto hit = search_first(net, q, tally, strict)) {
      return MaxCliqueResult{q, std::move(*hit)};
    }
  }
  // Unreachable: q = 1 always hits because networks are reflexive.
  throw std::logic_error("no clique of size 1 in a reflexive network");
}

PlantSpec::PlantSpec(NodeSet members_in, double density_in,
                     std::uint64_t seed_in)
    : members(std::move(members_in)), density(density_in), seed(seed_in) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must lie in [0, 1], got " +
                                std::to_string(density));
  }
}

Network plant_clique(const PlantSpec& spec) {
  const int n = spec.members.order();
  NetworkBuilder builder(n);
  std::vector<char> in_clique(n + 1, 0);
  for (int v : spec.members.members()) in_clique[v] = 1;
  SplitMix64 rng(spec.seed);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      double draw = rng.next_unit();  // consumed for every cell
      if (in_clique[i] && in_clique[j]) {
        builder.add_edge(i, j);
      } else if (draw < spec.density) {
        builder.add_edge(i, j);
      }
    }
  }
  return builder.finish();
}

bool clique_present_naive(const Network& net,
                          const std::vector<int>& members) {
  NodeSet checked(net.order(), members);
  const int n = net.order();
  // Expand to a plain matrix first; the test below never touches the
  // packed representation.
  std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) adj[i][j] = net.adjacent(i, j) ? 1 : 0;
  }
  for (int a : members) {
    for (int b : members) {
      if (!adj[a][b]) return false;
    }
  }
  return true;
}

namespace {

void naive_subsets(int n, int q, int start, std::vector<int>& cur,
                   const Network& net, std::vector<NodeSet>& out) {
  if (static_cast<int>(cur.size()) == q) {
    if (clique_present_naive(net, cur)) out.emplace_back(n, cur);
    return;
  }
  for (int v = start; v <= n - (q - static_cast<int>(cur.size())) + 1; ++v) {
    cur.push_back(v);
    naive_subsets(n, q, v + 1, cur, net, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<NodeSet> search_all_naive(const Network& net, int q) {
  check_q(net, q);
  std::vector<NodeSet> out;
  std::vector<int> cur;
  naive_subsets(net.order(), q, 1, cur, net, out);
  return out;
}

}  // namespace cliquelab
