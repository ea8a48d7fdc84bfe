#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cliquelab {

// Tallies machine-word operations at a configurable word width W (1..64).
// One pass of AND or equality over a k-bit string costs ceil(k/W) words.
class WordCounter {
 public:
  explicit WordCounter(unsigned width = 64);

  unsigned width() const noexcept { return width_; }
  std::uint64_t ops() const noexcept { return ops_; }
  void add(std::uint64_t n) noexcept { ops_ += n; }
  void merge(const WordCounter& other);

  std::uint64_t words_for(std::size_t bit_count) const noexcept {
    return (static_cast<std::uint64_t>(bit_count) + width_ - 1) / width_;
  }

 private:
  unsigned width_;
  std::uint64_t ops_ = 0;
};

// Fixed-length bit string, packed 64 bits per word. Position p lives at bit
// p % 64 of word p / 64; the text form renders position 0 leftmost. Unused
// high bits of the last word stay zero.
class FlatBits {
 public:
  FlatBits() = default;
  explicit FlatBits(std::size_t bit_count);

  // Accepts only '0'/'1'; anything else is reported with its position.
  static FlatBits from_string(std::string_view text);

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t pos) const;
  void set(std::size_t pos, bool value = true);
  void clear_all();
  std::string to_string() const;

  // The width-bit slice starting at bit index*width, zero-padded past the
  // end of the string. Bit index*width lands in the result's bit 0.
  std::uint64_t chunk(std::size_t index, unsigned width) const;
  std::size_t chunk_count(unsigned width) const noexcept {
    return (size_ + width - 1) / width;
  }

  friend bool operator==(const FlatBits&, const FlatBits&) = default;
  friend void and_flat_into(const FlatBits& a, const FlatBits& b,
                            FlatBits& out, WordCounter& counter);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Bitwise AND of two equal-length strings; charges ceil(k/W) to counter.
FlatBits and_flat(const FlatBits& a, const FlatBits& b, WordCounter& counter);
void and_flat_into(const FlatBits& a, const FlatBits& b, FlatBits& out,
                   WordCounter& counter);

// Equality scan in W-bit chunks. Non-strict mode stops at the first
// mismatching chunk and charges only the chunks it inspected; strict mode
// always scans (and charges) all ceil(k/W) chunks.
bool equals_flat(const FlatBits& a, const FlatBits& b, WordCounter& counter,
                 bool strict = false);

// Reflexive symmetric boolean adjacency matrix over nodes 1..n, stored as
// its row-major n*n bit string. Immutable once built; every constructor
// validates squareness, the diagonal, and symmetry.
class Network {
 public:
  static Network from_rows(const std::vector<std::string>& rows);

  int order() const noexcept { return order_; }
  bool adjacent(int i, int j) const;  // nodes are 1-based

  friend bool operator==(const Network&, const Network&) = default;

  friend const FlatBits& flatten(const Network& net) noexcept;
  friend Network unflatten(const FlatBits& bits);
  friend class NetworkBuilder;

 private:
  Network(int order, FlatBits bits) : order_(order), bits_(std::move(bits)) {}

  int order_ = 0;
  FlatBits bits_;
};

// Row-major flattening: bit (i-1)*n + (j-1) is entry (i, j).
inline const FlatBits& flatten(const Network& net) noexcept {
  return net.bits_;
}

// Inverse of flatten: length must be a perfect square, and the decoded
// matrix must satisfy the network invariants.
Network unflatten(const FlatBits& bits);

// Assembles a network entry by entry, then validates once at finish().
// Construction keeps the matrix symmetric by setting mirrored cells.
class NetworkBuilder {
 public:
  explicit NetworkBuilder(int order);
  void add_edge(int i, int j);  // sets (i,j) and (j,i)
  Network finish();

 private:
  int order_;
  FlatBits bits_;
};

// The 6-node worked network used throughout the tests: nodes {2,3,4} form
// its unique largest clique.
const Network& example_network();

// Text format: matrix form is the order on line 1 followed by n rows of
// '0'/'1'; flat form is the whole n*n string on a single line. Readers
// accept both (one non-empty line means flat form); writers emit matrix
// form unless flat is requested.
Network read_network(std::istream& in);
Network read_network_file(const std::string& path);
std::string network_text(const Network& net, bool flat = false);
void write_network_file(const std::string& path, const Network& net,
                        bool flat = false);

}  // namespace cliquelab
