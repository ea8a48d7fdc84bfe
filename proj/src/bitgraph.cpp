#include "cliquelab/bitgraph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace cliquelab {

namespace {

std::string pos_pair(int i, int j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

WordCounter::WordCounter(unsigned width) : width_(width) {
  if (width < 1 || width > 64) {
    throw std::invalid_argument("word width must be between 1 and 64, got " +
                                std::to_string(width));
  }
}

void WordCounter::merge(const WordCounter& other) {
  if (other.width_ != width_) {
    throw std::invalid_argument("cannot merge word counters of width " +
                                std::to_string(width_) + " and " +
                                std::to_string(other.width_));
  }
  ops_ += other.ops_;
}

FlatBits::FlatBits(std::size_t bit_count)
    : size_(bit_count), words_((bit_count + 63) / 64, 0) {}

FlatBits FlatBits::from_string(std::string_view text) {
  FlatBits out(text.size());
  for (std::size_t p = 0; p < text.size(); ++p) {
    char c = text[p];
    if (c == '1') {
      out.set(p);
    } else if (c != '0') {
      throw std::invalid_argument("bit string may contain only '0' and '1'; "
                                  "found '" + std::string(1, c) +
                                  "' at position " + std::to_string(p));
    }
  }
  return out;
}

bool FlatBits::test(std::size_t pos) const {
  if (pos >= size_) {
    throw std::out_of_range("bit position " + std::to_string(pos) +
                            " out of range for length " +
                            std::to_string(size_));
  }
  return (words_[pos / 64] >> (pos % 64)) & 1u;
}

void FlatBits::set(std::size_t pos, bool value) {
  if (pos >= size_) {
    throw std::out_of_range("bit position " + std::to_string(pos) +
                            " out of range for length " +
                            std::to_string(size_));
  }
  std::uint64_t mask = std::uint64_t{1} << (pos % 64);
  if (value) {
    words_[pos / 64] |= mask;
  } else {
    words_[pos / 64] &= ~mask;
  }
}

void FlatBits::clear_all() {
  std::fill(words_.begin(), words_.end(), 0);
}

std::string FlatBits::to_string() const {
  std::string out(size_, '0');
  for (std::size_t p = 0; p < size_; ++p) {
    if ((words_[p / 64] >> (p % 64)) & 1u) out[p] = '1';
  }
  return out;
}

std::uint64_t FlatBits::chunk(std::size_t index, unsigned width) const {
  std::size_t lo = index * width;
  if (lo >= size_) return 0;
  unsigned len = width;
  if (lo + len > size_) len = static_cast<unsigned>(size_ - lo);
  std::size_t w = lo / 64;
  unsigned off = static_cast<unsigned>(lo % 64);
  std::uint64_t v = words_[w] >> off;
  if (off + len > 64) v |= words_[w + 1] << (64 - off);
  if (len < 64) v &= (std::uint64_t{1} << len) - 1;
  return v;
}

void and_flat_into(const FlatBits& a, const FlatBits& b, FlatBits& out,
                   WordCounter& counter) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("AND of bit strings of different lengths: " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
  if (out.size_ != a.size_) out = FlatBits(a.size_);
  // Physically 64 bits at a time; the charge is what a width-W machine
  // would pay, which for AND is always the full ceil(k/W). Tail bits past
  // the end are zero in both inputs, so the output tail stays zero.
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    out.words_[i] = a.words_[i] & b.words_[i];
  }
  counter.add(counter.words_for(a.size_));
}

FlatBits and_flat(const FlatBits& a, const FlatBits& b, WordCounter& counter) {
  FlatBits out;
  and_flat_into(a, b, out, counter);
  return out;
}

bool equals_flat(const FlatBits& a, const FlatBits& b, WordCounter& counter,
                 bool strict) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(
        "equality of bit strings of different lengths: " +
        std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  const unsigned w = counter.width();
  const std::size_t chunks = a.chunk_count(w);
  if (strict) {
    // No early exit: scan and charge every chunk.
    bool eq = true;
    for (std::size_t i = 0; i < chunks; ++i) {
      if (a.chunk(i, w) != b.chunk(i, w)) eq = false;
    }
    counter.add(chunks);
    return eq;
  }
  for (std::size_t i = 0; i < chunks; ++i) {
    counter.add(1);
    if (a.chunk(i, w) != b.chunk(i, w)) return false;
  }
  return true;
}

namespace {

// Shared validator: the bits must already have the right length for order n.
void validate_network(int n, const FlatBits& bits) {
  auto at = [&](int i, int j) {
    return bits.test(static_cast<std::size_t>(i - 1) * n + (j - 1));
  };
  for (int i = 1; i <= n; ++i) {
    if (!at(i, i)) {
      throw std::invalid_argument("diagonal entry " + pos_pair(i, i) +
                                  " is 0; networks are reflexive");
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (at(i, j) != at(j, i)) {
        throw std::invalid_argument(
            "asymmetric at " + pos_pair(i, j) + ": entry " + pos_pair(i, j) +
            " is " + (at(i, j) ? "1" : "0") + " but " + pos_pair(j, i) +
            " is " + (at(j, i) ? "1" : "0"));
      }
    }
  }
}

}  // namespace

Network Network::from_rows(const std::vector<std::string>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw std::invalid_argument("network has no rows");
  FlatBits bits(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument(
          "matrix is not square: row " + std::to_string(i + 1) + " has " +
          std::to_string(rows[i].size()) + " entries, expected " +
          std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      char c = rows[i][j];
      if (c == '1') {
        bits.set(static_cast<std::size_t>(i) * n + j);
      } else if (c != '0') {
        throw std::invalid_argument("entry " + pos_pair(i + 1, j + 1) +
                                    " must be '0' or '1', found '" +
                                    std::string(1, c) + "'");
      }
    }
  }
  validate_network(n, bits);
  return Network(n, std::move(bits));
}

bool Network::adjacent(int i, int j) const {
  if (i < 1 || i > order_ || j < 1 || j > order_) {
    throw std::out_of_range("node pair " + pos_pair(i, j) +
                            " out of range for order " +
                            std::to_string(order_));
  }
  return bits_.test(static_cast<std::size_t>(i - 1) * order_ + (j - 1));
}

Network unflatten(const FlatBits& bits) {
  const std::size_t k = bits.size();
  auto n = static_cast<std::size_t>(std::llround(std::sqrt(
      static_cast<double>(k))));
  if (n * n != k) {
    throw std::invalid_argument("flat length " + std::to_string(k) +
                                " is not a perfect square");
  }
  if (n == 0) throw std::invalid_argument("network order must be positive");
  validate_network(static_cast<int>(n), bits);
  return Network(static_cast<int>(n), bits);
}

NetworkBuilder::NetworkBuilder(int order)
    : order_(order), bits_(static_cast<std::size_t>(order) * order) {
  if (order < 1) {
    throw std::invalid_argument("network order must be positive, got " +
                                std::to_string(order));
  }
  for (int i = 0; i < order; ++i) {
    bits_.set(static_cast<std::size_t>(i) * order + i);
  }
}

void NetworkBuilder::add_edge(int i, int j) {
  if (i < 1 || i > order_ || j < 1 || j > order_) {
    throw std::out_of_range("node pair " + pos_pair(i, j) +
                            " out of range for order " +
                            std::to_string(order_));
  }
  bits_.set(static_cast<std::size_t>(i - 1) * order_ + (j - 1));
  bits_.set(static_cast<std::size_t>(j - 1) * order_ + (i - 1));
}

Network NetworkBuilder::finish() {
  validate_network(order_, bits_);
  return Network(order_, std::move(bits_));
}

const Network& example_network() {
  static const Network net = Network::from_rows({
      "100011",
      "011111",
      "011100",
      "011100",
      "110010",
      "110001",
  });
  return net;
}

Network read_network(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw std::invalid_argument("empty network file");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) {
      throw std::invalid_argument("blank line " + std::to_string(i + 1) +
                                  " inside network file");
    }
  }

  if (lines.size() == 1) {
    // A single line is the flat form.
    return unflatten(FlatBits::from_string(lines[0]));
  }

  std::size_t pos = 0;
  long n = 0;
  try {
    n = std::stol(lines[0], &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != lines[0].size() || n < 1) {
    throw std::invalid_argument("first line must be the network order, got \"" +
                                lines[0] + "\"");
  }
  if (static_cast<long>(lines.size()) - 1 != n) {
    throw std::invalid_argument(
        "expected " + std::to_string(n) + " matrix rows after the order line, "
        "got " + std::to_string(lines.size() - 1));
  }
  return Network::from_rows(
      std::vector<std::string>(lines.begin() + 1, lines.end()));
}

Network read_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open network file: " + path);
  try {
    return read_network(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string network_text(const Network& net, bool flat) {
  const FlatBits& bits = flatten(net);
  if (flat) return bits.to_string() + "\n";
  const int n = net.order();
  std::string full = bits.to_string();
  std::string out = std::to_string(n) + "\n";
  for (int i = 0; i < n; ++i) {
    out.append(full, static_cast<std::size_t>(i) * n, n);
    out.push_back('\n');
  }
  return out;
}

void write_network_file(const std::string& path, const Network& net,
                        bool flat) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write network file: " + path);
  out << network_text(net, flat);
  if (!out) throw std::runtime_error("failed writing network file: " + path);
}

}  // namespace cliquelab
