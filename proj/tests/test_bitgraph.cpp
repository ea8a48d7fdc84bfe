#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquelab/bitgraph.hpp"
#include "cliquelab/rng.hpp"

using namespace cliquelab;

namespace {

const std::vector<std::string> kExampleRows = {
    "100011", "011111", "011100", "011100", "110010", "110001",
};

// Row-major concatenation of the rows above.
const std::string kExampleFlat =
    "100011011111011100011100110010110001";

// Reference extraction: chunk i at width w, rebuilt bit by bit from text.
std::uint64_t chunk_by_hand(const std::string& text, std::size_t index,
                            unsigned width) {
  std::uint64_t v = 0;
  for (unsigned b = 0; b < width; ++b) {
    std::size_t p = index * width + b;
    if (p < text.size() && text[p] == '1') v |= std::uint64_t{1} << b;
  }
  return v;
}

}  // namespace

TEST_CASE("word counter charges ceil(k/W)") {
  WordCounter w8(8);
  CHECK(w8.words_for(36) == 5);
  CHECK(w8.words_for(0) == 0);
  CHECK(w8.words_for(1) == 1);
  CHECK(w8.words_for(8) == 1);
  CHECK(w8.words_for(9) == 2);
  WordCounter w64(64);
  CHECK(w64.words_for(36) == 1);
  CHECK(w64.words_for(64) == 1);
  CHECK(w64.words_for(65) == 2);
  WordCounter w32(32);
  CHECK(w32.words_for(36) == 2);
  WordCounter w1(1);
  CHECK(w1.words_for(36) == 36);

  CHECK_THROWS_AS(WordCounter(0), std::invalid_argument);
  CHECK_THROWS_AS(WordCounter(65), std::invalid_argument);

  WordCounter other(16);
  CHECK_THROWS_AS(w8.merge(other), std::invalid_argument);
}

TEST_CASE("bit string round trips through text") {
  FlatBits bits = FlatBits::from_string(kExampleFlat);
  CHECK(bits.size() == 36);
  CHECK(bits.to_string() == kExampleFlat);

  CHECK_THROWS_WITH_AS(FlatBits::from_string("0102"),
                       doctest::Contains("position 3"), std::invalid_argument);
}

TEST_CASE("set and test agree at every position") {
  FlatBits bits(130);  // spans three words
  SplitMix64 rng(7);
  std::vector<bool> mirror(130, false);
  for (int step = 0; step < 500; ++step) {
    auto p = static_cast<std::size_t>(rng.next_below(130));
    bool v = rng.next() & 1;
    bits.set(p, v);
    mirror[p] = v;
  }
  for (std::size_t p = 0; p < 130; ++p) CHECK(bits.test(p) == mirror[p]);
  CHECK_THROWS_AS(bits.test(130), std::out_of_range);
  CHECK_THROWS_AS(bits.set(130), std::out_of_range);
}

TEST_CASE("chunk extraction matches the by-hand definition") {
  // 130 bits exercises word-spanning chunks at every width.
  std::string text;
  SplitMix64 rng(99);
  for (int i = 0; i < 130; ++i) text.push_back((rng.next() & 1) ? '1' : '0');
  FlatBits bits = FlatBits::from_string(text);
  for (unsigned width : {1u, 3u, 7u, 8u, 13u, 32u, 63u, 64u}) {
    CHECK(bits.chunk_count(width) == (130 + width - 1) / width);
    for (std::size_t i = 0; i < bits.chunk_count(width); ++i) {
      CAPTURE(width);
      CAPTURE(i);
      CHECK(bits.chunk(i, width) == chunk_by_hand(text, i, width));
    }
  }
}

TEST_CASE("AND and equality charge word operations by width") {
  FlatBits a = FlatBits::from_string(kExampleFlat);

  SUBCASE("AND always costs the full scan") {
    for (unsigned width : {8u, 32u, 64u}) {
      WordCounter counter(width);
      FlatBits meet = and_flat(a, a, counter);
      CHECK(meet == a);
      CHECK(counter.ops() == counter.words_for(36));
    }
  }

  SUBCASE("strict equality always scans every chunk") {
    FlatBits b = a;
    b.set(0, false);  // mismatch in the first chunk
    WordCounter counter(8);
    CHECK_FALSE(equals_flat(a, b, counter, true));
    CHECK(counter.ops() == 5);
  }

  SUBCASE("plain equality stops at the first mismatching chunk") {
    FlatBits b = a;
    b.set(0, false);
    WordCounter counter(8);
    CHECK_FALSE(equals_flat(a, b, counter, false));
    CHECK(counter.ops() == 1);

    // A late mismatch costs proportionally more.
    FlatBits c = a;
    c.set(35, !c.test(35));
    WordCounter late(8);
    CHECK_FALSE(equals_flat(a, c, late, false));
    CHECK(late.ops() == 5);
  }

  SUBCASE("equal strings cost the full scan either way") {
    for (bool strict : {false, true}) {
      WordCounter counter(8);
      CHECK(equals_flat(a, a, counter, strict));
      CHECK(counter.ops() == 5);
    }
  }

  SUBCASE("length mismatch is an error") {
    WordCounter counter(8);
    FlatBits shorter(35);
    CHECK_THROWS_AS(and_flat(a, shorter, counter), std::invalid_argument);
    CHECK_THROWS_AS(equals_flat(a, shorter, counter), std::invalid_argument);
  }
}

TEST_CASE("example network flattens to the frozen string") {
  const Network& net = example_network();
  CHECK(net.order() == 6);
  CHECK(flatten(net).to_string() == kExampleFlat);

  // Spot adjacency checks, 1-based.
  CHECK(net.adjacent(2, 3));
  CHECK(net.adjacent(3, 4));
  CHECK(net.adjacent(1, 5));
  CHECK_FALSE(net.adjacent(1, 2));
  CHECK_FALSE(net.adjacent(5, 6));
  CHECK_THROWS_AS(net.adjacent(0, 1), std::out_of_range);
  CHECK_THROWS_AS(net.adjacent(1, 7), std::out_of_range);
}

TEST_CASE("flatten and unflatten are inverse") {
  const Network& net = example_network();
  Network back = unflatten(flatten(net));
  CHECK(back == net);
  CHECK(unflatten(FlatBits::from_string(kExampleFlat)) == net);
}

TEST_CASE("positional law: bit (i-1)*n + (j-1) is entry (i, j)") {
  const Network& net = example_network();
  const FlatBits& bits = flatten(net);
  const int n = net.order();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      CHECK(bits.test(static_cast<std::size_t>(i - 1) * n + (j - 1)) ==
            net.adjacent(i, j));
    }
  }
}

TEST_CASE("network validation names the offending entry") {
  SUBCASE("asymmetry") {
    auto rows = kExampleRows;
    rows[0] = "100001";  // drop (1,5) but keep (5,1)
    CHECK_THROWS_WITH_AS(Network::from_rows(rows),
                         doctest::Contains("(1, 5)"), std::invalid_argument);
  }
  SUBCASE("zero on the diagonal") {
    auto rows = kExampleRows;
    rows[1] = "001111";  // clear (2,2)
    CHECK_THROWS_WITH_AS(Network::from_rows(rows),
                         doctest::Contains("(2, 2)"), std::invalid_argument);
  }
  SUBCASE("non-square rows") {
    auto rows = kExampleRows;
    rows[1] = "0111";
    CHECK_THROWS_WITH_AS(Network::from_rows(rows),
                         doctest::Contains("row 2"), std::invalid_argument);
  }
  SUBCASE("bad character") {
    auto rows = kExampleRows;
    rows[2] = "0x1100";
    CHECK_THROWS_AS(Network::from_rows(rows), std::invalid_argument);
  }
  SUBCASE("empty") {
    CHECK_THROWS_AS(Network::from_rows({}), std::invalid_argument);
  }
  SUBCASE("flat length not a square") {
    CHECK_THROWS_WITH_AS(unflatten(FlatBits::from_string("0101010101")),
                         doctest::Contains("perfect square"),
                         std::invalid_argument);
  }
}

TEST_CASE("builder produces validated symmetric networks") {
  NetworkBuilder b(4);
  b.add_edge(1, 3);
  b.add_edge(4, 2);
  Network net = b.finish();
  CHECK(net.adjacent(3, 1));
  CHECK(net.adjacent(2, 4));
  CHECK_FALSE(net.adjacent(1, 2));
  for (int i = 1; i <= 4; ++i) CHECK(net.adjacent(i, i));
  CHECK_THROWS_AS(NetworkBuilder(0), std::invalid_argument);
  NetworkBuilder bad(2);
  CHECK_THROWS_AS(bad.add_edge(1, 3), std::out_of_range);
}

TEST_CASE("matrix text form round trips") {
  const Network& net = example_network();
  std::string text = network_text(net);
  CHECK(text == "6\n100011\n011111\n011100\n011100\n110010\n110001\n");
  std::istringstream in(text);
  CHECK(read_network(in) == net);
}

TEST_CASE("flat text form round trips") {
  const Network& net = example_network();
  std::string text = network_text(net, true);
  CHECK(text == kExampleFlat + "\n");
  std::istringstream in(text);
  CHECK(read_network(in) == net);
}

TEST_CASE("reader accepts CRLF and trailing blank lines") {
  std::istringstream in("6\r\n100011\r\n011111\r\n011100\r\n011100\r\n"
                        "110010\r\n110001\r\n\r\n");
  CHECK(read_network(in) == example_network());
}

TEST_CASE("reader rejects malformed files") {
  auto reject = [](const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    CHECK_THROWS_WITH_AS(read_network(in), doctest::Contains(needle.c_str()),
                         std::invalid_argument);
  };
  reject("", "empty");
  reject("6\n100011\n011111\n", "expected 6 matrix rows");
  reject("6\n100011\n011111\n011100\n011100\n110010\n110001\n110001\n",
         "expected 6 matrix rows");
  reject("abc\n100011\n", "order");
  reject("6\n100011\n\n011111\n011100\n011100\n110010\n110001\n", "blank");
  reject("010", "perfect square");
}

TEST_CASE("file IO round trips both forms") {
  const Network& net = example_network();
  const std::string dir = "bitgraph_io_test_tmp";
  for (bool flat : {false, true}) {
    std::string path = dir + (flat ? "_flat.net" : "_matrix.net");
    write_network_file(path, net, flat);
    CHECK(read_network_file(path) == net);
    std::remove(path.c_str());
  }
  CHECK_THROWS_AS(read_network_file("no_such_file_here.net"),
                  std::runtime_error);
}

TEST_CASE("random networks survive the flatten round trip") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.next_below(12));
    NetworkBuilder b(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (rng.next() & 1) b.add_edge(i, j);
      }
    }
    Network net = b.finish();
    const FlatBits& bits = flatten(net);
    CHECK(bits.size() == static_cast<std::size_t>(n) * n);
    CHECK(unflatten(bits) == net);
    CHECK(unflatten(FlatBits::from_string(bits.to_string())) == net);
  }
}
