#include "regen/combinatorics.hpp"
#include "regen/mds.hpp"

#include <doctest.h>

#include <memory>
#include <random>

using namespace regen;

TEST_CASE("systematic encoding and decoding from every erasure pattern") {
    auto f = std::make_shared<const GaloisField>(3);
    const MdsCodec codec(f, 7, 3);
    std::mt19937 rng(1);
    std::uniform_int_distribution<Symbol> pick(0, 7);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Symbol> msg = {pick(rng), pick(rng), pick(rng)};
        const auto word = codec.encode(msg);
        CHECK(std::vector<Symbol>(word.begin(), word.begin() + 3) == msg);
        for (const auto& subset : combinations(7, 3)) {
            std::map<std::size_t, Symbol> avail;
            for (int p : subset) {
                avail[static_cast<std::size_t>(p - 1)] = word[static_cast<std::size_t>(p - 1)];
            }
            CHECK(codec.decode(avail) == word);
        }
    }
}

TEST_CASE("inconsistent or insufficient positions") {
    auto f = std::make_shared<const GaloisField>();
    const MdsCodec codec(f, 5, 2);
    const auto word = codec.encode(std::vector<Symbol>{9, 200});
    std::map<std::size_t, Symbol> avail = {{0, word[0]}, {3, word[3]}, {4, word[4] ^ 1}};
    CHECK_THROWS_AS(codec.decode(avail), CodingError);
    CHECK_THROWS_AS(codec.decode({{1, word[1]}}), CodingError);
    CHECK_THROWS_AS(codec.encode(std::vector<Symbol>{1}), CodingError);
}

TEST_CASE("generator rows give the codeword") {
    auto f = std::make_shared<const GaloisField>();
    const MdsCodec codec(f, 6, 4);
    const std::vector<Symbol> msg = {3, 1, 4, 1};
    const auto word = codec.encode(msg);
    for (std::size_t j = 0; j < 6; ++j) {
        Symbol acc = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            acc ^= f->mul(msg[i], codec.generator(i, j));
        }
        CHECK(acc == word[j]);
    }
}

TEST_CASE("extension keeps existing positions") {
    auto f = std::make_shared<const GaloisField>();
    const MdsCodec codec(f, 3, 2);
    const MdsCodec longer = codec.extended(4);
    CHECK(longer.length() == 4);
    const std::vector<Symbol> msg = {17, 99};
    const auto a = codec.encode(msg);
    const auto b = longer.encode(msg);
    CHECK(std::equal(a.begin(), a.end(), b.begin()));
}

TEST_CASE("field too small") {
    auto f = std::make_shared<const GaloisField>(2);
    CHECK_NOTHROW(MdsCodec(f, 4, 2));
    CHECK_THROWS(MdsCodec(f, 5, 2));
}
