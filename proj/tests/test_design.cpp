#include "regen/combinatorics.hpp"
#include "regen/design.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <string>

using namespace regen;

static const std::string kDesigns = std::string(REGEN_DATA_DIR) + "/designs/";

TEST_CASE("binomial") {
    CHECK(binomial(8, 3) == 56);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    CHECK(binomial_u64(20, 10) == 184756u);
    CHECK_THROWS_AS(binomial_u64(200, 100), std::overflow_error);
}

TEST_CASE("combinations are lexicographic and complete") {
    const auto all = combinations(6, 3);
    CHECK(all.size() == 20);
    CHECK(all.front() == std::vector<int>{1, 2, 3});
    CHECK(all.back() == std::vector<int>{4, 5, 6});
    for (std::size_t i = 1; i < all.size(); ++i) {
        CHECK(all[i - 1] < all[i]);
    }
    int count = 0;
    for_each_combination(5, 0, 1, [&](const std::vector<int>& c) {
        CHECK(c.empty());
        ++count;
    });
    CHECK(count == 1);
}

TEST_CASE("isqrt and rounding helpers") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        BigInt x = BigInt(rng()) * rng() + rng() % 1000;
        const BigInt s = isqrt(x);
        CHECK(s * s <= x);
        CHECK((s + 1) * (s + 1) > x);
    }
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(floor_div(7, -2) == -4);
    CHECK(ceil_of(Rational(7, 3)) == 3);
    CHECK(floor_of(Rational(-7, 3)) == -3);
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(4, 2)) == "2");
}

TEST_CASE("S(3,4,8) from file") {
    const BlockDesign d = load_design_file(kDesigns + "s348.design");
    CHECK(d.n() == 8);
    CHECK(d.r() == 4);
    CHECK(d.t() == 3);
    CHECK(d.size() == 14);
    CHECK(d.block(0) == Block{1, 2, 4, 8});
    CHECK(verify_steiner(d));
    const DesignStats s = design_stats(d);
    CHECK(s.num_blocks == 14);
    CHECK(s.alpha_sym == 7);
    CHECK(s.lambda2 == 3);
    CHECK(s.lambda3 == 1);
    for (int x = 1; x <= 8; ++x) {
        CHECK(d.blocks_of(x).size() == 7);
    }
}

TEST_CASE("other shipped designs are Steiner") {
    CHECK(verify_steiner(load_design_file(kDesigns + "fano.design")));
    const BlockDesign pg = load_design_file(kDesigns + "pg23.design");
    CHECK(pg.size() == 13);
    CHECK(verify_steiner(pg));
    CHECK(design_stats(pg).lambda2 == 1);
}

TEST_CASE("complete designs satisfy the t = r Steiner property") {
    for (int n = 1; n <= 8; ++n) {
        for (int r = 1; r <= n; ++r) {
            const BlockDesign d = complete_design(n, r);
            CHECK(d.size() == binomial(n, r));
            CHECK(verify_steiner(d));
        }
    }
    CHECK(complete_design(5, 4).size() == 5);
}

TEST_CASE("verify_steiner rejects broken designs") {
    BlockDesign d = load_design_file(kDesigns + "s348.design");
    auto blocks = d.blocks();
    blocks[0] = {1, 2, 4, 7};
    CHECK_FALSE(verify_steiner(BlockDesign(8, 4, 3, blocks)));
    blocks.pop_back();
    CHECK_FALSE(verify_steiner(BlockDesign(8, 4, 3, blocks)));
}

TEST_CASE("position follows block order") {
    const BlockDesign d(5, 3, 2, {{3, 1, 5}});
    CHECK(d.position(0, 3) == 0);
    CHECK(d.position(0, 5) == 2);
    CHECK(d.position(0, 2) == -1);
    CHECK(d.contains(0, 1));
    CHECK_FALSE(d.contains(0, 4));
}

TEST_CASE("shape errors") {
    CHECK_THROWS_AS(BlockDesign(5, 3, 2, {{1, 2}}), DesignError);
    CHECK_THROWS_AS(BlockDesign(5, 3, 2, {{1, 2, 6}}), DesignError);
    CHECK_THROWS_AS(BlockDesign(5, 3, 2, {{1, 2, 2}}), DesignError);
    CHECK_THROWS_AS(BlockDesign(5, 6, 2, {}), DesignError);
    CHECK_THROWS_AS(load_design_string("8 4\n1 2 3 4\n"), DesignError);
    CHECK_THROWS_AS(load_design_string("3 2 1\n1 x\n"), DesignError);
    CHECK_THROWS_AS(load_design_file(kDesigns + "missing.design"), DesignError);
    CHECK_THROWS_AS(design_stats(8, 4, 2), DesignError);
}

TEST_CASE("serialize round trip") {
    const BlockDesign d = load_design_file(kDesigns + "fano.design");
    CHECK(load_design_string(serialize_design(d)) == d);
    const BlockDesign c = complete_design(6, 4);
    CHECK(load_design_string(serialize_design(c)) == c);
}

TEST_CASE("stats from parameters") {
    const DesignStats s = design_stats(13, 4, 2);
    CHECK(s.num_blocks == 13);
    CHECK(s.alpha_sym == 4);
    CHECK(s.lambda2 == 1);
    CHECK(s.lambda3 == 0);
    const DesignStats c = design_stats(10, 5, 5);
    CHECK(c.num_blocks == 252);
    CHECK(c.alpha_sym == 126);
    CHECK(c.lambda2 == 56);
    CHECK(c.lambda3 == 21);
}
