#include "regen/combinatorics.hpp"
#include "regen/precoded_code.hpp"

#include <doctest.h>

#include <random>

using namespace regen;

static std::vector<ExtElement> random_ext(const ExtensionField& ext, std::size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<Symbol> pick(0, ext.base().order() - 1);
    std::vector<ExtElement> out(count, ext.zero());
    for (auto& v : out) {
        for (auto& c : v) {
            c = pick(rng);
        }
    }
    return out;
}

static std::vector<PrecodedNodeContents> pick(const std::vector<PrecodedNodeContents>& all,
                                              const std::vector<int>& ids) {
    std::vector<PrecodedNodeContents> out;
    for (int x : ids) {
        out.push_back(all[static_cast<std::size_t>(x - 1)]);
    }
    return out;
}

TEST_CASE("rho frozen values and identities") {
    CHECK(rho(6, 4, 1, 3) == 36);
    for (int n = 2; n <= 9; ++n) {
        for (int r = 1; r <= n; ++r) {
            for (int m = 0; m < r; ++m) {
                CHECK(rho(n, n, m, r) == binomial(n, r) * (r - m));
                if (n - m >= 1) {
                    CHECK(rho(n, n - m, m, r) == binomial(n, r) * (r - m));
                }
            }
        }
    }
    CHECK_THROWS_AS(rho(5, 3, 3, 3), ParameterError);
    CHECK_THROWS_AS(rho(5, 6, 1, 3), ParameterError);
}

TEST_CASE("rank oracle agrees with rho on every subset for (6,4,1,3)") {
    for (const auto& subset : combinations(6, 4)) {
        CHECK(rank_oracle(6, 4, 1, 3, subset) == 36);
    }
    CHECK_THROWS_AS(rank_oracle(6, 4, 1, 3, {1, 2, 3}), ParameterError);
    CHECK_THROWS_AS(rank_oracle(6, 4, 1, 3, {1, 2, 3, 3}), ParameterError);
    CHECK_THROWS_AS(rank_oracle(6, 4, 1, 5, {1, 2, 3, 4}, std::make_shared<GaloisField>(2)), ParameterError);
}

TEST_CASE("linearized precode") {
    auto base = std::make_shared<const GaloisField>();
    const ExtensionField ext(base, 6);
    std::vector<ExtElement> points;
    for (std::size_t i = 0; i < 6; ++i) {
        points.push_back(ext.basis(i));
    }
    const auto zero = linearized_precode(ext, std::vector<ExtElement>(4, ext.zero()), points);
    for (const auto& z : zero) {
        CHECK(ext.is_zero(z));
    }
    const auto v = random_ext(ext, 1, 1);
    const auto single = linearized_precode(ext, v, points);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(single[i] == ext.mul(v[0], points[i]));
    }
    // Linear over the base field: f_{a v + w} = a f_v + f_w.
    const auto a = random_ext(ext, 4, 2);
    const auto b = random_ext(ext, 4, 3);
    const Symbol c = 0x53;
    std::vector<ExtElement> mix;
    for (std::size_t i = 0; i < 4; ++i) {
        mix.push_back(ext.add(ext.scale(c, a[i]), b[i]));
    }
    const auto fa = linearized_precode(ext, a, points);
    const auto fb = linearized_precode(ext, b, points);
    const auto fm = linearized_precode(ext, mix, points);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(fm[i] == ext.add(ext.scale(c, fa[i]), fb[i]));
    }
    // Bijective when F = F_c: distinct random inputs give distinct outputs, and
    // the base-field matrix of the map has full rank.
    GfMatrix m(6 * 6, 6 * 6);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t coord = 0; coord < 6; ++coord) {
            std::vector<ExtElement> unit(6, ext.zero());
            unit[i][coord] = 1;
            const auto out = linearized_precode(ext, unit, points);
            for (std::size_t j = 0; j < 6; ++j) {
                for (std::size_t oc = 0; oc < 6; ++oc) {
                    m(j * 6 + oc, i * 6 + coord) = out[j][oc];
                }
            }
        }
    }
    CHECK(rank(*base, m) == 36);

    std::vector<ExtElement> dependent = points;
    dependent[5] = ext.add(points[0], points[1]);
    CHECK_THROWS_AS(linearized_precode(ext, a, dependent), CodingError);
    CHECK_THROWS_AS(linearized_precode(ext, random_ext(ext, 7, 4), points), ParameterError);
}

TEST_CASE("precoded (6,4,4,1) with m = 1, r = 3 round trips from every k-subset") {
    const PrecodedCode code({6, 4, 5, 1, 1, 3});
    CHECK(code.info_size() == 36);
    CHECK(code.intermediate_size() == 40);
    CHECK(code.kappa() == 40);
    CHECK_FALSE(code.bypassed());
    const auto data = random_ext(code.ext(), 36, 5);
    const auto nodes = encode2(code, data);
    REQUIRE(nodes.size() == 6);
    for (const auto& subset : combinations(6, 4)) {
        CHECK(reconstruct2(code, pick(nodes, subset)) == data);
    }
    auto tampered = nodes;
    tampered[2].symbols[3].value[0] ^= 1;
    CHECK_THROWS_AS(reconstruct2(code, tampered), CodingError);
    CHECK_THROWS_AS(reconstruct2(code, pick(nodes, {1, 2, 3})), ParameterError);
}

TEST_CASE("precoded repair uses the layered path") {
    const PrecodedCode code({6, 4, 5, 1, 1, 3});
    const auto nodes = encode2(code, random_ext(code.ext(), code.info_size(), 6));
    for (int f = 1; f <= 6; ++f) {
        std::vector<int> helpers;
        for (int x = 1; x <= 6; ++x) {
            if (x != f) {
                helpers.push_back(x);
            }
        }
        const auto result = repair2(code, pick(nodes, helpers), {f}, helpers);
        REQUIRE(result.repaired.size() == 1);
        CHECK(result.repaired[0] == nodes[static_cast<std::size_t>(f - 1)]);
        CHECK(result.bandwidth.msmr.max_per_helper() == beta_formula(6, 1, 1, 3, 5));
    }
    CHECK_THROWS_AS(repair2(code, nodes, {1, 2}, {3, 4, 5, 6}), ParameterError);
}

TEST_CASE("m = n - k reduces to the layered code") {
    const PrecodedCode code({5, 3, 3, 1, 2, 3});
    CHECK(code.bypassed());
    CHECK(code.info_size() == code.intermediate_size());
    const auto data = random_ext(code.ext(), code.info_size(), 7);
    const auto nodes = encode2(code, data);
    for (std::size_t c = 0; c < code.kappa(); ++c) {
        std::vector<Symbol> coords;
        for (const auto& v : data) {
            coords.push_back(v[c]);
        }
        const auto plain = encode(code.layered(), coords);
        for (std::size_t x = 0; x < 5; ++x) {
            for (std::size_t s = 0; s < plain[x].symbols.size(); ++s) {
                CHECK(plain[x].symbols[s].value == nodes[x].symbols[s].value[c]);
            }
        }
    }
    for (const auto& subset : combinations(5, 3)) {
        CHECK(reconstruct2(code, pick(nodes, subset)) == data);
    }
}

TEST_CASE("precoded parameter errors") {
    CHECK_THROWS_AS(PrecodedCode({6, 4, 4, 1, 1, 3}), ParameterError);  // d < n - m
    CHECK_THROWS_AS(PrecodedCode({6, 4, 5, 2, 1, 3}), ParameterError);  // e > m
    CHECK_THROWS_AS(PrecodedCode({6, 4, 5, 1, 3, 4}), ParameterError);  // m > n - k
    CHECK_THROWS_AS(PrecodedCode({12, 8, 11, 1, 1, 6}), ParameterError);  // F_c too large
}
