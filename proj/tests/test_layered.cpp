#include "regen/combinatorics.hpp"
#include "regen/layered_code.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace regen;

static const std::string kDesigns = std::string(REGEN_DATA_DIR) + "/designs/";

static std::vector<Symbol> random_data(std::size_t size, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<Symbol> pick(0, 255);
    std::vector<Symbol> out(size);
    for (auto& v : out) {
        v = pick(rng);
    }
    return out;
}

static std::vector<NodeContents> pick_nodes(const std::vector<NodeContents>& all, const std::vector<int>& ids) {
    std::vector<NodeContents> out;
    for (int x : ids) {
        out.push_back(all[static_cast<std::size_t>(x - 1)]);
    }
    return out;
}

static LayeredCode s348_code() {
    return build_code({8, 6, 6, 2, 2, 4, 3}, load_design_file(kDesigns + "s348.design"));
}

TEST_CASE("S(3,4,8) code shape") {
    const LayeredCode code = s348_code();
    CHECK(code.num_blocks() == 14);
    CHECK(code.alpha() == 7);
    CHECK(code.info_size() == 28);
    CHECK(code.slots(1).size() == 7);
}

TEST_CASE("reconstruction from every k-subset") {
    const LayeredCode code = s348_code();
    const auto data = random_data(code.info_size(), 1);
    const auto nodes = encode(code, data);
    for (const auto& subset : combinations(8, 6)) {
        CHECK(reconstruct(code, pick_nodes(nodes, subset)) == data);
    }
    CHECK(reconstruct(code, nodes) == data);
}

TEST_CASE("repair of every failure pattern is bit-exact") {
    const LayeredCode code = s348_code();
    const auto data = random_data(code.info_size(), 2);
    const auto nodes = encode(code, data);
    int patterns = 0;
    for (int e = 1; e <= 2; ++e) {
        for (const auto& failed : combinations(8, e)) {
            std::vector<int> rest;
            for (int x = 1; x <= 8; ++x) {
                if (std::find(failed.begin(), failed.end(), x) == failed.end()) {
                    rest.push_back(x);
                }
            }
            for (int d = 6; d <= 8 - e; ++d) {
                for_each_combination(static_cast<int>(rest.size()), d, 0, [&](const std::vector<int>& idx) {
                    std::vector<int> helpers;
                    for (int i : idx) {
                        helpers.push_back(rest[static_cast<std::size_t>(i)]);
                    }
                    // Only helpers are passed in, so nothing leaks from failed nodes.
                    const auto result = repair(code, pick_nodes(nodes, helpers), failed, helpers);
                    REQUIRE(result.repaired.size() == failed.size());
                    for (std::size_t i = 0; i < failed.size(); ++i) {
                        CHECK(result.repaired[i] == nodes[static_cast<std::size_t>(failed[i] - 1)]);
                    }
                    ++patterns;
                });
            }
        }
    }
    CHECK(patterns == 8 * 8 + 28);
}

TEST_CASE("repair bandwidth of the S(3,4,8) code") {
    const LayeredCode code = s348_code();
    const auto nodes = encode(code, random_data(code.info_size(), 3));
    const std::vector<int> helpers = {3, 4, 5, 6, 7, 8};
    const auto result = repair(code, nodes, {1, 2}, helpers);
    CHECK(result.bandwidth.msmr.total == 18);
    CHECK(result.bandwidth.msmr.max_per_helper() == 3);
    CHECK(result.bandwidth.naive.total == 22);
}

TEST_CASE("interior point system (5,4,4,1) with r = t = 3") {
    const LayeredCode code = build_code({5, 4, 4, 1, 1, 3, 3}, complete_design(5, 3));
    CHECK(code.info_size() == 20);
    CHECK(code.alpha() == 6);
    const auto data = random_data(20, 4);
    const auto nodes = encode(code, data);
    for (const auto& subset : combinations(5, 4)) {
        CHECK(reconstruct(code, pick_nodes(nodes, subset)) == data);
    }
    for (int f = 1; f <= 5; ++f) {
        std::vector<int> helpers;
        for (int x = 1; x <= 5; ++x) {
            if (x != f) {
                helpers.push_back(x);
            }
        }
        const auto result = repair(code, nodes, {f}, helpers);
        CHECK(result.repaired.front() == nodes[static_cast<std::size_t>(f - 1)]);
        CHECK(result.bandwidth.msmr.total == 12);
        CHECK(result.bandwidth.msmr.max_per_helper() == 3);
    }
}

TEST_CASE("tampering and malformed input") {
    const LayeredCode code = s348_code();
    const auto data = random_data(code.info_size(), 5);
    auto nodes = encode(code, data);
    nodes[0].symbols[0].value ^= 1;
    CHECK_THROWS_AS(reconstruct(code, nodes), CodingError);
    CHECK_THROWS_AS(reconstruct(code, pick_nodes(nodes, {1, 2, 3, 4, 5})), ParameterError);
    CHECK_THROWS_AS(reconstruct(code, pick_nodes(nodes, {1, 1, 2, 3, 4, 5})), ParameterError);
    CHECK_THROWS_AS(repair(code, nodes, {1, 2}, {2, 3, 4, 5, 6, 7}), ParameterError);
    CHECK_THROWS_AS(repair(code, nodes, {1, 2, 3}, {4, 5, 6, 7, 8}), ParameterError);
    CHECK_THROWS_AS(repair(code, nodes, {1}, {2, 3, 4, 5, 6}), ParameterError);
    CHECK_THROWS_AS(repair(code, pick_nodes(nodes, {3, 4}), {1}, {2, 3, 4, 5, 6, 7}), ParameterError);
    CHECK_THROWS_AS(encode(code, std::vector<Symbol>(27, 0)), ParameterError);
    CHECK_THROWS_AS(build_code({8, 6, 6, 2, 2, 4, 2}, load_design_file(kDesigns + "s348.design")),
                    ParameterError);
    CHECK_THROWS_AS(build_code({8, 5, 6, 2, 2, 4, 3}, load_design_file(kDesigns + "s348.design")),
                    ParameterError);
}

TEST_CASE("extension of the (4,3,3,1) code") {
    const LayeredCode code = build_code({4, 3, 3, 1, 1, 3, 3}, complete_design(4, 3));
    const LayeredCode bigger = extend(code);
    const SystemParams p = bigger.params();
    CHECK(p == SystemParams{5, 3, 3, 2, 2, 4, 4});
    CHECK(bigger.info_size() - code.info_size() == 2);
    CHECK(bigger.alpha() - code.alpha() == 1);
    CHECK(beta_closed_form_d_eq_k(3, 2, 4) - beta_closed_form_d_eq_k(3, 1, 3) == 1);
    const std::vector<Block> expected = {{1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}, {1, 2, 3, 4}};
    CHECK(bigger.design().blocks() == expected);
    CHECK(verify_steiner(bigger.design()));

    const auto data = random_data(code.info_size(), 6);
    const auto old_nodes = encode(code, data);
    const auto new_nodes = extend_contents(code, bigger, old_nodes, random_data(2, 7));
    REQUIRE(new_nodes.size() == 5);
    for (std::size_t x = 0; x < 4; ++x) {
        const auto& o = old_nodes[x].symbols;
        const auto& n = new_nodes[x].symbols;
        REQUIRE(n.size() == o.size() + 1);
        CHECK(std::equal(o.begin(), o.end(), n.begin()));
    }
    // The extended contents form a valid codeword of the new code.
    for (const auto& subset : combinations(5, 3)) {
        const auto rec = reconstruct(bigger, pick_nodes(new_nodes, subset));
        CHECK(encode(bigger, rec) == new_nodes);
    }
    const LayeredCode twice = extend(bigger);
    CHECK(twice.params() == SystemParams{6, 3, 3, 3, 3, 5, 5});
    CHECK_THROWS_AS(extend(s348_code()), ParameterError);
}
