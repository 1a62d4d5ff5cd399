#include "regen/design.hpp"
#include "regen/combinatorics.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace regen {

namespace {

// Rank of a sorted t-subset of {1..n} in the combinatorial number system.
std::uint64_t subset_rank(const std::vector<int>& sorted) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        rank += binomial_u64(sorted[i] - 1, static_cast<std::int64_t>(i) + 1);
    }
    return rank;
}

BigInt exact_ratio(const BigInt& num, const BigInt& den, const char* what) {
    if (den == 0 || num % den != 0) {
        throw DesignError(std::string("non-integral ") + what + ": " + num.str() + "/" + den.str());
    }
    return num / den;
}

}  // namespace

BlockDesign::BlockDesign(int n, int r, int t, std::vector<Block> blocks)
    : n_(n), r_(r), t_(t), blocks_(std::move(blocks)) {
    if (n < 1 || r < 1 || r > n) {
        throw DesignError("design requires 1 <= r <= n");
    }
    if (t < 1 || t > r) {
        throw DesignError("design requires 1 <= t <= r");
    }
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        const Block& b = blocks_[j];
        if (static_cast<int>(b.size()) != r) {
            throw DesignError("block " + std::to_string(j + 1) + " has " + std::to_string(b.size()) +
                              " elements, expected " + std::to_string(r));
        }
        for (int x : b) {
            if (x < 1 || x > n) {
                throw DesignError("block " + std::to_string(j + 1) + " has element " + std::to_string(x) +
                                  " outside [1, " + std::to_string(n) + "]");
            }
        }
        Block sorted = b;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw DesignError("block " + std::to_string(j + 1) + " repeats an element");
        }
    }
}

bool BlockDesign::contains(std::size_t j, int node) const { return position(j, node) >= 0; }

int BlockDesign::position(std::size_t j, int node) const {
    const Block& b = blocks_.at(j);
    const auto it = std::find(b.begin(), b.end(), node);
    return it == b.end() ? -1 : static_cast<int>(it - b.begin());
}

std::vector<std::size_t> BlockDesign::blocks_of(int node) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        if (contains(j, node)) {
            out.push_back(j);
        }
    }
    return out;
}

BlockDesign complete_design(int n, int r) {
    if (r < 1 || r > n) {
        throw DesignError("complete design requires 1 <= r <= n");
    }
    return BlockDesign(n, r, r, combinations(n, r));
}

BlockDesign load_design(std::istream& in) {
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            if (!out.empty() && out.back() == '\r') {
                out.pop_back();
            }
            if (out.find_first_not_of(" \t") != std::string::npos) {
                return true;
            }
        }
        return false;
    };
    if (!next_line(line)) {
        throw DesignError("empty design source");
    }
    int n = 0;
    int r = 0;
    int t = 0;
    {
        std::istringstream header(line);
        std::string extra;
        if (!(header >> n >> r >> t) || (header >> extra)) {
            throw DesignError("malformed header, expected `n r t`: " + line);
        }
    }
    std::vector<Block> blocks;
    while (next_line(line)) {
        std::istringstream row(line);
        Block b;
        std::string token;
        while (row >> token) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size()) {
                throw DesignError("malformed block entry `" + token + "` on line: " + line);
            }
            b.push_back(value);
        }
        blocks.push_back(std::move(b));
    }
    return BlockDesign(n, r, t, std::move(blocks));
}

BlockDesign load_design_string(const std::string& text) {
    std::istringstream in(text);
    return load_design(in);
}

BlockDesign load_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DesignError("cannot open design file " + path);
    }
    return load_design(in);
}

void write_design(std::ostream& out, const BlockDesign& design) {
    out << design.n() << ' ' << design.r() << ' ' << design.t() << '\n';
    for (const Block& b : design.blocks()) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i != 0) {
                out << ' ';
            }
            out << b[i];
        }
        out << '\n';
    }
}

std::string serialize_design(const BlockDesign& design) {
    std::ostringstream out;
    write_design(out, design);
    return out.str();
}

bool verify_steiner(const BlockDesign& design) {
    const int n = design.n();
    const int t = design.t();
    const BigInt expected_blocks = binomial(n, t) / binomial(design.r(), t);
    if (binomial(n, t) % binomial(design.r(), t) != 0 || BigInt(design.size()) != expected_blocks) {
        return false;
    }
    const std::uint64_t total = binomial_u64(n, t);
    std::vector<std::uint32_t> dense;
    std::map<std::uint64_t, std::uint32_t> sparse;
    const bool use_dense = total <= (std::uint64_t{1} << 24);
    if (use_dense) {
        dense.assign(total, 0);
    }
    bool ok = true;
    for (const Block& b : design.blocks()) {
        Block sorted = b;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> sub(static_cast<std::size_t>(t));
        for_each_combination(design.r(), t, 0, [&](const std::vector<int>& idx) {
            for (std::size_t i = 0; i < idx.size(); ++i) {
                sub[i] = sorted[static_cast<std::size_t>(idx[i])];
            }
            const std::uint64_t rank = subset_rank(sub);
            const std::uint32_t count = use_dense ? ++dense[rank] : ++sparse[rank];
            if (count > 1) {
                ok = false;
            }
        });
        if (!ok) {
            return false;
        }
    }
    if (use_dense) {
        return std::all_of(dense.begin(), dense.end(), [](std::uint32_t c) { return c == 1; });
    }
    return sparse.size() == total;
}

DesignStats design_stats(int n, int r, int t) {
    if (n < 1 || r < 1 || r > n || t < 1 || t > r) {
        throw DesignError("design statistics require 1 <= t <= r <= n");
    }
    DesignStats s;
    s.num_blocks = exact_ratio(binomial(n, t), binomial(r, t), "block count");
    s.alpha_sym = exact_ratio(s.num_blocks * r, BigInt(n), "replication");
    s.lambda2 = t >= 2 ? exact_ratio(binomial(n - 2, t - 2), binomial(r - 2, t - 2), "lambda2") : BigInt(0);
    s.lambda3 = t >= 3 ? exact_ratio(binomial(n - 3, t - 3), binomial(r - 3, t - 3), "lambda3") : BigInt(0);
    return s;
}

DesignStats design_stats(const BlockDesign& design) {
    return design_stats(design.n(), design.r(), design.t());
}

}  // namespace regen
