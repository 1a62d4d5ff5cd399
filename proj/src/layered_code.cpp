#include "regen/layered_code.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace regen {

void SystemParams::validate() const {
    if (!(1 <= e && e <= m && m < r && r <= n)) {
        throw ParameterError("system parameters require 1 <= e <= m < r <= n");
    }
    if (t < 1 || t > r) {
        throw ParameterError("system parameters require 1 <= t <= r");
    }
    if (k != n - m) {
        throw ParameterError("layered code requires k = n - m");
    }
    if (d < k || d > n - e) {
        throw ParameterError("system parameters require k <= d <= n - e");
    }
}

LayeredCode::LayeredCode(SystemParams params, BlockDesign design, std::shared_ptr<const GaloisField> field)
    : params_(params), design_(std::move(design)), field_(std::move(field)) {
    params_.validate();
    if (design_.n() != params_.n || design_.r() != params_.r || design_.t() != params_.t) {
        throw ParameterError("design (n, r, t) does not match the system parameters");
    }
    if (design_.size() == 0) {
        throw ParameterError("design has no blocks");
    }
    if (static_cast<Symbol>(params_.r) > field_->order()) {
        throw ParameterError("block size exceeds the field order");
    }
    const auto codec = std::make_shared<const MdsCodec>(field_, static_cast<std::size_t>(params_.r),
                                                        static_cast<std::size_t>(params_.r - params_.m));
    codecs_.assign(design_.size(), codec);
    slots_.resize(static_cast<std::size_t>(params_.n));
    for (int x = 1; x <= params_.n; ++x) {
        slots_[static_cast<std::size_t>(x - 1)] = design_.blocks_of(x);
    }
    alpha_ = slots_.front().size();
    for (const auto& s : slots_) {
        if (s.size() != alpha_) {
            throw ParameterError("nodes appear in different numbers of blocks");
        }
    }
    if (alpha_ * static_cast<std::size_t>(params_.n) != design_.size() * static_cast<std::size_t>(params_.r)) {
        throw ParameterError("node storage does not equal N r / n");
    }
}

LayeredCode build_code(const SystemParams& params, const BlockDesign& design) { return LayeredCode(params, design); }

namespace {

void check_contents(const LayeredCode& code, const NodeContents& c) {
    if (c.node < 1 || c.node > code.params().n) {
        throw ParameterError("node id " + std::to_string(c.node) + " outside [1, n]");
    }
    const auto& slots = code.slots(c.node);
    if (c.symbols.size() != slots.size()) {
        throw ParameterError("node " + std::to_string(c.node) + " holds " + std::to_string(c.symbols.size()) +
                             " symbols, expected " + std::to_string(slots.size()));
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (c.symbols[i].block != slots[i]) {
            throw ParameterError("node " + std::to_string(c.node) + " slot " + std::to_string(i) +
                                 " has the wrong block index");
        }
        if (!code.field().contains(c.symbols[i].value)) {
            throw ParameterError("node " + std::to_string(c.node) + " holds a symbol outside the field");
        }
    }
}

std::set<int> checked_id_set(const std::vector<int>& ids, int n, const char* what) {
    std::set<int> out;
    for (int x : ids) {
        if (x < 1 || x > n) {
            throw ParameterError(std::string(what) + " node " + std::to_string(x) + " outside [1, n]");
        }
        if (!out.insert(x).second) {
            throw ParameterError(std::string(what) + " node " + std::to_string(x) + " listed twice");
        }
    }
    return out;
}

}  // namespace

std::vector<NodeContents> encode(const LayeredCode& code, std::span<const Symbol> data) {
    const std::size_t dim = code.group_dimension();
    if (data.size() != code.info_size()) {
        throw ParameterError("data has " + std::to_string(data.size()) + " symbols, expected F = " +
                             std::to_string(code.info_size()));
    }
    const int n = code.params().n;
    std::vector<NodeContents> out(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
        out[static_cast<std::size_t>(x - 1)].node = x;
    }
    for (std::size_t j = 0; j < code.num_blocks(); ++j) {
        const std::vector<Symbol> codeword = code.codec(j).encode(data.subspan(j * dim, dim));
        const Block& block = code.design().block(j);
        for (std::size_t pos = 0; pos < block.size(); ++pos) {
            out[static_cast<std::size_t>(block[pos] - 1)].symbols.push_back({j, codeword[pos]});
        }
    }
    return out;
}

std::vector<Symbol> reconstruct(const LayeredCode& code, std::span<const NodeContents> nodes) {
    std::set<int> seen;
    for (const NodeContents& c : nodes) {
        check_contents(code, c);
        if (!seen.insert(c.node).second) {
            throw ParameterError("node " + std::to_string(c.node) + " supplied twice");
        }
    }
    if (static_cast<int>(seen.size()) < code.params().k) {
        throw ParameterError("reconstruction needs " + std::to_string(code.params().k) + " nodes, got " +
                             std::to_string(seen.size()));
    }
    std::vector<std::map<std::size_t, Symbol>> available(code.num_blocks());
    for (const NodeContents& c : nodes) {
        for (const StoredSymbol& s : c.symbols) {
            available[s.block][static_cast<std::size_t>(code.design().position(s.block, c.node))] = s.value;
        }
    }
    const std::size_t dim = code.group_dimension();
    std::vector<Symbol> data;
    data.reserve(code.info_size());
    for (std::size_t j = 0; j < code.num_blocks(); ++j) {
        if (available[j].size() < dim) {
            throw CodingError("block " + std::to_string(j + 1) + " has only " + std::to_string(available[j].size()) +
                              " surviving symbols, needs " + std::to_string(dim));
        }
        const std::vector<Symbol> codeword = code.codec(j).decode(available[j]);
        data.insert(data.end(), codeword.begin(), codeword.begin() + static_cast<std::ptrdiff_t>(dim));
    }
    return data;
}

RepairResult repair_groups(const LayeredCode& code, std::span<const NodeContents> state,
                           const std::vector<int>& failed, const std::vector<int>& helpers) {
    const int n = code.params().n;
    const std::set<int> failed_set = checked_id_set(failed, n, "failed");
    const std::set<int> helper_set = checked_id_set(helpers, n, "helper");
    for (int x : failed_set) {
        if (helper_set.count(x) != 0) {
            throw ParameterError("node " + std::to_string(x) + " is both failed and helper");
        }
    }

    // Only helper contents are ever read.
    std::map<int, const NodeContents*> helper_contents;
    for (const NodeContents& c : state) {
        if (helper_set.count(c.node) != 0) {
            check_contents(code, c);
            helper_contents[c.node] = &c;
        }
    }
    for (int h : helper_set) {
        if (helper_contents.count(h) == 0) {
            throw ParameterError("contents of helper " + std::to_string(h) + " not supplied");
        }
    }

    RepairResult result;
    result.bandwidth = beta_oracle(code.design(), code.params().m, failed_set, helper_set);
    BandwidthReport& naive = result.bandwidth.naive;
    naive.total = 0;
    for (auto& [id, v] : naive.per_helper) {
        v = 0;
    }

    std::map<int, NodeContents> rebuilt;
    for (int x : failed_set) {
        rebuilt[x].node = x;
    }
    const std::size_t dim = code.group_dimension();
    for (std::size_t j = 0; j < code.num_blocks(); ++j) {
        const Block& block = code.design().block(j);
        std::vector<int> lost;
        std::vector<int> group_helpers;
        for (int x : block) {
            if (failed_set.count(x) != 0) {
                lost.push_back(x);
            } else if (helper_set.count(x) != 0) {
                group_helpers.push_back(x);
            }
        }
        if (lost.empty()) {
            continue;
        }
        std::sort(group_helpers.begin(), group_helpers.end());
        if (group_helpers.size() < dim) {
            throw CodingError("block " + std::to_string(j + 1) + " has too few helpers");
        }
        std::map<std::size_t, Symbol> downloaded;
        for (std::size_t i = 0; i < dim; ++i) {
            const int h = group_helpers[i];
            const auto& syms = helper_contents.at(h)->symbols;
            const auto it = std::find_if(syms.begin(), syms.end(), [&](const StoredSymbol& s) { return s.block == j; });
            downloaded[static_cast<std::size_t>(code.design().position(j, h))] = it->value;
            naive.per_helper[h] += 1;
            naive.total += 1;
        }
        const std::vector<Symbol> codeword = code.codec(j).decode(downloaded);
        for (int x : lost) {
            rebuilt[x].symbols.push_back({j, codeword[static_cast<std::size_t>(code.design().position(j, x))]});
        }
    }
    for (auto& [x, c] : rebuilt) {
        result.repaired.push_back(std::move(c));
    }
    return result;
}

RepairResult repair(const LayeredCode& code, std::span<const NodeContents> state, const std::vector<int>& failed,
                    const std::vector<int>& helpers) {
    const SystemParams& p = code.params();
    const int lost = static_cast<int>(failed.size());
    const int d = static_cast<int>(helpers.size());
    if (lost > p.m) {
        throw ParameterError("cannot repair more than m = " + std::to_string(p.m) + " failures");
    }
    if (lost > 0 && (d < p.k || d > p.n - lost)) {
        throw ParameterError("repair requires k <= d <= n - e' helpers");
    }
    return repair_groups(code, state, failed, helpers);
}

namespace {

void check_extendable(const LayeredCode& code) {
    const SystemParams& p = code.params();
    const bool regime = p.n == p.k + p.e && p.d == p.k && p.m == p.e && p.r == p.k + p.e - 1 && p.t == p.r;
    if (!regime) {
        throw ParameterError("extend needs the (k+e, k, k, e) code with t = r = k+e-1 and m = e");
    }
    if (code.num_blocks() != static_cast<std::size_t>(p.n) || !verify_steiner(code.design())) {
        throw ParameterError("extend needs the complete t = r design");
    }
}

}  // namespace

LayeredCode extend(const LayeredCode& code) {
    check_extendable(code);
    const SystemParams& p = code.params();
    const int new_node = p.n + 1;
    std::vector<Block> blocks = code.design().blocks();
    for (Block& b : blocks) {
        b.push_back(new_node);
    }
    Block fresh(static_cast<std::size_t>(p.n));
    for (int x = 1; x <= p.n; ++x) {
        fresh[static_cast<std::size_t>(x - 1)] = x;
    }
    blocks.push_back(std::move(fresh));
    SystemParams q = p;
    q.n = p.n + 1;
    q.e = p.e + 1;
    q.m = p.m + 1;
    q.r = p.r + 1;
    q.t = q.r;
    return LayeredCode(q, BlockDesign(q.n, q.r, q.t, std::move(blocks)), code.field_ptr());
}

std::vector<NodeContents> extend_contents(const LayeredCode& old_code, const LayeredCode& new_code,
                                          std::span<const NodeContents> old_contents,
                                          std::span<const Symbol> new_block_data) {
    check_extendable(old_code);
    const int old_n = old_code.params().n;
    const int new_node = old_n + 1;
    if (new_code.params().n != new_node || new_code.num_blocks() != old_code.num_blocks() + 1) {
        throw ParameterError("new code is not the extension of the old code");
    }
    if (old_contents.size() != static_cast<std::size_t>(old_n)) {
        throw ParameterError("extension needs the contents of all old nodes");
    }
    const std::size_t new_block = old_code.num_blocks();
    if (new_block_data.size() != new_code.group_dimension()) {
        throw ParameterError("new block needs " + std::to_string(new_code.group_dimension()) + " data symbols");
    }

    std::vector<NodeContents> out(static_cast<std::size_t>(new_node));
    std::vector<std::map<std::size_t, Symbol>> groups(old_code.num_blocks());
    for (const NodeContents& c : old_contents) {
        check_contents(old_code, c);
        out[static_cast<std::size_t>(c.node - 1)] = c;
        for (const StoredSymbol& s : c.symbols) {
            groups[s.block][static_cast<std::size_t>(old_code.design().position(s.block, c.node))] = s.value;
        }
    }
    out[static_cast<std::size_t>(new_node - 1)].node = new_node;
    for (std::size_t j = 0; j < old_code.num_blocks(); ++j) {
        const std::vector<Symbol> old_word = old_code.codec(j).decode(groups[j]);
        const std::vector<Symbol> message(old_word.begin(),
                                          old_word.begin() + static_cast<std::ptrdiff_t>(old_code.group_dimension()));
        const std::vector<Symbol> new_word = new_code.codec(j).encode(message);
        if (!std::equal(old_word.begin(), old_word.end(), new_word.begin())) {
            throw std::logic_error("extended codec changed existing symbols");
        }
        const auto pos = static_cast<std::size_t>(new_code.design().position(j, new_node));
        out[static_cast<std::size_t>(new_node - 1)].symbols.push_back({j, new_word[pos]});
    }
    const std::vector<Symbol> fresh = new_code.codec(new_block).encode(new_block_data);
    for (int x = 1; x <= old_n; ++x) {
        const auto pos = static_cast<std::size_t>(new_code.design().position(new_block, x));
        out[static_cast<std::size_t>(x - 1)].symbols.push_back({new_block, fresh[pos]});
    }
    return out;
}

}  // namespace regen
