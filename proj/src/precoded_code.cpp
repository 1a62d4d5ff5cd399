#include "regen/precoded_code.hpp"
#include "regen/combinatorics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace regen {

BigInt rho(int n, int k, int m, int r) {
    if (!(0 <= m && m < r && r <= n)) {
        throw ParameterError("rho requires 0 <= m < r <= n");
    }
    if (!(1 <= k && k <= n)) {
        throw ParameterError("rho requires 1 <= k <= n");
    }
    BigInt total = 0;
    const int lo = std::max(1, r - (n - k));
    const int hi = std::min(k, r);
    for (int p = lo; p <= hi; ++p) {
        total += binomial(k, p) * binomial(n - k, r - p) * std::min(p, r - m);
    }
    return total;
}

std::size_t rank_oracle(int n, int k, int m, int r, const std::vector<int>& node_subset,
                        std::shared_ptr<const GaloisField> field) {
    if (!(0 <= m && m < r && r <= n) || !(1 <= k && k <= n)) {
        throw ParameterError("rank_oracle requires 0 <= m < r <= n and 1 <= k <= n");
    }
    if (static_cast<int>(node_subset.size()) != k) {
        throw ParameterError("rank_oracle needs exactly k nodes");
    }
    std::set<int> ids;
    for (int x : node_subset) {
        if (x < 1 || x > n || !ids.insert(x).second) {
            throw ParameterError("rank_oracle node subset must hold distinct ids in [1, n]");
        }
    }
    if (static_cast<Symbol>(r) > field->order()) {
        throw ParameterError("field too small for length-" + std::to_string(r) + " MDS groups");
    }
    const BlockDesign design = complete_design(n, r);
    const MdsCodec codec(field, static_cast<std::size_t>(r), static_cast<std::size_t>(r - m));
    const std::size_t dim = codec.dimension();
    std::vector<std::pair<std::size_t, std::size_t>> columns;  // (block, position)
    for (std::size_t j = 0; j < design.size(); ++j) {
        for (int x : ids) {
            const int pos = design.position(j, x);
            if (pos >= 0) {
                columns.emplace_back(j, static_cast<std::size_t>(pos));
            }
        }
    }
    GfMatrix g(design.size() * dim, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto [block, pos] = columns[c];
        for (std::size_t i = 0; i < dim; ++i) {
            g(block * dim + i, c) = codec.generator(i, pos);
        }
    }
    return rank(*field, std::move(g));
}

namespace {

// Incremental row echelon form over the base field.
class BaseEchelon {
  public:
    BaseEchelon(const GaloisField& f, std::size_t width) : f_(f), width_(width) {}

    std::size_t size() const { return rows_.size(); }

    bool insert(std::vector<Symbol> v) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Symbol c = v[pivots_[i]];
            if (c != 0) {
                for (std::size_t j = 0; j < width_; ++j) {
                    v[j] ^= f_.mul(c, rows_[i][j]);
                }
            }
        }
        const auto it = std::find_if(v.begin(), v.end(), [](Symbol c) { return c != 0; });
        if (it == v.end()) {
            return false;
        }
        const std::size_t pivot = static_cast<std::size_t>(it - v.begin());
        const Symbol inv = f_.inv(v[pivot]);
        for (Symbol& c : v) {
            c = f_.mul(c, inv);
        }
        // Keep the stored rows reduced on the new pivot column.
        for (auto& row : rows_) {
            const Symbol c = row[pivot];
            if (c != 0) {
                for (std::size_t j = 0; j < width_; ++j) {
                    row[j] ^= f_.mul(c, v[j]);
                }
            }
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
        return true;
    }

  private:
    const GaloisField& f_;
    std::size_t width_;
    std::vector<std::vector<Symbol>> rows_;
    std::vector<std::size_t> pivots_;
};

ExtElement evaluate(const ExtensionField& ext, std::span<const ExtElement> coeffs, const ExtElement& x) {
    ExtElement acc = ext.zero();
    ExtElement power = x;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0) {
            power = ext.frobenius(power);
        }
        acc = ext.add(acc, ext.mul(coeffs[i], power));
    }
    return acc;
}

// Gauss-Jordan over the extension field; a is square, row-major.
std::vector<ExtElement> solve_ext(const ExtensionField& ext, std::vector<std::vector<ExtElement>> a,
                                  std::vector<ExtElement> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && ext.is_zero(a[piv][col])) {
            ++piv;
        }
        if (piv == n) {
            throw std::logic_error("Moore system is singular despite independent evaluation points");
        }
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const ExtElement inv = ext.inv(a[col][col]);
        for (std::size_t j = col; j < n; ++j) {
            a[col][j] = ext.mul(a[col][j], inv);
        }
        b[col] = ext.mul(b[col], inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || ext.is_zero(a[i][col])) {
                continue;
            }
            const ExtElement c = a[i][col];
            for (std::size_t j = col; j < n; ++j) {
                a[i][j] = ext.add(a[i][j], ext.mul(c, a[col][j]));
            }
            b[i] = ext.add(b[i], ext.mul(c, b[col]));
        }
    }
    return b;
}

void check_contents(const PrecodedCode& code, const PrecodedNodeContents& c) {
    const int n = code.params().n;
    if (c.node < 1 || c.node > n) {
        throw ParameterError("node id " + std::to_string(c.node) + " outside [1, n]");
    }
    const auto& slots = code.layered().slots(c.node);
    if (c.symbols.size() != slots.size()) {
        throw ParameterError("node " + std::to_string(c.node) + " holds " + std::to_string(c.symbols.size()) +
                             " symbols, expected " + std::to_string(slots.size()));
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (c.symbols[i].block != slots[i]) {
            throw ParameterError("node " + std::to_string(c.node) + " slot " + std::to_string(i) +
                                 " refers to the wrong block");
        }
        if (!code.ext().valid(c.symbols[i].value)) {
            throw ParameterError("node " + std::to_string(c.node) + " holds a malformed extension symbol");
        }
    }
}

NodeContents component(const PrecodedNodeContents& c, std::size_t coord) {
    NodeContents out;
    out.node = c.node;
    out.symbols.reserve(c.symbols.size());
    for (const auto& s : c.symbols) {
        out.symbols.push_back({s.block, s.value[coord]});
    }
    return out;
}

std::vector<NodeContents> components(std::span<const PrecodedNodeContents> nodes, std::size_t coord) {
    std::vector<NodeContents> out;
    out.reserve(nodes.size());
    for (const auto& c : nodes) {
        out.push_back(component(c, coord));
    }
    return out;
}

// Interleaves kappa coordinate-wise layered contents into extension symbols.
std::vector<PrecodedNodeContents> interleave(const std::vector<std::vector<NodeContents>>& parts, std::size_t kappa) {
    std::vector<PrecodedNodeContents> out;
    const auto& first = parts.front();
    out.reserve(first.size());
    for (std::size_t x = 0; x < first.size(); ++x) {
        PrecodedNodeContents c;
        c.node = first[x].node;
        for (std::size_t s = 0; s < first[x].symbols.size(); ++s) {
            ExtStoredSymbol sym;
            sym.block = first[x].symbols[s].block;
            sym.value.resize(kappa);
            for (std::size_t coord = 0; coord < kappa; ++coord) {
                sym.value[coord] = parts[coord][x].symbols[s].value;
            }
            c.symbols.push_back(std::move(sym));
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

std::vector<ExtElement> linearized_precode(const ExtensionField& ext, std::span<const ExtElement> data,
                                           std::span<const ExtElement> points) {
    if (data.size() > points.size()) {
        throw ParameterError("precode needs F <= F_c");
    }
    if (points.size() > ext.degree()) {
        throw ParameterError("precode needs F_c <= kappa");
    }
    BaseEchelon echelon(ext.base(), ext.degree());
    for (const auto& p : points) {
        if (!ext.valid(p)) {
            throw ParameterError("malformed evaluation point");
        }
        if (!echelon.insert(p)) {
            throw CodingError("evaluation points are dependent over the base field");
        }
    }
    for (const auto& v : data) {
        if (!ext.valid(v)) {
            throw ParameterError("malformed data symbol");
        }
    }
    std::vector<ExtElement> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        out.push_back(evaluate(ext, data, p));
    }
    return out;
}

void PrecodedParams::validate() const {
    if (!(1 <= e && e <= m && m <= n - k)) {
        throw ParameterError("precoded code requires 1 <= e <= m <= n - k");
    }
    if (!(m < r && r <= n)) {
        throw ParameterError("precoded code requires m < r <= n");
    }
    if (!(1 <= k && k <= d && d <= n - e)) {
        throw ParameterError("precoded code requires 1 <= k <= d <= n - e");
    }
    if (d < n - m) {
        throw ParameterError("group-local repair needs d >= n - m");
    }
}

namespace {

LayeredCode inner_code(const PrecodedParams& p, const std::shared_ptr<const GaloisField>& base) {
    p.validate();
    const SystemParams inner{p.n, p.n - p.m, p.n - p.m, p.e, p.m, p.r, p.r};
    return LayeredCode(inner, complete_design(p.n, p.r), base);
}

}  // namespace

PrecodedCode::PrecodedCode(PrecodedParams params, std::shared_ptr<const GaloisField> base, std::uint64_t seed)
    : params_(params), layered_(inner_code(params, base)) {
    const std::size_t fc = layered_.info_size();
    if (fc > kMaxDegree) {
        throw ParameterError("F_c = " + std::to_string(fc) + " exceeds the supported extension degree " +
                             std::to_string(kMaxDegree));
    }
    info_size_ = rho(params_.n, params_.k, params_.m, params_.r).convert_to<std::size_t>();
    if (info_size_ > fc) {
        throw std::logic_error("rho exceeds F_c");
    }
    ext_ = std::make_shared<const ExtensionField>(base, fc, seed);
    points_.reserve(fc);
    for (std::size_t i = 0; i < fc; ++i) {
        points_.push_back(ext_->basis(i));
    }
}

std::vector<PrecodedNodeContents> encode2(const PrecodedCode& code, std::span<const ExtElement> data) {
    if (data.size() != code.info_size()) {
        throw ParameterError("data has " + std::to_string(data.size()) + " symbols, expected F = " +
                             std::to_string(code.info_size()));
    }
    for (const auto& v : data) {
        if (!code.ext().valid(v)) {
            throw ParameterError("malformed data symbol");
        }
    }
    const std::vector<ExtElement> u = code.bypassed()
                                          ? std::vector<ExtElement>(data.begin(), data.end())
                                          : linearized_precode(code.ext(), data, code.points());
    const std::size_t kappa = code.kappa();
    std::vector<std::vector<NodeContents>> parts;
    parts.reserve(kappa);
    std::vector<Symbol> coords(u.size());
    for (std::size_t c = 0; c < kappa; ++c) {
        for (std::size_t i = 0; i < u.size(); ++i) {
            coords[i] = u[i][c];
        }
        parts.push_back(encode(code.layered(), coords));
    }
    return interleave(parts, kappa);
}

std::vector<ExtElement> reconstruct2(const PrecodedCode& code, std::span<const PrecodedNodeContents> nodes) {
    std::set<int> seen;
    for (const auto& c : nodes) {
        check_contents(code, c);
        if (!seen.insert(c.node).second) {
            throw ParameterError("node " + std::to_string(c.node) + " supplied twice");
        }
    }
    if (static_cast<int>(seen.size()) < code.params().k) {
        throw ParameterError("reconstruction needs " + std::to_string(code.params().k) + " nodes, got " +
                             std::to_string(seen.size()));
    }
    const ExtensionField& ext = code.ext();
    const std::size_t kappa = code.kappa();
    if (code.bypassed()) {
        std::vector<std::vector<Symbol>> parts;
        for (std::size_t c = 0; c < kappa; ++c) {
            parts.push_back(reconstruct(code.layered(), components(nodes, c)));
        }
        std::vector<ExtElement> out(code.info_size(), ext.zero());
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (std::size_t c = 0; c < kappa; ++c) {
                out[i][c] = parts[c][i];
            }
        }
        return out;
    }

    // Each stored symbol equals f(phi) where phi is the base-field combination
    // of evaluation points its group codec applies.
    const LayeredCode& lc = code.layered();
    const std::size_t dim = lc.group_dimension();
    const std::size_t fc = code.intermediate_size();
    std::vector<ExtElement> phis;
    std::vector<const ExtElement*> values;
    for (const auto& c : nodes) {
        for (const auto& s : c.symbols) {
            const int pos = lc.design().position(s.block, c.node);
            ExtElement phi(fc, 0);
            for (std::size_t i = 0; i < dim; ++i) {
                phi[s.block * dim + i] = lc.codec(s.block).generator(i, static_cast<std::size_t>(pos));
            }
            phis.push_back(std::move(phi));
            values.push_back(&s.value);
        }
    }
    const std::size_t f = code.info_size();
    BaseEchelon echelon(ext.base(), fc);
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < phis.size() && chosen.size() < f; ++i) {
        if (echelon.insert(phis[i])) {
            chosen.push_back(i);
        }
    }
    if (chosen.size() < f) {
        throw std::logic_error("k nodes expose rank " + std::to_string(chosen.size()) + " < F = " + std::to_string(f));
    }
    // Moore system: sum_i v_i phi_j^(q^i) = s_j.
    std::vector<std::vector<ExtElement>> moore(f);
    std::vector<ExtElement> rhs(f);
    for (std::size_t j = 0; j < f; ++j) {
        ExtElement power = phis[chosen[j]];
        moore[j].reserve(f);
        for (std::size_t i = 0; i < f; ++i) {
            if (i > 0) {
                power = ext.frobenius(power);
            }
            moore[j].push_back(power);
        }
        rhs[j] = *values[chosen[j]];
    }
    std::vector<ExtElement> data = solve_ext(ext, std::move(moore), std::move(rhs));
    for (std::size_t i = 0; i < phis.size(); ++i) {
        if (evaluate(ext, data, phis[i]) != *values[i]) {
            throw CodingError("node symbols are inconsistent with any codeword");
        }
    }
    return data;
}

PrecodedRepairResult repair2(const PrecodedCode& code, std::span<const PrecodedNodeContents> state,
                             const std::vector<int>& failed, const std::vector<int>& helpers) {
    for (const auto& c : state) {
        check_contents(code, c);
    }
    if (static_cast<int>(failed.size()) > code.params().m) {
        throw ParameterError("cannot repair more than m = " + std::to_string(code.params().m) + " failures");
    }
    const int n = code.params().n;
    const int h = static_cast<int>(helpers.size());
    if (!failed.empty() && (h < code.params().k || h > n - static_cast<int>(failed.size()))) {
        throw ParameterError("repair requires k <= d <= n - e' helpers");
    }
    const std::size_t kappa = code.kappa();
    std::vector<std::vector<NodeContents>> parts;
    PrecodedRepairResult out;
    for (std::size_t c = 0; c < kappa; ++c) {
        RepairResult r = repair_groups(code.layered(), components(state, c), failed, helpers);
        if (c == 0) {
            out.bandwidth = r.bandwidth;
        }
        parts.push_back(std::move(r.repaired));
    }
    if (!parts.front().empty()) {
        out.repaired = interleave(parts, kappa);
    }
    return out;
}

}  // namespace regen
