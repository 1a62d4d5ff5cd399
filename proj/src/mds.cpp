#include "regen/mds.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace regen {

namespace {

std::vector<Symbol> default_points(const GaloisField& field, std::size_t length) {
    if (length > field.order()) {
        throw CodingError("codeword length " + std::to_string(length) + " exceeds field order " +
                          std::to_string(field.order()));
    }
    std::vector<Symbol> pts(length);
    std::iota(pts.begin(), pts.end(), Symbol{0});
    return pts;
}

}  // namespace

MdsCodec::MdsCodec(std::shared_ptr<const GaloisField> field, std::size_t length, std::size_t dimension)
    : MdsCodec(field, default_points(*field, length), dimension) {}

MdsCodec::MdsCodec(std::shared_ptr<const GaloisField> field, std::vector<Symbol> points, std::size_t dimension)
    : field_(std::move(field)), points_(std::move(points)), dimension_(dimension) {
    if (!field_) {
        throw CodingError("codec needs a field");
    }
    if (dimension_ < 1 || dimension_ > points_.size()) {
        throw CodingError("codec requires 1 <= dimension <= length");
    }
    std::vector<Symbol> sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw CodingError("evaluation points must be distinct");
    }
    for (Symbol p : points_) {
        if (!field_->contains(p)) {
            throw CodingError("evaluation point outside the field");
        }
    }
    // Row i is the Lagrange basis polynomial for point i (over the first
    // `dimension` points) evaluated at every position.
    const std::size_t n = points_.size();
    generator_.assign(dimension_ * n, 0);
    std::vector<std::size_t> basis(dimension_);
    std::iota(basis.begin(), basis.end(), std::size_t{0});
    std::vector<Symbol> unit(dimension_, 0);
    for (std::size_t i = 0; i < dimension_; ++i) {
        unit[i] = 1;
        for (std::size_t j = 0; j < n; ++j) {
            generator_[i * n + j] = j < dimension_ ? (i == j ? 1 : 0) : interpolate_at(basis, unit, points_[j]);
        }
        unit[i] = 0;
    }
}

Symbol MdsCodec::interpolate_at(const std::vector<std::size_t>& basis, const std::vector<Symbol>& values,
                                Symbol x) const {
    const GaloisField& f = *field_;
    Symbol acc = 0;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        if (values[a] == 0) {
            continue;
        }
        const Symbol xa = points_[basis[a]];
        Symbol num = 1;
        Symbol den = 1;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (b == a) {
                continue;
            }
            const Symbol xb = points_[basis[b]];
            num = f.mul(num, GaloisField::sub(x, xb));
            den = f.mul(den, GaloisField::sub(xa, xb));
        }
        acc ^= f.mul(values[a], f.div(num, den));
    }
    return acc;
}

std::vector<Symbol> MdsCodec::encode(std::span<const Symbol> message) const {
    if (message.size() != dimension_) {
        throw CodingError("message has " + std::to_string(message.size()) + " symbols, expected " +
                          std::to_string(dimension_));
    }
    const GaloisField& f = *field_;
    const std::size_t n = length();
    std::vector<Symbol> out(n, 0);
    for (std::size_t i = 0; i < dimension_; ++i) {
        if (!f.contains(message[i])) {
            throw CodingError("message symbol outside the field");
        }
        if (message[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            out[j] ^= f.mul(message[i], generator_[i * n + j]);
        }
    }
    return out;
}

std::vector<Symbol> MdsCodec::decode(const std::map<std::size_t, Symbol>& available) const {
    if (available.size() < dimension_) {
        throw CodingError("decode needs " + std::to_string(dimension_) + " positions, got " +
                          std::to_string(available.size()));
    }
    std::vector<std::size_t> basis;
    std::vector<Symbol> values;
    for (const auto& [pos, value] : available) {
        if (pos >= length()) {
            throw CodingError("position " + std::to_string(pos) + " outside codeword");
        }
        if (basis.size() < dimension_) {
            basis.push_back(pos);
            values.push_back(value);
        }
    }
    std::vector<Symbol> out(length());
    for (std::size_t j = 0; j < length(); ++j) {
        const auto it = available.find(j);
        const auto in_basis = std::find(basis.begin(), basis.end(), j);
        if (in_basis != basis.end()) {
            out[j] = values[static_cast<std::size_t>(in_basis - basis.begin())];
            continue;
        }
        out[j] = interpolate_at(basis, values, points_[j]);
        if (it != available.end() && it->second != out[j]) {
            throw CodingError("inconsistent symbol at position " + std::to_string(j));
        }
    }
    return out;
}

MdsCodec MdsCodec::extended(std::size_t new_length) const {
    if (new_length < length()) {
        throw CodingError("cannot shrink a codec");
    }
    if (new_length > field_->order()) {
        throw CodingError("extended length exceeds field order");
    }
    std::vector<Symbol> pts = points_;
    Symbol candidate = 0;
    while (pts.size() < new_length) {
        if (std::find(pts.begin(), pts.end(), candidate) == pts.end()) {
            pts.push_back(candidate);
        }
        ++candidate;
    }
    return MdsCodec(field_, std::move(pts), dimension_);
}

}  // namespace regen
