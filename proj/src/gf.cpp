#include "regen/gf.hpp"

#include <array>
#include <string>
#include <utility>

namespace regen {

namespace {

// Primitive polynomials over GF(2), indexed by degree.
constexpr std::array<Symbol, 17> kPrimitive = {
    0,       0,      0x7,    0xb,    0x13,   0x25,   0x43,   0x89,   0x11d,
    0x211,   0x409,  0x805,  0x1053, 0x201b, 0x4443, 0x8003, 0x1100b,
};

}  // namespace

GaloisField::GaloisField(unsigned width) : width_(width) {
    if (width < 2 || width > 16) {
        throw FieldError("field width must be in [2, 16], got " + std::to_string(width));
    }
    order_ = Symbol{1} << width;
    poly_ = kPrimitive[width];
    exp_.assign(2 * static_cast<std::size_t>(order_), 0);
    log_.assign(order_, 0);
    Symbol x = 1;
    for (Symbol i = 0; i < order_ - 1; ++i) {
        if (i != 0 && x == 1) {
            throw FieldError("polynomial is not primitive for width " + std::to_string(width));
        }
        exp_[i] = x;
        log_[x] = i;
        x <<= 1;
        if (x & order_) {
            x ^= poly_;
        }
    }
    for (std::size_t i = order_ - 1; i < exp_.size(); ++i) {
        exp_[i] = exp_[i - (order_ - 1)];
    }
}

Symbol GaloisField::pow(Symbol a, std::uint64_t e) const {
    if (e == 0) {
        return 1;
    }
    if (a == 0) {
        return 0;
    }
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (order_ - 1))) % (order_ - 1)];
}

Symbol field_arith(const GaloisField& field, Symbol a, Symbol b, FieldOp op) {
    switch (op) {
        case FieldOp::add:
            return GaloisField::add(a, b);
        case FieldOp::mul:
            return field.mul(a, b);
        case FieldOp::inv:
            return field.inv(a);
        case FieldOp::div:
            return field.div(a, b);
    }
    throw FieldError("unknown field operation");
}

std::size_t rank(const GaloisField& field, GfMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        if (pivot != rank) {
            for (std::size_t j = col; j < m.cols(); ++j) {
                std::swap(m(pivot, j), m(rank, j));
            }
        }
        const Symbol inv = field.inv(m(rank, col));
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            const Symbol f = field.mul(m(i, col), inv);
            if (f == 0) {
                continue;
            }
            for (std::size_t j = col; j < m.cols(); ++j) {
                m(i, j) ^= field.mul(f, m(rank, j));
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<Symbol> solve(const GaloisField& field, GfMatrix a, std::vector<Symbol> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) {
        throw FieldError("solve expects a square system");
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            throw FieldError("singular system");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
            }
            std::swap(b[pivot], b[col]);
        }
        const Symbol inv = field.inv(a(col, col));
        for (std::size_t j = col; j < n; ++j) {
            a(col, j) = field.mul(a(col, j), inv);
        }
        b[col] = field.mul(b[col], inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) {
                continue;
            }
            const Symbol f = a(i, col);
            for (std::size_t j = col; j < n; ++j) {
                a(i, j) ^= field.mul(f, a(col, j));
            }
            b[i] ^= field.mul(f, b[col]);
        }
    }
    return b;
}

}  // namespace regen
