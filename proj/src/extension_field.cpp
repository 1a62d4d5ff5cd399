#include "regen/extension_field.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace regen {

namespace {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

Poly poly_mul(const GaloisField& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] ^= f.mul(a[i], b[j]);
        }
    }
    trim(out);
    return out;
}

// Remainder of a modulo b (b nonzero); quotient written to *quot if given.
Poly poly_divmod(const GaloisField& f, Poly a, const Poly& b, Poly* quot = nullptr) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const Symbol lead_inv = f.inv(b.back());
    if (quot) {
        quot->assign(a.size() >= b.size() ? a.size() - db : 0, 0);
    }
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const Symbol c = f.mul(a.back(), lead_inv);
        if (quot) {
            (*quot)[shift] = c;
        }
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] ^= f.mul(c, b[i]);
        }
        trim(a);
    }
    if (quot) {
        trim(*quot);
    }
    return a;
}

Poly poly_gcd(const GaloisField& f, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_add(Poly a, const Poly& b) {
    if (a.size() < b.size()) {
        a.resize(b.size(), 0);
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] ^= b[i];
    }
    trim(a);
    return a;
}

// a^q mod g by w repeated squarings (q = 2^w).
Poly frobenius_mod(const GaloisField& f, Poly a, const Poly& g) {
    for (unsigned i = 0; i < f.width(); ++i) {
        a = poly_divmod(f, poly_mul(f, a, a), g);
    }
    return a;
}

void check_monic(const GaloisField& base, const Poly& g) {
    if (g.size() < 2 || g.back() != 1) {
        throw FieldError("modulus must be monic of degree >= 1");
    }
    for (Symbol c : g) {
        if (!base.contains(c)) {
            throw FieldError("modulus coefficient outside the base field");
        }
    }
}

}  // namespace

bool is_irreducible(const GaloisField& base, const Poly& monic) {
    check_monic(base, monic);
    const std::size_t degree = monic.size() - 1;
    const Poly x = {0, 1};
    Poly h = poly_divmod(base, x, monic);
    for (std::size_t i = 1; i <= degree / 2; ++i) {
        h = frobenius_mod(base, h, monic);
        const Poly g = poly_gcd(base, monic, poly_add(h, x));
        if (g.size() != 1) {
            return false;
        }
    }
    return true;
}

ExtensionField::ExtensionField(std::shared_ptr<const GaloisField> base, std::size_t degree, std::uint64_t seed)
    : base_(std::move(base)), degree_(degree) {
    if (degree_ < 1) {
        throw FieldError("extension degree must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Symbol> coef(0, base_->order() - 1);
    Poly g(degree_ + 1, 0);
    g[degree_] = 1;
    do {
        for (std::size_t i = 0; i < degree_; ++i) {
            g[i] = coef(rng);
        }
        if (g[0] == 0 && degree_ > 1) {
            continue;  // divisible by x
        }
        if (is_irreducible(*base_, g)) {
            break;
        }
    } while (true);
    modulus_ = std::move(g);
    build_frobenius();
}

ExtensionField::ExtensionField(std::shared_ptr<const GaloisField> base, Poly modulus)
    : base_(std::move(base)), degree_(modulus.size() - 1), modulus_(std::move(modulus)) {
    if (!is_irreducible(*base_, modulus_)) {
        throw FieldError("extension modulus is reducible");
    }
    build_frobenius();
}

void ExtensionField::build_frobenius() {
    frobenius_.assign(degree_ * degree_, 0);
    const Poly xq = frobenius_mod(*base_, Poly{0, 1}, modulus_);
    Poly col = {1};
    for (std::size_t j = 0; j < degree_; ++j) {
        for (std::size_t i = 0; i < col.size(); ++i) {
            frobenius_[i * degree_ + j] = col[i];
        }
        col = poly_divmod(*base_, poly_mul(*base_, col, xq), modulus_);
    }
}

ExtensionField::Element ExtensionField::one() const { return scalar(1); }

ExtensionField::Element ExtensionField::basis(std::size_t i) const {
    if (i >= degree_) {
        throw FieldError("basis index " + std::to_string(i) + " beyond extension degree");
    }
    Element e = zero();
    e[i] = 1;
    return e;
}

ExtensionField::Element ExtensionField::scalar(Symbol c) const {
    Element e = zero();
    e[0] = c;
    return e;
}

bool ExtensionField::is_zero(const Element& a) const {
    return std::all_of(a.begin(), a.end(), [](Symbol c) { return c == 0; });
}

bool ExtensionField::valid(const Element& a) const {
    return a.size() == degree_ && std::all_of(a.begin(), a.end(), [&](Symbol c) { return base_->contains(c); });
}

ExtensionField::Element ExtensionField::add(const Element& a, const Element& b) const {
    Element out(degree_);
    for (std::size_t i = 0; i < degree_; ++i) {
        out[i] = a[i] ^ b[i];
    }
    return out;
}

ExtensionField::Element ExtensionField::scale(Symbol c, const Element& a) const {
    Element out(degree_);
    for (std::size_t i = 0; i < degree_; ++i) {
        out[i] = base_->mul(c, a[i]);
    }
    return out;
}

ExtensionField::Element ExtensionField::mul(const Element& a, const Element& b) const {
    Poly prod = poly_divmod(*base_, poly_mul(*base_, a, b), modulus_);
    prod.resize(degree_, 0);
    return prod;
}

ExtensionField::Element ExtensionField::inv(const Element& a) const {
    Poly r0 = modulus_;
    Poly r1 = a;
    trim(r1);
    if (r1.empty()) {
        throw FieldError("inverse of zero");
    }
    Poly s0;       // coefficient of a for r0
    Poly s1 = {1};  // coefficient of a for r1
    while (r1.size() > 1) {
        Poly q;
        Poly r2 = poly_divmod(*base_, r0, r1, &q);
        Poly s2 = poly_add(s0, poly_mul(*base_, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) {
        throw FieldError("element not invertible; modulus is reducible");
    }
    Element out = poly_divmod(*base_, s1, modulus_);
    const Symbol c = base_->inv(r1[0]);
    out.resize(degree_, 0);
    return scale(c, out);
}

ExtensionField::Element ExtensionField::frobenius(const Element& a) const {
    Element out = zero();
    for (std::size_t j = 0; j < degree_; ++j) {
        if (a[j] == 0) {
            continue;
        }
        for (std::size_t i = 0; i < degree_; ++i) {
            out[i] ^= base_->mul(frobenius_[i * degree_ + j], a[j]);
        }
    }
    return out;
}

}  // namespace regen
