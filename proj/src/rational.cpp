#include "regen/rational.hpp"
#include "regen/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace regen {

BigInt isqrt(const BigInt& x) {
    if (x < 0) {
        throw std::domain_error("isqrt of a negative number");
    }
    BigInt s = boost::multiprecision::sqrt(x);
    // Bracket explicitly rather than trusting the library's rounding.
    while (s * s > x) {
        --s;
    }
    while ((s + 1) * (s + 1) <= x) {
        ++s;
    }
    return s;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("division by zero");
    }
    BigInt q = num / den;  // truncates toward zero
    const BigInt r = num - q * den;
    if (r != 0 && ((r < 0) != (den < 0))) {
        --q;
    }
    return q;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
    return -floor_div(-num, den);
}

BigInt floor_of(const Rational& x) { return floor_div(numerator_of(x), denominator_of(x)); }
BigInt ceil_of(const Rational& x) { return ceil_div(numerator_of(x), denominator_of(x)); }

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

std::uint64_t binomial_u64(std::int64_t n, std::int64_t k) {
    const BigInt b = binomial(n, k);
    if (b > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("binomial does not fit in 64 bits");
    }
    return b.convert_to<std::uint64_t>();
}

void for_each_combination(int n, int k, int first, const std::function<void(const std::vector<int>&)>& visit) {
    if (k < 0 || k > n) {
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        idx[static_cast<std::size_t>(i)] = first + i;
    }
    const int last = first + n - 1;
    while (true) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == last - (k - 1 - i)) {
            --i;
        }
        if (i < 0) {
            return;
        }
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    for_each_combination(n, k, 1, [&](const std::vector<int>& c) { out.push_back(c); });
    return out;
}

}  // namespace regen
