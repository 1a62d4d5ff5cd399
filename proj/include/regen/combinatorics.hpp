#pragma once

#include "regen/rational.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace regen {

/// Binomial coefficient C(n, k); zero when k < 0, k > n or n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Machine-word binomial for small arguments; throws std::overflow_error if it does not fit.
std::uint64_t binomial_u64(std::int64_t n, std::int64_t k);

/// Calls visit(combination) for every size-k subset of {first, ..., first+n-1},
/// in lexicographic order. Each combination is sorted ascending.
void for_each_combination(int n, int k, int first, const std::function<void(const std::vector<int>&)>& visit);

/// All size-k subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

}  // namespace regen
