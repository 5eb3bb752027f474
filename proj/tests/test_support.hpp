#pragma once

// Independent oracles and random generators shared by the unit and
// acceptance suites. Nothing here calls into the code paths it checks.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "rrkit/fps.hpp"
#include "rrkit/prodmake.hpp"

namespace rrkit::testing {

/// p(0..n) by explicit enumeration of partitions in non-increasing part order.
inline std::vector<std::uint64_t> brute_force_partition_counts(std::size_t n) {
    std::vector<std::uint64_t> counts(n + 1, 0);
    // Depth-first enumeration: remaining sum, largest part allowed.
    struct Frame {
        std::size_t total;
        std::size_t max_part;
    };
    for (std::size_t target = 0; target <= n; ++target) {
        std::vector<Frame> stack{{0, target == 0 ? 1 : target}};
        std::uint64_t count = 0;
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            if (f.total == target) {
                ++count;
                continue;
            }
            for (std::size_t part = 1; part <= f.max_part && f.total + part <= target; ++part) {
                stack.push_back({f.total + part, part});
            }
        }
        counts[target] = count;
    }
    return counts;
}

/// Primes up to n by the sieve of Eratosthenes.
inline std::vector<std::size_t> sieve_primes(std::size_t n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<std::size_t> primes;
    for (std::size_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::size_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return primes;
}

/// Random series with coefficients in [lo, hi]; constant term forced when
/// `unit` is nonzero.
inline QSeries random_series(std::mt19937_64 &rng, std::size_t order, int lo, int hi,
                             int unit = 0) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<Integer> c(order + 1);
    for (auto &x : c) x = dist(rng);
    if (unit != 0) c[0] = unit;
    return QSeries(order, std::move(c));
}

/// Random product form: each exponent 1..max_exponent present with
/// probability 1/2, multiplicity uniform in [-3, 3] \ {0}.
inline ProductForm random_product_form(std::mt19937_64 &rng, std::size_t max_exponent) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> mult(1, 3);
    ProductForm::Factors f;
    for (std::size_t e = 1; e <= max_exponent; ++e) {
        if (coin(rng) == 0) continue;
        const int m = mult(rng);
        f.emplace(e, Integer(coin(rng) == 0 ? -m : m));
    }
    return ProductForm(std::move(f));
}

}  // namespace rrkit::testing
