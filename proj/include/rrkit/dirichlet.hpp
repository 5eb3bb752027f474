#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "rrkit/fps.hpp"

namespace rrkit {

/// Formal Dirichlet series sum_{n=1}^{limit} c_n n^{-s}. s is never evaluated.
class DirichletSeries {
public:
    /// The zero series. limit must be at least 1.
    explicit DirichletSeries(std::size_t limit);
    /// coeffs[0] is c_1; exactly `limit` entries.
    DirichletSeries(std::size_t limit, std::vector<Integer> coeffs);

    static DirichletSeries identity(std::size_t limit);  // delta_1
    /// Sparse construction from (n, c_n) pairs; indices above the limit are dropped.
    static DirichletSeries from_terms(std::size_t limit,
                                      std::initializer_list<std::pair<std::size_t, long>> terms);

    std::size_t limit() const noexcept { return coeffs_.size(); }
    /// c_n, 1 <= n <= limit (checked).
    const Integer &coefficient(std::size_t n) const;
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    /// this * (1 - n^{-s})^c.
    DirichletSeries times_binomial_power(std::size_t n, const Integer &c) const;

    friend bool operator==(const DirichletSeries &, const DirichletSeries &) = default;

private:
    std::vector<Integer> coeffs_;
};

/// zeta(s) = 1 + 2^{-s} + 3^{-s} + ... up to the limit.
DirichletSeries zeta_series(std::size_t limit);

/// Divisor convolution: (f g)_n = sum_{d | n} f_d g_{n/d}.
DirichletSeries dmul(const DirichletSeries &f, const DirichletSeries &g);

struct EulerStrip {
    std::vector<std::size_t> indices;
    DirichletSeries residual;
};

/// Strips zeta(s) by repeatedly multiplying by (1 - n^{-s})^{c_n} at the
/// smallest n >= 2 with nonzero c_n. The stripped indices are the primes.
EulerStrip euler_strip_trace(std::size_t limit);
std::vector<std::size_t> euler_strip(std::size_t limit);

}  // namespace rrkit
