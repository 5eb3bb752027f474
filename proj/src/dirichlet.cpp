#include "rrkit/dirichlet.hpp"

#include <stdexcept>
#include <string>

namespace rrkit {

DirichletSeries::DirichletSeries(std::size_t limit) : coeffs_(limit) {
    if (limit == 0) throw std::invalid_argument("DirichletSeries: limit must be at least 1");
}

DirichletSeries::DirichletSeries(std::size_t limit, std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (limit == 0) throw std::invalid_argument("DirichletSeries: limit must be at least 1");
    if (coeffs_.size() != limit) {
        throw std::invalid_argument("DirichletSeries: expected " + std::to_string(limit) +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
    }
}

DirichletSeries DirichletSeries::identity(std::size_t limit) {
    DirichletSeries d(limit);
    d.coeffs_[0] = 1;
    return d;
}

DirichletSeries DirichletSeries::from_terms(
    std::size_t limit, std::initializer_list<std::pair<std::size_t, long>> terms) {
    DirichletSeries d(limit);
    for (const auto &[n, c] : terms) {
        if (n == 0) throw std::invalid_argument("DirichletSeries: indices start at 1");
        if (n <= limit) d.coeffs_[n - 1] += c;
    }
    return d;
}

const Integer &DirichletSeries::coefficient(std::size_t n) const {
    if (n == 0 || n > limit()) {
        throw std::out_of_range("Dirichlet index " + std::to_string(n) + " outside 1.." +
                                std::to_string(limit()));
    }
    return coeffs_[n - 1];
}

DirichletSeries DirichletSeries::times_binomial_power(std::size_t n, const Integer &c) const {
    if (n < 2) throw std::invalid_argument("times_binomial_power: index must be at least 2");
    // (1 - n^{-s})^c = sum_j C(c, j) (-1)^j (n^j)^{-s}
    DirichletSeries out(limit());
    std::size_t power = 1;
    for (std::size_t j = 0; power <= limit(); ++j) {
        Integer b = binomial(c, j);
        if (j % 2 == 1) b = -b;
        if (sgn(b) != 0) {
            for (std::size_t m = 1; m * power <= limit(); ++m) {
                mpz_addmul(out.coeffs_[m * power - 1].get_mpz_t(), b.get_mpz_t(),
                           coeffs_[m - 1].get_mpz_t());
            }
        }
        if (power > limit() / n) break;
        power *= n;
    }
    return out;
}

DirichletSeries zeta_series(std::size_t limit) {
    return DirichletSeries(limit, std::vector<Integer>(limit, Integer(1)));
}

DirichletSeries dmul(const DirichletSeries &f, const DirichletSeries &g) {
    if (f.limit() != g.limit()) {
        throw std::invalid_argument("dmul: mismatched limits " + std::to_string(f.limit()) +
                                    " and " + std::to_string(g.limit()));
    }
    const std::size_t n = f.limit();
    std::vector<Integer> out(n);
    for (std::size_t d = 1; d <= n; ++d) {
        const Integer &fd = f.coeffs()[d - 1];
        if (sgn(fd) == 0) continue;
        for (std::size_t e = 1; d * e <= n; ++e) {
            mpz_addmul(out[d * e - 1].get_mpz_t(), fd.get_mpz_t(), g.coeffs()[e - 1].get_mpz_t());
        }
    }
    return DirichletSeries(n, std::move(out));
}

EulerStrip euler_strip_trace(std::size_t limit) {
    EulerStrip result{{}, zeta_series(limit)};
    for (std::size_t n = 2; n <= limit; ++n) {
        const Integer c = result.residual.coefficient(n);
        if (sgn(c) == 0) continue;
        result.indices.push_back(n);
        result.residual = result.residual.times_binomial_power(n, c);
    }
    return result;
}

std::vector<std::size_t> euler_strip(std::size_t limit) { return euler_strip_trace(limit).indices; }

}  // namespace rrkit
