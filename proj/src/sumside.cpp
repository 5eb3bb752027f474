#include "rrkit/sumside.hpp"

namespace rrkit {

QSeries qrfac(std::size_t k, std::size_t order) {
    QSeries r = QSeries::one(order);
    for (std::size_t i = 1; i <= k; ++i) r = r.times_one_minus_qpow(i);
    return r;
}

std::vector<QSeries> sum_coefficients(std::size_t kmax, std::size_t order) {
    // 1/(q;q)_k is built incrementally by dividing by (1 - q^k).
    std::vector<QSeries> a;
    a.reserve(kmax + 1);
    QSeries reciprocal = QSeries::one(order);
    for (std::size_t k = 0; k <= kmax; ++k) {
        if (k > 0) reciprocal = reciprocal.over_one_minus_qpow(k);
        a.push_back(reciprocal.shifted(k * k));
    }
    return a;
}

QSeries rr_sum(std::size_t t, std::size_t order) {
    QSeries sum(order);
    QSeries reciprocal = QSeries::one(order);
    for (std::size_t k = 0; k * k + t * k <= order; ++k) {
        if (k > 0) reciprocal = reciprocal.over_one_minus_qpow(k);
        sum = sum + reciprocal.shifted(k * k + t * k);
    }
    return sum;
}

bool coeff_recurrence_holds(std::span<const QSeries> a) {
    for (std::size_t k = 1; k < a.size(); ++k) {
        if (a[k].times_one_minus_qpow(k) != a[k - 1].shifted(2 * k - 1)) return false;
    }
    return true;
}

bool coeff_recurrence_check(std::size_t kmax, std::size_t order) {
    return coeff_recurrence_holds(sum_coefficients(kmax, order));
}

ZPolynomial h_bivariate(std::size_t kmax, std::size_t order) {
    return ZPolynomial(order, sum_coefficients(kmax, order));
}

ZPolynomial functional_rhs(const ZPolynomial &h) {
    return zadd(subst_zq(h, 1), zshift(subst_zq(h, 2), 1, 1));
}

}  // namespace rrkit
