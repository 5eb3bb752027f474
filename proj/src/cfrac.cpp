#include "rrkit/cfrac.hpp"

#include <cmath>
#include <stdexcept>

#include "rrkit/sumside.hpp"

namespace rrkit {

BigRational::BigRational(Integer numerator, Integer denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (sgn(denominator_) == 0) throw std::domain_error("BigRational: zero denominator");
    if (sgn(denominator_) < 0) {
        numerator_ = -numerator_;
        denominator_ = -denominator_;
    }
    Integer g = gcd(numerator_, denominator_);
    if (g > 1) {
        mpz_divexact(numerator_.get_mpz_t(), numerator_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(denominator_.get_mpz_t(), denominator_.get_mpz_t(), g.get_mpz_t());
    }
}

double BigRational::to_double() const {
    mpq_class q(numerator_, denominator_);
    return q.get_d();
}

std::string BigRational::to_string() const {
    return numerator_.get_str() + "/" + denominator_.get_str();
}

BigRational operator+(const BigRational &a, const BigRational &b) {
    return BigRational(a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_,
                       a.denominator_ * b.denominator_);
}

BigRational reciprocal(const BigRational &a) { return BigRational(a.denominator_, a.numerator_); }

Integer fibonacci(std::size_t n) {
    Integer prev = 1, cur = 1;
    for (std::size_t i = 1; i < n; ++i) {
        Integer next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigRational golden_convergent(std::size_t n) {
    if (n == 0) throw std::invalid_argument("golden_convergent: index starts at 1");
    const BigRational one(1, 1);
    BigRational w = one;
    for (std::size_t i = 2; i <= n; ++i) w = one + reciprocal(w);
    return w;
}

double golden_error(std::size_t n) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    return std::abs(golden_convergent(n).to_double() - phi);
}

std::vector<ZPolynomial> rr_numerators(std::size_t n, std::size_t qorder) {
    const ZPolynomial one = ZPolynomial::one(qorder);
    std::vector<ZPolynomial> h;
    h.reserve(n + 1);
    h.push_back(one);
    for (std::size_t k = 1; k <= n; ++k) {
        const ZPolynomial &older = k >= 2 ? h[k - 2] : one;
        h.push_back(zadd(subst_zq(h[k - 1], 1), zshift(subst_zq(older, 2), 1, 1)));
    }
    return h;
}

RRConvergent rr_convergent(std::size_t n, std::size_t qorder) {
    if (n == 0) throw std::invalid_argument("rr_convergent: index starts at 1");
    auto h = rr_numerators(n, qorder);
    return {std::move(h[n]), subst_zq(h[n - 1], 1)};
}

QSeries convergent_series(const RRConvergent &c) {
    return mul(eval_z_at_qpow(c.numerator, 0), invert(eval_z_at_qpow(c.denominator, 0)));
}

QSeries cfrac_series(std::size_t order) {
    return mul(rr_sum(0, order), invert(rr_sum(1, order)));
}

long agreement_order(const QSeries &a, const QSeries &b) {
    if (a.order() != b.order()) throw std::invalid_argument("agreement_order: mismatched orders");
    long k = 0;
    while (static_cast<std::size_t>(k) <= a.order() && a[k] == b[k]) ++k;
    return k - 1;
}

}  // namespace rrkit
