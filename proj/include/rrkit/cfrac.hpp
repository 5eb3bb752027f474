#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rrkit/fps.hpp"
#include "rrkit/zpoly.hpp"

namespace rrkit {

/// Exact rational in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    /// Throws std::domain_error for a zero denominator.
    BigRational(Integer numerator, Integer denominator);

    const Integer &numerator() const noexcept { return numerator_; }
    const Integer &denominator() const noexcept { return denominator_; }
    double to_double() const;
    std::string to_string() const;  // "8/5"

    friend bool operator==(const BigRational &, const BigRational &) = default;
    friend BigRational operator+(const BigRational &a, const BigRational &b);
    friend BigRational reciprocal(const BigRational &a);

private:
    Integer numerator_{0};
    Integer denominator_{1};
};

/// F_0 = F_1 = 1, F_n = F_{n-1} + F_{n-2}.
Integer fibonacci(std::size_t n);

/// w_1 = 1, w_n = 1 + 1/w_{n-1}. Throws std::invalid_argument for n = 0.
BigRational golden_convergent(std::size_t n);

/// |w_n - (1 + sqrt 5)/2| in double precision. Diagnostic only.
double golden_error(std::size_t n);

/// H_0 .. H_n, the numerators of the truncated fractions
/// c_n(z,q) = 1 + zq/(1 + zq^2/(1 + ... zq^n/1)), built from
/// H_k(z) = H_{k-1}(zq) + zq H_{k-2}(zq^2) with H_{-1} = H_0 = 1.
std::vector<ZPolynomial> rr_numerators(std::size_t n, std::size_t qorder);

struct RRConvergent {
    ZPolynomial numerator;
    ZPolynomial denominator;
};

/// (H_n(z,q), H_{n-1}(zq,q)). Throws std::invalid_argument for n = 0.
RRConvergent rr_convergent(std::size_t n, std::size_t qorder);

/// The convergent's value at z = 1 as a power series: numerator(1) / denominator(1).
QSeries convergent_series(const RRConvergent &c);

/// Power series of c(1,q) = H(1,q)/H(q,q) to the given order.
QSeries cfrac_series(std::size_t order);

/// Highest q-order through which two series of equal order agree, or -1 if
/// their constant terms already differ.
long agreement_order(const QSeries &a, const QSeries &b);

}  // namespace rrkit
