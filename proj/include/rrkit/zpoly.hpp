#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rrkit/fps.hpp"

namespace rrkit {

/// One monomial c * z^zdeg * q^qdeg, used to spell polynomials in tests and
/// examples.
struct ZQTerm {
    long coeff;
    std::size_t zdeg;
    std::size_t qdeg;
};

/// Polynomial in z whose coefficients are truncated q-series sharing one
/// truncation order. The z-degree is exact; only q is truncated.
///
/// Stored normalized: the highest z-coefficient is never the zero series, so
/// the zero polynomial has no coefficients at all.
class ZPolynomial {
public:
    explicit ZPolynomial(std::size_t qorder);
    /// Every entry must have order qorder; trailing zero series are trimmed.
    ZPolynomial(std::size_t qorder, std::vector<QSeries> zcoeffs);

    static ZPolynomial constant(const QSeries &c);
    static ZPolynomial one(std::size_t qorder);
    static ZPolynomial from_terms(std::size_t qorder, std::initializer_list<ZQTerm> terms);

    std::size_t qorder() const noexcept { return qorder_; }
    std::span<const QSeries> zcoeffs() const noexcept { return zcoeffs_; }
    bool is_zero() const noexcept { return zcoeffs_.empty(); }
    /// Number of stored z-coefficients (degree + 1; 0 for the zero polynomial).
    std::size_t size() const noexcept { return zcoeffs_.size(); }
    /// Coefficient of z^d; the zero series when d is beyond the degree.
    QSeries coeff(std::size_t d) const;

    /// Keeps z-degrees <= max_zdeg and q-orders <= max_qorder.
    ZPolynomial restricted(std::size_t max_zdeg, std::size_t max_qorder) const;

    friend bool operator==(const ZPolynomial &, const ZPolynomial &) = default;

private:
    void trim();

    std::size_t qorder_;
    std::vector<QSeries> zcoeffs_;
};

/// p(z q^j, q).
ZPolynomial subst_zq(const ZPolynomial &p, std::size_t j);

ZPolynomial zadd(const ZPolynomial &a, const ZPolynomial &b);
ZPolynomial zsub(const ZPolynomial &a, const ZPolynomial &b);
ZPolynomial zmul(const ZPolynomial &a, const ZPolynomial &b);
/// a * z^k * q^m.
ZPolynomial zshift(const ZPolynomial &a, std::size_t k, std::size_t m);

/// p(q^t, q): sum over d of q^{t d} times the z^d coefficient.
QSeries eval_z_at_qpow(const ZPolynomial &p, std::size_t t);

/// Monomials ordered by z-degree then q-degree, e.g. "1+zq+zq^2+zq^3+z^2q^4".
std::string to_string(const ZPolynomial &p);

/// {"qorder": N, "zcoeffs": [QSeries JSON, ...]} indexed by z-degree.
nlohmann::json to_json(const ZPolynomial &p);

}  // namespace rrkit
