#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace rrkit {

using Integer = mpz_class;

/// Truncated formal power series in q with exact integer coefficients.
///
/// The truncation order is inclusive: a series of order N stores the
/// coefficients of q^0 .. q^N. Binary operations require equal orders and
/// throw std::invalid_argument otherwise. Values are immutable once built.
class QSeries {
public:
    /// The zero series of the given order.
    explicit QSeries(std::size_t order);

    /// Takes ownership of exactly order+1 coefficients.
    QSeries(std::size_t order, std::vector<Integer> coeffs);

    /// Leading coefficients a_0, a_1, ...; the remainder up to `order` is zero.
    /// Entries beyond the order are dropped.
    static QSeries from_coeffs(std::size_t order, std::initializer_list<long> leading);
    static QSeries one(std::size_t order);
    /// c * q^degree (zero if degree > order).
    static QSeries monomial(const Integer &c, std::size_t degree, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    /// Unchecked access; k must not exceed order().
    const Integer &operator[](std::size_t k) const noexcept { return coeffs_[k]; }

    /// Checked access; throws std::out_of_range when k > order().
    const Integer &coefficient(std::size_t k) const;

    /// Drops every term above q^order; order must not exceed order().
    QSeries truncated(std::size_t order) const;

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Index of the lowest nonzero coefficient at or above `from`, or
    /// order()+1 if there is none.
    std::size_t lowest_nonzero(std::size_t from = 0) const noexcept;

    /// this * q^m, truncated.
    QSeries shifted(std::size_t m) const;
    /// this * (1 - q^m), m >= 1. Linear time.
    QSeries times_one_minus_qpow(std::size_t m) const;
    /// this / (1 - q^m), m >= 1. Linear time.
    QSeries over_one_minus_qpow(std::size_t m) const;
    /// this * (1 - q^m)^c for any integer c (negative c divides). Uses the
    /// generalized binomial expansion, so only floor(order/m) terms are needed.
    QSeries times_binomial_power(std::size_t m, const Integer &c) const;

    friend bool operator==(const QSeries &, const QSeries &) = default;

    friend QSeries operator+(const QSeries &a, const QSeries &b);
    friend QSeries operator-(const QSeries &a, const QSeries &b);
    friend QSeries operator-(const QSeries &a);
    friend QSeries operator*(const QSeries &a, const QSeries &b);
    friend QSeries operator*(const Integer &c, const QSeries &a);

private:
    std::vector<Integer> coeffs_;
};

/// 1 + q^m + q^{2m} + ... truncated at order N. Throws std::invalid_argument for m = 0.
QSeries geometric(std::size_t m, std::size_t order);

/// ca*a + cb*b.
QSeries linear_combine(const QSeries &a, const QSeries &b, const Integer &ca, const Integer &cb);

/// Truncated Cauchy product.
QSeries mul(const QSeries &a, const QSeries &b);

/// Reciprocal of a series whose constant term is 1 or -1. Any other constant
/// term throws std::domain_error ("non-unit constant term").
QSeries invert(const QSeries &a);

/// Checked coefficient access; throws std::out_of_range when k > a.order().
const Integer &coefficient(const QSeries &a, std::size_t k);

/// "a0 + a1*q + a2*q^2 + ..." with zero terms omitted; "0" for the zero series.
std::string to_string(const QSeries &a);

/// {"order": N, "coeffs": ["a0", ..., "aN"]} with decimal-string coefficients.
nlohmann::json to_json(const QSeries &a);
QSeries qseries_from_json(const nlohmann::json &j);

/// Compact rendering in the style 1+q+q^2+2q^4 (used by the z-polynomial
/// printer and the CLI). `terms` limits the number of printed monomials,
/// appending "+..." when more remain; 0 means unlimited.
std::string to_compact_string(const QSeries &a, std::size_t terms = 0);

/// Generalized binomial coefficient C(c, j) for integer c and j >= 0.
Integer binomial(const Integer &c, std::size_t j);

}  // namespace rrkit
