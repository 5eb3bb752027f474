#include "rrkit/fps.hpp"

#include <stdexcept>

namespace rrkit {

namespace {

void require_same_order(const QSeries &a, const QSeries &b, const char *op) {
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(op) + ": mismatched truncation orders " +
                                    std::to_string(a.order()) + " and " +
                                    std::to_string(b.order()));
    }
}

// Appends one monomial c*q^k to `out` in the "a0 + a1*q + ..." style.
void append_term(std::string &out, const Integer &c, std::size_t k) {
    const bool negative = sgn(c) < 0;
    const Integer mag = abs(c);
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (k == 0) {
        out += mag.get_str();
        return;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "q";
    if (k > 1) out += "^" + std::to_string(k);
}

}  // namespace

QSeries::QSeries(std::size_t order) : coeffs_(order + 1) {}

QSeries::QSeries(std::size_t order, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order + 1) {
        throw std::invalid_argument("QSeries: expected " + std::to_string(order + 1) +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
    }
}

QSeries QSeries::from_coeffs(std::size_t order, std::initializer_list<long> leading) {
    QSeries s(order);
    std::size_t k = 0;
    for (long c : leading) {
        if (k > order) break;
        s.coeffs_[k++] = c;
    }
    return s;
}

QSeries QSeries::one(std::size_t order) {
    QSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

QSeries QSeries::monomial(const Integer &c, std::size_t degree, std::size_t order) {
    QSeries s(order);
    if (degree <= order) s.coeffs_[degree] = c;
    return s;
}

const Integer &QSeries::coefficient(std::size_t k) const {
    if (k > order()) {
        throw std::out_of_range("coefficient index " + std::to_string(k) +
                                " exceeds truncation order " + std::to_string(order()));
    }
    return coeffs_[k];
}

QSeries QSeries::truncated(std::size_t new_order) const {
    if (new_order > order()) {
        throw std::invalid_argument("truncated: cannot extend order " + std::to_string(order()) +
                                    " to " + std::to_string(new_order));
    }
    return QSeries(new_order, std::vector<Integer>(coeffs_.begin(),
                                                   coeffs_.begin() + new_order + 1));
}

bool QSeries::is_zero() const noexcept { return lowest_nonzero() > order(); }

bool QSeries::is_one() const noexcept { return coeffs_[0] == 1 && lowest_nonzero(1) > order(); }

std::size_t QSeries::lowest_nonzero(std::size_t from) const noexcept {
    for (std::size_t k = from; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) != 0) return k;
    }
    return coeffs_.size();
}

QSeries QSeries::shifted(std::size_t m) const {
    QSeries r(order());
    for (std::size_t k = m; k <= order(); ++k) r.coeffs_[k] = coeffs_[k - m];
    return r;
}

QSeries QSeries::times_one_minus_qpow(std::size_t m) const {
    if (m == 0) throw std::invalid_argument("times_one_minus_qpow: exponent must be positive");
    QSeries r(*this);
    for (std::size_t k = m; k <= order(); ++k) r.coeffs_[k] -= coeffs_[k - m];
    return r;
}

QSeries QSeries::over_one_minus_qpow(std::size_t m) const {
    if (m == 0) throw std::invalid_argument("over_one_minus_qpow: 1 - q^0 is not invertible");
    QSeries r(*this);
    for (std::size_t k = m; k <= order(); ++k) r.coeffs_[k] += r.coeffs_[k - m];
    return r;
}

QSeries QSeries::times_binomial_power(std::size_t m, const Integer &c) const {
    if (m == 0) throw std::invalid_argument("times_binomial_power: exponent must be positive");
    if (c == 0) return *this;
    if (c == 1) return times_one_minus_qpow(m);
    if (c == -1) return over_one_minus_qpow(m);

    // (1 - q^m)^c = sum_j C(c, j) (-1)^j q^{mj}
    const std::size_t terms = order() / m;
    std::vector<Integer> factor(terms + 1);
    factor[0] = 1;
    for (std::size_t j = 1; j <= terms; ++j) {
        factor[j] = factor[j - 1] * (c - static_cast<unsigned long>(j - 1));
        mpz_divexact_ui(factor[j].get_mpz_t(), factor[j].get_mpz_t(), j);
    }
    for (std::size_t j = 1; j <= terms; j += 2) factor[j] = -factor[j];

    QSeries r(order());
    for (std::size_t j = 0; j <= terms; ++j) {
        if (sgn(factor[j]) == 0) continue;
        const std::size_t shift = j * m;
        for (std::size_t k = shift; k <= order(); ++k) {
            mpz_addmul(r.coeffs_[k].get_mpz_t(), factor[j].get_mpz_t(),
                       coeffs_[k - shift].get_mpz_t());
        }
    }
    return r;
}

QSeries operator+(const QSeries &a, const QSeries &b) { return linear_combine(a, b, 1, 1); }

QSeries operator-(const QSeries &a, const QSeries &b) { return linear_combine(a, b, 1, -1); }

QSeries operator-(const QSeries &a) {
    QSeries r(a);
    for (auto &c : r.coeffs_) c = -c;
    return r;
}

QSeries operator*(const QSeries &a, const QSeries &b) { return mul(a, b); }

QSeries operator*(const Integer &c, const QSeries &a) {
    QSeries r(a);
    for (auto &x : r.coeffs_) x *= c;
    return r;
}

QSeries geometric(std::size_t m, std::size_t order) {
    if (m == 0) throw std::invalid_argument("geometric: 1 - q^0 = 0 is not invertible");
    return QSeries::one(order).over_one_minus_qpow(m);
}

QSeries linear_combine(const QSeries &a, const QSeries &b, const Integer &ca, const Integer &cb) {
    require_same_order(a, b, "linear_combine");
    std::vector<Integer> out(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) out[k] = ca * a[k] + cb * b[k];
    return QSeries(a.order(), std::move(out));
}

QSeries mul(const QSeries &a, const QSeries &b) {
    require_same_order(a, b, "mul");
    const std::size_t n = a.order();
    std::vector<Integer> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return QSeries(n, std::move(out));
}

QSeries invert(const QSeries &a) {
    const Integer &a0 = a[0];
    if (a0 != 1 && a0 != -1) {
        throw std::domain_error("invert: non-unit constant term " + a0.get_str());
    }
    const std::size_t n = a.order();
    std::vector<Integer> b(n + 1);
    b[0] = a0;
    Integer acc;
    for (std::size_t k = 1; k <= n; ++k) {
        acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (sgn(a[i]) != 0) mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
        }
        b[k] = -a0 * acc;
    }
    return QSeries(n, std::move(b));
}

const Integer &coefficient(const QSeries &a, std::size_t k) { return a.coefficient(k); }

std::string to_string(const QSeries &a) {
    std::string out;
    for (std::size_t k = 0; k <= a.order(); ++k) {
        if (sgn(a[k]) != 0) append_term(out, a[k], k);
    }
    return out.empty() ? "0" : out;
}

std::string to_compact_string(const QSeries &a, std::size_t terms) {
    std::string out;
    std::size_t printed = 0;
    for (std::size_t k = 0; k <= a.order(); ++k) {
        const Integer &c = a[k];
        if (sgn(c) == 0) continue;
        if (terms != 0 && printed == terms) {
            out += "+...";
            return out;
        }
        if (sgn(c) < 0) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        const Integer mag = abs(c);
        if (k == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str();
            out += "q";
            if (k > 1) out += "^" + std::to_string(k);
        }
        ++printed;
    }
    return out.empty() ? "0" : out;
}

nlohmann::json to_json(const QSeries &a) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &c : a.coeffs()) coeffs.push_back(c.get_str());
    return {{"order", a.order()}, {"coeffs", std::move(coeffs)}};
}

QSeries qseries_from_json(const nlohmann::json &j) {
    const auto order = j.at("order").get<std::size_t>();
    std::vector<Integer> coeffs;
    for (const auto &c : j.at("coeffs")) {
        coeffs.emplace_back(c.is_string() ? c.get<std::string>() : c.dump());
    }
    return QSeries(order, std::move(coeffs));
}

Integer binomial(const Integer &c, std::size_t j) {
    Integer r = 1;
    for (std::size_t i = 0; i < j; ++i) {
        r *= c - static_cast<unsigned long>(i);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i + 1);
    }
    return r;
}

}  // namespace rrkit
