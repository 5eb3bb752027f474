#include "rrkit/zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrkit {

namespace {

void require_same_qorder(const ZPolynomial &a, const ZPolynomial &b, const char *op) {
    if (a.qorder() != b.qorder()) {
        throw std::invalid_argument(std::string(op) + ": mismatched q-orders " +
                                    std::to_string(a.qorder()) + " and " +
                                    std::to_string(b.qorder()));
    }
}

}  // namespace

ZPolynomial::ZPolynomial(std::size_t qorder) : qorder_(qorder) {}

ZPolynomial::ZPolynomial(std::size_t qorder, std::vector<QSeries> zcoeffs)
    : qorder_(qorder), zcoeffs_(std::move(zcoeffs)) {
    for (const auto &c : zcoeffs_) {
        if (c.order() != qorder_) {
            throw std::invalid_argument("ZPolynomial: coefficient of order " +
                                        std::to_string(c.order()) + " in polynomial of q-order " +
                                        std::to_string(qorder_));
        }
    }
    trim();
}

ZPolynomial ZPolynomial::constant(const QSeries &c) { return ZPolynomial(c.order(), {c}); }

ZPolynomial ZPolynomial::one(std::size_t qorder) { return constant(QSeries::one(qorder)); }

ZPolynomial ZPolynomial::from_terms(std::size_t qorder, std::initializer_list<ZQTerm> terms) {
    std::size_t degree = 0;
    for (const auto &t : terms) degree = std::max(degree, t.zdeg);
    std::vector<std::vector<Integer>> raw(degree + 1, std::vector<Integer>(qorder + 1));
    for (const auto &t : terms) {
        if (t.qdeg <= qorder) raw[t.zdeg][t.qdeg] += t.coeff;
    }
    std::vector<QSeries> zcoeffs;
    zcoeffs.reserve(raw.size());
    for (auto &r : raw) zcoeffs.emplace_back(qorder, std::move(r));
    return ZPolynomial(qorder, std::move(zcoeffs));
}

QSeries ZPolynomial::coeff(std::size_t d) const {
    return d < zcoeffs_.size() ? zcoeffs_[d] : QSeries(qorder_);
}

ZPolynomial ZPolynomial::restricted(std::size_t max_zdeg, std::size_t max_qorder) const {
    const std::size_t q = std::min(max_qorder, qorder_);
    std::vector<QSeries> out;
    for (std::size_t d = 0; d < zcoeffs_.size() && d <= max_zdeg; ++d) {
        out.push_back(zcoeffs_[d].truncated(q));
    }
    return ZPolynomial(q, std::move(out));
}

void ZPolynomial::trim() {
    while (!zcoeffs_.empty() && zcoeffs_.back().is_zero()) zcoeffs_.pop_back();
}

ZPolynomial subst_zq(const ZPolynomial &p, std::size_t j) {
    if (j == 0) return p;
    std::vector<QSeries> out;
    out.reserve(p.size());
    for (std::size_t d = 0; d < p.size(); ++d) out.push_back(p.zcoeffs()[d].shifted(j * d));
    return ZPolynomial(p.qorder(), std::move(out));
}

ZPolynomial zadd(const ZPolynomial &a, const ZPolynomial &b) {
    require_same_qorder(a, b, "zadd");
    std::vector<QSeries> out;
    const std::size_t n = std::max(a.size(), b.size());
    out.reserve(n);
    for (std::size_t d = 0; d < n; ++d) out.push_back(a.coeff(d) + b.coeff(d));
    return ZPolynomial(a.qorder(), std::move(out));
}

ZPolynomial zsub(const ZPolynomial &a, const ZPolynomial &b) {
    require_same_qorder(a, b, "zsub");
    std::vector<QSeries> out;
    const std::size_t n = std::max(a.size(), b.size());
    out.reserve(n);
    for (std::size_t d = 0; d < n; ++d) out.push_back(a.coeff(d) - b.coeff(d));
    return ZPolynomial(a.qorder(), std::move(out));
}

ZPolynomial zmul(const ZPolynomial &a, const ZPolynomial &b) {
    require_same_qorder(a, b, "zmul");
    if (a.is_zero() || b.is_zero()) return ZPolynomial(a.qorder());
    std::vector<QSeries> out(a.size() + b.size() - 1, QSeries(a.qorder()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = out[i + j] + mul(a.zcoeffs()[i], b.zcoeffs()[j]);
        }
    }
    return ZPolynomial(a.qorder(), std::move(out));
}

ZPolynomial zshift(const ZPolynomial &a, std::size_t k, std::size_t m) {
    if (a.is_zero()) return a;
    std::vector<QSeries> out(k, QSeries(a.qorder()));
    for (const auto &c : a.zcoeffs()) out.push_back(c.shifted(m));
    return ZPolynomial(a.qorder(), std::move(out));
}

QSeries eval_z_at_qpow(const ZPolynomial &p, std::size_t t) {
    QSeries sum(p.qorder());
    for (std::size_t d = 0; d < p.size(); ++d) sum = sum + p.zcoeffs()[d].shifted(t * d);
    return sum;
}

std::string to_string(const ZPolynomial &p) {
    std::string out;
    for (std::size_t d = 0; d < p.size(); ++d) {
        const QSeries &c = p.zcoeffs()[d];
        for (std::size_t k = 0; k <= c.order(); ++k) {
            if (sgn(c[k]) == 0) continue;
            if (sgn(c[k]) < 0) {
                out += "-";
            } else if (!out.empty()) {
                out += "+";
            }
            const Integer mag = abs(c[k]);
            const bool bare = d == 0 && k == 0;
            if (mag != 1 || bare) out += mag.get_str();
            if (d > 0) out += d == 1 ? "z" : "z^" + std::to_string(d);
            if (k > 0) out += k == 1 ? "q" : "q^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

nlohmann::json to_json(const ZPolynomial &p) {
    nlohmann::json zc = nlohmann::json::array();
    for (const auto &c : p.zcoeffs()) zc.push_back(to_json(c));
    return {{"qorder", p.qorder()}, {"zcoeffs", std::move(zc)}};
}

}  // namespace rrkit
