#include "rrkit/prodmake.hpp"

#include <cstdint>
#include <stdexcept>

namespace rrkit {

ProductForm::ProductForm(Factors factors) {
    for (auto &[e, m] : factors) {
        if (e == 0) throw std::invalid_argument("ProductForm: exponent must be at least 1");
        if (sgn(m) != 0) factors_.emplace(e, std::move(m));
    }
}

ProductForm ProductForm::restricted(std::size_t max_exponent) const {
    Factors out(factors_.begin(), factors_.upper_bound(max_exponent));
    return ProductForm(std::move(out));
}

ProductForm ResiduePattern::to_product_form(std::size_t max_exponent) const {
    ProductForm::Factors f;
    for (std::size_t e = 1; e <= max_exponent; ++e) {
        if (contains(e)) f.emplace(e, multiplicity);
    }
    return ProductForm(std::move(f));
}

ResiduePattern rogers_ramanujan_pattern(std::size_t t) {
    if (t == 0) return {5, {1, 4}, Integer(-1)};
    if (t == 1) return {5, {2, 3}, Integer(-1)};
    throw std::invalid_argument("rogers_ramanujan_pattern: shift must be 0 or 1");
}

QSeries expand_product(const ProductForm &pf, std::size_t order) {
    QSeries s = QSeries::one(order);
    for (const auto &[e, m] : pf.factors()) {
        if (e > order) break;
        s = s.times_binomial_power(e, m);
    }
    return s;
}

std::optional<StripStep> strip_step(const QSeries &s) {
    if (s[0] != 1) {
        throw std::domain_error("strip_step: constant term must be 1, got " + s[0].get_str());
    }
    const std::size_t e = s.lowest_nonzero(1);
    if (e > s.order()) return std::nullopt;
    Integer c = s[e];
    QSeries residual = s.times_binomial_power(e, c);
    return StripStep{e, std::move(c), std::move(residual)};
}

std::vector<StripStep> strip_trace(const QSeries &s) {
    std::vector<StripStep> steps;
    const QSeries *current = &s;
    while (auto step = strip_step(*current)) {
        steps.push_back(std::move(*step));
        current = &steps.back().residual;
    }
    return steps;
}

ProductForm conjecture_product(const QSeries &s) {
    ProductForm::Factors f;
    QSeries current = s;
    while (auto step = strip_step(current)) {
        f.emplace(step->exponent, -step->coefficient);
        current = std::move(step->residual);
    }
    return ProductForm(std::move(f));
}

std::optional<ResiduePattern> detect_progressions(const ProductForm &pf, std::size_t max_modulus) {
    if (pf.empty()) return std::nullopt;
    const Integer &multiplicity = pf.factors().begin()->second;
    for (const auto &[e, m] : pf.factors()) {
        if (m != multiplicity) return std::nullopt;
    }
    const std::size_t largest = pf.factors().rbegin()->first;

    for (std::size_t modulus = 1; modulus <= max_modulus; ++modulus) {
        std::map<std::size_t, std::size_t> seen;
        for (const auto &[e, m] : pf.factors()) ++seen[e % modulus];

        bool fits = true;
        for (const auto &[r, count] : seen) {
            if (count < 2) {
                fits = false;
                break;
            }
        }
        for (std::size_t e = 1; fits && e <= largest; ++e) {
            const bool in_class = seen.count(e % modulus) != 0;
            if (in_class != (pf.factors().count(e) != 0)) fits = false;
        }
        if (!fits) continue;

        ResiduePattern p{modulus, {}, multiplicity};
        for (const auto &[r, count] : seen) p.residues.insert(r);
        return p;
    }
    return std::nullopt;
}

namespace {

std::string progression_factor(std::size_t modulus, std::size_t residue) {
    const std::size_t first = residue == 0 ? modulus : residue;
    std::string out = "(1-q^(";
    if (modulus != 1) out += std::to_string(modulus);
    out += "m+" + std::to_string(first) + "))";
    return out;
}

}  // namespace

std::string to_string(const ResiduePattern &p) {
    std::string factors;
    for (std::size_t r : p.residues) factors += progression_factor(p.modulus, r);
    if (p.multiplicity == -1) return p.residues.size() == 1 ? "1/" + factors : "1/(" + factors + ")";
    if (p.multiplicity == 1) return factors;
    return "(" + factors + ")^" + p.multiplicity.get_str();
}

std::string to_string(const ProductForm &pf) {
    if (pf.empty()) return "1";
    std::string out;
    for (const auto &[e, m] : pf.factors()) {
        if (!out.empty()) out += " ";
        out += e == 1 ? "(1-q)" : "(1-q^" + std::to_string(e) + ")";
        if (m != 1) out += "^" + m.get_str();
    }
    return out;
}

nlohmann::json integer_json(const Integer &v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

nlohmann::json to_json(const ProductForm &pf) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto &[e, m] : pf.factors()) factors.push_back({{"e", e}, {"m", integer_json(m)}});
    return {{"factors", std::move(factors)}};
}

ProductForm product_form_from_json(const nlohmann::json &j) {
    ProductForm::Factors f;
    for (const auto &entry : j.at("factors")) {
        const auto &m = entry.at("m");
        Integer mult(m.is_string() ? m.get<std::string>() : m.dump());
        f[entry.at("e").get<std::size_t>()] += mult;
    }
    return ProductForm(std::move(f));
}

nlohmann::json to_json(const ResiduePattern &p) {
    return {{"modulus", p.modulus},
            {"residues", std::vector<std::size_t>(p.residues.begin(), p.residues.end())},
            {"multiplicity", integer_json(p.multiplicity)}};
}

}  // namespace rrkit
