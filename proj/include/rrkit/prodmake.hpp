#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rrkit/fps.hpp"

namespace rrkit {

/// prod_e (1 - q^e)^{m_e} over finitely many exponents e >= 1. Zero
/// multiplicities are never stored.
class ProductForm {
public:
    using Factors = std::map<std::size_t, Integer>;

    ProductForm() = default;
    /// Throws std::invalid_argument on exponent 0; drops zero multiplicities.
    explicit ProductForm(Factors factors);

    const Factors &factors() const noexcept { return factors_; }
    bool empty() const noexcept { return factors_.empty(); }
    std::size_t size() const noexcept { return factors_.size(); }

    /// Factors with exponent <= max_exponent.
    ProductForm restricted(std::size_t max_exponent) const;

    friend bool operator==(const ProductForm &, const ProductForm &) = default;

private:
    Factors factors_;
};

/// Exponents e >= 1 with e mod modulus in residues, all sharing one multiplicity.
struct ResiduePattern {
    std::size_t modulus = 1;
    std::set<std::size_t> residues;
    Integer multiplicity;

    friend bool operator==(const ResiduePattern &, const ResiduePattern &) = default;

    bool contains(std::size_t e) const { return residues.count(e % modulus) != 0; }
    /// The finite product form this pattern describes for exponents 1..max_exponent.
    ProductForm to_product_form(std::size_t max_exponent) const;
};

/// prod_{m>=0} 1/((1-q^{5m+1})(1-q^{5m+4})) and the (2,3) mod 5 companion.
ResiduePattern rogers_ramanujan_pattern(std::size_t t);

/// Truncated expansion of the product; factors with e > order are skipped.
QSeries expand_product(const ProductForm &pf, std::size_t order);

struct StripStep {
    std::size_t exponent;
    Integer coefficient;
    QSeries residual;
};

/// One round of stripping: find the smallest e >= 1 with nonzero coefficient
/// c and return s * (1 - q^e)^c, whose coefficients vanish on 1..e.
/// Returns nullopt when s is already 1 through its order. Throws
/// std::domain_error when the constant term is not 1.
std::optional<StripStep> strip_step(const QSeries &s);

/// Every strip step until the residual is 1.
std::vector<StripStep> strip_trace(const QSeries &s);

/// Stripping loop result as a product form with m_e = -c_e, so that
/// expand_product(conjecture_product(s), s.order()) == s.
ProductForm conjecture_product(const QSeries &s);

/// Smallest modulus M <= max_modulus and residue set R such that the
/// exponents of pf are exactly the e in [1, max exponent] with e mod M in R.
/// All multiplicities must agree. Each residue class must be observed at
/// least twice, so a lone exponent never qualifies as a pattern.
std::optional<ResiduePattern> detect_progressions(const ProductForm &pf, std::size_t max_modulus);

/// "1/((1-q^(5m+1))(1-q^(5m+4)))" style rendering, m = 0, 1, 2, ...
std::string to_string(const ResiduePattern &p);
/// "(1-q)^-1 (1-q^4)^-1 ..." style rendering.
std::string to_string(const ProductForm &pf);

/// {"factors": [{"e": 1, "m": -1}, ...]} in increasing exponent order.
nlohmann::json to_json(const ProductForm &pf);
ProductForm product_form_from_json(const nlohmann::json &j);
/// {"modulus": 5, "residues": [1, 4], "multiplicity": -1}
nlohmann::json to_json(const ResiduePattern &p);

/// Integer as a JSON number when it fits in 64 bits, else a decimal string.
nlohmann::json integer_json(const Integer &v);

}  // namespace rrkit
