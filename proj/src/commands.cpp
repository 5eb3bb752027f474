#include "rrkit/commands.hpp"

#include <iomanip>
#include <sstream>

#include "rrkit/cfrac.hpp"
#include "rrkit/dirichlet.hpp"
#include "rrkit/sumside.hpp"
#include "rrkit/zpoly.hpp"

namespace rrkit {

std::size_t shift_of(Identity id) { return id == Identity::rr1 ? 0 : 1; }

std::string name_of(Identity id) { return id == Identity::rr1 ? "rr1" : "rr2"; }

std::string name_of(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::mismatch: return "mismatch";
        case Status::error: return "error";
    }
    return "error";
}

int exit_code(const CommandResult &r) {
    switch (r.status) {
        case Status::ok: return 0;
        case Status::mismatch: return 1;
        case Status::error: return 2;
    }
    return 2;
}

nlohmann::json to_json(const CommandResult &r) {
    nlohmann::json j = {{"command", r.command},
                        {"order", r.order},
                        {"verified_to", r.verified_to},
                        {"payload", r.payload},
                        {"status", name_of(r.status)}};
    if (r.mismatch) {
        j["mismatch"] = {{"index", r.mismatch->index},
                         {"expected", r.mismatch->expected.get_str()},
                         {"actual", r.mismatch->actual.get_str()}};
    }
    return j;
}

std::string render_text(const CommandResult &r) {
    std::string out;
    for (const auto &line : r.lines) out += line + "\n";
    if (r.mismatch) {
        out += "MISMATCH at q^" + std::to_string(r.mismatch->index) + ": sum side " +
               r.mismatch->expected.get_str() + ", product side " +
               r.mismatch->actual.get_str() + "\n";
    }
    return out;
}

std::optional<Mismatch> first_mismatch(const QSeries &a, const QSeries &b) {
    const long agree = agreement_order(a, b);
    const auto k = static_cast<std::size_t>(agree + 1);
    if (k > a.order()) return std::nullopt;
    return Mismatch{k, a[k], b[k]};
}

namespace {

std::string pochhammer_text(std::size_t k) {
    std::string out;
    for (std::size_t i = 1; i <= k; ++i) {
        out += i == 1 ? "(1-q)" : "(1-q^" + std::to_string(i) + ")";
    }
    return out;
}

// "1+q/(1-q)+q^4/((1-q)(1-q^2))+..." with the first `terms` summands.
std::string symbolic_sum(std::size_t t, std::size_t terms) {
    std::string out = "1";
    for (std::size_t k = 1; k < terms; ++k) {
        const std::size_t e = k * k + t * k;
        out += "+q";
        if (e > 1) out += "^" + std::to_string(e);
        out += "/";
        out += k == 1 ? pochhammer_text(k) : "(" + pochhammer_text(k) + ")";
    }
    return out + "+...";
}

std::string format_decimal(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(10) << v;
    return os.str();
}

}  // namespace

CommandResult cmd_verify(Identity id, std::size_t order) {
    return cmd_verify(id, rogers_ramanujan_pattern(shift_of(id)), order);
}

CommandResult cmd_verify(Identity id, const ResiduePattern &pattern, std::size_t order) {
    const std::size_t t = shift_of(id);
    const QSeries sum = rr_sum(t, order);
    const QSeries product = expand_product(pattern.to_product_form(order), order);

    CommandResult r;
    r.command = "verify";
    r.order = order;
    r.verified_to = agreement_order(sum, product);
    r.mismatch = first_mismatch(sum, product);
    r.status = r.mismatch ? Status::mismatch : Status::ok;
    r.payload = {{"identity", name_of(id)},
                 {"pattern", to_json(pattern)},
                 {"sum", to_json(sum)},
                 {"product", to_json(product)}};
    r.lines.push_back(name_of(id) + ": " + symbolic_sum(t, 4) + " = prod_{m>=0} " +
                      to_string(pattern));
    r.lines.push_back("sum side     = " + to_compact_string(sum, 12));
    r.lines.push_back("product side = " + to_compact_string(product, 12));
    r.lines.push_back(r.mismatch ? "status: mismatch"
                                 : "status: ok, all " + std::to_string(order + 1) +
                                       " coefficients through q^" + std::to_string(order) +
                                       " agree");
    return r;
}

CommandResult cmd_discover(Identity id, std::size_t order, std::size_t max_modulus) {
    const std::size_t t = shift_of(id);
    const QSeries sum = rr_sum(t, order);
    const ProductForm pf = conjecture_product(sum);
    const auto pattern = detect_progressions(pf, max_modulus);

    CommandResult r;
    r.command = "discover";
    r.order = order;
    r.payload = {{"identity", name_of(id)},
                 {"product", to_json(pf)},
                 {"pattern", pattern ? to_json(*pattern) : nlohmann::json(nullptr)}};

    std::string exps;
    for (const auto &[e, m] : pf.factors()) exps += (exps.empty() ? "" : ", ") + std::to_string(e);
    r.lines.push_back("stripped exponents: " + (exps.empty() ? std::string("(none)") : exps));
    r.lines.push_back("product form: " + to_string(pf));

    if (!pattern) {
        // The stripped product reproduces the series by construction.
        r.verified_to = agreement_order(sum, expand_product(pf, order));
        r.status = r.verified_to == static_cast<long>(order) ? Status::ok : Status::mismatch;
        r.lines.push_back("no residue pattern with modulus <= " + std::to_string(max_modulus));
    } else {
        const QSeries product = expand_product(pattern->to_product_form(order), order);
        r.verified_to = agreement_order(sum, product);
        r.mismatch = first_mismatch(sum, product);
        r.status = r.mismatch ? Status::mismatch : Status::ok;
        r.lines.push_back("conjecture: " + symbolic_sum(t, 4) + " = prod_{m>=0} " +
                          to_string(*pattern));
        r.lines.push_back("conjecture checked through q^" + std::to_string(r.verified_to) +
                          " (not a proof)");
    }
    r.payload["verified_to"] = r.verified_to;
    return r;
}

CommandResult cmd_cfrac_golden(std::size_t steps) {
    CommandResult r;
    r.command = "cfrac";
    nlohmann::json rows = nlohmann::json::array();
    r.lines.push_back("n\tnumerator\tdenominator\tvalue");
    for (std::size_t n = 1; n <= steps; ++n) {
        const BigRational w = golden_convergent(n);
        const std::string value = format_decimal(w.to_double());
        rows.push_back({{"n", n},
                        {"numerator", w.numerator().get_str()},
                        {"denominator", w.denominator().get_str()},
                        {"value", value}});
        r.lines.push_back(std::to_string(n) + "\t" + w.numerator().get_str() + "\t" +
                          w.denominator().get_str() + "\t" + value);
    }
    r.payload = {{"target", "golden"}, {"convergents", std::move(rows)}};
    if (steps > 0) {
        const double err = golden_error(steps);
        std::ostringstream os;
        os << std::scientific << std::setprecision(3) << err;
        r.payload["golden_error"] = os.str();
        r.lines.push_back("|w_" + std::to_string(steps) + " - golden mean| = " + os.str());
    }
    return r;
}

CommandResult cmd_cfrac_rr(std::size_t steps, std::size_t order) {
    CommandResult r;
    r.command = "cfrac";
    r.order = order;
    const auto h = rr_numerators(steps, order);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t n = 1; n <= steps; ++n) {
        const ZPolynomial denominator = subst_zq(h[n - 1], 1);
        rows.push_back({{"n", n},
                        {"numerator", to_string(h[n])},
                        {"denominator", to_string(denominator)}});
        r.lines.push_back("c_" + std::to_string(n) + "(z,q) = (" + to_string(h[n]) + ") / (" +
                          to_string(denominator) + ")");
    }
    r.payload = {{"target", "rr"}, {"convergents", std::move(rows)}};
    if (steps > 0) {
        const QSeries approx = convergent_series(rr_convergent(steps, order));
        const QSeries exact = cfrac_series(order);
        r.verified_to = agreement_order(approx, exact);
        r.payload["series"] = to_json(exact);
        r.payload["agreement_order"] = r.verified_to;
        r.lines.push_back("c(1,q) = H(1,q)/H(q,q) = " + to_compact_string(exact, 12));
        r.lines.push_back("c_" + std::to_string(steps) + "(1,q) agrees with c(1,q) through q^" +
                          std::to_string(r.verified_to));
    }
    return r;
}

CommandResult cmd_zeta(std::size_t limit) {
    const EulerStrip strip = euler_strip_trace(limit);
    CommandResult r;
    r.command = "zeta";
    r.order = limit;
    const bool complete = strip.residual == DirichletSeries::identity(limit);
    r.status = complete ? Status::ok : Status::mismatch;
    r.verified_to = complete ? static_cast<long>(limit) : -1;
    r.payload = {{"indices", strip.indices}};
    std::string set;
    for (std::size_t p : strip.indices) set += (set.empty() ? "" : ",") + std::to_string(p);
    r.lines.push_back("zeta(s) = prod over p in {" + set + "} of 1/(1 - p^(-s))");
    r.lines.push_back("checked for n <= " + std::to_string(limit));
    return r;
}

CommandResult cmd_sum(Identity id, std::size_t order) {
    const std::size_t t = shift_of(id);
    const QSeries sum = rr_sum(t, order);
    CommandResult r;
    r.command = "sum";
    r.order = order;
    r.verified_to = static_cast<long>(order);
    r.payload = {{"identity", name_of(id)}, {"series", to_json(sum)}};
    r.lines.push_back(symbolic_sum(t, 5));
    r.lines.push_back("= " + to_compact_string(sum) + " + O(q^" + std::to_string(order + 1) + ")");
    return r;
}

CommandResult cmd_product(const ResiduePattern &pattern, std::size_t order) {
    const QSeries product = expand_product(pattern.to_product_form(order), order);
    CommandResult r;
    r.command = "product";
    r.order = order;
    r.verified_to = static_cast<long>(order);
    r.payload = {{"pattern", to_json(pattern)}, {"series", to_json(product)}};
    r.lines.push_back("prod_{m>=0} " + to_string(pattern));
    r.lines.push_back("= " + to_compact_string(product) + " + O(q^" + std::to_string(order + 1) +
                      ")");
    return r;
}

}  // namespace rrkit
