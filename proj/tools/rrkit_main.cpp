// Command-line front end: sum, product, verify, discover, cfrac, zeta.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrkit/commands.hpp"

namespace {

constexpr int kUsageError = 2;

struct Options {
    std::size_t order = 100;
    std::size_t modulus_max = 12;
    std::string format = "text";
    rrkit::Identity identity = rrkit::Identity::rr1;

    std::string target = "golden";
    std::size_t steps = 5;

    std::size_t modulus = 0;
    std::vector<std::size_t> residues;
    long multiplicity = -1;
};

// The identity's own mod-5 pattern, overridden by any explicit product flags.
rrkit::ResiduePattern pattern_of(const Options &opt) {
    rrkit::ResiduePattern p = rrkit::rogers_ramanujan_pattern(rrkit::shift_of(opt.identity));
    if (opt.modulus != 0) p.modulus = opt.modulus;
    if (!opt.residues.empty()) p.residues = {opt.residues.begin(), opt.residues.end()};
    for (std::size_t r : p.residues) {
        if (r >= p.modulus) throw std::invalid_argument("residues must be below the modulus");
    }
    p.multiplicity = opt.multiplicity;
    return p;
}

int emit(const rrkit::CommandResult &r, const Options &opt) {
    if (opt.format == "json") {
        std::cout << rrkit::to_json(r).dump(2) << "\n";
    } else {
        std::cout << rrkit::render_text(r);
    }
    return rrkit::exit_code(r);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact q-series toolkit for the Rogers-Ramanujan identities"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    const std::map<std::string, rrkit::Identity> identities{{"rr1", rrkit::Identity::rr1},
                                                            {"rr2", rrkit::Identity::rr2}};
    app.add_option("-N,--order", opt.order, "truncation order (zeta: index limit)")
        ->capture_default_str();
    app.add_option("--modulus-max", opt.modulus_max, "largest modulus tried by discover")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--identity", opt.identity, "rr1 (k^2) or rr2 (k^2+k)")
        ->transform(CLI::CheckedTransformer(identities, CLI::ignore_case));

    app.add_option("--modulus", opt.modulus, "product modulus (default: the identity's, 5)");
    app.add_option("--residues", opt.residues, "product residues (default: the identity's)")
        ->delimiter(',');
    app.add_option("--multiplicity", opt.multiplicity, "shared product multiplicity")
        ->capture_default_str();

    auto *sum = app.add_subcommand("sum", "expand a sum side");
    auto *product = app.add_subcommand("product", "expand a residue-class product");
    auto *verify = app.add_subcommand("verify", "compare sum and product sides");
    auto *discover = app.add_subcommand("discover", "conjecture a product by stripping");
    auto *cfrac = app.add_subcommand("cfrac", "continued fraction convergents");
    cfrac->add_option("--target", opt.target, "golden or rr")
        ->capture_default_str()
        ->check(CLI::IsMember({"golden", "rr"}));
    cfrac->add_option("--steps,-n", opt.steps, "number of convergents")->capture_default_str();
    auto *zeta = app.add_subcommand("zeta", "strip zeta(s) down to its Euler product");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*sum) return emit(rrkit::cmd_sum(opt.identity, opt.order), opt);
        if (*verify) return emit(rrkit::cmd_verify(opt.identity, pattern_of(opt), opt.order), opt);
        if (*discover) {
            if (opt.order < 1) throw std::invalid_argument("discover needs --order >= 1");
            return emit(rrkit::cmd_discover(opt.identity, opt.order, opt.modulus_max), opt);
        }
        if (*cfrac) {
            if (opt.steps < 1) throw std::invalid_argument("cfrac needs --steps >= 1");
            return emit(opt.target == "golden" ? rrkit::cmd_cfrac_golden(opt.steps)
                                               : rrkit::cmd_cfrac_rr(opt.steps, opt.order),
                        opt);
        }
        if (*zeta) {
            if (opt.order < 1) throw std::invalid_argument("zeta needs --order >= 1");
            return emit(rrkit::cmd_zeta(opt.order), opt);
        }
        if (*product) return emit(rrkit::cmd_product(pattern_of(opt), opt.order), opt);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
