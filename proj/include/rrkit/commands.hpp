#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rrkit/fps.hpp"
#include "rrkit/prodmake.hpp"

namespace rrkit {

enum class Status { ok, mismatch, error };
enum class Identity { rr1, rr2 };

/// Sum-side shift t for an identity (rr1 -> 0, rr2 -> 1).
std::size_t shift_of(Identity id);
std::string name_of(Identity id);
std::string name_of(Status s);

struct Mismatch {
    std::size_t index;
    Integer expected;  // left-hand (sum) side
    Integer actual;    // right-hand (product) side
};

/// Outcome of one CLI command. A mismatch always carries the first
/// disagreeing index with both coefficient values.
struct CommandResult {
    std::string command;
    std::size_t order = 0;
    /// Highest order through which agreement was confirmed; -1 for none.
    long verified_to = -1;
    nlohmann::json payload = nlohmann::json::object();
    Status status = Status::ok;
    std::optional<Mismatch> mismatch;
    /// Human-readable report, one entry per line.
    std::vector<std::string> lines;
};

/// 0 for ok, 1 for mismatch, 2 for error.
int exit_code(const CommandResult &r);
/// Keys are emitted in sorted order, so equal results serialize identically.
nlohmann::json to_json(const CommandResult &r);
std::string render_text(const CommandResult &r);

/// First index at which a and b differ, if any.
std::optional<Mismatch> first_mismatch(const QSeries &a, const QSeries &b);

/// Sum side against the mod-5 product side, coefficient by coefficient.
CommandResult cmd_verify(Identity id, std::size_t order);
/// Sum side against an arbitrary residue-pattern product.
CommandResult cmd_verify(Identity id, const ResiduePattern &pattern, std::size_t order);

/// Strip the sum side into a product and look for a residue pattern.
CommandResult cmd_discover(Identity id, std::size_t order, std::size_t max_modulus);

/// Convergent table w_1..w_n of the golden-mean fraction.
CommandResult cmd_cfrac_golden(std::size_t steps);

/// Convergents c_1..c_n of the Rogers-Ramanujan fraction and the order to
/// which c_n(1,q) agrees with H(1,q)/H(q,q).
CommandResult cmd_cfrac_rr(std::size_t steps, std::size_t order);

/// Primes recovered by stripping zeta(s) up to `limit`.
CommandResult cmd_zeta(std::size_t limit);

/// The sum side of an identity, symbolically and expanded.
CommandResult cmd_sum(Identity id, std::size_t order);

/// Expansion of a residue-pattern product.
CommandResult cmd_product(const ResiduePattern &pattern, std::size_t order);

}  // namespace rrkit
