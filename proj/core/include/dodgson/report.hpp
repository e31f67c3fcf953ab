#ifndef DODGSON_REPORT_HPP
#define DODGSON_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dodgson/condensation.hpp"
#include "dodgson/repair.hpp"

namespace dodgson {

/// Machine-readable summary of one determinant computation.
struct Report {
    std::string input_digest;
    std::size_t n = 0;
    Strategy strategy = Strategy::PerturbOriginal;
    Rational determinant;
    /// Present when the Bareiss oracle ran.
    std::optional<Rational> oracle_determinant;
    std::optional<bool> match;
    std::uint64_t mult_count = 0;
    std::uint64_t div_count = 0;
    std::uint64_t predicted_mult_count = 0;
    RepairPlan repair;
    Polynomial final_polynomial;
    std::optional<std::vector<SymMatrix>> levels;

    friend bool operator==(const Report&, const Report&) = default;
};

/// FNV-1a 64 of the matrix CSV form, as 16 hex digits.
std::string matrix_digest(const SymMatrix& m);

/// `verify` runs the Bareiss oracle and fills oracle_determinant/match.
Report make_report(const SymMatrix& input, Strategy strategy, const RepairOutcome& outcome, bool verify,
                   bool include_levels);

std::string report_to_json(const Report& r, int indent = 2);
/// Throws ParseError on malformed input.
Report report_from_json(std::string_view text);

std::string repair_plan_to_json(const RepairPlan& plan);
RepairPlan repair_plan_from_json(std::string_view text);

std::string trace_to_json(const CondensationTrace& trace);
CondensationTrace trace_from_json(std::string_view text);

}  // namespace dodgson

#endif  // DODGSON_REPORT_HPP
