#ifndef DODGSON_REPAIR_HPP
#define DODGSON_REPAIR_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dodgson/condensation.hpp"
#include "dodgson/errors.hpp"
#include "dodgson/repair_plan.hpp"

namespace dodgson {

/// Where condensation hit an identically zero divisor.
struct ZeroReport {
    /// Size of the level holding the zero.
    std::size_t level = 0;
    /// 1-based, inside that level.
    Position position;

    static ZeroReport from(const DivisorZero& z) { return ZeroReport{z.level(), Position{z.row(), z.col()}}; }
};

/// A matrix edit together with the bindings of the variables it introduced.
struct Rewrite {
    SymMatrix matrix;
    Assignment bindings;
    std::vector<Edit> edits;
};

/// Identically zero interior entries of `m`, 1-based, row-major. Empty when
/// the matrix has no interior (n < 3).
std::vector<Position> find_interior_zeros(const SymMatrix& m);

/// Window of the original n x n matrix whose contiguous minor became the
/// zero entry. A zero in the original matrix itself maps to a 1x1 window.
Window trace_window(const ZeroReport& zero, std::size_t n);

/// First unused variable index after every variable already in `m`.
VarId first_fresh_variable(const SymMatrix& m);

/// entry(pos) += fresh, fresh -> 0.
Rewrite perturb_entry(const SymMatrix& a, Position pos, VarId fresh);

/// Perturbs the top-left entry of `w`.
Rewrite perturb_original(const SymMatrix& a, const Window& w, VarId fresh);

/// Every identically zero interior entry becomes a fresh variable, in
/// reading order starting at `first`, all bound to 0.
Rewrite replace_zeros_with_variables(const SymMatrix& a, VarId first);

/// Replaces a nonzero constant entry by `fresh`, bound to the old value.
/// Throws Error when the entry is zero or already symbolic.
Rewrite replace_entry_symbolic(const SymMatrix& a, Position pos, VarId fresh);

/// Rotates rows up by `row_shift` and columns left by `col_shift` (both mod
/// n). Returns the shifted matrix and the sign s with
/// det(shifted) = s * det(a).
std::pair<SymMatrix, int> cyclic_shift(const SymMatrix& a, std::size_t row_shift, std::size_t col_shift);

struct RepairOptions {
    /// Repair rounds allowed; defaults to 2n^2.
    std::optional<std::size_t> max_rounds;
    EngineOptions engine;
};

struct RepairOutcome {
    Rational value;
    RepairPlan plan;
    CondensationTrace trace;
};

/// Runs condensation and repairs every zero divisor with `strategy`,
/// restarting from the edited original matrix each round. The returned
/// trace is the final, successful run (with the plan attached).
///
/// Throws RoundsExhausted when the cap is hit, StrategyInapplicable when
/// the strategy has nothing left to try, and DivisorZero for Strategy::Fail.
RepairOutcome auto_repair(const SymMatrix& a, Strategy strategy, const RepairOptions& options = {});

struct IntermediateOutcome {
    Rational value;
    /// value == det_bareiss(a)
    bool sound = false;
    Rational oracle;
    RepairPlan plan;
    CondensationTrace trace;
};

/// Experiment: replaces zeros in the interior of each condensation level as
/// it is produced, instead of perturbing the original matrix. The value is
/// generally wrong; `sound` reports whether it matched the oracle.
/// InexactDivision propagates.
IntermediateOutcome intermediate_replace_unsound(const SymMatrix& a);

}  // namespace dodgson

#endif  // DODGSON_REPAIR_HPP
