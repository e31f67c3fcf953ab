#ifndef DODGSON_REPAIR_PLAN_HPP
#define DODGSON_REPAIR_PLAN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dodgson/matrix.hpp"

namespace dodgson {

enum class Strategy {
    Fail,
    CyclicShift,
    RowOpClear,
    PerturbOriginal,
    ReplaceEntry,
    ReplaceZeros,
    IntermediateReplace,
};

/// CLI spelling: fail, shift, rowops, perturb, replace, zeros, intermediate-unsound.
std::string_view strategy_name(Strategy s);
/// Throws Error on an unknown name.
Strategy strategy_from_name(std::string_view name);

enum class EditKind {
    Perturb,   // entry + fresh, fresh -> 0
    Replace,   // entry := fresh, fresh -> old value
    RowOp,     // row addition, determinant preserving
};

std::string_view edit_kind_name(EditKind k);
EditKind edit_kind_from_name(std::string_view name);

struct Edit {
    EditKind kind = EditKind::Perturb;
    /// Size of the matrix that was edited: n for the original matrix, smaller
    /// for an intermediate level.
    std::size_t level = 0;
    Position position;
    Polynomial before;
    Polynomial after;

    friend bool operator==(const Edit&, const Edit&) = default;
};

/// What a repair did to make condensation go through.
struct RepairPlan {
    Strategy strategy = Strategy::Fail;
    std::vector<Edit> edits;
    /// Parity correction for cyclic shifts; +1 otherwise.
    int sign = 1;
    /// Binds exactly the fresh variables introduced by `edits`.
    Assignment limit_point;
    /// Number of failed condensation runs that triggered a repair step.
    std::size_t rounds = 0;
    std::size_t row_shift = 0;
    std::size_t col_shift = 0;

    friend bool operator==(const RepairPlan&, const RepairPlan&) = default;
};

}  // namespace dodgson

#endif  // DODGSON_REPAIR_PLAN_HPP
