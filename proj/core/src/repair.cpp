#include "dodgson/repair.hpp"

#include <array>
#include <set>

#include "dodgson/errors.hpp"
#include "dodgson/oracle.hpp"

namespace dodgson {

namespace {

constexpr std::array<std::pair<Strategy, std::string_view>, 7> kStrategyNames{{
    {Strategy::Fail, "fail"},
    {Strategy::CyclicShift, "shift"},
    {Strategy::RowOpClear, "rowops"},
    {Strategy::PerturbOriginal, "perturb"},
    {Strategy::ReplaceEntry, "replace"},
    {Strategy::ReplaceZeros, "zeros"},
    {Strategy::IntermediateReplace, "intermediate-unsound"},
}};

constexpr std::array<std::pair<EditKind, std::string_view>, 3> kEditKindNames{{
    {EditKind::Perturb, "perturb"},
    {EditKind::Replace, "replace"},
    {EditKind::RowOp, "rowop"},
}};

void absorb(RepairPlan& plan, SymMatrix& work, Rewrite&& rw) {
    work = std::move(rw.matrix);
    plan.limit_point.merge(rw.bindings);
    plan.edits.insert(plan.edits.end(), std::make_move_iterator(rw.edits.begin()),
                      std::make_move_iterator(rw.edits.end()));
}

VarId next_after(VarId v) { return VarId{v.index + 1}; }

// One auto_repair invocation for the strategies that edit the original matrix.
class RepairSession {
public:
    RepairSession(const SymMatrix& a, Strategy strategy, const RepairOptions& options)
        : strategy_(strategy),
          cap_(options.max_rounds.value_or(2 * a.size() * a.size())),
          engine_(options.engine),
          work_(a),
          fresh_(first_fresh_variable(a)) {
        plan_.strategy = strategy;
    }

    RepairOutcome run() {
        while (true) {
            try {
                RunResult result = dodgson::run(work_, plan_.limit_point, engine_);
                result.trace.repair = plan_;
                return RepairOutcome{std::move(result.value), plan_, std::move(result.trace)};
            } catch (const DivisorZero& z) {
                if (strategy_ == Strategy::Fail) throw;
                if (++plan_.rounds > cap_) {
                    throw RoundsExhausted("gave up after " + std::to_string(cap_) + " repair rounds; last: " + z.what());
                }
                repair(ZeroReport::from(z));
            }
        }
    }

private:
    void repair(const ZeroReport& zero) {
        const std::size_t n = work_.size();
        switch (strategy_) {
            case Strategy::RowOpClear:
                if (zero.level == n && row_ops_ < n && try_row_op(zero.position)) return;
                perturb_window(zero);
                return;
            case Strategy::ReplaceZeros:
                if (zero.level == n) {
                    Rewrite rw = replace_zeros_with_variables(work_, fresh_);
                    fresh_ = VarId{fresh_.index + static_cast<std::uint32_t>(rw.bindings.size())};
                    for (const auto& e : rw.edits) touched_.insert(e.position);
                    absorb(plan_, work_, std::move(rw));
                    return;
                }
                perturb_window(zero);
                return;
            case Strategy::ReplaceEntry:
                replace_in_window(zero);
                return;
            default:
                perturb_window(zero);
                return;
        }
    }

    // Adds row i+1 (or i-1) to row i so that the zero at (i,j) of the
    // original picks up a nonzero neighbour. Determinant preserving.
    bool try_row_op(Position p) {
        for (std::size_t r : {p.row + 1, p.row - 1}) {
            if (work_.at(Position{r, p.col}).is_zero()) continue;
            ++row_ops_;
            for (std::size_t c = 1; c <= work_.size(); ++c) {
                const Polynomial& addend = work_.at(Position{r, c});
                if (addend.is_zero()) continue;
                Edit e{EditKind::RowOp, work_.size(), Position{p.row, c}, work_.at(Position{p.row, c}), {}};
                e.after = e.before + addend;
                work_.at(e.position) = e.after;
                plan_.edits.push_back(std::move(e));
            }
            return true;
        }
        return false;
    }

    // Top-left first, then the rest of the diagonal, then off-diagonal
    // entries. Once every diagonal entry of the window carries its own
    // variable the window minor cannot vanish identically.
    void perturb_window(const ZeroReport& zero) {
        const Window w = trace_window(zero, work_.size());
        std::vector<Position> order;
        for (std::size_t t = 0; t < w.size; ++t) order.push_back(Position{w.row_start + t, w.col_start + t});
        for (std::size_t r = 0; r < w.size; ++r) {
            for (std::size_t c = 0; c < w.size; ++c) {
                if (r != c) order.push_back(Position{w.row_start + r, w.col_start + c});
            }
        }
        for (Position p : order) {
            if (touched_.contains(p)) continue;
            apply(perturb_entry(work_, p, fresh_), p);
            return;
        }
        throw StrategyInapplicable("every entry of the failing window already carries a variable");
    }

    void replace_in_window(const ZeroReport& zero) {
        const Window w = trace_window(zero, work_.size());
        for (std::size_t r = 0; r < w.size; ++r) {
            for (std::size_t c = 0; c < w.size; ++c) {
                const Position p{w.row_start + r, w.col_start + c};
                if (touched_.contains(p)) continue;
                const Polynomial& entry = work_.at(p);
                if (entry.is_constant() && !entry.is_zero()) {
                    apply(replace_entry_symbolic(work_, p, fresh_), p);
                } else {
                    apply(perturb_entry(work_, p, fresh_), p);
                }
                return;
            }
        }
        throw StrategyInapplicable("every entry of the failing window already carries a variable");
    }

    void apply(Rewrite&& rw, Position p) {
        touched_.insert(p);
        fresh_ = next_after(fresh_);
        absorb(plan_, work_, std::move(rw));
    }

    Strategy strategy_;
    std::size_t cap_;
    EngineOptions engine_;
    SymMatrix work_;
    VarId fresh_;
    RepairPlan plan_;
    std::set<Position> touched_;
    std::size_t row_ops_ = 0;
};

RepairOutcome repair_by_shifting(const SymMatrix& a, const RepairOptions& options) {
    const std::size_t n = a.size();
    const std::size_t cap = options.max_rounds.value_or(2 * n * n);
    RepairPlan plan;
    plan.strategy = Strategy::CyclicShift;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            auto [shifted, sign] = cyclic_shift(a, r, c);
            // Only the starting interior is inspected; deeper zeros cost a round.
            if (!find_interior_zeros(shifted).empty()) continue;
            try {
                RunResult result = run(shifted, {}, options.engine);
                plan.sign = sign;
                plan.row_shift = r;
                plan.col_shift = c;
                result.trace.repair = plan;
                Rational value = sign > 0 ? result.value : -result.value;
                return RepairOutcome{std::move(value), plan, std::move(result.trace)};
            } catch (const DivisorZero& z) {
                if (++plan.rounds > cap) {
                    throw RoundsExhausted("gave up after " + std::to_string(cap) + " shift attempts; last: " + z.what());
                }
            }
        }
    }
    throw StrategyInapplicable("no cyclic row/column shift avoids a zero divisor");
}

void replace_level_zeros(SymMatrix& level, VarId& fresh, RepairPlan& plan) {
    for (Position p : find_interior_zeros(level)) {
        Edit e{EditKind::Perturb, level.size(), p, level.at(p), Polynomial::variable(fresh)};
        level.at(p) = e.after;
        plan.limit_point.emplace(fresh, Rational(0));
        plan.edits.push_back(std::move(e));
        fresh = next_after(fresh);
    }
}

}  // namespace

std::string_view strategy_name(Strategy s) {
    for (const auto& [value, name] : kStrategyNames) {
        if (value == s) return name;
    }
    return "unknown";
}

Strategy strategy_from_name(std::string_view name) {
    for (const auto& [value, text] : kStrategyNames) {
        if (text == name) return value;
    }
    throw Error("unknown strategy '" + std::string(name) + "'");
}

std::string_view edit_kind_name(EditKind k) {
    for (const auto& [value, name] : kEditKindNames) {
        if (value == k) return name;
    }
    return "unknown";
}

EditKind edit_kind_from_name(std::string_view name) {
    for (const auto& [value, text] : kEditKindNames) {
        if (text == name) return value;
    }
    throw Error("unknown edit kind '" + std::string(name) + "'");
}

std::vector<Position> find_interior_zeros(const SymMatrix& m) {
    std::vector<Position> zeros;
    const std::size_t n = m.size();
    for (std::size_t r = 1; r + 1 < n; ++r) {
        for (std::size_t c = 1; c + 1 < n; ++c) {
            if (m(r, c).is_zero()) zeros.push_back(Position{r + 1, c + 1});
        }
    }
    return zeros;
}

Window trace_window(const ZeroReport& zero, std::size_t n) {
    const auto& [row, col] = zero.position;
    if (zero.level < 1 || zero.level > n || row < 1 || col < 1 || row > zero.level || col > zero.level) {
        throw Error("zero at (" + std::to_string(row) + "," + std::to_string(col) + ") of a " +
                    std::to_string(zero.level) + "x" + std::to_string(zero.level) + " level is inconsistent with n = " +
                    std::to_string(n));
    }
    return Window{row, col, n - zero.level + 1};
}

VarId first_fresh_variable(const SymMatrix& m) {
    const auto vars = m.variables();
    return vars.empty() ? VarId{0} : next_after(*vars.rbegin());
}

Rewrite perturb_entry(const SymMatrix& a, Position pos, VarId fresh) {
    Rewrite rw{a, {{fresh, Rational(0)}}, {}};
    Edit e{EditKind::Perturb, a.size(), pos, a.at(pos), {}};
    e.after = e.before + Polynomial::variable(fresh);
    rw.matrix.at(pos) = e.after;
    rw.edits.push_back(std::move(e));
    return rw;
}

Rewrite perturb_original(const SymMatrix& a, const Window& w, VarId fresh) {
    // Validates the window.
    (void)submatrix(a, w);
    return perturb_entry(a, Position{w.row_start, w.col_start}, fresh);
}

Rewrite replace_zeros_with_variables(const SymMatrix& a, VarId first) {
    Rewrite rw{a, {}, {}};
    RepairPlan scratch;
    replace_level_zeros(rw.matrix, first, scratch);
    rw.bindings = std::move(scratch.limit_point);
    rw.edits = std::move(scratch.edits);
    return rw;
}

Rewrite replace_entry_symbolic(const SymMatrix& a, Position pos, VarId fresh) {
    const Polynomial& entry = a.at(pos);
    if (entry.is_zero()) throw Error("entry is zero; replace zeros with perturbation variables instead");
    if (!entry.is_constant()) throw Error("entry '" + entry.to_string() + "' is already symbolic");
    Rewrite rw{a, {{fresh, entry.constant_value()}}, {}};
    Edit e{EditKind::Replace, a.size(), pos, entry, Polynomial::variable(fresh)};
    rw.matrix.at(pos) = e.after;
    rw.edits.push_back(std::move(e));
    return rw;
}

std::pair<SymMatrix, int> cyclic_shift(const SymMatrix& a, std::size_t row_shift, std::size_t col_shift) {
    const std::size_t n = a.size();
    row_shift %= n;
    col_shift %= n;
    SymMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out(r, c) = a((r + row_shift) % n, (c + col_shift) % n);
    }
    // An n-cycle has parity (-1)^(n-1).
    const bool odd = (n % 2 == 0) && ((row_shift + col_shift) % 2 == 1);
    return {std::move(out), odd ? -1 : 1};
}

RepairOutcome auto_repair(const SymMatrix& a, Strategy strategy, const RepairOptions& options) {
    if (!a.is_constant()) throw Error("auto_repair expects a matrix with constant entries");
    switch (strategy) {
        case Strategy::CyclicShift:
            return repair_by_shifting(a, options);
        case Strategy::IntermediateReplace: {
            IntermediateOutcome io = intermediate_replace_unsound(a);
            return RepairOutcome{std::move(io.value), std::move(io.plan), std::move(io.trace)};
        }
        default:
            return RepairSession(a, strategy, options).run();
    }
}

IntermediateOutcome intermediate_replace_unsound(const SymMatrix& a) {
    if (!a.is_constant()) throw Error("intermediate replacement expects a matrix with constant entries");
    RepairPlan plan;
    plan.strategy = Strategy::IntermediateReplace;
    VarId fresh{0};
    OpCounts counts;
    CondensationTrace trace;

    SymMatrix previous;
    SymMatrix current = a;
    replace_level_zeros(current, fresh, plan);
    if (!plan.edits.empty()) plan.rounds = 1;
    trace.levels.push_back(current);
    while (current.size() > 1) {
        SymMatrix next = condense_once(current, &counts);
        if (previous.size() != 0) next = divide_by_interior(next, previous, &counts);
        const std::size_t before = plan.edits.size();
        replace_level_zeros(next, fresh, plan);
        if (plan.edits.size() != before) ++plan.rounds;
        trace.levels.push_back(next);
        previous = std::move(current);
        current = std::move(next);
    }

    trace.final_polynomial = current(0, 0);
    trace.mult_count = counts.multiplications;
    trace.div_count = counts.divisions;
    trace.repair = plan;

    IntermediateOutcome out;
    out.value = trace.final_polynomial.evaluate(plan.limit_point);
    out.oracle = det_bareiss(a);
    out.sound = out.value == out.oracle;
    out.plan = std::move(plan);
    out.trace = std::move(trace);
    return out;
}

}  // namespace dodgson
