#ifndef DODGSON_CONDENSATION_HPP
#define DODGSON_CONDENSATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dodgson/matrix.hpp"
#include "dodgson/repair_plan.hpp"

namespace dodgson {

struct OpCounts {
    std::uint64_t multiplications = 0;
    std::uint64_t divisions = 0;
};

struct EngineOptions {
    /// Keep every level in the trace; otherwise only the input and A^(1).
    bool record_levels = true;
    /// Worker threads used for the entries of one level. Levels are sequential.
    unsigned threads = 1;
};

struct CondensationTrace {
    /// A^(n), A^(n-1), ..., A^(1).
    std::vector<SymMatrix> levels;
    Polynomial final_polynomial;
    std::uint64_t mult_count = 0;
    std::uint64_t div_count = 0;
    std::optional<RepairPlan> repair;

    friend bool operator==(const CondensationTrace&, const CondensationTrace&) = default;
};

/// One condensation step: entry (i,j) is the 2x2 determinant
/// cur(i,j)*cur(i+1,j+1) - cur(i,j+1)*cur(i+1,j). Adds 2(n-1)^2
/// multiplications to `counts`.
SymMatrix condense_once(const SymMatrix& cur, OpCounts* counts = nullptr, unsigned threads = 1);

/// Entrywise exact division of the k x k `raw` by interior(prev_prev).
/// Throws DivisorZero (in prev_prev coordinates) before dividing anything
/// when the interior holds an identically zero entry.
SymMatrix divide_by_interior(const SymMatrix& raw, const SymMatrix& prev_prev, OpCounts* counts = nullptr,
                             unsigned threads = 1);

/// Steps a matrix down to 1x1, one level per call to step().
class CondensationEngine {
public:
    explicit CondensationEngine(SymMatrix a, EngineOptions options = {});

    bool done() const { return current_.size() == 1; }
    /// Size of the most recently produced level.
    std::size_t level() const { return current_.size(); }
    const SymMatrix& current() const { return current_; }

    /// Produces the next level. Throws DivisorZero or InexactDivision; the
    /// engine is left unchanged on error.
    void step();
    void run_to_end();

    const CondensationTrace& trace() const { return trace_; }
    CondensationTrace take_trace() { return std::move(trace_); }

private:
    EngineOptions options_;
    SymMatrix previous_;
    SymMatrix current_;
    OpCounts counts_;
    CondensationTrace trace_;
};

struct RunResult {
    Rational value;
    CondensationTrace trace;
};

/// Condenses `a` to A^(1) and evaluates it at `limit_point`. Throws
/// UnboundVariable before any work when a variable of `a` is not bound.
RunResult run(const SymMatrix& a, const Assignment& limit_point = {}, const EngineOptions& options = {});

/// 2 * sum_{m=1}^{n-1} m^2 = (2n^3 - 3n^2 + n) / 3.
std::uint64_t predicted_mult_count(std::size_t n);

/// Checks that level A^(n-k) equals the matrix of contiguous (k+1)-minors of
/// `a`. Throws Error when the level cannot be reached without repair.
bool verify_theorem22(const SymMatrix& a, std::size_t k);
bool verify_theorem22(const SymMatrix& a, const CondensationTrace& trace, std::size_t k);

}  // namespace dodgson

#endif  // DODGSON_CONDENSATION_HPP
