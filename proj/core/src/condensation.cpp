#include "dodgson/condensation.hpp"

#include <algorithm>
#include <future>
#include <utility>

#include "dodgson/errors.hpp"
#include "dodgson/oracle.hpp"

namespace dodgson {

namespace {

// Runs fn(row) for every row, striding rows over up to `threads` tasks.
// Exceptions from any task propagate to the caller.
template <typename Fn>
void for_each_row(std::size_t rows, unsigned threads, Fn&& fn) {
    const auto workers = static_cast<std::size_t>(std::min<std::size_t>(std::max(threads, 1u), rows));
    if (workers <= 1) {
        for (std::size_t r = 0; r < rows; ++r) fn(r);
        return;
    }
    std::vector<std::future<void>> tasks;
    tasks.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t r = w; r < rows; r += workers) fn(r);
        }));
    }
    for (auto& t : tasks) t.get();
}

void check_divisors(const SymMatrix& prev_prev) {
    const std::size_t n = prev_prev.size();
    for (std::size_t r = 1; r + 1 < n; ++r) {
        for (std::size_t c = 1; c + 1 < n; ++c) {
            if (prev_prev(r, c).is_zero()) throw DivisorZero(n, r + 1, c + 1);
        }
    }
}

}  // namespace

SymMatrix condense_once(const SymMatrix& cur, OpCounts* counts, unsigned threads) {
    const std::size_t n = cur.size();
    if (n < 2) throw DimensionError("condensation needs n >= 2, got " + std::to_string(n));
    SymMatrix out(n - 1);
    for_each_row(n - 1, threads, [&](std::size_t i) {
        for (std::size_t j = 0; j + 1 < n; ++j) {
            out(i, j) = cur(i, j) * cur(i + 1, j + 1) - cur(i, j + 1) * cur(i + 1, j);
        }
    });
    if (counts) counts->multiplications += 2 * static_cast<std::uint64_t>(n - 1) * (n - 1);
    return out;
}

SymMatrix divide_by_interior(const SymMatrix& raw, const SymMatrix& prev_prev, OpCounts* counts, unsigned threads) {
    const std::size_t k = raw.size();
    if (prev_prev.size() != k + 2) {
        throw DimensionError("divisor level must be " + std::to_string(k + 2) + "x" + std::to_string(k + 2) + ", got " +
                             std::to_string(prev_prev.size()));
    }
    check_divisors(prev_prev);
    SymMatrix out(k);
    for_each_row(k, threads, [&](std::size_t i) {
        for (std::size_t j = 0; j < k; ++j) out(i, j) = raw(i, j).exact_div(prev_prev(i + 1, j + 1));
    });
    if (counts) counts->divisions += static_cast<std::uint64_t>(k) * k;
    return out;
}

CondensationEngine::CondensationEngine(SymMatrix a, EngineOptions options)
    : options_(options), current_(std::move(a)) {
    if (current_.size() == 0) throw DimensionError("empty matrix");
    trace_.levels.push_back(current_);
    if (done()) trace_.final_polynomial = current_(0, 0);
}

void CondensationEngine::step() {
    if (done()) throw Error("condensation already reached A^(1)");
    OpCounts counts = counts_;
    SymMatrix next;
    if (previous_.size() == 0) {
        next = condense_once(current_, &counts, options_.threads);
    } else {
        // Fail on a zero divisor before spending the condensation work.
        check_divisors(previous_);
        next = divide_by_interior(condense_once(current_, &counts, options_.threads), previous_, &counts, options_.threads);
    }

    counts_ = counts;
    previous_ = std::move(current_);
    current_ = std::move(next);
    trace_.mult_count = counts_.multiplications;
    trace_.div_count = counts_.divisions;
    if (options_.record_levels || done()) trace_.levels.push_back(current_);
    if (done()) trace_.final_polynomial = current_(0, 0);
}

void CondensationEngine::run_to_end() {
    while (!done()) step();
}

RunResult run(const SymMatrix& a, const Assignment& limit_point, const EngineOptions& options) {
    for (VarId v : a.variables()) {
        if (!limit_point.contains(v)) throw UnboundVariable(v.index);
    }
    CondensationEngine engine(a, options);
    engine.run_to_end();
    CondensationTrace trace = engine.take_trace();
    Rational value = trace.final_polynomial.evaluate(limit_point);
    return RunResult{std::move(value), std::move(trace)};
}

std::uint64_t predicted_mult_count(std::size_t n) {
    if (n == 0) throw DimensionError("dimension must be at least 1");
    const auto m = static_cast<std::uint64_t>(n);
    return (2 * m * m * m - 3 * m * m + m) / 3;
}

bool verify_theorem22(const SymMatrix& a, const CondensationTrace& trace, std::size_t k) {
    const std::size_t n = a.size();
    if (k < 1 || k >= n) throw DimensionError("k = " + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
    if (trace.levels.size() <= k || trace.levels[k].size() != n - k) {
        throw Error("level A^(" + std::to_string(n - k) + ") is not in the trace");
    }
    return trace.levels[k] == all_minors_level(a, k);
}

bool verify_theorem22(const SymMatrix& a, std::size_t k) {
    if (k < 1 || k >= a.size()) throw DimensionError("k = " + std::to_string(k) + " outside 1.." + std::to_string(a.size() - 1));
    CondensationEngine engine(a);
    try {
        while (engine.trace().levels.size() <= k && !engine.done()) engine.step();
    } catch (const DivisorZero& z) {
        throw Error(std::string("level A^(") + std::to_string(a.size() - k) + ") unreachable without repair: " + z.what());
    }
    return verify_theorem22(a, engine.trace(), k);
}

}  // namespace dodgson
