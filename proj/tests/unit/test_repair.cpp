#include <gtest/gtest.h>

#include "dodgson/errors.hpp"
#include "dodgson/oracle.hpp"
#include "dodgson/repair.hpp"
#include "generators.hpp"
#include "leibniz.hpp"
#include "fixtures.hpp"

namespace dodgson {
namespace {

using testing::corpus;
using testing::x;

const std::vector<Strategy> kSoundStrategies{Strategy::RowOpClear, Strategy::PerturbOriginal, Strategy::ReplaceEntry,
                                             Strategy::ReplaceZeros};

Assignment zeros(std::uint32_t count) {
    Assignment a;
    for (std::uint32_t v = 0; v < count; ++v) a[VarId{v}] = Rational(0);
    return a;
}

std::set<VarId> introduced_variables(const RepairPlan& plan) {
    std::set<VarId> vars;
    for (const auto& e : plan.edits) {
        for (VarId v : e.after.variables()) {
            if (!e.before.variables().contains(v)) vars.insert(v);
        }
    }
    return vars;
}

std::set<VarId> bound_variables(const RepairPlan& plan) {
    std::set<VarId> vars;
    for (const auto& [v, value] : plan.limit_point) vars.insert(v);
    return vars;
}

TEST(FindInteriorZeros, SingleZero) {
    EXPECT_EQ(find_interior_zeros(corpus("E1.1")), (std::vector<Position>{{2, 3}}));
}

TEST(FindInteriorZeros, ZeroBlock) {
    EXPECT_EQ(find_interior_zeros(corpus("E2.3")), (std::vector<Position>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}));
}

TEST(FindInteriorZeros, Identity) {
    const SymMatrix id = SymMatrix::from_literals({{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}});
    EXPECT_EQ(find_interior_zeros(id), (std::vector<Position>{{2, 3}, {3, 2}}));
}

TEST(FindInteriorZeros, NoInterior) { EXPECT_TRUE(find_interior_zeros(SymMatrix(2)).empty()); }

TEST(TraceWindow, FirstCondensationCentre) {
    EXPECT_EQ(trace_window(ZeroReport{3, {2, 2}}, 4), (Window{2, 2, 2}));
    EXPECT_TRUE(contiguous_minor(corpus("A1"), Window{2, 2, 2}).is_zero());
}

TEST(TraceWindow, TopLeftOfFirstCondensation) {
    for (std::size_t n = 3; n <= 8; ++n) EXPECT_EQ(trace_window(ZeroReport{n - 1, {1, 1}}, n), (Window{1, 1, 2}));
}

TEST(TraceWindow, OriginalEntryIsOneByOne) { EXPECT_EQ(trace_window(ZeroReport{4, {2, 3}}, 4), (Window{2, 3, 1})); }

TEST(TraceWindow, SecondCondensationOfFiveByFive) {
    EXPECT_EQ(trace_window(ZeroReport{3, {3, 3}}, 5), (Window{3, 3, 3}));

    // Build a 5x5 whose bottom-right 3x3 block is singular and check that the
    // engine's A^(3) has a zero exactly where the window says.
    testing::Rng rng(2024);
    for (int attempt = 0; attempt < 100; ++attempt) {
        SymMatrix a = testing::random_rational_matrix(rng, 5);
        for (std::size_t c = 2; c < 5; ++c) a(4, c) = a(2, c) + a(3, c);
        EXPECT_TRUE(testing::leibniz_det(submatrix(a, Window{3, 3, 3})).is_zero());
        try {
            const RunResult r = run(a);
            EXPECT_TRUE(r.trace.levels[2].at(Position{3, 3}).is_zero());
            return;
        } catch (const DivisorZero&) {
        }
    }
    FAIL() << "no instance reached A^(3)";
}

TEST(TraceWindow, InconsistentLevel) {
    EXPECT_THROW(trace_window(ZeroReport{5, {2, 2}}, 4), Error);
    EXPECT_THROW(trace_window(ZeroReport{0, {1, 1}}, 4), Error);
    EXPECT_THROW(trace_window(ZeroReport{3, {4, 1}}, 4), Error);
}

TEST(PerturbOriginal, TopLeftOfWindow) {
    const Rewrite rw = perturb_original(corpus("A4"), Window{2, 2, 2}, VarId{0});
    EXPECT_EQ(rw.matrix.at(Position{2, 2}), Polynomial(-1) + x(0));
    EXPECT_EQ(rw.bindings, zeros(1));
    ASSERT_EQ(rw.edits.size(), 1u);
    EXPECT_EQ(rw.edits[0].kind, EditKind::Perturb);
    EXPECT_EQ(rw.edits[0].before, Polynomial(-1));
}

TEST(PerturbOriginal, TopLeftRuleAgreesWithOracleInTheLimit) {
    const Rewrite rw = perturb_original(corpus("A1"), Window{2, 2, 2}, VarId{0});
    EXPECT_EQ(rw.matrix.at(Position{2, 2}), Polynomial(4) + x(0));
    const RunResult r = run(rw.matrix, rw.bindings);
    EXPECT_EQ(r.value, Rational(213));
    EXPECT_EQ(r.value, det_bareiss(corpus("A1")));
    // The polynomial differs from the one obtained by perturbing (3,3).
    EXPECT_NE(r.trace.final_polynomial, Polynomial(213) - Polynomial(55) * x(0));
}

TEST(PerturbOriginal, SymbolicEntryAccumulates) {
    SymMatrix a = corpus("A1");
    a.at(Position{1, 1}) = x(0);
    const Rewrite rw = perturb_original(a, Window{1, 1, 2}, VarId{1});
    EXPECT_EQ(rw.matrix.at(Position{1, 1}), x(0) + x(1));
    EXPECT_THROW(perturb_original(a, Window{4, 4, 2}, VarId{1}), DimensionError);
}

TEST(ReplaceZeros, FourParameters) {
    const Rewrite rw = replace_zeros_with_variables(corpus("E2.3"), VarId{0});
    SymMatrix expected = corpus("E2.3");
    expected(1, 1) = x(0);
    expected(1, 2) = x(1);
    expected(2, 1) = x(2);
    expected(2, 2) = x(3);
    EXPECT_EQ(rw.matrix, expected);
    EXPECT_EQ(rw.bindings, zeros(4));
    EXPECT_EQ(rw.edits.size(), 4u);
}

TEST(ReplaceZeros, NineParameters) {
    const Rewrite rw = replace_zeros_with_variables(testing::nine_zero_block(), VarId{0});
    EXPECT_EQ(rw.bindings.size(), 9u);
    EXPECT_EQ(rw.matrix.variables().size(), 9u);
    const RunResult r = run(rw.matrix, rw.bindings);
    EXPECT_EQ(r.value, det_bareiss(testing::nine_zero_block()));
}

TEST(ReplaceZeros, ZeroFreeInteriorUnchanged) {
    const Rewrite rw = replace_zeros_with_variables(corpus("A1"), VarId{0});
    EXPECT_EQ(rw.matrix, corpus("A1"));
    EXPECT_TRUE(rw.bindings.empty());
    EXPECT_TRUE(rw.edits.empty());
}

TEST(ReplaceEntry, ValueAsLimitPoint) {
    const Rewrite rw = replace_entry_symbolic(corpus("A1"), Position{3, 2}, VarId{0});
    EXPECT_EQ(rw.bindings, (Assignment{{VarId{0}, Rational(3)}}));
    const RunResult r = run(rw.matrix, rw.bindings);
    EXPECT_EQ(r.trace.final_polynomial, Polynomial(40) * x(0) + Polynomial(93));
    EXPECT_EQ(r.value, Rational(213));
}

TEST(ReplaceEntry, IdentityCornerBecomesVariable) {
    const SymMatrix id = SymMatrix::from_literals({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
    const Rewrite rw = replace_entry_symbolic(id, Position{1, 1}, VarId{0});
    const RunResult r = run(rw.matrix, rw.bindings);
    EXPECT_EQ(r.trace.final_polynomial, x(0));
    EXPECT_EQ(r.value, Rational(1));
}

TEST(ReplaceEntry, EveryWindowEntryOfA4) {
    const Rational oracle = det_bareiss(corpus("A4"));
    EXPECT_EQ(oracle, Rational(11331, 2));
    for (std::size_t r = 2; r <= 3; ++r) {
        for (std::size_t c = 2; c <= 3; ++c) {
            const Rewrite rw = replace_entry_symbolic(corpus("A4"), Position{r, c}, VarId{0});
            EXPECT_EQ(run(rw.matrix, rw.bindings).value, oracle) << r << "," << c;
        }
    }
}

TEST(ReplaceEntry, RejectsZeroAndSymbolic) {
    EXPECT_THROW(replace_entry_symbolic(corpus("E1.1"), Position{2, 3}, VarId{0}), Error);
    SymMatrix a = corpus("A1");
    a.at(Position{1, 1}) += x(0);
    EXPECT_THROW(replace_entry_symbolic(a, Position{1, 1}, VarId{1}), Error);
}

TEST(CyclicShift, Parity) {
    EXPECT_EQ(cyclic_shift(corpus("A1"), 1, 0).second, -1);
    EXPECT_EQ(cyclic_shift(corpus("S4-5x5"), 1, 0).second, 1);
    const auto [same, sign] = cyclic_shift(corpus("A1"), 0, 0);
    EXPECT_EQ(same, corpus("A1"));
    EXPECT_EQ(sign, 1);
    EXPECT_EQ(cyclic_shift(corpus("A1"), 5, 4).first, cyclic_shift(corpus("A1"), 1, 0).first);
}

TEST(CyclicShift, NoShiftClearsTheSingleZeroMatrix) {
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) EXPECT_FALSE(find_interior_zeros(cyclic_shift(corpus("E1.1"), r, c).first).empty());
    }
    EXPECT_THROW(auto_repair(corpus("E1.1"), Strategy::CyclicShift), StrategyInapplicable);
}

TEST(CyclicShift, SignProperty) {
    testing::Rng rng(8);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 6));
        const SymMatrix a = testing::random_integer_matrix(rng, n, -9, 9, 0.2);
        const Rational det = det_bareiss(a);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                const auto [shifted, sign] = cyclic_shift(a, r, c);
                EXPECT_EQ(det_bareiss(shifted), sign > 0 ? det : -det);
            }
        }
    }
}

TEST(AutoRepair, SingleZeroMatrix) {
    const RepairOutcome out = auto_repair(corpus("E1.1"), Strategy::PerturbOriginal);
    EXPECT_EQ(out.value, Rational(3));
    EXPECT_EQ(out.plan.rounds, 1u);
    EXPECT_EQ(out.trace.final_polynomial, Polynomial(3) - x(0));
    ASSERT_TRUE(out.trace.repair.has_value());
    EXPECT_EQ(*out.trace.repair, out.plan);
}

TEST(AutoRepair, ZeroCentreAfterFirstCondensation) {
    const RepairOutcome out = auto_repair(corpus("E2.2"), Strategy::PerturbOriginal);
    EXPECT_EQ(out.value, Rational(213));
    ASSERT_EQ(out.plan.edits.size(), 1u);
    EXPECT_EQ(out.plan.edits[0].position, (Position{2, 2}));
}

TEST(AutoRepair, A5WithEverySoundStrategy) {
    for (Strategy s : kSoundStrategies) EXPECT_EQ(auto_repair(corpus("A5"), s).value, Rational(903, 2)) << strategy_name(s);
    EXPECT_EQ(auto_repair(corpus("A5"), Strategy::CyclicShift).value, Rational(903, 2));
}

TEST(AutoRepair, FailStrategyPropagatesZeroDivisor) {
    EXPECT_THROW(auto_repair(corpus("E2.2"), Strategy::Fail), DivisorZero);
    testing::Rng rng(3);
    const SymMatrix clean = testing::random_zero_free_matrix(rng, 5);
    const RepairOutcome out = auto_repair(clean, Strategy::Fail);
    EXPECT_EQ(out.value, det_bareiss(clean));
    EXPECT_EQ(out.plan.rounds, 0u);
}

TEST(AutoRepair, RoundCap) {
    RepairOptions opts;
    opts.max_rounds = 0;
    EXPECT_THROW(auto_repair(corpus("E2.2"), Strategy::PerturbOriginal, opts), RoundsExhausted);
    opts.max_rounds = 1;
    EXPECT_EQ(auto_repair(corpus("E2.2"), Strategy::PerturbOriginal, opts).value, Rational(213));
}

TEST(AutoRepair, RejectsSymbolicInput) {
    SymMatrix a = corpus("A1");
    a(0, 0) = x(0);
    EXPECT_THROW(auto_repair(a, Strategy::PerturbOriginal), Error);
}

TEST(AutoRepair, RowOpsPreserveDeterminantWithoutVariables) {
    const RepairOutcome out = auto_repair(corpus("E1.1"), Strategy::RowOpClear);
    EXPECT_EQ(out.value, Rational(3));
    EXPECT_EQ(out.plan.sign, 1);
    ASSERT_FALSE(out.plan.edits.empty());
    for (const auto& e : out.plan.edits) EXPECT_EQ(e.kind, EditKind::RowOp);
    EXPECT_TRUE(out.plan.limit_point.empty());
}

TEST(AutoRepair, ZeroBlocks) {
    for (Strategy s : kSoundStrategies) {
        EXPECT_EQ(auto_repair(corpus("E2.3"), s).value, Rational(16)) << strategy_name(s);
        EXPECT_EQ(auto_repair(testing::nine_zero_block(), s).value, Rational(0)) << strategy_name(s);
    }
    const RepairOutcome z = auto_repair(corpus("E2.3"), Strategy::ReplaceZeros);
    EXPECT_EQ(z.trace.final_polynomial,
              Polynomial::parse("-24*x0*x3 + 184*x0 + 128*x3 + 24*x1*x2 - 136*x2 - 176*x1 + 16"));
}

TEST(AutoRepair, DegenerateMatrices) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (Strategy s : kSoundStrategies) EXPECT_EQ(auto_repair(SymMatrix(n), s).value, Rational(0));
    }
    // Anti-diagonal permutation matrix: every interior entry off the anti-diagonal is zero.
    SymMatrix p(6);
    for (std::size_t i = 0; i < 6; ++i) p(i, 5 - i) = Polynomial(1);
    for (Strategy s : kSoundStrategies) EXPECT_EQ(auto_repair(p, s).value, det_bareiss(p)) << strategy_name(s);
}

TEST(AutoRepair, PlanInvariants) {
    testing::Rng rng(99);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 6));
        const SymMatrix a = testing::random_integer_matrix(rng, n, -3, 3, 0.5);
        for (Strategy s : kSoundStrategies) {
            const RepairOutcome out = auto_repair(a, s);
            EXPECT_EQ(introduced_variables(out.plan), bound_variables(out.plan));
            EXPECT_EQ(out.plan.sign, 1);
            EXPECT_LE(out.plan.rounds, 2 * n * n);
            EXPECT_EQ(out.value, det_bareiss(a));
        }
        try {
            const RepairOutcome shifted = auto_repair(a, Strategy::CyclicShift);
            EXPECT_EQ(shifted.value, det_bareiss(a));
            EXPECT_TRUE(shifted.plan.edits.empty());
        } catch (const StrategyInapplicable&) {
        }
    }
}

TEST(AutoRepair, PerturbationNeverDividesInexactly) {
    testing::Rng rng(100);
    for (int i = 0; i < 80; ++i) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform_int(rng, 3, 6));
        const SymMatrix a = testing::random_integer_matrix(rng, n, -2, 2, 0.6);
        for (Strategy s : {Strategy::PerturbOriginal, Strategy::ReplaceZeros}) {
            EXPECT_NO_THROW({
                const RepairOutcome out = auto_repair(a, s);
                EXPECT_EQ(out.value, det_bareiss(a));
            });
        }
    }
}

TEST(AutoRepair, WindowPositionDoesNotChangeTheLimit) {
    for (const char* name : {"A1", "A4"}) {
        const SymMatrix& a = corpus(name);
        std::set<std::string> polynomials;
        for (std::size_t r = 2; r <= 3; ++r) {
            for (std::size_t c = 2; c <= 3; ++c) {
                const Rewrite rw = perturb_entry(a, Position{r, c}, VarId{0});
                const RunResult out = run(rw.matrix, rw.bindings);
                EXPECT_EQ(out.value, det_bareiss(a)) << name;
                polynomials.insert(out.trace.final_polynomial.to_string());
            }
        }
        EXPECT_GT(polynomials.size(), 1u) << name;
    }
}

TEST(IntermediateReplace, ReproducesWrongLimit) {
    const IntermediateOutcome out = intermediate_replace_unsound(corpus("E2.2"));
    EXPECT_EQ(out.value, Rational(267, 4));
    EXPECT_FALSE(out.sound);
    EXPECT_EQ(out.oracle, Rational(213));
    EXPECT_EQ(out.trace.final_polynomial, Polynomial(Rational(267, 4)) - Polynomial(Rational(47, 12)) * x(0));
    ASSERT_EQ(out.plan.edits.size(), 1u);
    EXPECT_EQ(out.plan.edits[0].level, 3u);
}

TEST(IntermediateReplace, SoundOnTheFiveByFive) {
    const SymMatrix& a = corpus("S4-5x5");
    const IntermediateOutcome out = intermediate_replace_unsound(a);
    EXPECT_EQ(Polynomial(out.value), det_cofactor(a));
    EXPECT_EQ(Polynomial(out.value), testing::leibniz_det(a));
    EXPECT_TRUE(out.sound);
    EXPECT_FALSE(out.plan.edits.empty());
}

TEST(IntermediateReplace, ZeroFreeIsPlainRun) {
    testing::Rng rng(1);
    const IntermediateOutcome out = intermediate_replace_unsound(testing::random_zero_free_matrix(rng, 5));
    EXPECT_TRUE(out.sound);
    EXPECT_TRUE(out.plan.edits.empty());
}

TEST(IntermediateReplace, SharedFamilyIsUnsound) {
    for (const char* name : {"A1", "A2", "A3", "A4", "A5", "A6"}) {
        const IntermediateOutcome out = intermediate_replace_unsound(corpus(name));
        EXPECT_EQ(out.oracle, det_bareiss(corpus(name))) << name;
        EXPECT_EQ(out.sound, out.value == out.oracle) << name;
        EXPECT_FALSE(out.sound) << name;
    }
    // A1..A3 share E2.2's determinant and its wrong limit.
    EXPECT_EQ(intermediate_replace_unsound(corpus("A2")).value, Rational(267, 4));
}

TEST(StrategyNames, RoundTrip) {
    for (Strategy s : {Strategy::Fail, Strategy::CyclicShift, Strategy::RowOpClear, Strategy::PerturbOriginal,
                       Strategy::ReplaceEntry, Strategy::ReplaceZeros, Strategy::IntermediateReplace}) {
        EXPECT_EQ(strategy_from_name(strategy_name(s)), s);
    }
    EXPECT_THROW(strategy_from_name("gauss"), Error);
}

}  // namespace
}  // namespace dodgson
