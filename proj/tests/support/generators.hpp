#ifndef DODGSON_TESTS_GENERATORS_HPP
#define DODGSON_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>

#include "dodgson/matrix.hpp"
#include "dodgson/oracle.hpp"

namespace dodgson::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// p/q with p in [-9, 9] \ {0}, q in [1, 4].
inline Rational nonzero_rational(Rng& rng) {
    std::int64_t p = 0;
    while (p == 0) p = uniform_int(rng, -9, 9);
    return Rational(p, uniform_int(rng, 1, 4));
}

/// Integer entries in [lo, hi]; each entry is forced to zero with
/// probability `zero_prob`.
inline SymMatrix random_integer_matrix(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi, double zero_prob = 0.0) {
    std::bernoulli_distribution zero(zero_prob);
    SymMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = zero(rng) ? Polynomial{} : Polynomial(Rational(uniform_int(rng, lo, hi)));
    }
    return m;
}

inline SymMatrix random_rational_matrix(Rng& rng, std::size_t n) {
    SymMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = Polynomial(nonzero_rational(rng));
    }
    return m;
}

/// True when every interior entry of every condensation level is nonzero,
/// decided from contiguous minors alone (no condensation code involved).
inline bool zero_free_at_all_levels(const SymMatrix& a) {
    const std::size_t n = a.size();
    // Level A^(n-k) needs nonzero interiors only when it is later a divisor.
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const SymMatrix level = k == 0 ? a : all_minors_level(a, k);
        for (std::size_t r = 1; r + 1 < level.size(); ++r) {
            for (std::size_t c = 1; c + 1 < level.size(); ++c) {
                if (level(r, c).is_zero()) return false;
            }
        }
    }
    return true;
}

inline SymMatrix random_zero_free_matrix(Rng& rng, std::size_t n) {
    while (true) {
        SymMatrix m = random_rational_matrix(rng, n);
        if (zero_free_at_all_levels(m)) return m;
    }
}

/// Sparse polynomial over `vars` variables with up to `terms` terms of
/// degree <= `max_degree` per variable.
inline Polynomial random_polynomial(Rng& rng, std::uint32_t vars, int terms, std::uint32_t max_degree) {
    Polynomial p;
    const int count = static_cast<int>(uniform_int(rng, 0, terms));
    for (int t = 0; t < count; ++t) {
        Monomial m;
        for (std::uint32_t v = 0; v < vars; ++v) {
            m = m * Monomial::variable(VarId{v}, static_cast<std::uint32_t>(uniform_int(rng, 0, max_degree)));
        }
        p += Polynomial::monomial(m, Rational(uniform_int(rng, -5, 5), uniform_int(rng, 1, 3)));
    }
    return p;
}

inline Assignment random_point(Rng& rng, std::uint32_t vars) {
    Assignment a;
    for (std::uint32_t v = 0; v < vars; ++v) a[VarId{v}] = Rational(uniform_int(rng, -4, 4), uniform_int(rng, 1, 3));
    return a;
}

}  // namespace dodgson::testing

#endif  // DODGSON_TESTS_GENERATORS_HPP
