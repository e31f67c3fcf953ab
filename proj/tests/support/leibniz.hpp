#ifndef DODGSON_TESTS_LEIBNIZ_HPP
#define DODGSON_TESTS_LEIBNIZ_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "dodgson/matrix.hpp"

namespace dodgson::testing {

/// Brute-force determinant: signed sum over all n! permutations. Shares no
/// code with the library's determinant routines.
inline Polynomial leibniz_det(const SymMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial sum;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        }
        Polynomial term(Rational(inversions % 2 ? -1 : 1));
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
        sum += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

/// 2 * (1^2 + 2^2 + ... + (n-1)^2), summed term by term.
inline std::uint64_t summed_mult_count(std::size_t n) {
    std::uint64_t total = 0;
    for (std::uint64_t m = 1; m < n; ++m) total += 2 * m * m;
    return total;
}

}  // namespace dodgson::testing

#endif  // DODGSON_TESTS_LEIBNIZ_HPP
