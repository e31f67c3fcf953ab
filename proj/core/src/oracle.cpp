#include "dodgson/oracle.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dodgson/errors.hpp"

namespace dodgson {

namespace {

// Expands along row popcount(used) over the columns not in `used`.
class CofactorExpansion {
public:
    explicit CofactorExpansion(const SymMatrix& m) : m_(m), memo_(std::size_t{1} << m.size()) {}

    Polynomial det() { return minor(0); }

private:
    const Polynomial& minor(std::uint32_t used) {
        auto& slot = memo_[used];
        if (slot) return *slot;
        const std::size_t n = m_.size();
        const auto row = static_cast<std::size_t>(std::popcount(used));
        Polynomial sum;
        if (row == n) {
            sum = Polynomial(Rational(1));
        } else {
            bool negative = false;
            for (std::size_t c = 0; c < n; ++c) {
                if (used & (1u << c)) continue;
                const Polynomial& entry = m_(row, c);
                if (!entry.is_zero()) {
                    const Polynomial term = entry * minor(used | (1u << c));
                    if (negative) {
                        sum -= term;
                    } else {
                        sum += term;
                    }
                }
                negative = !negative;
            }
        }
        slot = std::move(sum);
        return *slot;
    }

    const SymMatrix& m_;
    std::vector<std::optional<Polynomial>> memo_;
};

}  // namespace

Polynomial det_cofactor(const SymMatrix& m) {
    if (m.size() > kCofactorMaxDimension) {
        throw DimensionError("cofactor oracle is capped at n = " + std::to_string(kCofactorMaxDimension) + ", got " +
                             std::to_string(m.size()));
    }
    return CofactorExpansion(m).det();
}

Rational det_bareiss(const SymMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (!m(r, c).is_constant()) throw Error("Bareiss oracle needs constant entries");
            a[r][c] = m(r, c).constant_value();
        }
    }

    int sign = 1;
    Rational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k].is_zero()) ++swap;
            if (swap == n) return Rational(0);
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = Rational(0);
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

SymMatrix all_minors_level(const SymMatrix& a, std::size_t k) {
    const std::size_t n = a.size();
    if (k < 1 || k >= n) {
        throw DimensionError("minor level k = " + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
    }
    SymMatrix out(n - k);
    for (std::size_t i = 0; i < n - k; ++i) {
        for (std::size_t j = 0; j < n - k; ++j) out(i, j) = contiguous_minor(a, Window{i + 1, j + 1, k + 1});
    }
    return out;
}

}  // namespace dodgson
