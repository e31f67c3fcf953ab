#ifndef DODGSON_MATRIX_HPP
#define DODGSON_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "dodgson/polynomial.hpp"

namespace dodgson {

/// 1-based (row, column) coordinate, as used in every user-facing API.
struct Position {
    std::size_t row = 1;
    std::size_t col = 1;

    friend auto operator<=>(const Position&, const Position&) = default;
};

/// Square block of consecutive rows and columns, 1-based.
struct Window {
    std::size_t row_start = 1;
    std::size_t col_start = 1;
    std::size_t size = 1;

    friend bool operator==(const Window&, const Window&) = default;
};

/// Dense square matrix of polynomial entries.
class SymMatrix {
public:
    SymMatrix() = default;
    /// n x n zero matrix; n >= 1.
    explicit SymMatrix(std::size_t n);
    /// Throws DimensionError unless the rows form a non-empty square.
    explicit SymMatrix(const std::vector<std::vector<Polynomial>>& rows);

    /// Builds a constant matrix from rational literals ("3", "-13/6", "0.25").
    static SymMatrix from_literals(std::initializer_list<std::initializer_list<std::string_view>> rows);

    std::size_t size() const { return n_; }

    // 0-based access.
    Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
    const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

    // 1-based access; throws DimensionError when out of range.
    const Polynomial& at(Position p) const;
    Polynomial& at(Position p);

    bool is_constant() const;
    std::set<VarId> variables() const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Polynomial> entries_;
};

/// The (n-2) x (n-2) block left after deleting the outer ring; n >= 3.
SymMatrix interior(const SymMatrix& m);

/// Throws DimensionError when `w` does not fit.
SymMatrix submatrix(const SymMatrix& m, const Window& w);

/// Determinant of the windowed block, computed by cofactor expansion.
Polynomial contiguous_minor(const SymMatrix& m, const Window& w);

SymMatrix transpose(const SymMatrix& m);

enum class MatrixFormat { Csv, Json };

/// CSV: one row per line, comma separated rational literals.
/// JSON: {"n": int, "rows": [[string, ...], ...]} with entries as strings.
SymMatrix parse_matrix(std::string_view text, MatrixFormat format);
std::string serialize_matrix(const SymMatrix& m, MatrixFormat format);

}  // namespace dodgson

#endif  // DODGSON_MATRIX_HPP
