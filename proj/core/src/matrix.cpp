#include "dodgson/matrix.hpp"

#include <sstream>

#include "dodgson/errors.hpp"
#include "dodgson/oracle.hpp"
#include "json_io.hpp"

namespace dodgson {

SymMatrix::SymMatrix(std::size_t n) : n_(n), entries_(n * n) {
    if (n == 0) throw DimensionError("matrix dimension must be at least 1");
}

SymMatrix::SymMatrix(const std::vector<std::vector<Polynomial>>& rows) : n_(rows.size()) {
    if (n_ == 0) throw DimensionError("matrix has no rows");
    entries_.reserve(n_ * n_);
    for (std::size_t r = 0; r < n_; ++r) {
        if (rows[r].size() != n_) {
            throw DimensionError("matrix is not square: row " + std::to_string(r + 1) + " has " +
                                 std::to_string(rows[r].size()) + " entries, expected " + std::to_string(n_));
        }
        entries_.insert(entries_.end(), rows[r].begin(), rows[r].end());
    }
}

SymMatrix SymMatrix::from_literals(std::initializer_list<std::initializer_list<std::string_view>> rows) {
    std::vector<std::vector<Polynomial>> parsed;
    for (const auto& row : rows) {
        auto& out = parsed.emplace_back();
        for (auto lit : row) out.emplace_back(Rational::parse(lit));
    }
    return SymMatrix(parsed);
}

const Polynomial& SymMatrix::at(Position p) const {
    if (p.row < 1 || p.col < 1 || p.row > n_ || p.col > n_) {
        throw DimensionError("position (" + std::to_string(p.row) + "," + std::to_string(p.col) + ") outside " +
                             std::to_string(n_) + "x" + std::to_string(n_) + " matrix");
    }
    return (*this)(p.row - 1, p.col - 1);
}

Polynomial& SymMatrix::at(Position p) { return const_cast<Polynomial&>(std::as_const(*this).at(p)); }

bool SymMatrix::is_constant() const {
    for (const auto& e : entries_) {
        if (!e.is_constant()) return false;
    }
    return true;
}

std::set<VarId> SymMatrix::variables() const {
    std::set<VarId> vars;
    for (const auto& e : entries_) vars.merge(e.variables());
    return vars;
}

SymMatrix interior(const SymMatrix& m) {
    if (m.size() < 3) throw DimensionError("interior needs n >= 3, got " + std::to_string(m.size()));
    return submatrix(m, Window{2, 2, m.size() - 2});
}

SymMatrix submatrix(const SymMatrix& m, const Window& w) {
    if (w.size == 0 || w.row_start < 1 || w.col_start < 1 || w.row_start + w.size - 1 > m.size() ||
        w.col_start + w.size - 1 > m.size()) {
        throw DimensionError("window (" + std::to_string(w.row_start) + "," + std::to_string(w.col_start) + ") of size " +
                             std::to_string(w.size) + " does not fit a " + std::to_string(m.size()) + "x" +
                             std::to_string(m.size()) + " matrix");
    }
    SymMatrix out(w.size);
    for (std::size_t r = 0; r < w.size; ++r) {
        for (std::size_t c = 0; c < w.size; ++c) out(r, c) = m(w.row_start - 1 + r, w.col_start - 1 + c);
    }
    return out;
}

Polynomial contiguous_minor(const SymMatrix& m, const Window& w) { return det_cofactor(submatrix(m, w)); }

SymMatrix transpose(const SymMatrix& m) {
    SymMatrix out(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) out(c, r) = m(r, c);
    }
    return out;
}

namespace {

SymMatrix parse_csv(std::string_view text) {
    std::vector<std::vector<Polynomial>> rows;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

        auto& row = rows.emplace_back();
        while (true) {
            const auto comma = line.find(',');
            try {
                row.emplace_back(Rational::parse(line.substr(0, comma)));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
            if (comma == std::string_view::npos) break;
            line.remove_prefix(comma + 1);
        }
        if (row.size() != rows.front().size()) {
            throw DimensionError("ragged rows: line " + std::to_string(line_no) + " has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(rows.front().size()));
        }
    }
    if (rows.empty()) throw ParseError("empty matrix");
    if (rows.size() != rows.front().size()) {
        throw DimensionError("matrix is not square: " + std::to_string(rows.size()) + " rows, " +
                             std::to_string(rows.front().size()) + " columns");
    }
    return SymMatrix(rows);
}

}  // namespace

namespace detail {

nlohmann::json matrix_to_json(const SymMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return {{"n", m.size()}, {"rows", std::move(rows)}};
}

SymMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array()) {
        throw ParseError("matrix JSON must be an object with a \"rows\" array");
    }
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& jrow : j.at("rows")) {
        if (!jrow.is_array()) throw ParseError("matrix JSON row is not an array");
        auto& row = rows.emplace_back();
        for (const auto& e : jrow) {
            if (!e.is_string()) throw ParseError("matrix JSON entries must be strings");
            row.push_back(Polynomial::parse(e.get<std::string>()));
        }
        if (row.size() != rows.front().size()) throw DimensionError("ragged rows in matrix JSON");
    }
    if (rows.empty()) throw ParseError("empty matrix");
    if (rows.size() != rows.front().size()) throw DimensionError("matrix JSON is not square");
    SymMatrix m(rows);
    if (j.contains("n") && j.at("n") != m.size()) {
        throw DimensionError("matrix JSON \"n\" = " + j.at("n").dump() + " disagrees with " + std::to_string(m.size()) + " rows");
    }
    return m;
}

}  // namespace detail

SymMatrix parse_matrix(std::string_view text, MatrixFormat format) {
    if (format == MatrixFormat::Csv) return parse_csv(text);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return detail::matrix_from_json(j);
}

std::string serialize_matrix(const SymMatrix& m, MatrixFormat format) {
    if (format == MatrixFormat::Json) return detail::matrix_to_json(m).dump();
    std::ostringstream out;
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            if (c > 0) out << ',';
            out << m(r, c);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace dodgson
