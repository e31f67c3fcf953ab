#include "dodgson/corpus.hpp"

#include <filesystem>
#include <fstream>

#include "dodgson/errors.hpp"
#include "dodgson/oracle.hpp"
#include "json_io.hpp"

namespace dodgson {

namespace {

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;
    auto add = [&](std::string name, SymMatrix m, std::optional<Rational> det, std::string provenance) {
        out.push_back(CorpusEntry{std::move(name), std::move(m), std::move(det), std::move(provenance)});
    };

    add("E1.1",
        SymMatrix::from_literals({{"1", "0", "3", "0"}, {"0", "-1", "0", "1"}, {"1", "1", "2", "0"}, {"0", "2", "0", "1"}}),
        Rational(3), "4x4 with one interior zero that no cyclic row/column shift removes");
    add("E2.2",
        SymMatrix::from_literals({{"3", "-2", "1", "2"}, {"-1", "4", "4", "1"}, {"3", "3", "3", "4"}, {"2", "5", "2", "-1"}}),
        Rational(213), "4x4 whose first condensation has a zero centre; intermediate replacement gives 267/4");
    add("A1",
        SymMatrix::from_literals({{"1", "-2", "1", "2"}, {"3", "4", "4", "1"}, {"6", "3", "3", "4"}, {"7", "5", "2", "-1"}}),
        Rational(213), "shares its first condensation with E2.2");
    add("A2",
        SymMatrix::from_literals(
            {{"0.25", "9", "12", "4.75"}, {"-1", "4", "4", "1"}, {"3", "3", "3", "4"}, {"2", "5", "2", "-1"}}),
        Rational(213), "shares its first condensation with E2.2; decimal first row");
    add("A3",
        SymMatrix::from_literals(
            {{"3", "-2", "1", "0.25"}, {"-1", "4", "4", "-6"}, {"3", "3", "3", "-1.25"}, {"2", "5", "2", "-4.5"}}),
        Rational(213), "shares its first condensation with E2.2; decimal last column");
    add("A4",
        SymMatrix::from_literals({{"-45", "-5", "-2", "0.5"},
                                  {"-7", "-1", "2", "3"},
                                  {"-8", "1", "-2", "3.5"},
                                  {"-25", "2", "-13", "28.25"}}),
        Rational(11331, 2), "shares its first condensation with E2.2; published as 5665.5");
    add("A5",
        SymMatrix::from_literals({{"0", "1", "5", "-8.5"},
                                  {"-10", "2", "-2", "2"},
                                  {"-7.5", "3", "-3", "-3.5"},
                                  {"-8", "2", "-5", "-13/6"}}),
        Rational(903, 2), "shares its first condensation with E2.2; published as 451.5");
    add("A6",
        SymMatrix::from_literals({{"0", "1", "4", "31/12"},
                                  {"-10", "6", "12", "6"},
                                  {"35/12", "-1/4", "-1/2", "5/6"},
                                  {"-34", "6", "48", "-58"}}),
        Rational(2073), "shares its first condensation with E2.2; fractional entries");
    add("E2.3",
        SymMatrix::from_literals({{"1", "2", "3", "4"}, {"5", "0", "0", "6"}, {"7", "0", "0", "8"}, {"9", "10", "11", "12"}}),
        Rational(16), "4x4 with a 2x2 block of interior zeros");
    add("S4-5x5",
        SymMatrix::from_literals({{"1", "0", "1", "0", "1"},
                                  {"0", "1", "1", "1", "1"},
                                  {"1", "2", "1", "1", "2"},
                                  {"-1", "1", "1", "2", "1"},
                                  {"0", "1", "0", "1", "0"}}),
        std::nullopt, "5x5 on which intermediate replacement happens to be sound; value from the oracle");
    return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus_entries() {
    static const std::vector<CorpusEntry> entries = build_corpus();
    return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
    for (const auto& e : corpus_entries()) {
        if (e.name == name) return e;
    }
    throw Error("no corpus entry named '" + name + "'");
}

SymMatrix shared_intermediate() {
    return SymMatrix::from_literals({{"10", "-12", "-7"}, {"-15", "0", "13"}, {"9", "-9", "-11"}});
}

std::string export_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    nlohmann::json manifest = nlohmann::json::array();
    for (const auto& e : corpus_entries()) {
        const std::string file = e.name + ".csv";
        std::ofstream(fs::path(dir) / file) << serialize_matrix(e.matrix, MatrixFormat::Csv);
        manifest.push_back({
            {"name", e.name},
            {"file", file},
            {"n", e.matrix.size()},
            {"expected_det", e.expected_det ? e.expected_det->to_string() : "derived"},
            {"oracle_det", det_bareiss(e.matrix).to_string()},
            {"provenance", e.provenance},
        });
    }
    const fs::path path = fs::path(dir) / "manifest.json";
    std::ofstream(path) << manifest.dump(2) << '\n';
    return path.string();
}

}  // namespace dodgson
