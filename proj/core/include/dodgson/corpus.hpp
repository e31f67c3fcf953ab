#ifndef DODGSON_CORPUS_HPP
#define DODGSON_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dodgson/matrix.hpp"

namespace dodgson {

struct CorpusEntry {
    std::string name;
    SymMatrix matrix;
    /// Published determinant; empty for entries whose value is derived by
    /// the Bareiss oracle.
    std::optional<Rational> expected_det;
    std::string provenance;
};

/// Worked example matrices, with the published
/// determinant where one is given.
const std::vector<CorpusEntry>& corpus_entries();

/// Throws Error for an unknown name.
const CorpusEntry& corpus_entry(const std::string& name);

/// The level-3 iterate shared by A1..A6.
SymMatrix shared_intermediate();

/// Writes <name>.csv for each entry plus manifest.json into `dir`
/// (created if missing). Returns the manifest path.
std::string export_corpus(const std::string& dir);

}  // namespace dodgson

#endif  // DODGSON_CORPUS_HPP
