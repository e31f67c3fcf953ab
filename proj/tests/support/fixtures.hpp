#ifndef DODGSON_TESTS_FIXTURES_HPP
#define DODGSON_TESTS_FIXTURES_HPP

#include "dodgson/corpus.hpp"
#include "dodgson/matrix.hpp"

namespace dodgson::testing {

inline const SymMatrix& corpus(const char* name) { return corpus_entry(name).matrix; }

inline Polynomial x(std::uint32_t i) { return Polynomial::variable(VarId{i}); }

/// 5x5 with a 3x3 block of interior zeros.
inline SymMatrix nine_zero_block() {
    return SymMatrix::from_literals({{"1", "3", "5", "7", "9"},
                                     {"-2", "0", "0", "0", "-4"},
                                     {"-6", "0", "0", "0", "-8"},
                                     {"-10", "0", "0", "0", "-12"},
                                     {"9", "7", "5", "3", "1"}});
}

}  // namespace dodgson::testing

#endif  // DODGSON_TESTS_FIXTURES_HPP
