#ifndef DODGSON_SRC_JSON_IO_HPP
#define DODGSON_SRC_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "dodgson/matrix.hpp"

namespace dodgson::detail {

nlohmann::json matrix_to_json(const SymMatrix& m);
SymMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace dodgson::detail

#endif  // DODGSON_SRC_JSON_IO_HPP
