#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "sturm/polynomial.hpp"

namespace sturm {

// "a_n, ..., a_0" with integer or p/q entries. Throws ParseError, including
// for a zero leading entry.
Polynomial parse_coeff_list(std::string_view text);

// {"coeffs": ["a_n", ..., "a_0"]}; integer JSON numbers are accepted too.
Polynomial polynomial_from_json(const nlohmann::json& j);
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial read_polynomial_file(const std::filesystem::path& path);

}  // namespace sturm
