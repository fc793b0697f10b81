#include "sturm/poly_io.hpp"

#include <fstream>
#include <string>
#include <vector>

#include "sturm/errors.hpp"

namespace sturm {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Polynomial checked(const std::vector<Rational>& desc) {
  if (desc.empty()) throw ParseError("empty coefficient list");
  if (desc.front().is_zero()) throw ParseError("leading coefficient must be nonzero");
  return Polynomial::from_descending(desc);
}

}  // namespace

Polynomial parse_coeff_list(std::string_view text) {
  std::vector<Rational> desc;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (item.empty()) throw ParseError("empty coefficient in list");
    desc.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return checked(desc);
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("expected an object with a \"coeffs\" array");
  std::vector<Rational> desc;
  for (const auto& c : j["coeffs"]) {
    if (c.is_string()) {
      desc.push_back(Rational::parse(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      desc.push_back(Rational::parse(c.dump()));
    } else {
      throw ParseError("coefficients must be strings or integers, got " + c.dump());
    }
  }
  return checked(desc);
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
  auto coeffs = nlohmann::json::array();
  for (const auto& c : p.descending()) coeffs.push_back(c.str());
  return {{"coeffs", coeffs}};
}

Polynomial read_polynomial_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return polynomial_from_json(j);
}

}  // namespace sturm
