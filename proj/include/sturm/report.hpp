#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "sturm/rational.hpp"

namespace sturm {

/// Outcome of one exact identity check. The check passed iff the residual is
/// exactly zero.
struct IdentityReport {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();
  Rational residual;
  std::uint64_t seed = 0;

  bool passed() const noexcept { return residual.is_zero(); }
};

// {"identity", "params", "residual", "passed", "seed"}
nlohmann::json to_json(const IdentityReport& r);

}  // namespace sturm
