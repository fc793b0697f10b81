#include "sturm/report.hpp"

namespace sturm {

nlohmann::json to_json(const IdentityReport& r) {
  return {{"identity", r.identity},
          {"params", r.params},
          {"residual", r.residual.str()},
          {"passed", r.passed()},
          {"seed", r.seed}};
}

}  // namespace sturm
