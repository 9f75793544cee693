#include "osci/error.hpp"

namespace osci {

std::string_view to_string(Stage stage) noexcept {
  switch (stage) {
    case Stage::specfun: return "specfun";
    case Stage::quadrature_rule: return "quadrature_rule";
    case Stage::interpolation: return "interpolation";
    case Stage::starting_moments: return "starting_moments";
    case Stage::recurrence: return "recurrence";
    case Stage::oracle: return "oracle";
    case Stage::integration: return "integration";
    case Stage::sweep: return "sweep";
    case Stage::parse: return "parse";
    case Stage::cli: return "cli";
  }
  return "unknown";
}

}  // namespace osci
