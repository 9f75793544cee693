#include "osci/problem.hpp"

#include <cmath>
#include <string>

#include "osci/error.hpp"

namespace osci {

ProblemParams::ProblemParams(double alpha, double beta, double nu, double k, double omega)
    : alpha_(alpha), beta_(beta), nu_(nu), k_(k), omega_(omega) {
  auto fail = [](const std::string& msg) { throw DomainError(Stage::integration, msg); };
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(k) || !std::isfinite(omega)) {
    fail("problem parameters must be finite");
  }
  if (!(alpha - nu_.abs() > -1.0)) fail("need alpha - |nu| > -1");
  if (!(beta > -1.0)) fail("need beta > -1");
  if (!(omega > 0.0)) fail("need omega > 0");
  if (!(k >= 0.0)) fail("need k >= 0");
}

}  // namespace osci
