#include "pdm/spectrum.hpp"

namespace pdm {

std::string method_name(Method m) {
  switch (m) {
    case Method::multi_step_poles: return "poles";
    case Method::transcendental: return "transcendental";
    case Method::closed_form: return "closedform";
  }
  return "?";
}

}  // namespace pdm
