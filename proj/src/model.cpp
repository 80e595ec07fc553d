#include "spinwedge/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "spinwedge/errors.hpp"

namespace spinwedge {

void ModelSpec::validate() const {
  if (!std::isfinite(field_B)) throw InputError("magnetic field must be finite");
}

std::string_view model_name(Model m) { return m == Model::XY ? "xy" : "heis"; }

Model parse_model(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "xy") return Model::XY;
  if (lower == "heis" || lower == "heisenberg") return Model::Heisenberg;
  throw InputError("unknown model '" + std::string(text) + "' (expected xy or heis)");
}

}  // namespace spinwedge
