#pragma once

#include <string>
#include <string_view>

namespace spinwedge {

enum class Model { XY, Heisenberg };

/// Couplings are fixed at 1; the uniform z-field B (coefficient of
/// sum_v sigma^z_v) is the only free scalar.
struct ModelSpec {
  Model model = Model::XY;
  double field_B = 0.0;

  /// Throws InputError if field_B is not finite.
  void validate() const;
};

std::string_view model_name(Model m);
/// Accepts "xy", "heis", "heisenberg" (case-insensitive).
Model parse_model(std::string_view text);

/// Eigenvalue of B * S^z on the k-excitation sector: B * (N - 2k).
inline double field_shift(double field_B, int n, int k) {
  return field_B * static_cast<double>(n - 2 * k);
}

}  // namespace spinwedge
