// Sampling and schedule configuration shared by the slope machinery.

#pragma once

#include <vector>

#include "subreg/extended.hpp"

namespace subreg {

// Geometric schedule realizing "rho -> 0" limits.
struct RhoSchedule {
  double rho0 = 1.0;
  double factor = 0.5;  // in (0,1)
  int steps = 8;

  void validate() const {
    if (rho0 <= 0.0) throw InputError("rho0 must be positive");
    if (factor <= 0.0 || factor >= 1.0) throw InputError("rho factor must lie in (0,1)");
    if (steps < 1) throw InputError("schedule needs at least one step");
  }

  std::vector<double> values() const {
    validate();
    std::vector<double> v(static_cast<size_t>(steps));
    double r = rho0;
    for (int k = 0; k < steps; ++k) {
      v[static_cast<size_t>(k)] = r;
      r *= factor;
    }
    return v;
  }
};

struct SamplingConfig {
  double radius = 1.0;   // window half-width around the reference point
  int resolution = 201;  // grid points across the window (per axis)
  int levels = 6;        // nested halvings realizing limsup/liminf
  double window = 0.0;   // search window for inverse images; 0 = auto
  int local_resolution = 33;  // grid for per-point local slopes

  void validate() const {
    if (radius < 0.0) throw InputError("radius must be nonnegative");
    if (resolution < 3) throw InputError("resolution must be at least 3");
    if (levels < 1) throw InputError("levels must be at least 1");
    if (local_resolution < 3) throw InputError("local resolution must be at least 3");
  }
};

}  // namespace subreg
