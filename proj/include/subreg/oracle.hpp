// Independent exhaustive evaluator for finite sampled-graph instances.
//
// Every sup/inf/limsup/liminf quantity is transcribed directly from its
// defining expression and evaluated by full enumeration; limsup/liminf over
// a finite set is the plain max/min over the admissible subset, with "u -> x"
// neighbourhoods read as "all sample points within the declared radius".
// This module is the ground truth the slope machinery must match exactly on
// sampled instances; it deliberately shares only the atomic helpers (norms,
// ratios) with the primal implementation, never its enumeration logic.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subreg/config.hpp"
#include "subreg/mapping.hpp"

namespace subreg::oracle {

struct ExhaustiveResult {
  std::string quantity;
  double value = 0.0;
  std::optional<ProductPoint> attaining;
  std::vector<std::pair<double, double>> trajectory;
  bool vacuous = false;
};

struct OracleParams {
  double rho = 1.0;      // pointwise quantities
  double radius = kInf;  // local competitor / window filter around the base point
  RhoSchedule schedule;  // strict quantities
};

// Supported quantity ids:
//   pointwise (need `at`): lifted_rho_slope, gauge_rho_slope, rho_slope,
//                          nonlocal_rho_slope, phi_nonlocal_rho_slope
//   reference-point:       strict_f, modified_strict_f, uniform_strict_f,
//                          strict_g, modified_strict_g, uniform_strict_g,
//                          strict_phi, modified_strict_phi, uniform_strict_phi,
//                          er_modulus, sr_f, sr_g, sr_phi,
//                          liminf_gauge_over_xdist
ExhaustiveResult exhaustive_slope(const std::string& quantity_id,
                                  const SetValuedMap& map, const Gauge& gauge,
                                  const OracleParams& params,
                                  const ProductPoint* at = nullptr);

std::vector<std::string> pointwise_quantities();
std::vector<std::string> reference_quantities();

// Exhaustive evaluation of one implication edge between the primal criteria
// (letters of the quantitative corollaries restricted to a..e).
struct ImplicationTruth {
  bool source_holds = false;
  bool target_holds = false;
  bool consistent = true;
};
ImplicationTruth exhaustive_implication_truth(const SetValuedMap& map,
                                              const Gauge& gauge,
                                              const std::string& source,
                                              const std::string& target,
                                              double gamma,
                                              const OracleParams& params);

}  // namespace subreg::oracle
