// Primal slope quantities and the error-bound / subregularity moduli.
//
// Three families share the machinery:
//   Lifted - slopes of f(x,y) = g(y) + i_{gph F}(x,y)
//   Gauge  - (g,rho)-slopes of F driven by numerators [g(y)-g(v)]_+
//   Phi    - slopes driven by phi(d(y,ybar)), with the factorized form
//            phi'(d(y,ybar)) * |rho-slope| for the strict variants
//
// limsup/liminf realization: genuine nested shrinking for smooth and convex
// graphs; for finite sampled graphs the competitor/admissible sets are the
// plain radius-filtered finite sets (the oracle's finite surrogate), so that
// results agree with exhaustive enumeration bit for bit.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subreg/config.hpp"
#include "subreg/mapping.hpp"

namespace subreg {

enum class SlopeFamily { Lifted, Gauge, Phi };
enum class StrictVariant { Plain, Modified, Uniform };

std::string family_name(SlopeFamily f);
std::string variant_name(StrictVariant v);

struct SlopeEstimate {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double rho = 0.0;
  std::optional<ProductPoint> witness;
  std::vector<std::pair<double, double>> trajectory;  // (rho_k, value_k)
  bool vacuous = false;
  std::string note;
};

// Window sample centered at the reference point; shared by the
// reference-point quantities below.
GraphSample window_sample(const SetValuedMap& map, const SamplingConfig& cfg,
                          double min_radius = 0.0);

// Points of `window` with d(x,xbar) < rho, d(y,ybar) < rho, x not in
// F^{-1}(ybar). The common admissible set of all strict slopes.
std::vector<ProductPoint> admissible_points(const SetValuedMap& map,
                                            const GraphSample& window,
                                            double rho);

// --- Pointwise slopes -------------------------------------------------------

// limsup of [f(p)-f(q)]_+ / d_rho(q,p) over graph points q -> p.
SlopeEstimate lifted_rho_slope(const SetValuedMap& map, const Gauge& gauge,
                               const ProductPoint& p, double rho,
                               const SamplingConfig& cfg);

// rho-slope of F: numerator [d(y,ybar) - d(v,ybar)]_+.
SlopeEstimate rho_slope(const SetValuedMap& map, const ProductPoint& p,
                        double rho, const SamplingConfig& cfg);

// (g,rho)-slope; `factorized` carries phi'(d(y,ybar)) * rho_slope when the
// gauge has modulation structure (cross-check of the factorization identity).
struct GaugeSlopeResult {
  SlopeEstimate direct;
  std::optional<double> factorized;
};
GaugeSlopeResult gauge_rho_slope(const SetValuedMap& map, const Gauge& gauge,
                                 const ProductPoint& p, double rho,
                                 const SamplingConfig& cfg);

// Nonlocal (g,rho)-slope: sup over the whole window, not shrinking.
SlopeEstimate nonlocal_rho_slope(const SetValuedMap& map, const Gauge& gauge,
                                 const ProductPoint& p, double rho,
                                 const SamplingConfig& cfg);

// Nonlocal (phi,rho)-slope: numerator phi(d(y,ybar)) - phi(d(v,ybar)).
SlopeEstimate phi_nonlocal_rho_slope(const SetValuedMap& map,
                                     const Modulation& phi,
                                     const ProductPoint& p, double rho,
                                     const SamplingConfig& cfg);

// --- Reference-point quantities ---------------------------------------------

// Strict slopes: for each rho_k, inf of the variant's inner quantity over the
// admissible set; value taken at the final rho_k, full trajectory reported.
// inf over an empty set is +inf.
SlopeEstimate strict_slope(const SetValuedMap& map, const Gauge& gauge,
                           SlopeFamily family, StrictVariant variant,
                           const RhoSchedule& schedule,
                           const SamplingConfig& cfg);

// liminf of f(x,y)/d(x, S(f)) over x -> xbar with f(x,y) > 0.
SlopeEstimate error_bound_modulus(const SetValuedMap& map, const Gauge& gauge,
                                  const SamplingConfig& cfg);

// liminf of gauge(y)/d(x, F^{-1}(ybar)) over admissible x -> xbar; the Phi
// family uses the nearest image point, phi(d(ybar, F(x))).
SlopeEstimate subregularity_modulus(const SetValuedMap& map, SlopeFamily family,
                                    const Gauge& gauge,
                                    const SamplingConfig& cfg);

// liminf of gauge(y)/d(x,xbar) over admissible points (criterion (c)).
SlopeEstimate liminf_gauge_over_xdist(const SetValuedMap& map,
                                      const Gauge& gauge,
                                      const SamplingConfig& cfg);

}  // namespace subreg
