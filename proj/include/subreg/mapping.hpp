// Set-valued mappings, gauges, modulation functions, and the lifted
// function g(y) + indicator of the graph.

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subreg/config.hpp"
#include "subreg/spaces.hpp"

namespace subreg {

// phi: R+ -> R+ with phi(0) = 0 and phi'(t) > 0; phi'(0) may be +inf.
struct Modulation {
  enum class Kind { Identity, Holder, ArccosBranch, Table };

  Kind kind = Kind::Identity;
  double q = 1.0;                                // Holder exponent
  std::vector<std::pair<double, double>> table;  // (t, phi(t)), increasing

  static Modulation identity() { return {}; }
  static Modulation holder(double q);
  // phi(t) = arccos(1-t) for t < 1/2, affine continuation beyond.
  static Modulation arccos_branch() { return {Kind::ArccosBranch, 1.0, {}}; }
  static Modulation from_table(std::vector<std::pair<double, double>> pts);

  double value(double t) const;
  double deriv(double t) const;  // right derivative at 0, may be +inf

  // Exact exponent when the shape is declared (t^q or identity).
  std::optional<double> holder_exponent() const;
  bool convex_near_zero() const;
  std::string describe() const;
};

// liminf_{t->0} t*phi'(t)/phi(t); exact q for declared Holder shapes,
// numerical liminf over the decreasing grid otherwise.
struct VarthetaEstimate {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
};
VarthetaEstimate vartheta(const Modulation& phi,
                          const std::vector<double>& t_schedule);
VarthetaEstimate vartheta(const Modulation& phi);  // default grid 2^-k, k=1..20

// Subdifferential of a gauge at y: scale * face (face from the duality
// mapping; scale = phi'(||y-ybar||) for gauges of the form phi(d(y,ybar))).
struct GaugeSubdiff {
  double scale = 1.0;
  DualFace face;
};

struct Gauge {
  std::function<double(const Vec&)> value;
  std::function<GaugeSubdiff(const Vec&)> subdiff;  // defined for y != ybar
  Vec ybar;
  bool convex = false;
  bool smooth_away_from_ref = false;
  std::optional<Modulation> phi;  // set when g = phi(||. - ybar||)
  NormedSpace spaceY;
};

// g(y) = phi(||y - ybar||) with subdifferential phi'(||y-ybar||) J(y-ybar).
Gauge g_from_phi(const Modulation& phi, const Vec& ybar, const NormedSpace& spaceY);
Gauge distance_gauge(const Vec& ybar, const NormedSpace& spaceY);

// --- Set-valued mapping representations --------------------------------

struct SmoothMap {
  std::function<Vec(const Vec&)> eval;
  std::function<std::vector<Vec>(const Vec&)> jacobian;  // rows = outputs; empty -> finite differences
  std::string builtin;  // name for serialization when constructed from the library
};

struct SampledGraph {
  std::vector<ProductPoint> points;  // finite, duplicate-free
};

// One constraint c(x,y) <= 0 of a convex graph. Affine constraints carry
// exact coefficients (a_x . x + a_y . y <= b); smooth convex constraints
// carry evaluators and gradients.
struct ConvexConstraint {
  bool affine = true;
  Vec ax, ay;
  double b = 0.0;
  std::function<double(const Vec&, const Vec&)> value;
  std::function<std::pair<Vec, Vec>(const Vec&, const Vec&)> grad;
  std::string name;

  static ConvexConstraint make_affine(Vec ax, Vec ay, double b);
  double eval(const Vec& x, const Vec& y) const;
  std::pair<Vec, Vec> gradient(const Vec& x, const Vec& y) const;
};

struct ConvexGraph {
  std::vector<ConvexConstraint> constraints;
};

struct SetValuedMap {
  ProductSpace spaces;
  std::variant<SmoothMap, SampledGraph, ConvexGraph> rep;
  ProductPoint ref;  // (xbar, ybar) on the graph
  std::string name;

  bool is_smooth() const { return std::holds_alternative<SmoothMap>(rep); }
  bool is_sampled() const { return std::holds_alternative<SampledGraph>(rep); }
  bool is_convex_graph() const { return std::holds_alternative<ConvexGraph>(rep); }

  const SmoothMap& smooth() const { return std::get<SmoothMap>(rep); }
  const SampledGraph& sampled() const { return std::get<SampledGraph>(rep); }
  const ConvexGraph& convex_graph() const { return std::get<ConvexGraph>(rep); }
};

void validate_map(const SetValuedMap& map);

bool on_graph(const SetValuedMap& map, const ProductPoint& p,
              double tol = kGraphTol);

// x in F^{-1}(ybar)? Exact sample match for sampled graphs, residual test
// within kGraphTol otherwise.
bool in_inverse_image(const SetValuedMap& map, const Vec& x);

std::vector<Vec> jacobian_of(const SetValuedMap& map, const Vec& x);

// Cached description of F^{-1}(ybar) inside a window, for distance queries.
struct InverseImage {
  enum class Kind { XList, Roots, Interval };
  Kind kind = Kind::XList;
  std::vector<Vec> xs;          // XList / Roots
  double lo = 0.0, hi = 0.0;    // Interval (1-d convex case)
  bool empty = false;

  double distance(const NormedSpace& X, const Vec& x) const;
};

InverseImage compute_inverse_image(const SetValuedMap& map, double window);

// d(x, F^{-1}(ybar)); window <= 0 selects the default ||x-xbar||*10 + 1.
double dist_to_inverse_image(const SetValuedMap& map, const Vec& x,
                             double window = 0.0);

struct GraphSample {
  std::vector<ProductPoint> points;
  bool degenerate = false;  // only the center survived
};

// Deterministic finite set of graph points within rho_dist (rho = 1) radius
// of center, center included.
GraphSample graph_sample(const SetValuedMap& map, const ProductPoint& center,
                         double radius, int resolution);

// d(ybar, F(x)) restricted to the sampled/structured representation.
double dist_ybar_to_image(const SetValuedMap& map, const Vec& x);

// --- Lifted function -----------------------------------------------------

// f(x,y) = g(y) + indicator of gph F; f(xbar,ybar) = 0.
struct LiftedFunction {
  const SetValuedMap* map = nullptr;
  const Gauge* gauge = nullptr;

  double operator()(const ProductPoint& p) const;
};

LiftedFunction lift(const SetValuedMap& map, const Gauge& gauge);

// Spot checks of gauge properties on a sample around ybar: positivity away
// from ybar and the liminf ratio bound (reported as "not refuted").
struct GaugeCheck {
  bool positive_away = true;
  bool ratio_not_refuted = true;
  double min_ratio = kInf;
};
GaugeCheck validate_gauge(const Gauge& gauge, int resolution = 101,
                          double radius = 1.0);

}  // namespace subreg
