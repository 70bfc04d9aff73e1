#include "subreg/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace subreg::oracle {

namespace {

const std::vector<ProductPoint>& pts(const SetValuedMap& map) {
  if (!map.is_sampled())
    throw InputError("the oracle evaluates sampled graphs only");
  return map.sampled().points;
}

bool x_in_inverse(const SetValuedMap& map, const Vec& x) {
  for (const auto& s : pts(map))
    if (s.x == x && s.y == map.ref.y) return true;
  return false;
}

double dist_x_to_inverse(const SetValuedMap& map, const Vec& x) {
  double best = kInf;
  for (const auto& s : pts(map))
    if (s.y == map.ref.y) best = std::min(best, dist(map.spaces.X, x, s.x));
  return best;
}

double dist_ybar_to_image_at(const SetValuedMap& map, const Vec& x) {
  double best = kInf;
  for (const auto& s : pts(map))
    if (s.x == x) best = std::min(best, dist(map.spaces.Y, s.y, map.ref.y));
  return best;
}

// Deterministic max/min with lexicographic tie-break.
struct MaxAcc {
  double v = -kInf;
  std::optional<ProductPoint> at;
  bool seen = false;
  void offer(double val, const ProductPoint& p) {
    seen = true;
    if (val > v || (val == v && (!at || lex_less(p, *at)))) {
      v = val;
      at = p;
    }
  }
};
struct MinAcc {
  double v = kInf;
  std::optional<ProductPoint> at;
  bool seen = false;
  void offer(double val, const ProductPoint& p) {
    seen = true;
    if (val < v || (val == v && (!at || lex_less(p, *at)))) {
      v = val;
      at = p;
    }
  }
};

enum class Kind { Lifted, Gauge, Dist, PhiDiff };

double numerator(Kind kind, const SetValuedMap& map, const Gauge& gauge,
                 const ProductPoint& p, const ProductPoint& q) {
  switch (kind) {
    case Kind::Lifted: {
      // f(q) is finite on every sample point, so the indicator never bites.
      double fq = gauge.value(q.y);
      return plus_part(gauge.value(p.y) - fq);
    }
    case Kind::Gauge:
      return plus_part(gauge.value(p.y) - gauge.value(q.y));
    case Kind::Dist:
      return plus_part(dist(map.spaces.Y, p.y, map.ref.y) -
                       dist(map.spaces.Y, q.y, map.ref.y));
    case Kind::PhiDiff:
      return gauge.phi->value(dist(map.spaces.Y, p.y, map.ref.y)) -
             gauge.phi->value(dist(map.spaces.Y, q.y, map.ref.y));
  }
  return 0.0;
}

// max over sample points within `radius` of p (q != p) of numerator / d_rho.
MaxAcc sup_ratio(Kind kind, const SetValuedMap& map, const Gauge& gauge,
                 const ProductPoint& p, double rho, double radius) {
  MaxAcc acc;
  for (const auto& q : pts(map)) {
    if (same_point(q, p)) continue;
    if (rho_dist(map.spaces, q, p, 1.0) > radius) continue;
    double num = numerator(kind, map, gauge, p, q);
    double den = rho_dist(map.spaces, p, q, rho);
    auto r = guarded_ratio(num, den);
    if (r) acc.offer(*r, q);
  }
  return acc;
}

// max over sample points within `radius` of the REFERENCE (q != p): the
// nonlocal (window) supremum.
MaxAcc window_sup_ratio(Kind kind, const SetValuedMap& map, const Gauge& gauge,
                        const ProductPoint& p, double rho, double radius) {
  MaxAcc acc;
  for (const auto& q : pts(map)) {
    if (same_point(q, p)) continue;
    if (rho_dist(map.spaces, q, map.ref, 1.0) > radius) continue;
    double num = numerator(kind, map, gauge, p, q);
    double den = rho_dist(map.spaces, p, q, rho);
    auto r = guarded_ratio(num, den);
    if (r) acc.offer(*r, q);
  }
  return acc;
}

ExhaustiveResult pointwise(const std::string& id, Kind kind, bool window_form,
                           const SetValuedMap& map, const Gauge& gauge,
                           const OracleParams& params, const ProductPoint& p) {
  MaxAcc acc = window_form
                   ? window_sup_ratio(kind, map, gauge, p, params.rho, params.radius)
                   : sup_ratio(kind, map, gauge, p, params.rho, params.radius);
  ExhaustiveResult out;
  out.quantity = id;
  if (!acc.seen) {
    out.value = 0.0;
    out.vacuous = true;
    return out;
  }
  out.value = acc.v;
  out.attaining = acc.at;
  return out;
}

struct StrictSpec {
  Kind kind;
  bool uniform;
  bool modified;
  bool phi_scaled;  // multiply the local part by phi'(d(y,ybar))
};

ExhaustiveResult strict(const std::string& id, const StrictSpec& spec,
                        const SetValuedMap& map, const Gauge& gauge,
                        const OracleParams& params) {
  ExhaustiveResult out;
  out.quantity = id;
  double window_radius = std::max(params.radius, params.schedule.rho0);
  bool any = false;
  for (double rho : params.schedule.values()) {
    MinAcc level;
    for (const auto& p : pts(map)) {
      if (rho_dist(map.spaces, p, map.ref, 1.0) > window_radius) continue;
      if (dist(map.spaces.X, p.x, map.ref.x) >= rho) continue;
      if (dist(map.spaces.Y, p.y, map.ref.y) >= rho) continue;
      if (x_in_inverse(map, p.x)) continue;

      double inner;
      if (spec.uniform) {
        MaxAcc acc = window_sup_ratio(spec.kind, map, gauge, p, rho, window_radius);
        inner = acc.seen ? acc.v : 0.0;
      } else {
        MaxAcc acc = sup_ratio(spec.kind, map, gauge, p, rho, params.radius);
        double base = acc.seen ? acc.v : 0.0;
        if (spec.phi_scaled) {
          double d = dist(map.spaces.Y, p.y, map.ref.y);
          double dphi = gauge.phi->deriv(d);
          inner = (dphi == kInf) ? (base > 0.0 ? kInf : 0.0) : dphi * base;
        } else {
          inner = base;
        }
      }
      if (spec.modified) {
        auto extra = guarded_ratio(gauge.value(p.y),
                                   dist(map.spaces.X, p.x, map.ref.x));
        if (extra) inner = std::max(inner, *extra);
      }
      level.offer(inner, p);
    }
    double vk = level.seen ? level.v : kInf;
    if (level.seen) {
      any = true;
      out.attaining = level.at;
    }
    out.trajectory.emplace_back(rho, vk);
    out.value = vk;
  }
  out.vacuous = !any;
  return out;
}

ExhaustiveResult min_ratio(const std::string& id, const SetValuedMap& map,
                           const OracleParams& params,
                           const std::function<bool(const ProductPoint&)>& admissible,
                           const std::function<std::optional<double>(const ProductPoint&)>& ratio) {
  ExhaustiveResult out;
  out.quantity = id;
  MinAcc acc;
  for (const auto& p : pts(map)) {
    if (rho_dist(map.spaces, p, map.ref, 1.0) > params.radius) continue;
    if (!admissible(p)) continue;
    auto r = ratio(p);
    if (r) acc.offer(*r, p);
  }
  if (!acc.seen) {
    out.value = kInf;
    out.vacuous = true;
    return out;
  }
  out.value = acc.v;
  out.attaining = acc.at;
  return out;
}

}  // namespace

std::vector<std::string> pointwise_quantities() {
  return {"lifted_rho_slope", "gauge_rho_slope", "rho_slope",
          "nonlocal_rho_slope", "phi_nonlocal_rho_slope"};
}

std::vector<std::string> reference_quantities() {
  return {"strict_f",   "modified_strict_f",   "uniform_strict_f",
          "strict_g",   "modified_strict_g",   "uniform_strict_g",
          "strict_phi", "modified_strict_phi", "uniform_strict_phi",
          "er_modulus", "sr_f",                "sr_g",
          "sr_phi",     "liminf_gauge_over_xdist"};
}

ExhaustiveResult exhaustive_slope(const std::string& id,
                                  const SetValuedMap& map, const Gauge& gauge,
                                  const OracleParams& params,
                                  const ProductPoint* at) {
  if ((id == "phi_nonlocal_rho_slope" || id.find("phi") != std::string::npos) &&
      !gauge.phi)
    throw InputError("phi-family oracle quantity needs a modulation-backed gauge");

  if (id == "lifted_rho_slope")
    return pointwise(id, Kind::Lifted, false, map, gauge, params, *at);
  if (id == "gauge_rho_slope")
    return pointwise(id, Kind::Gauge, false, map, gauge, params, *at);
  if (id == "rho_slope")
    return pointwise(id, Kind::Dist, false, map, gauge, params, *at);
  if (id == "nonlocal_rho_slope")
    return pointwise(id, Kind::Gauge, true, map, gauge, params, *at);
  if (id == "phi_nonlocal_rho_slope")
    return pointwise(id, Kind::PhiDiff, true, map, gauge, params, *at);

  if (id == "strict_f")
    return strict(id, {Kind::Lifted, false, false, false}, map, gauge, params);
  if (id == "modified_strict_f")
    return strict(id, {Kind::Lifted, false, true, false}, map, gauge, params);
  if (id == "uniform_strict_f")
    return strict(id, {Kind::Lifted, true, false, false}, map, gauge, params);
  if (id == "strict_g")
    return strict(id, {Kind::Gauge, false, false, false}, map, gauge, params);
  if (id == "modified_strict_g")
    return strict(id, {Kind::Gauge, false, true, false}, map, gauge, params);
  if (id == "uniform_strict_g")
    return strict(id, {Kind::Gauge, true, false, false}, map, gauge, params);
  if (id == "strict_phi")
    return strict(id, {Kind::Dist, false, false, true}, map, gauge, params);
  if (id == "modified_strict_phi")
    return strict(id, {Kind::Dist, false, true, true}, map, gauge, params);
  if (id == "uniform_strict_phi")
    return strict(id, {Kind::PhiDiff, true, false, false}, map, gauge, params);

  if (id == "er_modulus") {
    return min_ratio(id, map, params,
                     [&](const ProductPoint& p) { return gauge.value(p.y) > 0.0; },
                     [&](const ProductPoint& p) {
                       return guarded_ratio(gauge.value(p.y),
                                            dist_x_to_inverse(map, p.x));
                     });
  }
  if (id == "sr_f" || id == "sr_g") {
    return min_ratio(id, map, params,
                     [&](const ProductPoint& p) { return !x_in_inverse(map, p.x); },
                     [&](const ProductPoint& p) {
                       return guarded_ratio(gauge.value(p.y),
                                            dist_x_to_inverse(map, p.x));
                     });
  }
  if (id == "sr_phi") {
    return min_ratio(id, map, params,
                     [&](const ProductPoint& p) { return !x_in_inverse(map, p.x); },
                     [&](const ProductPoint& p) {
                       double dy = dist_ybar_to_image_at(map, p.x);
                       return guarded_ratio(gauge.phi->value(dy),
                                            dist_x_to_inverse(map, p.x));
                     });
  }
  if (id == "liminf_gauge_over_xdist") {
    return min_ratio(id, map, params,
                     [&](const ProductPoint& p) { return !x_in_inverse(map, p.x); },
                     [&](const ProductPoint& p) {
                       return guarded_ratio(gauge.value(p.y),
                                            dist(map.spaces.X, p.x, map.ref.x));
                     });
  }
  throw InputError("unknown oracle quantity: " + id);
}

ImplicationTruth exhaustive_implication_truth(const SetValuedMap& map,
                                              const Gauge& gauge,
                                              const std::string& source,
                                              const std::string& target,
                                              double gamma,
                                              const OracleParams& params) {
  auto holds = [&](const std::string& letter) {
    std::string q;
    if (letter == "a") q = "sr_g";
    else if (letter == "b") q = "uniform_strict_g";
    else if (letter == "c") q = "liminf_gauge_over_xdist";
    else if (letter == "d") q = "strict_g";
    else if (letter == "e") q = "modified_strict_g";
    else throw InputError("oracle implication letters are restricted to a..e");
    return exhaustive_slope(q, map, gauge, params).value > gamma;
  };
  ImplicationTruth out;
  out.source_holds = holds(source);
  out.target_holds = holds(target);
  out.consistent = !out.source_holds || out.target_holds;
  return out;
}

}  // namespace subreg::oracle
