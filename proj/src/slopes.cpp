#include "subreg/slopes.hpp"

#include <algorithm>
#include <cmath>

namespace subreg {

std::string family_name(SlopeFamily f) {
  switch (f) {
    case SlopeFamily::Lifted: return "f";
    case SlopeFamily::Gauge: return "g";
    case SlopeFamily::Phi: return "phi";
  }
  return "?";
}

std::string variant_name(StrictVariant v) {
  switch (v) {
    case StrictVariant::Plain: return "strict";
    case StrictVariant::Modified: return "modified_strict";
    case StrictVariant::Uniform: return "uniform_strict";
  }
  return "?";
}

namespace {

// Keep (best value, lexicographically smallest attaining point).
struct MaxTracker {
  double best = -kInf;
  std::optional<ProductPoint> witness;
  bool seen = false;

  void offer(double v, const ProductPoint& p) {
    seen = true;
    if (v > best || (v == best && (!witness || lex_less(p, *witness)))) {
      best = v;
      witness = p;
    }
  }
};

struct MinTracker {
  double best = kInf;
  std::optional<ProductPoint> witness;
  bool seen = false;

  void offer(double v, const ProductPoint& p) {
    seen = true;
    if (v < best || (v == best && (!witness || lex_less(p, *witness)))) {
      best = v;
      witness = p;
    }
  }
};

enum class Numerator { LiftedDrop, GaugeDrop, DistDrop, PhiDiff };

// The four numerators appearing in the slope displays. `PhiDiff` is signed;
// the others carry the positive-part clamp.
double slope_numerator(Numerator kind, const SetValuedMap& map,
                       const Gauge& gauge, const ProductPoint& p,
                       const ProductPoint& q) {
  switch (kind) {
    case Numerator::LiftedDrop: {
      LiftedFunction f{&map, &gauge};
      double fq = f(q);
      if (fq == kInf) return 0.0;
      return plus_part(f(p) - fq);
    }
    case Numerator::GaugeDrop:
      return plus_part(gauge.value(p.y) - gauge.value(q.y));
    case Numerator::DistDrop:
      return plus_part(dist(map.spaces.Y, p.y, map.ref.y) -
                       dist(map.spaces.Y, q.y, map.ref.y));
    case Numerator::PhiDiff: {
      const Modulation& phi = *gauge.phi;
      return phi.value(dist(map.spaces.Y, p.y, map.ref.y)) -
             phi.value(dist(map.spaces.Y, q.y, map.ref.y));
    }
  }
  return 0.0;
}

// sup of numerator/d_rho over a fixed finite competitor set.
SlopeEstimate sup_over(const SetValuedMap& map, const Gauge& gauge,
                       Numerator kind, const ProductPoint& p, double rho,
                       const std::vector<ProductPoint>& competitors) {
  MaxTracker t;
  for (const auto& q : competitors) {
    if (same_point(q, p)) continue;
    double num = slope_numerator(kind, map, gauge, p, q);
    double den = rho_dist(map.spaces, p, q, rho);
    auto r = guarded_ratio(num, den);
    if (r) t.offer(*r, q);
  }
  SlopeEstimate out;
  out.rho = rho;
  if (!t.seen) {
    out.value = out.lower = out.upper = 0.0;
    out.vacuous = true;
    out.note = "no competitors";
    return out;
  }
  out.value = out.lower = out.upper = t.best;
  out.witness = t.witness;
  return out;
}

// limsup realization of a local slope at p: finite surrogate for sampled
// graphs; nested shrinking radii for smooth/convex graphs, with the final
// level reported as the value and the cross-level spread as the bracket.
SlopeEstimate local_slope(const SetValuedMap& map, const Gauge& gauge,
                          Numerator kind, const ProductPoint& p, double rho,
                          const SamplingConfig& cfg) {
  if (map.is_sampled()) {
    GraphSample s = graph_sample(map, p, cfg.radius, cfg.resolution);
    return sup_over(map, gauge, kind, p, rho, s.points);
  }
  double dref = dist(map.spaces.X, p.x, map.ref.x);
  double base = cfg.radius / 8.0;
  if (dref > 0.0) base = std::min(base, dref / 4.0);
  base = std::max(base, 1e-7);

  SlopeEstimate out;
  out.rho = rho;
  double lo = kInf, hi = -kInf;
  bool any = false;
  for (int j = 0; j <= cfg.levels; ++j) {
    double r = base * std::pow(0.5, j);
    GraphSample s = graph_sample(map, p, r, cfg.local_resolution);
    SlopeEstimate level = sup_over(map, gauge, kind, p, rho, s.points);
    if (level.vacuous) continue;
    any = true;
    lo = std::min(lo, level.value);
    hi = std::max(hi, level.value);
    out.value = level.value;  // final level wins
    out.witness = level.witness;
  }
  if (!any) {
    out.value = out.lower = out.upper = 0.0;
    out.vacuous = true;
    out.note = "isolated point";
    return out;
  }
  out.lower = lo;
  out.upper = hi;
  return out;
}

double xdist_to_ref(const SetValuedMap& map, const ProductPoint& p) {
  return dist(map.spaces.X, p.x, map.ref.x);
}

}  // namespace

GraphSample window_sample(const SetValuedMap& map, const SamplingConfig& cfg,
                          double min_radius) {
  cfg.validate();
  double r = std::max(cfg.radius, min_radius);
  return graph_sample(map, map.ref, r, cfg.resolution);
}

std::vector<ProductPoint> admissible_points(const SetValuedMap& map,
                                            const GraphSample& window,
                                            double rho) {
  std::vector<ProductPoint> out;
  for (const auto& p : window.points) {
    if (dist(map.spaces.X, p.x, map.ref.x) >= rho) continue;
    if (dist(map.spaces.Y, p.y, map.ref.y) >= rho) continue;
    if (in_inverse_image(map, p.x)) continue;
    out.push_back(p);
  }
  return out;
}

SlopeEstimate lifted_rho_slope(const SetValuedMap& map, const Gauge& gauge,
                               const ProductPoint& p, double rho,
                               const SamplingConfig& cfg) {
  LiftedFunction f{&map, &gauge};
  if (f(p) == kInf) throw InputError("slope requested at a point with f = +inf");
  return local_slope(map, gauge, Numerator::LiftedDrop, p, rho, cfg);
}

SlopeEstimate rho_slope(const SetValuedMap& map, const ProductPoint& p,
                        double rho, const SamplingConfig& cfg) {
  if (!on_graph(map, p)) throw InputError("rho_slope requires a graph point");
  Gauge g = distance_gauge(map.ref.y, map.spaces.Y);
  return local_slope(map, g, Numerator::DistDrop, p, rho, cfg);
}

GaugeSlopeResult gauge_rho_slope(const SetValuedMap& map, const Gauge& gauge,
                                 const ProductPoint& p, double rho,
                                 const SamplingConfig& cfg) {
  if (!on_graph(map, p)) throw InputError("gauge slope requires a graph point");
  GaugeSlopeResult out;
  out.direct = local_slope(map, gauge, Numerator::GaugeDrop, p, rho, cfg);
  if (gauge.phi) {
    double d = dist(map.spaces.Y, p.y, map.ref.y);
    if (d > 0.0) {
      double dphi = gauge.phi->deriv(d);
      SlopeEstimate base = local_slope(map, gauge, Numerator::DistDrop, p, rho, cfg);
      if (dphi == kInf)
        out.factorized = base.value > 0.0 ? kInf : 0.0;
      else
        out.factorized = dphi * base.value;
    }
  }
  return out;
}

SlopeEstimate nonlocal_rho_slope(const SetValuedMap& map, const Gauge& gauge,
                                 const ProductPoint& p, double rho,
                                 const SamplingConfig& cfg) {
  if (!on_graph(map, p)) throw InputError("nonlocal slope requires a graph point");
  GraphSample w = window_sample(map, cfg);
  return sup_over(map, gauge, Numerator::GaugeDrop, p, rho, w.points);
}

SlopeEstimate phi_nonlocal_rho_slope(const SetValuedMap& map,
                                     const Modulation& phi,
                                     const ProductPoint& p, double rho,
                                     const SamplingConfig& cfg) {
  if (!on_graph(map, p)) throw InputError("nonlocal slope requires a graph point");
  Gauge g = g_from_phi(phi, map.ref.y, map.spaces.Y);
  GraphSample w = window_sample(map, cfg);
  return sup_over(map, g, Numerator::PhiDiff, p, rho, w.points);
}

namespace {

// Inner quantity of one strict-slope variant at an admissible point.
double strict_inner(const SetValuedMap& map, const Gauge& gauge,
                    SlopeFamily family, StrictVariant variant,
                    const ProductPoint& p, double rho,
                    const SamplingConfig& cfg,
                    const std::vector<ProductPoint>& window) {
  double slope_part = 0.0;
  switch (family) {
    case SlopeFamily::Lifted:
      if (variant == StrictVariant::Uniform)
        slope_part = sup_over(map, gauge, Numerator::LiftedDrop, p, rho, window).value;
      else
        slope_part = local_slope(map, gauge, Numerator::LiftedDrop, p, rho, cfg).value;
      break;
    case SlopeFamily::Gauge:
      if (variant == StrictVariant::Uniform)
        slope_part = sup_over(map, gauge, Numerator::GaugeDrop, p, rho, window).value;
      else
        slope_part = local_slope(map, gauge, Numerator::GaugeDrop, p, rho, cfg).value;
      break;
    case SlopeFamily::Phi: {
      if (variant == StrictVariant::Uniform) {
        slope_part = sup_over(map, gauge, Numerator::PhiDiff, p, rho, window).value;
      } else {
        double d = dist(map.spaces.Y, p.y, map.ref.y);
        double dphi = gauge.phi->deriv(d);
        double base = local_slope(map, gauge, Numerator::DistDrop, p, rho, cfg).value;
        slope_part = (dphi == kInf) ? (base > 0.0 ? kInf : 0.0) : dphi * base;
      }
      break;
    }
  }
  if (variant != StrictVariant::Modified) return slope_part;

  double num = gauge.value(p.y);  // f(x,y) = g(y) = phi(d(y,ybar)) on the graph
  auto extra = guarded_ratio(num, xdist_to_ref(map, p));
  if (!extra) return slope_part;
  return std::max(slope_part, *extra);
}

}  // namespace

SlopeEstimate strict_slope(const SetValuedMap& map, const Gauge& gauge,
                           SlopeFamily family, StrictVariant variant,
                           const RhoSchedule& schedule,
                           const SamplingConfig& cfg) {
  if (family == SlopeFamily::Phi && !gauge.phi)
    throw InputError("phi-family strict slope needs a modulation-backed gauge");
  GraphSample window = window_sample(map, cfg, schedule.rho0);

  SlopeEstimate out;
  bool any = false;
  double lo = kInf, hi = -kInf;
  for (double rho : schedule.values()) {
    auto adm = admissible_points(map, window, rho);
    double vk;
    if (adm.empty()) {
      vk = kInf;
    } else {
      MinTracker t;
      for (const auto& p : adm)
        t.offer(strict_inner(map, gauge, family, variant, p, rho, cfg, window.points), p);
      vk = t.best;
      out.witness = t.witness;
      any = true;
    }
    out.trajectory.emplace_back(rho, vk);
    lo = std::min(lo, vk);
    hi = std::max(hi, vk);
    out.rho = rho;
    out.value = vk;
  }
  out.lower = lo;
  out.upper = hi;
  if (!any) {
    out.vacuous = true;
    out.note = "no admissible points at any schedule step";
  } else if (out.value == kInf) {
    out.note = "admissible set empty at the finest rho";
  }
  return out;
}

namespace {

// liminf over x -> xbar of a per-point ratio: plain min for sampled graphs,
// nested shrinking x-windows otherwise (value at the finest nonempty level,
// cross-level spread as the bracket).
template <typename Pred, typename Ratio>
SlopeEstimate nested_liminf(const SetValuedMap& map, const GraphSample& window,
                            const SamplingConfig& cfg, Pred admissible,
                            Ratio ratio) {
  SlopeEstimate out;
  if (map.is_sampled()) {
    MinTracker t;
    for (const auto& p : window.points) {
      if (!admissible(p)) continue;
      auto r = ratio(p);
      if (r) t.offer(*r, p);
    }
    if (!t.seen) {
      out.value = out.lower = out.upper = kInf;
      out.vacuous = true;
      out.note = "no admissible points";
      return out;
    }
    out.value = out.lower = out.upper = t.best;
    out.witness = t.witness;
    return out;
  }

  double lo = kInf, hi = -kInf;
  bool any = false;
  for (int j = 0; j <= cfg.levels; ++j) {
    double R = cfg.radius * std::pow(0.5, j);
    MinTracker t;
    for (const auto& p : window.points) {
      if (dist(map.spaces.X, p.x, map.ref.x) > R) continue;
      if (!admissible(p)) continue;
      auto r = ratio(p);
      if (r) t.offer(*r, p);
    }
    if (!t.seen) continue;
    any = true;
    lo = std::min(lo, t.best);
    hi = std::max(hi, t.best);
    out.value = t.best;
    out.witness = t.witness;
  }
  if (!any) {
    out.value = out.lower = out.upper = kInf;
    out.vacuous = true;
    out.note = "no admissible points";
    return out;
  }
  out.lower = lo;
  out.upper = hi;
  return out;
}

}  // namespace

SlopeEstimate error_bound_modulus(const SetValuedMap& map, const Gauge& gauge,
                                  const SamplingConfig& cfg) {
  LiftedFunction f{&map, &gauge};
  if (f(map.ref) != 0.0)
    throw InputError("error bound modulus requires f(xbar,ybar) = 0");
  GraphSample window = window_sample(map, cfg);
  double search = cfg.window > 0.0 ? cfg.window : cfg.radius * 10.0 + 1.0;
  InverseImage inv = compute_inverse_image(map, search);
  if (inv.empty) throw InputError("S(f) is empty in the search window");

  return nested_liminf(
      map, window, cfg,
      [&](const ProductPoint& p) { return gauge.value(p.y) > 0.0; },
      [&](const ProductPoint& p) {
        return guarded_ratio(gauge.value(p.y), inv.distance(map.spaces.X, p.x));
      });
}

SlopeEstimate subregularity_modulus(const SetValuedMap& map, SlopeFamily family,
                                    const Gauge& gauge,
                                    const SamplingConfig& cfg) {
  if (!on_graph(map, map.ref))
    throw InputError("reference point must be on the graph");
  if (family == SlopeFamily::Phi && !gauge.phi)
    throw InputError("phi-family modulus needs a modulation-backed gauge");
  GraphSample window = window_sample(map, cfg);
  double search = cfg.window > 0.0 ? cfg.window : cfg.radius * 10.0 + 1.0;
  InverseImage inv = compute_inverse_image(map, search);
  if (inv.empty) throw InputError("inverse image empty in the search window");

  auto admissible = [&](const ProductPoint& p) {
    return !in_inverse_image(map, p.x);
  };
  if (family == SlopeFamily::Phi) {
    const Modulation& phi = *gauge.phi;
    return nested_liminf(map, window, cfg, admissible,
                         [&](const ProductPoint& p) {
                           double dy = dist_ybar_to_image(map, p.x);
                           return guarded_ratio(phi.value(dy),
                                                inv.distance(map.spaces.X, p.x));
                         });
  }
  return nested_liminf(map, window, cfg, admissible,
                       [&](const ProductPoint& p) {
                         return guarded_ratio(gauge.value(p.y),
                                              inv.distance(map.spaces.X, p.x));
                       });
}

SlopeEstimate liminf_gauge_over_xdist(const SetValuedMap& map,
                                      const Gauge& gauge,
                                      const SamplingConfig& cfg) {
  GraphSample window = window_sample(map, cfg);
  return nested_liminf(
      map, window, cfg,
      [&](const ProductPoint& p) { return !in_inverse_image(map, p.x); },
      [&](const ProductPoint& p) {
        return guarded_ratio(gauge.value(p.y), xdist_to_ref(map, p));
      });
}

}  // namespace subreg
