#include "subreg/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace subreg {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kFdStep = 1e-6;  // central-difference step for fallback Jacobians

}  // namespace

// --- Modulation -----------------------------------------------------------

Modulation Modulation::holder(double q) {
  if (q <= 0.0 || q > 1.0) throw InputError("Holder exponent must lie in (0,1]");
  Modulation m;
  m.kind = Kind::Holder;
  m.q = q;
  return m;
}

Modulation Modulation::from_table(std::vector<std::pair<double, double>> pts) {
  if (pts.size() < 2) throw InputError("modulation table needs at least 2 points");
  std::sort(pts.begin(), pts.end());
  if (pts.front().first != 0.0 || pts.front().second != 0.0)
    throw InputError("modulation table must start at (0,0)");
  for (size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].first <= pts[i - 1].first || pts[i].second <= pts[i - 1].second)
      throw InputError("modulation table must be strictly increasing");
  }
  Modulation m;
  m.kind = Kind::Table;
  m.table = std::move(pts);
  return m;
}

double Modulation::value(double t) const {
  if (t < 0.0) throw DomainError("modulation evaluated at negative t");
  switch (kind) {
    case Kind::Identity:
      return t;
    case Kind::Holder:
      return t == 0.0 ? 0.0 : std::pow(t, q);
    case Kind::ArccosBranch:
      if (t < 0.5) return std::acos(1.0 - t);
      return kPi / 3.0 + (2.0 * t - 1.0) / std::sqrt(3.0);
    case Kind::Table: {
      if (t >= table.back().first) {
        const auto& a = table[table.size() - 2];
        const auto& b = table.back();
        double slope = (b.second - a.second) / (b.first - a.first);
        return b.second + slope * (t - b.first);
      }
      auto it = std::upper_bound(table.begin(), table.end(),
                                 std::make_pair(t, kInf));
      const auto& b = *it;
      const auto& a = *(it - 1);
      double w = (t - a.first) / (b.first - a.first);
      return a.second + w * (b.second - a.second);
    }
  }
  return 0.0;
}

double Modulation::deriv(double t) const {
  if (t < 0.0) throw DomainError("modulation derivative at negative t");
  switch (kind) {
    case Kind::Identity:
      return 1.0;
    case Kind::Holder:
      if (q == 1.0) return 1.0;
      if (t == 0.0) return kInf;
      return q * std::pow(t, q - 1.0);
    case Kind::ArccosBranch:
      if (t == 0.0) return kInf;
      if (t < 0.5) return 1.0 / std::sqrt(t * (2.0 - t));
      return 2.0 / std::sqrt(3.0);
    case Kind::Table: {
      size_t i = 1;
      while (i + 1 < table.size() && t >= table[i].first) ++i;
      const auto& a = table[i - 1];
      const auto& b = table[i];
      return (b.second - a.second) / (b.first - a.first);
    }
  }
  return 1.0;
}

std::optional<double> Modulation::holder_exponent() const {
  if (kind == Kind::Identity) return 1.0;
  if (kind == Kind::Holder) return q;
  return std::nullopt;
}

bool Modulation::convex_near_zero() const {
  switch (kind) {
    case Kind::Identity:
      return true;
    case Kind::Holder:
      return q == 1.0;
    case Kind::ArccosBranch:
      return false;
    case Kind::Table: {
      size_t n = std::min<size_t>(table.size(), 4);
      double prev = -kInf;
      for (size_t i = 1; i < n; ++i) {
        double s = (table[i].second - table[i - 1].second) /
                   (table[i].first - table[i - 1].first);
        if (s + 1e-12 < prev) return false;
        prev = s;
      }
      return true;
    }
  }
  return false;
}

std::string Modulation::describe() const {
  switch (kind) {
    case Kind::Identity: return "identity";
    case Kind::Holder: {
      std::ostringstream os;
      os << "holder(q=" << q << ")";
      return os.str();
    }
    case Kind::ArccosBranch: return "arccos-branch";
    case Kind::Table: return "table";
  }
  return "?";
}

VarthetaEstimate vartheta(const Modulation& phi,
                          const std::vector<double>& t_schedule) {
  if (auto q = phi.holder_exponent()) return {*q, *q, *q, true};
  if (t_schedule.size() < 3) throw InputError("vartheta schedule too short");
  for (size_t i = 1; i < t_schedule.size(); ++i)
    if (t_schedule[i] >= t_schedule[i - 1] || t_schedule[i] <= 0.0)
      throw InputError("vartheta schedule must decrease to 0");

  std::vector<double> ratios;
  ratios.reserve(t_schedule.size());
  for (double t : t_schedule) {
    double v = phi.value(t);
    if (v <= 0.0)
      throw InvariantViolation("phi(t) = 0 at positive t");
    double d = phi.deriv(t);
    ratios.push_back(d == kInf ? kInf : t * d / v);
  }
  size_t tail = std::max<size_t>(3, ratios.size() / 2);
  double lo_all = kInf, tail_min = kInf, tail_max = -kInf;
  for (size_t i = 0; i < ratios.size(); ++i) {
    lo_all = std::min(lo_all, ratios[i]);
    if (i + tail >= ratios.size()) {
      tail_min = std::min(tail_min, ratios[i]);
      tail_max = std::max(tail_max, ratios[i]);
    }
  }
  return {tail_min, lo_all, tail_max, false};
}

VarthetaEstimate vartheta(const Modulation& phi) {
  std::vector<double> grid;
  for (int k = 1; k <= 20; ++k) grid.push_back(std::pow(2.0, -k));
  return vartheta(phi, grid);
}

// --- Gauges ---------------------------------------------------------------

Gauge g_from_phi(const Modulation& phi, const Vec& ybar,
                 const NormedSpace& spaceY) {
  Gauge g;
  g.ybar = ybar;
  g.spaceY = spaceY;
  g.phi = phi;
  g.convex = phi.convex_near_zero();
  g.smooth_away_from_ref = spaceY.frechet_smooth();
  Modulation phi_copy = phi;
  Vec ybar_copy = ybar;
  NormedSpace sp = spaceY;
  g.value = [phi_copy, ybar_copy, sp](const Vec& y) {
    return phi_copy.value(dist(sp, y, ybar_copy));
  };
  g.subdiff = [phi_copy, ybar_copy, sp](const Vec& y) -> GaugeSubdiff {
    double d = dist(sp, y, ybar_copy);
    if (d == 0.0)
      throw DomainError("gauge subdifferential queried at the reference point");
    return {phi_copy.deriv(d), duality_mapping(sp, sub(y, ybar_copy))};
  };
  return g;
}

Gauge distance_gauge(const Vec& ybar, const NormedSpace& spaceY) {
  return g_from_phi(Modulation::identity(), ybar, spaceY);
}

GaugeCheck validate_gauge(const Gauge& gauge, int resolution, double radius) {
  GaugeCheck out;
  const NormedSpace& sp = gauge.spaceY;
  std::vector<Vec> dirs;
  for (int i = 0; i < sp.dim; ++i) {
    Vec e(static_cast<size_t>(sp.dim), 0.0);
    e[static_cast<size_t>(i)] = 1.0;
    dirs.push_back(e);
    e[static_cast<size_t>(i)] = -1.0;
    dirs.push_back(e);
  }
  for (int j = 0; j < 8; ++j) {
    double r = radius * std::pow(0.5, j);
    for (const auto& dir : dirs) {
      Vec y = add(gauge.ybar, scale(r, dir));
      double d = dist(sp, y, gauge.ybar);
      if (d == 0.0) continue;
      double v = gauge.value(y);
      if (v <= 0.0) out.positive_away = false;
      out.min_ratio = std::min(out.min_ratio, v / d);
    }
    (void)resolution;
  }
  out.ratio_not_refuted = out.min_ratio > 1e-9;
  return out;
}

// --- Convex constraints ----------------------------------------------------

ConvexConstraint ConvexConstraint::make_affine(Vec ax, Vec ay, double b) {
  ConvexConstraint c;
  c.affine = true;
  c.ax = std::move(ax);
  c.ay = std::move(ay);
  c.b = b;
  return c;
}

double ConvexConstraint::eval(const Vec& x, const Vec& y) const {
  if (affine) return dot(ax, x) + dot(ay, y) - b;
  return value(x, y);
}

std::pair<Vec, Vec> ConvexConstraint::gradient(const Vec& x, const Vec& y) const {
  if (affine) return {ax, ay};
  return grad(x, y);
}

// --- Mapping basics ---------------------------------------------------------

void validate_map(const SetValuedMap& map) {
  map.spaces.check(map.ref);
  if (!on_graph(map, map.ref))
    throw InputError("reference point is not on the graph");
  if (map.is_sampled()) {
    const auto& pts = map.sampled().points;
    if (pts.empty()) throw InputError("sampled graph is empty");
    std::set<std::pair<Vec, Vec>> seen;
    for (const auto& p : pts) {
      map.spaces.check(p);
      if (!seen.insert({p.x, p.y}).second)
        throw InputError("sampled graph contains duplicate points");
    }
  }
}

bool on_graph(const SetValuedMap& map, const ProductPoint& p, double tol) {
  map.spaces.check(p);
  if (map.is_smooth()) {
    Vec fy = map.smooth().eval(p.x);
    return dist(map.spaces.Y, fy, p.y) <= tol;
  }
  if (map.is_sampled()) {
    for (const auto& s : map.sampled().points)
      if (same_point(s, p)) return true;
    return false;
  }
  for (const auto& c : map.convex_graph().constraints)
    if (c.eval(p.x, p.y) > tol) return false;
  return true;
}

bool in_inverse_image(const SetValuedMap& map, const Vec& x) {
  if (map.is_smooth()) {
    Vec fy = map.smooth().eval(x);
    return dist(map.spaces.Y, fy, map.ref.y) <= kGraphTol;
  }
  if (map.is_sampled()) {
    for (const auto& s : map.sampled().points)
      if (s.x == x && s.y == map.ref.y) return true;
    return false;
  }
  for (const auto& c : map.convex_graph().constraints)
    if (c.eval(x, map.ref.y) > kGraphTol) return false;
  return true;
}

std::vector<Vec> jacobian_of(const SetValuedMap& map, const Vec& x) {
  const auto& sm = map.smooth();
  if (sm.jacobian) return sm.jacobian(x);
  // Central differences, h = 1e-6.
  int n = map.spaces.X.dim;
  int m = map.spaces.Y.dim;
  std::vector<Vec> J(static_cast<size_t>(m), Vec(static_cast<size_t>(n), 0.0));
  for (int j = 0; j < n; ++j) {
    Vec xp = x, xm = x;
    xp[static_cast<size_t>(j)] += kFdStep;
    xm[static_cast<size_t>(j)] -= kFdStep;
    Vec fp = sm.eval(xp), fm = sm.eval(xm);
    for (int i = 0; i < m; ++i)
      J[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          (fp[static_cast<size_t>(i)] - fm[static_cast<size_t>(i)]) / (2.0 * kFdStep);
  }
  return J;
}

// --- 1-d feasibility helpers for convex graphs -----------------------------

namespace {

// max_i c_i(x, y) as a function of one scalar slot; convex in that slot.
double convex_graph_margin(const ConvexGraph& g, const Vec& x, const Vec& y) {
  double m = -kInf;
  for (const auto& c : g.constraints) m = std::max(m, c.eval(x, y));
  return m;
}

struct Interval1D {
  double lo = 0.0, hi = 0.0;
  bool empty = true;
};

// Feasible set {t : m(t) <= 0} of a convex scalar function via golden-section
// minimization plus bisection for the crossings. `range` bounds the search.
template <typename Fn>
Interval1D convex_feasible_interval(Fn&& m, double lo, double hi) {
  auto golden_min = [&](double a, double b) {
    const double gr = 0.6180339887498949;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    for (int it = 0; it < 200 && (b - a) > 1e-14 * (1.0 + std::fabs(a) + std::fabs(b)); ++it) {
      if (m(c) < m(d)) {
        b = d;
      } else {
        a = c;
      }
      c = b - gr * (b - a);
      d = a + gr * (b - a);
    }
    return 0.5 * (a + b);
  };
  Interval1D out;
  double tstar = golden_min(lo, hi);
  double mstar = m(tstar);
  if (mstar > kGraphTol) return out;  // empty
  out.empty = false;
  // Lower endpoint.
  if (m(lo) <= kGraphTol) {
    out.lo = lo;
  } else {
    double a = lo, b = tstar;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (a + b);
      if (m(mid) > kGraphTol)
        a = mid;
      else
        b = mid;
      if (b - a <= 0.0) break;
    }
    out.lo = b;
  }
  // Upper endpoint.
  if (m(hi) <= kGraphTol) {
    out.hi = hi;
  } else {
    double a = tstar, b = hi;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (a + b);
      if (m(mid) > kGraphTol)
        b = mid;
      else
        a = mid;
      if (b - a <= 0.0) break;
    }
    out.hi = a;
  }
  return out;
}

// Exact feasible y-interval at fixed x when every constraint is affine in y.
bool affine_y_interval(const ConvexGraph& g, const Vec& x, double& lo, double& hi) {
  lo = -kInf;
  hi = kInf;
  for (const auto& c : g.constraints) {
    if (!c.affine) return false;
    double ay = c.ay.at(0);
    double rhs = c.b - dot(c.ax, x);
    if (ay > 0.0)
      hi = std::min(hi, rhs / ay);
    else if (ay < 0.0)
      lo = std::max(lo, rhs / ay);
    else if (rhs < -kGraphTol)
      return true;  // infeasible in x: empty interval signalled by lo > hi
  }
  return true;
}

Interval1D feasible_y_interval(const SetValuedMap& map, const Vec& x,
                               double ylo, double yhi) {
  const auto& g = map.convex_graph();
  if (map.spaces.Y.dim != 1)
    throw UnsupportedStructure("convex graphs are supported for dim Y = 1");
  bool all_affine = true;
  for (const auto& c : g.constraints) all_affine = all_affine && c.affine;
  // Smooth-in-x constraints that are affine in y still admit the exact form
  // when the y coefficient is constant; fall back to the numeric finder
  // otherwise.
  if (all_affine) {
    double lo, hi;
    affine_y_interval(g, x, lo, hi);
    Interval1D out;
    if (lo > hi) return out;
    out.empty = false;
    out.lo = std::max(lo, ylo);
    out.hi = std::min(hi, yhi);
    if (out.lo > out.hi) out.empty = true;
    return out;
  }
  auto m = [&](double t) { return convex_graph_margin(g, x, Vec{t}); };
  return convex_feasible_interval(m, ylo, yhi);
}

}  // namespace

// --- Inverse images ----------------------------------------------------------

double InverseImage::distance(const NormedSpace& X, const Vec& x) const {
  if (empty) return kInf;
  if (kind == Kind::Interval) {
    double t = x.at(0);
    if (t < lo) return lo - t;
    if (t > hi) return t - hi;
    return 0.0;
  }
  double best = kInf;
  for (const auto& u : xs) best = std::min(best, dist(X, x, u));
  return best;
}

InverseImage compute_inverse_image(const SetValuedMap& map, double window) {
  InverseImage inv;
  const Vec& xbar = map.ref.x;
  const Vec& ybar = map.ref.y;

  if (map.is_sampled()) {
    inv.kind = InverseImage::Kind::XList;
    for (const auto& p : map.sampled().points)
      if (p.y == ybar) inv.xs.push_back(p.x);
    inv.empty = inv.xs.empty();
    return inv;
  }

  if (map.is_convex_graph()) {
    if (map.spaces.X.dim != 1)
      throw UnsupportedStructure("convex-graph inverse images need dim X = 1");
    auto m = [&](double u) {
      return convex_graph_margin(map.convex_graph(), Vec{u}, ybar);
    };
    auto iv = convex_feasible_interval(m, xbar[0] - window, xbar[0] + window);
    inv.kind = InverseImage::Kind::Interval;
    inv.empty = iv.empty;
    inv.lo = iv.lo;
    inv.hi = iv.hi;
    return inv;
  }

  const auto& sm = map.smooth();
  inv.kind = InverseImage::Kind::Roots;
  int n = map.spaces.X.dim;
  if (n == 1) {
    const int grid = 4096;
    double lo = xbar[0] - window, hi = xbar[0] + window;
    double step = (hi - lo) / grid;
    auto resid = [&](double u) { return dist(map.spaces.Y, sm.eval(Vec{u}), ybar); };
    std::vector<double> roots;
    auto push_root = [&](double r) {
      for (double e : roots)
        if (std::fabs(e - r) <= 1e-9 * (1.0 + std::fabs(r))) return;
      roots.push_back(r);
    };
    if (map.spaces.Y.dim == 1) {
      auto s = [&](double u) { return sm.eval(Vec{u})[0] - ybar[0]; };
      double prev = s(lo);
      if (std::fabs(prev) <= 1e-12) push_root(lo);
      for (int i = 1; i <= grid; ++i) {
        double u = lo + i * step;
        double cur = s(u);
        if (std::fabs(cur) <= 1e-12) {
          push_root(u);
        } else if (prev * cur < 0.0) {
          double a = u - step, b = u;
          for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (a + b);
            double sm_ = s(mid);
            if (sm_ == 0.0) { a = b = mid; break; }
            if ((sm_ > 0.0) == (s(a) > 0.0))
              a = mid;
            else
              b = mid;
          }
          push_root(0.5 * (a + b));
        }
        prev = cur;
      }
      // Tangential roots (no sign change): refine local minima of the residual.
      double r_prev = resid(lo);
      double r_here = resid(lo + step);
      for (int i = 2; i <= grid; ++i) {
        double u = lo + i * step;
        double r_next = resid(u);
        if (r_here <= r_prev && r_here <= r_next && r_here < 1e-4) {
          const double gr = 0.6180339887498949;
          double a = u - 2.0 * step, b = u;
          double c = b - gr * (b - a), d = a + gr * (b - a);
          for (int it = 0; it < 160; ++it) {
            if (resid(c) < resid(d)) b = d; else a = c;
            c = b - gr * (b - a);
            d = a + gr * (b - a);
          }
          double m = 0.5 * (a + b);
          if (resid(m) <= kGraphTol) push_root(m);
        }
        r_prev = r_here;
        r_here = r_next;
      }
    } else {
      double r_prev = resid(lo), r_here = resid(lo + step);
      for (int i = 2; i <= grid; ++i) {
        double u = lo + i * step;
        double r_next = resid(u);
        if (r_here <= r_prev && r_here <= r_next && r_here < 1e-3) {
          const double gr = 0.6180339887498949;
          double a = u - 2.0 * step, b = u;
          double c = b - gr * (b - a), d = a + gr * (b - a);
          for (int it = 0; it < 160; ++it) {
            if (resid(c) < resid(d)) b = d; else a = c;
            c = b - gr * (b - a);
            d = a + gr * (b - a);
          }
          double m = 0.5 * (a + b);
          if (resid(m) <= kGraphTol) push_root(m);
        }
        r_prev = r_here;
        r_here = r_next;
      }
    }
    std::sort(roots.begin(), roots.end());
    for (double r : roots) inv.xs.push_back(Vec{r});
  } else {
    // Multi-dimensional: lattice seeding + Gauss-Newton refinement.
    const int per_axis = 33;
    std::vector<Vec> seeds;
    std::vector<int> idx(static_cast<size_t>(n), 0);
    while (true) {
      Vec u(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j)
        u[static_cast<size_t>(j)] =
            xbar[static_cast<size_t>(j)] - window +
            2.0 * window * idx[static_cast<size_t>(j)] / (per_axis - 1);
      if (dist(map.spaces.Y, sm.eval(u), ybar) < 10.0 * window / per_axis)
        seeds.push_back(u);
      int j = 0;
      while (j < n && ++idx[static_cast<size_t>(j)] == per_axis) {
        idx[static_cast<size_t>(j)] = 0;
        ++j;
      }
      if (j == n) break;
    }
    for (Vec u : seeds) {
      for (int it = 0; it < 60; ++it) {
        Vec r = sub(sm.eval(u), ybar);
        double rn = norm(map.spaces.Y, r);
        if (rn <= 1e-13) break;
        auto J = jacobian_of(map, u);
        // Normal equations J^T J s = -J^T r (tiny dims).
        int m = map.spaces.Y.dim;
        std::vector<Vec> A(static_cast<size_t>(n), Vec(static_cast<size_t>(n + 1), 0.0));
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b)
            for (int i2 = 0; i2 < m; ++i2)
              A[a][static_cast<size_t>(b)] += J[static_cast<size_t>(i2)][static_cast<size_t>(a)] *
                                              J[static_cast<size_t>(i2)][static_cast<size_t>(b)];
          for (int i2 = 0; i2 < m; ++i2)
            A[a][static_cast<size_t>(n)] -= J[static_cast<size_t>(i2)][static_cast<size_t>(a)] *
                                            r[static_cast<size_t>(i2)];
        }
        // Gaussian elimination.
        for (int col = 0; col < n; ++col) {
          int piv = col;
          for (int rr = col + 1; rr < n; ++rr)
            if (std::fabs(A[static_cast<size_t>(rr)][static_cast<size_t>(col)]) >
                std::fabs(A[static_cast<size_t>(piv)][static_cast<size_t>(col)]))
              piv = rr;
          std::swap(A[static_cast<size_t>(col)], A[static_cast<size_t>(piv)]);
          double diag = A[static_cast<size_t>(col)][static_cast<size_t>(col)];
          if (std::fabs(diag) < 1e-14) { diag = 1e-14; }
          for (int rr = 0; rr < n; ++rr) {
            if (rr == col) continue;
            double f = A[static_cast<size_t>(rr)][static_cast<size_t>(col)] / diag;
            for (int cc = col; cc <= n; ++cc)
              A[static_cast<size_t>(rr)][static_cast<size_t>(cc)] -=
                  f * A[static_cast<size_t>(col)][static_cast<size_t>(cc)];
          }
        }
        for (int a = 0; a < n; ++a)
          u[static_cast<size_t>(a)] += A[static_cast<size_t>(a)][static_cast<size_t>(n)] /
                                       A[static_cast<size_t>(a)][static_cast<size_t>(a)];
      }
      if (dist(map.spaces.Y, sm.eval(u), ybar) <= kGraphTol) {
        bool dup = false;
        for (const auto& e : inv.xs)
          if (dist(map.spaces.X, e, u) <= 1e-8) dup = true;
        if (!dup) inv.xs.push_back(u);
      }
    }
  }
  inv.empty = inv.xs.empty();
  return inv;
}

double dist_to_inverse_image(const SetValuedMap& map, const Vec& x,
                             double window) {
  if (window <= 0.0) window = dist(map.spaces.X, x, map.ref.x) * 10.0 + 1.0;
  InverseImage inv = compute_inverse_image(map, window);
  if (inv.empty) throw InputError("inverse image of ybar is empty in the window");
  return inv.distance(map.spaces.X, x);
}

// --- Graph sampling -----------------------------------------------------------

GraphSample graph_sample(const SetValuedMap& map, const ProductPoint& center,
                         double radius, int resolution) {
  if (radius < 0.0) throw InputError("radius must be nonnegative");
  map.spaces.check(center);
  GraphSample out;
  auto within = [&](const ProductPoint& p) {
    return rho_dist(map.spaces, p, center, 1.0) <= radius;
  };

  if (map.is_sampled()) {
    bool center_seen = false;
    for (const auto& p : map.sampled().points) {
      if (within(p)) {
        out.points.push_back(p);
        if (same_point(p, center)) center_seen = true;
      }
    }
    if (!center_seen) {
      if (!on_graph(map, center))
        throw InputError("graph_sample center is not on the sampled graph");
      out.points.insert(out.points.begin(), center);
    }
    out.degenerate = out.points.size() <= 1;
    return out;
  }

  if (radius == 0.0) {
    out.points.push_back(center);
    out.degenerate = true;
    return out;
  }

  if (map.is_smooth()) {
    const auto& sm = map.smooth();
    int n = map.spaces.X.dim;
    int per_axis = n == 1 ? resolution
                          : std::max(3, static_cast<int>(std::ceil(
                                            std::pow(resolution, 1.0 / n))));
    out.points.push_back(center);
    std::vector<int> idx(static_cast<size_t>(n), 0);
    while (true) {
      Vec u(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j)
        u[static_cast<size_t>(j)] =
            center.x[static_cast<size_t>(j)] +
            radius * (2.0 * idx[static_cast<size_t>(j)] / (per_axis - 1) - 1.0);
      ProductPoint p{u, sm.eval(u)};
      if (within(p) && !same_point(p, center)) out.points.push_back(std::move(p));
      int j = 0;
      while (j < n && ++idx[static_cast<size_t>(j)] == per_axis) {
        idx[static_cast<size_t>(j)] = 0;
        ++j;
      }
      if (j == n) break;
    }
    out.degenerate = out.points.size() <= 1;
    return out;
  }

  // Convex graph: boundary points plus an interior lattice, dim X = dim Y = 1.
  if (map.spaces.X.dim != 1 || map.spaces.Y.dim != 1)
    throw UnsupportedStructure("convex-graph sampling needs dim X = dim Y = 1");
  out.points.push_back(center);
  int res_y = std::max(3, std::min(resolution, 33));
  for (int i = 0; i < resolution; ++i) {
    double u = center.x[0] + radius * (2.0 * i / (resolution - 1) - 1.0);
    auto iv = feasible_y_interval(map, Vec{u}, center.y[0] - radius,
                                  center.y[0] + radius);
    if (iv.empty) continue;
    ProductPoint boundary{Vec{u}, Vec{iv.lo}};
    if (within(boundary) && !same_point(boundary, center))
      out.points.push_back(boundary);
    for (int k = 1; k < res_y; ++k) {
      double v = iv.lo + (iv.hi - iv.lo) * k / (res_y - 1);
      ProductPoint p{Vec{u}, Vec{v}};
      if (within(p) && !same_point(p, center)) out.points.push_back(p);
    }
  }
  out.degenerate = out.points.size() <= 1;
  return out;
}

double dist_ybar_to_image(const SetValuedMap& map, const Vec& x) {
  const Vec& ybar = map.ref.y;
  if (map.is_smooth()) return dist(map.spaces.Y, map.smooth().eval(x), ybar);
  if (map.is_sampled()) {
    double best = kInf;
    for (const auto& p : map.sampled().points)
      if (p.x == x) best = std::min(best, dist(map.spaces.Y, p.y, ybar));
    return best;
  }
  auto iv = feasible_y_interval(map, x, ybar[0] - 1e6, ybar[0] + 1e6);
  if (iv.empty) return kInf;
  double t = ybar[0];
  if (t < iv.lo) return iv.lo - t;
  if (t > iv.hi) return t - iv.hi;
  return 0.0;
}

// --- Lifted function -----------------------------------------------------------

double LiftedFunction::operator()(const ProductPoint& p) const {
  if (!on_graph(*map, p)) return kInf;
  return gauge->value(p.y);
}

LiftedFunction lift(const SetValuedMap& map, const Gauge& gauge) {
  return {&map, &gauge};
}

}  // namespace subreg
