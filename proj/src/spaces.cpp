#include "subreg/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace subreg {

std::string format_extended(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

NormedSpace NormedSpace::p_norm(int dim, double p) {
  if (p < 1.0) throw InputError("p-norm requires p >= 1");
  return {dim, NormKind::P, p};
}

NormedSpace NormedSpace::dual() const {
  switch (kind) {
    case NormKind::Euclidean:
      return euclidean(dim);
    case NormKind::Max:
      return p_norm(dim, 1.0);
    case NormKind::P:
      if (p == 1.0) return max_norm(dim);
      return p_norm(dim, p / (p - 1.0));
  }
  return euclidean(dim);
}

std::string NormedSpace::describe() const {
  std::ostringstream os;
  os << "R^" << dim;
  switch (kind) {
    case NormKind::Euclidean: os << " (euclidean)"; break;
    case NormKind::Max: os << " (max)"; break;
    case NormKind::P: os << " (l" << p << ")"; break;
  }
  return os.str();
}

static void check_dim(const NormedSpace& space, const Vec& v) {
  if (static_cast<int>(v.size()) != space.dim)
    throw InputError("dimension mismatch: expected " + std::to_string(space.dim) +
                     ", got " + std::to_string(v.size()));
}

double norm(const NormedSpace& space, const Vec& v) {
  check_dim(space, v);
  switch (space.kind) {
    case NormKind::Euclidean: {
      double s = 0.0;
      for (double c : v) s += c * c;
      return std::sqrt(s);
    }
    case NormKind::Max: {
      double m = 0.0;
      for (double c : v) m = std::max(m, std::fabs(c));
      return m;
    }
    case NormKind::P: {
      double s = 0.0;
      for (double c : v) s += std::pow(std::fabs(c), space.p);
      return std::pow(s, 1.0 / space.p);
    }
  }
  return 0.0;
}

double dist(const NormedSpace& space, const Vec& a, const Vec& b) {
  return norm(space, sub(a, b));
}

double dual_norm(const NormedSpace& space, const Vec& v) {
  return norm(space.dual(), v);
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in vector op");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in vector op");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec scale(double t, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = t * v[i];
  return r;
}

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in dot");
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const ProductPoint& a, const ProductPoint& b) {
  if (lex_less(a.x, b.x)) return true;
  if (lex_less(b.x, a.x)) return false;
  return lex_less(a.y, b.y);
}

bool same_point(const ProductPoint& a, const ProductPoint& b) {
  return a.x == b.x && a.y == b.y;
}

void ProductSpace::check(const ProductPoint& p) const {
  check_dim(X, p.x);
  check_dim(Y, p.y);
}

double rho_dist(const ProductSpace& spaces, const ProductPoint& p,
                const ProductPoint& q, double rho) {
  if (rho <= 0.0) throw InputError("rho must be positive");
  spaces.check(p);
  spaces.check(q);
  return std::max(dist(spaces.X, p.x, q.x), rho * dist(spaces.Y, p.y, q.y));
}

double rho_sum_dist(const ProductSpace& spaces, const ProductPoint& p,
                    const ProductPoint& q, double rho) {
  if (rho <= 0.0) throw InputError("rho must be positive");
  spaces.check(p);
  spaces.check(q);
  return dist(spaces.X, p.x, q.x) + rho * dist(spaces.Y, p.y, q.y);
}

double rho_dual_norm(const ProductSpace& spaces, const Vec& xstar,
                     const Vec& ystar, double rho) {
  if (rho <= 0.0) throw InputError("rho must be positive");
  return dual_norm(spaces.X, xstar) + dual_norm(spaces.Y, ystar) / rho;
}

const Vec& DualFace::representative() const {
  if (kind == Kind::SphereFlag)
    throw DomainError("J(0) is the whole dual sphere; no canonical element");
  if (vertices.empty()) throw InvariantViolation("empty duality face");
  size_t best = 0;
  for (size_t i = 1; i < vertices.size(); ++i)
    if (lex_less(vertices[i], vertices[best])) best = i;
  return vertices[best];
}

namespace {

// Vertices of the l1-face {y* : ||y*||_inf <= 1, <y*,y> = ||y||_1}: signs are
// forced on the support of y and free in {-1,+1} off it.
void l1_dual_face_vertices(const Vec& y, std::vector<Vec>& out) {
  std::vector<size_t> free_idx;
  Vec base(y.size(), 0.0);
  for (size_t i = 0; i < y.size(); ++i) {
    if (y[i] > 0.0)
      base[i] = 1.0;
    else if (y[i] < 0.0)
      base[i] = -1.0;
    else
      free_idx.push_back(i);
  }
  if (free_idx.size() > 16)
    throw UnsupportedStructure("l1 duality face has too many free components");
  size_t combos = size_t{1} << free_idx.size();
  for (size_t mask = 0; mask < combos; ++mask) {
    Vec v = base;
    for (size_t j = 0; j < free_idx.size(); ++j)
      v[free_idx[j]] = (mask & (size_t{1} << j)) ? 1.0 : -1.0;
    out.push_back(std::move(v));
  }
}

}  // namespace

DualFace duality_mapping(const NormedSpace& space, const Vec& y) {
  check_dim(space, y);
  double ny = norm(space, y);
  if (ny == 0.0) return {DualFace::Kind::SphereFlag, {}};

  switch (space.kind) {
    case NormKind::Euclidean:
      return {DualFace::Kind::Singleton, {scale(1.0 / ny, y)}};
    case NormKind::Max: {
      // Face spanned by sign(y_i) e_i over the indices attaining the max.
      std::vector<Vec> verts;
      for (size_t i = 0; i < y.size(); ++i) {
        if (std::fabs(y[i]) == ny) {
          Vec e(y.size(), 0.0);
          e[i] = y[i] > 0.0 ? 1.0 : -1.0;
          verts.push_back(std::move(e));
        }
      }
      if (verts.size() == 1) return {DualFace::Kind::Singleton, std::move(verts)};
      return {DualFace::Kind::Polytope, std::move(verts)};
    }
    case NormKind::P: {
      if (space.p == 1.0) {
        std::vector<Vec> verts;
        l1_dual_face_vertices(y, verts);
        if (verts.size() == 1)
          return {DualFace::Kind::Singleton, std::move(verts)};
        return {DualFace::Kind::Polytope, std::move(verts)};
      }
      // Unique norming functional of the smooth p-norm.
      Vec v(y.size());
      double denom = std::pow(ny, space.p - 1.0);
      for (size_t i = 0; i < y.size(); ++i) {
        double s = y[i] >= 0.0 ? 1.0 : -1.0;
        v[i] = s * std::pow(std::fabs(y[i]), space.p - 1.0) / denom;
      }
      return {DualFace::Kind::Singleton, {std::move(v)}};
    }
  }
  return {DualFace::Kind::SphereFlag, {}};
}

}  // namespace subreg
