// Finite-dimensional normed spaces, product rho-metrics, dual rho-norms,
// and the normalized duality mapping.

#pragma once

#include <string>
#include <vector>

#include "subreg/extended.hpp"

namespace subreg {

using Vec = std::vector<double>;

enum class NormKind { Euclidean, Max, P };

struct NormedSpace {
  int dim = 1;
  NormKind kind = NormKind::Euclidean;
  double p = 2.0;  // exponent for NormKind::P, p >= 1

  static NormedSpace euclidean(int dim) { return {dim, NormKind::Euclidean, 2.0}; }
  static NormedSpace max_norm(int dim) { return {dim, NormKind::Max, 0.0}; }
  static NormedSpace p_norm(int dim, double p);

  // Dual space: euclidean <-> euclidean, max <-> l1, p <-> conjugate.
  NormedSpace dual() const;

  bool frechet_smooth() const {
    return kind == NormKind::Euclidean || (kind == NormKind::P && p > 1.0);
  }

  std::string describe() const;
};

double norm(const NormedSpace& space, const Vec& v);
double dist(const NormedSpace& space, const Vec& a, const Vec& b);
double dual_norm(const NormedSpace& space, const Vec& v);

Vec sub(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec scale(double t, const Vec& v);
double dot(const Vec& a, const Vec& b);

// Lexicographic order used everywhere a deterministic tie-break is needed.
bool lex_less(const Vec& a, const Vec& b);

struct ProductPoint {
  Vec x;
  Vec y;
};

bool lex_less(const ProductPoint& a, const ProductPoint& b);
bool same_point(const ProductPoint& a, const ProductPoint& b);

struct ProductSpace {
  NormedSpace X;
  NormedSpace Y;

  void check(const ProductPoint& p) const;
};

// max{d(x,u), rho*d(y,v)}
double rho_dist(const ProductSpace& spaces, const ProductPoint& p,
                const ProductPoint& q, double rho);

// d(x,u) + rho*d(y,v); admissible sandwich rho_dist <= rho_sum_dist.
double rho_sum_dist(const ProductSpace& spaces, const ProductPoint& p,
                    const ProductPoint& q, double rho);

// ||x*|| + rho^{-1}||y*|| in the dual norms.
double rho_dual_norm(const ProductSpace& spaces, const Vec& xstar,
                     const Vec& ystar, double rho);

// Finite description of J(y) = {y* in S* : <y*,y> = ||y||}.
//  - Singleton: unique norming functional (euclidean / p-norm, y != 0)
//  - Polytope: face of the dual ball given by its vertex set (max / l1)
//  - SphereFlag: y = 0, J(0) is the whole dual sphere; callers must branch.
struct DualFace {
  enum class Kind { Singleton, Polytope, SphereFlag };
  Kind kind = Kind::Singleton;
  std::vector<Vec> vertices;

  bool whole_sphere() const { return kind == Kind::SphereFlag; }
  // Lexicographically smallest vertex; error on SphereFlag.
  const Vec& representative() const;
};

DualFace duality_mapping(const NormedSpace& space, const Vec& y);

}  // namespace subreg
