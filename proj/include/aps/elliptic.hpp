#pragma once

#include <string>
#include <vector>

#include "aps/arith.hpp"

namespace aps {

/// Affine point or the point at infinity.
struct Point {
  Rat x = 0;
  Rat y = 0;
  bool inf = false;

  static Point infinity() { return {0, 0, true}; }
  friend bool operator==(const Point& p, const Point& q) {
    return p.inf == q.inf && (p.inf || (p.x == q.x && p.y == q.y));
  }
};

std::string to_string(const Point& p);

/// y^2 = x^3 + a2 x^2 + a4 x + a6.
struct Curve {
  Rat a2 = 0;
  Rat a4 = 0;
  Rat a6 = 0;

  Rat rhs(const Rat& x) const { return ((x + a2) * x + a4) * x + a6; }
  bool on_curve(const Point& p) const { return p.inf || p.y * p.y == rhs(p.x); }
  Rat discriminant() const;
  std::string str() const;
};

/// y^2 = (x - e1)(x - e2)(x - e3) with distinct rational roots.
class FactoredCurve {
 public:
  FactoredCurve(Rat e1, Rat e2, Rat e3);

  const Rat& e1() const { return e_[0]; }
  const Rat& e2() const { return e_[1]; }
  const Rat& e3() const { return e_[2]; }
  const Rat& root(int i) const { return e_[i]; }
  Curve curve() const;
  std::vector<Point> two_torsion() const;
  std::string str() const;

 private:
  Rat e_[3];
};

Point ec_neg(const Point& p);
/// Group law; throws std::invalid_argument on off-curve input.
Point ec_add(const Curve& E, const Point& p, const Point& q);
Point scalar_mul(const Curve& E, long n, const Point& p);
/// Order of p when it is at most `max_order`, otherwise 0.
int point_order(const Curve& E, const Point& p, int max_order = 16);

/// Z/d1 x Z/d2 with d1 | d2, the listed generators and all points.
struct TorsionStructure {
  long d1 = 1;
  long d2 = 1;
  std::vector<Point> generators;
  std::vector<Point> points;

  long order() const { return static_cast<long>(points.size()); }
  std::string str() const;
};

/// Torsion of a curve with full rational 2-torsion: halving closure of
/// E[2] plus rational 3-torsion from the 3-division polynomial.
TorsionStructure torsion_subgroup(const FactoredCurve& E);

/// Torsion of any curve via Nagell-Lutz on an integral model.
TorsionStructure torsion_nagell_lutz(const Curve& E);

/// Points Q with 2Q = P.
std::vector<Point> halves(const FactoredCurve& E, const Point& p);

/// #E(F_p) for a prime p of good reduction (throws otherwise).
long count_points_mod_p(const Curve& E, long p);

/// Affine points with x = n/d, |n| <= H, 1 <= d <= H.
std::vector<Point> point_search(const Curve& E, long H);

/// Sign of the functional equation of y^2 = x(x + a^2)(x + b^2).
int root_number(long a, long b);

/// Parity prediction for positions {0, 2, n, n + 2}, n odd >= 3.
bool cohn_predicts_infinite(long n);

}  // namespace aps
