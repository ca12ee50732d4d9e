#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "aps/ap.hpp"
#include "aps/elliptic.hpp"
#include "aps/subsets.hpp"

namespace aps {

/// Squarefree integer standing for a class in Q*/Q*^2.
using SquareClass = Int;

SquareClass square_class(const Rat& r);
SquareClass class_mul(const SquareClass& a, const SquareClass& b);

/// r is a non-zero square in Q_p.
bool is_padic_square(const Rat& r, const Int& p);

/// Homogeneous quartic y^2 = sum c[i] u^i v^(4-i) with integer coefficients.
using Quartic = std::array<Int, 5>;

bool quartic_real_soluble(const Quartic& c);
/// Exact p-adic solubility by recursive refinement over residue classes.
bool quartic_padic_soluble(const Quartic& c, const Int& p);
/// Brute-force oracle: some primitive (u, v) with 0 <= u < p^k and |v| < p^k
/// gives a value that is zero or a p-adic square.
bool quartic_soluble_bruteforce(const Quartic& c, long p, int k);

struct SelmerGroup {
  std::vector<Int> support;           // primes; -1 is always allowed
  std::vector<SquareClass> elements;  // sorted by (|d|, sign)
  int dim = 0;

  bool contains(const SquareClass& d) const;
};

/// The 2-isogeny Selmer group attached to the rational 2-torsion point
/// T = (r, 0): classes d with d w^2 = d^2 u^4 + a d u^2 v^2 + b v^4
/// everywhere locally soluble, where y^2 = x(x^2 + a x + b) after x -> x + r.
SelmerGroup two_isogeny_selmer(const Curve& E, const Point& T);

/// The isogenous curve y^2 = x(x^2 - 2a x + a^2 - 4b) with its point (0, 0).
std::pair<Curve, Point> isogenous_curve(const Curve& E, const Point& T);

/// Squarefree part of x(P) - r; O maps to 1 and T to the class of f'(r).
SquareClass descent_image(const Curve& E, const Point& T, const Point& P);

struct FullDescent {
  std::vector<Int> support;  // 2 and primes dividing root differences
  int selmer_dim = 0;
  int rank_upper = 0;
  std::vector<std::pair<SquareClass, SquareClass>> selmer;  // all elements
};

/// Complete 2-descent for a curve with three rational roots.
FullDescent full_two_descent(const FactoredCurve& E);

/// Pair image (x - e1, x - e2) of a point, Weierstrass points included.
std::pair<SquareClass, SquareClass> kummer_image(const FactoredCurve& E, const Point& P);

/// Curves with full rational 2-torsion reachable from E by 2-isogenies,
/// each with its 2-descent bound; E comes first.
struct IsogenyDescent {
  std::vector<FactoredCurve> curves;
  std::vector<int> rank_upper;
  int best = 0;  // min of rank_upper; Sha[2] is not an isogeny invariant
};
IsogenyDescent isogeny_class_descent(const FactoredCurve& E, std::size_t max_curves = 8);

struct RankWindow {
  int lower = 0;
  int upper = 0;
  int selmer_dim = 0;
  int own_upper = 0;  // bound from E itself, before the isogeny class
  std::vector<Point> points;  // independent non-torsion points found
  std::string point_curve;    // isogenous curve holding `points`; empty for E
};

/// Sound window: lower from points found on the 2-coverings with
/// parameters up to `height`, upper from the complete 2-descent over the
/// isogeny class.
RankWindow rank_window(const FactoredCurve& E, long height = 200);

enum class Conclusion { z_zero, z_positive_with_witnesses, inconclusive };
std::string to_string(Conclusion c);
Conclusion parse_conclusion(const std::string& s);

struct DescentCertificate {
  Subset subset;  // canonical primitive representative
  std::array<Rat, 3> roots;
  int selmer_dim = 0;
  int rank_upper = 0;
  int rank_lower = 0;
  std::string torsion;
  long torsion_order = 0;
  std::vector<ArithProgression> witnesses;
  Conclusion conclusion = Conclusion::inconclusive;
  std::string tool_version;

  friend bool operator==(const DescentCertificate&, const DescentCertificate&) = default;
};

struct CertifyOptions {
  long point_height = 60;
  long witness_bound = 1000;
};

/// z_I = 0 exactly when the Selmer rank bound is 0 and E_I has 8 torsion
/// points; otherwise witnesses come from the explicit progression or a search.
DescentCertificate certify_z_zero(const Subset& I, const CertifyOptions& opt = {});

std::string certificate_to_json(const DescentCertificate& c);
DescentCertificate certificate_from_json(const std::string& line);

}  // namespace aps
