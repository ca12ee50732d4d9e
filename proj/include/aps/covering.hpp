#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "aps/ap.hpp"
#include "aps/descent.hpp"
#include "aps/poly.hpp"
#include "aps/subsets.hpp"

namespace aps {

using Triple = std::array<long, 3>;

/// Two genus-1 quartics y_i^2 = p_i(t) cutting out C_I for a 5-subset,
/// parametrized through the three positions of J.
struct QuarticModel {
  Subset I;
  Triple J;                  // n0 < n1 < n2
  std::array<long, 2> rest;  // n3 < n4, the complement of J in I
  Rat m0, m1, m2;
  RatPoly p1, p2;

  const Rat& m(int i) const { return i == 1 ? m1 : m2; }
  const RatPoly& p(int i) const { return i == 1 ? p1 : p2; }
};

/// p(t) = t^4 + 4m t^3 - 2(m0 + 4m + 2m m0 + 1) t^2 + 4m(m0 + 1) t + (m0 + 1)^2.
RatPoly model_quartic(const Rat& m0, const Rat& m);

QuarticModel quartic_model(const Subset& I, const Triple& J);

/// p_i = plus * minus over Q(alpha), alpha^2 = D, alpha taken positive.
struct FactorPair {
  int i = 1;
  int j = 1;
  Rat D;
  QuadExt alpha;
  QuadPoly plus, minus;

  /// Squarefree part of D (1 when alpha is rational).
  Int radicand() const;
};

FactorPair factor_pair(const QuarticModel& model, int i, int j);

/// D_{i,j}.
Rat factor_discriminant(const QuarticModel& model, int i, int j);

/// x-coordinate of the 2-torsion point of y^2 = x(x - m0 m_i)(x + m0 + m_i + 1) matched to j.
Rat torsion_root(const QuarticModel& model, int i, int j);

/// Jacobian of y^2 = p_i(t).
Curve model_jacobian(const QuarticModel& model, int i);

struct CoveringChoice {
  Triple J;
  int j1 = 1;
  int j2 = 1;
  std::optional<Int> radicand;  // 1 for L = Q; nullopt for a biquadratic field

  bool admissible() const { return radicand.has_value(); }
};

/// All 90 choices of (J, j1, j2) annotated with the field L.
std::vector<CoveringChoice> covering_choices(const Subset& I);

/// Representative of d in L*/L*^2 for L = Q(sqrt D): d and dD are identified,
/// keeping the smaller absolute value (positive on ties).
SquareClass reduce_in_field(const SquareClass& d, const Int& D);

/// Orders square classes by absolute value, positive first.
bool class_less(const SquareClass& a, const SquareClass& b);

/// The twist set for an admissible choice.
std::vector<SquareClass> frak_S(const Subset& I, const Triple& J, int j1, int j2);

/// Parameter on P^1(Q).
struct ProjT {
  Rat t;
  bool infinity = false;

  bool operator==(const ProjT&) const = default;
};
std::string to_string(const ProjT& t);
bool operator<(const ProjT& a, const ProjT& b);

/// delta w^2 = p_{1,j1,s1}(t) p_{2,j2,s2}(t); signs are +1 or -1.
struct Quotient {
  Subset I;
  Triple J;
  int j1 = 1, j2 = 1;
  SquareClass delta;
  int s1 = 1, s2 = 1;
  Int radicand;
  QuadPoly quartic;

  std::string signs() const;
  std::string str() const;
};

Quotient h_quotient(const Subset& I, const Triple& J, int j1, int j2, const SquareClass& delta, int s1, int s2);

/// Progression through the five positions for the parameter t; nullopt is
/// the trivial marker (0,1). Throws when some position is not a square.
std::optional<ArithProgression> t_to_ap(const Subset& I, const Triple& J, const ProjT& t);
std::string ap_or_trivial(const std::optional<ArithProgression>& ap);

/// True when both p_1(t) and p_2(t) are rational squares.
bool t_on_model(const QuarticModel& model, const ProjT& t);

/// Binary quartic invariants of sum c_i x^i (degree 4).
struct QuarticInvariants {
  Rat I, J;
};
QuarticInvariants quartic_invariants(const RatPoly& f);

struct Rank0Resolution {
  bool resolved = false;
  std::string reason;
  std::vector<ProjT> t_values;  // all t with a rational point on H
  int rank_upper = -1;
  long torsion_order = 0;
};

/// Complete t-set of a quotient over Q whose Jacobian has rank 0.
Rank0Resolution resolve_H_rank0_overQ(const Quotient& H, long search_height = 60);

/// True when delta w^2 = f(t) has no point over R or some Q_p.
bool quotient_locally_empty(const Quotient& H);

struct QuotientRow {
  SquareClass delta;
  std::string signs;
  std::string empty;                             // "yes", "no" or "unknown"
  std::optional<std::pair<int, int>> rank_window;  // over L = Q only
  std::vector<ProjT> t_values;
  std::vector<std::optional<ArithProgression>> aps;
  std::string note;
  bool resolved = false;
};

struct CoveringDatum {
  Subset I;
  Triple J;
  int j1 = 1, j2 = 1;
  Int radicand;
  std::vector<SquareClass> twists;
  std::vector<QuotientRow> rows;
  bool resolved = false;  // every twist settled over Q

  std::vector<ArithProgression> progressions() const;
};

/// Runs the quotient analysis for one admissible choice.
CoveringDatum analyze_choice(const Subset& I, const Triple& J, int j1, int j2);

std::string covering_to_json(const CoveringDatum& d);

enum class ZStatus { zero, positive, undecided };
std::string to_string(ZStatus s);

struct ZResolution {
  ZStatus status = ZStatus::undecided;
  std::vector<ArithProgression> witnesses;
  std::optional<CoveringDatum> datum;
};

/// Decides z_I for a 5-subset when some choice with L = Q settles every twist.
ZResolution resolve_z5(const Subset& I);

}  // namespace aps
