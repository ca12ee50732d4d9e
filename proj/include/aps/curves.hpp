#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aps/ap.hpp"
#include "aps/elliptic.hpp"
#include "aps/subsets.hpp"

namespace aps {

/// Genus of C_I for |I| = size >= 3 elements: (k-3) 2^(k-2) + 1 with k = size - 1.
long genus_of(int size);

/// True when [x_0 : ... : x_k] satisfies every quadric of C_I.
bool on_ci(const Subset& I, const std::vector<Rat>& point);

/// Coordinatewise sign flips: bit i of mask negates x_i.
using SignMask = std::uint32_t;
std::vector<Rat> sign_act(SignMask mask, const std::vector<Rat>& point);

/// 4-subset data: m0, m1 and E_I: y^2 = x(x - m0 m1)(x + m0 + m1 + 1).
struct FourTupleModel {
  Rat m0;
  Rat m1;
  FactoredCurve curve;
};

FourTupleModel model_four(const Subset& I);
FourTupleModel model_from_m(const Rat& m0, const Rat& m1);

/// Images of the eight trivial points on E_I, in table order Q_0..Q_7.
std::vector<Point> trivial_images(const Rat& m0, const Rat& m1);

/// The explicit progression for a primitive {0, n1, n2, n3}; nullopt when
/// the formula degenerates to q = 0. Throws for non-primitive input.
std::optional<ArithProgression> remark_ap(const Subset& I);

/// E'_t: y^2 = x(x + 1)(x + t^2).
FactoredCurve symmetric_curve(const Rat& t);

enum class SymmetricTorsion { z2_z4, z2_z8 };
std::string to_string(SymmetricTorsion t);

/// Torsion of E_I for I = {0, n1, n2, n1 + n2}, 0 < n1 < n2 coprime.
SymmetricTorsion torsion_class_symmetric(long n1, long n2);

/// The two square-root conditions for a torsion subgroup of order 12.
bool order12_family_check(const Rat& m0, const Rat& m1);

struct ParametricPoint {
  Rat t;
  Rat x;
  Rat y;
};

/// A point on E'_t from two parameters; throws on excluded values.
ParametricPoint parametric_square(const Rat& z1, const Rat& z2);

}  // namespace aps
