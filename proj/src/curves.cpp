#include "aps/curves.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace aps {

long genus_of(int size) {
  if (size < 3) throw std::invalid_argument("genus_of: at least three elements");
  const long k = size - 1;
  if (k == 2) return 0;
  return (k - 3) * (1L << (k - 2)) + 1;
}

bool on_ci(const Subset& I, const std::vector<Rat>& x) {
  validate_subset(I);
  if (x.size() != I.size()) return false;
  if (std::all_of(x.begin(), x.end(), [](const Rat& v) { return v == 0; })) return false;
  for (std::size_t i = 1; i + 1 < I.size(); ++i) {
    const Rat a = I[i + 1] - I[i], b = I[i + 1] - I[i - 1], c = I[i] - I[i - 1];
    if (a * x[i - 1] * x[i - 1] - b * x[i] * x[i] + c * x[i + 1] * x[i + 1] != 0) return false;
  }
  return true;
}

std::vector<Rat> sign_act(SignMask mask, const std::vector<Rat>& point) {
  std::vector<Rat> out = point;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (mask >> i & 1) out[i] = -out[i];
  return out;
}

FourTupleModel model_from_m(const Rat& m0, const Rat& m1) {
  if (m0 <= 0 || m1 <= 0) throw std::invalid_argument("model: m0, m1 must be positive");
  return {m0, m1, FactoredCurve(0, m0 * m1, -(m0 + m1 + 1))};
}

FourTupleModel model_four(const Subset& I) {
  validate_subset(I);
  if (I.size() != 4) throw std::invalid_argument("model_four: four elements required");
  const Rat d = I[2] - I[1];
  return model_from_m(Rat(I[1] - I[0]) / d, Rat(I[3] - I[2]) / d);
}

std::vector<Point> trivial_images(const Rat& m0, const Rat& m1) {
  if (m0 <= 0 || m1 <= 0) throw std::invalid_argument("trivial_images: m0, m1 must be positive");
  const Rat s = m0 + m1 + 1;
  std::vector<Point> q{Point::infinity(),
                       {0, 0},
                       {m0 * m1, 0},
                       {-s, 0},
                       {-m1, -m1 * (m0 + 1)},
                       {-m0, m0 * (m1 + 1)},
                       {m0 * s, -m0 * (m0 + 1) * s},
                       {m1 * s, m1 * (m1 + 1) * s}};
  const Curve E = model_from_m(m0, m1).curve.curve();
  for (const Point& p : q)
    if (!E.on_curve(p)) throw std::logic_error("trivial_images: point off curve");
  return q;
}

std::optional<ArithProgression> remark_ap(const Subset& I) {
  validate_subset(I);
  if (I.size() != 4 || !is_primitive(I)) throw std::invalid_argument("remark_ap: primitive 4-subset required");
  const Int n1 = I[1], n2 = I[2], n3 = I[3];
  const Int s = n1 + n2 - n3;
  const Int r = s * s - 4 * n1 * n2;
  const Int a = r * r;
  const Int q = 8 * s * (n1 - n2 - n3) * (n1 - n2 + n3);
  if (q == 0) return std::nullopt;
  ArithProgression ap = make_ap(q, a);
  if (!squares_at(ap, I)) throw std::logic_error("remark_ap: validation failed for " + format_subset(I));
  return ap;
}

FactoredCurve symmetric_curve(const Rat& t) { return FactoredCurve(0, -1, -t * t); }

std::string to_string(SymmetricTorsion t) { return t == SymmetricTorsion::z2_z8 ? "Z/2 x Z/8" : "Z/2 x Z/4"; }

SymmetricTorsion torsion_class_symmetric(long n1, long n2) {
  if (!(0 < n1 && n1 < n2) || std::gcd(n1, n2) != 1) throw std::invalid_argument("torsion_class_symmetric: 0 < n1 < n2 coprime");
  const bool sq = is_square_int(Int(n1)) && is_square_int(Int(n2)) && is_square_int(Int(n1) + n2);
  return sq ? SymmetricTorsion::z2_z8 : SymmetricTorsion::z2_z4;
}

bool order12_family_check(const Rat& m0, const Rat& m1) {
  if (m0 <= 0 || m1 <= 0) throw std::invalid_argument("order12_family_check: m0, m1 must be positive");
  if (auto r = rational_sqrt(m1 * m1 + m1 + 1)) {
    for (const Rat& root : {*r, Rat(-*r)})
      if (m0 == -(m1 + 2 - 2 * root) / 3) return true;
  }
  if (auto r = rational_sqrt(m1 * m1 + m1)) {
    for (const Rat& root : {*r, Rat(-*r)})
      if (m0 == m1 + 2 * root) return true;
  }
  return false;
}

ParametricPoint parametric_square(const Rat& z1, const Rat& z2) {
  if (z1 == 0 || z2 == 0) throw std::invalid_argument("parametric_square: zero parameter");
  if (abs(z1) == 1 || abs(z2) == 1) throw std::invalid_argument("parametric_square: parameter +-1 excluded");
  if (abs(z1) == abs(z2)) throw std::invalid_argument("parametric_square: z1 = +-z2 excluded");
  if (z1 * z2 == 1) throw std::invalid_argument("parametric_square: z1 = 1/z2 excluded");
  const Rat t = (z1 + 1 / z1 + z2 + 1 / z2) / 4;
  const Rat x = -(z1 + z2) * (z1 + z2) / (4 * z1 * z2);
  auto y = rational_sqrt(x * (x + 1) * (x + t * t));
  if (!y) throw std::logic_error("parametric_square: value is not a square");
  return {t, x, *y};
}

}  // namespace aps
