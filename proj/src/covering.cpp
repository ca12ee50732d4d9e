#include "aps/covering.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace aps {

RatPoly model_quartic(const Rat& m0, const Rat& m) {
  const Rat c = m0 + 1;
  return RatPoly{c * c, 4 * m * c, -2 * (m0 + 4 * m + 2 * m * m0 + 1), 4 * m, Rat(1)};
}

QuarticModel quartic_model(const Subset& I, const Triple& J) {
  validate_subset(I);
  if (I.size() != 5) throw std::invalid_argument("quartic_model: five positions required");
  Triple j = J;
  std::sort(j.begin(), j.end());
  if (j[0] == j[1] || j[1] == j[2]) throw std::invalid_argument("quartic_model: J must have three elements");
  std::vector<long> rest;
  for (long n : I)
    if (std::find(j.begin(), j.end(), n) == j.end()) rest.push_back(n);
  if (rest.size() != 2) throw std::invalid_argument("quartic_model: J is not a subset of I");
  QuarticModel M;
  M.I = I;
  M.J = j;
  M.rest = {rest[0], rest[1]};
  const Rat h = j[2] - j[1];
  M.m0 = Rat(j[1] - j[0]) / h;
  M.m1 = Rat(rest[0] - j[2]) / h;
  M.m2 = Rat(rest[1] - j[2]) / h;
  M.p1 = model_quartic(M.m0, M.m1);
  M.p2 = model_quartic(M.m0, M.m2);
  return M;
}

Int FactorPair::radicand() const { return alpha.is_rational() ? Int(1) : alpha.radicand(); }

Rat factor_discriminant(const QuarticModel& M, int i, int j) {
  if (i != 1 && i != 2) throw std::invalid_argument("factor index i must be 1 or 2");
  const Rat& m = M.m(i);
  const Rat s = m + M.m0 + 1;
  switch (j) {
    case 1: return m * (1 + m);
    case 2: return (1 + m) * s;
    case 3: return m * s;
    default: throw std::invalid_argument("factor index j must be 1, 2 or 3");
  }
}

Rat torsion_root(const QuarticModel& M, int i, int j) {
  const Rat& m = M.m(i);
  switch (j) {
    case 1: return M.m0 * m;
    case 2: return -M.m0 - m - 1;
    case 3: return 0;
    default: throw std::invalid_argument("factor index j must be 1, 2 or 3");
  }
}

Curve model_jacobian(const QuarticModel& M, int i) {
  const Rat& m = M.m(i);
  return FactoredCurve(0, M.m0 * m, -(M.m0 + m + 1)).curve();
}

namespace {

QuadExt positive_sqrt(const Rat& D) {
  if (D == 0) throw std::invalid_argument("factor_pair: degenerate discriminant");
  const SquarefreeParts num = squarefree_decompose(D.get_num() * D.get_den());
  // sqrt(D) = root / den * sqrt(core)
  const Rat coef = make_rat(num.root, D.get_den());
  if (num.core == 1) return QuadExt(coef);
  return QuadExt(0, coef, num.core);
}

QuadPoly monic(const QuadExt& c2, const QuadExt& c1, const QuadExt& c0) {
  return QuadPoly{c0 / c2, c1 / c2, QuadExt(Rat(1))};
}

}  // namespace

FactorPair factor_pair(const QuarticModel& M, int i, int j) {
  FactorPair f;
  f.i = i;
  f.j = j;
  f.D = factor_discriminant(M, i, j);
  f.alpha = positive_sqrt(f.D);
  const QuadExt a = f.alpha;
  const QuadExt m(M.m(i));
  const QuadExt c(M.m0 + 1);
  const QuadExt one(Rat(1));
  switch (j) {
    case 1: {  // (1+m) X2 +- alpha X1, made monic
      for (int s : {1, -1}) {
        const QuadExt sa = s > 0 ? -a : a;
        QuadPoly q = monic(-(one + m + sa), QuadExt(Rat(2)) * sa, (one + m - sa) * c);
        (s > 0 ? f.plus : f.minus) = q;
      }
      break;
    }
    case 2: {
      f.plus = QuadPoly{c, QuadExt(Rat(2)) * (m + a), one};
      f.minus = QuadPoly{c, QuadExt(Rat(2)) * (m - a), one};
      break;
    }
    case 3: {  // (c+m) X2 +- alpha X0, made monic
      for (int s : {1, -1}) {
        const QuadExt sa = s > 0 ? -a : a;
        QuadPoly q = monic(-(c + m + sa), QuadExt(Rat(2)) * sa * c, c * (c + m - sa));
        (s > 0 ? f.plus : f.minus) = q;
      }
      break;
    }
    default: throw std::invalid_argument("factor index j must be 1, 2 or 3");
  }
  std::vector<QuadExt> target;
  for (const Rat& r : M.p(i).coeffs()) target.emplace_back(r);
  if (f.plus * f.minus != QuadPoly(target)) throw std::logic_error("factor_pair: product identity failed");
  return f;
}

std::vector<CoveringChoice> covering_choices(const Subset& I) {
  validate_subset(I);
  if (I.size() != 5) throw std::invalid_argument("covering_choices: five positions required");
  std::vector<CoveringChoice> out;
  for_each_combination(I, 3, [&](const Subset& js) {
    const Triple J{js[0], js[1], js[2]};
    const QuarticModel M = quartic_model(I, J);
    for (int j1 = 1; j1 <= 3; ++j1)
      for (int j2 = 1; j2 <= 3; ++j2) {
        const Int d1 = square_class(factor_discriminant(M, 1, j1));
        const Int d2 = square_class(factor_discriminant(M, 2, j2));
        CoveringChoice c{J, j1, j2, std::nullopt};
        if (d1 == 1)
          c.radicand = d2;
        else if (d2 == 1 || d1 == d2)
          c.radicand = d1;
        out.push_back(c);
      }
  });
  return out;
}

bool class_less(const SquareClass& a, const SquareClass& b) {
  const Int aa = abs(a), bb = abs(b);
  return aa != bb ? aa < bb : a > b;
}

SquareClass reduce_in_field(const SquareClass& d, const Int& D) {
  if (D == 1) return d;
  const SquareClass e = class_mul(d, D);
  return class_less(e, d) ? e : d;
}

namespace {

// Images of the eight trivial points of C_I on y^2 = x(x - m0 m)(x + m0 + m + 1).
std::vector<Point> trivial_points(const Rat& m0, const Rat& m) {
  const Rat s = m0 + m + 1;
  std::vector<Point> q{Point::infinity(),
                       {0, 0},
                       {m0 * m, 0},
                       {-s, 0},
                       {-m, -m * (m0 + 1)},
                       {-m0, m0 * (m + 1)},
                       {m0 * s, -m0 * (m0 + 1) * s},
                       {m * s, m * (m + 1) * s}};
  const Curve E = FactoredCurve(0, m0 * m, -s).curve();
  for (const Point& p : q)
    if (!E.on_curve(p)) throw std::logic_error("trivial point off the Jacobian");
  return q;
}

std::vector<SquareClass> span_classes(const std::vector<SquareClass>& gens, const Int& D) {
  std::set<SquareClass> out{1};
  for (const SquareClass& g : gens) {
    std::set<SquareClass> next = out;
    for (const SquareClass& x : out) next.insert(reduce_in_field(class_mul(x, g), D));
    out = next;
  }
  return {out.begin(), out.end()};
}

void sort_classes(std::vector<SquareClass>& v) {
  std::sort(v.begin(), v.end(), class_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

Int choice_radicand(const QuarticModel& M, int j1, int j2) {
  const Int d1 = square_class(factor_discriminant(M, 1, j1));
  const Int d2 = square_class(factor_discriminant(M, 2, j2));
  if (d1 == 1) return d2;
  if (d2 == 1 || d1 == d2) return d1;
  throw std::invalid_argument("choice is not admissible: biquadratic field");
}

}  // namespace

std::vector<SquareClass> frak_S(const Subset& I, const Triple& J, int j1, int j2) {
  const QuarticModel M = quartic_model(I, J);
  const Int D = choice_radicand(M, j1, j2);
  const Curve E1 = model_jacobian(M, 1), E2 = model_jacobian(M, 2);
  const Point T1{torsion_root(M, 1, j1), 0}, T2{torsion_root(M, 2, j2), 0};
  std::vector<SquareClass> triv;
  for (const Point& q : trivial_points(M.m0, M.m1)) triv.push_back(reduce_in_field(descent_image(E1, T1, q), D));
  const std::vector<SquareClass> sub = span_classes(triv, D);
  // Coset representatives of Sel(phi1) modulo the trivial subgroup.
  std::vector<SquareClass> sel1;
  for (const SquareClass& d : two_isogeny_selmer(E1, T1).elements) sel1.push_back(reduce_in_field(d, D));
  sort_classes(sel1);
  std::vector<SquareClass> reps;
  std::set<SquareClass> covered;
  for (const SquareClass& d : sel1) {
    if (covered.count(d)) continue;
    reps.push_back(d);
    for (const SquareClass& s : sub) covered.insert(reduce_in_field(class_mul(d, s), D));
  }
  std::vector<SquareClass> out;
  for (const SquareClass& d2 : two_isogeny_selmer(E2, T2).elements)
    for (const SquareClass& d1 : reps) out.push_back(reduce_in_field(class_mul(d1, d2), D));
  sort_classes(out);
  return out;
}

std::string to_string(const ProjT& t) { return t.infinity ? "oo" : to_string(t.t); }

bool operator<(const ProjT& a, const ProjT& b) {
  if (a.infinity != b.infinity) return b.infinity;
  return !a.infinity && a.t < b.t;
}

std::string Quotient::signs() const {
  return std::string("(") + (s1 > 0 ? "+" : "-") + "," + (s2 > 0 ? "+" : "-") + ")";
}

std::string Quotient::str() const {
  return to_string(Rat(delta)) + "*w^2 = " + to_string(quartic, "t") + (radicand == 1 ? "" : "  over Q(sqrt(" + radicand.get_str() + "))");
}

Quotient h_quotient(const Subset& I, const Triple& J, int j1, int j2, const SquareClass& delta, int s1, int s2) {
  if ((s1 != 1 && s1 != -1) || (s2 != 1 && s2 != -1)) throw std::invalid_argument("h_quotient: signs must be +1 or -1");
  if (delta == 0) throw std::invalid_argument("h_quotient: zero twist");
  const QuarticModel M = quartic_model(I, J);
  const FactorPair f1 = factor_pair(M, 1, j1), f2 = factor_pair(M, 2, j2);
  Quotient H;
  H.I = I;
  H.J = M.J;
  H.j1 = j1;
  H.j2 = j2;
  H.delta = delta;
  H.s1 = s1;
  H.s2 = s2;
  H.radicand = choice_radicand(M, j1, j2);
  H.quartic = (s1 > 0 ? f1.plus : f1.minus) * (s2 > 0 ? f2.plus : f2.minus);
  return H;
}

namespace {

std::array<Rat, 3> conic_point(const Rat& m0, const ProjT& t) {
  if (t.infinity) return {Rat(1), Rat(1), Rat(-1)};
  const Rat c = m0 + 1;
  const Rat& x = t.t;
  return {c - 2 * c * x + x * x, c - 2 * x + x * x, c - x * x};
}

Int lcm_den(const Rat& a, const Rat& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  return l;
}

}  // namespace

std::optional<ArithProgression> t_to_ap(const Subset& I, const Triple& J, const ProjT& t) {
  const QuarticModel M = quartic_model(I, J);
  const auto X = conic_point(M.m0, t);
  const long n0 = M.J[0], n1 = M.J[1];
  const Rat q = (X[1] * X[1] - X[0] * X[0]) / Rat(n1 - n0);
  const Rat a = X[0] * X[0] - Rat(n0) * q;
  for (long n : I)
    if (!is_rational_square(a + Rat(n) * q))
      throw std::invalid_argument("t_to_ap: t = " + to_string(t) + " gives a non-square at position " + std::to_string(n));
  if (q == 0) return std::nullopt;
  const Int l = lcm_den(q, a);
  const Rat s = Rat(l * l);
  ArithProgression ap = make_ap(Rat(q * s).get_num(), Rat(a * s).get_num());
  if (!squares_at(ap, I)) throw std::logic_error("t_to_ap: validation failed");
  return ap;
}

std::string ap_or_trivial(const std::optional<ArithProgression>& ap) { return ap ? to_string(*ap) : "(0,1)"; }

bool t_on_model(const QuarticModel& M, const ProjT& t) {
  if (t.infinity) return true;  // both quartics are monic
  return is_rational_square(M.p1(t.t)) && is_rational_square(M.p2(t.t));
}

QuarticInvariants quartic_invariants(const RatPoly& f) {
  if (f.degree() > 4) throw std::invalid_argument("quartic_invariants: degree above 4");
  const Rat a = f.coeff(4), b = f.coeff(3), c = f.coeff(2), d = f.coeff(1), e = f.coeff(0);
  return {12 * a * e - 3 * b * d + c * c,
          72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c};
}

namespace {

RatPoly rational_quartic(const Quotient& H) {
  if (H.radicand != 1) throw std::invalid_argument("quotient is not defined over Q");
  std::vector<Rat> c;
  for (const QuadExt& x : H.quartic.coeffs()) {
    if (!x.is_rational()) throw std::logic_error("quotient over Q has irrational coefficients");
    c.push_back(Rat(H.delta) * x.rational_part());
  }
  return RatPoly(c);
}

// Integral binary quartic in the same square class.
Quartic integral_quartic(const RatPoly& f) {
  Int l = 1;
  for (const Rat& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  Quartic q;
  for (int i = 0; i <= 4; ++i) q[i] = Rat(f.coeff(i) * l * l).get_num();
  return q;
}

// Rational points of y^2 = f(t), at most one entry per t.
std::vector<ProjT> search_points(const RatPoly& f, long H) {
  std::vector<ProjT> out;
  const Quartic q = integral_quartic(f);
  if (q[4] == 0 || is_square_int(q[4])) out.push_back({0, true});
  for (long b = 1; b <= H; ++b)
    for (long a = -H; a <= H; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Int A = a, B = b;
      const Int bpow[5] = {1, B, B * B, B * B * B, B * B * B * B};
      Int v = 0, ap = 1;
      for (int i = 0; i <= 4; ++i) {
        v += q[i] * ap * bpow[4 - i];
        ap *= A;
      }
      if (v == 0 || is_square_int(v)) out.push_back({make_rat(A, B)});
    }
  std::sort(out.begin(), out.end());
  return out;
}

long point_count(const RatPoly& f, const std::vector<ProjT>& ts) {
  long n = 0;
  for (const ProjT& t : ts) {
    if (t.infinity)
      n += f.coeff(4) == 0 ? 1 : 2;
    else
      n += f(t.t) == 0 ? 1 : 2;
  }
  return n;
}

}  // namespace

bool quotient_locally_empty(const Quotient& H) {
  const RatPoly f = rational_quartic(H);
  const Quartic q = integral_quartic(f);
  if (!quartic_real_soluble(q)) return true;
  RatPoly fi(std::vector<Rat>(q.begin(), q.end()));
  const QuarticInvariants inv = quartic_invariants(fi);
  const Rat disc27 = 4 * inv.I * inv.I * inv.I - inv.J * inv.J;
  if (disc27 == 0) throw std::invalid_argument("quotient quartic is singular");
  std::set<Int> primes{2, 3};
  for (const Int& p : prime_support(disc27.get_num())) primes.insert(p);
  for (const Int& p : primes)
    if (!quartic_padic_soluble(q, p)) return true;
  return false;
}

Rank0Resolution resolve_H_rank0_overQ(const Quotient& H, long search_height) {
  Rank0Resolution r;
  const RatPoly f = rational_quartic(H);
  const std::vector<ProjT> found = search_points(f, search_height);
  if (found.empty()) {
    r.reason = "no rational point found up to height " + std::to_string(search_height);
    return r;
  }
  const QuarticInvariants inv = quartic_invariants(f);
  const Curve E{0, -27 * inv.I, -27 * inv.J};
  const std::vector<Rat> roots = rational_roots(RatPoly{E.a6, E.a4, E.a2, Rat(1)});
  if (roots.empty()) {
    r.reason = "Jacobian has no rational 2-torsion";
    return r;
  }
  if (roots.size() == 3) {
    r.rank_upper = full_two_descent(FactoredCurve(roots[0], roots[1], roots[2])).rank_upper;
  } else {
    const Point T{roots[0], 0};
    const auto [E2, T2] = isogenous_curve(E, T);
    r.rank_upper = two_isogeny_selmer(E, T).dim + two_isogeny_selmer(E2, T2).dim - 2;
  }
  if (r.rank_upper > 0) {
    r.reason = "rank bound " + std::to_string(r.rank_upper) + " is positive";
    return r;
  }
  r.torsion_order = torsion_nagell_lutz(E).order();
  const long count = point_count(f, found);
  if (count > r.torsion_order) throw std::logic_error("resolve_H_rank0_overQ: more points than the Jacobian has");
  if (count < r.torsion_order) {
    r.reason = "found " + std::to_string(count) + " of " + std::to_string(r.torsion_order) + " points";
    return r;
  }
  r.t_values = found;
  r.resolved = true;
  return r;
}

std::vector<ArithProgression> CoveringDatum::progressions() const {
  std::set<ArithProgression> s;
  for (const QuotientRow& row : rows)
    for (const auto& ap : row.aps)
      if (ap) s.insert(*ap);
  return {s.begin(), s.end()};
}

CoveringDatum analyze_choice(const Subset& I, const Triple& J, int j1, int j2) {
  const QuarticModel M = quartic_model(I, J);
  CoveringDatum d;
  d.I = I;
  d.J = M.J;
  d.j1 = j1;
  d.j2 = j2;
  d.radicand = choice_radicand(M, j1, j2);
  d.twists = frak_S(I, J, j1, j2);
  d.resolved = true;
  for (const SquareClass& delta : d.twists) {
    QuotientRow row;
    row.delta = delta;
    row.signs = "(+,+)";
    row.empty = "unknown";
    if (d.radicand != 1) {
      row.note = "requires elliptic Chabauty (out of scope)";
      d.resolved = false;
      d.rows.push_back(row);
      continue;
    }
    std::string why;
    for (const auto& [s1, s2] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
      const Quotient H = h_quotient(I, J, j1, j2, delta, s1, s2);
      if (quotient_locally_empty(H)) {
        row.signs = H.signs();
        row.empty = "yes";
        row.note = "no local point";
        row.resolved = true;
        break;
      }
      const Rank0Resolution res = resolve_H_rank0_overQ(H);
      if (res.resolved) {
        row.signs = H.signs();
        row.empty = "no";
        row.rank_window = std::pair{0, 0};
        row.t_values = res.t_values;
        for (const ProjT& t : res.t_values)
          if (t_on_model(M, t)) row.aps.push_back(t_to_ap(I, M.J, t));
        row.resolved = true;
        break;
      }
      if (why.empty()) why = H.signs() + ": " + res.reason;
    }
    if (!row.resolved) {
      row.note = why;
      d.resolved = false;
    }
    d.rows.push_back(row);
  }
  return d;
}

std::string covering_to_json(const CoveringDatum& d) {
  nlohmann::ordered_json j;
  j["subset"] = d.I;
  j["J"] = d.J;
  j["j"] = {d.j1, d.j2};
  j["field"] = d.radicand == 1 ? std::string("Q") : "Q(sqrt(" + d.radicand.get_str() + "))";
  std::vector<std::string> tw;
  for (const SquareClass& s : d.twists) tw.push_back(s.get_str());
  j["twists"] = tw;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const QuotientRow& r : d.rows) {
    nlohmann::ordered_json row;
    row["delta"] = r.delta.get_str();
    row["signs"] = r.signs;
    row["empty"] = r.empty;
    if (r.rank_window)
      row["rank_window"] = {r.rank_window->first, r.rank_window->second};
    else
      row["rank_window"] = nullptr;
    std::vector<std::string> ts, aps;
    for (const ProjT& t : r.t_values) ts.push_back(to_string(t));
    for (const auto& ap : r.aps) aps.push_back(ap_or_trivial(ap));
    row["t_values"] = ts;
    row["ap"] = aps;
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["resolved"] = d.resolved;
  return j.dump();
}

std::string to_string(ZStatus s) {
  switch (s) {
    case ZStatus::zero: return "z_zero";
    case ZStatus::positive: return "z_positive";
    default: return "undecided";
  }
}

ZResolution resolve_z5(const Subset& I) {
  ZResolution out;
  for (const CoveringChoice& c : covering_choices(I)) {
    if (!c.radicand || *c.radicand != 1) continue;
    CoveringDatum d = analyze_choice(I, c.J, c.j1, c.j2);
    if (!d.resolved) continue;
    out.witnesses = d.progressions();
    out.status = out.witnesses.empty() ? ZStatus::zero : ZStatus::positive;
    out.datum = std::move(d);
    return out;
  }
  return out;
}

}  // namespace aps
