#include "aps/elliptic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "aps/poly.hpp"

namespace aps {

std::string to_string(const Point& p) {
  if (p.inf) return "O";
  return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

Rat Curve::discriminant() const {
  // 16 * disc(x^3 + a2 x^2 + a4 x + a6)
  const Rat d = -4 * a2 * a2 * a2 * a6 + a2 * a2 * a4 * a4 + 18 * a2 * a4 * a6 - 4 * a4 * a4 * a4 - 27 * a6 * a6;
  return 16 * d;
}

std::string Curve::str() const {
  std::string s = "y^2 = x^3";
  auto term = [&](const Rat& c, const std::string& mono) {
    if (c == 0) return;
    s += c > 0 ? " + " : " - ";
    const Rat m = abs(c);
    if (mono.empty())
      s += to_string(m);
    else
      s += (m == 1 ? "" : to_string(m) + "*") + mono;
  };
  term(a2, "x^2");
  term(a4, "x");
  term(a6, "");
  return s;
}

FactoredCurve::FactoredCurve(Rat e1, Rat e2, Rat e3) : e_{std::move(e1), std::move(e2), std::move(e3)} {
  if (e_[0] == e_[1] || e_[0] == e_[2] || e_[1] == e_[2]) throw std::invalid_argument("FactoredCurve: repeated root");
}

Curve FactoredCurve::curve() const {
  return {-(e_[0] + e_[1] + e_[2]), e_[0] * e_[1] + e_[0] * e_[2] + e_[1] * e_[2], -(e_[0] * e_[1] * e_[2])};
}

std::vector<Point> FactoredCurve::two_torsion() const { return {{e_[0], 0}, {e_[1], 0}, {e_[2], 0}}; }

std::string FactoredCurve::str() const {
  std::string s = "y^2 = ";
  for (const Rat& e : e_) {
    if (e == 0)
      s += "x";
    else
      s += "(x " + std::string(e > 0 ? "- " : "+ ") + to_string(Rat(abs(e))) + ")";
  }
  return s;
}

Point ec_neg(const Point& p) { return p.inf ? p : Point{p.x, -p.y}; }

Point ec_add(const Curve& E, const Point& p, const Point& q) {
  if (!E.on_curve(p) || !E.on_curve(q)) throw std::invalid_argument("ec_add: point not on curve");
  if (p.inf) return q;
  if (q.inf) return p;
  Rat lambda;
  if (p.x == q.x) {
    if (p.y != q.y || p.y == 0) return Point::infinity();
    lambda = (3 * p.x * p.x + 2 * E.a2 * p.x + E.a4) / (2 * p.y);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  Rat x3 = lambda * lambda - E.a2 - p.x - q.x;
  Rat y3 = -(p.y + lambda * (x3 - p.x));
  return {x3, y3};
}

Point scalar_mul(const Curve& E, long n, const Point& p) {
  Point base = n < 0 ? ec_neg(p) : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Point acc = Point::infinity();
  while (k) {
    if (k & 1) acc = ec_add(E, acc, base);
    k >>= 1;
    if (k) base = ec_add(E, base, base);
  }
  return acc;
}

int point_order(const Curve& E, const Point& p, int max_order) {
  Point acc = p;
  for (int n = 1; n <= max_order; ++n) {
    if (acc.inf) return n;
    acc = ec_add(E, acc, p);
  }
  return 0;
}

std::string TorsionStructure::str() const {
  if (d1 == 1) return d2 == 1 ? "0" : "Z/" + std::to_string(d2);
  return "Z/" + std::to_string(d1) + " x Z/" + std::to_string(d2);
}

namespace {

void add_unique(std::vector<Point>& pts, const Point& p) {
  if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
}

TorsionStructure structure_from(const Curve& E, std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    if (a.inf != b.inf) return a.inf;
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  TorsionStructure t;
  t.points = pts;
  const long n = static_cast<long>(pts.size());
  long two = 0, max_ord = 1;
  Point gen = Point::infinity();
  for (const Point& p : pts) {
    const int o = point_order(E, p, 16);
    if (o == 0) throw std::logic_error("torsion: point of infinite order in torsion set");
    if (o == 2) ++two;
    if (o > max_ord) {
      max_ord = o;
      gen = p;
    }
  }
  if (max_ord == n) {
    t.d1 = 1;
    t.d2 = n;
    if (n > 1) t.generators = {gen};
    return t;
  }
  t.d1 = n / max_ord;
  t.d2 = max_ord;
  if (t.d1 != 2 || two != 3) throw std::logic_error("torsion: unexpected group structure");
  t.generators = {gen};
  const Point half = scalar_mul(E, max_ord / 2, gen);
  for (const Point& p : pts)
    if (!p.inf && p.y == 0 && !(p == half)) {
      t.generators.push_back(p);
      break;
    }
  return t;
}

}  // namespace

std::vector<Point> halves(const FactoredCurve& F, const Point& p) {
  const Curve E = F.curve();
  std::vector<Point> out;
  if (p.inf) {
    out.push_back(Point::infinity());
    for (const Point& t : F.two_torsion()) out.push_back(t);
    return out;
  }
  Rat r[3];
  for (int i = 0; i < 3; ++i) {
    auto s = rational_sqrt(p.x - F.root(i));
    if (!s) return out;
    r[i] = *s;
  }
  for (int mask = 0; mask < 8; ++mask) {
    Rat s[3];
    for (int i = 0; i < 3; ++i) s[i] = (mask >> i & 1) ? Rat(-r[i]) : r[i];
    const Rat x = p.x + s[0] * s[1] + s[0] * s[2] + s[1] * s[2];
    auto y = rational_sqrt(E.rhs(x));
    if (!y) continue;
    for (const Rat& yy : {*y, Rat(-*y)}) {
      Point q{x, yy};
      if (ec_add(E, q, q) == p) add_unique(out, q);
    }
  }
  return out;
}

TorsionStructure torsion_subgroup(const FactoredCurve& F) {
  const Curve E = F.curve();
  std::vector<Point> two{Point::infinity()};
  for (const Point& t : F.two_torsion()) two.push_back(t);
  // 2-primary part: preimages under doubling until stable.
  while (true) {
    std::vector<Point> next = two;
    for (const Point& p : two)
      for (const Point& h : halves(F, p)) add_unique(next, h);
    if (next.size() == two.size()) break;
    two = std::move(next);
  }
  // 3-torsion from rational roots of psi_3.
  std::vector<Point> three{Point::infinity()};
  const RatPoly psi3{4 * E.a2 * E.a6 - E.a4 * E.a4, 12 * E.a6, 6 * E.a4, 4 * E.a2, Rat(3)};
  for (const Rat& x : rational_roots(psi3)) {
    auto y = rational_sqrt(E.rhs(x));
    if (!y || *y == 0) continue;
    three.push_back({x, *y});
    three.push_back({x, -*y});
  }
  std::vector<Point> all;
  for (const Point& a : two)
    for (const Point& b : three) add_unique(all, ec_add(E, a, b));
  return structure_from(E, all);
}

namespace {

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> ds{1};
  if (n == 1) return ds;
  for (auto& [p, e] : factor(n)) {
    const std::size_t m = ds.size();
    Int pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= p;
      for (std::size_t i = 0; i < m; ++i) ds.push_back(ds[i] * pw);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace

TorsionStructure torsion_nagell_lutz(const Curve& E) {
  if (E.discriminant() == 0) throw std::invalid_argument("torsion_nagell_lutz: singular curve");
  // Integral model X = u^2 x, Y = u^3 y.
  Int u = 1;
  for (const Rat* c : {&E.a2, &E.a4, &E.a6}) mpz_lcm(u.get_mpz_t(), u.get_mpz_t(), c->get_den().get_mpz_t());
  const Rat u2 = Rat(u * u);
  const Rat A = E.a2 * u2, B = E.a4 * u2 * u2, C = E.a6 * u2 * u2 * u2;
  const Curve M{A, B, C};
  const Int a = A.get_num(), b = B.get_num(), c = C.get_num();
  const Int D = -4 * a * a * a * c + a * a * b * b + 18 * a * b * c - 4 * b * b * b - 27 * c * c;
  std::vector<Point> cand{Point::infinity()};
  auto add_with_y = [&](const Int& y) {
    const RatPoly f{Rat(c - y * y), Rat(b), Rat(a), Rat(1)};
    for (const Rat& x : rational_roots(f)) {
      if (x.get_den() != 1) continue;
      add_unique(cand, {x, Rat(y)});
      add_unique(cand, {x, Rat(-y)});
    }
  };
  add_with_y(0);
  for (const Int& y : divisors(squarefree_decompose(D).root)) add_with_y(y);
  std::vector<Point> tors;
  for (const Point& p : cand)
    if (point_order(M, p, 12) != 0) tors.push_back(p);
  // Back to the original model.
  const Rat u3 = u2 * Rat(u);
  for (Point& p : tors)
    if (!p.inf) p = {p.x / u2, p.y / u3};
  return structure_from(E, tors);
}

long count_points_mod_p(const Curve& E, long p) {
  if (p < 3 || !is_probable_prime(Int(p))) throw std::invalid_argument("count_points_mod_p: odd prime required");
  const Int P = p;
  auto red = [&](const Rat& r) -> long {
    if (r.get_den() % P == 0) throw std::invalid_argument("count_points_mod_p: bad reduction");
    Int inv;
    mpz_invert(inv.get_mpz_t(), Int(r.get_den() % P).get_mpz_t(), P.get_mpz_t());
    Int v = (r.get_num() * inv) % P;
    if (v < 0) v += P;
    return v.get_si();
  };
  if (red(E.discriminant()) == 0) throw std::invalid_argument("count_points_mod_p: bad reduction");
  const long a2 = red(E.a2), a4 = red(E.a4), a6 = red(E.a6);
  std::vector<int> chi(p, -1);
  chi[0] = 0;
  for (long y = 1; y < p; ++y) chi[(y * y) % p] = 1;
  long n = 1;
  for (long x = 0; x < p; ++x) {
    const long v = (((x + a2) % p * x + a4) % p * x + a6) % p;
    n += 1 + chi[v];
  }
  return n;
}

std::vector<Point> point_search(const Curve& E, long H) {
  if (H < 1) throw std::invalid_argument("point_search: H >= 1 required");
  std::vector<Point> out;
  for (long d = 1; d <= H; ++d)
    for (long n = -H; n <= H; ++n) {
      if (std::gcd(n, d) != 1) continue;
      const Rat x = make_rat(n, d);
      auto y = rational_sqrt(E.rhs(x));
      if (!y) continue;
      out.push_back({x, *y});
      if (*y != 0) out.push_back({x, -*y});
    }
  return out;
}

int root_number(long a, long b) {
  if (!(0 < a && a < b) || std::gcd(a, b) != 1) throw std::invalid_argument("root_number: need 0 < a < b coprime");
  long alpha = 0;
  for (const Int& p : prime_support(Int(a) * b))
    if (p != 2) ++alpha;
  const Int diff = Int(b) * b - Int(a) * a;
  for (const Int& p : prime_support(diff))
    if (p % 4 == 1) ++alpha;
  const Int ab = Int(a) * b;
  int mu2 = 1;
  if (ab % 8 == 4) mu2 = 0;
  if (ab % 2 == 1 && (diff / 8) % 2 == 1) mu2 = 0;  // b^2 - a^2 is divisible by 8 here
  return (alpha % 2) == mu2 ? -1 : 1;
}

bool cohn_predicts_infinite(long n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("cohn: n must be odd and >= 3");
  return root_number(2, n) == -1;
}

}  // namespace aps
