#include "aps/descent.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "aps/curves.hpp"
#include "aps/poly.hpp"
#include "json.hpp"

namespace aps {

SquareClass square_class(const Rat& r) { return squarefree_part(r); }

SquareClass class_mul(const SquareClass& a, const SquareClass& b) {
  const Int g = gcd(a, b);
  return (a / g) * (b / g);
}

namespace {

using Bits = std::uint64_t;

Int strip(const Int& n, const Int& p) {
  Int u;
  mpz_remove(u.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return u;
}

long mod8(const Int& u) {
  Int m = u % 8;
  if (m < 0) m += 8;
  return m.get_si();
}

// Coordinates of r in Q_v*/Q_v*^2; p = 0 is the real place.
int place_dim(const Int& p) { return p == 0 ? 1 : (p == 2 ? 3 : 2); }

Bits local_bits(const Rat& r, const Int& p) {
  if (r == 0) throw std::invalid_argument("local_bits: zero");
  if (p == 0) return r < 0 ? 1 : 0;
  const Int n = r.get_num() * r.get_den();  // same class as r
  const int v = padic_valuation(p, n);
  const Int u = strip(n, p);
  Bits b = v & 1;
  if (p == 2) {
    const long m = mod8(u);
    if (m % 4 == 3) b |= 2;
    if (m == 3 || m == 5) b |= 4;
  } else if (legendre(u, p) == -1) {
    b |= 2;
  }
  return b;
}

// Span over F2 with distinct leading bits.
struct F2Span {
  std::vector<Bits> basis;

  Bits reduce(Bits v) const {
    for (Bits b : basis) {
      const Bits lead = Bits(1) << (63 - __builtin_clzll(b));
      if (v & lead) v ^= b;
    }
    return v;
  }
  bool add(Bits v) {
    v = reduce(v);
    if (!v) return false;
    basis.push_back(v);
    std::sort(basis.begin(), basis.end(), std::greater<>());
    return true;
  }
  int dim() const { return static_cast<int>(basis.size()); }
};

// Basis of {g in F2^n : row . g = 0 for all rows}.
std::vector<Bits> kernel(std::vector<Bits> rows, int n) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < n && r < rows.size(); ++c) {
    const Bits bit = Bits(1) << c;
    std::size_t sel = r;
    while (sel < rows.size() && !(rows[sel] & bit)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<Bits> out;
  for (int f = 0; f < n; ++f) {
    if (std::find(pivot_col.begin(), pivot_col.end(), f) != pivot_col.end()) continue;
    Bits v = Bits(1) << f;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      if (rows[i] >> f & 1) v |= Bits(1) << pivot_col[i];
    out.push_back(v);
  }
  return out;
}

int popcount_parity(Bits v) { return __builtin_popcountll(v) & 1; }

std::vector<Int> sorted_primes(const Int& n) {
  std::vector<Int> ps = prime_support(n);
  std::sort(ps.begin(), ps.end());
  return ps;
}

// Squarefree integer from a mask over {-1} + support.
SquareClass class_from_mask(Bits mask, const std::vector<Int>& support) {
  Int d = (mask & 1) ? -1 : 1;
  for (std::size_t i = 0; i < support.size(); ++i)
    if (mask >> (i + 1) & 1) d *= support[i];
  return d;
}

Int pow_int(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// Coefficients of f(x0 + p^k t) in t.
std::vector<Int> shifted(const std::vector<Int>& f, const Int& x0, const Int& pk) {
  std::vector<Int> g = f;
  const int n = static_cast<int>(g.size());
  for (int i = 0; i < n; ++i)
    for (int j = n - 2; j >= i; --j) g[j] += x0 * g[j + 1];
  Int s = 1;
  for (int i = 0; i < n; ++i) {
    g[i] *= s;
    s *= pk;
  }
  return g;
}

bool class_soluble(const std::vector<Int>& f, const Int& p, const Int& x0, int k, int depth) {
  if (depth > 400) throw std::runtime_error("p-adic solubility: refinement did not terminate");
  const std::vector<Int> g = shifted(f, x0, pow_int(p, k));
  if (g[0] == 0) return true;
  const int v0 = padic_valuation(p, g[0]);
  int m = INT_MAX;
  for (std::size_t i = 1; i < g.size(); ++i)
    if (g[i] != 0) m = std::min(m, padic_valuation(p, g[i]));
  if (v0 < m) {
    const Int unit = strip(g[0], p);
    if (p != 2) return v0 % 2 == 0 && legendre(unit, p) == 1;
    if (m - v0 >= 3) return v0 % 2 == 0 && mod8(unit) == 1;
  }
  if (g.size() > 1 && g[1] != 0 && v0 > 2 * padic_valuation(p, g[1])) return true;  // Hensel root
  for (Int t = 0; t < p; ++t)
    if (class_soluble(f, p, x0 + pow_int(p, k) * t, k + 1, depth + 1)) return true;
  return false;
}

bool has_rational_zero(const Quartic& c) {
  if (c[0] == 0 || c[4] == 0) return true;
  std::vector<Rat> coeffs(c.begin(), c.end());
  return !rational_roots(RatPoly(coeffs)).empty();
}

}  // namespace

bool is_padic_square(const Rat& r, const Int& p) {
  if (r == 0) return false;
  const Int n = r.get_num() * r.get_den();
  if (padic_valuation(p, n) % 2) return false;
  const Int u = strip(n, p);
  return p == 2 ? mod8(u) == 1 : legendre(u, p) == 1;
}

bool quartic_real_soluble(const Quartic& c) {
  if (c[0] >= 0 || c[4] >= 0) return true;
  std::vector<Rat> coeffs(c.begin(), c.end());
  return count_real_roots(RatPoly(coeffs)) > 0;
}

bool quartic_padic_soluble(const Quartic& c, const Int& p) {
  if (has_rational_zero(c)) return true;
  std::vector<Int> f(c.begin(), c.end());
  // y^2 = f is unchanged in class when f is divided by p^2.
  while (std::all_of(f.begin(), f.end(), [&](const Int& x) { return x % (p * p) == 0; }))
    for (Int& x : f) x /= p * p;
  if (class_soluble(f, p, 0, 0, 0)) return true;  // (u : 1), u in Z_p
  std::vector<Int> rev(f.rbegin(), f.rend());
  return class_soluble(rev, p, 0, 1, 0);  // (1 : v), v in pZ_p
}

bool quartic_soluble_bruteforce(const Quartic& c, long p, int k) {
  long pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  const Int P = p;
  for (long u = 0; u < pk; ++u)
    for (long v = -pk + 1; v < pk; ++v) {
      if (u % p == 0 && v % p == 0) continue;
      Int val = 0, up = 1;
      for (int i = 0; i <= 4; ++i) {
        val += c[i] * up * pow_int(Int(v), 4 - i);
        up *= u;
      }
      if (val == 0 || is_padic_square(Rat(val), P)) return true;
    }
  return false;
}

bool SelmerGroup::contains(const SquareClass& d) const {
  return std::find(elements.begin(), elements.end(), d) != elements.end();
}

namespace {

struct Translated {
  Int a;  // y^2 = x(x^2 + a x + b), integral after scaling by u^2
  Int b;
  Rat r;
  Rat u2;
};

Translated translate(const Curve& E, const Point& T) {
  if (T.inf || T.y != 0 || !E.on_curve(T)) throw std::invalid_argument("two-isogeny: T must be a rational 2-torsion point");
  const Rat& r = T.x;
  const Rat a = 3 * r + E.a2;
  const Rat b = 3 * r * r + 2 * E.a2 * r + E.a4;
  if (b == 0 || a * a - 4 * b == 0) throw std::invalid_argument("two-isogeny: singular curve");
  Int u;
  mpz_lcm(u.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  const Rat u2 = Rat(u * u);
  const Rat A = a * u2, B = b * u2 * u2;
  return {A.get_num(), B.get_num(), r, u2};
}

}  // namespace

SelmerGroup two_isogeny_selmer(const Curve& E, const Point& T) {
  const Translated t = translate(E, T);
  SelmerGroup sel;
  sel.support = sorted_primes(2 * t.b * (t.a * t.a - 4 * t.b));
  const std::size_t n = sel.support.size() + 1;
  if (n > 20) throw std::runtime_error("two_isogeny_selmer: support too large");
  std::vector<SquareClass> found;
  for (Bits mask = 0; mask < (Bits(1) << n); ++mask) {
    const SquareClass d = class_from_mask(mask, sel.support);
    const Quartic q{t.b * d, 0, t.a * d * d, 0, d * d * d};
    bool ok = quartic_real_soluble(q);
    for (std::size_t i = 0; ok && i < sel.support.size(); ++i) ok = quartic_padic_soluble(q, sel.support[i]);
    if (ok) found.push_back(d);
  }
  std::sort(found.begin(), found.end(), [](const Int& x, const Int& y) {
    return abs(x) != abs(y) ? abs(x) < abs(y) : x > y;
  });
  sel.elements = found;
  int dim = 0;
  while ((std::size_t(1) << dim) < found.size()) ++dim;
  if ((std::size_t(1) << dim) != found.size()) throw std::logic_error("two_isogeny_selmer: result is not a group");
  sel.dim = dim;
  return sel;
}

std::pair<Curve, Point> isogenous_curve(const Curve& E, const Point& T) {
  if (T.inf || T.y != 0 || !E.on_curve(T)) throw std::invalid_argument("isogenous_curve: T must be 2-torsion");
  const Rat& r = T.x;
  const Rat a = 3 * r + E.a2;
  const Rat b = 3 * r * r + 2 * E.a2 * r + E.a4;
  return {Curve{-2 * a, a * a - 4 * b, 0}, Point{0, 0}};
}

SquareClass descent_image(const Curve& E, const Point& T, const Point& P) {
  if (!E.on_curve(P)) throw std::invalid_argument("descent_image: point not on curve");
  if (T.inf || T.y != 0 || !E.on_curve(T)) throw std::invalid_argument("descent_image: T must be 2-torsion");
  if (P.inf) return 1;
  const Rat& r = T.x;
  if (P.x == r) return square_class(3 * r * r + 2 * E.a2 * r + E.a4);
  return square_class(P.x - r);
}

std::pair<SquareClass, SquareClass> kummer_image(const FactoredCurve& F, const Point& P) {
  if (!F.curve().on_curve(P)) throw std::invalid_argument("kummer_image: point not on curve");
  if (P.inf) return {1, 1};
  const Rat &e1 = F.e1(), &e2 = F.e2(), &e3 = F.e3();
  if (P.x == e1) return {square_class((e1 - e2) * (e1 - e3)), square_class(e1 - e2)};
  if (P.x == e2) return {square_class(e2 - e1), square_class((e2 - e1) * (e2 - e3))};
  return {square_class(P.x - e1), square_class(P.x - e2)};
}

namespace {

struct IntegralRoots {
  Int e[3];
};

IntegralRoots integral_roots(const FactoredCurve& F) {
  Int u = 1;
  for (int i = 0; i < 3; ++i) mpz_lcm(u.get_mpz_t(), u.get_mpz_t(), F.root(i).get_den().get_mpz_t());
  IntegralRoots r;
  for (int i = 0; i < 3; ++i) {
    const Rat v = F.root(i) * Rat(u * u);
    r.e[i] = v.get_num();
  }
  return r;
}

// Local pair image of x (x not a root) at place p.
Bits pair_bits(const Rat& c1, const Rat& c2, const Int& p) {
  const int d = place_dim(p);
  return local_bits(c1, p) | (local_bits(c2, p) << d);
}

Bits kummer_bits_int(const IntegralRoots& R, const Rat& x, const Int& p) {
  const Rat e1 = R.e[0], e2 = R.e[1], e3 = R.e[2];
  if (x == e1) return pair_bits((e1 - e2) * (e1 - e3), e1 - e2, p);
  if (x == e2) return pair_bits(e2 - e1, (e2 - e1) * (e2 - e3), p);
  return pair_bits(x - e1, x - e2, p);
}

// Span of the image of E(Q_p) in the pair space at p.
F2Span local_image(const IntegralRoots& R, const Int& p) {
  F2Span W;
  const Rat e[3] = {R.e[0], R.e[1], R.e[2]};
  W.add(kummer_bits_int(R, e[0], p));
  W.add(kummer_bits_int(R, e[1], p));
  W.add(kummer_bits_int(R, e[2], p));
  const int target = p == 0 ? 1 : (p == 2 ? 3 : 2);
  if (p == 0) {
    if (W.dim() != target) throw std::logic_error("local image at the real place has wrong dimension");
    return W;
  }
  auto try_x = [&](const Rat& x) {
    const Rat fx = (x - e[0]) * (x - e[1]) * (x - e[2]);
    if (fx == 0 || !is_padic_square(fx, p)) return;
    W.add(kummer_bits_int(R, x, p));
  };
  const long span = p < 50 ? 4 * p.get_si() * p.get_si() : 400;
  int depth = 8;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) depth = std::max(depth, 2 * padic_valuation(p, Int(R.e[a] - R.e[b])) + 6);
  for (int j = 0; j <= depth && W.dim() < target; ++j) {
    for (int sgn_j : {1, -1}) {
      const Rat pj = sgn_j > 0 ? Rat(pow_int(p, j)) : Rat(1, pow_int(p, j));
      for (long n = 1; n <= span && W.dim() < target; ++n)
        for (int base = -1; base < 3 && W.dim() < target; ++base) {
          const Rat b = base < 0 ? Rat(0) : e[base];
          try_x(b + pj * n);
          try_x(b - pj * n);
        }
    }
  }
  if (W.dim() != target) throw std::runtime_error("local image at p = " + p.get_str() + " not reached by sampling");
  return W;
}

}  // namespace

FullDescent full_two_descent(const FactoredCurve& F) {
  const IntegralRoots R = integral_roots(F);
  FullDescent out;
  {
    std::set<Int> s{2};
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        for (const Int& p : prime_support(R.e[i] - R.e[j])) s.insert(p);
    out.support.assign(s.begin(), s.end());
  }
  const int n = static_cast<int>(out.support.size()) + 1;  // basis {-1} + support
  if (2 * n > 62) throw std::runtime_error("full_two_descent: support too large");
  std::vector<Int> places{0};
  for (const Int& p : out.support) places.push_back(p);
  std::vector<Bits> rows;
  for (const Int& p : places) {
    const int d = place_dim(p);
    const F2Span W = local_image(R, p);
    // Local image of each global basis vector of the pair space.
    std::vector<Bits> img(2 * n);
    for (int i = 0; i < n; ++i) {
      const Rat g = i == 0 ? Rat(-1) : Rat(out.support[i - 1]);
      const Bits b = local_bits(g, p);
      img[i] = b;
      img[n + i] = b << d;
    }
    for (Bits a = 1; a < (Bits(1) << (2 * d)); ++a) {
      if (std::any_of(W.basis.begin(), W.basis.end(), [&](Bits w) { return popcount_parity(a & w); })) continue;
      Bits row = 0;
      for (int i = 0; i < 2 * n; ++i)
        if (popcount_parity(a & img[i])) row |= Bits(1) << i;
      rows.push_back(row);
    }
  }
  const std::vector<Bits> ker = kernel(rows, 2 * n);
  out.selmer_dim = static_cast<int>(ker.size());
  out.rank_upper = out.selmer_dim - 2;
  if (out.rank_upper < 0) throw std::logic_error("full_two_descent: Selmer group smaller than torsion image");
  const Bits low = (Bits(1) << n) - 1;
  for (Bits c = 0; c < (Bits(1) << ker.size()); ++c) {
    Bits v = 0;
    for (std::size_t i = 0; i < ker.size(); ++i)
      if (c >> i & 1) v ^= ker[i];
    out.selmer.emplace_back(class_from_mask(v & low, out.support), class_from_mask(v >> n, out.support));
  }
  std::sort(out.selmer.begin(), out.selmer.end());
  return out;
}

namespace {

Bits pair_mask(const std::pair<SquareClass, SquareClass>& pr, const std::vector<Int>& support) {
  const int n = static_cast<int>(support.size()) + 1;
  auto mask = [&](const Int& d) {
    Bits m = d < 0 ? 1 : 0;
    Int rest = abs(d);
    for (std::size_t i = 0; i < support.size(); ++i)
      if (rest % support[i] == 0) {
        m |= Bits(1) << (i + 1);
        rest /= support[i];
      }
    if (rest != 1) throw std::logic_error("class outside the descent support");
    return m;
  };
  return mask(pr.first) | (mask(pr.second) << n);
}

// A point with (x - e1, x - e2) in the class (b1, b2), searching
// x = e1 + b1 u^2 / w^2 with 1 <= u, w <= H.
std::optional<Point> find_point_in_class(const FactoredCurve& F, const IntegralRoots& R, const Rat& scale,
                                         const SquareClass& b1, const SquareClass& b2, long H) {
  const Int d12 = R.e[0] - R.e[1], d13 = R.e[0] - R.e[2];
  const bool small = abs(d12) < Int(1L << 20) && abs(d13) < Int(1L << 20) && abs(b1) < Int(1L << 20) &&
                     abs(b2) < Int(1L << 20) && H < 4096;
  for (long m = 1; m <= H; ++m) {
    for (long other = 1; other <= m; ++other) {
      for (int swap = 0; swap < 2; ++swap) {
        if (swap && other == m) continue;
        const long u = swap ? other : m, w = swap ? m : other;
        if (std::gcd(u, w) != 1) continue;
        bool hit;
        if (small) {
          const __int128 uu = static_cast<__int128>(u) * u, ww = static_cast<__int128>(w) * w;
          const __int128 B1 = b1.get_si(), B2 = b2.get_si();
          const __int128 s1 = (d12.get_si() * ww + B1 * uu) * B2;
          if (!is_square_i128(s1)) continue;
          const __int128 s2 = (d13.get_si() * ww + B1 * uu) * B1 * B2;
          hit = is_square_i128(s2);
        } else {
          const Int uu = Int(u) * u, ww = Int(w) * w;
          hit = is_square_int((d12 * ww + b1 * uu) * b2) && is_square_int((d13 * ww + b1 * uu) * b1 * b2);
        }
        if (!hit) continue;
        const Rat X = Rat(R.e[0]) + Rat(b1 * u * u) / Rat(Int(w) * w);
        const Rat x = X / scale;
        auto y = rational_sqrt(F.curve().rhs(x));
        if (!y) throw std::logic_error("point search: square test inconsistent");
        return Point{x, *y};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

namespace {

// Integer roots with square-free content, up to translation by a root and
// scaling by squares; the minimum over the three base roots is the key.
std::pair<Int, Int> isomorphism_key(const FactoredCurve& F) {
  std::optional<std::pair<Int, Int>> best;
  for (int b = 0; b < 3; ++b) {
    const FactoredCurve G(0, F.root((b + 1) % 3) - F.root(b), F.root((b + 2) % 3) - F.root(b));
    const IntegralRoots R = integral_roots(G);
    Int g;
    mpz_gcd(g.get_mpz_t(), R.e[1].get_mpz_t(), R.e[2].get_mpz_t());
    const Int sq = squarefree_decompose(g).root;
    std::pair<Int, Int> k{R.e[1] / (sq * sq), R.e[2] / (sq * sq)};
    if (k.second < k.first) std::swap(k.first, k.second);
    if (!best || k < *best) best = k;
  }
  return *best;
}

}  // namespace

IsogenyDescent isogeny_class_descent(const FactoredCurve& E, std::size_t max_curves) {
  IsogenyDescent out;
  std::set<std::pair<Int, Int>> seen;
  std::vector<FactoredCurve> todo{E};
  while (!todo.empty() && out.curves.size() < max_curves) {
    const FactoredCurve F = todo.front();
    todo.erase(todo.begin());
    if (!seen.insert(isomorphism_key(F)).second) continue;
    out.curves.push_back(F);
    out.rank_upper.push_back(full_two_descent(F).rank_upper);
    const Curve C = F.curve();
    for (const Point& T : F.two_torsion()) {
      // E/<T> keeps full 2-torsion when its quadratic factor splits.
      const Curve E2 = isogenous_curve(C, T).first;
      if (auto s = rational_sqrt(E2.a2 * E2.a2 - 4 * E2.a4)) todo.emplace_back(0, (-E2.a2 + *s) / 2, (-E2.a2 - *s) / 2);
    }
  }
  out.best = *std::min_element(out.rank_upper.begin(), out.rank_upper.end());
  return out;
}

namespace {

// Independent non-torsion points on F found on its 2-coverings; stops at `cap`.
std::vector<Point> independent_points(const FactoredCurve& F, const FullDescent& fd, long height, int cap) {
  const IntegralRoots R = integral_roots(F);
  const Rat scale = R.e[0] != 0 ? Rat(R.e[0]) / F.e1() : (R.e[1] != 0 ? Rat(R.e[1]) / F.e2() : Rat(R.e[2]) / F.e3());
  F2Span span;
  // Torsion generators, not just E[2]: a 2-torsion point may be a double.
  for (const Point& t : F.two_torsion()) span.add(pair_mask(kummer_image(F, t), fd.support));
  for (const Point& t : torsion_subgroup(F).generators) span.add(pair_mask(kummer_image(F, t), fd.support));
  std::vector<Point> pts;
  for (const auto& el : fd.selmer) {
    if (span.dim() - 2 >= cap) break;
    if (span.reduce(pair_mask(el, fd.support)) == 0) continue;
    auto P = find_point_in_class(F, R, scale, el.first, el.second, height);
    if (!P) continue;
    if (span.add(pair_mask(kummer_image(F, *P), fd.support))) pts.push_back(*P);
  }
  return pts;
}

}  // namespace

RankWindow rank_window(const FactoredCurve& F, long height) {
  const FullDescent fd = full_two_descent(F);
  RankWindow w;
  w.own_upper = fd.rank_upper;
  w.selmer_dim = fd.selmer_dim;
  if (fd.rank_upper == 0) return w;
  const IsogenyDescent iso = isogeny_class_descent(F);
  w.upper = iso.best;
  w.points = independent_points(F, fd, height, w.upper);
  w.lower = static_cast<int>(w.points.size());
  // Rank is an isogeny invariant, so points on any curve in the class count.
  for (std::size_t i = 1; i < iso.curves.size() && w.lower < w.upper; ++i) {
    auto pts = independent_points(iso.curves[i], full_two_descent(iso.curves[i]), height, w.upper);
    if (static_cast<int>(pts.size()) > w.lower) {
      w.lower = static_cast<int>(pts.size());
      w.points = std::move(pts);
      w.point_curve = iso.curves[i].str();
    }
  }
  return w;
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::z_zero: return "z_zero";
    case Conclusion::z_positive_with_witnesses: return "z_positive_with_witnesses";
    default: return "inconclusive";
  }
}

Conclusion parse_conclusion(const std::string& s) {
  if (s == "z_zero") return Conclusion::z_zero;
  if (s == "z_positive_with_witnesses") return Conclusion::z_positive_with_witnesses;
  if (s == "inconclusive") return Conclusion::inconclusive;
  throw std::invalid_argument("unknown conclusion: " + s);
}

DescentCertificate certify_z_zero(const Subset& I, const CertifyOptions& opt) {
  validate_subset(I);
  if (I.size() != 4) throw std::invalid_argument("certify_z_zero: four elements required");
  DescentCertificate c;
  c.subset = canonical_primitive(I);
  c.tool_version = APS_VERSION;
  const FourTupleModel M = model_four(c.subset);
  c.roots = {M.curve.e1(), M.curve.e2(), M.curve.e3()};
  const RankWindow w = rank_window(M.curve, opt.point_height);
  c.selmer_dim = w.selmer_dim;
  c.rank_upper = w.upper;
  c.rank_lower = w.lower;
  const TorsionStructure T = torsion_subgroup(M.curve);
  c.torsion = T.str();
  c.torsion_order = T.order();
  // Rank 0 with only the eight images of trivial points leaves nothing else.
  if (c.rank_upper == 0 && c.torsion_order == 8) {
    if (!is_symmetric(c.subset) && remark_ap(c.subset))
      throw std::logic_error("certify_z_zero: progression on a curve with only trivial points");
    c.conclusion = Conclusion::z_zero;
    return c;
  }
  if (is_symmetric(c.subset)) {
    c.witnesses = search_aps(c.subset, opt.witness_bound);
  } else if (auto ap = remark_ap(c.subset)) {
    c.witnesses = {*ap};
  }
  c.conclusion = c.witnesses.empty() ? Conclusion::inconclusive : Conclusion::z_positive_with_witnesses;
  return c;
}

std::string certificate_to_json(const DescentCertificate& c) {
  nlohmann::ordered_json j;
  j["subset"] = c.subset;
  j["roots"] = {to_string(c.roots[0]), to_string(c.roots[1]), to_string(c.roots[2])};
  j["selmer_dim"] = c.selmer_dim;
  j["rank_upper"] = c.rank_upper;
  j["rank_lower"] = c.rank_lower;
  j["torsion"] = c.torsion;
  j["torsion_order"] = c.torsion_order;
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const auto& ap : c.witnesses) ws.push_back({{"q", to_string(ap.q)}, {"a", to_string(ap.a)}});
  j["witnesses"] = ws;
  j["conclusion"] = to_string(c.conclusion);
  j["tool_version"] = c.tool_version;
  return j.dump();
}

DescentCertificate certificate_from_json(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  DescentCertificate c;
  c.subset = j.at("subset").get<Subset>();
  validate_subset(c.subset);
  const auto& roots = j.at("roots");
  if (roots.size() != 3) throw std::invalid_argument("certificate: three roots expected");
  for (int i = 0; i < 3; ++i) c.roots[i] = parse_rat(roots[i].get<std::string>());
  c.selmer_dim = j.at("selmer_dim").get<int>();
  c.rank_upper = j.at("rank_upper").get<int>();
  c.rank_lower = j.at("rank_lower").get<int>();
  c.torsion = j.at("torsion").get<std::string>();
  c.torsion_order = j.value("torsion_order", 0L);
  for (const auto& w : j.at("witnesses"))
    c.witnesses.push_back({Int(w.at("q").get<std::string>()), Int(w.at("a").get<std::string>())});
  c.conclusion = parse_conclusion(j.at("conclusion").get<std::string>());
  c.tool_version = j.at("tool_version").get<std::string>();
  if (c.rank_lower > c.rank_upper) throw std::invalid_argument("certificate: rank_lower > rank_upper");
  return c;
}

}  // namespace aps
