#include "aps/poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace aps {

namespace {

template <class F>
std::string poly_string(const Poly<F>& p, const std::string& var, auto&& coeff_str) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const F& c = p.coeffs()[i];
    if (c == F(0)) continue;
    std::string cs = coeff_str(c);
    if (!out.empty()) out += " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (i == 0)
      out += cs;
    else if (cs == "1")
      out += mono;
    else
      out += (cs.find_first_of("+ ") != std::string::npos ? "(" + cs + ")" : cs) + "*" + mono;
  }
  return out;
}

using IntPoly = std::vector<Int>;  // increasing degree

int sgn_at(const IntPoly& f, const Int& x) {
  Int acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

IntPoly derivative(const IntPoly& f) {
  IntPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  return d;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Sorted integers k such that every real root of f lies in some [k, k+1].
std::vector<Int> real_brackets(const IntPoly& f) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 0) return {};
  if (deg == 1) return {floor_div(-f[0], f[1])};
  const std::vector<Int> crit = real_brackets(derivative(f));
  Int bound = 0;
  for (int i = 0; i < deg; ++i) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), Int(abs(f[i])).get_mpz_t(), Int(abs(f[deg])).get_mpz_t());
    if (q > bound) bound = q;
  }
  bound += 2;
  std::set<Int> pts{-bound, bound};
  std::set<Int> crit_set(crit.begin(), crit.end());
  for (const Int& k : crit) {
    if (k >= -bound && k + 1 <= bound) {
      pts.insert(k);
      pts.insert(k + 1);
    }
  }
  std::set<Int> out;
  for (auto it = pts.begin(); std::next(it) != pts.end(); ++it) {
    const Int u = *it;
    const Int v = *std::next(it);
    if (v == u + 1 && crit_set.count(u)) {
      out.insert(u);
      continue;
    }
    const int su = sgn_at(f, u);
    const int sv = sgn_at(f, v);
    if (su == 0) out.insert(u);
    if (sv == 0) out.insert(v);
    if (su == 0 || sv == 0 || su == sv) continue;
    Int lo = u, hi = v;  // monotone on [lo, hi], sign change strictly inside
    while (hi - lo > 1) {
      Int mid = floor_div(lo + hi, 2);
      const int sm = sgn_at(f, mid);
      if (sm == 0) {
        lo = mid;
        hi = mid + 1;
        break;
      }
      (sm == su ? lo : hi) = mid;
    }
    out.insert(lo);
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::string to_string(const RatPoly& p, const std::string& var) {
  return poly_string(p, var, [](const Rat& c) { return to_string(c); });
}

std::string to_string(const QuadPoly& p, const std::string& var) {
  return poly_string(p, var, [](const QuadExt& c) { return c.str(); });
}

RatPoly poly_rem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("poly_rem: zero divisor");
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  const Rat lead = b.leading();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    Rat f = r[i] / lead;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  r.resize(std::min<std::size_t>(r.size(), static_cast<std::size_t>(db)));
  return RatPoly(std::move(r));
}

int count_real_roots(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  std::vector<RatPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    RatPoly r = poly_rem(seq[seq.size() - 2], seq.back());
    seq.push_back(Rat(-1) * r);
  }
  seq.pop_back();
  auto variations = [&](bool plus_inf) {
    int v = 0, prev = 0;
    for (const RatPoly& q : seq) {
      int s = sgn(q.leading());
      if (!plus_inf && q.degree() % 2) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  return variations(false) - variations(true);
}

std::vector<Rat> rational_roots(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<Rat> roots;
  // Integer coefficients, root 0 removed.
  Int den = 1;
  for (const Rat& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  IntPoly f;
  for (const Rat& c : p.coeffs()) f.push_back(c.get_num() * (den / c.get_den()));
  std::size_t shift = 0;
  while (shift < f.size() && f[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(0);
  f.erase(f.begin(), f.begin() + static_cast<long>(shift));
  const int n = static_cast<int>(f.size()) - 1;
  if (n >= 1) {
    // y = lead * x turns f into a monic integer polynomial g.
    const Int lead = f[n];
    // g[i] = f[i] * lead^(n-1-i) for i < n.
    IntPoly g(n + 1);
    Int pw = 1;
    for (int i = n - 1; i >= 0; --i) {
      g[i] = f[i] * pw;
      pw *= lead;
    }
    g[n] = 1;
    for (const Int& k : real_brackets(g)) {
      for (const Int& y : {k, Int(k + 1)}) {
        if (sgn_at(g, y) == 0) {
          Rat x = make_rat(y, lead);
          if (std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace aps
