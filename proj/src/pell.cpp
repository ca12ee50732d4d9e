#include "aps/pell.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace aps {

namespace {

Int isqrt_floor(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

void require_pell(const Int& D) {
  if (D <= 0 || is_square(D)) throw std::invalid_argument("Pell equation needs a positive non-square D");
}

}  // namespace

std::pair<Int, Int> pell_unit(const Int& D) {
  require_pell(D);
  // Continued fraction of sqrt(D) until x^2 - D y^2 = 1.
  const Int a0 = isqrt_floor(D);
  Int m = 0, d = 1, a = a0;
  Int h1 = 1, h = a0, k1 = 0, k = 1;
  while (h * h - D * k * k != 1) {
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
    Int h2 = a * h + h1, k2 = a * k + k1;
    h1 = h;
    k1 = k;
    h = h2;
    k = k2;
  }
  return {h, k};
}

std::vector<std::pair<Int, Int>> pell_fundamental(const Int& D, const Int& c) {
  require_pell(D);
  if (c == 0) return {{0, 0}};
  const auto [u0, v0] = pell_unit(D);
  Int ylo = 0, yhi;
  if (c > 0) {
    yhi = isqrt_floor(v0 * v0 * c / (2 * (u0 + 1)));
  } else {
    const Int ac = -c;
    ylo = isqrt_floor(ac / D);
    yhi = isqrt_floor(v0 * v0 * ac / (2 * (u0 - 1)));
  }
  if (yhi - ylo > 50000000) throw std::runtime_error("pell_fundamental: search window too large");
  std::vector<std::pair<Int, Int>> out;
  for (Int y = ylo; y <= yhi; ++y) {
    const Int x2 = c + D * y * y;
    if (is_square(x2)) out.emplace_back(isqrt_floor(x2), y);
  }
  return out;
}

std::vector<std::pair<Int, Int>> pell_solve(const Int& D, const Int& c, std::size_t count) {
  const auto fund = pell_fundamental(D, c);
  if (c == 0) return count ? fund : std::vector<std::pair<Int, Int>>{};
  const auto [u0, v0] = pell_unit(D);
  // Seeds (x, y) and (-x, y); their forward orbits cover every solution
  // with x, y >= 0 once absolute values are taken.
  std::vector<std::pair<Int, Int>> frontier;
  for (const auto& [x, y] : fund) {
    frontier.emplace_back(x, y);
    frontier.emplace_back(-x, y);
  }
  std::set<std::pair<Int, Int>> found;
  for (const auto& [x, y] : frontier) found.emplace(abs(x), abs(y));
  // |x| along an orbit is a sum of a growing and a decaying exponential, so
  // it increases for good once it has increased once.
  std::vector<bool> rising(frontier.size(), false);
  while (true) {
    if (count == 0 || frontier.empty()) break;
    if (found.size() >= count) {
      const Int threshold = std::next(found.begin(), static_cast<long>(count) - 1)->first;
      bool done = true;
      for (std::size_t i = 0; i < frontier.size() && done; ++i)
        done = rising[i] && abs(frontier[i].first) > threshold;
      if (done) break;
    }
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      auto& [x, y] = frontier[i];
      const Int nx = u0 * x + D * v0 * y, ny = v0 * x + u0 * y;
      rising[i] = abs(nx) > abs(x);
      x = nx;
      y = ny;
      found.emplace(abs(x), abs(y));
    }
  }
  std::vector<std::pair<Int, Int>> out(found.begin(), found.end());
  if (out.size() > count) out.resize(count);
  for (const auto& [x, y] : out)
    if (x * x - D * y * y != c) throw std::logic_error("pell_solve: invalid solution");
  return out;
}

std::vector<Int> ap_intersection(const Int& q1, const Int& a1, const Int& q2, const Int& a2, std::size_t count,
                                 long scan_bound) {
  std::vector<Int> out;
  if (count == 0) return out;
  const Int D = q1 * q2;
  const Int c = q2 * q2 * a1 * a1 - q1 * q2 * a2 * a2;
  if (q1 > 0 && q2 > 0 && !is_square(D) && c != 0) {
    for (std::size_t want = count;; want *= 2) {
      out.clear();
      const auto sols = pell_solve(D, c, want);
      // x = q2 X with X^2 = q1 n + a1^2.
      for (const auto& [x, y] : sols) {
        if (x % q2 != 0) continue;
        const Int X = x / q2;
        const Int num = X * X - a1 * a1;
        if (num < 0 || num % q1 != 0) continue;
        const Int n = num / q1;
        if (!is_square(q2 * n + a2 * a2)) throw std::logic_error("ap_intersection: Pell solution fails second progression");
        if (out.empty() || out.back() != n) out.push_back(n);
        if (out.size() == count) return out;
      }
      if (sols.size() < want) return out;  // finitely many
    }
  }
  // Scan; finite when either progression decreases.
  long limit = scan_bound;
  const Int A1 = a1 * a1, A2 = a2 * a2;
  if (q1 < 0) limit = std::min<long>(limit, Int(A1 / -q1).get_si());
  if (q2 < 0) limit = std::min<long>(limit, Int(A2 / -q2).get_si());
  for (long n = 0; n <= limit && out.size() < count; ++n)
    if (is_square(q1 * n + A1) && is_square(q2 * n + A2)) out.push_back(n);
  return out;
}

std::vector<Int> ej48_family(long s) {
  if (s < 2) throw std::invalid_argument("ej48_family: s >= 2 required");
  const Int S = s, S2 = S * S, S4 = S2 * S2, S6 = S4 * S2;
  std::vector<Int> out{0, 4 * S, 4 * S * (4 * S2 - 1), 8 * S * (8 * S4 - 6 * S2 + 1),
                       8 * S * (32 * S6 - 40 * S4 + 14 * S2 - 1)};
  for (const Int& n : out)
    if (!is_square((S - 1) * n + 1) || !is_square((S + 1) * n + 1))
      throw std::logic_error("ej48_family: membership check failed");
  return out;
}

}  // namespace aps
