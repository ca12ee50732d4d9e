#include "aps/ap.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace aps {

ArithProgression make_ap(const Int& q, const Int& a) {
  if (q == 0) throw std::invalid_argument("progression needs q != 0");
  Int g = gcd(q, a);
  if (g == 1) return {q, a};
  const Int root = squarefree_decompose(g).root;
  const Int sq = root * root;
  return {q / sq, a / sq};
}

std::string to_string(const ArithProgression& ap) { return "(" + to_string(ap.q) + "," + to_string(ap.a) + ")"; }

bool is_square_int(const Int& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::vector<long> squares_in_ap(const Int& q, const Int& a, long N) {
  if (q == 0) throw std::invalid_argument("squares_in_ap: q == 0");
  if (N < 1) throw std::invalid_argument("squares_in_ap: N >= 1 required");
  std::vector<long> out;
  // Machine-word fast path when every term fits.
  const Int last = q * (N - 1) + a;
  if (q.fits_slong_p() && a.fits_slong_p() && abs(last) < Int("4000000000000000000") && abs(a) < Int("4000000000000000000")) {
    const long qq = q.get_si(), aa = a.get_si();
    for (long i = 0; i < N; ++i) {
      const long v = qq * i + aa;
      if (v >= 0 && is_square_u64(static_cast<std::uint64_t>(v))) out.push_back(i);
    }
    return out;
  }
  for (long i = 0; i < N; ++i)
    if (is_square_int(q * i + a)) out.push_back(i);
  return out;
}

bool squares_at(const ArithProgression& ap, const Subset& positions) {
  return std::all_of(positions.begin(), positions.end(), [&](long n) { return is_square_int(ap.q * n + ap.a); });
}

std::vector<long> special_positions(SpecialKind kind, long bound) {
  if (bound < 1) throw std::invalid_argument("special_positions: bound >= 1 required");
  std::vector<long> out;
  if (kind == SpecialKind::triangular) {
    for (long k = 0;; ++k) {
      const long t = k * (k + 1) / 2;
      if (t >= bound) break;
      out.push_back(t);
    }
    return out;
  }
  for (long k = 0;; ++k) {
    const long p1 = k * (3 * k - 1) / 2;
    const long p2 = k * (3 * k + 1) / 2;
    if (p1 >= bound) break;
    out.push_back(p1);
    if (k > 0 && p2 < bound) out.push_back(p2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ArithProgression> search_aps(const Subset& I, long B) {
  validate_subset(I);
  if (I.size() < 2) throw std::invalid_argument("search_aps: at least two positions");
  if (B < 1) throw std::invalid_argument("search_aps: B >= 1 required");
  std::set<ArithProgression> found;
  const Int n0 = I.front();
  for (long q = -B; q <= B; ++q) {
    if (q == 0) continue;
    // a + n0*q = x^2 with |a| <= B.
    const Int lo = n0 * q - B, hi = n0 * q + B;
    if (hi < 0) continue;
    Int x = 0;
    if (lo > 0) {
      mpz_sqrt(x.get_mpz_t(), lo.get_mpz_t());
      if (x * x < lo) ++x;
    }
    for (; x * x <= hi; ++x) {
      const Int a = x * x - n0 * q;
      bool ok = true;
      for (std::size_t i = 1; i < I.size() && ok; ++i) ok = is_square_int(a + q * I[i]);
      if (!ok) continue;
      ArithProgression ap = make_ap(Int(q), a);
      if (ap.q == q) found.insert(ap);  // normalized members of the box are scanned directly
    }
  }
  return {found.begin(), found.end()};
}

std::vector<WindowRecord> witness_scan(long maxN, long B, std::size_t keep) {
  if (maxN < 1 || B < 1) throw std::invalid_argument("witness_scan: positive arguments required");
  std::vector<WindowRecord> rec(maxN + 1);
  for (long N = 0; N <= maxN; ++N) rec[N].N = N;
  std::vector<int> prefix(maxN + 1);
  for (long q = 1; q <= B; ++q) {
    for (long x = 0; x * x <= B; ++x) {
      const long a = x * x;
      if (std::gcd(q, a) != 1) {
        // Only normalized progressions are recorded.
        const Int g = std::gcd(q, a);
        if (squarefree_decompose(g).root != 1) continue;
      }
      int c = 0;
      for (long i = 0; i < maxN; ++i) {
        const __int128 v = static_cast<__int128>(q) * i + a;
        if (is_square_i128(v)) ++c;
        prefix[i + 1] = c;
      }
      for (long N = 1; N <= maxN; ++N) {
        auto& r = rec[N];
        if (prefix[N] > r.count) {
          r.count = prefix[N];
          r.witnesses.clear();
        }
        if (prefix[N] == r.count && r.witnesses.size() < keep) r.witnesses.push_back({Int(q), Int(a)});
      }
    }
  }
  rec.erase(rec.begin());
  return rec;
}

ArithProgression point_to_ap(const Subset& I, const std::vector<Rat>& point) {
  validate_subset(I);
  if (point.size() != I.size() || I.size() < 2) throw std::invalid_argument("point_to_ap: dimension mismatch");
  // x_i^2 = a + n_i q, up to a common square factor.
  const Rat x0 = point[0] * point[0], x1 = point[1] * point[1];
  const Rat q = (x1 - x0) / Rat(I[1] - I[0]);
  const Rat a = x0 - Rat(I[0]) * q;
  if (q == 0) throw std::invalid_argument("point_to_ap: trivial point");
  for (std::size_t i = 0; i < I.size(); ++i)
    if (a + Rat(I[i]) * q != point[i] * point[i]) throw std::invalid_argument("point_to_ap: point not on C_I");
  Int L;
  mpz_lcm(L.get_mpz_t(), q.get_den().get_mpz_t(), a.get_den().get_mpz_t());
  const Int qi = q.get_num() * (L / q.get_den()) * L;
  const Int ai = a.get_num() * (L / a.get_den()) * L;
  ArithProgression ap = make_ap(qi, ai);
  if (!squares_at(ap, I)) throw std::logic_error("point_to_ap: validation failed");
  return ap;
}

std::vector<Int> ap_to_point(const Subset& I, const ArithProgression& ap) {
  validate_subset(I);
  std::vector<Int> pt;
  for (long n : I) {
    auto r = exact_isqrt(ap.q * n + ap.a);
    if (!r) throw std::invalid_argument("ap_to_point: " + to_string(ap) + " is not square at " + std::to_string(n));
    pt.push_back(*r);
  }
  return pt;
}

}  // namespace aps
