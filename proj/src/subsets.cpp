#include "aps/subsets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace aps {

void validate_subset(const Subset& s) {
  if (s.empty()) throw std::invalid_argument("subset must be non-empty");
  if (s.front() < 0) throw std::invalid_argument("subset elements must be non-negative");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] <= s[i - 1]) throw std::invalid_argument("subset must be strictly increasing");
}

Subset parse_subset(const std::string& text) {
  Subset s;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad subset element: '" + tok + "'");
    }
    if (tok.find_first_not_of(" \t", used) != std::string::npos)
      throw std::invalid_argument("bad subset element: '" + tok + "'");
    s.push_back(v);
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("duplicate subset element");
  validate_subset(s);
  return s;
}

std::string format_subset(const Subset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

Subset symmetrize(const Subset& s) {
  validate_subset(s);
  const long span = s.front() + s.back();
  Subset r;
  for (auto it = s.rbegin(); it != s.rend(); ++it) r.push_back(span - *it);
  return r;
}

bool is_symmetric(const Subset& s) { return symmetrize(s) == s; }

Int encode(const Subset& s) {
  validate_subset(s);
  Int n = 0;
  for (long i : s) mpz_setbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(i));
  return n;
}

Subset decode(const Int& n) {
  if (n <= 0) throw std::invalid_argument("decode: n must be positive");
  Subset s;
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i)
    if (mpz_tstbit(n.get_mpz_t(), i)) s.push_back(static_cast<long>(i));
  return s;
}

namespace {

// n_a < n_b for equal-size sets sharing min and max: compare from the top.
bool encodes_smaller(const Subset& a, const Subset& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

long gcd_of(const Subset& s) {
  long g = 0;
  for (long v : s) g = std::gcd(g, v);
  return g;
}

}  // namespace

bool is_primitive(const Subset& s) {
  validate_subset(s);
  if (s.front() != 0) return false;
  if (s.size() >= 2 && gcd_of(s) != 1) return false;
  return !encodes_smaller(symmetrize(s), s);
}

Subset canonical_primitive(const Subset& s) {
  validate_subset(s);
  Subset t;
  for (long v : s) t.push_back(v - s.front());
  if (t.size() >= 2) {
    const long g = gcd_of(t);
    for (long& v : t) v /= g;
  }
  Subset r = symmetrize(t);
  return encodes_smaller(r, t) ? r : t;
}

std::uint64_t enumerate_classes(int N, int k, bool symmetric_only, const std::function<void(const Subset&)>& visit) {
  if (k < 2 || k > N) throw std::invalid_argument("enumerate_classes: need 2 <= k <= N");
  // Every class has exactly one primitive member, and it has the smallest
  // span in the class, so scanning subsets of {0..N-1} containing 0 that are
  // already primitive visits each class once.
  std::uint64_t count = 0;
  Subset cur{0};
  std::function<void(long)> rec = [&](long next) {
    if (static_cast<int>(cur.size()) == k) {
      if (!is_primitive(cur)) return;
      if (symmetric_only && !is_symmetric(cur)) return;
      ++count;
      if (visit) visit(cur);
      return;
    }
    const long need = k - static_cast<long>(cur.size());
    for (long v = next; v + need - 1 <= N - 1; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return count;
}

std::uint64_t count_symmetric_4subsets(int N) {
  if (N < 3) throw std::invalid_argument("count_symmetric_4subsets: N >= 3 required");
  std::uint64_t c = 0;
  for (long a = 0; a <= N; ++a)
    for (long b = a + 1; b <= N; ++b)
      for (long d = b + 2; d <= N; ++d) {
        const long cc = a + d - b;  // n2 = n0 + n3 - n1
        if (cc > b && cc < d) ++c;
      }
  return c;
}

Rat symmetric_count_polynomial(int N) {
  const Rat n = N;
  Rat r = n * n * n / 12 - Rat(7) * n * n / 8 + Rat(35) * n / 12 - Rat(49, 16) + Rat(N % 2 ? -1 : 1, 16);
  r.canonicalize();
  return r;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

void for_each_combination(const Subset& pool, int k, const std::function<void(const Subset&)>& visit) {
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  Subset cur(k);
  while (true) {
    for (int i = 0; i < k; ++i) cur[i] = pool[idx[i]];
    visit(cur);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace aps
