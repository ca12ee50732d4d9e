#include "aps/arith.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace aps {

namespace {

constexpr std::uint32_t kTrialBound = 1000000;

// Strips every prime below kTrialBound from |n|; returns the cofactor.
Int trial_divide(const Int& n, std::vector<std::pair<Int, int>>& out) {
  Int rem = abs(n);
  const auto& primes = small_primes(kTrialBound);
  for (std::size_t k = 0; k < primes.size(); ++k) {
    const std::uint32_t p = primes[k];
    if (rem.fits_ulong_p()) {
      unsigned long r = rem.get_ui();
      for (std::size_t i = k; i < primes.size(); ++i) {
        const unsigned long q = primes[i];
        if (q * q > r) break;
        if (r % q) continue;
        int e = 0;
        while (r % q == 0) {
          r /= q;
          ++e;
        }
        out.emplace_back(Int(q), e);
      }
      if (r > 1 && r < static_cast<unsigned long>(kTrialBound) * kTrialBound) {
        out.emplace_back(Int(r), 1);
        r = 1;
      }
      return Int(r);
    }
    if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
        mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
        ++e;
      }
      out.emplace_back(Int(p), e);
    }
  }
  return rem;
}

}  // namespace

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

int sign(const Int& n) { return sgn(n); }
int sign(const Rat& r) { return sgn(r); }

const std::vector<std::uint32_t>& small_primes(std::uint32_t bound) {
  static std::mutex mu;
  static std::vector<std::uint32_t> primes;
  static std::uint32_t sieved = 0;
  std::lock_guard<std::mutex> lock(mu);
  if (bound > sieved) {
    std::vector<bool> composite(bound, false);
    primes.clear();
    for (std::uint32_t i = 2; i < bound; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j < bound; j += i) composite[j] = true;
    }
    sieved = bound;
  }
  return primes;
}

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::vector<std::pair<Int, int>> factor(const Int& n) {
  if (n == 0) throw std::invalid_argument("factor: zero");
  std::vector<std::pair<Int, int>> out;
  Int rem = trial_divide(n, out);
  if (rem == 1) return out;
  if (is_probable_prime(rem)) {
    out.emplace_back(rem, 1);
    return out;
  }
  for (int e : {2, 3}) {
    Int root;
    if (mpz_root(root.get_mpz_t(), rem.get_mpz_t(), e) != 0 && is_probable_prime(root)) {
      out.emplace_back(root, e);
      return out;
    }
  }
  throw std::runtime_error("factor: cannot factor cofactor " + rem.get_str());
}

std::vector<Int> prime_support(const Int& n) {
  std::vector<Int> ps;
  for (auto& [p, e] : factor(n)) ps.push_back(p);
  return ps;
}

SquarefreeParts squarefree_decompose(const Int& n) {
  if (n == 0) throw std::invalid_argument("squarefree_decompose: zero");
  std::vector<std::pair<Int, int>> fs;
  Int rem = trial_divide(n, fs);
  Int core = sgn(n) < 0 ? -1 : 1;
  Int root = 1;
  for (auto& [p, e] : fs) {
    if (e % 2) core *= p;
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), e / 2);
    root *= pw;
  }
  if (rem == 1) return {core, root};
  // rem has no prime factor below 10^6.
  const Int b = kTrialBound;
  Int sq;
  if (is_probable_prime(rem)) return {core * rem, root};
  if (mpz_root(sq.get_mpz_t(), rem.get_mpz_t(), 2) != 0) return {core, root * sq};
  if (mpz_root(sq.get_mpz_t(), rem.get_mpz_t(), 3) != 0) return {core * sq, root * sq};
  if (rem < b * b * b) return {core * rem, root};  // product of two distinct primes
  throw std::runtime_error("squarefree_decompose: cannot classify cofactor " + rem.get_str());
}

Int squarefree_part(const Rat& r) {
  if (r == 0) throw std::invalid_argument("squarefree_part: zero");
  return squarefree_decompose(r.get_num() * r.get_den()).core;
}

std::optional<Int> exact_isqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rat> rational_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  auto n = exact_isqrt(r.get_num());
  if (!n) return std::nullopt;
  auto d = exact_isqrt(r.get_den());
  if (!d) return std::nullopt;
  return make_rat(*n, *d);
}

bool is_rational_square(const Rat& r) { return rational_sqrt(r).has_value(); }

bool is_square_u64(std::uint64_t n) {
  // Quadratic residues mod 64 reject most non-squares cheaply.
  constexpr std::uint64_t kMask = [] {
    std::uint64_t m = 0;
    for (std::uint64_t i = 0; i < 64; ++i) m |= std::uint64_t(1) << ((i * i) & 63);
    return m;
  }();
  if (!((kMask >> (n & 63)) & 1)) return false;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

bool is_square_i128(__int128 n) {
  if (n < 0) return false;
  if (n <= static_cast<__int128>(UINT64_MAX) / 4) return is_square_u64(static_cast<std::uint64_t>(n));
  using u128 = unsigned __int128;
  u128 v = static_cast<u128>(n);
  u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v;
}

int padic_valuation(const Int& p, const Int& n) {
  if (n == 0) throw std::invalid_argument("padic_valuation: zero");
  if (p < 2) throw std::invalid_argument("padic_valuation: bad prime");
  return static_cast<int>(mpz_remove(Int().get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

int padic_valuation(const Int& p, const Rat& r) {
  if (r == 0) throw std::invalid_argument("padic_valuation: zero");
  return padic_valuation(p, r.get_num()) - padic_valuation(p, r.get_den());
}

int legendre(const Int& a, const Int& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

// ---------------------------------------------------------------- QuadExt

QuadExt::QuadExt(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ == 0) throw std::invalid_argument("QuadExt: zero radicand");
  if (squarefree_decompose(d_).root != 1) throw std::invalid_argument("QuadExt: radicand not squarefree");
  normalize();
}

void QuadExt::normalize() {
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
}

Int QuadExt::common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.b_ == 0) return y.d_;
  if (y.b_ == 0) return x.d_;
  if (x.d_ != y.d_) throw std::invalid_argument("QuadExt: mixed radicands");
  return x.d_;
}

QuadExt QuadExt::conj() const {
  QuadExt r = *this;
  r.b_ = -b_;
  return r;
}

Rat QuadExt::norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  QuadExt r;
  r.d_ = QuadExt::common_radicand(x, y);
  r.a_ = x.a_ + y.a_;
  r.b_ = x.b_ + y.b_;
  return r;
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  QuadExt r;
  r.d_ = QuadExt::common_radicand(x, y);
  r.a_ = x.a_ * y.a_ + Rat(r.d_) * x.b_ * y.b_;
  r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  return r;
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  const Rat n = y.norm();
  if (n == 0) throw std::domain_error("QuadExt: division by zero");
  QuadExt r = x * y.conj();
  r.a_ /= n;
  r.b_ /= n;
  return r;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
}

std::optional<QuadExt> QuadExt::sqrt() const {
  if (b_ == 0) {
    if (auto r = rational_sqrt(a_)) return QuadExt(Unchecked{}, *r, 0, d_);
    if (d_ != 1) {
      if (auto r = rational_sqrt(a_ / Rat(d_))) return QuadExt(Unchecked{}, 0, *r, d_);
    }
    return std::nullopt;
  }
  // (x + y sqrt D)^2 = a + b sqrt D  =>  x^2 = (a +- sqrt(norm)) / 2.
  auto n = rational_sqrt(norm());
  if (!n) return std::nullopt;
  for (const Rat& cand : {Rat((a_ + *n) / 2), Rat((a_ - *n) / 2)}) {
    auto x = rational_sqrt(cand);
    if (!x || *x == 0) continue;
    QuadExt s(Unchecked{}, *x, b_ / (2 * *x), d_);
    if (s * s == *this) return s;
  }
  return std::nullopt;
}

std::string QuadExt::str() const {
  if (b_ == 0) return to_string(a_);
  std::string s = a_ == 0 ? "" : to_string(a_) + (b_ > 0 ? " + " : " - ");
  if (a_ == 0 && b_ < 0) s += "-";
  Rat mag = abs(b_);
  if (mag != 1) s += to_string(mag) + "*";
  return s + "sqrt(" + d_.get_str() + ")";
}

}  // namespace aps
