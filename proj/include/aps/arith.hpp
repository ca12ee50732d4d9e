#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aps {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds a canonical rational num/den (den != 0).
Rat make_rat(const Int& num, const Int& den = 1);

std::string to_string(const Int& n);
std::string to_string(const Rat& r);

/// Parses "a", "-a" or "a/b".
Rat parse_rat(const std::string& text);

int sign(const Int& n);
int sign(const Rat& r);

/// n = core * root^2 with core squarefree (same sign as n) and root > 0.
struct SquarefreeParts {
  Int core;
  Int root;
};

/// Trial division to 10^6, then the cofactor is classified exactly when it
/// is prime, a prime square, a prime cube or a product of two large primes.
/// Throws std::invalid_argument on zero and std::runtime_error when the
/// cofactor cannot be classified.
SquarefreeParts squarefree_decompose(const Int& n);

/// Squarefree representative of r in Q*/Q*^2.
Int squarefree_part(const Rat& r);

/// Full prime factorization; throws std::runtime_error when a cofactor
/// above 10^6 is composite.
std::vector<std::pair<Int, int>> factor(const Int& n);

/// Distinct primes dividing n (n != 0).
std::vector<Int> prime_support(const Int& n);

bool is_probable_prime(const Int& n);

std::optional<Int> exact_isqrt(const Int& n);
std::optional<Rat> rational_sqrt(const Rat& r);
bool is_rational_square(const Rat& r);

/// Fast path for machine integers.
bool is_square_u64(std::uint64_t n);
bool is_square_i128(__int128 n);

/// v_p(r); throws std::invalid_argument for r == 0.
int padic_valuation(const Int& p, const Rat& r);
int padic_valuation(const Int& p, const Int& n);

/// Legendre symbol (a/p) for an odd prime p.
int legendre(const Int& a, const Int& p);

/// Primes below `bound` (cached sieve).
const std::vector<std::uint32_t>& small_primes(std::uint32_t bound = 1000000);

/// Element a + b*sqrt(D) of a fixed quadratic field; D squarefree.
/// Arithmetic between two elements with non-zero surd parts over different
/// radicands throws std::invalid_argument.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rat a) : a_(std::move(a)) {}
  QuadExt(Rat a, Rat b, Int d);

  const Rat& rational_part() const { return a_; }
  const Rat& surd_part() const { return b_; }
  const Int& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  QuadExt conj() const;
  Rat norm() const;

  QuadExt operator-() const;
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y);

  /// A square root inside the same field, if one exists.
  std::optional<QuadExt> sqrt() const;
  bool is_square() const { return sqrt().has_value(); }

  std::string str() const;

 private:
  struct Unchecked {};
  QuadExt(Unchecked, Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) { normalize(); }
  static Int common_radicand(const QuadExt& x, const QuadExt& y);
  void normalize();

  Rat a_ = 0;
  Rat b_ = 0;
  Int d_ = 1;
};

}  // namespace aps
