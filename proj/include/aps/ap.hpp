#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aps/arith.hpp"
#include "aps/subsets.hpp"

namespace aps {

/// The progression q*n + a with q != 0 and gcd(q, a) squarefree.
struct ArithProgression {
  Int q;
  Int a;

  friend bool operator==(const ArithProgression&, const ArithProgression&) = default;
  friend bool operator<(const ArithProgression& x, const ArithProgression& y) {
    return x.q != y.q ? x.q < y.q : x.a < y.a;
  }
};

/// Divides (q, a) by the largest square dividing gcd(q, a). Throws on q == 0.
ArithProgression make_ap(const Int& q, const Int& a);

std::string to_string(const ArithProgression& ap);

bool is_square_int(const Int& n);

/// Positions i in {0..N-1} where q*i + a is a perfect square.
std::vector<long> squares_in_ap(const Int& q, const Int& a, long N);

/// True when q*i + a is a square for every i in positions.
bool squares_at(const ArithProgression& ap, const Subset& positions);

enum class SpecialKind { pentagonal, triangular };

/// Generalized pentagonal (k in Z) or triangular (k >= 0) numbers below bound.
std::vector<long> special_positions(SpecialKind kind, long bound);

/// Every normalized (q, a) with max(|q|, |a|) <= B that is square at all of I.
std::vector<ArithProgression> search_aps(const Subset& I, long B);

/// Best witnesses for each window length 1..maxN, found by scanning q in
/// [1, B] and square first terms a <= B.
struct WindowRecord {
  long N = 0;
  int count = 0;
  std::vector<ArithProgression> witnesses;  // ascending, at most `keep`
};
std::vector<WindowRecord> witness_scan(long maxN, long B, std::size_t keep = 8);

/// Projective point [x_0 : ... : x_k] on C_I to its progression. Throws
/// std::invalid_argument for trivial points or points not on C_I.
ArithProgression point_to_ap(const Subset& I, const std::vector<Rat>& point);

/// Square roots of q*n_i + a; throws when some value is not a square.
std::vector<Int> ap_to_point(const Subset& I, const ArithProgression& ap);

}  // namespace aps
