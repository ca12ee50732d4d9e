#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "aps/arith.hpp"

namespace aps {

/// Strictly increasing list of non-negative integers.
using Subset = std::vector<long>;

/// Throws std::invalid_argument unless s is non-empty, strictly increasing
/// and non-negative.
void validate_subset(const Subset& s);

/// Parses "0,1,3,4" (any order, duplicates rejected); result is sorted.
Subset parse_subset(const std::string& text);
std::string format_subset(const Subset& s);

Subset symmetrize(const Subset& s);
bool is_symmetric(const Subset& s);

/// n_I = sum of 2^i over i in I.
Int encode(const Subset& s);
Subset decode(const Int& n);

/// True when 0 is in s, gcd(s) = 1 (for |s| >= 2) and n_s <= n_{s^sym}.
bool is_primitive(const Subset& s);

/// The unique primitive subset equivalent to s under translation,
/// rational scaling and reflection.
Subset canonical_primitive(const Subset& s);

/// Calls `visit` once per equivalence class of k-subsets of {0..N-1}, with
/// its primitive representative. Returns the number of classes visited.
std::uint64_t enumerate_classes(int N, int k, bool symmetric_only,
                                const std::function<void(const Subset&)>& visit = {});

/// 4-subsets of {0..N} with n0 + n3 = n1 + n2, by direct enumeration.
std::uint64_t count_symmetric_4subsets(int N);

/// N^3/12 - 7N^2/8 + 35N/12 - 49/16 + (-1)^N/16, kept as a diagnostic only.
Rat symmetric_count_polynomial(int N);

/// C(n, k) exactly.
Int binomial(long n, long k);

/// Calls `visit` for each k-subset of `pool` (in lexicographic order).
void for_each_combination(const Subset& pool, int k, const std::function<void(const Subset&)>& visit);

}  // namespace aps
