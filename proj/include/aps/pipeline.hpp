#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aps/ap.hpp"
#include "aps/store.hpp"
#include "aps/subsets.hpp"

namespace aps {

struct QTableRow {
  long N = 0;
  long q_lower = 0;
  long q_upper = 0;
  std::vector<ArithProgression> witnesses;  // attaining q_lower
  std::vector<Subset> undecided;            // canonical classes blocking q_upper

  bool proved() const { return q_lower == q_upper; }
  std::string status() const { return proved() ? "proved" : "conditional"; }
};

struct PipelineOptions {
  long search_bound = 10000;
  CertificateStore* cache = nullptr;
  std::function<void(const std::string&)> log;
};

/// Q(N) for 4 <= N <= maxN, recursively from Q(3) = 3.
std::vector<QTableRow> compute_q_table(long maxN, const PipelineOptions& opt = {});
std::string format_q_table(const std::vector<QTableRow>& rows);

/// True when some 4-subset of I is certified z = 0 (memoized per class).
class SubsetSieve {
 public:
  explicit SubsetSieve(CertificateStore* cache = nullptr) : cache_(cache) {}

  /// z = 0 certificate for a 4-subset class; skips the descent when a
  /// non-degenerate explicit progression already exists.
  bool four_is_zero(const Subset& I);
  bool killed_by_four(const Subset& I);
  /// Covering resolution of a 5-subset class.
  bool five_is_zero(const Subset& I);
  bool killed_by_five(const Subset& I);

 private:
  CertificateStore* cache_;
  std::map<Subset, bool> four_;
  std::map<Subset, bool> five_;
};

struct SieveStats {
  int N = 0;
  int k = 0;
  Int subsets;
  std::uint64_t classes = 0;
  std::uint64_t symmetric = 0;
  // k = 4
  std::map<std::pair<int, int>, long> windows;  // (lower, upper) -> count
  long rank0_certified = 0;
  long unresolved = 0;
  std::vector<Subset> unresolved_classes;
  // k = 5
  long killed = 0;
  long survivors = 0;
  long killed_gcd1 = 0;  // audit: only 4-subsets whose differences have gcd 1
};

struct SieveOptions {
  // Point-search heights; each pass reruns only the windows still open.
  std::vector<long> heights{60, 300, 1000};
  int jobs = 1;
};

SieveStats sieve_stats(int N, int k, const SieveOptions& opt = {});
std::string format_sieve_stats(const SieveStats& s);

struct Table3Row {
  Subset I;
  std::vector<ArithProgression> aps;
  std::vector<bool> valid;
  bool four_distinct = false;  // z_I >= 4
};

struct Table3Report {
  std::vector<Table3Row> rows;
  int checks = 0;
  int passed = 0;
  bool ok() const {
    return checks == passed && checks > 0 &&
           std::all_of(rows.begin(), rows.end(), [](const Table3Row& r) { return r.four_distinct; });
  }
};

/// Four 5-subsets, each lying in four listed progressions.
Table3Report verify_table3();

}  // namespace aps
