#include "aps/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "aps/covering.hpp"
#include "aps/curves.hpp"
#include "aps/descent.hpp"

namespace aps {

bool SubsetSieve::four_is_zero(const Subset& I) {
  const Subset c = canonical_primitive(I);
  if (auto it = four_.find(c); it != four_.end()) return it->second;
  bool zero = false;
  if (is_symmetric(c) || !remark_ap(c)) {
    std::optional<DescentCertificate> cert = cache_ ? cache_->find(c) : std::nullopt;
    if (!cert) {
      cert = certify_z_zero(c);
      if (cache_) cache_->append(*cert);
    }
    zero = cert->conclusion == Conclusion::z_zero;
  }
  four_[c] = zero;
  return zero;
}

bool SubsetSieve::killed_by_four(const Subset& I) {
  bool killed = false;
  for_each_combination(I, 4, [&](const Subset& s) {
    if (!killed && four_is_zero(s)) killed = true;
  });
  return killed;
}

bool SubsetSieve::five_is_zero(const Subset& I) {
  const Subset c = canonical_primitive(I);
  if (auto it = five_.find(c); it != five_.end()) return it->second;
  const bool zero = resolve_z5(c).status == ZStatus::zero;
  five_[c] = zero;
  return zero;
}

bool SubsetSieve::killed_by_five(const Subset& I) {
  bool killed = false;
  for_each_combination(I, 5, [&](const Subset& s) {
    if (!killed && five_is_zero(s)) killed = true;
  });
  return killed;
}

std::vector<QTableRow> compute_q_table(long maxN, const PipelineOptions& opt) {
  if (maxN < 4) throw std::invalid_argument("compute_q_table: maxN >= 4 required");
  auto log = [&](const std::string& s) {
    if (opt.log) opt.log(s);
  };
  const std::vector<WindowRecord> scan = witness_scan(maxN, opt.search_bound);
  SubsetSieve sieve(opt.cache);
  std::vector<QTableRow> rows;
  long prev_upper = 3;  // Q(3) = 3
  for (long N = 4; N <= maxN; ++N) {
    QTableRow row;
    row.N = N;
    const WindowRecord& w = scan[N - 1];
    row.q_lower = w.count;
    row.witnesses = w.witnesses;
    const long k = prev_upper + 1;
    if (row.q_lower >= k) {
      row.q_upper = k;
    } else {
      // Q(N) <= prev_upper iff no k-subset of {0..N-1} carries a progression.
      std::vector<Subset> survivors;
      enumerate_classes(static_cast<int>(N), static_cast<int>(k), false, [&](const Subset& s) {
        if (sieve.killed_by_four(s)) return;
        if (k >= 5 && sieve.killed_by_five(s)) return;
        survivors.push_back(s);
      });
      std::sort(survivors.begin(), survivors.end());
      row.q_upper = survivors.empty() ? prev_upper : k;
      row.undecided = survivors;
    }
    if (row.q_lower > row.q_upper) throw std::logic_error("compute_q_table: witness exceeds proven bound");
    log("N=" + std::to_string(N) + " Q in [" + std::to_string(row.q_lower) + "," + std::to_string(row.q_upper) + "]");
    prev_upper = row.q_upper;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_q_table(const std::vector<QTableRow>& rows) {
  std::ostringstream os;
  os << "N\tQ(N)\tstatus\twitnesses\tundecided\n";
  for (const QTableRow& r : rows) {
    os << r.N << '\t';
    if (r.proved())
      os << r.q_lower;
    else
      os << r.q_lower << ".." << r.q_upper;
    os << '\t' << r.status() << '\t';
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) os << (i ? " " : "") << to_string(r.witnesses[i]);
    os << '\t';
    if (r.proved()) {
      os << '-';
    } else {
      os << r.undecided.size() << " first " << (r.undecided.empty() ? "-" : format_subset(r.undecided.front()));
    }
    os << '\n';
  }
  return os.str();
}

namespace {

template <class F>
void parallel_for(std::size_t n, int jobs, F&& body) {
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

SieveStats sieve_stats(int N, int k, const SieveOptions& opt) {
  if (k != 4 && k != 5) throw std::invalid_argument("sieve_stats: k must be 4 or 5");
  SieveStats st;
  st.N = N;
  st.k = k;
  st.subsets = binomial(N, k);
  st.symmetric = enumerate_classes(N, 4, true);
  if (k == 4) {
    std::vector<Subset> classes;
    st.classes = enumerate_classes(N, 4, false, [&](const Subset& s) { classes.push_back(s); });
    std::vector<std::pair<int, int>> win(classes.size(), {0, -1});
    for (long h : opt.heights) {
      std::vector<std::size_t> open;
      for (std::size_t i = 0; i < classes.size(); ++i)
        if (win[i].first < win[i].second || win[i].second < 0) open.push_back(i);
      parallel_for(open.size(), opt.jobs, [&](std::size_t j) {
        const RankWindow w = rank_window(model_four(classes[open[j]]).curve, h);
        win[open[j]] = {w.lower, w.upper};
      });
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
      st.windows[win[i]]++;
      if (win[i].second == 0) ++st.rank0_certified;
      if (win[i].first < win[i].second) {
        ++st.unresolved;
        st.unresolved_classes.push_back(classes[i]);
      }
    }
    return st;
  }
  SubsetSieve sieve;
  st.classes = enumerate_classes(N, 5, false, [&](const Subset& s) {
    bool any = false, gcd1 = false;
    for_each_combination(s, 4, [&](const Subset& J) {
      if (gcd1 || !sieve.four_is_zero(J)) return;
      any = true;
      long g = 0;
      for (long x : J) g = std::gcd(g, x - J[0]);
      gcd1 = g == 1;
    });
    ++(any ? st.killed : st.survivors);
    st.killed_gcd1 += gcd1;
  });
  return st;
}

std::string format_sieve_stats(const SieveStats& s) {
  std::ostringstream os;
  os << "N=" << s.N << " k=" << s.k << "\n";
  os << "subsets: " << s.subsets << "\n";
  os << "classes: " << s.classes << "\n";
  os << "symmetric 4-classes: " << s.symmetric << "\n";
  if (s.k == 4) {
    os << "rank windows (lower,upper): count\n";
    for (const auto& [w, n] : s.windows) os << "  (" << w.first << "," << w.second << "): " << n << "\n";
    os << "rank 0 certified: " << s.rank0_certified << "\n";
    os << "unresolved windows: " << s.unresolved << "\n";
    for (const Subset& c : s.unresolved_classes) os << "  " << format_subset(c) << "\n";
  } else {
    os << "killed by a z=0 4-subset: " << s.killed << "\n";
    os << "survivors: " << s.survivors << "\n";
    os << "killed via gcd-1 4-subsets only: " << s.killed_gcd1 << " (survivors " << s.classes - s.killed_gcd1
       << ")\n";
  }
  return os.str();
}

Table3Report verify_table3() {
  const std::vector<std::pair<Subset, std::vector<ArithProgression>>> table{
      {{0, 2, 13, 23, 2233}, {{240, 1369}, {72, 25}, {120, 3481}, {168, 625}}},
      {{0, 5, 19, 70, 1020}, {{72, 1}, {120, 2209}, {552, 961}, {24, 169}}},
      {{0, 5, 33, 70, 1183}, {{1344, 169}, {72, 1849}, {816, 961}, {24, 169}}},
      {{0, 17, 52, 147, 290}, {{120, 1681}, {96, 49}, {24, 961}, {264, 2401}}},
  };
  Table3Report rep;
  for (const auto& [I, aps] : table) {
    Table3Row row{I, aps, {}};
    std::set<ArithProgression> distinct;
    for (const ArithProgression& ap : aps) {
      const bool ok = squares_at(ap, I);
      row.valid.push_back(ok);
      ++rep.checks;
      if (ok) {
        ++rep.passed;
        distinct.insert(make_ap(ap.q, ap.a));
      }
    }
    row.four_distinct = distinct.size() >= 4;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace aps
