#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>

#include "aps/covering.hpp"
#include "aps/curves.hpp"
#include "aps/descent.hpp"
#include "aps/pell.hpp"
#include "aps/pipeline.hpp"
#include "aps/store.hpp"
#include "aps/verify.hpp"

using namespace aps;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kInconclusive = 2;

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stol(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad integer: " + item);
  }
  return out;
}

// Opens the cache named on the command line or by AP_SQUARES_CACHE.
std::unique_ptr<CertificateStore> open_cache(const std::string& flag) {
  const std::string path = CertificateStore::resolve_path(flag);
  if (path.empty()) return nullptr;
  auto store = std::make_unique<CertificateStore>(path);
  for (const std::string& e : store->errors()) std::cerr << "warning: " << e << "\n";
  return store;
}

int cmd_qn(long max_n, long bound, const std::string& cache_path) {
  auto cache = open_cache(cache_path);
  PipelineOptions opt;
  opt.search_bound = bound;
  opt.cache = cache.get();
  const auto rows = compute_q_table(max_n, opt);
  std::cout << format_q_table(rows);
  for (const QTableRow& r : rows)
    if (!r.proved()) return kInconclusive;
  return kOk;
}

int cmd_certify(const std::string& subset, const std::string& cache_path) {
  const Subset I = canonical_primitive(parse_subset(subset));
  if (I.size() == 5) {
    const ZResolution z = resolve_z5(I);
    std::cout << "subset " << format_subset(I) << ": z_I " << to_string(z.status) << "\n";
    for (const auto& ap : z.witnesses) std::cout << "  witness " << to_string(ap) << "\n";
    if (z.datum) std::cout << covering_to_json(*z.datum) << "\n";
    return z.status == ZStatus::undecided ? kInconclusive : kOk;
  }
  if (I.size() != 4) throw std::invalid_argument("certify-subset expects four or five positions");
  auto cache = open_cache(cache_path);
  DescentCertificate c;
  if (auto hit = cache ? cache->find(I) : std::nullopt) {
    c = *hit;
  } else {
    c = certify_z_zero(I);
    if (cache) cache->append(c);
  }
  std::cout << certificate_to_json(c) << "\n";
  return c.conclusion == Conclusion::inconclusive ? kInconclusive : kOk;
}

int cmd_search(const std::string& positions, long bound) {
  const Subset I = parse_subset(positions);
  const auto aps = search_aps(I, bound);
  for (const auto& ap : aps) std::cout << to_string(ap) << "\n";
  std::cout << aps.size() << " progression(s) with |q|, |a| <= " << bound << "\n";
  return kOk;
}

int cmd_curve(const std::string& subset) {
  const Subset I = canonical_primitive(parse_subset(subset));
  const FourTupleModel M = model_four(I);
  const FactoredCurve& F = M.curve;
  const Curve E = F.curve();
  std::cout << "subset   " << format_subset(I) << "\n";
  std::cout << "m0, m1   " << to_string(M.m0) << ", " << to_string(M.m1) << "\n";
  std::cout << "E_I      " << E.str() << "\n";
  std::cout << "torsion  " << torsion_subgroup(F).str() << "\n";
  for (const Point& T : F.two_torsion()) {
    const SelmerGroup S = two_isogeny_selmer(E, T);
    const auto [E2, T2] = isogenous_curve(E, T);
    const SelmerGroup S2 = two_isogeny_selmer(E2, T2);
    std::cout << "isogeny at x = " << to_string(T.x) << ": Selmer dims " << S.dim << ", " << S2.dim << "\n";
  }
  const RankWindow w = rank_window(F, 200);
  std::cout << "2-Selmer dim " << w.selmer_dim << " (rank <= " << w.own_upper << ")\n";
  const IsogenyDescent iso = isogeny_class_descent(F);
  for (std::size_t i = 1; i < iso.curves.size(); ++i)
    std::cout << "isogenous " << iso.curves[i].curve().str() << ": rank <= " << iso.rank_upper[i] << "\n";
  std::cout << "rank     [" << w.lower << ", " << w.upper << "]\n";
  if (!w.point_curve.empty()) std::cout << "points on " << w.point_curve << "\n";
  for (const Point& P : w.points) std::cout << "  point " << to_string(P) << "\n";
  if (is_symmetric(I)) std::cout << "root number " << root_number(I[1], I[2]) << "\n";
  return w.lower == w.upper ? kOk : kInconclusive;
}

int cmd_covering(const std::string& subset, const std::string& J_text, const std::string& j_text) {
  const Subset I = parse_subset(subset);
  if (I.size() != 5) throw std::invalid_argument("covering expects five positions");
  const auto Jv = parse_list(J_text);
  const auto jv = parse_list(j_text);
  if (Jv.size() != 3 || jv.size() != 2) throw std::invalid_argument("--J needs three positions and --j two indices");
  const Triple J{Jv[0], Jv[1], Jv[2]};
  for (const CoveringChoice& c : covering_choices(I)) {
    if (c.J != J || c.j1 != jv[0] || c.j2 != jv[1]) continue;
    if (!c.admissible()) {
      std::cout << "out of scope: this choice needs a biquadratic field\n";
      return kInconclusive;
    }
    const CoveringDatum d = analyze_choice(I, J, c.j1, c.j2);
    if (*c.radicand != 1)
      std::cout << "note: L = Q(sqrt(" << c.radicand->get_str()
                << ")); rows needing elliptic Chabauty over L are out of scope\n";
    std::cout << covering_to_json(d) << "\n";
    return d.resolved ? kOk : kInconclusive;
  }
  throw std::invalid_argument("J must be three positions of the subset and j in 1..3");
}

int cmd_pell(long q1, long a1, long q2, long a2, std::size_t count) {
  const auto ns = ap_intersection(q1, a1, q2, a2, count);
  for (const Int& n : ns) std::cout << n.get_str() << "\n";
  return kOk;
}

int cmd_classes(int N, int k, bool symmetric, bool list, bool stats, int jobs) {
  if (stats) {
    SieveOptions opt;
    opt.jobs = jobs;
    std::cout << format_sieve_stats(sieve_stats(N, k, opt));
    return kOk;
  }
  const auto n = enumerate_classes(N, k, symmetric, [&](const Subset& s) {
    if (list) std::cout << format_subset(s) << "\n";
  });
  std::cout << "subsets " << binomial(N, k).get_str() << "\n";
  std::cout << (symmetric ? "symmetric classes " : "classes ") << n << "\n";
  return kOk;
}

int cmd_cohn(long n) {
  const bool infinite = cohn_predicts_infinite(n);
  const Subset I{0, 2, n, n + 2};
  std::cout << "subset " << format_subset(I) << ": root number " << root_number(2, n) << ", parity predicts "
            << (infinite ? "odd rank, infinitely many progressions" : "even rank") << "\n";
  const RankWindow w = rank_window(model_four(canonical_primitive(I)).curve, 60);
  std::cout << "rank window [" << w.lower << ", " << w.upper << "]\n";
  return kOk;
}

int cmd_verify(const std::vector<int>& only) {
  const auto results = run_golden_battery(only);
  for (const CheckResult& r : results) std::cout << format_check(r) << "\n";
  return battery_ok(results) ? kOk : kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squares in arithmetic progressions"};
  app.set_version_flag("--version", std::string(APS_VERSION));
  app.require_subcommand(1);

  long max_n = 11, bound = 10000;
  int jobs = 1;
  std::string cache;
  auto* qn = app.add_subcommand("qn", "Compute Q(N) for 4 <= N <= max");
  qn->add_option("--max", max_n, "Largest N")->required()->check(CLI::Range(4L, 64L));
  qn->add_option("--bound", bound, "Witness search bound")->check(CLI::PositiveNumber);
  qn->add_option("--jobs", jobs, "Worker threads (accepted; the ladder itself is sequential)")
      ->check(CLI::PositiveNumber);
  qn->add_option("--cache", cache, "Certificate cache (JSON lines)");

  std::string subset;
  auto* certify = app.add_subcommand("certify-subset", "Descent certificate for a 4-subset, covering for a 5-subset");
  certify->add_option("--subset", subset, "Positions, e.g. 0,1,2,3")->required();
  certify->add_option("--cache", cache, "Certificate cache (JSON lines)");

  std::string positions;
  long search_bound = 200;
  auto* search = app.add_subcommand("search-ap", "Progressions square at the given positions");
  search->add_option("--positions", positions, "Positions, e.g. 0,1,2,4")->required();
  search->add_option("--bound", search_bound, "Bound on |q| and |a|")->check(CLI::PositiveNumber);

  auto* curve = app.add_subcommand("curve", "Elliptic curve attached to a 4-subset");
  curve->add_option("--subset", subset, "Positions")->required();

  std::string J_text, j_text;
  auto* covering = app.add_subcommand("covering", "Covering analysis for a 5-subset");
  covering->add_option("--subset", subset, "Five positions")->required();
  covering->add_option("--J", J_text, "Three positions of the subset")->required();
  covering->add_option("--j", j_text, "Factor indices j1,j2 in 1..3")->required();

  long q1 = 1, a1 = 1, q2 = 3, a2 = 1;
  std::size_t count = 10;
  auto* pell = app.add_subcommand("pell", "n with q1 n + a1^2 and q2 n + a2^2 both squares");
  pell->add_option("--q1", q1)->required();
  pell->add_option("--a1", a1)->required();
  pell->add_option("--q2", q2)->required();
  pell->add_option("--a2", a2)->required();
  pell->add_option("--count", count)->check(CLI::PositiveNumber);

  int N = 52, k = 4;
  bool symmetric = false, list = false, stats = false;
  auto* classes = app.add_subcommand("classes", "Equivalence classes of k-subsets of {0..N-1}");
  classes->add_option("--N", N)->required()->check(CLI::Range(1, 64));
  classes->add_option("--k", k)->required()->check(CLI::Range(1, 64));
  classes->add_flag("--symmetric", symmetric, "Symmetric classes only");
  classes->add_flag("--list", list, "Print each representative");
  classes->add_flag("--stats", stats, "Rank-window histogram (k = 4) or sieve survivors (k = 5)");
  classes->add_option("--jobs", jobs, "Worker threads for --stats")->check(CLI::PositiveNumber);

  long cohn_n = 5;
  auto* cohn = app.add_subcommand("cohn", "Parity prediction for {0, 2, n, n + 2}");
  cohn->add_option("--n", cohn_n)->required();

  std::vector<int> only;
  auto* verify = app.add_subcommand("verify-paper", "Run the golden-test battery");
  verify->add_option("--only", only, "Criterion ids")->check(CLI::Range(1, 11));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }

  try {
    if (*qn) return cmd_qn(max_n, bound, cache);
    if (*certify) return cmd_certify(subset, cache);
    if (*search) return cmd_search(positions, search_bound);
    if (*curve) return cmd_curve(subset);
    if (*covering) return cmd_covering(subset, J_text, j_text);
    if (*pell) return cmd_pell(q1, a1, q2, a2, count);
    if (*classes) return cmd_classes(N, k, symmetric, list, stats, jobs);
    if (*cohn) return cmd_cohn(cohn_n);
    if (*verify) return cmd_verify(only);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
