#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sys/wait.h>

#include "aps/pipeline.hpp"
#include "aps/store.hpp"

using namespace aps;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + APSQUARES_BIN + " " + args + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  return {WEXITSTATUS(status), out};
}

fs::path temp_file(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("aps_test_" + std::to_string(::getpid()) + "_" + name);
  fs::remove(p);
  return p;
}

}  // namespace

TEST(Pipeline, QTableToEleven) {
  const auto rows = compute_q_table(11);
  ASSERT_EQ(rows.size(), 8u);
  const long expected[] = {3, 4, 4, 4, 5, 5, 5, 5};
  for (const QTableRow& r : rows) {
    EXPECT_EQ(r.q_lower, expected[r.N - 4]) << r.N;
    EXPECT_TRUE(r.proved()) << r.N;
    EXPECT_TRUE(r.undecided.empty());
  }
}

TEST(Pipeline, ThirteenHasPentagonalWitness) {
  const auto rows = compute_q_table(13);
  const QTableRow& r = rows.back();
  EXPECT_EQ(r.N, 13);
  EXPECT_EQ(r.q_lower, 6);
  EXPECT_NE(std::find(r.witnesses.begin(), r.witnesses.end(), ArithProgression{24, 1}), r.witnesses.end());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LE(rows[i].q_upper, rows[i - 1].q_upper + 1);
    EXPECT_GE(rows[i].q_lower, rows[i - 1].q_lower);
    EXPECT_LE(rows[i].q_lower, rows[i].q_upper);
  }
}

TEST(Pipeline, TableThree) {
  const Table3Report rep = verify_table3();
  EXPECT_EQ(rep.checks, 16);
  EXPECT_TRUE(rep.ok());
}

TEST(Pipeline, SieveKillsViaFourSubsets) {
  SubsetSieve sieve;
  EXPECT_TRUE(sieve.four_is_zero({0, 1, 2, 3}));
  EXPECT_FALSE(sieve.four_is_zero({0, 1, 2, 4}));
  EXPECT_TRUE(sieve.killed_by_four({0, 1, 2, 3, 7}));
  EXPECT_TRUE(sieve.five_is_zero({0, 1, 4, 7, 8}));
}

TEST(Store, RoundTripAndDedup) {
  const fs::path p = temp_file("store.jsonl");
  const DescentCertificate c = certify_z_zero({0, 1, 2, 3});
  {
    CertificateStore s(p.string());
    EXPECT_EQ(s.size(), 0u);
    EXPECT_TRUE(s.append(c));
    EXPECT_FALSE(s.append(c));
  }
  CertificateStore s(p.string());
  EXPECT_EQ(s.size(), 1u);
  ASSERT_TRUE(s.find({0, 1, 2, 3}).has_value());
  EXPECT_EQ(*s.find({0, 1, 2, 3}), c);
  fs::remove(p);
}

TEST(Store, CorruptLinesReported) {
  const fs::path p = temp_file("corrupt.jsonl");
  {
    std::ofstream f(p);
    f << certificate_to_json(certify_z_zero({0, 1, 3, 4})) << "\n" << "{broken\n";
  }
  CertificateStore s(p.string());
  EXPECT_EQ(s.size(), 1u);
  ASSERT_EQ(s.errors().size(), 1u);
  EXPECT_NE(s.errors()[0].find(":2:"), std::string::npos);
  fs::remove(p);
}

TEST(Cli, QnLadder) {
  const CliRun r = run("qn --max 11");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("11\t5\tproved"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("conditional"), std::string::npos);
}

TEST(Cli, ConditionalRowExitsTwo) {
  const CliRun r = run("qn --max 12");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("conditional"), std::string::npos);
}

TEST(Cli, CertifyUsesCacheFromEnvironment) {
  const fs::path p = temp_file("cli_cache.jsonl");
  CliRun r = run("certify-subset --subset 3,5,7,9", "AP_SQUARES_CACHE=" + p.string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("\"conclusion\":\"z_zero\""), std::string::npos) << r.out;
  EXPECT_EQ(CertificateStore(p.string()).size(), 1u);
  r = run("certify-subset --subset 0,1,2,3", "AP_SQUARES_CACHE=" + p.string());
  EXPECT_EQ(CertificateStore(p.string()).size(), 1u);
  fs::remove(p);
}

TEST(Cli, Subcommands) {
  EXPECT_NE(run("search-ap --positions 0,1,2,4 --bound 200").out.find("(120,49)"), std::string::npos);
  EXPECT_NE(run("curve --subset 0,1,2,3").out.find("root number 1"), std::string::npos);
  EXPECT_NE(run("pell --q1 1 --a1 1 --q2 3 --a2 1 --count 5").out.find("23408"), std::string::npos);
  EXPECT_NE(run("classes --N 52 --k 4 --symmetric").out.find("402"), std::string::npos);
  EXPECT_NE(run("cohn --n 5").out.find("root number -1"), std::string::npos);
  const CliRun cov = run("covering --subset 0,1,4,7,8 --J 1,4,7 --j 2,1");
  EXPECT_EQ(cov.code, 0);
  EXPECT_NE(cov.out.find("\"resolved\":true"), std::string::npos);
  const CliRun quad = run("covering --subset 0,1,2,4,7 --J 1,4,7 --j 2,1");
  EXPECT_EQ(quad.code, 2);
  EXPECT_NE(quad.out.find("out of scope"), std::string::npos);
}

TEST(Cli, Errors) {
  EXPECT_EQ(run("certify-subset --subset 1,1,2,3").code, 1);
  EXPECT_EQ(run("bogus").code, 1);
  EXPECT_EQ(run("").code, 1);
}
