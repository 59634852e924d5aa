// Copyright (C) 2026 The nnru authors
// SPDX-License-Identifier: Apache-2.0
//
// Runs the nnru binary end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(NNRU_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliRun r;
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("nnru-cli-" + std::to_string(std::random_device{}()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, KeygenIsDeterministic) {
  for (const char* tag : {"a", "b"}) {
    const CliRun r = run("keygen --preset toy --seed 42 --pub " + path(std::string(tag) + ".pub") +
                      " --priv " + path(std::string(tag) + ".priv"));
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("seed: 42"), std::string::npos);
    EXPECT_NE(r.out.find("fingerprint: b73eb27d6732eafd"), std::string::npos) << r.out;
  }
  EXPECT_EQ(slurp(path("a.pub")), slurp(path("b.pub")));
  EXPECT_EQ(slurp(path("a.priv")), slurp(path("b.priv")));
}

TEST_F(Cli, KeygenReferencePrintsMargin) {
  const CliRun r = run("keygen --preset reference --seed 1 --pub " + path("r.pub") + " --priv " +
                    path("r.priv"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("margin q/(2 sigma): 6."), std::string::npos) << r.out;
}

TEST_F(Cli, SeedFromEnvironment) {
  const CliRun r = run("keygen --preset toy --pub " + path("e.pub") + " --priv " + path("e.priv"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("seed: "), std::string::npos);
  const std::string cmd = "NNRU_SEED=42 " + std::string(NNRU_CLI) + " keygen --preset toy --pub " +
                          path("e.pub") + " --priv " + path("e.priv") + " > /dev/null";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(slurp(path("e.pub")),
            slurp(fs::path(NNRU_GOLDEN_DIR) / "toy_seed42.pub"));
}

TEST_F(Cli, ParameterErrors) {
  CliRun r = run("keygen --p 2 --q 256 --seed 1 --pub " + path("x") + " --priv " + path("y"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("coprime"), std::string::npos) << r.out;
  EXPECT_EQ(run("keygen --preset galactic").code, 1);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, FileRoundTrips) {
  ASSERT_EQ(run("keygen --preset reference --seed 9 --pub " + path("k.pub") + " --priv " +
                path("k.priv"))
                .code,
            0);
  std::mt19937_64 gen(3);
  std::string data(1024, '\0');
  for (auto& c : data) c = static_cast<char>(gen());
  std::ofstream(path("msg"), std::ios::binary) << data;
  std::ofstream(path("empty"), std::ios::binary).flush();
  for (const char* name : {"msg", "empty"}) {
    const std::string in = path(name);
    CliRun r = run("encrypt --pub " + path("k.pub") + " --in " + in + " --output " + in +
                ".ct --seed 4");
    ASSERT_EQ(r.code, 0) << r.out;
    r = run("decrypt --priv " + path("k.priv") + " --in " + in + ".ct --output " + in + ".out");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(slurp(in + ".out"), slurp(in)) << name;
  }
}

TEST_F(Cli, FormatAndMismatchErrors) {
  ASSERT_EQ(run("keygen --preset toy --seed 1 --pub " + path("t.pub") + " --priv " +
                path("t.priv"))
                .code,
            0);
  ASSERT_EQ(run("keygen --preset small --seed 1 --pub " + path("s.pub") + " --priv " +
                path("s.priv"))
                .code,
            0);
  std::ofstream(path("m"), std::ios::binary) << "hello";
  ASSERT_EQ(run("encrypt --pub " + path("t.pub") + " --in " + path("m") + " --output " +
                path("m.ct") + " --seed 1")
                .code,
            0);
  std::string ct = slurp(path("m.ct"));
  std::ofstream(path("cut.ct"), std::ios::binary) << ct.substr(0, ct.size() - 1);
  CliRun r = run("decrypt --priv " + path("t.priv") + " --in " + path("cut.ct") + " --output " +
              path("o"));
  EXPECT_EQ(r.code, 2) << r.out;
  ct[0] = 'X';
  std::ofstream(path("magic.ct"), std::ios::binary) << ct;
  EXPECT_EQ(run("decrypt --priv " + path("t.priv") + " --in " + path("magic.ct") +
                " --output " + path("o"))
                .code,
            2);
  r = run("decrypt --priv " + path("s.priv") + " --in " + path("m.ct") + " --output " + path("o"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("match"), std::string::npos) << r.out;
  EXPECT_EQ(run("decrypt --priv " + path("missing") + " --in " + path("m.ct") + " --output " +
                path("o"))
                .code,
            2);
}

TEST_F(Cli, Analyze) {
  CliRun r = run("analyze security --preset toy --out " + path("sec.csv"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("3782285936100000000"), std::string::npos);
  EXPECT_EQ(slurp(path("sec.csv")).rfind("# nnru-security-v1", 0), 0u);

  r = run("analyze gamma --n 251 --trials 1000 --seed 1 --out " + path("g.csv"));
  ASSERT_EQ(r.code, 0) << r.out;
  const std::string csv = slurp(path("g.csv"));
  EXPECT_EQ(csv.rfind("# nnru-gamma-v1\ntrial,n,k,d,gamma\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1002);

  r = run("analyze membership --k 1 --trials 5 --seed 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict k=1: SHORT"), std::string::npos) << r.out;
  r = run("analyze membership --k 2 --trials 5 --seed 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict k=2: NON-SHORT"), std::string::npos) << r.out;

  r = run("analyze failure --preset toy --trials 50 --seed 2 --jobs 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("failures=0"), std::string::npos) << r.out;
}

TEST_F(Cli, BenchAndAttacks) {
  CliRun r = run("bench --preset small --trials 20 --seed 1");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("6.31 to 1"), std::string::npos) << r.out;

  r = run("attack brute --preset toy-micro --seed 3");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("planted g recovered: yes"), std::string::npos) << r.out;
  EXPECT_EQ(run("attack brute --preset reference --seed 3").code, 1);

  r = run("attack mta --count 5 --seed 3");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("matching ground truth: 4/4"), std::string::npos) << r.out;
}

}  // namespace
