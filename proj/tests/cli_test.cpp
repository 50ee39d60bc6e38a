#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  CliRun r;
  const std::string cmd = std::string(CDIFF_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const CliRun& r, const std::string& text) { return r.out.find(text) != std::string::npos; }

}  // namespace

TEST(Cli, Field) {
  const CliRun nine = run("field --p 3 --n 2");
  EXPECT_EQ(nine.code, 0);
  EXPECT_TRUE(has(nine, "modulus: x^2 + 1"));
  EXPECT_TRUE(has(run("field --p 7 --n 1"), "q: 7"));
  EXPECT_EQ(run("field --p 4 --n 1").code, 2);
}

TEST(Cli, Spectrum) {
  EXPECT_TRUE(has(run("spectrum --p 7 --family inv --c 1"), "max: 4\n"));
  EXPECT_TRUE(has(run("spectrum --p 5 --n 2 --family swap1g --gamma -1 --c 1"), "max: 7\n"));
  EXPECT_TRUE(has(run("spectrum --p 11 --family swap01 --c 0"), "max: 1\n"));
  EXPECT_EQ(run("spectrum --p 7 --family swap1g --gamma 1 --c 1").code, 2);
  EXPECT_EQ(run("spectrum --p 7 --family swap1g --c 1").code, 2);
}

TEST(Cli, ElementFlags) {
  // -1/2 in F_7 is 3; the pointwise count at (1, 1/2) is 5.
  EXPECT_TRUE(has(run("spectrum --p 7 --family swap01 --c-expr -1/2 --a 1 --b 1/2"), "count: 5"));
  EXPECT_TRUE(has(run("spectrum --p 7 --family swap01 --c 3 --a 1 --b 4"), "count: 5"));
  // Over a prime field, -1 names q - 1 both ways.
  EXPECT_EQ(run("spectrum --p 13 --family swap1g --gamma -1 --c 1").out,
            run("spectrum --p 13 --family swap1g --gamma -1 --c 1 --raw-index").out);
  // Over F_25 the field's -1 is index 4; the raw index -1 is 24.
  EXPECT_EQ(run("spectrum --p 5 --n 2 --family swap1g --gamma -1 --c 1").out,
            run("spectrum --p 5 --n 2 --family swap1g --gamma 4 --c 1 --raw-index").out);
  EXPECT_EQ(run("spectrum --p 5 --n 2 --family swap1g --gamma -1 --c 1 --raw-index").out,
            run("spectrum --p 5 --n 2 --family swap1g --gamma 24 --c 1 --raw-index").out);
  EXPECT_EQ(run("spectrum --p 7 --family inv --c 9 --raw-index").code, 2);
  EXPECT_EQ(run("spectrum --p 7 --family inv --c 1/7").code, 2);
}

TEST(Cli, Verify) {
  EXPECT_EQ(run("verify --theorem du_inv --tier full").code, 0);
  EXPECT_EQ(run("verify --theorem cdu_swap1g --tier ci --qmax 49").code, 0);
  EXPECT_EQ(run("verify --theorem no_such_theorem").code, 2);
  EXPECT_EQ(run("verify --theorem du_inv --qmax 5000").code, 2);
  EXPECT_EQ(run("verify --theorem du_inv --tier weekly").code, 2);
}

TEST(Cli, Suites) {
  EXPECT_EQ(run("properties --seed 3 --trials 50").code, 0);
  EXPECT_EQ(run("appendix").code, 0);
}

TEST(Cli, TableRoundTrip) {
  const std::string path = testing::TempDir() + "cdiff_cli_table.txt";
  ASSERT_EQ(run("table --p 3 --n 3 --family swap1g --gamma 2 --out " + path).code, 0);
  const CliRun fromFile = run("spectrum --family table:" + path + " --c 1");
  const CliRun direct = run("spectrum --p 3 --n 3 --family swap1g --gamma 2 --c 1");
  EXPECT_EQ(fromFile.code, 0);
  EXPECT_EQ(fromFile.out, direct.out);
  std::remove(path.c_str());
}
