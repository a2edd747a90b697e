#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "qelim/qelim.hpp"

#ifndef QELIM_CLI_PATH
#error "QELIM_CLI_PATH must point at the qelim executable"
#endif

namespace fs = std::filesystem;

namespace {

struct Output {
  int status;
  std::string out;
};

Output qelim_cli(const std::string& args) {
  const std::string cmd = std::string(QELIM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("qelim_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  [[nodiscard]] std::string file(const std::string& name) const { return (path / name).string(); }
};

bool has_line(const std::string& text, const std::string& line) {
  return text.find(line + "\n") != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gen, analyze and bound") {
    TempDir dir;
    const auto and2 = dir.file("and2.txt");
    REQUIRE(qelim_cli("gen and 2 -o " + and2).status == 0);
    CHECK(qelim::io::read_file(and2) == "2 2\n0 1\n0 0 0 1\n");

    auto r = qelim_cli("analyze " + and2 + " --uniform");
    CHECK(r.status == 0);
    CHECK(has_line(r.out, "inf 1\t1/4"));
    CHECK(has_line(r.out, "inf 2\t1/4"));
    CHECK(has_line(r.out, "plurality_error\t1/4"));

    r = qelim_cli("bound " + and2 + " --uniform --eps 0");
    CHECK(r.status == 0);
    CHECK(has_line(r.out, "bound\t1/1"));

    const auto same = qelim_cli("bound " + and2 + " --uniform --eps 0 --close " + and2);
    CHECK(has_line(same.out, "delta\t0/1"));
    CHECK(same.out.substr(same.out.find('\n') + 1) == r.out);

    const auto c = dir.file("const.txt");
    REQUIRE(qelim_cli("gen constant 3 0 -o " + c).status == 0);
    CHECK(has_line(qelim_cli("analyze " + c + " --uniform").out, "inf_max\t0/1"));
  }

  TEST_CASE("--p 1/2 matches --uniform, and distribution files are read") {
    TempDir dir;
    const auto p3 = dir.file("p3.txt");
    REQUIRE(qelim_cli("gen parity 3 -o " + p3).status == 0);
    const auto uniform = qelim_cli("analyze " + p3 + " --uniform");
    CHECK(qelim_cli("analyze " + p3 + " --p 1/2").out == uniform.out);
    const auto d = dir.file("d.txt");
    qelim::io::write_file(d, "1/2 1/2\n2/4 2/4\n1/2 1/2\n");
    CHECK(qelim_cli("analyze " + p3 + " " + d).out == uniform.out);
  }

  TEST_CASE("perturbed tribes with --close") {
    TempDir dir;
    const auto f = dir.file("f.txt");
    const auto g = dir.file("g.txt");
    REQUIRE(qelim_cli("gen perturbed-tribes 2 2 1/4 -o " + f).status == 0);
    REQUIRE(qelim_cli("gen tribes 2 2 -o " + g).status == 0);
    const auto r = qelim_cli("bound " + f + " --uniform --eps 0 --close " + g);
    CHECK(r.status == 0);
    CHECK(has_line(r.out, "delta\t1/16"));
    CHECK(has_line(r.out, "bound\t2/1"));
  }

  TEST_CASE("eliminate") {
    TempDir dir;
    const auto dict = dir.file("dict.txt");
    REQUIRE(qelim_cli("gen dictator 2 1 -o " + dict).status == 0);
    const auto tree = dir.file("dict.tree");
    qelim::io::write_file(tree, "Q 1\nL 0\nL 1\n");
    auto r = qelim_cli("eliminate " + dict + " " + tree + " --uniform --eps 0");
    CHECK(r.status == 0);
    CHECK(has_line(r.out, "steps\t1"));
    CHECK(has_line(r.out, "error_after\t1/2"));

    const auto leaf = dir.file("leaf.tree");
    qelim::io::write_file(leaf, "L 0\n");
    r = qelim_cli("eliminate " + dict + " " + leaf + " --uniform --eps 1/2");
    CHECK(r.status == 0);
    CHECK(has_line(r.out, "steps\t0"));

    const auto p3 = dir.file("p3.txt");
    const auto p3tree = dir.file("p3.tree");
    REQUIRE(qelim_cli("gen parity 3 -o " + p3).status == 0);
    REQUIRE(qelim_cli("optimal " + p3 + " --uniform --eps 0 --emit-tree " + p3tree).status == 0);
    r = qelim_cli("eliminate " + p3 + " " + p3tree + " --uniform --eps 0");
    CHECK(has_line(r.out, "steps\t3"));
    CHECK(has_line(r.out, "plurality_error\t1/2"));

    CHECK(qelim_cli("eliminate " + dict + " " + leaf + " --uniform --eps 0").status != 0);
    const auto bad = dir.file("bad.tree");
    qelim::io::write_file(bad, "Q 1\nL 0\nQ 1\nL 0\nL 1\n");
    CHECK(qelim_cli("eliminate " + dict + " " + bad + " --uniform").status != 0);
  }

  TEST_CASE("optimal and its emitted tree") {
    TempDir dir;
    const auto p3 = dir.file("p3.txt");
    const auto and2 = dir.file("and2.txt");
    const auto c = dir.file("c.txt");
    REQUIRE(qelim_cli("gen parity 3 -o " + p3).status == 0);
    REQUIRE(qelim_cli("gen and 2 -o " + and2).status == 0);
    REQUIRE(qelim_cli("gen constant 3 1 -o " + c).status == 0);
    CHECK(has_line(qelim_cli("optimal " + p3 + " --uniform --eps 0").out, "distributional_complexity\t3"));
    CHECK(has_line(qelim_cli("optimal " + and2 + " --uniform --eps 1/4").out,
                   "distributional_complexity\t0"));
    CHECK(has_line(qelim_cli("optimal " + c + " --uniform --eps 0").out, "distributional_complexity\t0"));

    const auto t = dir.file("t.tree");
    const auto out = qelim_cli("optimal " + and2 + " --p 1/3 --eps 1/10 --emit-tree " + t);
    REQUIRE(out.status == 0);
    const auto f = qelim::and_function(2);
    const auto mu = qelim::ProductDistribution::bernoulli(2, qelim::Rat(1, 3));
    const auto tree = qelim::io::parse_tree(qelim::io::read_file(t), 2);
    const auto d = qelim::distributional_complexity(f, mu, qelim::Rat(1, 10));
    CHECK(qelim::depth(tree) <= d);
    CHECK(has_line(out.out, "optimal_error\t" + qelim::distributional_error(tree, f, mu).str()));
    CHECK(qelim::distributional_error(tree, f, mu) == qelim::optimal_error(f, mu, d));

    const auto big = dir.file("big.txt");
    REQUIRE(qelim_cli("gen parity 13 -o " + big).status == 0);
    CHECK(qelim_cli("optimal " + big + " --uniform").status != 0);
  }

  TEST_CASE("usage and parse errors exit nonzero") {
    TempDir dir;
    const auto bad = dir.file("bad.txt");
    qelim::io::write_file(bad, "2 2\n0 1\n0 0 1\n");
    CHECK(qelim_cli("analyze " + bad + " --uniform").status != 0);
    CHECK(qelim_cli("gen nosuch 3").status != 0);
    CHECK(qelim_cli("verify nosuch").status != 0);
    CHECK(qelim_cli("analyze " + dir.file("missing.txt") + " --uniform").status != 0);
    const auto f = dir.file("f.txt");
    REQUIRE(qelim_cli("gen and 2 -o " + f).status == 0);
    CHECK(qelim_cli("analyze " + f).status != 0);
    CHECK(qelim_cli("analyze " + f + " --uniform --p 1/2").status != 0);
  }

  TEST_CASE("verify suites") {
    CHECK(qelim_cli("verify tribes-influence").status == 0);
    CHECK(qelim_cli("verify xi-identity").status == 0);
  }
}
