#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../support.hpp"
#include "pds/cli.hpp"

using namespace pds;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pds");
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("pds_cli_" + name);
  std::filesystem::remove(p);
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("enumerate writes the golden bytes") {
    const std::string out = temp("n3.txt");
    const Run r = run({"enumerate", "--n", "3", "--quiet", "--out", out, "--golden", PDS_GOLDEN_DIR});
    CHECK(r.code == kExitOk);
    CHECK(slurp(out) == testing::golden_text(3));
    CHECK(r.err.find("golden match") != std::string::npos);
    CHECK(r.err.find("records=8") != std::string::npos);
    std::filesystem::remove(out);
    std::filesystem::remove(out + ".log");
  }

  TEST_CASE("enumerate to standard output") {
    const Run r = run({"enumerate", "--n", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == testing::golden_text(2));
    CHECK(r.err.find("done seed=") != std::string::npos);
  }

  TEST_CASE("job count does not change the output") {
    const Run a = run({"enumerate", "--n", "4", "--jobs", "1", "--quiet"});
    const Run b = run({"enumerate", "--n", "4", "--jobs", "8", "--quiet"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out == testing::golden_text(4));
  }

  TEST_CASE("a stopped run prints nothing and resumes") {
    const std::string out = temp("n4.txt");
    const Run a = run({"enumerate", "--n", "4", "--quiet", "--out", out, "--max-items", "5"});
    CHECK(a.code == kExitOk);
    CHECK_FALSE(std::filesystem::exists(out));
    CHECK(a.err.find("--resume") != std::string::npos);
    const Run b = run({"enumerate", "--n", "4", "--quiet", "--out", out, "--resume"});
    CHECK(b.code == kExitOk);
    CHECK(b.err.find("resumed=5") != std::string::npos);
    CHECK(slurp(out) == testing::golden_text(4));
    std::filesystem::remove(out);
    std::filesystem::remove(out + ".log");
  }

  TEST_CASE("verify") {
    const Run good = run({"verify", testing::golden_path(3)});
    CHECK(good.code == kExitOk);
    CHECK(good.out.find("8 records, 0 failed") != std::string::npos);

    // Flip the last bit of the first record.
    std::string text = testing::golden_text(3);
    const std::size_t eol = text.find('\n', text.find('\n') + 1);
    text[eol - 1] = text[eol - 1] == '0' ? '1' : '0';
    const std::string bad = temp("flipped.txt");
    std::ofstream(bad) << text;
    const Run flipped = run({"verify", bad});
    CHECK(flipped.code == kExitVerificationFailure);
    CHECK(flipped.out.find("record 1 (line 1): FAIL eigenvalue profile") != std::string::npos);
    CHECK(flipped.out.find("8 records, 1 failed") != std::string::npos);

    const std::string empty = temp("empty.txt");
    std::ofstream(empty).flush();
    const Run e = run({"verify", empty});
    CHECK(e.code == kExitOk);
    CHECK(e.out == "0 records, 0 failed\n");

    std::filesystem::remove(bad);
    std::filesystem::remove(empty);
  }

  TEST_CASE("verify catches a wrong header") {
    std::string text = testing::golden_text(2);
    text.replace(text.find("class=") + 6, 4, "XXXX");
    const std::string path = temp("header.txt");
    std::ofstream(path) << text;
    const Run r = run({"verify", path});
    CHECK(r.code == kExitVerificationFailure);
    CHECK(r.out.find("header mismatch") != std::string::npos);
    std::filesystem::remove(path);
  }

  TEST_CASE("count") {
    const Run r = run({"count", testing::golden_path(4)});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("n=4 canonical=13 total=709312") != std::string::npos);
    CHECK(r.out.find("k=136 total=245760") != std::string::npos);
    CHECK(r.out.find("conjecture holds") != std::string::npos);

    const Run two = run({"count", testing::golden_path(2), "--group-classes"});
    CHECK(two.out.find("k=6 total=20 percent=62.50") != std::string::npos);
    CHECK(two.out.find("k=10 total=12 percent=37.50") != std::string::npos);
    CHECK(two.out.find("group_classes=3") != std::string::npos);

    const Run csv = run({"count", testing::golden_path(2), "--csv"});
    CHECK(csv.out.rfind("n,k,type,canonical,total,percent\n", 0) == 0);

    CHECK(run({"count", testing::golden_path(5), "--group-classes"}).code == kExitUsage);
  }

  TEST_CASE("bruteforce") {
    const Run r = run({"bruteforce", "--n", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == testing::golden_text(2));
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"enumerate", "--n", "1"}).code == kExitUsage);
    CHECK(run({"enumerate"}).code == kExitUsage);
    CHECK(run({"bruteforce", "--n", "4"}).code == kExitUsage);
    CHECK(run({"enumerate", "--n", "3", "--r", "3", "--quiet"}).code == kExitUsage);
    CHECK(run({"verify", "/nonexistent/file"}).code == kExitVerificationFailure);
    CHECK(run({"--help"}).code == kExitOk);
  }
}
