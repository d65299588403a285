#define DOCTEST_CONFIG_IMPLEMENT
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

namespace {

std::string g_binary;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("count") {
  auto r = run("count --edges 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "a2 b2: 1\n");

  r = run("count --edges 5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "a1 a4 b1 b2^2: 2\n"));
  CHECK(contains(r.out, "a5 b1^3 b2: 1\n"));
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 10);
}

TEST_CASE("trees") {
  auto r = run("trees --passport \"a1^2 a4 b1^2 b2^2\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "count: 2\n"));
  CHECK(contains(r.out, "weighted: 3/2\n"));
  CHECK(contains(r.out, "aut: 1 2"));
}

TEST_CASE("enumerate") {
  auto r = run("enumerate --edges 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "darts 4\n"));
  CHECK(contains(r.out, "w:"));
  CHECK(contains(r.out, "b:"));

  r = run("enumerate --passport \"a2 b2\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "darts 4\n"));
}

TEST_CASE("analyze") {
  auto r = run("analyze --passport \"a1^4 a2^2 b1 b7\" --emax 6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "s(white) = 2\n"));
  CHECK(contains(r.out, "s(black) = none\n"));
  CHECK(contains(r.out, "e=2: (n-1)\n"));
  CHECK(contains(r.out, "e=3: (n+1)\n"));
  CHECK(contains(r.out, "e=5: -\n"));
  CHECK(contains(r.out, "{2, 3}"));
  CHECK(contains(r.out, "{5}  5 = 2*1 + 3*1"));
}

TEST_CASE("newton") {
  auto r = run("newton --coeffs "
               "49,-2352,4998,-6160,4851,-2520,847,-168,15 --prime 7");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "segment slope -1/3 length 3\n"));
  CHECK(contains(r.out, "segment slope -1/5 length 5\n"));
  CHECK(contains(r.out, "root valuations: 1/3 x3, 1/5 x5\n"));
}

TEST_CASE("solve") {
  auto r = run("solve --passport \"a2 b2\" --starts 40 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "white: (0,"));
  CHECK(contains(r.out, "^2"));
  CHECK(contains(r.out, "c: (0.5"));
  CHECK(contains(r.out, "r: (2"));
  CHECK(contains(r.out, "residual:"));
}

TEST_CASE("render writes a pixmap") {
  std::string out = "cli_render_tmp.ppm";
  auto r = run("render --passport \"a2 b2\" --starts 40 --seed 3 "
               "--size 20x10 --viewport 0.5,0,3,2 --out " + out);
  CHECK(r.exit_code == 0);
  FILE* f = fopen(out.c_str(), "rb");
  REQUIRE(f != nullptr);
  char header[3] = {};
  REQUIRE(fread(header, 1, 2, f) == 2);
  CHECK(std::string(header) == "P6");
  fseek(f, 0, SEEK_END);
  CHECK(ftell(f) == 13 + 20 * 10 * 3);  // "P6\n20 10\n255\n" header + pixels
  fclose(f);
  std::remove(out.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run("count").exit_code == 2);                    // missing option
  CHECK(run("bogus-subcommand").exit_code == 2);
  CHECK(run("count --edges 5").exit_code == 0);
  CHECK(run("trees --passport \"a1 b2\"").exit_code == 2);      // malformed
  CHECK(run("newton --coeffs 0,0 --prime 7").exit_code == 2);   // zero poly
  CHECK(run("analyze --passport \"a2 a3 b1 b4\" --emax 3").exit_code == 2);
  // runtime failure past validation: unwritable output path
  CHECK(run("render --passport \"a2 b2\" --starts 40 --seed 3 --size 4x4 "
            "--out /nonexistent-dir/x.ppm").exit_code == 1);
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  int consumed = argc;
  if (argc > 1 && argv[argc - 1][0] != '-') {
    g_binary = argv[argc - 1];
    consumed = argc - 1;
  }
  if (g_binary.empty()) {
    std::fprintf(stderr, "usage: test_cli [doctest options] <cli-binary>\n");
    return 1;
  }
  ctx.applyCommandLine(consumed, argv);
  return ctx.run();
}
