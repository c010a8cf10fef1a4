#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RANK1_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

const std::string kData = RANK1_DATA_DIR;

}  // namespace

TEST_CASE("cli exit codes") {
  const auto w = run("word --preset chacon --stage 2");
  CHECK(w.status == 0);
  CHECK(w.out == "0010001010010\n");
  CHECK(run("word --preset chacon --stage -1").status == 64);
  CHECK(run("no-such-command").status == 64);
  CHECK(run("word --preset nope --stage 1").status != 0);
  CHECK(run("word --schedule " + kData + "/missing.json --stage 1").status != 0);
  CHECK(run("probe --preset chacon --radius 1 --test-len 12").status == 0);
  CHECK(run("probe --schedule " + kData + "/period2.json --radius 0 --test-len 4 --allow-repeating").status == 2);
  // An offset beyond the radius is a runtime error, not a usage error.
  CHECK(run("shift-code --preset chacon --k 5 --radius 1").status == 1);
}

TEST_CASE("json output is stable") {
  const auto a = run("probe --preset chacon --radius 2 --test-len 24 --json --threads 1");
  const auto b = run("probe --preset chacon --radius 2 --test-len 24 --json --threads 4");
  const auto c = run("probe --preset chacon --radius 2 --test-len 24 --json --threads 4");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
  CHECK(a.out.find("\"schema\": \"rank1/v1\"") != std::string::npos);

  const auto s1 = run("point separation-sweep --preset chacon --depth 6 --count 20 --json");
  const auto s2 = run("point separation-sweep --preset chacon --depth 6 --count 20 --json");
  CHECK(s1.status == 0);
  CHECK(s1.out == s2.out);
  for (const char* cmd : {"classify --preset staircase --json", "lemma --preset odometer2 --m 3 --n 1 --json",
                          "minimal-context --preset chacon --n 1 --json"}) {
    INFO(cmd);
    const auto r = run(cmd);
    CHECK(r.status == 0);
    CHECK(r.out.rfind("{\n  \"schema\": \"rank1/v1\"", 0) == 0);
  }
}
