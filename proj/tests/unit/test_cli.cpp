#include <doctest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ORIGAMI_CLI_PATH) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe.get())) out += buf.data();
  const int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("latex output") {
    auto r = run("real --n 2 --connected --format latex");
    CHECK(r.code == 0);
    CHECK(r.out == "\\frac{3 p_{1}^{2}}{2}+p_{2}\n");
    CHECK(run("h11 --n 6").out == "19\n");
    auto q = run("complex --n 3 --connected --format latex");
    CHECK(q.out == "\\frac{4 p_{1}^{3}}{3}+3 p_{3}\n");
  }

  TEST_CASE("oracle diff") {
    auto r = run("oracle --flavor complex --n 3 --connected");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"[3]\": \"3\"") != std::string::npos);
    CHECK(r.out.find("\"diff\": {}") != std::string::npos);
    CHECK(run("oracle --flavor mirror --n 3").code == 0);
  }

  TEST_CASE("tables and series") {
    auto g = run("genus-table --max-n 5 --format csv");
    CHECK(g.out.find("5,2,51\n") != std::string::npos);
    auto h = run("h22 --max-q 4 --format csv");
    CHECK(h.out.find("4,26\n") != std::string::npos);
    auto real = run("real --n 3 --connected");
    CHECK(real.out.find("\"cover_degree\": 6") != std::string::npos);
    auto fit = run("fit --target h22 --basis E2sq,E2,E3,E4");
    CHECK(fit.code == 0);
    CHECK(fit.out.find("\"E4\": \"-1/6\"") != std::string::npos);
    auto qb = run("qbracket --f P2 --max-q 6 --format csv");
    CHECK(qb.out.find("6,0\n") != std::string::npos);
    auto tau = run("tau --n 2 --format latex");
    CHECK(tau.out == "2 p_{1}^{2}\n");
    auto fc = run("fcover --variant real --genus 2 --max-q 6 --format csv");
    CHECK(fc.out.find("6,19\n") != std::string::npos);
    CHECK(run("jack --n 5 --alpha 2 --connected --format latex").out ==
          run("real --n 5 --connected --format latex").out);
  }

  TEST_CASE("deterministic output") {
    CHECK(run("complex --n 7 --connected").out == run("complex --n 7 --connected --threads 1").out);
  }

  TEST_CASE("invalid configurations exit with 2") {
    CHECK(run("").code == 2);
    CHECK(run("bogus").code == 2);
    CHECK(run("complex --n 0").code == 2);
    CHECK(run("real --n 3 --format xml").code == 2);
    CHECK(run("oracle --flavor weird --n 2").code == 2);
    CHECK(run("jack --n 3 --alpha -1").code == 2);
    CHECK(run("fit --target T2 --basis QM6").code == 1);
  }
}
