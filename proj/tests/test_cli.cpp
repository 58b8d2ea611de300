#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = mel::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Temporary file removed at scope exit.
struct Temp {
    fs::path path;
    Temp(const std::string& name, const std::string& body)
        : path(fs::temp_directory_path() / ("mel_cli_test_" + name)) {
        std::ofstream(path) << body;
    }
    ~Temp() { fs::remove(path); }
    std::string str() const { return path.string(); }
};

std::string data(const std::string& name) { return std::string(MEL_TEST_DATA_DIR) + "/" + name; }

std::size_t count_lines(const std::string& s, const std::string& prefix) {
    std::istringstream in(s);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0;
    return n;
}

const char* kAllRed =
    R"({"states":[{"time":0,"there":["red"]},{"time":3,"there":["red"]}],"alphabet":["green","push","red"]})";

}  // namespace

TEST_CASE("check") {
    const Temp trace("red.json", kAllRed);
    auto r = run({"check", data("traffic_light.mel"), trace.str()});
    CHECK(r.code == 0);
    CHECK(r.out.find("formula 1: sat") != std::string::npos);
    CHECK(r.out.ends_with("SAT\n"));

    const Temp one("one.mel", "G (red & green -> #false)\n");
    const Temp both("both.json", R"({"states":[{"time":0,"there":["red","green"]}]})");
    r = run({"check", one.str(), both.str()});
    CHECK(r.code == 1);
    CHECK(r.out.ends_with("UNSAT(formula 1)\n"));

    const Temp bad("bad.json", "{not json");
    CHECK(run({"check", one.str(), bad.str()}).code == 2);
    CHECK(run({"check", one.str(), trace.str(), "--at", "9"}).code == 2);
    CHECK(run({"check", one.str(), trace.str(), "--at", "1"}).code == 0);
    CHECK(run({"check", "/nonexistent.mel", trace.str()}).code == 2);
}

TEST_CASE("models") {
    auto r = run({"models", data("traffic_light_push.mel"), "--max-len", "3", "--exact-len", "--max-time", "20",
                  "--equilibrium"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out, "{") == 14);
    CHECK(r.out.ends_with("14 models\n"));

    const Temp p("p.mel", "p\n");
    r = run({"models", p.str(), "--max-len", "1", "--equilibrium"});
    CHECK(count_lines(r.out, "{") == 1);
    CHECK(r.out.ends_with("1 model\n"));

    const Temp f("false.mel", "#false\n");
    r = run({"models", f.str(), "--max-len", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 models\n");

    CHECK(run({"models", p.str(), "--max-len", "0"}).code == 2);
    CHECK(run({"models", p.str(), "--min-len", "3", "--max-len", "2"}).code == 2);
}

TEST_CASE("equiv") {
    const Temp nn("nn.mel", "~~p\n");
    const Temp p("p.mel", "p\n");
    auto r = run({"equiv", nn.str(), p.str(), "--max-len", "1", "--max-time", "0"});
    CHECK(r.code == 1);
    CHECK(r.out.rfind("NOT EQUIVALENT\n", 0) == 0);
    CHECK(r.out.find(R"("here":[])") != std::string::npos);
    CHECK(r.out.find("rejected by right formula 1") != std::string::npos);

    const Temp pq("pq.mel", "p & q\n");
    const Temp qp("qp.mel", "q & p\n");
    r = run({"equiv", pq.str(), qp.str()});
    CHECK(r.code == 0);
    CHECK(r.out == "EQUIVALENT (within bounds)\n");

    const Temp empty("empty.mel", "");
    const Temp t("true.mel", "#true\n");
    CHECK(run({"equiv", empty.str(), t.str()}).code == 0);

    const Temp broken("broken.mel", "p &\n");
    CHECK(run({"equiv", broken.str(), p.str()}).code == 2);
}

TEST_CASE("rewrite") {
    auto r = run({"rewrite", "--formula", "p U[2..4) q", "--pass", "unf"});
    CHECK(r.code == 0);
    CHECK(r.out == "p & (X[1](p & (X[1](q | (p & X[1] q)) | X[2] q)) | X[2](q | (p & X[1] q)) | X[3] q)\n");

    r = run({"rewrite", "--formula", "p -> q", "--pass", "dual"});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());

    CHECK(run({"rewrite", "--formula", "p U q", "--pass", "swap"}).out == "p S q\n");
    CHECK(run({"rewrite", "--formula", "p U[1..3) q", "--pass", "unf", "--non-strict"}).code == 1);
    CHECK(run({"rewrite", "--formula", "p U (", "--pass", "swap"}).code == 2);
    CHECK(run({"rewrite", "--formula", "p", "--pass", "bogus"}).code == 1);
}

TEST_CASE("translate") {
    auto r = run({"translate", "--formula", "G (push -> F[1..15) G[0..30] green)"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "!x (0 <={0} x & push(x) -> ?y (x <={-1} y & y <={14} x & !z (y <={0} z & z <={30} y -> green(z))))\n");
    CHECK(run({"translate", "--formula", "p"}).out == "p(0)\n");
    CHECK(run({"translate", "--formula", "p", "--at", "t"}).out == "p(t)\n");
    CHECK(run({"translate", "--formula", "F[0..0) p"}).code == 1);
    CHECK(run({"translate", "--formula", "p", "--raw", "--simplified"}).code == 2);
}

TEST_CASE("qht") {
    const Temp s("s.fom", "p(0)\n");
    const Temp tt("t.fom", "#true\n");
    const Temp open("open.fom", "p(x)\n");
    const Temp m("m.json", R"j({"domain":[0],"there":["p(0)"]})j");

    auto r = run({"qht", "--sentence-path", s.str(), "--interp-path", m.str()});
    CHECK(r.code == 0);
    CHECK(r.out == "SAT\n");
    r = run({"qht", "--sentence-path", s.str(), "--interp-path", m.str(), "--equilibrium"});
    CHECK(r.code == 0);
    CHECK(r.out == "EQ\n");
    r = run({"qht", "--sentence-path", tt.str(), "--interp-path", m.str(), "--equilibrium"});
    CHECK(r.code == 1);
    CHECK(r.out == "NON-EQ\nwitness here: []\n");
    CHECK(run({"qht", "--sentence-path", open.str(), "--interp-path", m.str()}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check"}).code == 2);
}
