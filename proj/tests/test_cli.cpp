#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "sepfam/io.hpp"

using namespace sepfam;

namespace {

const std::string cli = SEPFAM_CLI_PATH;

std::filesystem::path work_dir() {
    auto dir = std::filesystem::temp_directory_path() / "sepfam_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

int run(const std::string& args) {
    std::string cmd = cli + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -2;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("generate, build, verify, oracle and plot chain together") {
    auto dir = work_dir();
    auto pts = (dir / "circle9.sfp").string();
    auto fam = (dir / "circle9.sff").string();
    auto svg = (dir / "circle9.svg").string();

    CHECK(run("generate --shape circle --n 9 " + pts) == 0);
    PointSet x = load_points(pts);
    CHECK(x.size() == 9);

    CHECK(run("build --method halfplane " + pts + " " + fam) == 0);
    SeparatingFamily f = load_family(fam);
    CHECK(f.separators.size() == 5);
    CHECK(is_separating(f, x));

    CHECK(run("verify " + pts + " " + fam) == 0);
    CHECK(run("oracle --class disc " + pts) == 0);
    CHECK(run("plot " + pts + " " + svg + " --family " + fam) == 0);
    std::string drawn = slurp(svg);
    CHECK(drawn.rfind("<?xml", 0) == 0);
    CHECK(drawn.find("<svg") != std::string::npos);
}

TEST_CASE("every generator shape emits a loadable file") {
    auto dir = work_dir();
    for (std::string shape : {"collinear", "circle", "es", "parent", "twins", "random"}) {
        auto path = (dir / ("gen_" + shape + ".sfp")).string();
        std::string flags = shape == "es" ? "--k 4" : "--n 8";
        if (shape == "random") flags += " --seed 7";
        CHECK(run("generate --shape " + shape + " " + flags + " " + path) == 0);
        CHECK(load_points(path).size() >= 4);
    }
}

TEST_CASE("verify reports the first unseparated pair and fails") {
    auto dir = work_dir();
    auto pts = (dir / "line5.sfp").string();
    auto fam = (dir / "weak.sff").string();
    CHECK(run("generate --shape collinear --n 5 " + pts) == 0);
    std::ofstream(fam) << "sff 1\nH 1/1 0/1 1/1\n";
    CHECK(run("verify " + pts + " " + fam) == 1);
}

TEST_CASE("exit codes distinguish failure kinds") {
    auto dir = work_dir();
    auto bad = (dir / "bad.sfp").string();
    std::ofstream(bad) << "sfp 9\nnope\n";
    CHECK(run("verify " + bad + " " + bad) == 2);
    CHECK(run("oracle --class halfplane " + (dir / "missing.sfp").string()) == 2);

    auto line = (dir / "line6.sfp").string();
    CHECK(run("generate --shape collinear --n 6 " + line) == 0);
    auto out = (dir / "no.sff").string();
    CHECK(run("build --method halfplane " + line + " " + out) == 3);  // needs general position
    CHECK(!std::filesystem::exists(out));

    auto big = (dir / "line21.sfp").string();
    CHECK(run("generate --shape collinear --n 21 " + big) == 0);
    CHECK(run("oracle --class halfplane " + big) == 4);  // over the oracle cap
}

TEST_CASE("build refuses to write anything non-separating") {
    auto dir = work_dir();
    auto pts = (dir / "rand12.sfp").string();
    CHECK(run("generate --shape random --n 12 --seed 3 " + pts) == 0);
    for (std::string method : {"prefix", "halfplane", "disc", "convex"}) {
        auto fam = (dir / ("m_" + method + ".sff")).string();
        CHECK(run("build --method " + method + " " + pts + " " + fam) == 0);
        CHECK(is_separating(load_family(fam), load_points(pts)));
    }
}
