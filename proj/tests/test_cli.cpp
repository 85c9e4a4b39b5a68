#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef DOMAINKIND_CLI_PATH
#error "DOMAINKIND_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(DOMAINKIND_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        res.out.append(buf.data(), n);
    int status = pclose(p);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string first_line(const std::string& s) {
    return s.substr(0, s.find('\n'));
}

std::string temp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    REQUIRE(f.good());
    f << content;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    return std::string(std::istreambuf_iterator<char>(f),
                       std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("classify headlines match the documented forms") {
    RunResult disk = run("classify --builtin disk");
    CHECK(disk.code == 0);
    CHECK(first_line(disk.out) == "FirstKind, D = -1.000000");

    RunResult f3 = run("classify --builtin f3");
    CHECK(f3.code == 0);
    CHECK(first_line(f3.out) ==
          "BoundaryCase (Theorem A inapplicable: irregular boundary)");

    RunResult a12 = run("classify --builtin appendix3 --t 1.2");
    CHECK(a12.code == 0);
    CHECK(first_line(a12.out).rfind("FirstKind", 0) == 0);
}

TEST_CASE("classify from a coefficient spec file") {
    write_file(temp_path("spec.json"),
               R"({"coefficients": [0, 1, 0, [0.1, 0.05], "0.02-0.01i"], "label": "demo"})");
    RunResult r = run("classify " + temp_path("spec.json"));
    CHECK(r.code == 0);
    CHECK(first_line(r.out).rfind("FirstKind", 0) == 0);
}

TEST_CASE("input errors exit with code 2") {
    write_file(temp_path("bad.json"), "{ not json");
    CHECK(run("classify " + temp_path("bad.json")).code == 2);
    CHECK(run("classify --builtin nosuch").code == 2);
    CHECK(run("classify --builtin appendix3").code == 2); // missing t
    CHECK(run("hadamard --family disk-dilation --t 0.5 --x 0.2 --y 0.2").code == 2);
    CHECK(run("bisect --family disk-dilation --witness D --t-lo 0 --t-hi 1").code == 2);
    write_file(temp_path("badcfg.json"), R"({"no_such_key": 1})");
    CHECK(run("classify --builtin disk --config " + temp_path("badcfg.json")).code == 2);
    write_file(temp_path("badsamples.json"), R"({"boundary_samples": 1000})");
    CHECK(run("classify --builtin disk --config " + temp_path("badsamples.json")).code == 2);
}

TEST_CASE("accuracy failures exit with code 3") {
    write_file(temp_path("strict.json"),
               R"({"cross_check": true, "advanced": {"cross_check_tol": 1e-6}})");
    RunResult r = run("classify --builtin appendix3 --t 2.4 --config " +
                      temp_path("strict.json"));
    CHECK(r.code == 3);
}

TEST_CASE("hadamard mismatch exits with code 4") {
    write_file(temp_path("tight.json"),
               R"({"advanced": {"hadamard_tol": 1e-30}})");
    RunResult r = run("hadamard --family disk-dilation --t 0.5 --x 0.2 --y=-0.3 "
                      "--config " + temp_path("tight.json"));
    CHECK(r.code == 4);
}

TEST_CASE("hadamard accepts complex point syntax") {
    RunResult r = run("hadamard --family appendix3 --t 0.5 --x 0.1 --y 0.2i");
    CHECK(r.code == 0);
    RunResult r2 = run("hadamard --family appendix3 --t 0.5 --x 0.05-0.1i --y 0.2i");
    CHECK(r2.code == 0);
}

TEST_CASE("JSON report round trips bit for bit") {
    RunResult r = run("classify --builtin appendix3 --t 2.4 --json");
    CHECK(r.code == 0);
    nlohmann::json parsed = nlohmann::json::parse(r.out);
    std::string once = parsed.dump();
    std::string twice = nlohmann::json::parse(once).dump();
    CHECK(once == twice);
    CHECK(parsed["kind"] == "SecondKind");
    CHECK(parsed["maxima"] == 2);
}

TEST_CASE("sweep CSV: exact header, determinism, file output") {
    RunResult a = run("sweep --family nonunivalent --t-min 0.7 --t-max 0.8 --steps 3");
    CHECK(a.code == 0);
    CHECK(first_line(a.out) ==
          "t,D,kind,maxima,starlike,univalent,s_i_margin,area,status");
    RunResult b = run("sweep --family nonunivalent --t-min 0.7 --t-max 0.8 --steps 3");
    CHECK(a.out == b.out); // byte-identical
    // all rows flagged non-univalent
    std::size_t pos = a.out.find('\n') + 1;
    int rows = 0;
    while (pos < a.out.size()) {
        std::size_t end = a.out.find('\n', pos);
        std::string row = a.out.substr(pos, end - pos);
        CHECK(row.find(",false,") != std::string::npos);
        CHECK(row.find("non-univalent") != std::string::npos);
        ++rows;
        pos = end + 1;
    }
    CHECK(rows == 3);

    std::string csv_path = temp_path("rows.csv");
    RunResult c = run("sweep --family nonunivalent --t-min 0.7 --t-max 0.8 "
                      "--steps 3 --csv " + csv_path);
    CHECK(c.code == 0);
    CHECK(read_file(csv_path) == a.out);
}

TEST_CASE("sweep emits JSON when asked") {
    RunResult r = run("sweep --family appendix3 --t-min 1.0 --t-max 1.5 "
                      "--steps 2 --json");
    CHECK(r.code == 0);
    nlohmann::json arr = nlohmann::json::parse(r.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    CHECK(arr[0]["kind"] == "FirstKind");
    CHECK(arr[1]["kind"] == "SecondKind");
}

TEST_CASE("bisect locates the appendix3 sign change") {
    RunResult r = run("bisect --family appendix3 --witness D --t-lo 1 --t-hi 2 --json");
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    double t_star = j["t_star"].get<double>();
    CHECK(std::abs(t_star - 1.4411533842457842) < 1e-6);
}

TEST_CASE("config overlay changes behavior") {
    write_file(temp_path("coarse.json"), R"({"boundary_samples": 512})");
    RunResult r = run("classify --builtin disk --config " + temp_path("coarse.json"));
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "FirstKind, D = -1.000000");
    // --samples must be a power of two
    CHECK(run("classify --builtin disk --samples 1000").code == 2);
    CHECK(run("classify --builtin disk --samples 2048").code == 0);
}
