#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "specjoin/document.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + std::string(SPECJOIN_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = std::string(SPECJOIN_TEST_TMP) + "/" + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("spectrum of P(Z_8) as a table") {
    const auto r = run("spectrum --power-n 8 --format table");
    CHECK(r.code == 0);
    CHECK(r.out.find("\n0 ") != std::string::npos);
    CHECK(r.out.find("1.14285714286                   7") != std::string::npos);
}

TEST_CASE("friendship family with both methods") {
    const auto r = run("spectrum --family friendship:3 --method both --format json");
    REQUIRE(r.code == 0);
    const auto d = specjoin::doc::from_json(r.out);
    REQUIRE(d.deviation.has_value());
    CHECK(*d.deviation < 1e-10);
    CHECK(d.order == 7);
}

TEST_CASE("CSV output") {
    const auto r = run("spectrum --power-n 6 --method oracle --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("value,multiplicity,source\n0,1,oracle\n", 0) == 0);
}

TEST_CASE("identical invocations give identical bytes") {
    CHECK(run("spectrum --family firefly:2,7 --format json").out == run("spectrum --family firefly:2,7 --format json").out);
    CHECK(run("verify --suite families --jobs 3").out == run("verify --suite families --jobs 1").out);
    const auto stamped = run("spectrum --power-n 5 --format json --timestamp");
    CHECK(stamped.out.find("\"timestamp\"") != std::string::npos);
}

TEST_CASE("edge-list input") {
    const auto cycle = temp_file("c5.txt", "5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    CHECK(run("spectrum --edges " + cycle + " --method both").code == 0);
    const auto path = temp_file("p4.txt", "4\n0 1\n1 2\n2 3\n");
    CHECK(run("spectrum --edges " + path + " --method structural").code == 1);
    CHECK(run("spectrum --edges " + path + " --method oracle").code == 0);
    const auto isolated = temp_file("iso.txt", "3\n0 1\n");
    CHECK(run("spectrum --edges " + isolated + " --method oracle").code == 1);
    const auto broken = temp_file("bad.txt", "3\n0 one\n");
    CHECK(run("spectrum --edges " + broken).code == 1);
}

TEST_CASE("usage errors exit with 1") {
    CHECK(run("").code == 1);
    CHECK(run("spectrum").code == 1);
    CHECK(run("spectrum --power-n 5 --family wheel:5").code == 1);
    CHECK(run("spectrum --power-n 5 --format xml").code == 1);
    CHECK(run("spectrum --family wheel:2").code == 1);
    CHECK(run("spectrum --power-n 1").code == 1);
    CHECK(run("spectrum --power-n 5 --tol -1").code == 1);
    CHECK(run("verify --suite nope").code == 1);
    CHECK(run("spectrum --help").code == 0);
    CHECK(run("spectrum --help").out.find("firefly:p,n") != std::string::npos);
}

TEST_CASE("deviation above tolerance exits with 2 and still prints") {
    const auto r = run("spectrum --power-n 30 --tol 1e-30 --format csv");
    CHECK(r.code == 2);
    CHECK(r.out.rfind("value,multiplicity,source", 0) == 0);
}

TEST_CASE("oracle cutoff from the environment") {
    CHECK(run("spectrum --power-n 40 --method oracle", "SPECJOIN_ORACLE_MAX=20").code == 1);
    CHECK(run("spectrum --power-n 40 --method structural", "SPECJOIN_ORACLE_MAX=20").code == 0);
    CHECK(run("spectrum --power-n 40", "SPECJOIN_ORACLE_MAX=40").code == 0);
    CHECK(run("spectrum --power-n 4", "SPECJOIN_ORACLE_MAX=abc").code == 1);
}

TEST_CASE("verify suites") {
    const auto power = run("verify --suite power --max-n 120");
    CHECK(power.code == 0);
    CHECK(power.out.find("FAIL") == std::string::npos);
    CHECK(power.out.find("PASS power n=120") != std::string::npos);

    const auto fam = run("verify --suite families");
    CHECK(fam.code == 0);
    CHECK(fam.out.find("WARN families complete_split:") != std::string::npos);
    CHECK(fam.out.find("WARN families cone:") != std::string::npos);
    CHECK(fam.out.find("WARN families wheel:") != std::string::npos);
    CHECK(fam.out.find("WARN families friendship:") == std::string::npos);
    CHECK(fam.out.find("value_deviation=") != std::string::npos);

    const auto all = run("verify --suite all --max-n 50");
    CHECK(all.code == 0);
    CHECK(all.out.find("SUMMARY pass=") != std::string::npos);
    CHECK(run("verify --suite power --max-n 1").code == 1);
}
