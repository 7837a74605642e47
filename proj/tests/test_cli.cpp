#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

// End-to-end checks of the fpa binary: exit codes, key report content, and
// byte determinism.

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(FPA_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WEXITSTATUS(status);
    return res;
}

std::string fixture(const char* name) { return std::string(FPA_FIXTURE_DIR) + "/" + name; }

} // namespace

TEST_CASE("even-part reproduces the five-relation presentation") {
    RunResult r = run_cli("even-part " + fixture("example1.fpa") + " --max-deg 8 --simplify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("gens y12 y21 y22;") != std::string::npos);
    CHECK(r.out.find("rel y12^2;") != std::string::npos);
    CHECK(r.out.find("rel y21*y12;") != std::string::npos);
    CHECK(r.out.find("rel y21^2;") != std::string::npos);
    CHECK(r.out.find("rel y21*y22;") != std::string::npos);
    CHECK(r.out.find("rel y22*y12;") != std::string::npos);
    CHECK(r.out.find("# y12 = x*y") != std::string::npos);
}

TEST_CASE("member exit codes") {
    RunResult nm = run_cli("member " + fixture("example1.fpa") +
                           " --element x*y^3*x --max-deg 10");
    CHECK(nm.exit_code == 1);
    CHECK(nm.out.find("non-member-up-to-degree") != std::string::npos);

    RunResult m = run_cli("member " + fixture("example1.fpa") +
                          " --element y*x*y*y --max-deg 10");
    CHECK(m.exit_code == 0);

    // With schema expansion the instance itself becomes a member.
    RunResult em = run_cli("member " + fixture("example1.fpa") +
                           " --element x*y^3*x --max-deg 10 --expand-schemas");
    CHECK(em.exit_code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("hilbert " + fixture("missing.fpa")).exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("member " + fixture("example1.fpa") + " --element q").exit_code == 2);
}

TEST_CASE("hilbert json report") {
    RunResult r = run_cli("hilbert " + fixture("free2.fpa") + " --max-deg 4 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["hilbert"]["dims"] == nlohmann::json({"1", "2", "4", "8", "16"}));
    CHECK(j["hilbert"]["exact"] == true);
    CHECK(j["degree_bound"] == 4);
    CHECK(j["complete"] == true);
}

TEST_CASE("verify-equiv and check-map exit codes") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "fpa_cli_even12.fpa";
    RunResult even = run_cli("even-part " + fixture("example1.fpa") +
                             " --max-deg 12 --simplify -o " + tmp.string());
    REQUIRE(even.exit_code == 0);

    RunResult eq = run_cli("verify-equiv " + fixture("example1.fpa") + " " + tmp.string() +
                           " --ratio 2 --max-deg 6");
    CHECK(eq.exit_code == 0);
    CHECK(eq.out.find("consistent-up-to-degree") != std::string::npos);

    RunResult cm = run_cli("check-map " + fixture("example1_a0.fpa") + " " +
                           fixture("example1.fpa") +
                           " --map \"a=x*y;b=y^2;c=y*x\" --max-deg 12");
    CHECK(cm.exit_code == 0);

    RunResult bad = run_cli("check-map " + fixture("example1_a0.fpa") + " " +
                            fixture("example1.fpa") +
                            " --map \"a=x;b=y^2;c=y*x\" --max-deg 12");
    CHECK(bad.exit_code == 1);
    fs::remove(tmp);
}

TEST_CASE("peirce subcommand on the matrix fixture") {
    RunResult r = run_cli("peirce " + fixture("mat2.fpa") + " --max-deg 8 --simplify --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["witnesses"] == "verified");
    CHECK(j["unit_derivable"] == true);
    CHECK(j["hilbert"]["dims"] == nlohmann::json({"1", "0", "0", "0", "0"}));
}

TEST_CASE("peirce refuses unverified witnesses with exit 3") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "fpa_cli_ff.fpa";
    {
        std::ofstream out(tmp);
        out << "gens e;\nrel e^2 - e;\nidempotent e;\n"
            << "witness e: 1 = e;\nwitness f: 1 = f;\n";
    }
    RunResult r = run_cli("peirce " + tmp.string() + " --max-deg 6");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("witnesses: inconclusive") != std::string::npos);
    fs::remove(tmp);
}

TEST_CASE("reports are byte-deterministic") {
    std::string cmd = "gb " + fixture("example1.fpa") + " --max-deg 8 --json";
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    std::string pcmd = "peirce " + fixture("mat2.fpa") + " --max-deg 6 --json";
    CHECK(run_cli(pcmd).out == run_cli(pcmd).out);
}

TEST_CASE("parse validates and canonicalizes") {
    RunResult r = run_cli("parse " + fixture("mat2.fpa"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("witness e: 1 = e + b*e*a;") != std::string::npos);
    CHECK(r.out.find("witness f: 1 = f + a*f*b;") != std::string::npos);

    RunResult gb = run_cli("gb " + fixture("comm2.fpa") + " --max-deg 6");
    CHECK(gb.exit_code == 0);
    CHECK(gb.out.find("v*u -> u*v") != std::string::npos);
}
