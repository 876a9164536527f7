#include "binform/serialize.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(BINFORM_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(BINFORM_FIXTURES_DIR) + "/" + name + ".json";
}

} // namespace

TEST_CASE("enumerate subcommand") {
    RunResult r = run_cli("enumerate --n 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("[12][34]") != std::string::npos);
    CHECK(r.out.find("[1u][2u][3u][4u]") != std::string::npos);

    RunResult bad = run_cli("enumerate --n 1");
    CHECK(bad.code == 2);

    RunResult json = run_cli("enumerate --n 2 --format json");
    CHECK(json.code == 0);
    auto arr = binform::Json::parse(json.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 2);
}

TEST_CASE("byte-identical output across repeated runs") {
    for (const char* args : {"enumerate --n 4 --format json",
                             "pipeline --n 2 --char 0 --max-degree 2 --format json",
                             "straighten --n 4 --char 0 [13][24]",
                             "operator --n 6 --char 3 --l 1 --format json"}) {
        RunResult a = run_cli(args), b = run_cli(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("straighten subcommand applies the syzygy") {
    RunResult r = run_cli("straighten --n 4 --char 0 [13][24]");
    CHECK(r.code == 0);
    CHECK(r.out.find("[12][34]") != std::string::npos);
    CHECK(r.out.find("[14][23]") != std::string::npos);
}

TEST_CASE("transfer subcommand on the quadratic") {
    RunResult r = run_cli("transfer --n 2 --char 0 [12]^2 --format json");
    CHECK(r.code == 0);
    auto j = binform::Json::parse(r.out);
    CHECK(j["d"] == 2);
    CHECK(j["m"] == 0);
    binform::Covariant c = binform::covariant_from_json(j);
    binform::FormSpec s = binform::make_form_spec(2, 0);
    CHECK(c.poly == binform::parse_poly(s.ring, "2*a1^2 + -8*a0*a2"));

    // zero orbit sum is a result, not an error
    RunResult z = run_cli("transfer --n 4 --char 0 [12][34] --format json");
    CHECK(z.code == 0);
    CHECK(binform::Json::parse(z.out)["zero_orbit_sum"] == true);
}

TEST_CASE("operator subcommand exit codes") {
    RunResult ok = run_cli("operator --n 8 --char 5 --l 4");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("4*a4") != std::string::npos);
    CHECK(ok.out.find("boundary") != std::string::npos);   // l = m0/2 flagged

    RunResult fail = run_cli("operator --n 4 --char 3 --l 1");
    CHECK(fail.code == 3);

    RunResult q = run_cli("operator --n 6 --char 3 --l 1 --format json");
    CHECK(q.code == 0);
    binform::Covariant c = binform::covariant_from_json(binform::Json::parse(q.out));
    CHECK(c.degree == 1);
    CHECK(c.order == 4);
}

TEST_CASE("verify subcommand") {
    RunResult good = run_cli("verify --in " + fixture("quartic_char3_c43"));
    CHECK(good.code == 0);
    CHECK(good.out.find("true") != std::string::npos);

    RunResult bad = run_cli("verify --in " + fixture("hilbert_n16_p3_counterexample") +
                            " --format json");
    CHECK(bad.code == 1);
    auto j = binform::Json::parse(bad.out);
    CHECK(j["covariant"] == false);
    CHECK(j.contains("residual"));
}

TEST_CASE("member subcommand") {
    std::string gens = " --gens " + fixture("quartic_char3_c01") +
                       " --gens " + fixture("quartic_char3_c43");
    RunResult yes = run_cli("member --in " + fixture("quartic_char3_c44") + gens);
    CHECK(yes.code == 0);
    CHECK(yes.out.find("yes") != std::string::npos);

    RunResult no = run_cli("member --in " + fixture("quartic_char3_c43") +
                           " --gens " + fixture("quartic_char3_c01") +
                           " --gens " + fixture("quartic_char3_c41") + " --format json");
    CHECK(no.code == 1);
    auto j = binform::Json::parse(no.out);
    CHECK(j["no"] == true);
    CHECK(j.contains("slice_dim"));
    CHECK(j.contains("rank"));
}

TEST_CASE("hilbert subcommand on the counterexample") {
    RunResult r = run_cli("hilbert --in " + fixture("hilbert_n16_p3_counterexample") +
                          " --format json");
    CHECK(r.code == 0);
    auto j = binform::Json::parse(r.out);
    CHECK(j["isobaric_ok"] == true);
    CHECK(j["D_ok"] == true);
    CHECK(j["Delta_ok"] == true);
    CHECK(j["applicable"] == false);
}

TEST_CASE("pipeline JSON round-trips through the covariant schema") {
    RunResult r = run_cli("pipeline --n 4 --char 0 --max-degree 2 --format json");
    REQUIRE(r.code == 0);
    auto j = binform::Json::parse(r.out);
    REQUIRE(j.contains("generators"));
    for (const auto& entry : j["generators"]) {
        binform::Covariant c = binform::covariant_from_json(entry["covariant"]);
        binform::Json back = binform::covariant_to_json(c);
        CHECK(back == entry["covariant"]);
    }

    RunResult empty = run_cli("pipeline --n 4 --char 3 --max-degree 0 --format json");
    CHECK(empty.code == 0);
    CHECK(binform::Json::parse(empty.out)["generators"].empty());
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("pipeline --n 4 --max-degree 3 --char 4").code == 2);
    CHECK(run_cli("verify --in /nonexistent.json").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
}
