#include "ccshell/cli.hpp"

#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ccs;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("homology")
{
    auto r = run({"homology", "ex_6_1_4.ccx"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "H_2 = 0"));
    CHECK(has(r.out, "H_1 = Z"));
    CHECK(has(r.out, "H_0 = Z"));

    r = run({"homology", "ex_6_1_1", "--ring", "Q"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "H_0 = 0"));
}

TEST_CASE("regular verify reports the natural order violation")
{
    auto r = run({"regular", "verify", "ex_6_1_2.ccx", "--order", "natural"});
    CHECK(r.code == 1);
    CHECK(has(r.out, "condition-1"));
    CHECK(has(r.out, "e2_2"));

    r = run({"regular", "verify", "ex_6_1_2.ccx", "--order", "natural", "--format", "json"});
    CHECK(r.code == 1);
    auto j = Json::parse(r.out);
    CHECK(j.dump().find("condition-1") != std::string::npos);
}

TEST_CASE("cone search")
{
    auto r = run({"cone", "search", "ex_4_5.ccx"});
    CHECK(r.code == 1);
    CHECK(has(r.out, "no cone assignment exists"));
    CHECK(run({"cone", "search", "ex_4_4.ccx"}).code == 0);
}

TEST_CASE("input errors exit with 2")
{
    CHECK(run({"homology", "/nonexistent/file.ccx"}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);

    const auto path = std::filesystem::temp_directory_path() / "ccshell_bad.ccx";
    {
        std::ofstream f(path);
        f << "{\"format_version\": \"1.0\", \"ring\": \"Z\", \"degrees\": [{\"degree\": 0, \"basis\": [\"a\"]}],\n"
             " \"boundary\": [{\"degree\": 1, \"from\": \"a\", \"entries\": [[\"a\", \"x\"]]}]}\n";
    }
    auto r = run({"validate", path.string()});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    std::filesystem::remove(path);
}

TEST_CASE("budget exhaustion exits with 2")
{
    auto r = run({"shelling", "search", "ex_4_4", "--budget", "1"});
    CHECK(r.code == 2);
}

TEST_CASE("certificates round trip through the command line")
{
    const auto path = std::filesystem::temp_directory_path() / "ccshell_cert.json";
    auto r = run({"shelling", "search", "ex_4_4", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    REQUIRE(j.contains("certificate"));
    {
        std::ofstream f(path);
        f << j["certificate"].dump();
    }
    CHECK(run({"shelling", "verify", "ex_4_4", "--cert", path.string()}).code == 0);
    std::filesystem::remove(path);

    CHECK(run({"shelling", "search", "ex_4_5"}).code == 0);
    CHECK(run({"totally-regular", "ex_6_1_6"}).code == 0);
    CHECK(run({"totally-regular", "ex_6_1_2"}).code == 1);
}

TEST_CASE("examples and fuzzing")
{
    auto r = run({"examples"});
    CHECK(r.code == 0);
    r = run({"dev", "fuzz", "--count", "30"});
    CHECK(r.code == 0);
}

TEST_CASE("from-simplicial writes a valid document")
{
    auto r = run({"from-simplicial", "--facets", "1 2 3; 2 3 4"});
    REQUIRE(r.code == 0);
    auto c = to_complex(parse_document(r.out));
    CHECK(c.rank(2) == 2);
    CHECK(c.rank(1) == 5);
}
