#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "prefixcomp/cli.hpp"

using namespace prefixcomp;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json out_json(const CliRun& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("huffman and shannon-fano emit profiles") {
    CliRun h = run({"huffman", "--source", R"(["1/3","1/3","1/6","1/6"])"});
    REQUIRE(h.code == 0);
    CHECK(h.out == R"({"expected_length":"2","profile":[2,2,2,2]})"
                   "\n");

    CliRun sf = run({"shannon-fano", "--source", R"(["1/3","1/3","1/6","1/6"])"});
    REQUIRE(sf.code == 0);
    CHECK(out_json(sf)["profile"] == json::array({2, 2, 3, 3}));
}

TEST_CASE("check verdicts") {
    CliRun ok = run({"check", "--source", R"(["1/3","1/3","1/6","1/6"])", "--profile",
                     "2,2,2,2", "--method", "subset"});
    REQUIRE(ok.code == 0);
    CHECK(out_json(ok)["status"] == "optimal");

    CliRun bad = run({"check", "--source", R"(["1/3","1/3","1/6","1/6"])", "--profile",
                      "1,2,3,3", "--method", "subset"});
    json j = out_json(bad);
    CHECK(j["status"] == "not-optimal");
    CHECK(j["certificate"]["kind"] == "subset-pair");
    CHECK(j["certificate"]["u"] == json::array({1, 2}));
    CHECK(j["certificate"]["v"] == json::array({0}));

    CliRun leaf = run({"check", "--source", R"(["2/5","3/10","1/5","1/10"])", "--profile",
                       "1,2,3,3", "--method", "leaf"});
    CHECK(out_json(leaf)["certificate"]["kind"] == "leaf-triple");

    CliRun small = run({"check", "--source", R"(["1/2","1/3","1/6"])", "--profile",
                        "1,2,2", "--method", "small-n"});
    CHECK(out_json(small)["status"] == "optimal");
}

TEST_CASE("family output feeds compete") {
    CliRun fam = run({"family", "--name", "one-third", "--n", "4", "--eps", "1/30"});
    REQUIRE(fam.code == 0);
    json j = out_json(fam);
    CHECK(j["predicted_advantage"] == "7/30");

    std::string source = j["source"].dump();
    std::string ref, chal;
    for (const auto& l : j["reference_profile"]) ref += (ref.empty() ? "" : ",") + l.dump();
    for (const auto& l : j["challenger_profile"])
        chal += (chal.empty() ? "" : ",") + l.dump();
    CliRun comp = run({"compete", "--source", source, "--profile-a", chal, "--profile-b",
                       ref});
    REQUIRE(comp.code == 0);
    CHECK(out_json(comp)["advantage"] == "7/30");
    CHECK(out_json(comp)["dominance"] == "strict");
}

TEST_CASE("exists-optimal") {
    CliRun yes = run({"exists-optimal", "--source", R"(["1/3","1/3","1/6","1/6"])"});
    CHECK(out_json(yes)["exists"] == true);
    CHECK(out_json(yes)["witness"] == json::array({2, 2, 2, 2}));
    CliRun no = run({"exists-optimal", "--source", R"(["11/30","10/30","8/30","1/30"])"});
    CHECK(out_json(no)["exists"] == false);
}

TEST_CASE("fixtures") {
    CliRun two = run({"fixture", "--name", "two-huffman"});
    CHECK(out_json(two)["source"] == json::array({"1/3", "1/3", "1/6", "1/6"}));
    CliRun four = run({"fixture", "--name", "four-codes"});
    json j = out_json(four);
    CHECK(j["h1"] == json::array({1, 2, 3, 4, 5, 5}));
    CHECK(j["labels"][5] == "f");
}

TEST_CASE("kraft tools") {
    CliRun part = run({"partition", "--profile", "1,2,3,3", "--set", "1,2"});
    json j = out_json(part);
    CHECK(j["kraft_sum"] == "3/8");
    CHECK(j["parts"].size() == 2);

    CliRun comp = run({"partition", "--profile", "1,2,3,3", "--set", "2", "--complete-to",
                       "2"});
    CHECK(out_json(comp)["b"] == json::array({3}));
    CHECK(out_json(comp)["kraft_sum"] == "1/4");

    CliRun dom = run({"dominate", "--profile", "1,2,3,3", "--u", "1,2", "--v", "0"});
    CHECK(out_json(dom)["profile"] == json::array({3, 1, 2, 3}));
}

TEST_CASE("simulate prints the pinned csv") {
    CliRun sim = run({"simulate", "--n-min", "3", "--n-max", "3", "--samples", "1000",
                      "--seed", "7", "--method", "leaf"});
    REQUIRE(sim.code == 0);
    CHECK(sim.out ==
          "n,samples,flagged,fraction,method,seed\n3,1000,0,0.000000,leaf,7\n");
}

TEST_CASE("enumerate") {
    CliRun e = run({"enumerate", "--n", "4"});
    CHECK(out_json(e).size() == 13);
    CliRun e2 = run({"enumerate", "--n", "2"});
    CHECK(out_json(e2) == json::array({json::array({1, 1})}));
}

TEST_CASE("float mode") {
    CliRun h = run({"huffman", "--source", "[0.5,0.25,0.25]", "--float"});
    REQUIRE(h.code == 0);
    CHECK(out_json(h)["profile"] == json::array({1, 2, 2}));
    CHECK(out_json(h)["expected_length"] == doctest::Approx(1.5));
}

TEST_CASE("exit codes") {
    CliRun usage = run({"no-such-command"});
    CHECK(usage.code == 2);
    CHECK(!usage.err.empty());

    CliRun missing = run({"huffman"});
    CHECK(missing.code == 2);

    CliRun domain = run({"huffman", "--source", R"(["1/2","1/4"])"});  // sums to 3/4
    CHECK(domain.code == 1);
    CHECK(domain.err.find("BadTotal") != std::string::npos);

    CliRun guard = run({"check", "--source", R"(["1/2","1/4","1/8","1/8"])", "--profile",
                        "2,2,2,2", "--method", "subset"});
    CHECK(guard.code == 1);
    CHECK(guard.err.find("NotOptimalProfile") != std::string::npos);

    CliRun help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("huffman") != std::string::npos);
}
