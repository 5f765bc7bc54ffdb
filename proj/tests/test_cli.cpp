#include <doctest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using farey::cli::run;

namespace {

std::string golden(const std::string& name) {
    std::ifstream in(std::string(FAREY_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("pinned command examples") {
    auto r1 = run({"form", "class-number", "12"});
    CHECK(r1.status == 0);
    CHECK(r1.out == "2\n");

    auto r2 = run({"word", "classify", "LSLLS"});
    CHECK(r2.status == 0);
    CHECK(r2.out == "hyperbolic trace=3\n");

    auto r3 = run({"form", "of-word", "LSLLS"});
    CHECK(r3.status == 0);
    CHECK(r3.out == "(1,-1,-1) disc=5\n");
}

TEST_CASE("every command family answers") {
    CHECK(run({"word", "matrix", "LSLLS"}).out == "2,1;1,1\n");
    CHECK(run({"word", "normal", "LSSL"}).out == "LL\n");
    CHECK(run({"graph", "passport", "congruence", "gamma0", "2"}).out ==
          "edges=3 genus=0 punctures=2 circ=[1,2] bullet=[3] faces=[1,2] monodromy=6\n");
    CHECK(run({"cark", "of-word", "LSLLS"}).out == "PM\n");
    CHECK(run({"cark", "of-form", "1,-1,-1"}).out == "PM\n");
    CHECK(run({"cark", "reciprocal", "PPM"}).out == "false\n");
    CHECK(run({"form", "reduce", "1,5,5"}).status == 0);
    CHECK(run({"form", "cycle", "1,1,-1"}).out == "(-1,1,1) (1,1,-1)\n");
    CHECK(run({"form", "compose", "-1,2,2", "-1,2,2"}).out == "(1,2,-2)\n");
    CHECK(run({"form", "pell", "8"}).out == "t=6 u=2\n");
    CHECK(run({"form", "minimum", "-1,2,2"}).out == "2\n");
    CHECK(run({"form", "represents", "1,-1,-1", "2"}).out == "absent\n");
    CHECK(run({"form", "to-word", "1,1,-1"}).out == "LLSLS\n");
}

TEST_CASE("exit codes: usage = 1, domain = 2") {
    CHECK(run({"word", "classify"}).status == 1);        // missing argument
    CHECK(run({"nonsense"}).status == 1);                // unknown subcommand
    CHECK(run({"word", "classify", "LSX"}).status == 1); // bad token
    CHECK(run({"form", "class-number", "7"}).status == 2);
    CHECK(run({"form", "class-number", "16"}).status == 2);
    CHECK(run({"cark", "of-word", "LS"}).status == 2);
    CHECK(run({"form", "class-number", "100000019"}).status == 2); // over --limit
    CHECK(run({"graph", "passport", "fold", "LSLLS"}).status == 2); // stubs
}

TEST_CASE("json mode carries versioned payloads and error codes") {
    auto ok = run({"--json", "form", "class-number", "12"});
    CHECK(ok.status == 0);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(j["schemaVersion"] == 1);
    CHECK(j["classNumber"] == "2");

    auto err = run({"--json", "form", "class-number", "7"});
    CHECK(err.status == 2);
    auto je = nlohmann::json::parse(err.out);
    CHECK(je["error"]["code"] == "BadDiscriminant");

    auto rep = run({"--json", "form", "represents", "1,-1,-1", "5"});
    auto jr = nlohmann::json::parse(rep.out);
    CHECK(jr["represented"] == true);

    auto stub = run({"--json", "graph", "passport", "fold", "S"});
    CHECK(stub.status == 2);
    CHECK(nlohmann::json::parse(stub.out)["error"]["code"] == "HasStubs");
}

TEST_CASE("outputs are byte-identical across runs and match the goldens") {
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
        {{"graph", "dot", "congruence", "gamma0", "2"}, "gamma0_2.dot"},
        {{"graph", "dot", "fold", "LSLLS"}, "cark_lslls.dot"},
        {{"graph", "dot", "farey", "1"}, "farey_1.dot"},
        {{"graph", "fold", "LSLLS"}, "cark_lslls.json"},
        {{"graph", "congruence", "gamma0", "11"}, "gamma0_11.json"},
        {{"cark", "svg", "PM"}, "cark_pm.svg"},
        {{"cark", "svg", "PPM"}, "cark_ppm.svg"},
        {{"cark", "svg", "PPMM"}, "cark_ppmm.svg"},
    };
    for (const auto& [args, file] : cases) {
        auto first = run(args);
        auto second = run(args);
        CHECK(first.status == 0);
        CHECK(first.out == second.out);
        CHECK(first.out == golden(file));
    }
}

TEST_CASE("graph json is accepted back through the json source") {
    auto r = run({"graph", "fold", "LSLLS"});
    REQUIRE(r.status == 0);
    std::string path = "tmp_roundtrip.json";
    {
        std::ofstream out(path);
        out << r.out;
    }
    auto p = run({"graph", "dot", "json", path});
    CHECK(p.status == 0);
    CHECK(p.out == run({"graph", "dot", "fold", "LSLLS"}).out);
    std::remove(path.c_str());
}
