#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mckay/cli.hpp"

using namespace mckay;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("mckay");
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return CliRun{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("format_ratio rounds half away from zero") {
    CHECK(format_ratio(4, 10, 5) == "0.40000");
    CHECK(format_ratio(140, 10000, 5) == "0.01400");
    CHECK(format_ratio(364, 1000, 4) == "0.3640");
    CHECK(format_ratio(1, 3, 4) == "0.3333");
    CHECK(format_ratio(2, 3, 4) == "0.6667");
    CHECK(format_ratio(1, 8, 2) == "0.13");  // 0.125 rounds away from zero
    CHECK(format_ratio(1, 8, 3) == "0.125");
    CHECK(format_ratio(25, 10, 1) == "2.5");
    CHECK(format_ratio(0, 7, 3) == "0.000");
}

TEST_CASE("compute single value") {
    CliRun r = run({"compute", "--ell", "7", "--a", "0", "--n", "0"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0 1\n");
}

TEST_CASE("compute the paper scalar") {
    CliRun r = run({"compute", "--ell", "5", "--a", "14", "--n", "99"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "99 5594200\n");
}

TEST_CASE("compute a range") {
    CliRun r = run({"compute", "--ell", "2", "--a", "1", "--range", "0..10"});
    CHECK(r.exit_code == 0);
    // support of p_2(1;.) in 0..10: n with n-2 in {0,1,3,6} -> 2,3,5,8
    CHECK(r.out ==
          "0 0\n1 0\n2 2\n3 2\n4 0\n5 2\n6 0\n7 0\n8 2\n9 0\n10 0\n");
}

TEST_CASE("compute rejects bad input") {
    CHECK(run({"compute", "--ell", "4", "--n", "3"}).exit_code == 2);
    CHECK(run({"compute", "--ell", "5"}).exit_code == 2);
    CHECK(run({"compute", "--ell", "5", "--range", "9..3"}).exit_code == 2);
    CHECK(run({"compute", "--ell", "5", "--n", "3", "--format", "yaml"}).exit_code == 2);
}

TEST_CASE("compute csv and json forms") {
    CliRun csv = run({"compute", "--ell", "5", "--a", "1", "--range", "4..6",
                      "--format", "csv"});
    CHECK(csv.exit_code == 0);
    // p_5(1;n) = 5 p_5(0;n-5)
    CHECK(csv.out == "n,value\n4,0\n5,5\n6,5\n");

    CliRun js = run({"compute", "--ell", "5", "--a", "1", "--range", "4..6",
                     "--format", "json"});
    CHECK(js.exit_code == 0);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["command"] == "compute");
    CHECK(doc["params"]["ell"] == 5);
    CHECK(doc["rows"].size() == 3);
    CHECK(doc["rows"][1][1] == "5");
    // round trip: parsing the emitted bytes reproduces the document
    CHECK(nlohmann::json::parse(doc.dump(2)) == doc);
}

TEST_CASE("deterministic bytes for identical configs") {
    const std::vector<std::string> cmd = {"table", "gamma", "--ell", "3",
                                          "--a", "0", "--xmax", "100"};
    CliRun first = run(cmd);
    CliRun second = run(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("table gamma emits the published rows") {
    CliRun r = run({"table", "gamma", "--ell", "2", "--a", "0", "--xmax", "10"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "X,count,ratio\n10,4,0.40000\n");

    CliRun r3 = run({"table", "gamma", "--ell", "3", "--a", "0", "--xmax", "1e2"});
    CHECK(r3.exit_code == 0);
    CHECK(r3.out == "X,count,ratio\n10,8,0.80000\n100,57,0.57000\n");
}

TEST_CASE("table delta emits the published rows") {
    CliRun r = run({"table", "delta", "--ell", "5", "--a", "0", "--m", "3",
                    "--xmax", "1000"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "X,count,ratio\n10,7,0.7000\n100,47,0.4700\n1000,364,0.3640\n");
}

TEST_CASE("table json round-trips") {
    CliRun r = run({"table", "delta", "--ell", "5", "--a", "0", "--m", "2",
                    "--xmax", "100", "--format", "json"});
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "table");
    CHECK(doc["params"]["kind"] == "delta");
    CHECK(doc["rows"].size() == 2);
    CHECK(nlohmann::json::parse(doc.dump()) == doc);
}

TEST_CASE("table rejects small or malformed windows") {
    CHECK(run({"table", "gamma", "--ell", "2", "--a", "0", "--xmax", "5"}).exit_code == 2);
    CHECK(run({"table", "gamma", "--ell", "9", "--a", "0", "--xmax", "100"}).exit_code == 2);
}

TEST_CASE("verify thm16 worked example") {
    CliRun r = run({"verify", "thm16", "--part", "1", "--ell", "11", "--a", "3",
                    "--m", "2", "--trunc", "2000"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("pass") != std::string::npos);
    CHECK(r.out.find("121n+28") != std::string::npos);
}

TEST_CASE("verify thm16 rejects out-of-range parameters") {
    CliRun r = run({"verify", "thm16", "--part", "3", "--ell", "5", "--a", "6"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("ell+1 < a") != std::string::npos);
}

TEST_CASE("verify reports truncation insufficiency as an operational error") {
    CliRun r = run({"verify", "thm16", "--part", "1", "--ell", "11", "--a", "3",
                    "--m", "2", "--trunc", "27"});
    CHECK(r.exit_code == 2);
    CliRun r2 = run({"verify", "thm16", "--part", "1", "--ell", "5", "--a", "1",
                     "--m", "1", "--trunc", "100", "--nmax", "50"});
    CHECK(r2.exit_code == 2);
}

TEST_CASE("verify ramanujan and lcore families") {
    CliRun r = run({"verify", "ramanujan", "--ell", "5", "--trunc", "600"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("5n+4") != std::string::npos);

    CliRun gks = run({"verify", "lcore_gks", "--ell", "7", "--m", "2",
                      "--trunc", "2000"});
    CHECK(gks.exit_code == 0);

    CliRun aw = run({"verify", "atkin_watson", "--p", "7", "--m", "2",
                     "--trunc", "800", "--format", "json"});
    CHECK(aw.exit_code == 0);
    const auto doc = nlohmann::json::parse(aw.out);
    CHECK(doc["verdict"] == "pass");
    CHECK(doc["params"]["modulus"] == "49");
    CHECK(doc["violations"].empty());
}

TEST_CASE("verify oracle") {
    CliRun r = run({"verify", "oracle", "--ell", "3", "--nmax", "12"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("pass") != std::string::npos);
    CHECK(run({"verify", "oracle", "--ell", "3", "--nmax", "99"}).exit_code == 2);
}

TEST_CASE("verify cor23") {
    CliRun r = run({"verify", "cor23", "--ell", "5", "--jmax", "2",
                    "--nlimit", "30"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("verify modularity prints the weight and cusp orders") {
    CliRun r = run({"verify", "modularity", "--ell", "5", "--terms", "300"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("weight 2, cusp orders [0, 1], pass") != std::string::npos);

    CliRun js = run({"verify", "modularity", "--ell", "7", "--terms", "300",
                     "--format", "json"});
    CHECK(js.exit_code == 0);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["weight"] == "3");
    CHECK(doc["verdict"] == "pass");
    CHECK(nlohmann::json::parse(doc.dump()) == doc);
}

TEST_CASE("verify counterexample") {
    CliRun r = run({"verify", "counterexample"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("5594200") != std::string::npos);
    CHECK(r.out.find("75") != std::string::npos);
}

TEST_CASE("meta is opt-in") {
    CliRun bare = run({"table", "gamma", "--ell", "2", "--a", "0", "--xmax", "10"});
    CHECK(bare.out.find("#") == std::string::npos);
    CliRun with_meta = run({"table", "gamma", "--ell", "2", "--a", "0",
                            "--xmax", "10", "--meta"});
    CHECK(with_meta.out.find("# mckay") != std::string::npos);
}
