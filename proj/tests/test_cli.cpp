#include "cli_app.hpp"

#include "genusforge/rational.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using genusforge::testing::fixture_path;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = genusforge::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("series command") {
    const RunResult r = run({"series", "--kind", "L", "--order", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "L(z) = 1 + 1/3·z - 1/45·z^2 + 2/945·z^3\n");

    const RunResult json = run({"series", "--kind", "Ahat", "--order", "2", "--json"});
    CHECK(json.code == 0);
    CHECK(json.out.find("\"-1/24\"") != std::string::npos);
    CHECK(json.out.find("\"7/5760\"") != std::string::npos);

    CHECK(run({"series", "--kind", "Todd", "--order", "2"}).code == 1);
    CHECK(run({"series", "--kind", "L", "--order", "-1"}).code == 1);
}

TEST_CASE("genus command") {
    const RunResult r = run({"genus", "--kind", "L", "--degree", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "L_2 = 7/45·p2 - 1/45·p1^2\n");

    const RunResult ahat = run({"genus", "--kind", "Ahat", "--degree", "2"});
    CHECK(ahat.out == "Ahat_2 = -1/1440·p2 + 7/5760·p1^2\n");

    const RunResult json = run({"genus", "--kind", "L", "--degree", "3", "--json"});
    CHECK(json.code == 0);
    CHECK(json.out.find("\"[3]\": \"62/945\"") != std::string::npos);
    CHECK(json.out.find("\"[1,2]\": \"-13/945\"") != std::string::npos);

    CHECK(run({"genus", "--kind", "L", "--degree", "0"}).code == 1);
}

TEST_CASE("signature and ahat commands") {
    CHECK(run({"signature", "--manifold", fixture_path("cp2.json")}).out ==
          "signature(CP2) = 1\n");
    CHECK(run({"signature", "--manifold", fixture_path("hp2.json")}).out ==
          "signature(HP2) = 1\n");
    CHECK(run({"ahat", "--manifold", fixture_path("k3.json")}).out == "Ahat(K3) = 2\n");
    CHECK(run({"ahat", "--manifold", fixture_path("hp2.json")}).out == "Ahat(HP2) = 0\n");

    const RunResult json = run({"signature", "--manifold", fixture_path("k3.json"), "--json"});
    CHECK(json.out.find("\"signature\": \"-16\"") != std::string::npos);

    CHECK(run({"signature", "--manifold", "/nonexistent/m.json"}).code == 3);
}

TEST_CASE("construct command") {
    const RunResult r =
        run({"construct", "--manifold", fixture_path("hp2.json"), "--k", "4", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"A\": \"49/1860\"") != std::string::npos);
    CHECK(r.out.find("\"sigma\": \"0\"") != std::string::npos);
    CHECK(r.out.find("\"[1,2]\": \"-24\"") != std::string::npos);
    CHECK(r.out.find("\"[3]\": \"-156/31\"") != std::string::npos);
    CHECK(r.out.find("\"ahat_E\": \"-1/992\"") != std::string::npos);

    // byte-identical on identical input
    const RunResult again =
        run({"construct", "--manifold", fixture_path("hp2.json"), "--k", "4", "--json"});
    CHECK(r.out == again.out);

    const RunResult pretty = run({"construct", "--manifold", fixture_path("hp2.json"), "--k", "4"});
    CHECK(pretty.out.find("A = 49/1860 (solved)") != std::string::npos);
    CHECK(pretty.out.find("p1·p2 = -24") != std::string::npos);

    const RunResult parity =
        run({"construct", "--manifold", fixture_path("hp2.json"), "--k", "3"});
    CHECK(parity.code == 2);
    CHECK(parity.err.find("not divisible by 4") != std::string::npos);

    const RunResult overridden = run(
        {"construct", "--manifold", fixture_path("hp2.json"), "--k", "4", "--A", "0", "--json"});
    CHECK(overridden.code == 0);
    CHECK(overridden.out.find("\"sigma\": \"-56/45\"") != std::string::npos);

    CHECK(run({"construct", "--manifold", fixture_path("hp2.json"), "--k", "4", "--lambda", "0"})
              .code == 1);
}

TEST_CASE("gate command") {
    const RunResult morlet = run(
        {"gate", "--manifold", fixture_path("hp2.json"), "--k", "4", "--conn", "3", "--json"});
    CHECK(morlet.code == 0);
    CHECK(morlet.out.find("\"via\": \"morlet\"") != std::string::npos);
    CHECK(morlet.out.find("\"overall\": true") != std::string::npos);

    const RunResult no_conn =
        run({"gate", "--manifold", fixture_path("hp2.json"), "--k", "4", "--json"});
    CHECK(no_conn.out.find("\"overall\": false") != std::string::npos);
}

TEST_CASE("bounds command") {
    const RunResult r = run({"bounds", "--d", "11"});
    CHECK(r.code == 0);
    CHECK(r.out.find("max k = 3") != std::string::npos);

    const RunResult morlet = run({"bounds", "--d", "8", "--conn", "3", "--json"});
    CHECK(morlet.out.find("\"bl_max_k\": 1") != std::string::npos);
    CHECK(morlet.out.find("\"morlet_max_k\": 4") != std::string::npos);

    CHECK(run({"bounds", "--d", "11", "--conn", "3"}).code == 2);
}

TEST_CASE("tables command") {
    const RunResult l = run({"tables", "--which", "l-group", "--range", "-8..16", "--json"});
    CHECK(l.code == 0);
    CHECK(l.out.find("\"12\": \"Z\"") != std::string::npos);
    CHECK(l.out.find("\"6\": \"Z/2\"") != std::string::npos);
    CHECK(l.out.find("\"7\": \"0\"") != std::string::npos);
    CHECK(l.out.find("\"-8\": \"Z\"") != std::string::npos);

    const RunResult ko = run({"tables", "--which", "ko-group", "--range", "0..16"});
    CHECK(ko.code == 0);
    CHECK(ko.out.find("KO^-4 = Z\n") != std::string::npos);
    CHECK(ko.out.find("KO^-9 = Z/2\n") != std::string::npos);
    CHECK(ko.out.find("KO^-3 = 0\n") != std::string::npos);

    CHECK(run({"tables", "--which", "ko-group", "--range", "-2..4"}).code == 2);
    CHECK(run({"tables", "--which", "nope", "--range", "0..4"}).code == 1);
    CHECK(run({"tables", "--which", "l-group", "--range", "5"}).code == 1);
    CHECK(run({"tables", "--which", "l-group", "--range", "9..2"}).code == 1);
}

TEST_CASE("sphere-product command chains into construct") {
    const std::string out_path = temp_file("genusforge_k3s4.json").string();
    const RunResult made = run(
        {"sphere-product", "--manifold", fixture_path("k3.json"), "--n", "4", "--out", out_path});
    CHECK(made.code == 0);
    CHECK(made.out.find("K3xS4") != std::string::npos);

    const RunResult constructed = run({"construct", "--manifold", out_path, "--k", "4", "--json"});
    CHECK(constructed.code == 0);
    CHECK(constructed.out.find("\"sigma\": \"0\"") != std::string::npos);
    CHECK(constructed.out.find("\"ahat_E\": \"-1/992\"") != std::string::npos);

    const RunResult unwritable = run({"sphere-product", "--manifold", fixture_path("k3.json"),
                                      "--n", "4", "--out", "/nonexistent/dir/out.json"});
    CHECK(unwritable.code == 3);

    std::filesystem::remove(out_path);
}

TEST_CASE("malformed descriptor exits 1") {
    const std::string bad_path = temp_file("genusforge_bad.json").string();
    std::ofstream(bad_path) << "{\"name\": \"x\"}";
    const RunResult r = run({"signature", "--manifold", bad_path});
    CHECK(r.code == 1);
    CHECK(r.err.find("missing field") != std::string::npos);
    std::filesystem::remove(bad_path);
}

TEST_CASE("unknown command exits 1") {
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"construct"}).code == 1); // missing required options
}
