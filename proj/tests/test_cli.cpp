#include "regen/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace regen;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kDesigns = std::string(REGEN_DATA_DIR) + "/designs/";

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("regen_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

const std::vector<std::string> kS348Encode = {"encode", "--n", "8", "--k", "6", "--d", "6", "--e", "2", "--m", "2",
                                            "--r", "4", "--t", "3", "--design", kDesigns + "s348.design"};

std::vector<std::string> with(std::vector<std::string> base, const std::vector<std::string>& extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
}

}  // namespace

TEST_CASE("design statistics") {
    Run r = cli({"design", "--n", "8", "--r", "4", "--t", "3", "--load", kDesigns + "s348.design"});
    REQUIRE(r.code == kExitOk);
    json j = json::parse(r.out);
    CHECK(j["steiner"] == true);
    CHECK(j["N"] == 14);
    CHECK(j["alpha"] == 7);
    r = cli({"design", "--n", "7", "--r", "3", "--t", "2", "--load", kDesigns + "fano.design"});
    CHECK(r.code == kExitOk);
    CHECK(json::parse(r.out)["steiner"] == true);
    r = cli({"design", "--n", "5", "--r", "4", "--blocks"});
    REQUIRE(r.code == kExitOk);
    j = json::parse(r.out);
    CHECK(j["N"] == 5);
    CHECK(j["blocks"].size() == 5);
    CHECK(cli({"design", "--n", "3", "--r", "5"}).code == kExitInvalid);
}

TEST_CASE("encode, repair and reconstruct the S(3,4,8) code") {
    const fs::path dir = scratch("s348");
    REQUIRE(cli(with(kS348Encode, {"--out", dir.string(), "--seed", "3"})).code == kExitOk);
    for (int x = 1; x <= 8; ++x) {
        CHECK(fs::exists(dir / ("node_" + std::to_string(x) + ".txt")));
    }
    CHECK(json::parse(slurp(dir / "manifest.json"))["artifact_version"] == kArtifactVersion);

    const fs::path fixed = dir / "repaired";
    Run r = cli({"repair", "--dir", dir.string(), "--failed", "1,2", "--helpers", "3,4,5,6,7,8", "--out",
                 fixed.string()});
    REQUIRE(r.code == kExitOk);
    json j = json::parse(r.out);
    CHECK(j["total"]["num"] == 18);
    CHECK(j["total"]["den"] == 1);
    for (const auto& [node, v] : j["per_helper"].items()) {
        CHECK(v["num"] == 3);
        CHECK(v["den"] == 1);
    }
    CHECK(j["reports"]["naive"]["total"]["num"] == 22);
    CHECK(slurp(fixed / "node_1.txt") == slurp(dir / "node_1.txt"));
    CHECK(slurp(fixed / "node_2.txt") == slurp(dir / "node_2.txt"));

    r = cli({"reconstruct", "--dir", dir.string(), "--nodes", "3,4,5,6,7,8"});
    REQUIRE(r.code == kExitOk);
    CHECK(json::parse(r.out)["matches_data"] == true);

    CHECK(cli({"repair", "--dir", dir.string(), "--failed", "1,2", "--helpers", "2,3,4,5,6,7"}).code == kExitInvalid);
    CHECK(cli({"repair", "--dir", dir.string(), "--failed", "1,2,3", "--helpers", "4,5,6,7,8"}).code ==
          kExitInvalid);
    CHECK(cli({"reconstruct", "--dir", dir.string(), "--nodes", "1,2,3"}).code == kExitInvalid);
    CHECK(cli({"reconstruct", "--dir", (dir / "missing").string(), "--nodes", "1,2,3,4,5,6"}).code == kExitInvalid);
}

TEST_CASE("precoded encode round trip") {
    const fs::path dir = scratch("precoded");
    REQUIRE(cli({"encode", "--n", "6", "--k", "4", "--d", "5", "--e", "1", "--m", "1", "--r", "3", "--precoded",
                 "--out", dir.string()})
                .code == kExitOk);
    Run r = cli({"reconstruct", "--dir", dir.string(), "--nodes", "2,4,5,6"});
    REQUIRE(r.code == kExitOk);
    CHECK(json::parse(r.out)["matches_data"] == true);
    const fs::path fixed = dir / "repaired";
    r = cli({"repair", "--dir", dir.string(), "--failed", "3", "--helpers", "1,2,4,5,6", "--out", fixed.string()});
    REQUIRE(r.code == kExitOk);
    CHECK(slurp(fixed / "node_3.txt") == slurp(dir / "node_3.txt"));
}

TEST_CASE("extend twice") {
    const fs::path dir = scratch("extend");
    REQUIRE(cli({"encode", "--n", "4", "--k", "3", "--d", "3", "--e", "1", "--r", "3", "--out", (dir / "a").string()})
                .code == kExitOk);
    Run r = cli({"extend", "--dir", (dir / "a").string(), "--out", (dir / "b").string()});
    REQUIRE(r.code == kExitOk);
    json j = json::parse(r.out);
    CHECK(j["delta"]["F"] == 2);
    CHECK(j["delta"]["alpha"] == 1);
    CHECK(j["delta"]["beta"] == 1);
    CHECK(j["new_block"] == json::array({1, 2, 3, 4}));
    r = cli({"extend", "--dir", (dir / "b").string(), "--out", (dir / "c").string()});
    REQUIRE(r.code == kExitOk);
    j = json::parse(r.out);
    CHECK(j["new"]["n"] == 6);
    CHECK(j["new"]["e"] == 3);
    r = cli({"reconstruct", "--dir", (dir / "c").string(), "--nodes", "2,4,6"});
    REQUIRE(r.code == kExitOk);

    const fs::path ex1 = scratch("extend_s348");
    REQUIRE(cli(with(kS348Encode, {"--out", ex1.string()})).code == kExitOk);
    CHECK(cli({"extend", "--dir", ex1.string(), "--out", (ex1 / "x").string()}).code == kExitInvalid);
}

TEST_CASE("region csv lists the corners") {
    Run r = cli({"region", "--k", "14", "--e", "3"});
    REQUIRE(r.code == kExitOk);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("label,", 0) == 0);
    int corners = 0;
    while (std::getline(in, line)) {
        corners += line.back() == '1' ? 1 : 0;
    }
    CHECK(corners == 10);
    r = cli({"region", "--k", "14", "--e", "3", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    CHECK(cli({"region", "--k", "3", "--e", "3"}).code == kExitInvalid);
    CHECK(cli({"region", "--k", "14", "--e", "3", "--format", "xml"}).code == kExitInvalid);
}

TEST_CASE("identical commands give identical bytes") {
    const fs::path a = scratch("det_a");
    const fs::path b = scratch("det_b");
    REQUIRE(cli(with(kS348Encode, {"--out", a.string(), "--seed", "11"})).code == kExitOk);
    REQUIRE(cli(with(kS348Encode, {"--out", b.string(), "--seed", "11"})).code == kExitOk);
    for (int x = 1; x <= 8; ++x) {
        const std::string name = "node_" + std::to_string(x) + ".txt";
        CHECK(slurp(a / name) == slurp(b / name));
    }
    CHECK(slurp(a / "data.bin") == slurp(b / "data.bin"));
    CHECK(cli({"points", "--n", "10", "--k", "7", "--d", "8", "--e", "1"}).out ==
          cli({"points", "--n", "10", "--k", "7", "--d", "8", "--e", "1"}).out);
}

TEST_CASE("output directory override") {
    const fs::path root = scratch("override");
    ::setenv("REGEN_OUTPUT_DIR", root.c_str(), 1);
    const int code = cli({"encode", "--n", "5", "--k", "3", "--d", "3", "--e", "1", "--r", "3", "--out", "nodes"}).code;
    const Run rec = cli({"reconstruct", "--dir", "nodes", "--nodes", "1,2,3"});
    ::unsetenv("REGEN_OUTPUT_DIR");
    REQUIRE(code == kExitOk);
    CHECK(fs::exists(root / "nodes" / "node_5.txt"));
    REQUIRE(rec.code == kExitOk);
    CHECK(json::parse(rec.out)["matches_data"] == true);
}

TEST_CASE("usage errors") {
    CHECK(cli({}).code == kExitInvalid);
    CHECK(cli({"bogus"}).code == kExitInvalid);
    CHECK(cli({"encode", "--n", "5"}).code == kExitInvalid);
    CHECK(cli({"--help"}).code == kExitOk);
    CHECK(cli({"verify", "--quick"}).code == kExitOk);
}
