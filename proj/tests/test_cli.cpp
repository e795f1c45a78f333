#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "pgd/core.hpp"
#include "pgd/engine.hpp"
#include "pgd/generate.hpp"
#include "pgd/io.hpp"
#include "pgd/oracle.hpp"

using namespace pgd;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("pgd_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path file(const std::string& name) const { return path / name; }
};

int run_cli(const std::string& args) {
    std::string cmd = std::string(PGD_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& content) {
    std::ofstream f(p, std::ios::binary);
    f << content;
}

} // namespace

TEST_CASE("generate writes identical files for identical seeds") {
    TempDir dir;
    auto a = dir.file("a.json"), b = dir.file("b.json");
    CHECK(run_cli("generate --players 3 --pictures 5 --suits 4 --seed 42 --out " + a.string()) == 0);
    CHECK(run_cli("generate --players 3 --pictures 5 --suits 4 --seed 42 --out " + b.string()) == 0);
    std::string text = slurp(a);
    CHECK(text == slurp(b));
    // and matches the library path byte for byte
    CHECK(text == io::serialize_instance(generate_instance(3, 5, 4, 42)));
}

TEST_CASE("generate rejects infeasible sizes with exit 1") {
    CHECK(run_cli("generate --players 5 --pictures 3 --suits 4 --seed 1") == 1);
}

TEST_CASE("run plays one step and writes trace and extracted instance") {
    TempDir dir;
    Instance inst = pgdtest::walkthrough_two_player();
    auto in = dir.file("inst.json"), out = dir.file("next.json"), tr = dir.file("trace.jsonl");
    spit(in, io::serialize_instance(inst));

    CHECK(run_cli("run --in " + in.string() + " --out " + out.string() + " --trace " +
                  tr.string()) == 0);

    auto traces = io::parse_traces(slurp(tr), inst);
    REQUIRE(traces.size() == 1);
    CHECK(traces[0].rounds.size() == 4);

    Instance next = validate_instance(io::parse_instance(slurp(out)));
    CHECK(next.n_suits() == 3);
    CHECK(next.players == inst.players);
    CHECK(next.pictures == inst.pictures);

    // replaying the written trace over the written instance reproduces the
    // written extraction, byte for byte
    TableState replayed = pgd::oracle::replay_trace(inst, traces[0]);
    Instance expected{inst.players, inst.pictures, extract(replayed)};
    CHECK(io::serialize_instance(expected) == slurp(out));
}

TEST_CASE("run honors a strangling round cap with exit 3") {
    TempDir dir;
    auto in = dir.file("inst.json");
    spit(in, io::serialize_instance(pgdtest::walkthrough_two_player()));
    CHECK(run_cli("run --in " + in.string() + " --max-round-pairs 1") == 3);
}

TEST_CASE("malformed input exits 2") {
    TempDir dir;
    auto in = dir.file("broken.json");
    spit(in, "{ this is not json");
    CHECK(run_cli("run --in " + in.string()) == 2);
    CHECK(run_cli("run --in " + dir.file("missing.json").string()) == 2);
    CHECK(run_cli("frobnicate") == 2);
    CHECK(run_cli("run --no-such-flag") == 2);
}

TEST_CASE("invalid instances exit 1") {
    TempDir dir;
    auto in = dir.file("dup.json");
    // the same card dealt twice
    spit(in, R"({"n_suits": 2, "players": ["p0"], "pictures": ["x"],
                 "deal": {"p0": [["x", 1], ["x", 1]]}})");
    CHECK(run_cli("divide --in " + in.string()) == 1);
}

TEST_CASE("divide and verify round-trip; tampering is caught") {
    TempDir dir;
    auto in = dir.file("inst.json"), result = dir.file("result.json");
    CHECK(run_cli("generate --players 5 --pictures 8 --suits 3 --seed 11 --out " +
                  in.string()) == 0);
    CHECK(run_cli("divide --in " + in.string() + " --out " + result.string()) == 0);
    CHECK(run_cli("verify --in " + in.string() + " --out " + result.string()) == 0);

    // redirect one player's image onto another's: collides, must fail
    auto doc = nlohmann::json::parse(slurp(result));
    REQUIRE(doc.size() == 5);
    doc["p0"] = doc["p1"];
    auto tampered = dir.file("tampered.json");
    spit(tampered, doc.dump(2) + "\n");
    CHECK(run_cli("verify --in " + in.string() + " --out " + tampered.string()) == 1);
}

TEST_CASE("stats runs on files and on fanned-out seeds") {
    TempDir dir;
    auto in = dir.file("inst.json"), out = dir.file("stats.json");
    CHECK(run_cli("generate --players 4 --pictures 6 --suits 4 --seed 9 --out " +
                  in.string()) == 0);
    CHECK(run_cli("stats --in " + in.string() + " --out " + out.string()) == 0);
    auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc["steps"].size() == 3);

    CHECK(run_cli("stats --players 4 --pictures 6 --suits 4 --seed 9 --jobs 3") == 0);
    CHECK(run_cli("stats --players 4 --pictures 6 --jobs 3 --in " + in.string()) == 2);
}
