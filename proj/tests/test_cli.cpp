#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "quboforge/io.hpp"
#include "quboforge/random.hpp"
#include "support/json_schema.hpp"
#include "support/oracles.hpp"
#include "support/process.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

proc::Result cli(const std::string& args) { return proc::run(proc::cli_path() + " " + args); }

json cli_json(const std::string& args) {
    const auto r = cli(args);
    REQUIRE(r.exit_code == 0);
    return json::parse(r.stdout_text);
}

std::string fixture(const std::string& rel) { return proc::data_dir() + "/" + rel; }

json load_schema() {
    const char* dir = std::getenv("QUBOFORGE_SCHEMAS");
    REQUIRE(dir != nullptr);
    std::ifstream in(std::string(dir) + "/cli_output.schema.json");
    REQUIRE(in.good());
    return json::parse(in);
}

void check_schema(const json& output, const std::string& def) {
    static const json schema = load_schema();
    const auto err = json_schema::validate(output, schema["$defs"][def], schema);
    INFO(err);
    CHECK(err.empty());
    // and against the top-level oneOf
    const auto top = json_schema::validate(output, schema, schema);
    INFO(top);
    CHECK(top.empty());
}

std::multiset<std::int64_t> values_of(const json& array) {
    std::multiset<std::int64_t> out;
    for (const auto& v : array) out.insert(v.get<std::int64_t>());
    return out;
}

fs::path temp_path(const std::string& name) {
    return fs::temp_directory_path() / ("quboforge_cli_" + name);
}

}  // namespace

TEST_CASE("partition: perfect split of {1,5,5,11}") {
    const json out = cli_json("partition --values 1,5,5,11 --solver exact");
    check_schema(out, "partition");
    CHECK(out["difference"] == 0);
    CHECK(out["energy"] == 0.0);
    const auto a = values_of(out["set_a"]);
    const auto b = values_of(out["set_b"]);
    const std::multiset<std::int64_t> small{1, 5, 5}, big{11};
    CHECK(((a == small && b == big) || (a == big && b == small)));
}

TEST_CASE("partition: singleton difference is the value itself") {
    const json out = cli_json("partition --values 7 --solver exact");
    CHECK(out["difference"] == 7);
}

TEST_CASE("partition: simulated annealing on {3,1,1}") {
    const json out = cli_json("partition --values 3,1,1 --solver sa --seed 0");
    CHECK(out["difference"] == 1);
}

TEST_CASE("partition: qaoa back end finds the perfect split") {
    const json out = cli_json("partition --values 1,5,5,11 --solver qaoa --p-layers 2 --seed 0");
    check_schema(out, "partition");
    CHECK(out["difference"] == 0);
}

TEST_CASE("maxcut: triangle, edgeless, and the 6-node fixture") {
    const json tri = cli_json("maxcut --graph " + fixture("graphs/triangle.txt"));
    check_schema(tri, "maxcut");
    CHECK(tri["cut_size"] == 2);

    const fs::path edgeless = temp_path("edgeless.txt");
    std::ofstream(edgeless) << "3 0\n";
    const json none = cli_json("maxcut --graph " + edgeless.string());
    CHECK(none["cut_size"] == 0);

    const json six = cli_json("maxcut --graph " + fixture("graphs/maxcut6.txt"));
    CHECK(six["cut_size"] == 7);
    CHECK(six["set_a"] == json::array({2, 4, 5}));
    CHECK(six["bitstring"] == "001011");
}

TEST_CASE("vertex-cover: covers and penalty edge cases") {
    const json path = cli_json("vertex-cover --graph " + fixture("graphs/path3.txt") +
                               " --penalty 2");
    check_schema(path, "vertex_cover");
    CHECK(path["cover"] == json::array({1}));
    CHECK(path["valid"] == true);

    const json tri = cli_json("vertex-cover --graph " + fixture("graphs/triangle.txt"));
    CHECK(tri["size"] == 2);
    CHECK(tri["valid"] == true);

    // a weak penalty may leave edges uncovered; that is surfaced, not fatal
    const auto weak = cli("vertex-cover --graph " + fixture("graphs/triangle.txt") +
                          " --penalty 0.5");
    CHECK(weak.exit_code == 0);
    const json w = json::parse(weak.stdout_text);
    check_schema(w, "vertex_cover");
    CHECK(w["valid"] == false);
    CHECK(!w["uncovered"].empty());
}

TEST_CASE("genomics: single pathway selects all three fixture genes") {
    const json out = cli_json("genomics --mutations " + fixture("genomics/three_patients.tsv") +
                              " --alpha 3 --pathways 1 --solver exact");
    check_schema(out, "genomics");
    CHECK(out["pathways"] == json::array({json::array({"g1", "g2", "g3"})}));
}

TEST_CASE("genomics: two pathways stay disjoint under a large orthogonality weight") {
    const json out = cli_json("genomics --mutations " + fixture("genomics/three_patients.tsv") +
                              " --alpha 1 --alpha-orth 50 --pathways 2 --solver exact");
    check_schema(out, "genomics");
    REQUIRE(out["pathways"].size() == 2);
    std::set<std::string> first, second;
    for (const auto& g : out["pathways"][0]) first.insert(g.get<std::string>());
    for (const auto& g : out["pathways"][1]) second.insert(g.get<std::string>());
    for (const auto& g : first) CHECK(!second.contains(g));
}

TEST_CASE("genomics: empty table is a runtime error, exit 3") {
    const fs::path empty = temp_path("empty.tsv");
    std::ofstream(empty) << "patient\tgene\n";
    CHECK(cli("genomics --mutations " + empty.string()).exit_code == 3);
}

TEST_CASE("order-partition: the shipped fixture balances to zero") {
    const json out = cli_json("order-partition --stocks " + fixture("portfolio/stocks4.csv") +
                              " --risks " + fixture("portfolio/risks4.csv") + " --solver sa");
    check_schema(out, "order_partition");
    CHECK(out["money_gap"] == 0.0);
    CHECK(out["factor_gaps"] == json::array({0.0}));
    CHECK(out["energy"] == 0.0);
}

TEST_CASE("order-partition: b = 0 equals the partition subcommand on q") {
    const json op = cli_json("order-partition --stocks " + fixture("portfolio/stocks4.csv") +
                             " --risks " + fixture("portfolio/risks4.csv") +
                             " --b 0 --solver exact");
    const json np = cli_json("partition --values 3,1,2,2 --solver exact");
    CHECK(op["energy"] == np["energy"]);
    CHECK(op["money_gap"].get<double>() == static_cast<double>(np["difference"].get<int>()));
}

TEST_CASE("order-partition: mismatched csv dimensions exit 2") {
    const fs::path bad = temp_path("bad_risks.csv");
    std::ofstream(bad) << "AAA,BBB,CCC,DDD\n1,1,1\n";
    const auto r = cli("order-partition --stocks " + fixture("portfolio/stocks4.csv") +
                       " --risks " + bad.string());
    CHECK(r.exit_code == 2);
}

TEST_CASE("solve: golden number-partitioning file") {
    const json out = cli_json("solve --qubo " + fixture("qubo/np_1_5_5_11.json") +
                              " --solver exact --top-k 3");
    check_schema(out, "sampleset");
    CHECK(out["samples"][0]["energy"] == 0.0);
    CHECK(out["samples"][0]["bitstring"] == "0001");
}

TEST_CASE("solve: constant-only model") {
    const fs::path f = temp_path("constant.json");
    std::ofstream(f) << R"({"n": 2, "constant": 7.0, "terms": []})";
    const json out = cli_json("solve --qubo " + f.string() + " --solver exact");
    CHECK(out["samples"][0]["energy"] == 7.0);
    CHECK(out["samples"][0]["bitstring"] == "00");
}

TEST_CASE("solve: n=26 annealing run finishes inside the budget") {
    quboforge::Rng rng(131);
    const auto model = oracles::random_integer_model(rng, 26, 5);
    const fs::path f = temp_path("n26.json");
    quboforge::write_qubo(model, f);
    const auto start = std::chrono::steady_clock::now();
    const auto r = cli("solve --qubo " + f.string() + " --solver sa --seed 1");
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    CHECK(r.exit_code == 0);
    CHECK(elapsed.count() < 10.0);
}

TEST_CASE("exit codes: usage errors are 2, capacity errors are 3") {
    CHECK(cli("partition --no-such-flag").exit_code == 2);
    CHECK(cli("no-such-subcommand").exit_code == 2);
    CHECK(cli("partition --values 1,banana").exit_code == 2);
    CHECK(cli("maxcut --graph /nonexistent/file.txt").exit_code == 2);
    CHECK(cli("--help").exit_code == 0);

    // qaoa statevector cap is 20 qubits
    quboforge::Rng rng(137);
    const auto model = oracles::random_integer_model(rng, 22, 3);
    const fs::path f = temp_path("n22.json");
    quboforge::write_qubo(model, f);
    CHECK(cli("solve --qubo " + f.string() + " --solver qaoa").exit_code == 3);
}

TEST_CASE("seeded commands are byte-identical across runs") {
    const std::vector<std::string> commands{
        "partition --values 1,5,5,11 --solver exact",
        "partition --values 9,4,4,1 --solver sa --seed 3",
        "partition --values 1,5,5,11 --solver qaoa --p-layers 2 --seed 5",
        "maxcut --graph " + fixture("graphs/maxcut6.txt") + " --solver sa --seed 7",
        "vertex-cover --graph " + fixture("graphs/triangle.txt") + " --solver sa --seed 1",
        "genomics --mutations " + fixture("genomics/three_patients.tsv") +
            " --alpha 3 --solver sa --seed 2",
        "order-partition --stocks " + fixture("portfolio/stocks4.csv") + " --risks " +
            fixture("portfolio/risks4.csv") + " --solver sa --seed 4",
        "solve --qubo " + fixture("qubo/np_1_5_5_11.json") + " --solver sa --seed 6",
    };
    for (const auto& cmd : commands) {
        const auto first = cli(cmd);
        const auto second = cli(cmd);
        REQUIRE(first.exit_code == 0);
        CHECK(first.stdout_text == second.stdout_text);
    }
}

TEST_CASE("exact and heavily restarted annealing agree on every shipped fixture") {
    struct Pair {
        std::string exact, sa;
    };
    const std::string sa_flags = " --solver sa --restarts 50 --seed 0";
    const std::vector<Pair> runs{
        {"partition --values 1,5,5,11 --solver exact", "partition --values 1,5,5,11" + sa_flags},
        {"maxcut --graph " + fixture("graphs/triangle.txt") + " --solver exact",
         "maxcut --graph " + fixture("graphs/triangle.txt") + sa_flags},
        {"maxcut --graph " + fixture("graphs/maxcut6.txt") + " --solver exact",
         "maxcut --graph " + fixture("graphs/maxcut6.txt") + sa_flags},
        {"maxcut --graph " + fixture("graphs/single_edge.txt") + " --solver exact",
         "maxcut --graph " + fixture("graphs/single_edge.txt") + sa_flags},
        {"vertex-cover --graph " + fixture("graphs/path3.txt") + " --solver exact",
         "vertex-cover --graph " + fixture("graphs/path3.txt") + sa_flags},
        {"vertex-cover --graph " + fixture("graphs/triangle.txt") + " --solver exact",
         "vertex-cover --graph " + fixture("graphs/triangle.txt") + sa_flags},
        {"genomics --mutations " + fixture("genomics/three_patients.tsv") + " --alpha 3"
         " --solver exact",
         "genomics --mutations " + fixture("genomics/three_patients.tsv") + " --alpha 3" + sa_flags},
        {"order-partition --stocks " + fixture("portfolio/stocks4.csv") + " --risks " +
             fixture("portfolio/risks4.csv") + " --solver exact",
         "order-partition --stocks " + fixture("portfolio/stocks4.csv") + " --risks " +
             fixture("portfolio/risks4.csv") + sa_flags},
    };
    for (const auto& [exact_cmd, sa_cmd] : runs) {
        const json e = cli_json(exact_cmd);
        const json s = cli_json(sa_cmd);
        CHECK(e["energy"] == s["energy"]);
    }
}

TEST_CASE("QUBO_FORGE_THREADS does not change solver output") {
    const std::string cmd = "partition --values 9,4,4,1 --solver sa --seed 3 --restarts 8";
    const auto serial = cli(cmd);
    const auto parallel = proc::run("QUBO_FORGE_THREADS=4 " + proc::cli_path() + " " + cmd);
    REQUIRE(serial.exit_code == 0);
    REQUIRE(parallel.exit_code == 0);
    CHECK(serial.stdout_text == parallel.stdout_text);
}

TEST_CASE("--pretty emits the same document, indented") {
    const json compact = cli_json("partition --values 1,5,5,11 --solver exact");
    const auto pretty = cli("--pretty partition --values 1,5,5,11 --solver exact");
    REQUIRE(pretty.exit_code == 0);
    CHECK(json::parse(pretty.stdout_text) == compact);
    CHECK(pretty.stdout_text.find('\n') != pretty.stdout_text.npos);
}
