#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "revca/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = revca::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> records_of(const std::string& text) {
    std::vector<json> records;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) records.push_back(json::parse(line));
    }
    return records;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("identify") {
    CliRun r = run({"identify", "--rules", "90,15,85,15"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "reversible\n");

    r = run({"identify", "--rules", "105,129,171,65"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("irreversible") == 0);
    CHECK(r.out.find("unbalanced-split") != std::string::npos);

    r = run({"identify", "--rules", "105,129,171,65", "--expect-reversible"});
    CHECK(r.exit_code == 1);

    r = run({"identify", "--rules", "90,15,85,15", "--format", "record"});
    CHECK(r.exit_code == 0);
    const json record = json::parse(r.out);
    CHECK(record["reversible"] == true);
    CHECK(record["witness_level"].is_null());
    CHECK(record["reason"].is_null());

    r = run({"identify", "--rules", "90,85,15,15", "-f", "record"});
    const json witness = json::parse(r.out);
    CHECK(witness["reversible"] == false);
    CHECK(witness["witness_level"] == 2);
    CHECK(witness["reason"] == "singleton-after-normalization");
}

TEST_CASE("identify with tree printout") {
    const CliRun r = run({"identify", "--rules", "90,15,85,15", "--show-tree"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("level 0: {0,1,2,3}") != std::string::npos);
    CHECK(r.out.find("level 1: {0,1} {2,3}") != std::string::npos);
    CHECK(r.out.find("level 2: {1,3} {0,2}") != std::string::npos);
}

TEST_CASE("evolve") {
    CliRun r = run({"evolve", "--rules", "105,129,171,65", "--state", "0011", "--steps", "1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0011 1011\n");

    r = run({"evolve", "--rules", "105,129,171,65", "--state", "0011", "--steps", "1", "-f",
             "record"});
    const auto records = records_of(r.out);
    REQUIRE(records.size() == 2);
    CHECK(records[0]["step"] == 0);
    CHECK(records[0]["state"] == "0011");
    CHECK(records[1]["state"] == "1011");
}

TEST_CASE("synthesize is reproducible and round-trips through identify") {
    const CliRun a = run({"synthesize", "--n", "8", "--seed", "7", "--method", "classwalk"});
    const CliRun b = run({"synthesize", "--n", "8", "--seed", "7", "--method", "classwalk"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    for (const char* method : {"tree", "classwalk"}) {
        for (const char* seed : {"1", "2", "3", "4", "5"}) {
            const CliRun s = run({"synthesize", "--n", "7", "--seed", seed, "--method", method});
            REQUIRE(s.exit_code == 0);
            std::string rules = s.out;
            rules.pop_back();  // newline
            const CliRun check = run({"identify", "--rules", rules, "--expect-reversible"});
            CHECK(check.exit_code == 0);
            CHECK(check.out == "reversible\n");
        }
    }
}

TEST_CASE("synthesize without a seed reports the one it used") {
    const CliRun r = run({"synthesize", "--n", "5", "--method", "tree"});
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("seed: ") == 0);

    const CliRun record_run =
        run({"synthesize", "--n", "5", "--method", "tree", "--format", "record"});
    const json record = json::parse(record_run.out);
    CHECK(record.contains("seed"));
    CHECK(record["n"] == 5);
}

TEST_CASE("plain and record synthesize agree for a fixed seed") {
    const CliRun plain = run({"synthesize", "--n", "6", "--seed", "11", "--method", "classwalk"});
    const CliRun record =
        run({"synthesize", "--n", "6", "--seed", "11", "--method", "classwalk", "-f", "record"});
    const json parsed = json::parse(record.out);
    CHECK(plain.out == parsed["rules"].get<std::string>() + "\n");
    CHECK(parsed["seed"] == 11);
    CHECK(parsed["method"] == "classwalk");
}

TEST_CASE("stg emits DOT text with a summary") {
    const CliRun r = run({"stg", "--rules", "105,129,171,65"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("digraph stg {") == 0);
    CHECK(r.out.find("\"0011\" -> \"1011\";") != std::string::npos);
    CHECK(r.out.find("// bijective: false") != std::string::npos);
    CHECK(r.out.rfind("}\n") == r.out.size() - 2);

    const CliRun record = run({"stg", "--rules", "105,129,171,65", "-f", "record"});
    const auto records = records_of(record.out);
    REQUIRE(records.size() == 17);  // 16 edges and one summary
    CHECK(records.back()["bijective"] == false);
    CHECK(records.back()["non_reachable_states"] >= 2);
    CHECK(records.back()["max_predecessor_count"] >= 2);

    // Content agreement between the two formats.
    int matched = 0;
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
        const std::string edge = "\"" + records[i]["from"].get<std::string>() + "\" -> \"" +
                                 records[i]["to"].get<std::string>() + "\";";
        if (r.out.find(edge) != std::string::npos) ++matched;
    }
    CHECK(matched == 16);
}

TEST_CASE("count") {
    CliRun r = run({"count", "--n", "1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "128\n");

    r = run({"count", "--n", "3", "--space", "reversible", "-f", "record"});
    const json record = json::parse(r.out);
    CHECK(record["count"] == 18432);
    CHECK(record["space"] == "reversible");
}

TEST_CASE("classify reports matching reference rows") {
    const CliRun r = run({"classify"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[MISMATCH]") == std::string::npos);
    CHECK(r.out.find("all rows match the reference tables") != std::string::npos);

    const CliRun record = run({"classify", "-f", "record"});
    CHECK(record.exit_code == 0);
    const auto rows = records_of(record.out);
    CHECK(rows.size() >= 37);  // 2 rule lists, 6 classes, 23 transitions, 1 + 6 boundary rows
    for (const json& row : rows) {
        CHECK(row["match"] == true);
    }
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run({}).exit_code == 2);
    CHECK(run({"identify"}).exit_code == 2);
    CHECK(run({"identify", "--rules", "90,,15"}).exit_code == 2);
    CHECK(run({"identify", "--rules", "90,256"}).exit_code == 2);
    CHECK(run({"identify", "--rules", "90,15", "--bogus"}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"evolve", "--rules", "90,15", "--state", "0012"}).exit_code == 2);
    CHECK(run({"evolve", "--rules", "90,15", "--state", "001"}).exit_code == 2);
    CHECK(run({"synthesize", "--n", "2", "--seed", "1", "--method", "classwalk"}).exit_code == 2);
    CHECK(run({"count", "--n", "9"}).exit_code == 2);
    CHECK(run({"stg", "--rules", "90,15", "--format", "yaml"}).exit_code == 2);

    std::string oversized = "204";
    for (int i = 0; i < 25; ++i) oversized += ",204";
    CHECK(run({"stg", "--rules", oversized}).exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    const CliRun r = run({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("identify") != std::string::npos);
}

TEST_SUITE_END();
