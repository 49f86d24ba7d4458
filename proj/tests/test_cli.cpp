#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "ffperm/cli.hpp"

using namespace ffperm;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json first_line(const std::string& s) { return json::parse(s.substr(0, s.find('\n'))); }

}  // namespace

TEST_CASE("check") {
    const Run a = run({"check", "--family", "f1", "--p", "2", "--k", "1", "--l", "1"});
    CHECK(a.code == kExitOk);
    const json j = first_line(a.out);
    CHECK(j["empirical"] == true);
    CHECK(j["predicted"] == true);
    CHECK(j["match"] == true);
    CHECK(j["elapsed_ms"].is_null());

    const Run b = run({"check", "--family", "f1", "--p", "2", "--k", "2", "--l", "1"});
    CHECK(b.code == kExitOk);
    CHECK(first_line(b.out)["empirical"] == false);

    const Run t = run({"check", "--family", "key", "--p", "3", "--k", "1", "--l", "0", "--timing"});
    CHECK(first_line(t.out)["elapsed_ms"].is_number());
}

TEST_CASE("field-info") {
    const Run r = run({"field-info", "--p", "2", "--n", "3"});
    CHECK(r.code == kExitOk);
    const json j = first_line(r.out);
    CHECK(j["modulus_text"] == "X^3+X+1");
    CHECK(j["size"] == 8);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"check", "--family", "f1", "--p", "2"}).code == kExitUsage);
    CHECK(run({"check", "--family", "nope", "--p", "2", "--k", "1", "--l", "0"}).code == kExitUsage);
    CHECK(run({"check", "--family", "f1", "--p", "2", "--k", "1"}).code == kExitUsage);  // l missing
    CHECK(run({"field-info", "--p", "2", "--n", "3", "--bogus"}).code == kExitUsage);
    CHECK(run({"field-info", "--p", "4", "--n", "1"}).code == kExitUsage);
    const Run cap = run({"field-info", "--p", "2", "--n", "30"});
    CHECK(cap.code == kExitUsage);
    CHECK_FALSE(cap.err.empty());
    CHECK(run({"suite", "--family", "f1", "--format", "xml"}).code == kExitUsage);
}

TEST_CASE("suite output") {
    const Run r = run({"suite", "--family", "key", "--p-list", "2,3", "--k-max", "2"});
    CHECK(r.code == kExitOk);
    const json j = first_line(r.out);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    // nlohmann::json sorts keys; compare as a set
    std::sort(keys.begin(), keys.end());
    CHECK(keys == std::vector<std::string>{"c_index", "elapsed_ms", "empirical", "family", "k", "l", "m", "match",
                                           "n", "p", "predicted"});
    CHECK(r.out.rfind("{\"family\":\"key\",\"p\":2,\"k\":1,\"l\":0,", 0) == 0);
    const json summary = first_line(r.err);
    CHECK(summary["points"] == 2 * (3 + 6));
    CHECK(summary["mismatches"] == 0);

    const Run csv = run({"suite", "--family", "f2", "--format", "csv"});
    CHECK(csv.out.rfind("family,p,k,", 0) == 0);
}

TEST_CASE("sets") {
    const Run r = run({"sets", "--p", "2", "--k", "1", "--which", "lambda", "--list"});
    CHECK(r.code == kExitOk);
    const json j = first_line(r.out);
    CHECK(j["size"] == 3);
    CHECK(j["elements"].size() == 3);
    CHECK(first_line(run({"sets", "--p", "3", "--k", "1", "--which", "gamma"}).out)["size"] == 9);
    const json p1 = first_line(run({"sets", "--p", "2", "--k", "1", "--which", "p1", "--list"}).out);
    CHECK(p1["elements"].back() == "inf");
}

TEST_CASE("lemmas and remark") {
    CHECK(run({"lemmas", "--which", "gcd"}).code == kExitOk);
    CHECK(run({"lemmas", "--which", "deg1", "--p", "2", "--k", "1"}).code == kExitOk);
    CHECK(run({"lemmas", "--which", "step1", "--p", "2", "--k", "1", "--count", "20"}).code == kExitOk);
    CHECK(run({"lemmas", "--which", "fibers", "--p", "3", "--k", "1"}).code == kExitOk);
    CHECK(run({"lemmas", "--which", "htilde", "--k", "1"}).code == kExitOk);
    CHECK(run({"lemmas", "--which", "bogus"}).code == kExitUsage);
    const Run rem = run({"remark", "--k", "1"});
    CHECK(rem.code == kExitOk);
    CHECK(first_line(rem.out)["literal_permutes"] == true);
}
