#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "test_util.hpp"

#include "omvar/cli.hpp"

using namespace omvar;
using omvar::test::fixture;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("axioms command") {
    SUBCASE("valid input passes with exit 0") {
        CliResult r = run({"axioms", "--input", fixture("f2.covectors")});
        CHECK(r.code == 0);
        auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["pass"] == true);
        CHECK(doc["topes"] == 4);
    }
    SUBCASE("a broken covector set names the failing axiom") {
        CliResult r = run({"axioms", "--input", fixture("f2_broken.covectors")});
        CHECK(r.code == 1);
        auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["pass"] == false);
        bool named = false;
        for (const auto& c : doc["checks"])
            if (c["axiom"] == "composition" && c["pass"] == false)
                named = true;
        CHECK(named);
    }
    SUBCASE("unreadable input exits 2") {
        CliResult r = run({"axioms", "--input", fixture("nope.covectors")});
        CHECK(r.code == 2);
    }
    SUBCASE("arrangement kind by extension") {
        CliResult r = run({"axioms", "--input", fixture("f3.json")});
        CHECK(r.code == 0);
        auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["covectors"] == 13);
    }
}

TEST_CASE("det command") {
    SUBCASE("all three modes agree on the single element") {
        CliResult r = run({"det", "--input", fixture("f1.covectors"),
                           "--mode", "symbolic,modp,formula"});
        CHECK(r.code == 0);
        auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["pass"] == true);
        CHECK(doc["symbolic"] == "1 - U0^2");
    }
    SUBCASE("formula against modular trials on the generic triple") {
        CliResult r = run({"det", "--input", fixture("f3.json"), "--mode",
                           "formula,modp", "--trials", "20"});
        CHECK(r.code == 0);
        auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["formula"].size() == 7);
    }
    SUBCASE("size guard exits 3") {
        CliResult r = run({"det", "--input", fixture("f4.json"), "--mode",
                           "symbolic", "--max-symbolic", "4"});
        CHECK(r.code == 3);
    }
    SUBCASE("composite prime is rejected") {
        CliResult r = run({"det", "--input", fixture("f1.covectors"),
                           "--prime", "10"});
        CHECK(r.code == 2);
    }
}

TEST_CASE("factorize command is deterministic") {
    CliResult a = run({"factorize", "--input", fixture("f3.json"), "--seed",
                       "99"});
    CliResult b = run({"factorize", "--input", fixture("f3.json"), "--seed",
                       "99"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["report"]["status"] == "pass");
}

TEST_CASE("supertope command") {
    SUBCASE("halfspace of the generic triple, all bases") {
        CliResult r = run({"supertope", "--input", fixture("f3.json"),
                           "--plus", "0"});
        CHECK(r.code == 0);
        auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["closed"] == true);
        CHECK(doc["topes"].size() == 3);
    }
    SUBCASE("explicit base") {
        CliResult r = run({"supertope", "--input", fixture("f3.json"),
                           "--plus", "0", "--minus", "1", "--base", "+-+"});
        CHECK(r.code == 0);
    }
    SUBCASE("empty supertope exits 1") {
        CliResult r = run({"supertope", "--input", fixture("antiparallel.json"),
                           "--plus", "0,1"});
        CHECK(r.code == 1);
        auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["error"] == "empty supertope");
    }
}

TEST_CASE("cone command") {
    SUBCASE("halfspace pattern verifies") {
        CliResult r = run({"cone", "--input", fixture("f2.json"), "--signs",
                           "0:+"});
        CHECK(r.code == 0);
        auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["report"]["status"] == "pass");
    }
    SUBCASE("single-tope pattern gives the empty factor list") {
        CliResult r = run({"cone", "--input", fixture("f3.json"), "--signs",
                           "0:+,1:+,2:+"});
        CHECK(r.code == 0);
    }
    SUBCASE("non-closed pattern exits 2") {
        CliResult r = run({"cone", "--input", fixture("antiparallel.json"),
                           "--signs", "0:+"});
        CHECK(r.code == 2);
    }
}

TEST_CASE("invariance command") {
    CliResult r = run({"invariance", "--input", fixture("f3.json"),
                       "--reorient", "0,2"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["report"]["status"] == "pass");
}

TEST_CASE("matroid command") {
    CliResult r = run({"matroid", "--input", fixture("f3.json")});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["beta"] == 1);
    CHECK(doc["rank"] == 2);
    CHECK(doc["flats"].size() == 5);
    CHECK(doc["bounded_topes"]["0"] == 2);
}

TEST_CASE("element order relabels the ground set") {
    CliResult a = run({"det", "--input", fixture("f3.json"), "--mode",
                       "formula"});
    CliResult b = run({"det", "--input", fixture("f3.json"), "--mode",
                       "formula", "--element-order", "2,0,1"});
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    // The factor multiset is permuted but its shape is identical.
    auto da = nlohmann::json::parse(a.out);
    auto db = nlohmann::json::parse(b.out);
    CHECK(da["formula"].size() == db["formula"].size());
    SUBCASE("bad permutations are rejected") {
        CliResult r = run({"det", "--input", fixture("f3.json"),
                           "--element-order", "0,0,1"});
        CHECK(r.code == 2);
    }
}

TEST_CASE("json-out writes the same bytes as stdout") {
    std::string path = "/tmp/omvar_cli_test_out.json";
    CliResult r = run({"matroid", "--input", fixture("f2.json"),
                       "--json-out", path});
    CHECK(r.code == 0);
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == r.out);
}

TEST_CASE("usage errors exit 2") {
    CliResult r = run({"det"});
    CHECK(r.code == 2);
    CliResult unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);
}
