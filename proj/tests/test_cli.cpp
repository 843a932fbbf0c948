#include "cli.hpp"

#include "fsm/rat.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "fsm");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out, err;
    int code = fsm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("tables as csv")
    {
        auto r = invoke({"tables", "--family", "disks", "--mode", "ordinary", "--lengths", "2,4", "--qmax", "3"});
        REQUIRE(r.code == 0);
        CHECK(r.out == "lengths,Q=0,Q=1,Q=2,Q=3\n\"2\",\"1\",\"2\",\"9\",\"54\"\n\"4\",\"2\",\"9\",\"54\",\"378\"\n");
    }

    TEST_CASE("tables as json round-trip through exact rationals")
    {
        auto r = invoke({"tables", "--family", "cylinders", "--mode", "fully-simple", "--lengths", "2,2,1,1", "--qmax",
                         "3", "--format", "json"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["family"] == "cylinders");
        CHECK(j["mode"] == "fully-simple");
        CHECK(j["genus"] == 0);
        CHECK(j["qmax"] == 3);
        REQUIRE(j["rows"].size() == 2);
        for (const auto& row : j["rows"]) {
            REQUIRE(row["coeffs"].size() == 4);
            for (const auto& c : row["coeffs"])
                CHECK(fsm::is_integer(fsm::parse_rat(c.get<std::string>())));
        }
        // rows are sorted by lengths: (1,1) then (2,2)
        CHECK(j["rows"][0]["lengths"] == nlohmann::json::array({1, 1}));
        CHECK(fsm::parse_rat(j["rows"][0]["coeffs"][2].get<std::string>()) == 9);
        CHECK(fsm::parse_rat(j["rows"][1]["coeffs"][2].get<std::string>()) == 6);
        CHECK(fsm::parse_rat(j["rows"][1]["coeffs"][3].get<std::string>()) == 108);
    }

    TEST_CASE("genus-one tables")
    {
        auto r = invoke({"tables", "--family", "tori", "--mode", "fully-simple", "--lengths", "2", "--qmax", "4",
                         "--format", "json"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["genus"] == 1);
    }

    TEST_CASE("output is deterministic")
    {
        std::vector<std::string> args{"tables", "--family", "pants", "--lengths", "2,2,2", "--qmax", "4"};
        auto a = invoke(args);
        auto b = invoke(args);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out.find("\"8\",\"96\",\"1080\",\"12096\",\"136080\"") != std::string::npos);
    }

    TEST_CASE("bad selectors exit with 2")
    {
        CHECK(invoke({"tables", "--family", "tori", "--mode", "mixed"}).code == 2);
        CHECK(invoke({"tables", "--family", "octopi"}).code == 2);
        CHECK(invoke({"tables", "--family", "disks", "--format", "xml"}).code == 2);
        CHECK(invoke({"tables", "--family", "cylinders", "--lengths", "2,2,2"}).code == 2);
        CHECK(invoke({"verify", "--suite", "nonsense"}).code == 2);
        CHECK(invoke({"verify", "--suite", "hurwitz", "--lmax", "9"}).code == 2);
        CHECK(invoke({"hurwitz", "--weingarten", "--mu", "1,1", "--N", "1"}).code == 2);
        CHECK(invoke({"oracle", "--boundaries", "8,8", "--quads", "8"}).code == 2);
        CHECK(invoke({"frobnicate"}).code == 2);
    }

    TEST_CASE("hurwitz numbers")
    {
        auto r = invoke({"hurwitz", "--kind", "strict", "--k", "0", "--mu", "2", "--lambda", "2"});
        REQUIRE(r.code == 0);
        CHECK(nlohmann::json::parse(r.out)["value"] == "1/2");
        r = invoke({"hurwitz", "--kind", "weak", "--k", "3", "--mu", "2", "--lambda", "1,1"});
        REQUIRE(r.code == 0);
        CHECK(nlohmann::json::parse(r.out)["value"] == "1/2");
    }

    TEST_CASE("oracle classification")
    {
        auto r = invoke({"oracle", "--boundaries", "2,2", "--quads", "2", "--classify"});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("0,fully-simple,connected,\"6\"") != std::string::npos);
    }

    TEST_CASE("verification suite")
    {
        auto r = invoke({"verify", "--suite", "hurwitz", "--lmax", "6"});
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j.is_object());
    }
}
