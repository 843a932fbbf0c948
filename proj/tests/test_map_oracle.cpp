#include "fixtures.hpp"

#include "fsm/map_oracle.hpp"

#include <doctest.h>

using namespace fsm;

TEST_SUITE("map_oracle")
{
    TEST_CASE("small censuses")
    {
        CHECK(enumerate({2}, {4}).get(0, "ordinary") == 2);
        Census bare = enumerate({2}, {});
        CHECK(bare.get(0, "ordinary") == 1);
        CHECK(bare.get(1, "ordinary") == 0);
        CHECK(enumerate({2, 2}, {4, 4}).get(0, "fully-simple") == 6);
        CHECK(enumerate({1, 1}, {4, 4, 4}).get(0, "fully-simple") == 81);
        CHECK(enumerate({2}, {4, 4, 4}).get(1, "ordinary") == 198);
    }

    TEST_CASE("degenerate 2-gon glued to itself counts as simple")
    {
        HalfEdgeSet h({2}, {});
        CombMap m = make_map(h, {1, 0});
        CHECK(classify(h, m) != MapClass::ordinary);
        CHECK(map_genus(h, m) == 0);
    }

    TEST_CASE("two 1-gons sharing their vertex: simple, not fully simple")
    {
        HalfEdgeSet h({1, 1}, {});
        CombMap m = make_map(h, {1, 0});
        CHECK(classify(h, m) == MapClass::simple);
    }

    TEST_CASE("GUE genus census")
    {
        auto c2 = gue_census({2});
        CHECK(c2.at(0) == 1);
        auto c4 = gue_census({4});
        CHECK(c4.at(0) == 2);
        CHECK(c4.at(1) == 1);
        auto c6 = gue_census({6});
        CHECK(c6.at(0) == 5);
        CHECK(c6.at(1) == 10);
    }

    TEST_CASE("property: parity vanishing")
    {
        for (auto ls : std::vector<std::vector<int>>{{1}, {3}, {2, 1}, {1, 1, 1}})
            for (int q = 0; q <= 2; ++q)
                for (const auto& [key, w] : enumerate(ls, std::vector<int>(q, 4)).cells)
                    CHECK(w == 0);
    }

    TEST_CASE("property: thread count does not change the census")
    {
        CHECK(enumerate({3, 1}, {4, 4}, 16, 1).cells == enumerate({3, 1}, {4, 4}, 16, 3).cells);
    }

    TEST_CASE("guard")
    {
        CHECK_THROWS_AS(enumerate({8, 8}, {4, 4}, 16), std::length_error);
    }

    TEST_CASE("census equals the bijection tables")
    {
        Workspace& ws = test::quad();
        for (int q = 0; q <= 2; ++q) {
            Census c = enumerate({2, 2}, std::vector<int>(q, 4));
            CHECK(c.get(0, "ordinary") == ws.row("cylinders", "ordinary", 0, {2, 2})[q]);
            CHECK(c.get(0, "simple") == ws.row("cylinders", "simple", 0, {2, 2})[q]);
            CHECK(c.get(0, "fully-simple") == ws.row("cylinders", "fully-simple", 0, {2, 2})[q]);
        }
    }
}
