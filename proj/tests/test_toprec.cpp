#include "fixtures.hpp"

#include "fsm/closed_forms.hpp"
#include "fsm/map_oracle.hpp"
#include "fsm/toprec.hpp"

#include <doctest.h>

using namespace fsm;

TEST_SUITE("toprec")
{
    TEST_CASE("ordinary tori with one boundary of length 2")
    {
        auto row = extract_ordinary(test::quad().ordinary(), 1, {2}, 8);
        CHECK(row == test::rats({0, 1, 15, 198, 2511, 31266, 385398, 4721004, 57590271}));
    }

    TEST_CASE("unstable ordinary cells")
    {
        TopRec& tr = test::quad().ordinary();
        CHECK(extract_ordinary(tr, 0, {6}, 0)[0] == 5);
        CHECK(extract_ordinary(tr, 0, {2, 2}, 0)[0] == 2);
        CHECK(extract_ordinary(tr, 0, {4, 2}, 3) == test::rats({8, 72, 648, 6048}));
    }

    TEST_CASE("exchanged curve: genus one, one boundary")
    {
        TopRec& tr = test::quad().exchanged();
        CHECK(extract_fullysimple(tr, 1, {2}, 8) ==
              test::rats({0, 0, 6, 117, 1755, 23976, 313227, 3991275, 50084487}));
        CHECK(extract_fullysimple(tr, 1, {4}, 3)[3] == 105);
        CHECK_THROWS(extract_fullysimple(tr, 0, {2}, 2));
    }

    TEST_CASE("exchanged curve: three boundaries against the planar fully simple formula")
    {
        auto row = extract_fullysimple(test::quad().exchanged(), 0, {2, 2, 2}, 4);
        Q3 bf = bernardi_fusy(4, {2, 2, 2});
        CHECK(bf.is_rational());
        CHECK(row[4] == bf.rational_part());
        CHECK(row[4] == bf_alpha(4, {2, 2, 2}) * 216);
    }

    TEST_CASE("three ordinary 2-gons without inner faces: 8 gluings")
    {
        // The census of connected planar gluings of three 2-gons is the independent reference.
        Census c = enumerate({2, 2, 2}, {});
        CHECK(c.get(0, "ordinary") == 8);
        CHECK(extract_ordinary(test::quad().ordinary(), 0, {2, 2, 2}, 0)[0] == 8);
    }

    TEST_CASE("property: amplitudes are symmetric and respect the pole cap")
    {
        for (TopRec* tr : {&test::quad().ordinary(), &test::quad().exchanged()})
            for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}}) {
                const Amplitude& a = tr->amplitude(g, n);
                CHECK(a.symmetric());
                CHECK(a.max_pole_order() <= pole_order_cap(g, n));
            }
        CHECK(test::quad().ordinary().amplitude(1, 2).symmetric());
    }

    TEST_CASE("property: no residues at the branch points")
    {
        for (TopRec* tr : {&test::quad().ordinary(), &test::quad().exchanged()})
            for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {1, 2}}) {
                if (tr == &test::quad().exchanged() && n == 2)
                    continue;
                for (const auto& [key, coeff] : tr->amplitude(g, n).terms)
                    for (const auto& [branch, order] : key)
                        if (order == 1)
                            CHECK(coeff.is_zero());
            }
    }

    TEST_CASE("property: emitted counts are sqrt3-free and even in u")
    {
        Workspace& ws = test::quad();
        for (int l = 1; l <= 8; ++l) {
            CHECK(test::rational_in_t(ordinary_series(ws.ordinary(), 1, {l})));
            CHECK(test::rational_in_t(fullysimple_series(ws.exchanged(), 1, {l})));
        }
        CHECK(test::rational_in_t(fullysimple_series(ws.exchanged(), 0, {3, 2, 1})));
        CHECK(test::rational_in_t(ordinary_series(ws.ordinary(), 0, {3, 3, 2})));
    }

    TEST_CASE("quadrangle/boundary exchange from the recursion")
    {
        Workspace& ws = test::quad();
        for (int l : {2, 4}) {
            auto f = extract_ordinary(ws.ordinary(), 0, {l}, 8);
            auto f4 = extract_ordinary(ws.ordinary(), 0, {l, 4}, 7);
            for (int q = 0; q <= 7; ++q)
                CHECK(Rat(4 * (q + 1)) * f[q + 1] == f4[q]);
        }
    }
}
