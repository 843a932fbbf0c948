#include "fixtures.hpp"

#include "fsm/bijection_series.hpp"
#include "fsm/closed_forms.hpp"

#include <doctest.h>

#include <random>

using namespace fsm;

TEST_SUITE("bijection_series")
{
    TEST_CASE("fully simple disks")
    {
        Workspace& ws = test::quad();
        const auto& H = ws.fs_disks();
        const auto& F = ws.disks();
        CHECK(t_table(H[4], 4) == test::rats({0, 1, 10, 90, 810}));
        CHECK(t_table(H[6], 2)[2] == 3);
        CHECK(t_table(H[2], 8) == t_table(F[2], 8));
        CHECK(t_table(H[8], 8) == test::rats({0, 0, 0, 12, 330, 5940, 89100, 1211760, 15540822}));
    }

    TEST_CASE("Gaussian: only the disk of perimeter 2 is fully simple")
    {
        DiskCurve cv = solve_disk_curve(Potential::gaussian(), 8);
        auto F = ordinary_disks(cv, 8);
        auto H = fully_simple_disks(F, 8);
        CHECK(H[2].agrees_with(USeries(1)));
        for (int k = 1; k <= 8; ++k)
            if (k != 2)
                CHECK(H[k].is_zero());
    }

    TEST_CASE("cylinder tables")
    {
        Workspace& ws = test::quad();
        CHECK(t_table(ws.cylinders("simple").at(1, 1), 4) == test::rats({1, 3, 18, 135, 1134}));
        CHECK(t_table(ws.cylinders("simple").at(3, 3), 1)[1] == 27);
        CHECK(t_table(ws.cylinders("fully-simple").at(1, 1), 8) ==
              test::rats({0, 1, 9, 81, 756, 7290, 72171, 729729, 7505784}));
        CHECK(t_table(ws.cylinders("fully-simple").at(2, 4), 3)[3] == 40);
        CHECK(t_table(ws.cylinders("mixed").at(4, 2), 1)[1] == 8);
        CHECK(t_table(ws.cylinders("mixed").at(9, 1), 4)[4] == 495);
        CHECK(t_table(ws.cylinders("fully-simple").at(1, 1), 8) == t_table(h11_closed(18), 8));
    }

    TEST_CASE("property: symmetric tables and dominance")
    {
        Workspace& ws = test::quad();
        CHECK(ws.cylinders("simple").symmetric());
        CHECK(ws.cylinders("fully-simple").symmetric());
        CHECK(ws.cylinders("ordinary").symmetric());
        for (int a = 1; a <= 9; ++a)
            for (int b = 1; b <= 9; ++b) {
                auto f = t_table(ws.cylinders("ordinary").at(a, b), 8);
                auto m = t_table(ws.cylinders("mixed").at(a, b), 8);
                auto g = t_table(ws.cylinders("simple").at(a, b), 8);
                auto h = t_table(ws.cylinders("fully-simple").at(a, b), 8);
                for (int q = 0; q <= 8; ++q)
                    CHECK((f[q] >= m[q] && m[q] >= g[q] && g[q] >= h[q] && h[q] >= 0));
            }
    }

    TEST_CASE("property: ordinary -> fully simple -> ordinary for random sparse potentials")
    {
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
        const int order = 8;
        for (int trial = 0; trial < 10; ++trial) {
            Potential p;
            for (int d = 3; d <= 5; ++d) {
                int a = num(rng);
                if (a != 0)
                    p.t[d] = USeries::monomial(Q3(make_rat(a, den(rng))), d - 2, order + 4);
            }
            DiskCurve cv = solve_disk_curve(p, order + 4);
            auto F = ordinary_disks(cv, order);
            auto back = ordinary_from_fully_simple(fully_simple_disks(F, order), order);
            for (int l = 1; l <= order; ++l)
                CHECK(back[l].agrees_with(F[l]));
        }
    }

    TEST_CASE("pants identity")
    {
        DiskCurve cv = solve_disk_curve(Potential::quadrangulation(14), 14);
        PantsReport r = pants_identity_check(cv, 10);
        CHECK(r.identical);
        CHECK(r.residue_sum_zero);
        CHECK(r.samples == 3);
    }
}
