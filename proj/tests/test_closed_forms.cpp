#include "fixtures.hpp"

#include "fsm/closed_forms.hpp"
#include "fsm/toprec.hpp"

#include <doctest.h>

using namespace fsm;

TEST_SUITE("closed_forms")
{
    TEST_CASE("planar fully simple formula")
    {
        CHECK(bernardi_fusy(2, {2, 2}) == Q3(6));
        CHECK(bernardi_fusy(2, {1, 1}) == Q3(9));
        CHECK(bernardi_fusy(3, {2, 2}) == Q3(108));
        CHECK(bf_internal_vertices(3, {2, 2}) == 1);
        CHECK(bf_epsilon(1) * bf_epsilon(1) == Q3(3));
    }

    TEST_CASE("property: formula equals the bijection tables for one and two boundaries")
    {
        Workspace& ws = test::quad();
        for (int k = 1; k <= 9; ++k) {
            auto row = ws.row("disks", "fully-simple", 0, {k});
            for (int q = 0; q <= 8; ++q) {
                if (k % 2)
                    continue;
                Q3 v = bernardi_fusy(q, {k});
                CHECK(v == Q3(row[q]));
            }
        }
        for (int a = 1; a <= 9; ++a)
            for (int b = 1; b <= a; ++b) {
                if ((a + b) % 2)
                    continue;
                auto row = ws.row("cylinders", "fully-simple", 0, {a, b});
                for (int q = 0; q <= 8; ++q) {
                    Q3 v = bernardi_fusy(q, {a, b});
                    CHECK(v == Q3(row[q]));
                    CHECK(v.is_rational());
                    CHECK(is_integer(v.rational_part()));
                    CHECK(v.rational_part() >= 0);
                }
            }
    }

    TEST_CASE("H_{1,1} = c^6 t")
    {
        CHECK(t_table(h11_closed(10), 4) == test::rats({0, 1, 9, 81, 756}));
    }

    TEST_CASE("phi_m at t = 0 is m")
    {
        for (int m = 0; m <= 5; ++m)
            CHECK(phi(m, 6).t_coeff(0) == m);
    }

    TEST_CASE("genus-one closed forms equal the recursion")
    {
        Workspace& ws = test::quad();
        for (int m = 0; m <= 6; ++m)
            CHECK(t_table(genus1_ordinary(m, ws.u_order()), 8) == ws.row("tori", "ordinary", 1, {2 * m + 2}));
        for (int m = 1; m <= 7; ++m)
            CHECK(t_table(genus1_fullysimple(m, ws.u_order()), 8) == ws.row("tori", "fully-simple", 1, {2 * m}));
    }

    TEST_CASE("closed forms of the genus-one one-point functions")
    {
        Workspace& ws = test::quad();
        const DiskCurve& cv = ws.curve();
        CHECK(ws.ordinary().as_rational_form(1).same_as(tori1_closed(ws.u_order()) * cv.x_of_z.derivative()));
        CHECK(ws.exchanged().as_rational_form(1).same_as(tori2_closed(ws.u_order()) * cv.w_of_z.derivative()));
    }

    TEST_CASE("the closed form for r_{m,i} matches the series for m >= 1")
    {
        for (int m = 1; m <= 5; ++m)
            for (int i = 0; i <= 6; ++i)
                CHECK(r_coeff(m, i) == r_coeff_direct(m, i));
    }
}
