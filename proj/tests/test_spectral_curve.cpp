#include "fixtures.hpp"

#include "fsm/closed_forms.hpp"
#include "fsm/spectral_curve.hpp"

#include <doctest.h>

#include <random>

using namespace fsm;

namespace {

// V'(x(z)) as a Laurent polynomial in z.
ZPoly vprime_of_x(const DiskCurve& cv)
{
    ZPoly r = cv.x_poly;
    for (const auto& [d, td] : cv.potential.t)
        r -= ZPoly(td) * cv.x_poly.pow(d - 1);
    return r;
}

} // namespace

TEST_SUITE("spectral_curve")
{
    TEST_CASE("quadrangulations: x = c (z + 1/z), w = 1/(c z) - t c^3 / z^3")
    {
        const int order = 10;
        DiskCurve cv = solve_disk_curve(Potential::quadrangulation(order), order);
        USeries c = c_series(order);
        CHECK(cv.gamma.agrees_with(c));
        CHECK(cv.alpha.is_zero());
        ZPoly w = ZPoly::monomial(c.inverse(), -1) - ZPoly::monomial(USeries::t(order) * c.pow(3), -3);
        CHECK(cv.w_of_z.same_as(RationalForm(w)));
    }

    TEST_CASE("Gaussian curve")
    {
        DiskCurve cv = solve_disk_curve(Potential::gaussian(), 6);
        CHECK(cv.alpha.is_zero());
        CHECK(cv.gamma.agrees_with(USeries(1)));
        CHECK(cv.w_of_z.same_as(RationalForm(ZPoly(USeries(1)), ZPoly::z())));
        CHECK(w_branch_points(cv).empty());
    }

    TEST_CASE("branch points of w: b = sqrt3 c^2 u")
    {
        const int order = 10;
        DiskCurve cv = solve_disk_curve(Potential::quadrangulation(order), order);
        auto bs = w_branch_points(cv);
        REQUIRE(bs.size() == 2);
        USeries expect = USeries::u(order) * c_squared(order) * Q3::sqrt3();
        bool found = false;
        for (const auto& b : bs)
            found = found || b.agrees_with(expect);
        CHECK(found);
        CHECK((bs[0] + bs[1]).is_zero());
        RationalForm dw = cv.w_of_z.derivative();
        for (const auto& b : bs)
            CHECK(dw.eval(b).is_zero());
        // w has a simple pole at z = 0, so compare z w(z), which is even in z: w(b+) + w(b-) = 0.
        RationalForm zw = cv.w_of_z * RationalForm(ZPoly::z(), ZPoly(USeries(1)));
        USeries at_plus = zw.eval(bs[0]);
        CHECK_FALSE(at_plus.is_zero());
        CHECK(at_plus.agrees_with(zw.eval(bs[1])));
    }

    TEST_CASE("property: solved curves for random sparse potentials")
    {
        std::mt19937 rng(3);
        std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
        for (int trial = 0; trial < 8; ++trial) {
            const int order = 10;
            Potential p;
            for (int d = 3; d <= 5; ++d) {
                int a = num(rng);
                if (a != 0)
                    p.t[d] = USeries::monomial(Q3(make_rat(a, den(rng))), d - 2, order);
            }
            DiskCurve cv = solve_disk_curve(p, order);
            ZPoly v = vprime_of_x(cv);
            CHECK(v.coeff(0).is_zero());
            CHECK((v.coeff(-1) * cv.gamma).agrees_with(USeries(1)));
            CHECK(cv.x_of_z.reflected().same_as(cv.x_of_z));
        }
    }

    TEST_CASE("local involutions are simple")
    {
        Workspace& ws = test::quad();
        for (const Chart* ch : {&ws.ordinary().chart(), &ws.exchanged().chart()}) {
            REQUIRE(ch->branches.size() == 2);
            for (const auto& d : ch->branches) {
                CHECK(d.iota.coeff(1).agrees_with(USeries(-1)));
                Laurent twice = d.iota.compose(d.iota);
                for (int k = 2; k < std::min(twice.prec(), 5); ++k)
                    CHECK(twice.coeff(k).is_zero());
            }
        }
    }
}
