#include "fixtures.hpp"

#include "fsm/bijection_series.hpp"
#include "fsm/laurent.hpp"
#include "fsm/rational_form.hpp"

#include <doctest.h>

#include <random>

using namespace fsm;

namespace {

USeries one_minus_12t(int prec)
{
    return USeries(1).truncated(prec) - USeries::t(prec) * Q3(12);
}

std::vector<Rat> t_coeffs(const USeries& s, int n)
{
    std::vector<Rat> r;
    for (int q = 0; q < n; ++q)
        r.push_back(s.t_coeff(q));
    return r;
}

USeries random_series(std::mt19937& rng, int prec, bool unit)
{
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    std::vector<Q3> c;
    for (int i = 0; i < prec; ++i)
        c.emplace_back(make_rat(num(rng), den(rng)), i % 3 == 1 ? make_rat(num(rng), den(rng)) : Rat(0));
    if (unit)
        c[0] = Q3(make_rat(1 + (num(rng) + 4), 1));
    return USeries::from_coeffs(c, prec);
}

} // namespace

TEST_SUITE("exact_core")
{
    TEST_CASE("rationals print and parse canonically")
    {
        CHECK(to_string(parse_rat("6/8")) == "3/4");
        CHECK(to_string(make_rat(-4, 2)) == "-2");
        CHECK(binomial(10, 3) == 120);
        CHECK(factorial(6) == 720);
        Rat s;
        CHECK(rat_sqrt(make_rat(9, 4), s));
        CHECK(s == make_rat(3, 2));
        CHECK_FALSE(rat_sqrt(make_rat(3), s));
    }

    TEST_CASE("Q(sqrt3) arithmetic")
    {
        Q3 a(Rat(1), Rat(1));
        CHECK(a * a.conj() == Q3(-2));
        CHECK(a * a.inverse() == Q3(1));
        Q3 r;
        CHECK(q3_sqrt(Q3(Rat(4), Rat(2)), r));
        CHECK(r * r == Q3(Rat(4), Rat(2)));
        CHECK(Q3::sqrt3() * Q3::sqrt3() == Q3(3));
        CHECK(parse_q3(a.str()) == a);
    }

    TEST_CASE("series identities from the quadrangulation curve")
    {
        const int p = 12;
        USeries a = one_minus_12t(p);
        CHECK((a * a.inverse()).agrees_with(USeries(1)));

        USeries root = series_sqrt(a);
        CHECK(t_coeffs(root, 5) == std::vector<Rat>{1, -6, -18, -108, -810});

        USeries c2 = ((USeries(1).truncated(p) - root) * Q3(make_rat(1, 6))).shifted(-2);
        CHECK(t_coeffs(c2, 4) == std::vector<Rat>{1, 3, 18, 135});

        USeries c = series_sqrt(c2);
        CHECK(t_coeffs(c, 5) ==
              std::vector<Rat>{make_rat(1), make_rat(3, 2), make_rat(63, 8), make_rat(891, 16), make_rat(57915, 128)});

        USeries h11 = c.pow(6) * USeries::t(p);
        CHECK(t_coeffs(h11, 5) == std::vector<Rat>{0, 1, 9, 81, 756});
        CHECK(series_sqrt(USeries(1)).agrees_with(USeries(1)));
    }

    TEST_CASE("truncation is explicit")
    {
        USeries a = one_minus_12t(6);
        CHECK(a.prec() == 6);
        CHECK_THROWS(a.coeff(6));
        CHECK((a + USeries(1)).prec() == 6);
        CHECK(USeries(3).is_exact());
    }

    TEST_CASE("property: (a b) / b = a and sqrt(a)^2 = a")
    {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 25; ++trial) {
            USeries a = random_series(rng, 10, false), b = random_series(rng, 10, true);
            CHECK(((a * b) / b).agrees_with(a));
            USeries s = random_series(rng, 10, true);
            USeries sq = s * s;
            USeries r = series_sqrt(sq);
            CHECK((r * r).agrees_with(sq));
        }
    }

    TEST_CASE("series reversion")
    {
        // p(y) = y + y^2 reverts to sum (-1)^(n-1) Catalan(n-1) y^n
        std::vector<USeries> a(3, USeries(0));
        a[2] = USeries(1);
        auto inv = series_reversion(a, 6);
        std::vector<long> want = {0, 1, -1, 2, -5, 14, -42};
        for (int n = 1; n <= 6; ++n)
            CHECK(inv[n].agrees_with(USeries(want[n])));
        // identity: nothing beyond the linear term
        auto id = series_reversion(std::vector<USeries>(2, USeries(0)), 5);
        for (int n = 2; n <= 5; ++n)
            CHECK(id[n].is_zero());
        CHECK(id[1].agrees_with(USeries(1)));
    }

    TEST_CASE("property: reversion is an involution")
    {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<USeries> a(8, USeries(0));
            for (int j = 2; j < 8; ++j)
                a[j] = random_series(rng, 6, false);
            auto inv = series_reversion(a, 7);
            auto back = series_reversion(inv, 7);
            for (int j = 2; j < 8; ++j)
                CHECK(back[j].agrees_with(a[j]));
        }
    }

    TEST_CASE("Laurent series in a local variable")
    {
        Laurent z = Laurent::variable(8);
        Laurent f = z + z * z; // z + z^2
        Laurent g = f.inverse();
        CHECK((f * g).coeff(0).agrees_with(USeries(1)));
        CHECK(g.coeff(-1).agrees_with(USeries(1)));
        CHECK(g.coeff(0).agrees_with(USeries(-1)));
        Laurent minus = -z;
        CHECK(minus.compose(minus).coeff(1).agrees_with(USeries(1)));
    }

    TEST_CASE("residues and the sign convention at infinity")
    {
        RationalForm inv_z(ZPoly(USeries(1)), ZPoly::z());
        CHECK(z_residue(inv_z, std::nullopt).agrees_with(USeries(-1)));
        ZPoly zm1 = ZPoly::z() - ZPoly(USeries(1));
        RationalForm double_pole(ZPoly(USeries(1)), zm1.pow(2));
        CHECK(z_residue(double_pole, USeries(1)).is_zero());
        RationalForm simple_pole(ZPoly(USeries(1)), zm1);
        CHECK(z_residue(simple_pole, USeries(1)).agrees_with(USeries(1)));
    }

    TEST_CASE("residue at infinity: F_2^[1] has no Q = 0 term")
    {
        Workspace& ws = test::quad();
        RationalForm w11 = ws.ordinary().as_rational_form(1);
        const DiskCurve& cv = ws.curve();
        USeries r = z_residue(w11, std::nullopt, cv.x_poly.pow(2));
        CHECK(r.coeff(0).is_zero());
        CHECK(r.coeff(1).is_zero());
    }
}
