#include "fsm/hurwitz.hpp"
#include "fsm/map_oracle.hpp"

#include <doctest.h>

#include <random>

using namespace fsm;

namespace {

Partition P(const std::string& s)
{
    return parse_partition(s);
}

} // namespace

TEST_SUITE("hurwitz")
{
    TEST_CASE("character tables")
    {
        const CharTable& t2 = char_table(2);
        CHECK(t2.at(P("2"), P("1,1")) == 1);
        CHECK(t2.at(P("2"), P("2")) == 1);
        CHECK(t2.at(P("1,1"), P("1,1")) == 1);
        CHECK(t2.at(P("1,1"), P("2")) == -1);
        CHECK(character(P("2,1"), P("3")) == -1);
        CHECK(character(P("2,2"), P("1,1,1,1")) == 2);
        CHECK_THROWS_AS(char_table(11), std::length_error);
    }

    TEST_CASE("property: orthogonality in both directions")
    {
        for (int L = 1; L <= 7; ++L) {
            const CharTable& ct = char_table(L);
            size_t n = ct.parts.size();
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b) {
                    Int rows = 0, cols = 0;
                    for (size_t k = 0; k < n; ++k) {
                        rows += ct.parts[k].class_size() * ct.chi[a][k] * ct.chi[b][k];
                        cols += ct.chi[k][a] * ct.chi[k][b];
                    }
                    CHECK(rows == (a == b ? factorial(L) : Int(0)));
                    CHECK(cols == (a == b ? ct.parts[a].aut() : Int(0)));
                }
        }
    }

    TEST_CASE("content functions")
    {
        CHECK(content_eval(SymKind::e, 1, P("2")) == 1);
        CHECK(content_eval(SymKind::e, 1, P("1,1")) == -1);
        for (int k = 0; k <= 5; ++k)
            CHECK(content_eval(SymKind::h, k, P("2")) == 1);
        CHECK(content_eval(SymKind::p, 2, P("2,1")) == 2);
    }

    TEST_CASE("monotone Hurwitz numbers")
    {
        CHECK(hurwitz_number(HurwitzKind::strict, 0, P("2"), P("2")) == make_rat(1, 2));
        CHECK(hurwitz_number(HurwitzKind::strict, 0, P("2"), P("1,1")) == 0);
        CHECK(hurwitz_number(HurwitzKind::strict, 1, P("1,1"), P("2")) == make_rat(1, 2));
        for (int k = 0; k <= 6; ++k)
            CHECK(hurwitz_number(HurwitzKind::weak, k, P("2"), P("1,1")) == make_rat(k % 2 ? 1 : 0, 2));
        CHECK(cayley_oracle(HurwitzKind::strict, 0, P("2"), P("2")) == make_rat(1, 2));
        CHECK(cayley_oracle(HurwitzKind::strict, 1, P("1,1"), P("2")) == make_rat(1, 2));
        CHECK_THROWS_AS(cayley_oracle(HurwitzKind::weak, 1, P("7"), P("7")), std::length_error);
    }

    TEST_CASE("property: character sums equal transposition-path counts")
    {
        for (int L = 1; L <= 4; ++L)
            for (const auto& mu : partitions(L))
                for (const auto& lam : partitions(L))
                    for (int k = 0; k <= 4; ++k)
                        for (HurwitzKind kind : {HurwitzKind::strict, HurwitzKind::weak, HurwitzKind::simple})
                            CHECK(hurwitz_number(kind, k, mu, lam) == cayley_oracle(kind, k, mu, lam));
    }

    TEST_CASE("Weingarten function")
    {
        for (int n : {2, 3, 5}) {
            Rat N(n);
            CHECK(weingarten(1, P("1"), N) == 1 / N);
            CHECK(weingarten(2, P("1,1"), N) == 1 / (N * N - 1));
            CHECK(weingarten(2, P("2"), N) == -1 / (N * (N * N - 1)));
        }
        // E |U_11|^2 |U_22|^2 = Wg(id) for N = 3
        CHECK(weingarten(2, P("1,1"), Rat(3)) == make_rat(1, 8));
        CHECK_THROWS_AS(weingarten(2, P("1,1"), Rat(1)), std::domain_error);
    }

    TEST_CASE("property: r_N s_N = 1")
    {
        for (int L = 1; L <= 6; ++L)
            for (const auto& nu : partitions(L)) {
                NLaurent prod = (content_r(nu, -9) * content_s(nu, -9)).truncated(-9);
                CHECK(prod.agrees_with(NLaurent::monomial(1, 0, -9)));
            }
    }

    TEST_CASE("transition")
    {
        MomentVector gue;
        for (const auto& p : partitions(2))
            gue.emplace(p, gue_moment_series(p).truncated(-8));
        auto fs = transition(Direction::fs_from_ordinary, gue, -10);
        CHECK(fs.at(P("2")).agrees_with(NLaurent::monomial(1, -1, -10)));
        CHECK(fs.at(P("1,1")).terms().empty());
        CHECK_THROWS_AS(transition(Direction::fs_from_ordinary, gue, -11), std::invalid_argument);

        MomentVector one;
        one.emplace(P("1"), NLaurent::monomial(make_rat(3, 7), 2, -6));
        auto p1 = transition(Direction::fs_from_ordinary, one, -7);
        CHECK(p1.at(P("1")).agrees_with(NLaurent::monomial(make_rat(3, 7), 1, -7)));
    }

    TEST_CASE("property: opposite transitions invert each other")
    {
        std::mt19937 rng(13);
        std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
        for (int L = 1; L <= 5; ++L) {
            MomentVector mv;
            for (const auto& p : partitions(L)) {
                NLaurent v(-6);
                for (int e = -6; e <= 1; ++e)
                    v.add(e, make_rat(num(rng), den(rng)));
                mv.emplace(p, v);
            }
            auto back = transition(Direction::ordinary_from_fs, transition(Direction::fs_from_ordinary, mv, -6 - L), -6);
            for (const auto& [p, v] : mv)
                CHECK(back.at(p).agrees_with(v));
        }
    }

    TEST_CASE("property: Weingarten route equals the transition route for GUE")
    {
        for (int L = 1; L <= 4; ++L) {
            MomentVector mv;
            for (const auto& p : partitions(L))
                mv.emplace(p, gue_moment_series(p).truncated(-10));
            auto routed = transition(Direction::fs_from_ordinary, mv, -10 - L);
            for (const auto& lam : partitions(L)) {
                std::map<Partition, Rat> pm;
                Rat N(9);
                for (const auto& mu : partitions(L))
                    pm.emplace(mu, gue_moment(mu, N));
                Rat wg = weingarten_fs_moment(lam, pm, N);
                // both routes reduce to a single monomial for GUE; compare its value at N = 9
                Rat series_at_N = 0;
                for (const auto& [e, c] : routed.at(lam).terms()) {
                    Rat f = 1;
                    for (int i = 0; i < -e; ++i)
                        f /= N;
                    series_at_N += c * f;
                }
                CHECK(routed.at(lam).terms().size() <= 1);
                CHECK(wg == series_at_N);
            }
        }
    }

    TEST_CASE("GUE moments")
    {
        CHECK(gue_moment(P("2"), Rat(5)) == 5);
        CHECK(gue_moment(P("1,1"), Rat(5)) == 1);
        CHECK(gue_moment(P("3"), Rat(5)) == 0);
        auto k6 = gue_cumulant_genus(P("6"));
        CHECK(k6.at(0) == 5);
        CHECK(k6.at(1) == 10);
    }

    TEST_CASE("connected numbers")
    {
        CHECK(connected_hurwitz(P("2"), 0) == make_rat(1, 2));
        // two Tr M^2 joined into one cylinder: the census counts 2 gluings
        CHECK(Rat(P("2,2").aut()) * connected_hurwitz(P("2,2"), 0) == gue_census({2, 2}).at(0));
        CHECK(Rat(P("2,2").aut()) * connected_hurwitz(P("2,2"), 0) == 2);
        CHECK(Rat(P("8").aut()) * connected_hurwitz(P("8"), 2) == 21);
    }
}
