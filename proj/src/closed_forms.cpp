#include "fsm/closed_forms.hpp"

#include <stdexcept>

namespace fsm {

namespace {

USeries t_poly(std::vector<Rat> coeffs, int order)
{
    USeries r = USeries::zero(order);
    for (size_t q = 0; q < coeffs.size(); ++q)
        if (static_cast<int>(2 * q) < order)
            r.set_coeff(2 * q, Q3(coeffs[q]));
    return r;
}

// C(n, k) with the usual extension to negative n
Rat gen_binomial(long n, long k)
{
    if (k < 0)
        return 0;
    if (n >= 0)
        return Rat(binomial(n, k));
    Rat b(binomial(k - n - 1, k));
    return k % 2 ? Rat(-b) : b;
}

} // namespace

USeries sqrt_1m12t(int order)
{
    return series_sqrt(t_poly({1, -12}, order));
}

USeries c_squared(int order)
{
    USeries one_minus = USeries(1).truncated(order + 2) - sqrt_1m12t(order + 2);
    return (one_minus / USeries::monomial(Q3(6), 2)).truncated(order);
}

USeries c_series(int order)
{
    return series_sqrt(c_squared(order));
}

USeries phi(int m, int order)
{
    USeries s = sqrt_1m12t(order);
    USeries num = USeries(1).truncated(order) + s * Q3(m - 1);
    return c_squared(order).pow(m) * num / t_poly({1, -12}, order);
}

Rat r_coeff(int m, int i)
{
    Rat sum = 0;
    for (int j = 0; j <= m / 2; ++j) {
        Rat term = gen_binomial(m - j - 1, j) * Rat(binomial(2 * (m + i - j), m + i - j));
        sum += j % 2 ? Rat(-term) : term;
    }
    Rat p = Rat(Int(1) << (m + 2 * i));
    return p - sum / 2;
}

Rat r_coeff_direct(int m, int i)
{
    int order = 2 * i + 2;
    USeries s = c_squared(order).pow(m) / t_poly({1, -12}, order);
    Rat three_i = 1;
    for (int k = 0; k < i; ++k)
        three_i *= 3;
    return s.t_coeff(i) / three_i;
}

USeries phi_expanded(int m, int order)
{
    USeries out = USeries::zero(order);
    Rat three_n = 1;
    for (int n = 0; 2 * n < order; ++n, three_n *= 3) {
        Rat v = Rat(m) * r_coeff(m, n);
        Rat inner = 0;
        Rat three = 1;
        for (int i = n - 1; i >= 0; --i) {
            three *= 3; // 3^(n-i)
            int d = n - i;
            inner += r_coeff(m, i) * 2 * three / d * Rat(binomial(2 * (d - 1), d - 1));
        }
        v += Rat(1 - m) * inner;
        out.set_coeff(2 * n, Q3(v * three_n));
    }
    return out;
}

USeries genus1_ordinary(int m, int order)
{
    if (m < 0)
        throw std::invalid_argument("genus1_ordinary: m >= 0");
    Rat pre = Rat(factorial(2 * m + 1)) / (6 * Rat(factorial(m)) * Rat(factorial(m)));
    return phi(m, order) * Q3(pre);
}

USeries genus1_fullysimple(int m, int order)
{
    if (m < 1)
        throw std::invalid_argument("genus1_fullysimple: m >= 1");
    Rat pre = Rat(factorial(3 * m)) / (4 * Rat(factorial(m)) * Rat(factorial(2 * m - 1)));
    return (phi(3 * m + 1, order) * USeries::monomial(Q3(pre), 2 * m + 2)).truncated(order);
}

int bf_internal_vertices(int Q, const std::vector<int>& lengths)
{
    int L = 0;
    for (int k : lengths)
        L += k;
    int n = static_cast<int>(lengths.size());
    // Euler: V = 2 + E - F with E = L/2 + 2Q and F = n + Q; L boundary vertices are all distinct.
    return Q - L / 2 - n + 2;
}

Rat bf_alpha(int Q, const std::vector<int>& lengths)
{
    int L = 0;
    for (int k : lengths)
        L += k;
    if (L % 2)
        return 0;
    int v = bf_internal_vertices(Q, lengths);
    if (v < 0)
        return 0;
    int e = L / 2 + 2 * Q;
    if (e < 1)
        return 0;
    int p = Q - L / 2;
    Rat three = 1;
    for (int i = 0; i < (p < 0 ? -p : p); ++i)
        three *= 3;
    if (p < 0)
        three = 1 / three;
    return three * Rat(factorial(e - 1)) / (Rat(factorial(v)) * Rat(factorial(L + Q)));
}

Q3 bf_epsilon(int k)
{
    if (k < 1)
        throw std::invalid_argument("bf_epsilon: k >= 1");
    int l = k / 2;
    if (k % 2 == 0)
        return Q3(Rat(factorial(3 * l)) / (Rat(factorial(l)) * Rat(factorial(2 * l - 1))));
    return Q3(Rat(0), Rat(factorial(3 * l + 1)) / (Rat(factorial(l)) * Rat(factorial(2 * l))));
}

Q3 bernardi_fusy(int Q, const std::vector<int>& lengths)
{
    int L = 0, odd = 0;
    for (int k : lengths) {
        L += k;
        odd += k % 2;
    }
    if (L % 2)
        return Q3();
    Q3 r(bf_alpha(Q, lengths));
    for (int k : lengths)
        r *= bf_epsilon(k);
    if (odd % 2 == 0 && !r.is_rational())
        throw std::logic_error("bernardi_fusy: surd part survived an even number of odd lengths");
    return r;
}

USeries h11_closed(int order)
{
    USeries c2 = c_squared(order);
    return (c2.pow(3) * USeries::t()).truncated(order);
}

RationalForm tori1_closed(int order)
{
    // z^3 (tc^4 z^4 + z^2 (1 - 5tc^4) + tc^4) / (c (z^2-1)^5 (1 - 3tc^4)^2)
    USeries c = c_series(order + 2);
    USeries tc4 = (USeries::t() * c.pow(4)).truncated(order + 2);
    USeries one = USeries(1);
    ZPoly num;
    num.add_coeff(7, tc4);
    num.add_coeff(5, one - tc4 * Q3(5));
    num.add_coeff(3, tc4);
    ZPoly z2m1 = ZPoly::monomial(one, 2) - ZPoly(one);
    ZPoly den = z2m1.pow(5) * ZPoly(c * (one - tc4 * Q3(3)).pow(2));
    return RationalForm(num, den);
}

RationalForm tori2_closed(int order)
{
    // 3 t^2 c^9 z^5 [(3tc^4 - 2) z^4 + 3tc^4(9tc^4 - 1) z^2 - 27 t^3 c^12] / ((3tc^4 - z^2)^5 (1 - 3tc^4)^2)
    USeries c = c_series(order + 2);
    USeries t = USeries::t();
    USeries tc4 = (t * c.pow(4)).truncated(order + 2);
    USeries one = USeries(1);
    USeries pre = (t.pow(2) * c.pow(9) * Q3(3)).truncated(order + 2);
    ZPoly num;
    num.add_coeff(9, pre * (tc4 * Q3(3) - USeries(2)));
    num.add_coeff(7, pre * tc4 * Q3(3) * (tc4 * Q3(9) - one));
    num.add_coeff(5, -(pre * tc4.pow(3) * Q3(27)));
    ZPoly base = ZPoly(tc4 * Q3(3)) - ZPoly::monomial(one, 2);
    ZPoly den = base.pow(5) * ZPoly((one - tc4 * Q3(3)).pow(2));
    return RationalForm(num, den);
}

} // namespace fsm
