#include "fsm/bijection_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace fsm {

namespace {

using Poly = std::vector<USeries>; // power series in one variable, index = degree

Poly mul(const Poly& a, const Poly& b, int deg)
{
    Poly r(deg + 1, USeries());
    for (size_t i = 0; i < a.size() && static_cast<int>(i) <= deg; ++i) {
        if (a[i].coeffs().empty())
            continue;
        for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= deg; ++j)
            if (!b[j].coeffs().empty())
                r[i + j] += a[i] * b[j];
    }
    return r;
}

// 1/a for a[0] a unit
Poly inv(const Poly& a, int deg)
{
    if (a.empty() || !a[0].unit())
        throw std::domain_error("series inverse: constant term is not invertible");
    USeries a0 = a[0].inverse();
    Poly r(deg + 1, USeries());
    r[0] = a0;
    for (int n = 1; n <= deg; ++n) {
        USeries s;
        for (int j = 1; j <= n && j < static_cast<int>(a.size()); ++j)
            if (!a[j].coeffs().empty() && !r[n - j].coeffs().empty())
                s += a[j] * r[n - j];
        r[n] = -(s * a0);
    }
    return r;
}

Poly pw(const Poly& a, int k, int deg)
{
    Poly r(deg + 1, USeries());
    r[0] = USeries(1);
    Poly base = a;
    base.resize(deg + 1);
    while (k > 0) {
        if (k & 1)
            r = mul(r, base, deg);
        k >>= 1;
        if (k)
            base = mul(base, base, deg);
    }
    return r;
}

USeries at(const std::vector<USeries>& v, int i)
{
    return i >= 0 && i < static_cast<int>(v.size()) ? v[i] : USeries();
}

// e_{l,k} = [w^(k-1)] Y(w)^(l+1) X'(w), for 1 <= l, k <= cutoff
std::vector<std::vector<USeries>> e_table(const std::vector<USeries>& F, int cutoff)
{
    std::vector<USeries> H = fully_simple_disks(F, cutoff + 1);
    // Y = w (1 + sum y_j w^j)
    std::vector<USeries> a(cutoff + 3, USeries());
    for (int j = 2; j <= cutoff + 2; ++j)
        a[j] = at(F, j - 1);
    std::vector<USeries> Y = series_reversion(a, cutoff + 1);
    Poly unitY(cutoff + 1, USeries());
    for (int j = 0; j <= cutoff; ++j)
        unitY[j] = at(Y, j + 1);
    // w^2 X'(w) = -1 + sum_{k>=2} (k-1) H_k w^k
    Poly dX(cutoff + 1, USeries());
    dX[0] = USeries(-1);
    for (int k = 2; k <= cutoff; ++k)
        dX[k] = at(H, k) * Q3(k - 1);
    std::vector<std::vector<USeries>> e(cutoff + 1, std::vector<USeries>(cutoff + 1, USeries()));
    for (int l = 1; l <= cutoff; ++l) {
        Poly b = mul(pw(unitY, l + 1, cutoff), dX, cutoff);
        for (int k = l; k <= cutoff; ++k)
            e[l][k] = b[k - l];
    }
    return e;
}

CylinderTable empty_table(const std::string& kind, int cutoff)
{
    CylinderTable t;
    t.kind = kind;
    t.cutoff = cutoff;
    t.c.assign(cutoff + 1, std::vector<USeries>(cutoff + 1, USeries()));
    return t;
}

} // namespace

std::vector<USeries> series_reversion(const std::vector<USeries>& a, int cutoff)
{
    // Lagrange: [w^n] p^{-1}(w) = (1/n) [y^(n-1)] (y/p(y))^n
    Poly q(cutoff + 1, USeries());
    q[0] = USeries(1);
    for (int j = 2; j <= cutoff + 1; ++j)
        q[j - 1] = at(a, j);
    Poly phi = inv(q, cutoff);
    std::vector<USeries> out(cutoff + 1, USeries());
    Poly cur(cutoff + 1, USeries());
    cur[0] = USeries(1);
    for (int n = 1; n <= cutoff; ++n) {
        cur = mul(cur, phi, cutoff);
        out[n] = cur[n - 1] * Q3(Rat(1, n));
    }
    return out;
}

std::vector<USeries> ordinary_disks(const DiskCurve& curve, int l_max)
{
    std::vector<USeries> F(l_max + 1);
    F[0] = USeries(1);
    ZPoly wdx = curve.w_poly * curve.x_poly.derivative();
    ZPoly xl(USeries(1));
    for (int l = 1; l <= l_max; ++l) {
        xl *= curve.x_poly;
        F[l] = (xl * wdx).coeff(-1);
    }
    return F;
}

std::vector<USeries> fully_simple_disks(const std::vector<USeries>& F, int k_max)
{
    // p(y) = y (1 + sum F_l y^l); Y = p^{-1}; X = 1/Y
    std::vector<USeries> a(k_max + 3, USeries());
    for (int j = 2; j <= k_max + 2; ++j)
        a[j] = at(F, j - 1);
    std::vector<USeries> Y = series_reversion(a, k_max + 1);
    Poly unit(k_max + 1, USeries());
    for (int j = 0; j <= k_max; ++j)
        unit[j] = at(Y, j + 1);
    Poly r = inv(unit, k_max);
    std::vector<USeries> H(k_max + 1, USeries());
    H[0] = USeries(1);
    for (int k = 1; k <= k_max; ++k)
        H[k] = r[k];
    return H;
}

std::vector<USeries> ordinary_from_fully_simple(const std::vector<USeries>& H, int l_max)
{
    // 1/X(w) = w / (1 + sum H_k w^k); its inverse is W as a series in 1/x
    Poly d(l_max + 1, USeries());
    d[0] = USeries(1);
    for (int k = 1; k <= l_max; ++k)
        d[k] = at(H, k);
    Poly g = inv(d, l_max);
    std::vector<USeries> a(l_max + 2, USeries());
    for (int j = 2; j <= l_max + 1; ++j)
        a[j] = g[j - 1];
    std::vector<USeries> w = series_reversion(a, l_max + 1);
    std::vector<USeries> F(l_max + 1, USeries());
    F[0] = USeries(1);
    for (int l = 1; l <= l_max; ++l)
        F[l] = w[l + 1];
    return F;
}

bool CylinderTable::symmetric() const
{
    for (int i = 1; i <= cutoff; ++i)
        for (int j = i + 1; j <= cutoff; ++j)
            if (!(c[i][j] - c[j][i]).is_zero())
                return false;
    return true;
}

CylinderTable ordinary_cylinders(const DiskCurve& curve, int cutoff)
{
    CylinderTable t = empty_table("ordinary", cutoff);
    std::vector<ZPoly> P(cutoff + 1);
    P[0] = ZPoly(USeries(1));
    for (int l = 1; l <= cutoff; ++l)
        P[l] = P[l - 1] * curve.x_poly;
    for (int l1 = 1; l1 <= cutoff; ++l1)
        for (int l2 = l1; l2 <= cutoff; ++l2) {
            USeries r;
            for (int k = 1; k <= l1; ++k)
                r += P[l1].coeff(k) * P[l2].coeff(k) * Q3(k);
            t.c[l1][l2] = t.c[l2][l1] = r;
        }
    return t;
}

CylinderTable simple_cylinders(const std::vector<USeries>& F, const CylinderTable& F2, int cutoff)
{
    if (F2.cutoff < cutoff)
        throw std::invalid_argument("simple_cylinders: ordinary cylinder cutoff too small");
    auto e = e_table(F, cutoff);
    CylinderTable t = empty_table("simple", cutoff);
    // M[l1][k2] = sum_l2 F2[l1][l2] e[l2][k2]
    std::vector<std::vector<USeries>> M(cutoff + 1, std::vector<USeries>(cutoff + 1, USeries()));
    for (int l1 = 1; l1 <= cutoff; ++l1)
        for (int k2 = 1; k2 <= cutoff; ++k2)
            for (int l2 = 1; l2 <= k2; ++l2)
                if (!F2.c[l1][l2].coeffs().empty() && !e[l2][k2].coeffs().empty())
                    M[l1][k2] += F2.c[l1][l2] * e[l2][k2];
    for (int k1 = 1; k1 <= cutoff; ++k1)
        for (int k2 = 1; k2 <= cutoff; ++k2)
            for (int l1 = 1; l1 <= k1; ++l1)
                if (!M[l1][k2].coeffs().empty() && !e[l1][k1].coeffs().empty())
                    t.c[k1][k2] += e[l1][k1] * M[l1][k2];
    return t;
}

CylinderTable mixed_cylinders(const std::vector<USeries>& F, const CylinderTable& F2, int cutoff)
{
    if (F2.cutoff < cutoff)
        throw std::invalid_argument("mixed_cylinders: ordinary cylinder cutoff too small");
    auto e = e_table(F, cutoff);
    CylinderTable t = empty_table("mixed", cutoff);
    for (int k = 1; k <= cutoff; ++k)
        for (int l = 1; l <= cutoff; ++l)
            for (int l1 = 1; l1 <= k; ++l1)
                if (!F2.c[l1][l].coeffs().empty() && !e[l1][k].coeffs().empty())
                    t.c[k][l] -= F2.c[l1][l] * e[l1][k];
    return t;
}

CylinderTable fully_simple_cylinders(const CylinderTable& G2, const std::vector<USeries>& H, int cutoff)
{
    if (static_cast<int>(H.size()) <= 2 * cutoff)
        throw std::invalid_argument("fully_simple_cylinders: need H_k up to 2 * cutoff");
    int D = cutoff;
    using Bi = std::vector<std::vector<USeries>>;
    auto zero = [&] { return Bi(D + 1, std::vector<USeries>(D + 1, USeries())); };
    auto bmul = [&](const Bi& a, const Bi& b) {
        Bi r = zero();
        for (int i1 = 0; i1 <= D; ++i1)
            for (int j1 = 0; j1 <= D; ++j1) {
                if (a[i1][j1].coeffs().empty())
                    continue;
                for (int i2 = 0; i1 + i2 <= D; ++i2)
                    for (int j2 = 0; j1 + j2 <= D; ++j2)
                        if (!b[i2][j2].coeffs().empty())
                            r[i1 + i2][j1 + j2] += a[i1][j1] * b[i2][j2];
            }
        return r;
    };
    // A = w1 w2 sum_{k>=2} H_k h_{k-2}(w1, w2)
    Bi A = zero();
    for (int i = 0; i + 1 <= D; ++i)
        for (int j = 0; j + 1 <= D; ++j)
            A[i + 1][j + 1] = H[i + j + 2];
    // log(1 - A) = -sum A^n / n
    Bi L = zero(), P = A;
    for (int n = 1; n <= D; ++n) {
        for (int i = 0; i <= D; ++i)
            for (int j = 0; j <= D; ++j)
                if (!P[i][j].coeffs().empty())
                    L[i][j] -= P[i][j] * Q3(Rat(1, n));
        if (n < D)
            P = bmul(P, A);
    }
    CylinderTable t = empty_table("fully-simple", cutoff);
    for (int k1 = 1; k1 <= cutoff; ++k1)
        for (int k2 = 1; k2 <= cutoff; ++k2)
            t.c[k1][k2] = G2.c[k1][k2] + L[k1][k2] * Q3(k1 * k2);
    return t;
}

namespace {

ZPoly linear(const USeries& b)
{
    ZPoly l = ZPoly::z();
    l -= ZPoly(b);
    return l;
}

// sum over (b, k) of coeff / (z - b)^k
RationalForm pole_sum(const std::vector<std::pair<USeries, std::map<int, USeries>>>& parts)
{
    ZPoly den(USeries(1));
    std::vector<int> K;
    for (const auto& [b, m] : parts) {
        int k = m.empty() ? 0 : m.rbegin()->first;
        K.push_back(k);
        den *= linear(b).pow(k);
    }
    ZPoly num;
    for (size_t a = 0; a < parts.size(); ++a)
        for (const auto& [k, c] : parts[a].second) {
            ZPoly p(c);
            for (size_t b = 0; b < parts.size(); ++b)
                p *= linear(parts[b].first).pow(b == a ? K[b] - k : K[b]);
            num += p;
        }
    return RationalForm(num, den);
}

// f(z) dz pulled back along z = u^v s, with the common power of u cleared from the denominator.
RationalForm rescale(const RationalForm& f, int v)
{
    auto sc = [&](const ZPoly& p, int extra) {
        ZPoly r;
        for (int e = p.low(); e <= p.high(); ++e) {
            USeries c = p.coeff(e);
            if (!c.coeffs().empty())
                r.add_coeff(e, c.shifted(v * e + extra));
        }
        return r;
    };
    int sh = std::max({0, -f.num().low(), -f.den().low()});
    ZPoly d = sc(f.den().shifted(sh), 0);
    int m = USeries::exact_order;
    for (int e = d.low(); e <= d.high(); ++e)
        m = std::min(m, d.coeff(e).valuation());
    ZPoly dd;
    for (int e = d.low(); e <= d.high(); ++e)
        if (!d.coeff(e).coeffs().empty())
            dd.add_coeff(e, d.coeff(e).shifted(-m));
    ZPoly n = sc(f.num().shifted(sh), v);
    ZPoly nn;
    for (int e = n.low(); e <= n.high(); ++e)
        if (!n.coeff(e).coeffs().empty())
            nn.add_coeff(e, n.coeff(e).shifted(-m));
    return RationalForm(nn, dd);
}

} // namespace

PantsReport pants_identity_check(const DiskCurve& curve, int u_order)
{
    PantsReport rep;
    TopRec ord(curve, "ordinary", u_order);
    TopRec ex(curve, "exchanged", u_order);
    auto zo = ord.z_terms(0, 3);
    auto ze = ex.z_terms(0, 3);
    int prec = USeries::exact_order;
    for (const auto* m : {&zo, &ze})
        for (const auto& [k, c] : *m)
            prec = std::min(prec, c.prec());
    rep.u_order = prec;

    RationalForm g = RationalForm(ZPoly(USeries(1))) / (curve.x_of_z.derivative() * curve.w_of_z.derivative());
    RationalForm dg = g.derivative();
    RationalForm z1 = RationalForm(ZPoly::z());

    const std::vector<std::pair<Rat, Rat>> samples = {{Rat(2), Rat(5, 3)}, {Rat(-3), Rat(1, 2)}, {Rat(7, 5), Rat(-4)}};
    bool all = true;
    for (const auto& [s2, s3] : samples) {
        USeries z2 = USeries(s2), z3 = USeries(s3);
        std::vector<std::pair<USeries, std::map<int, USeries>>> parts;
        for (const auto& [tr, terms] : {std::make_pair(&ord, &zo), std::make_pair(&ex, &ze)}) {
            const Chart& ch = tr->chart();
            std::vector<std::map<int, USeries>> per(ch.branches.size());
            for (const auto& [key, c] : *terms) {
                USeries v = c;
                v /= (z2 - ch.branches[key[1].first].b_z).pow(key[1].second);
                v /= (z3 - ch.branches[key[2].first].b_z).pow(key[2].second);
                per[key[0].first][key[0].second] += v;
            }
            for (size_t a = 0; a < per.size(); ++a)
                parts.emplace_back(ch.branches[a].b_z, per[a]);
        }
        RationalForm lhs = pole_sum(parts);

        auto inv_pow = [&](const USeries& p, int k) { return RationalForm(ZPoly(USeries(1)), linear(p).pow(k)); };
        RationalForm rhs = (g * inv_pow(z2, 2) * inv_pow(z3, 2)).derivative();
        for (int i = 0; i < 2; ++i) {
            const USeries& zi = i == 0 ? z2 : z3;
            const USeries& zj = i == 0 ? z3 : z2;
            USeries gi = g.eval(zi), dgi = dg.eval(zi);
            USeries dij = zi - zj;
            USeries c2 = dij.pow(-2), c3 = dij.pow(-3);
            // d/dz_i [ g(z_i) (z_i - z1)^-2 (z_i - z_j)^-2 ], with (z_i - z1)^-2 = (z1 - z_i)^-2
            RationalForm term = inv_pow(zi, 2) * RationalForm(ZPoly(dgi * c2));
            term += inv_pow(zi, 3) * RationalForm(ZPoly(gi * c2 * Q3(2)));
            term -= inv_pow(zi, 2) * RationalForm(ZPoly(gi * c3 * Q3(2)));
            rhs += term;
        }
        bool ok = lhs.same_as(rhs);
        all = all && ok;
        ++rep.samples;
        if (!ok)
            rep.notes.push_back("mismatch at (z2, z3) = (" + s2.get_str() + ", " + s3.get_str() + ")");
    }
    rep.identical = all;

    // Residues of g(z) prod (z - z_i)^-2 dz over all poles sum to zero.
    {
        RationalForm f = g;
        for (const Rat& zi : {Rat(3, 2), Rat(2), Rat(5, 3)})
            f *= RationalForm(ZPoly(USeries(1)), linear(USeries(zi)).pow(2));
        USeries total = z_residue(f, std::nullopt);
        for (const Rat& p : {Rat(1), Rat(-1), Rat(3, 2), Rat(2), Rat(5, 3)})
            total += z_residue(f, USeries(p).truncated(prec));
        const Chart& ch = ex.chart();
        RationalForm fs = rescale(f, ch.coord_scale);
        for (const auto& br : ch.branches)
            total += z_residue(fs, br.b);
        rep.residue_sum_zero = total.is_zero();
        if (!rep.residue_sum_zero)
            rep.notes.push_back("residue sum: " + total.str());
    }
    return rep;
}

} // namespace fsm
