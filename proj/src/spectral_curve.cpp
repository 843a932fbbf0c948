#include "fsm/spectral_curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace fsm {

Potential Potential::quadrangulation(int prec)
{
    Potential p;
    p.t[4] = USeries::t(prec);
    return p;
}

bool Potential::even() const
{
    for (const auto& [d, td] : t)
        if (d % 2 == 1 && !td.coeffs().empty())
            return false;
    return true;
}

namespace {

ZPoly x_of(const USeries& alpha, const USeries& gamma)
{
    ZPoly x = ZPoly(alpha);
    x.add_coeff(1, gamma);
    x.add_coeff(-1, gamma);
    return x;
}

ZPoly vprime(const Potential& pot, const ZPoly& x)
{
    ZPoly r = x;
    for (const auto& [d, td] : pot.t)
        r -= ZPoly(td) * x.pow(d - 1);
    return r;
}

} // namespace

DiskCurve solve_disk_curve(const Potential& potential, int order)
{
    if (order < 1)
        throw std::invalid_argument("solve_disk_curve: order must be positive");
    for (const auto& [d, td] : potential.t) {
        if (d < 1)
            throw std::invalid_argument("solve_disk_curve: degrees must be >= 1");
        if (d >= 2 && td.valuation() < 1)
            throw std::invalid_argument("solve_disk_curve: weight t_" + std::to_string(d) + " is not formal");
    }
    DiskCurve c;
    c.potential = potential;
    c.order = order;
    c.alpha = USeries::zero(order);
    c.gamma = USeries(1).truncated(order);
    for (int it = 0; it <= order + 1; ++it) {
        ZPoly x = x_of(c.alpha, c.gamma);
        USeries a = USeries::zero(order), s = USeries::zero(order);
        for (const auto& [d, td] : potential.t) {
            ZPoly p = x.pow(d - 1);
            a += td * p.coeff(0);
            s += td * p.coeff(-1);
        }
        USeries g = (s + series_sqrt(s * s + USeries(4))) * Q3(make_rat(1, 2));
        bool done = a.agrees_with(c.alpha) && g.agrees_with(c.gamma) && it > 0;
        c.alpha = a.truncated(order);
        c.gamma = g.truncated(order);
        if (done)
            break;
    }
    c.x_poly = x_of(c.alpha, c.gamma);
    ZPoly vp = vprime(potential, c.x_poly);
    // [z^0] V'(x(z)) = 0 and [z^-1] V'(x(z)) = 1/gamma
    if (!vp.coeff(0).is_zero() || !(vp.coeff(-1) * c.gamma - USeries(1)).is_zero())
        throw std::runtime_error("solve_disk_curve: non-invertible linearization (no convergence)");
    c.w_poly = vp.negative_part();
    c.x_of_z = RationalForm(c.x_poly);
    c.w_of_z = RationalForm(c.w_poly);
    return c;
}

namespace {

std::vector<Q3> deflate(const std::vector<Q3>& p, const Q3& r)
{
    // synthetic division by (s - r)
    int n = static_cast<int>(p.size()) - 1;
    std::vector<Q3> q(n);
    Q3 acc;
    for (int i = n; i >= 1; --i) {
        acc = acc * r + p[i];
        q[i - 1] = acc;
    }
    return q;
}

Q3 peval(const std::vector<Q3>& p, const Q3& s)
{
    Q3 acc;
    for (size_t i = p.size(); i-- > 0;)
        acc = acc * s + p[i];
    return acc;
}

std::vector<Int> divisors(Int n)
{
    n = abs(n);
    std::vector<Int> d;
    if (n == 0)
        return d;
    for (Int i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            d.push_back(i);
            if (i * i != n)
                d.push_back(n / i);
        }
    return d;
}

bool rational_root(const std::vector<Rat>& p, Rat& out)
{
    // rational root theorem on the integer-scaled polynomial
    Int l = 1;
    for (const auto& c : p)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> ip;
    for (const auto& c : p)
        ip.push_back(Int(c * l));
    size_t lo = 0;
    while (lo < ip.size() && ip[lo] == 0)
        ++lo;
    if (lo > 0) {
        out = 0;
        return true;
    }
    auto num = divisors(ip.front()), den = divisors(ip.back());
    for (const auto& a : num)
        for (const auto& b : den)
            for (int sg : {1, -1}) {
                Rat r(sg * a, b);
                r.canonicalize();
                Rat acc = 0;
                for (size_t i = p.size(); i-- > 0;)
                    acc = acc * r + p[i];
                if (acc == 0) {
                    out = r;
                    return true;
                }
            }
    return false;
}

} // namespace

std::vector<Q3> q3_roots(std::vector<Q3> p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
    std::vector<Q3> roots;
    while (p.size() > 1) {
        int deg = static_cast<int>(p.size()) - 1;
        if (deg == 1) {
            roots.push_back(-p[0] / p[1]);
            break;
        }
        if (deg == 2) {
            Q3 disc = p[1] * p[1] - Q3(4) * p[0] * p[2];
            Q3 sq;
            if (!q3_sqrt(disc, sq))
                throw std::domain_error("q3_roots: root not in Q(sqrt3)");
            Q3 inv = (Q3(2) * p[2]).inverse();
            roots.push_back((-p[1] + sq) * inv);
            roots.push_back((-p[1] - sq) * inv);
            break;
        }
        bool rational = std::all_of(p.begin(), p.end(), [](const Q3& c) { return c.is_rational(); });
        if (!rational)
            throw std::domain_error("q3_roots: cannot factor a high-degree polynomial with sqrt3 coefficients");
        std::vector<Rat> rp;
        for (const auto& c : p)
            rp.push_back(c.rational_part());
        Rat r;
        Q3 root;
        bool found = false;
        if (rational_root(rp, r)) {
            root = Q3(r);
            found = true;
        } else {
            // s = r sqrt3: even and odd parts must vanish together
            std::vector<Rat> e(rp.size()), o(rp.size());
            Rat pw3 = 1;
            for (size_t i = 0; i < rp.size(); ++i) {
                if (i % 2 == 0)
                    e[i] = rp[i] * pw3;
                else
                    o[i] = rp[i] * pw3;
                if (i % 2 == 1)
                    pw3 *= 3;
            }
            // r must be a root of both; candidates from e (scaled), then verify
            std::vector<Rat> cand = e;
            bool ezero = std::all_of(e.begin(), e.end(), [](const Rat& x) { return sgn(x) == 0; });
            if (ezero)
                cand = o;
            while (!cand.empty() && sgn(cand.back()) == 0)
                cand.pop_back();
            if (rational_root(cand, r) && peval(p, Q3(Rat(0), r)).is_zero()) {
                root = Q3(Rat(0), r);
                found = true;
            }
        }
        if (!found)
            throw std::domain_error("q3_roots: root not expressible in Q(sqrt3)");
        roots.push_back(root);
        p = deflate(p, root);
    }
    return roots;
}

namespace {

struct WChart {
    int v = 0;
    ZPoly what;  // u^v w(u^v s)
    ZPoly xhat;  // u^v x(u^v s)
};

WChart w_chart(const DiskCurve& curve)
{
    const ZPoly& w = curve.w_poly;
    int J = -w.low();
    WChart ch;
    if (J <= 1)
        return ch;
    int vJ = w.coeff(-J).valuation();
    int v1 = w.coeff(-1).valuation();
    if (v1 != 0)
        throw std::domain_error("w_branch_points: leading coefficient of w is not a unit");
    if ((vJ - v1) % (J - 1) != 0)
        throw std::domain_error("w_branch_points: fractional u-valuation of branch points");
    int v = (vJ - v1) / (J - 1);
    for (int j = 1; j <= J; ++j) {
        USeries wj = w.coeff(-j);
        if (wj.coeffs().empty())
            continue;
        if (wj.valuation() < v * (j - 1))
            throw std::domain_error("w_branch_points: branch points of different u-valuations");
    }
    ch.v = v;
    for (int j = 1; j <= J; ++j)
        ch.what.add_coeff(-j, w.coeff(-j).shifted(v - v * j));
    ch.xhat.add_coeff(0, curve.alpha.shifted(v));
    ch.xhat.add_coeff(1, curve.gamma.shifted(2 * v));
    ch.xhat.add_coeff(-1, curve.gamma);
    return ch;
}

std::vector<USeries> chart_roots(const WChart& ch)
{
    std::vector<USeries> out;
    const ZPoly& w = ch.what;
    int J = -w.low();
    if (J <= 1)
        return out;
    // P(s) = s^(J+1) w'(s), a polynomial of degree J - 1
    ZPoly P = w.derivative().shifted(J + 1);
    ZPoly dP = P.derivative();
    std::vector<Q3> p0;
    for (int e = 0; e <= J - 1; ++e) {
        USeries c = P.coeff(e);
        p0.push_back(c.coeffs().empty() ? Q3() : c.coeff(0));
    }
    for (const Q3& r0 : q3_roots(p0)) {
        if (r0.is_zero())
            throw std::domain_error("w_branch_points: degenerate seed");
        USeries s(r0);
        int prec = P.min_prec();
        s = s.truncated(prec);
        for (int it = 0; it < 2 * prec + 4; ++it) {
            USeries d = dP.eval(s);
            if (!d.unit())
                throw std::domain_error("w_branch_points: multiple zero of dw");
            USeries next = s - P.eval(s) / d;
            bool done = next.agrees_with(s) && next.prec() == s.prec();
            s = next;
            if (done)
                break;
        }
        out.push_back(s);
    }
    return out;
}

} // namespace

std::vector<USeries> w_branch_points(const DiskCurve& curve)
{
    WChart ch = w_chart(curve);
    std::vector<USeries> out;
    for (const auto& s : chart_roots(ch))
        out.push_back(s.shifted(ch.v));
    return out;
}

LocalDeck local_deck(const RationalForm& f, const USeries& b, int zeta_order)
{
    if (zeta_order < 2)
        throw std::invalid_argument("local_deck: zeta_order must be >= 2");
    LocalDeck d;
    d.b = b;
    d.b_z = b;
    d.order = zeta_order;
    int N = zeta_order + 2;
    Laurent F = f.expand_at(b, N + 1);
    F -= Laurent(F.coeff(0));
    // the linear coefficient vanishes to precision at a critical point
    if (!F.coeff(1).is_zero())
        throw std::domain_error("local_deck: b is not a critical point");
    Laurent G = Laurent::zero(N + 1);
    for (int e = 2; e <= N; ++e)
        G.add_coeff(e, F.coeff(e));
    USeries w2 = G.coeff(2);
    if (!w2.unit())
        throw std::domain_error("local_deck: second derivative not invertible at leading u-order");
    USeries inv = (w2 * Q3(2)).inverse();
    Laurent zeta = Laurent::variable();
    Laurent target = G.compose(zeta.truncated(N + 1));
    Laurent eta = -zeta;
    for (int m = 2; m <= zeta_order; ++m) {
        Laurent r = G.compose(eta.truncated(m + 2)) - target;
        USeries rm = r.coeff(m + 1);
        eta.add_coeff(m, rm * inv);
    }
    d.iota = eta.truncated(zeta_order + 1);
    return d;
}

LocalDeck local_deck(const DiskCurve& curve, const USeries& b, int zeta_order)
{
    int v = b.valuation();
    if (v == 0)
        return local_deck(curve.w_of_z, b, zeta_order);
    WChart ch = w_chart(curve);
    if (ch.v != v)
        throw std::domain_error("local_deck: point is not a branch point of w");
    LocalDeck d = local_deck(RationalForm(ch.what), b.shifted(-v), zeta_order);
    d.b_z = b;
    d.scale = v;
    return d;
}

Chart ordinary_chart(const DiskCurve& curve, int zeta_order)
{
    Chart c;
    c.role = "ordinary";
    c.x = curve.x_of_z;
    c.y = curve.w_of_z;
    c.order = curve.order;
    for (int s : {1, -1}) {
        USeries b = USeries(s).truncated(curve.order);
        c.branches.push_back(local_deck(c.x, b, zeta_order));
    }
    return c;
}

Chart exchanged_chart(const DiskCurve& curve, int zeta_order)
{
    WChart ch = w_chart(curve);
    Chart c;
    c.role = "exchanged";
    c.x = RationalForm(ch.what);
    c.y = RationalForm(ch.xhat);
    c.coord_scale = ch.v;
    c.form_scale = 2 * ch.v;
    c.order = curve.order;
    for (const auto& s : chart_roots(ch)) {
        LocalDeck d = local_deck(c.x, s, zeta_order);
        d.b_z = s.shifted(ch.v);
        d.scale = ch.v;
        c.branches.push_back(d);
    }
    return c;
}

} // namespace fsm
