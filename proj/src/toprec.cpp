#include "fsm/toprec.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace fsm {

int pole_order_cap(int g, int n) { return 6 * g - 4 + 2 * n + 2; }

int Amplitude::max_pole_order() const
{
    int m = 0;
    for (const auto& [key, c] : terms)
        for (const auto& [b, k] : key)
            m = std::max(m, k);
    return m;
}

bool Amplitude::symmetric() const
{
    for (const auto& [key, c] : terms) {
        PoleKey p = key;
        std::sort(p.begin(), p.end());
        do {
            auto it = terms.find(p);
            USeries other = it == terms.end() ? USeries() : it->second;
            if (!(c - other).is_zero())
                return false;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return true;
}

// Expansions around one branch point, to absolute zeta-precision prec.
struct TopRec::Local {
    int a = 0;
    int prec = 0;     // factor expansions
    int kprec = 0;    // kernel expansions
    Laurent iota, diota;
    Laurent kden;     // 1 / (2 (y(z) - y(sigma z)) x'(z))
    Laurent self_bergman;
    std::map<std::pair<int, int>, Laurent> at_z, at_sigma;
    std::vector<Laurent> kernel; // index m >= 1
};

TopRec::TopRec(const DiskCurve& curve, const std::string& role, int u_order) : curve_(curve), u_order_(u_order)
{
    if (role == "ordinary")
        chart_ = ordinary_chart(curve, 4);
    else if (role == "exchanged")
        chart_ = exchanged_chart(curve, 4);
    else
        throw std::invalid_argument("TopRec: unknown role '" + role + "'");
    if (chart_.branches.empty())
        throw std::domain_error("TopRec: projection has no branch points");
}

TopRec::Local& TopRec::local(int branch, int depth)
{
    auto key = std::make_pair(branch, depth);
    auto it = locals_.find(key);
    if (it != locals_.end())
        return *it->second;
    auto L = std::make_shared<Local>();
    L->a = branch;
    L->prec = depth;
    L->kprec = depth + 1;
    const auto& br = chart_.branches[branch];
    int dorder = 2 * depth + 8;
    LocalDeck deck = local_deck(chart_.x, br.b, dorder);
    L->iota = deck.iota;
    L->diota = L->iota.derivative();
    Laurent zeta = Laurent::variable();
    int P = dorder;

    Laurent ys = chart_.y.expand_at(br.b, P);
    Laurent xs = chart_.x.expand_at(br.b, P + 1);
    Laurent dy = ys - ys.compose(L->iota);
    Laurent dx = xs.derivative();
    Laurent den = dy * dx;
    den *= USeries(2);
    L->kden = den.inverse();

    for (int m = 1; m <= depth + 2; ++m) {
        if (static_cast<int>(L->kernel.size()) <= m)
            L->kernel.resize(m + 1);
        Laurent num = zeta.pow(m) - L->iota.pow(m);
        L->kernel[m] = num.truncated(P) * L->kden;
    }
    Laurent d = zeta - L->iota;
    L->self_bergman = L->diota * d.pow(-2);
    locals_[key] = L;
    return *L;
}

namespace {

struct Partial {
    // key over the free labels (index = label - 1); unset entries are (-1, 0)
    std::map<PoleKey, Laurent> terms;
};

Laurent basis_at(TopRec& tr, const Chart& ch, int a, int c, int k, bool sigma, const Laurent& iota, const Laurent& diota,
                 int prec)
{
    (void)tr;
    if (c == a) {
        if (!sigma)
            return Laurent::monomial(USeries(1), -k);
        return (iota.pow(-k) * diota).truncated(prec);
    }
    USeries delta = ch.branches[a].b - ch.branches[c].b;
    Laurent base = (Laurent(delta) + Laurent::variable()).truncated(prec + k + 2);
    Laurent f = base.pow(-k);
    if (!sigma)
        return f.truncated(prec);
    return (f.compose(iota) * diota).truncated(prec);
}

void merge_into(std::map<PoleKey, Laurent>& acc, const Partial& p, const Partial& q, int prec)
{
    for (const auto& [k1, s1] : p.terms)
        for (const auto& [k2, s2] : q.terms) {
            PoleKey k = k1;
            for (size_t i = 0; i < k.size(); ++i)
                if (k2[i].first >= 0)
                    k[i] = k2[i];
            Laurent prod = (s1 * s2).truncated(prec);
            auto it = acc.find(k);
            if (it == acc.end())
                acc.emplace(k, prod);
            else
                it->second += prod;
        }
}

} // namespace

const Amplitude& TopRec::amplitude(int g, int n)
{
    if (2 * g - 2 + n <= 0)
        throw std::invalid_argument("TopRec: amplitude needs 2g - 2 + n > 0");
    auto key = std::make_pair(g, n);
    auto it = cache_.find(key);
    if (it != cache_.end())
        return it->second;
    // fill dependencies in increasing 2g - 2 + n
    if (g >= 1 && 2 * (g - 1) - 2 + (n + 1) > 0)
        amplitude(g - 1, n + 1);
    for (int h = 0; h <= g; ++h)
        for (int m = 1; m <= n; ++m)
            if (2 * h - 2 + m > 0 && (h < g || m < n))
                amplitude(h, m);
    Amplitude a = compute(g, n);
    return cache_.emplace(key, std::move(a)).first->second;
}

Amplitude TopRec::compute(int g, int np)
{
    int n = np - 1; // free labels 1..n
    int nb = static_cast<int>(chart_.branches.size());

    // bracket pieces: (amplitude or bergman) evaluated at z and sigma(z)
    struct Piece {
        int h, m;      // genus and number of slots
        unsigned mask; // labels bound to the remaining slots
    };
    struct Term {
        bool self = false; // omega_{g-1,n+2}(z, sigma z, J)
        Piece p, q;
    };
    std::vector<Term> terms;
    auto pole = [&](int h, int m) {
        if (h == 0 && m == 2)
            return 0;
        return cache_.at({h, m}).max_pole_order();
    };
    int vb = 0;
    unsigned full = (1u << n) - 1;
    if (g >= 1) {
        Term t;
        t.self = true;
        t.p = {g - 1, n + 2, full};
        terms.push_back(t);
        vb = std::max(vb, (g - 1 == 0 && n == 0) ? 2 : 2 * pole(g - 1, n + 2));
    }
    for (int h = 0; h <= g; ++h)
        for (unsigned I = 0; I <= full; ++I) {
            if ((h == 0 && I == 0) || (h == g && I == full))
                continue;
            int m1 = 1 + __builtin_popcount(I), m2 = 1 + __builtin_popcount(full & ~I);
            Term t;
            t.p = {h, m1, I};
            t.q = {g - h, m2, full & ~I};
            terms.push_back(t);
            vb = std::max(vb, pole(h, m1) + pole(g - h, m2));
        }
    int A = vb + 1;
    int M = vb + 1;

    Amplitude out;
    out.g = g;
    out.n = np;
    out.role = chart_.role;

    for (int a = 0; a < nb; ++a) {
        Local& L = local(a, A + std::max(vb, 2));
        auto basis = [&](int c, int k, bool sigma) -> const Laurent& {
            auto& cache = sigma ? L.at_sigma : L.at_z;
            auto key = std::make_pair(c, k);
            auto f = cache.find(key);
            if (f != cache.end())
                return f->second;
            return cache.emplace(key, basis_at(*this, chart_, a, c, k, sigma, L.iota, L.diota, L.prec)).first->second;
        };
        auto partial = [&](const Piece& p, bool sigma) {
            Partial out;
            PoleKey blank(n, {-1, 0});
            std::vector<int> labels;
            for (int i = 0; i < n; ++i)
                if (p.mask & (1u << i))
                    labels.push_back(i);
            if (p.h == 0 && p.m == 2) {
                // B(z, z_i) = sum_j (j+1) zeta^j dz_i/(z_i - b)^(j+2)
                int i = labels.at(0);
                Laurent pw = sigma ? L.iota : Laurent::variable();
                Laurent cur(USeries(1));
                for (int j = 0; j < A; ++j) {
                    PoleKey k = blank;
                    k[i] = {a, j + 2};
                    Laurent s = cur;
                    s *= USeries(j + 1);
                    if (sigma)
                        s = s * L.diota;
                    out.terms[k] = s.truncated(A);
                    cur = (cur * pw).truncated(A + 2);
                }
                return out;
            }
            const Amplitude& amp = cache_.at({p.h, p.m});
            for (const auto& [key, c] : amp.terms) {
                PoleKey k = blank;
                for (size_t s = 1; s < key.size(); ++s)
                    k[labels[s - 1]] = key[s];
                Laurent v = basis(key[0].first, key[0].second, sigma);
                v *= c;
                auto f = out.terms.find(k);
                if (f == out.terms.end())
                    out.terms.emplace(k, v);
                else
                    f->second += v;
            }
            return out;
        };

        std::map<PoleKey, Laurent> bracket;
        for (const auto& t : terms) {
            if (t.self) {
                if (t.p.h == 0 && t.p.m == 2) {
                    bracket[PoleKey()] += L.self_bergman;
                    continue;
                }
                const Amplitude& amp = cache_.at({t.p.h, t.p.m});
                PoleKey blank(n, {-1, 0});
                for (const auto& [key, c] : amp.terms) {
                    PoleKey k = blank;
                    for (size_t s = 2; s < key.size(); ++s)
                        k[s - 2] = key[s];
                    Laurent v = (basis(key[0].first, key[0].second, false) * basis(key[1].first, key[1].second, true))
                                    .truncated(A);
                    v *= c;
                    auto f = bracket.find(k);
                    if (f == bracket.end())
                        bracket.emplace(k, v);
                    else
                        f->second += v;
                }
                continue;
            }
            merge_into(bracket, partial(t.p, false), partial(t.q, true), A);
        }

        for (const auto& [key, s] : bracket) {
            int vs = s.valuation();
            if (vs >= s.prec())
                continue;
            for (int m = 1; m <= M; ++m) {
                const Laurent& K = L.kernel.at(m);
                int vk = K.valuation();
                USeries r;
                bool any = false;
                for (int e = vk; e <= -1 - vs; ++e) {
                    USeries kc = K.coeff(e);
                    if (kc.coeffs().empty())
                        continue;
                    USeries sc = s.coeff(-1 - e);
                    if (sc.coeffs().empty())
                        continue;
                    r += kc * sc;
                    any = true;
                }
                if (!any || r.is_zero())
                    continue;
                PoleKey k;
                k.push_back({a, m + 1});
                k.insert(k.end(), key.begin(), key.end());
                out.terms[k] += r;
            }
        }
    }
    for (auto it = out.terms.begin(); it != out.terms.end();) {
        if (it->second.is_zero())
            it = out.terms.erase(it);
        else
            ++it;
    }
    if (out.max_pole_order() > pole_order_cap(g, np))
        throw std::runtime_error("TopRec: pole-order cap exceeded for (" + std::to_string(g) + "," + std::to_string(np) + ")");
    return out;
}

std::map<PoleKey, USeries> TopRec::z_terms(int g, int n)
{
    const Amplitude& a = amplitude(g, n);
    std::map<PoleKey, USeries> out;
    int base = chart_.form_scale * (2 * g - 2 + n);
    for (const auto& [key, c] : a.terms) {
        int sh = base;
        for (const auto& [b, k] : key)
            sh += chart_.coord_scale * (k - 1);
        out[key] = c.shifted(sh);
    }
    return out;
}

RationalForm TopRec::as_rational_form(int g)
{
    auto terms = z_terms(g, 1);
    int nb = static_cast<int>(chart_.branches.size());
    std::vector<int> K(nb, 0);
    for (const auto& [key, c] : terms)
        K[key[0].first] = std::max(K[key[0].first], key[0].second);
    std::vector<ZPoly> lin;
    for (int a = 0; a < nb; ++a) {
        ZPoly l = ZPoly::z();
        l -= ZPoly(chart_.branches[a].b_z);
        lin.push_back(l);
    }
    ZPoly den(USeries(1));
    for (int a = 0; a < nb; ++a)
        den *= lin[a].pow(K[a]);
    ZPoly num;
    for (const auto& [key, c] : terms) {
        int a = key[0].first, k = key[0].second;
        ZPoly p(c);
        for (int b = 0; b < nb; ++b)
            p *= lin[b].pow(b == a ? K[b] - k : K[b]);
        num += p;
    }
    return RationalForm(num, den);
}

std::vector<Rat> t_table(const USeries& s, int q_max)
{
    std::vector<Rat> out;
    for (int q = 0; q <= q_max; ++q) {
        Q3 odd = 2 * q + 1 < s.prec() ? s.coeff(2 * q + 1) : Q3();
        if (!odd.is_zero())
            throw std::domain_error("t_table: odd power of u in a count");
        out.push_back(s.t_coeff(q));
    }
    return out;
}

namespace {

USeries inf_residue(const std::vector<USeries>& P, int P_low, const USeries& b, int k, bool negate)
{
    // -sum_j C(k+j-1, j) b^j P[k+j-1]  with P indexed from P_low
    USeries r;
    USeries bj(1);
    int hi = P_low + static_cast<int>(P.size()) - 1;
    for (int j = 0; k + j - 1 <= hi; ++j) {
        int e = k + j - 1;
        if (e >= P_low && !P[e - P_low].coeffs().empty())
            r += P[e - P_low] * bj * Q3(Rat(binomial(k + j - 1, j)));
        bj *= b;
    }
    return negate ? -r : r;
}

} // namespace

USeries ordinary_series(TopRec& tr, int g, const std::vector<int>& lengths)
{
    const Chart& ch = tr.chart();
    if (ch.role != "ordinary")
        throw std::invalid_argument("ordinary_series: needs the ordinary recursion");
    const DiskCurve& cv = tr.curve();
    int n = static_cast<int>(lengths.size());
    for (int l : lengths)
        if (l < 1)
            throw std::invalid_argument("ordinary_series: lengths must be positive");
    if (g == 0 && n == 1) {
        ZPoly f = cv.x_poly.pow(lengths[0]) * cv.w_poly * cv.x_poly.derivative();
        return f.coeff(-1);
    }
    if (g == 0 && n == 2) {
        // B - dx dx/(x - x)^2 = dz1 dz2 / (z1 z2 - 1)^2 for x = alpha + gamma (z + 1/z)
        ZPoly p1 = cv.x_poly.pow(lengths[0]), p2 = cv.x_poly.pow(lengths[1]);
        USeries r;
        for (int k = 1; k <= std::min(p1.high(), p2.high()); ++k)
            r += p1.coeff(k) * p2.coeff(k) * Q3(k);
        return r;
    }
    const Amplitude& amp = tr.amplitude(g, n);
    std::vector<std::vector<USeries>> P(n);
    std::vector<int> low(n);
    for (int i = 0; i < n; ++i) {
        ZPoly p = cv.x_poly.pow(lengths[i]);
        low[i] = p.low();
        for (int e = p.low(); e <= p.high(); ++e)
            P[i].push_back(p.coeff(e));
    }
    std::map<std::tuple<int, int, int>, USeries> memo;
    USeries total;
    for (const auto& [key, c] : amp.terms) {
        USeries prod = c;
        for (int i = 0; i < n; ++i) {
            auto mk = std::make_tuple(i, key[i].first, key[i].second);
            auto it = memo.find(mk);
            if (it == memo.end())
                it = memo.emplace(mk, inf_residue(P[i], low[i], ch.branches[key[i].first].b, key[i].second, true)).first;
            prod *= it->second;
        }
        total += prod;
    }
    return n % 2 ? -total : total;
}

USeries fullysimple_series(TopRec& tr, int g, const std::vector<int>& lengths)
{
    const Chart& ch = tr.chart();
    if (ch.role != "exchanged")
        throw std::invalid_argument("fullysimple_series: needs the exchanged recursion");
    int n = static_cast<int>(lengths.size());
    if (2 * g - 2 + n <= 0)
        throw std::invalid_argument("fullysimple_series: unstable (g,n) are handled by the series bijections");
    const Amplitude& amp = tr.amplitude(g, n);
    // chart projection: what(s) = s^-1 h(1/s)
    const ZPoly& w = ch.x.num();
    int J = -w.low();
    int sumk = 0, kmax = 0;
    for (int k : lengths) {
        if (k < 1)
            throw std::invalid_argument("fullysimple_series: lengths must be positive");
        sumk += k;
        kmax = std::max(kmax, k);
    }
    Laurent h = Laurent::zero(kmax + 2);
    for (int j = 1; j <= J; ++j)
        h.add_coeff(j - 1, w.coeff(-j));
    std::map<int, std::vector<USeries>> hk; // coefficients of h^-k in y = 1/s
    for (int k : lengths)
        if (!hk.count(k)) {
            Laurent inv = h.truncated(k + 2).pow(-k);
            std::vector<USeries> v;
            for (int i = 0; i <= k + 1; ++i)
                v.push_back(inv.coeff(i));
            hk[k] = v;
        }
    std::map<std::tuple<int, int, int>, USeries> memo;
    auto rh = [&](int k, int a, int m) {
        auto mk = std::make_tuple(k, a, m);
        auto it = memo.find(mk);
        if (it != memo.end())
            return it->second;
        // Res_{s=inf} s^k h(1/s)^-k ds/(s-b)^m = -sum_{i+j=k-m+1} C(m+j-1,j) b^j H_i
        USeries r;
        const USeries& b = ch.branches[a].b;
        USeries bj(1);
        for (int j = 0; j <= k - m + 1; ++j) {
            int i = k - m + 1 - j;
            r += hk[k][i] * bj * Q3(Rat(binomial(m + j - 1, j)));
            bj *= b;
        }
        r = -r;
        memo.emplace(mk, r);
        return r;
    };
    USeries total;
    for (const auto& [key, c] : amp.terms) {
        USeries prod = c;
        for (int i = 0; i < n; ++i)
            prod *= rh(lengths[i], key[i].first, key[i].second);
        total += prod;
    }
    int v = ch.coord_scale;
    return total.shifted(v * sumk + ch.form_scale * (2 * g - 2 + n));
}

std::vector<Rat> extract_ordinary(TopRec& tr, int g, const std::vector<int>& lengths, int q_max)
{
    return t_table(ordinary_series(tr, g, lengths), q_max);
}

std::vector<Rat> extract_fullysimple(TopRec& tr, int g, const std::vector<int>& lengths, int q_max)
{
    return t_table(fullysimple_series(tr, g, lengths), q_max);
}

} // namespace fsm
