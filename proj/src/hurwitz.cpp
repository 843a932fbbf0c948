#include "fsm/hurwitz.hpp"

#include "fsm/map_oracle.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fsm {

// ---------------------------------------------------------------- partitions

Partition::Partition(std::vector<int> p) : parts(std::move(p))
{
    for (int x : parts)
        if (x < 1)
            throw std::invalid_argument("Partition: parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int Partition::size() const
{
    int s = 0;
    for (int x : parts)
        s += x;
    return s;
}

Int Partition::aut() const
{
    Int r = 1;
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        long m = static_cast<long>(j - i);
        r *= factorial(m);
        for (long c = 0; c < m; ++c)
            r *= parts[i];
        i = j;
    }
    return r;
}

Int Partition::class_size() const
{
    return factorial(size()) / aut();
}

std::string Partition::str() const
{
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i)
        s += (i ? "," : "") + std::to_string(parts[i]);
    return s;
}

Partition parse_partition(const std::string& s)
{
    std::vector<int> p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            continue;
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument("parse_partition: bad part '" + tok + "'");
        p.push_back(v);
    }
    return Partition(p);
}

std::vector<Partition> partitions(int L)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxp) {
        if (rest == 0) {
            Partition p;
            p.parts = cur;
            out.push_back(p);
            return;
        }
        for (int x = std::min(rest, maxp); x >= 1; --x) {
            cur.push_back(x);
            rec(rest - x, x);
            cur.pop_back();
        }
    };
    rec(L, L);
    return out;
}

// ---------------------------------------------------------------- characters

namespace {

std::mutex char_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, Int> char_memo;
std::map<int, CharTable> tables;

Int mn_rec(const std::vector<int>& lam, const std::vector<int>& cls)
{
    if (cls.empty())
        return lam.empty() ? Int(1) : Int(0);
    auto key = std::make_pair(lam, cls);
    auto it = char_memo.find(key);
    if (it != char_memo.end())
        return it->second;
    int r = cls.front();
    std::vector<int> rest(cls.begin() + 1, cls.end());
    int l = static_cast<int>(lam.size());
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i)
        beta[i] = lam[i] + (l - 1 - i);
    Int total = 0;
    for (int i = 0; i < l; ++i) {
        int nb = beta[i] - r;
        if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end())
            continue;
        int between = 0;
        for (int b : beta)
            if (b > nb && b < beta[i])
                ++between;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> mu;
        for (int j = 0; j < l; ++j) {
            int part = nbeta[j] - (l - 1 - j);
            if (part > 0)
                mu.push_back(part);
        }
        Int v = mn_rec(mu, rest);
        total += between % 2 ? Int(-v) : v;
    }
    char_memo.emplace(key, total);
    return total;
}

} // namespace

Int character(const Partition& irrep, const Partition& cls)
{
    if (irrep.size() != cls.size())
        throw std::invalid_argument("character: sizes differ");
    std::lock_guard<std::mutex> lock(char_mutex);
    return mn_rec(irrep.parts, cls.parts);
}

int CharTable::index(const Partition& p) const
{
    auto it = std::find(parts.begin(), parts.end(), p);
    if (it == parts.end())
        throw std::invalid_argument("CharTable: " + p.str() + " is not a partition of " + std::to_string(L));
    return static_cast<int>(it - parts.begin());
}

const Int& CharTable::at(const Partition& irrep, const Partition& cls) const
{
    return chi[index(irrep)][index(cls)];
}

const CharTable& char_table(int L, int cap)
{
    if (L < 0 || L > cap)
        throw std::length_error("char_table: L = " + std::to_string(L) + " exceeds the cap " + std::to_string(cap));
    {
        std::lock_guard<std::mutex> lock(char_mutex);
        auto it = tables.find(L);
        if (it != tables.end())
            return it->second;
    }
    CharTable t;
    t.L = L;
    t.parts = partitions(L);
    for (const auto& a : t.parts) {
        std::vector<Int> row;
        for (const auto& b : t.parts)
            row.push_back(character(a, b));
        t.chi.push_back(row);
    }
    std::lock_guard<std::mutex> lock(char_mutex);
    return tables.emplace(L, std::move(t)).first->second;
}

// ---------------------------------------------------------------- contents

namespace {

std::vector<int> contents(const Partition& nu)
{
    std::vector<int> c;
    for (int i = 0; i < nu.length(); ++i)
        for (int j = 0; j < nu.parts[i]; ++j)
            c.push_back(j - i);
    return c;
}

} // namespace

Rat content_eval(SymKind kind, int k, const Partition& nu)
{
    if (k < 0)
        return 0;
    std::vector<int> c = contents(nu);
    if (kind == SymKind::p) {
        if (k == 0)
            return 1;
        Int s = 0;
        for (int x : c) {
            Int v = 1;
            for (int i = 0; i < k; ++i)
                v *= x;
            s += v;
        }
        return Rat(s);
    }
    // dp[j] = e_j or h_j of the contents processed so far
    std::vector<Int> dp(k + 1, 0);
    dp[0] = 1;
    for (int x : c) {
        if (kind == SymKind::e) {
            for (int j = k; j >= 1; --j)
                dp[j] += dp[j - 1] * x;
        } else {
            for (int j = 1; j <= k; ++j)
                dp[j] += dp[j - 1] * x;
        }
    }
    return Rat(dp[k]);
}

HurwitzKind parse_hurwitz_kind(const std::string& s)
{
    if (s == "strict")
        return HurwitzKind::strict;
    if (s == "weak")
        return HurwitzKind::weak;
    if (s == "simple")
        return HurwitzKind::simple;
    throw std::invalid_argument("unknown Hurwitz kind '" + s + "'");
}

namespace {

Rat content_weight(HurwitzKind kind, int k, const Partition& nu)
{
    switch (kind) {
    case HurwitzKind::strict:
        return content_eval(SymKind::e, k, nu);
    case HurwitzKind::weak:
        return content_eval(SymKind::h, k, nu);
    case HurwitzKind::simple: {
        Rat p1 = content_eval(SymKind::p, 1, nu), r = 1;
        for (int i = 0; i < k; ++i)
            r *= p1;
        return r;
    }
    }
    return 0;
}

} // namespace

Rat hurwitz_number(HurwitzKind kind, int k, const Partition& mu, const Partition& lambda)
{
    if (mu.size() != lambda.size())
        throw std::invalid_argument("hurwitz_number: |mu| != |lambda|");
    const CharTable& t = char_table(mu.size());
    int im = t.index(mu), il = t.index(lambda);
    Rat s = 0;
    for (size_t v = 0; v < t.parts.size(); ++v)
        s += Rat(t.chi[v][im] * t.chi[v][il]) * content_weight(kind, k, t.parts[v]);
    return s / Rat(lambda.aut() * mu.aut());
}

Rat cayley_oracle(HurwitzKind kind, int k, const Partition& mu, const Partition& lambda)
{
    int L = mu.size();
    if (L != lambda.size())
        throw std::invalid_argument("cayley_oracle: |mu| != |lambda|");
    if (L > 6 || k > 5)
        throw std::length_error("cayley_oracle: guard is |mu| <= 6 and k <= 5");
    std::vector<int> target(L);
    int pos = 0;
    for (int part : lambda.parts) {
        for (int j = 0; j < part; ++j)
            target[pos + j] = pos + (j + 1) % part;
        pos += part;
    }
    auto cycle_type = [&](const std::vector<int>& p) {
        std::vector<bool> seen(L, false);
        std::vector<int> ct;
        for (int i = 0; i < L; ++i) {
            if (seen[i])
                continue;
            int len = 0;
            for (int j = i; !seen[j]; j = p[j]) {
                seen[j] = true;
                ++len;
            }
            ct.push_back(len);
        }
        return Partition(ct);
    };
    long long count = 0;
    // T = tau_1 ... tau_m applied right to left; sigma = T^-1 o target
    std::function<void(int, int, std::vector<int>&)> rec = [&](int m, int last_b, std::vector<int>& T) {
        if (m == k) {
            std::vector<int> sigma(L);
            // T is an involution product; invert explicitly
            std::vector<int> Tinv(L);
            for (int i = 0; i < L; ++i)
                Tinv[T[i]] = i;
            for (int i = 0; i < L; ++i)
                sigma[i] = Tinv[target[i]];
            if (cycle_type(sigma) == mu)
                ++count;
            return;
        }
        int b0 = 1;
        if (kind == HurwitzKind::strict)
            b0 = last_b + 1;
        else if (kind == HurwitzKind::weak)
            b0 = std::max(1, last_b);
        for (int b = b0; b < L; ++b)
            for (int a = 0; a < b; ++a) {
                // T' = T o (a b)
                std::vector<int> T2 = T;
                std::swap(T2[a], T2[b]);
                rec(m + 1, b, T2);
            }
    };
    std::vector<int> id(L);
    for (int i = 0; i < L; ++i)
        id[i] = i;
    rec(0, 0, id);
    return Rat(Int(static_cast<long>(count))) / Rat(lambda.aut());
}

Rat weingarten(int L, const Partition& beta, const Rat& N)
{
    if (beta.size() != L)
        throw std::invalid_argument("weingarten: class is not a partition of L");
    const CharTable& t = char_table(L);
    int ib = t.index(beta);
    Rat sum = 0;
    for (size_t v = 0; v < t.parts.size(); ++v) {
        const Partition& lam = t.parts[v];
        // s_lambda(1_N) = prod (N + c) / hook
        Rat s = 1;
        std::vector<int> conj(lam.parts.empty() ? 0 : lam.parts[0], 0);
        for (int p : lam.parts)
            for (int j = 0; j < p; ++j)
                ++conj[j];
        for (int i = 0; i < lam.length(); ++i)
            for (int j = 0; j < lam.parts[i]; ++j) {
                Rat f = N + (j - i);
                if (f == 0)
                    throw std::domain_error("weingarten: N is a pole (s_lambda(1_N) = 0 for lambda = " + lam.str() + ")");
                int hook = (lam.parts[i] - j) + (conj[j] - i) - 1;
                s *= f / hook;
            }
        Rat dim = Rat(t.chi[v][0]); // class (1^L) is last; recompute below
        dim = Rat(t.chi[v][t.parts.size() - 1]);
        sum += dim * dim * Rat(t.chi[v][ib]) / s;
    }
    Rat lf = Rat(factorial(L));
    return sum / (lf * lf);
}

Rat weingarten_fs_moment(const Partition& lambda, const std::map<Partition, Rat>& p_moments, const Rat& N)
{
    int L = lambda.size();
    if (L > 6)
        throw std::length_error("weingarten_fs_moment: |lambda| <= 6");
    auto type_of = [L](const std::vector<int>& p) {
        std::vector<bool> seen(L, false);
        std::vector<int> ct;
        for (int i = 0; i < L; ++i) {
            if (seen[i])
                continue;
            int len = 0;
            for (int j = i; !seen[j]; j = p[j]) {
                seen[j] = true;
                ++len;
            }
            ct.push_back(len);
        }
        return Partition(ct);
    };
    std::vector<int> gamma_inv(L);
    int pos = 0;
    for (int part : lambda.parts) {
        for (int j = 0; j < part; ++j)
            gamma_inv[pos + (j + 1) % part] = pos + j;
        pos += part;
    }
    std::map<Partition, Rat> wg;
    for (const auto& p : partitions(L))
        wg.emplace(p, weingarten(L, p, N));
    Rat sum = 0;
    std::vector<int> tau(L);
    for (int i = 0; i < L; ++i)
        tau[i] = i;
    do {
        std::vector<int> tau_inv(L), prod(L);
        for (int i = 0; i < L; ++i)
            tau_inv[tau[i]] = i;
        for (int i = 0; i < L; ++i)
            prod[i] = gamma_inv[tau_inv[i]];
        auto it = p_moments.find(type_of(tau));
        if (it == p_moments.end())
            throw std::invalid_argument("weingarten_fs_moment: missing moment " + type_of(tau).str());
        sum += wg.at(type_of(prod)) * it->second;
    } while (std::next_permutation(tau.begin(), tau.end()));
    return sum;
}

// ---------------------------------------------------------------- NLaurent

NLaurent NLaurent::monomial(const Rat& c, int power, int cutoff)
{
    NLaurent r(cutoff);
    r.add(power, c);
    return r;
}

Rat NLaurent::coeff(int power) const
{
    if (power < cutoff_)
        throw std::out_of_range("NLaurent: power " + std::to_string(power) + " is below the cutoff");
    auto it = c_.find(power);
    return it == c_.end() ? Rat(0) : it->second;
}

int NLaurent::max_power() const
{
    return c_.empty() ? cutoff_ : c_.rbegin()->first;
}

void NLaurent::add(int power, const Rat& c)
{
    if (power < cutoff_ || c == 0)
        return;
    Rat& v = c_[power];
    v += c;
    if (v == 0)
        c_.erase(power);
}

NLaurent& NLaurent::operator+=(const NLaurent& o)
{
    cutoff_ = std::max(cutoff_, o.cutoff_);
    auto old = c_;
    c_.clear();
    for (const auto& [p, v] : old)
        add(p, v);
    for (const auto& [p, v] : o.c_)
        add(p, v);
    return *this;
}

NLaurent& NLaurent::operator-=(const NLaurent& o)
{
    NLaurent neg = o;
    neg *= Rat(-1);
    return *this += neg;
}

NLaurent operator*(const NLaurent& a, const NLaurent& b)
{
    int cut = std::min(a.cutoff_ + b.max_power(), b.cutoff_ + a.max_power());
    NLaurent r(cut);
    for (const auto& [p, v] : a.c_)
        for (const auto& [q, w] : b.c_)
            r.add(p + q, v * w);
    return r;
}

NLaurent& NLaurent::operator*=(const Rat& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [p, v] : c_)
        v *= s;
    return *this;
}

NLaurent NLaurent::truncated(int cutoff) const
{
    NLaurent r(std::max(cutoff, cutoff_));
    for (const auto& [p, v] : c_)
        r.add(p, v);
    return r;
}

bool NLaurent::agrees_with(const NLaurent& o) const
{
    int cut = std::max(cutoff_, o.cutoff_);
    int top = std::max(max_power(), o.max_power());
    for (int p = cut; p <= top; ++p)
        if (coeff(p) != o.coeff(p))
            return false;
    return true;
}

std::string NLaurent::str() const
{
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        s += (s.empty() ? "" : " + ") + to_string(it->second) + "*N^" + std::to_string(it->first);
    if (s.empty())
        s = "0";
    if (cutoff_ > INT_MIN / 8)
        s += " + O(N^" + std::to_string(cutoff_ - 1) + ")";
    return s;
}

NLaurent content_r(const Partition& nu, int cutoff)
{
    NLaurent r = NLaurent::monomial(1, 0, cutoff);
    for (int c : contents(nu)) {
        NLaurent f = NLaurent::monomial(1, 0, cutoff);
        f.add(-1, Rat(c));
        r = (r * f).truncated(cutoff);
    }
    return r;
}

NLaurent content_s(const Partition& nu, int cutoff)
{
    NLaurent r = NLaurent::monomial(1, 0, cutoff);
    for (int c : contents(nu)) {
        // 1/(1 + c/N) = sum_j (-c)^j N^-j
        NLaurent f(cutoff);
        Rat v = 1;
        for (int j = 0; -j >= cutoff; ++j) {
            f.add(-j, v);
            v *= -c;
        }
        r = (r * f).truncated(cutoff);
    }
    return r;
}

// ---------------------------------------------------------------- transition

MomentVector transition(Direction dir, const MomentVector& moments, int cutoff)
{
    if (moments.empty())
        return {};
    int L = moments.begin()->first.size();
    const CharTable& t = char_table(L);
    int c_in = INT_MIN, top = INT_MIN;
    for (const auto& p : t.parts) {
        auto it = moments.find(p);
        if (it == moments.end())
            throw std::invalid_argument("transition: missing moment for " + p.str());
        c_in = std::max(c_in, it->second.cutoff());
        top = std::max(top, it->second.max_power());
    }
    bool fs = dir == Direction::fs_from_ordinary;
    int shift = fs ? -L : L;
    if (cutoff < c_in + shift)
        throw std::invalid_argument("transition: input cutoff N^" + std::to_string(c_in) + " cannot determine N^" +
                                    std::to_string(cutoff));
    int depth = cutoff - shift - top; // content factor needed down to this power
    if (depth > 0)
        depth = 0;
    std::vector<NLaurent> factor;
    for (const auto& nu : t.parts)
        factor.push_back(fs ? content_s(nu, depth) : content_r(nu, depth));
    MomentVector out;
    for (size_t a = 0; a < t.parts.size(); ++a) {
        const Partition& lam = t.parts[a];
        NLaurent acc(cutoff);
        for (size_t b = 0; b < t.parts.size(); ++b) {
            const Partition& mu = t.parts[b];
            NLaurent A(depth);
            for (size_t v = 0; v < t.parts.size(); ++v) {
                NLaurent f = factor[v];
                f *= Rat(t.chi[v][a] * t.chi[v][b]);
                A += f;
            }
            A *= 1 / Rat(lam.aut() * mu.aut());
            NLaurent term = (A * moments.at(mu)).truncated(cutoff - shift);
            for (const auto& [p, v] : term.terms())
                acc.add(p + shift, v);
        }
        acc *= Rat(lam.aut());
        out.emplace(lam, acc.truncated(cutoff));
    }
    return out;
}

// ---------------------------------------------------------------- GUE

NLaurent gue_moment_series(const Partition& mu)
{
    int L = mu.size();
    NLaurent out(INT_MIN / 4);
    if (L % 2)
        return out;
    if (L > 12)
        throw std::length_error("gue_moment: |mu| <= 12");
    std::vector<int> gamma(L);
    int pos = 0;
    for (int part : mu.parts) {
        for (int j = 0; j < part; ++j)
            gamma[pos + j] = pos + (j + 1) % part;
        pos += part;
    }
    std::vector<long long> by_cycles(L + 1, 0);
    std::vector<int> alpha(L, -1);
    std::function<void()> rec = [&] {
        int i = 0;
        while (i < L && alpha[i] >= 0)
            ++i;
        if (i == L) {
            std::vector<bool> seen(L, false);
            int c = 0;
            for (int s = 0; s < L; ++s) {
                if (seen[s])
                    continue;
                ++c;
                for (int j = s; !seen[j]; j = gamma[alpha[j]])
                    seen[j] = true;
            }
            ++by_cycles[c];
            return;
        }
        for (int j = i + 1; j < L; ++j) {
            if (alpha[j] >= 0)
                continue;
            alpha[i] = j;
            alpha[j] = i;
            rec();
            alpha[i] = alpha[j] = -1;
        }
    };
    rec();
    for (int c = 0; c <= L; ++c)
        if (by_cycles[c])
            out.add(c - L / 2, Rat(Int(static_cast<long>(by_cycles[c]))));
    return out;
}

Rat gue_moment(const Partition& mu, const Rat& N)
{
    if (N == 0)
        throw std::domain_error("gue_moment: N must be nonzero");
    Rat s = 0;
    NLaurent series = gue_moment_series(mu);
    for (const auto& [p, v] : series.terms()) {
        Rat f = 1;
        for (int i = 0; i < (p < 0 ? -p : p); ++i)
            f *= N;
        s += p < 0 ? Rat(v / f) : Rat(v * f);
    }
    return s;
}

std::map<int, Rat> gue_cumulant_genus(const Partition& mu)
{
    return gue_census(mu.parts);
}

// ---------------------------------------------------------------- connected numbers

namespace {

using Multi = std::vector<int>; // multiplicity per part value (index = part size)
using KSeries = std::vector<Rat>; // coefficient per k

Partition from_multi(const Multi& m)
{
    std::vector<int> p;
    for (int v = static_cast<int>(m.size()) - 1; v >= 1; --v)
        for (int c = 0; c < m[v]; ++c)
            p.push_back(v);
    Partition r;
    r.parts = p;
    return r;
}

bool empty_multi(const Multi& m)
{
    return std::all_of(m.begin(), m.end(), [](int x) { return x == 0; });
}

void sub_multisets(const Multi& m, size_t v, Multi& cur, std::vector<Multi>& out)
{
    if (v == m.size()) {
        out.push_back(cur);
        return;
    }
    for (int c = 0; c <= m[v]; ++c) {
        cur[v] = c;
        sub_multisets(m, v + 1, cur, out);
    }
    cur[v] = 0;
}

} // namespace

Rat connected_hurwitz(const Partition& mu, int g, HurwitzKind kind)
{
    int L = mu.size();
    if (L % 2)
        return 0;
    int k0 = 2 * g - 2 + mu.length() + L / 2;
    if (k0 < 0)
        return 0;
    int maxv = mu.parts.empty() ? 0 : mu.parts[0];
    Multi full(maxv + 1, 0);
    for (int p : mu.parts)
        ++full[p];

    std::map<Multi, KSeries> Z, F;
    auto disconnected = [&](const Multi& m) -> const KSeries& {
        auto it = Z.find(m);
        if (it != Z.end())
            return it->second;
        Partition p = from_multi(m);
        KSeries z(k0 + 1, 0);
        if (p.size() % 2 == 0) {
            Partition two(std::vector<int>(p.size() / 2, 2));
            for (int k = 0; k <= k0; ++k)
                z[k] = hurwitz_number(kind, k, p, two);
        }
        return Z.emplace(m, z).first->second;
    };
    std::function<const KSeries&(const Multi&)> connected;
    // sum over ordered s-tuples of nonempty sub-multisets adding up to m of prod F, convolved in k
    std::function<KSeries(const Multi&, int)> tuples = [&](const Multi& m, int s) -> KSeries {
        KSeries r(k0 + 1, 0);
        if (s == 0) {
            if (empty_multi(m))
                r[0] = 1;
            return r;
        }
        if (empty_multi(m))
            return r;
        std::vector<Multi> subs;
        Multi cur(m.size(), 0);
        sub_multisets(m, 0, cur, subs);
        for (const auto& a : subs) {
            if (empty_multi(a))
                continue;
            Multi rest = m;
            for (size_t v = 0; v < m.size(); ++v)
                rest[v] -= a[v];
            if ((s == 1) != empty_multi(rest))
                continue;
            const KSeries& fa = connected(a);
            KSeries tb = tuples(rest, s - 1);
            for (int i = 0; i <= k0; ++i)
                if (fa[i] != 0)
                    for (int j = 0; i + j <= k0; ++j)
                        r[i + j] += fa[i] * tb[j];
        }
        return r;
    };
    connected = [&](const Multi& m) -> const KSeries& {
        auto it = F.find(m);
        if (it != F.end())
            return it->second;
        KSeries f = disconnected(m);
        int n = 0;
        for (int c : m)
            n += c;
        Rat sfact = 1;
        for (int s = 2; s <= n; ++s) {
            sfact *= s;
            KSeries t = tuples(m, s);
            for (int k = 0; k <= k0; ++k)
                f[k] -= t[k] / sfact;
        }
        return F.emplace(m, f).first->second;
    };
    return connected(full)[k0];
}

} // namespace fsm
