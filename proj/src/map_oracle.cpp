#include "fsm/map_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace fsm {

HalfEdgeSet::HalfEdgeSet(const std::vector<int>& bl, const std::vector<int>& idg)
    : boundary_lengths(bl), internal_degrees(idg)
{
    int face = 0;
    auto add_face = [&](int len) {
        if (len < 1)
            throw std::invalid_argument("HalfEdgeSet: face degrees must be positive");
        int start = static_cast<int>(phi.size());
        for (int j = 0; j < len; ++j) {
            phi.push_back(start + (j + 1) % len);
            face_of.push_back(face);
        }
        ++face;
    };
    for (int l : bl)
        add_face(l);
    boundary_half_edges = static_cast<int>(phi.size());
    for (int d : idg)
        add_face(d);
}

CombMap make_map(const HalfEdgeSet& h, const std::vector<int>& alpha)
{
    int n = h.size();
    std::vector<int> phi_inv(n);
    for (int i = 0; i < n; ++i)
        phi_inv[h.phi[i]] = i;
    CombMap m;
    m.alpha = alpha;
    m.sigma.resize(n);
    for (int i = 0; i < n; ++i)
        m.sigma[i] = phi_inv[alpha[i]];
    return m;
}

namespace {

int count_cycles(const std::vector<int>& p, std::vector<int>* label = nullptr)
{
    int n = static_cast<int>(p.size());
    std::vector<int> lab(n, -1);
    int c = 0;
    for (int i = 0; i < n; ++i) {
        if (lab[i] >= 0)
            continue;
        for (int j = i; lab[j] < 0; j = p[j])
            lab[j] = c;
        ++c;
    }
    if (label)
        *label = std::move(lab);
    return c;
}

bool has_repeat(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) != v.end();
}

// vertex[i] is the sigma-cycle of half-edge i
MapClass classify_with(const HalfEdgeSet& h, const std::vector<int>& vertex)
{
    std::vector<std::vector<int>> per(h.boundary_lengths.size());
    std::vector<int> all;
    for (int i = 0; i < h.boundary_half_edges; ++i) {
        per[h.face_of[i]].push_back(vertex[i]);
        all.push_back(vertex[i]);
    }
    for (const auto& p : per)
        if (has_repeat(p))
            return MapClass::ordinary;
    return has_repeat(all) ? MapClass::simple : MapClass::fully_simple;
}

int components(const HalfEdgeSet& h, const CombMap& m, std::vector<int>* comp_of)
{
    int n = h.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int i = 0; i < n; ++i) {
        unite(i, m.alpha[i]);
        unite(i, h.phi[i]);
    }
    std::vector<int> id(n, -1);
    int c = 0;
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (id[r] < 0)
            id[r] = c++;
        out[i] = id[r];
    }
    if (comp_of)
        *comp_of = std::move(out);
    return c;
}

struct Tally {
    // (genus, class index, connected?, boundary-connected?) -> number of involutions
    std::map<std::tuple<int, int, bool, bool>, long long> counts;
};

void visit(const HalfEdgeSet& h, const std::vector<int>& alpha, Tally& tally)
{
    CombMap m = make_map(h, alpha);
    std::vector<int> vertex;
    int V = count_cycles(m.sigma, &vertex);
    int E = h.size() / 2;
    int F = static_cast<int>(h.boundary_lengths.size() + h.internal_degrees.size());
    int twice = 2 - V + E - F; // 2g
    std::vector<int> comp;
    int cc = components(h, m, &comp);
    bool bconn = true;
    if (cc > 1) {
        std::vector<bool> has(cc, false);
        for (int i = 0; i < h.boundary_half_edges; ++i)
            has[comp[i]] = true;
        bconn = std::all_of(has.begin(), has.end(), [](bool b) { return b; });
    }
    MapClass c = classify_with(h, vertex);
    ++tally.counts[{twice / 2, static_cast<int>(c), cc == 1, bconn}];
}

void walk(const HalfEdgeSet& h, std::vector<int>& alpha, Tally& tally)
{
    int n = h.size();
    int i = 0;
    while (i < n && alpha[i] >= 0)
        ++i;
    if (i == n) {
        visit(h, alpha, tally);
        return;
    }
    for (int j = i + 1; j < n; ++j) {
        if (alpha[j] >= 0)
            continue;
        alpha[i] = j;
        alpha[j] = i;
        walk(h, alpha, tally);
        alpha[i] = alpha[j] = -1;
    }
}

} // namespace

MapClass classify(const HalfEdgeSet& h, const CombMap& m)
{
    std::vector<int> vertex;
    count_cycles(m.sigma, &vertex);
    return classify_with(h, vertex);
}

const char* class_name(MapClass c)
{
    switch (c) {
    case MapClass::ordinary:
        return "ordinary";
    case MapClass::simple:
        return "simple";
    case MapClass::fully_simple:
        return "fully-simple";
    }
    return "?";
}

int map_genus(const HalfEdgeSet& h, const CombMap& m)
{
    int V = count_cycles(m.sigma);
    int E = h.size() / 2;
    int F = static_cast<int>(h.boundary_lengths.size() + h.internal_degrees.size());
    return (2 - V + E - F) / 2;
}

int component_count(const HalfEdgeSet& h, const CombMap& m)
{
    return components(h, m, nullptr);
}

Rat Census::get(int genus, const std::string& cls, const std::string& conn) const
{
    auto it = cells.find({genus, cls, conn});
    return it == cells.end() ? Rat(0) : it->second;
}

Census enumerate(const std::vector<int>& boundary_lengths, const std::vector<int>& internal_degrees, int cap, int threads)
{
    HalfEdgeSet h(boundary_lengths, internal_degrees);
    int n = h.size();
    if (n > cap)
        throw std::length_error("enumerate: " + std::to_string(n) + " half-edges exceed the cap " + std::to_string(cap));
    Census census;
    if (n == 0 || n % 2)
        return census;

    // partition the walk by the partner of half-edge 0
    std::vector<Tally> tallies(n);
    auto job = [&](int j) {
        std::vector<int> alpha(n, -1);
        alpha[0] = j;
        alpha[j] = 0;
        walk(h, alpha, tallies[j]);
    };
    int nt = threads > 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    if (nt <= 1 || n <= 8) {
        for (int j = 1; j < n; ++j)
            job(j);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{1};
        for (int t = 0; t < std::min(nt, n - 1); ++t)
            pool.emplace_back([&] {
                for (int j = next++; j < n; j = next++)
                    job(j);
            });
        for (auto& th : pool)
            th.join();
    }

    Rat weight = 1;
    weight /= Rat(factorial(static_cast<long>(internal_degrees.size())));
    for (int d : internal_degrees)
        weight /= d;
    const char* names[] = {"ordinary", "simple", "fully-simple"};
    for (const auto& t : tallies)
        for (const auto& [key, count] : t.counts) {
            auto [g, cls, conn, bconn] = key;
            Rat w = weight * Rat(Int(static_cast<long>(count)));
            for (int c = 0; c <= cls; ++c) {
                if (conn)
                    census.cells[{g, names[c], "connected"}] += w;
                if (bconn)
                    census.cells[{g, names[c], "boundary-connected"}] += w;
            }
        }
    return census;
}

std::map<int, Rat> gue_census(const std::vector<int>& boundary_lengths, int cap)
{
    Census c = enumerate(boundary_lengths, {}, cap);
    std::map<int, Rat> out;
    for (const auto& [key, w] : c.cells) {
        const auto& [g, cls, conn] = key;
        if (cls == "ordinary" && conn == "connected")
            out[g] += w;
    }
    return out;
}

} // namespace fsm
