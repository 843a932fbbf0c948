#pragma once

#include "fsm/rat.hpp"

#include <map>
#include <string>
#include <vector>

namespace fsm {

struct Partition {
    std::vector<int> parts; // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    Int aut() const;        // |lambda|! / |C_lambda| = prod_i i^{m_i} m_i!
    Int class_size() const; // |C_lambda|
    std::string str() const;

    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
};

Partition parse_partition(const std::string& s);
// All partitions of L, in reverse lexicographic order: (L), (L-1,1), ..., (1^L).
std::vector<Partition> partitions(int L);

struct CharTable {
    int L = 0;
    std::vector<Partition> parts;
    std::vector<std::vector<Int>> chi; // chi[irrep][class]

    int index(const Partition& p) const;
    const Int& at(const Partition& irrep, const Partition& cls) const;
};

const CharTable& char_table(int L, int cap = 10);
// Murnaghan-Nakayama value on one class, without building a table.
Int character(const Partition& irrep, const Partition& cls);

enum class SymKind { e, h, p };
// Symmetric function of the contents {j - i} of the diagram of nu.
Rat content_eval(SymKind kind, int k, const Partition& nu);

enum class HurwitzKind { strict, weak, simple };
HurwitzKind parse_hurwitz_kind(const std::string& s);
Rat hurwitz_number(HurwitzKind kind, int k, const Partition& mu, const Partition& lambda);
// Direct count of transposition paths (|mu| <= 6, k <= 5).
Rat cayley_oracle(HurwitzKind kind, int k, const Partition& mu, const Partition& lambda);

// Unitary Weingarten function on the class beta of S_L at the value N.
Rat weingarten(int L, const Partition& beta, const Rat& N);
// <P_lambda> for a unitarily invariant measure at matrix size N from its trace moments <p_mu> (all mu of |lambda|),
// as the permutation sum sum_tau Wg(gamma^-1 tau^-1) <p_type(tau)> with gamma of type lambda; |lambda| <= 6.
Rat weingarten_fs_moment(const Partition& lambda, const std::map<Partition, Rat>& p_moments, const Rat& N);

// Truncated Laurent series in N: terms with power < cutoff are not kept.
class NLaurent {
public:
    NLaurent(int cutoff = -8) : cutoff_(cutoff) {}
    static NLaurent monomial(const Rat& c, int power, int cutoff);

    int cutoff() const { return cutoff_; }
    Rat coeff(int power) const;
    const std::map<int, Rat>& terms() const { return c_; }
    int max_power() const;
    void add(int power, const Rat& c);

    NLaurent& operator+=(const NLaurent& o);
    NLaurent& operator-=(const NLaurent& o);
    friend NLaurent operator+(NLaurent a, const NLaurent& b) { return a += b; }
    friend NLaurent operator-(NLaurent a, const NLaurent& b) { return a -= b; }
    friend NLaurent operator*(const NLaurent& a, const NLaurent& b);
    NLaurent& operator*=(const Rat& s);
    NLaurent truncated(int cutoff) const;
    bool agrees_with(const NLaurent& o) const;
    std::string str() const;

private:
    std::map<int, Rat> c_;
    int cutoff_;
};

// Products over the contents of nu: r_N = prod (1 + c/N) and s_N = prod 1/(1 + c/N).
NLaurent content_r(const Partition& nu, int cutoff);
NLaurent content_s(const Partition& nu, int cutoff);

using MomentVector = std::map<Partition, NLaurent>;

enum class Direction { fs_from_ordinary, ordinary_from_fs };
// fs_from_ordinary:  <P_l>/|Aut l| = sum_mu N^-|mu| sum_k (-N)^-k [H_k]_{l,mu} <p_mu>
// ordinary_from_fs:  <p_m> = |Aut m| N^|m| sum_l sum_k N^-k [E_k]_{m,l} <P_l>
MomentVector transition(Direction dir, const MomentVector& moments, int cutoff);

// <prod_i Tr M^{mu_i}> for the GUE with covariance <M_ab M_cd> = delta_ad delta_bc / N.
Rat gue_moment(const Partition& mu, const Rat& N);
// Same, as an exact Laurent polynomial in N.
NLaurent gue_moment_series(const Partition& mu);
std::map<int, Rat> gue_cumulant_genus(const Partition& mu);

// Connected numbers extracted from the disconnected [E_k]_{mu,(2,...,2)} through the logarithm of
// their generating series; k = 2g - 2 + l(mu) + |mu|/2.
Rat connected_hurwitz(const Partition& mu, int g, HurwitzKind kind = HurwitzKind::strict);

} // namespace fsm
