#include "fsm/workspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace fsm {

int family_boundaries(const std::string& family)
{
    if (family == "disks" || family == "tori")
        return 1;
    if (family == "cylinders")
        return 2;
    if (family == "pants")
        return 3;
    throw std::invalid_argument("unknown family '" + family + "' (disks, cylinders, tori, pants)");
}

int family_default_genus(const std::string& family)
{
    return family == "tori" ? 1 : 0;
}

Workspace::Workspace(int q_max, int u_order) : q_max_(q_max), u_order_(u_order)
{
    if (q_max < 0)
        throw std::invalid_argument("q_max must be nonnegative");
    if (u_order_ == 0)
        u_order_ = 2 * q_max + 2;
    if (u_order_ < 2 * q_max + 2)
        throw std::invalid_argument("u_order must be at least 2 * q_max + 2");
}

const DiskCurve& Workspace::curve()
{
    if (!curve_) {
        int order = u_order_ + 4;
        curve_ = std::make_unique<DiskCurve>(solve_disk_curve(Potential::quadrangulation(order), order));
    }
    return *curve_;
}

TopRec& Workspace::ordinary()
{
    if (!ordinary_)
        ordinary_ = std::make_unique<TopRec>(curve(), "ordinary", u_order_);
    return *ordinary_;
}

TopRec& Workspace::exchanged()
{
    if (!exchanged_)
        exchanged_ = std::make_unique<TopRec>(curve(), "exchanged", u_order_);
    return *exchanged_;
}

void Workspace::ensure_bijections(int cutoff)
{
    if (cutoff <= cutoff_)
        return;
    cutoff = std::max(cutoff, 9);
    const DiskCurve& cv = curve();
    F_ = ordinary_disks(cv, 2 * cutoff + 2);
    H_ = fully_simple_disks(F_, 2 * cutoff + 2);
    F2_ = ordinary_cylinders(cv, cutoff);
    G2_ = simple_cylinders(F_, F2_, cutoff);
    M2_ = mixed_cylinders(F_, F2_, cutoff);
    H2_ = fully_simple_cylinders(G2_, H_, cutoff);
    cutoff_ = cutoff;
}

const std::vector<USeries>& Workspace::disks(int cutoff)
{
    ensure_bijections(cutoff);
    return F_;
}

const std::vector<USeries>& Workspace::fs_disks(int cutoff)
{
    ensure_bijections(cutoff);
    return H_;
}

const CylinderTable& Workspace::cylinders(const std::string& mode, int cutoff)
{
    ensure_bijections(cutoff);
    if (mode == "ordinary")
        return F2_;
    if (mode == "simple")
        return G2_;
    if (mode == "mixed")
        return M2_;
    if (mode == "fully-simple")
        return H2_;
    throw std::invalid_argument("unknown mode '" + mode + "' (ordinary, simple, mixed, fully-simple)");
}

USeries Workspace::series(const std::string& family, const std::string& mode, int genus,
                          const std::vector<int>& lengths)
{
    int n = family_boundaries(family);
    if (mode != "ordinary" && mode != "simple" && mode != "mixed" && mode != "fully-simple")
        throw std::invalid_argument("unknown mode '" + mode + "' (ordinary, simple, mixed, fully-simple)");
    if (static_cast<int>(lengths.size()) != n)
        throw std::invalid_argument(family + " rows need " + std::to_string(n) + " lengths each");
    for (int l : lengths)
        if (l < 1)
            throw std::invalid_argument("boundary lengths must be positive");
    if (genus < 0)
        throw std::invalid_argument("genus must be nonnegative");
    if (family == "disks" && genus != 0)
        throw std::invalid_argument("disks have genus 0; use --family tori for higher genus");
    if (family == "tori" && genus < 1)
        throw std::invalid_argument("tori need genus >= 1");
    if (mode == "mixed" && n != 2)
        throw std::invalid_argument("mode mixed is only defined for cylinders");
    if (mode == "simple" && n > 1 && (genus > 0 || n > 2))
        throw std::invalid_argument("mode simple is only available for one boundary or planar cylinders");

    if (genus == 0 && n == 1) {
        int l = lengths[0];
        return mode == "ordinary" ? disks((l + 1) / 2)[l] : fs_disks((l + 1) / 2)[l];
    }
    if (genus == 0 && n == 2)
        return cylinders(mode, std::max(lengths[0], lengths[1])).at(lengths[0], lengths[1]);
    // remaining cells come from the residue recursion; one boundary is simple iff fully simple
    if (mode == "ordinary")
        return ordinary_series(ordinary(), genus, lengths);
    return fullysimple_series(exchanged(), genus, lengths);
}

std::vector<Rat> Workspace::row(const std::string& family, const std::string& mode, int genus,
                                const std::vector<int>& lengths)
{
    return t_table(series(family, mode, genus, lengths), q_max_);
}

} // namespace fsm
