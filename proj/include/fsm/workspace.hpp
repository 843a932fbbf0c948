#pragma once

#include "fsm/bijection_series.hpp"
#include "fsm/spectral_curve.hpp"
#include "fsm/toprec.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fsm {

// Number of boundaries of a table family: disks and tori 1, cylinders 2, pants 3.
int family_boundaries(const std::string& family);
// Genus used when none is requested: tori 1, otherwise 0.
int family_default_genus(const std::string& family);

// Lazily built, cached objects for the quadrangulation curve: the curve itself, the residue
// recursion on both charts, and the bijection tables for disks and cylinders.
class Workspace {
public:
    // u_order 0 means 2 * q_max + 2, the least order at which every t^q, q <= q_max, is exact.
    explicit Workspace(int q_max = 8, int u_order = 0);

    int q_max() const { return q_max_; }
    int u_order() const { return u_order_; }

    const DiskCurve& curve();
    TopRec& ordinary();
    TopRec& exchanged();

    // Bijection data; cylinder tables cover lengths 1..cutoff, disks 0..2*cutoff+2.
    const std::vector<USeries>& disks(int cutoff = 9);
    const std::vector<USeries>& fs_disks(int cutoff = 9);
    const CylinderTable& cylinders(const std::string& mode, int cutoff = 9);

    // Generating series of the requested cell family; throws std::invalid_argument on bad selectors.
    USeries series(const std::string& family, const std::string& mode, int genus, const std::vector<int>& lengths);
    std::vector<Rat> row(const std::string& family, const std::string& mode, int genus, const std::vector<int>& lengths);

private:
    void ensure_bijections(int cutoff);

    int q_max_;
    int u_order_;
    std::unique_ptr<DiskCurve> curve_;
    std::unique_ptr<TopRec> ordinary_;
    std::unique_ptr<TopRec> exchanged_;
    int cutoff_ = 0;
    std::vector<USeries> F_, H_;
    CylinderTable F2_, G2_, M2_, H2_;
};

} // namespace fsm
