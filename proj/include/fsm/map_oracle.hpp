#pragma once

#include "fsm/rat.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace fsm {

// Half-edges are numbered boundary by boundary (boundary i owns a block of L_i labels),
// then internal face by internal face; phi sends each half-edge to the next one of its face.
struct HalfEdgeSet {
    std::vector<int> boundary_lengths;
    std::vector<int> internal_degrees;
    std::vector<int> phi;
    std::vector<int> face_of; // face index, boundaries first
    int boundary_half_edges = 0;

    HalfEdgeSet(const std::vector<int>& boundary_lengths, const std::vector<int>& internal_degrees);
    int size() const { return static_cast<int>(phi.size()); }
};

struct CombMap {
    std::vector<int> alpha;
    std::vector<int> sigma; // (alpha o phi)^-1
};

CombMap make_map(const HalfEdgeSet& h, const std::vector<int>& alpha);

enum class MapClass { ordinary, simple, fully_simple };
// Strongest class satisfied.
MapClass classify(const HalfEdgeSet& h, const CombMap& m);
const char* class_name(MapClass c);

// Genus from 2 - 2g - n = chi = V - E + F - n (negative for some disconnected maps), and component count.
int map_genus(const HalfEdgeSet& h, const CombMap& m);
int component_count(const HalfEdgeSet& h, const CombMap& m);

// (genus, class, connectivity) -> weight.  Classes are nested: a fully simple map is also
// recorded as simple and as ordinary.  Connectivity is "connected" (one component) or
// "boundary-connected" (every component meets a boundary; includes the connected ones).
using CensusKey = std::tuple<int, std::string, std::string>;
struct Census {
    std::map<CensusKey, Rat> cells;
    Rat get(int genus, const std::string& cls, const std::string& conn = "connected") const;
};

Census enumerate(const std::vector<int>& boundary_lengths, const std::vector<int>& internal_degrees, int cap = 16,
                 int threads = 0);

// Connected ordinary maps without internal faces, by genus.
std::map<int, Rat> gue_census(const std::vector<int>& boundary_lengths, int cap = 16);

} // namespace fsm
