#pragma once

#include "fsm/rat.hpp"

#include <string>
#include <vector>

namespace fsm {

// Published counts of quadrangulations with boundaries, Q = 0..8, frozen as printed.
struct RefRow {
    std::vector<int> lengths;
    std::vector<long long> counts;
};

struct RefTable {
    std::string id;     // e.g. "ordinary-cylinders"
    std::string family; // disks, cylinders, tori
    std::string mode;   // ordinary, simple, mixed, fully-simple
    int genus = 0;
    std::vector<RefRow> rows;
};

// Entries whose printed value disagrees with every independent computation available here.
// The corrected value is accepted only when the named cross-check reproduces it in the same run.
struct Erratum {
    std::string table;
    std::vector<int> lengths;
    int q = 0;
    long long printed = 0;
    long long corrected = 0;
    std::string cross_check;
};

const std::vector<RefTable>& reference_tables();
const RefTable& reference_table(const std::string& id);
const std::vector<Erratum>& errata();
// Erratum for this cell, or nullptr.
const Erratum* find_erratum(const std::string& table, const std::vector<int>& lengths, int q);

} // namespace fsm
