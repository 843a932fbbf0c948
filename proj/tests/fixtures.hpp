#pragma once

#include "fsm/useries.hpp"
#include "fsm/workspace.hpp"

#include <string>
#include <vector>

namespace fsm::test {

// Quadrangulation workspace at Q <= 8, shared by every test in the binary.
inline Workspace& quad()
{
    static Workspace ws(8);
    return ws;
}

inline std::vector<Rat> rats(const std::vector<long long>& v)
{
    std::vector<Rat> r;
    for (long long x : v)
        r.push_back(Rat(Int(std::to_string(x))));
    return r;
}

// Map counts are sqrt3-free and even in u.
inline bool rational_in_t(const USeries& s)
{
    return s.rational_in_t();
}

} // namespace fsm::test
