#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fsm::cli {

// Parsed command line.  u_order 0 means "derive from q_max".
struct RunConfig {
    std::string subcommand;
    int q_max = 8;
    int u_order = 0;
    std::vector<int> lengths;
    bool lengths_given = false;
    std::string family;
    std::string mode = "ordinary";
    int genus = -1;
    std::string format = "csv";
    std::string suite = "all";
    int cap = 14;
    int l_max = 6;
    std::string out;
};

// Exit status: 0 success, 1 a verification failed, 2 configuration or guard error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace fsm::cli
