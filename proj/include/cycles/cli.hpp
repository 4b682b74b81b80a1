#pragma once

#include <string>
#include <vector>

#include "cycles/boxprod.hpp"
#include "cycles/graph.hpp"
#include "cycles/hypergraph.hpp"

namespace cycles::cli {

// Exit codes: 0 success, 1 input error, 2 a computation disagreed with a
// recorded closed form (audit findings).
struct RunResult {
    int exit_code = 0;
    std::string output;
};

RunResult run(const std::vector<std::string>& args);

// "K5", "K3,3", "C6", "P4", "W5", "tilde4", or "@file.json" holding
// {"nverts": n, "edges": [[u,v], ...]}.
Graph parse_graph_spec(const std::string& spec);
// "R3^2" -> the grid [3]^2.
RookGrid parse_rook_spec(const std::string& spec);
// "complete5" or "@file.json" holding {"nverts": n, "faces": [[a,b,c], ...]}.
Hypergraph2 parse_hypergraph_spec(const std::string& spec);
// Span-harness query from JSON: {"graph": spec, "ambient": "square" |
// "deleted_square", "target": cycle spec, "families": [names],
// "mod_boundaries": bool}.
HarnessQuery parse_harness_json(const std::string& text);

// "2^k", with the decimal value appended while it fits in 63 bits.
std::string format_count(long long dim);

}  // namespace cycles::cli
