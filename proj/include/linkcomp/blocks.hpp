#pragma once

#include <vector>

#include "linkcomp/multigraph.hpp"

namespace linkcomp {

/// Block-cut decomposition of a multigraph.  Blocks partition the edge set:
/// every maximal 2-connected subgraph is a block, every bridge is a
/// single-edge block, and every loop is its own single-edge block.  A vertex
/// shared by two blocks that both contain a non-loop edge is a cut vertex;
/// a vertex whose only extra block is a loop is not (removing it does not
/// split anything).
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;             // edge ids, ascending
    std::vector<int> cut_vertices;                    // ascending
    std::vector<std::vector<int>> block_cut_vertices; // per block, ascending
};

BlockDecomposition blocks(const Multigraph& g);

}  // namespace linkcomp
