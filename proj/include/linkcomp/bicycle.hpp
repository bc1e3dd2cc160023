#pragma once

#include "linkcomp/gf2.hpp"
#include "linkcomp/multigraph.hpp"

namespace linkcomp {

enum class RankKernel { automatic, serial, parallel };

/// Dimension over GF(2) of the bicycle space, the intersection of the cycle
/// space and the cut space: |E| minus the rank of the stacked matrix whose
/// rows are a fundamental-cycle basis and the vertex incidence rows.
int bicycle_dim(const Multigraph& g, RankKernel kernel = RankKernel::automatic);

/// l(G) = bicycle_dim(G) + number of connected components (isolated
/// vertices included).  Embedding-free and polynomial time; the reference
/// oracle every other method is checked against.
int l_from_bicycle(const Multigraph& g, RankKernel kernel = RankKernel::automatic);

}  // namespace linkcomp
