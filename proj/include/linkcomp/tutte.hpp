#pragma once

#include "linkcomp/bigint.hpp"
#include "linkcomp/multigraph.hpp"

namespace linkcomp {

/// Default edge cap for the exponential evaluation; override per call or
/// through LINKCOMP_TUTTE_CAP in the CLI.
inline constexpr int kDefaultTutteCap = 18;

struct TutteOptions {
    int cap = kDefaultTutteCap;
    /// Keyed by a degree-refined relabeling of the minor; equal keys imply
    /// equal graphs after relabeling, so hits are always sound.  Off by
    /// default: acceptance-scale instances do not need it.
    bool memoize = false;
};

/// T(G; -1, -1) and the edge count it was computed for.  The magnitude is
/// always a power of two and the sign is determined by |E|, the component
/// count and that exponent; l_from_tutte re-checks both.
struct TutteValue {
    BigInt t;
    int edge_count;
};

/// Exact deletion-contraction at (-1, -1): bridges contribute a factor -1,
/// loops a factor -1, any other edge splits into delete + contract.  The
/// edgeless graph evaluates to 1.  Refuses graphs above the cap.
TutteValue tutte_neg1(const Multigraph& g, const TutteOptions& options = {});

/// Inverts the evaluation into a link component count:
/// l = log2 |T(G,-1,-1)| + number of connected components.
/// Fails loudly (internal_error) if the magnitude is not a power of two or
/// the sign identity does not hold.
int l_from_tutte(const Multigraph& g, const TutteOptions& options = {});

}  // namespace linkcomp
