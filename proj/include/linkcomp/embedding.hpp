#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linkcomp/multigraph.hpp"

namespace linkcomp {

/// Darts (half-edges): dart 2e runs from edge e's first endpoint, dart 2e+1
/// from its second.  mate flips the low bit; a loop owns both darts at the
/// same vertex.
using Dart = int;

inline Dart mate(Dart d) { return d ^ 1; }
inline int dart_edge(Dart d) { return d >> 1; }

/// Counterclockwise cyclic order of outgoing darts at every vertex.  A
/// rotation system fixes an embedding of the graph in an orientable
/// surface; the sphere case is recognized by validate_genus0.
class RotationSystem {
  public:
    /// Darts in ascending id order at each vertex.
    static RotationSystem default_for(const Multigraph& g);

    /// Seeded independent shuffle of every vertex cycle.
    static RotationSystem random_for(const Multigraph& g, std::uint64_t seed);

    /// Validates that the given cycles are a permutation of the darts with
    /// every dart at its tail vertex.
    static RotationSystem from_orders(const Multigraph& g,
                                      std::vector<std::vector<Dart>> orders);

    int dart_count() const { return static_cast<int>(tail_.size()); }
    int vertex_count() const { return static_cast<int>(orders_.size()); }
    int tail(Dart d) const { return tail_[d]; }

    /// Next dart counterclockwise at tail(d).
    Dart succ(Dart d) const { return succ_[d]; }
    Dart pred(Dart d) const { return pred_[d]; }

    const std::vector<std::vector<Dart>>& vertex_orders() const { return orders_; }

    /// Every vertex cycle reversed: the mirror-image embedding.
    RotationSystem mirrored() const;

  private:
    RotationSystem() = default;
    void index(const Multigraph& g);

    std::vector<std::vector<Dart>> orders_;
    std::vector<Dart> succ_, pred_;
    std::vector<int> tail_;
};

/// Orbits of the face permutation d -> succ(mate(d)), each listed in walk
/// order starting from its smallest dart, ordered by smallest dart.
std::vector<std::vector<Dart>> face_orbits(const Multigraph& g,
                                           const RotationSystem& rot);

/// Checks Euler's formula v - e + f = 2 on every connected component (an
/// edgeless component counts one face) and returns the total face count.
/// Throws genus_error naming the first failing component otherwise.
int validate_genus0(const Multigraph& g, const RotationSystem& rot);

/// One strand = one closed straight-ahead walk of the medial diagram,
/// recorded as the darts whose corner arcs it traverses, in traversal order
/// from the smallest dart.  Strands partition all darts.
struct StrandPartition {
    std::vector<std::vector<Dart>> strands;
};

struct StrandCount {
    int l;             // strands + isolated vertices
    int strand_count;  // closed walks through at least one crossing
    StrandPartition partition;
};

/// Link component count by direct strand tracing.
///
/// Identify dart d with the medial corner arc counterclockwise after d at
/// tail(d).  Each edge's medial crossing joins its corners along the two
/// diagonals {g, mate(g)} and {pred(g), pred(mate(g))}; following the two
/// transitions alternately walks a closed strand.  Every crossing-free
/// (degree-0) vertex contributes one further component.  Requires a sphere
/// embedding; genus failures propagate.
StrandCount strand_components(const Multigraph& g, const RotationSystem& rot);

/// Adds the edge (u, w) inside the face identified by face_dart (any dart
/// of the face orbit).  Both u and w must occur on that face's boundary
/// walk; the new darts are spliced so the face splits in two, so the result
/// still passes validate_genus0.
std::pair<Multigraph, RotationSystem> insert_edge_in_face(
    const Multigraph& g, const RotationSystem& rot, int u, int w, Dart face_dart);

/// Low-level form of insert_edge_in_face: splice the new edge's darts
/// immediately before the two given anchor darts (which select the corners
/// of one shared face).  Anchors must lie on a common face orbit.
std::pair<Multigraph, RotationSystem> insert_edge_at_corners(
    const Multigraph& g, const RotationSystem& rot, Dart before_u, Dart before_w);

}  // namespace linkcomp
