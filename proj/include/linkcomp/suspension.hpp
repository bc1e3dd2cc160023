#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "linkcomp/embedding.hpp"
#include "linkcomp/multigraph.hpp"

namespace linkcomp {

/// A tree (or forest) together with an apex vertex joined to every leaf by
/// exactly one edge.
struct Suspension {
    Multigraph graph;
    int apex;
    std::vector<int> base_vertices;                 // ascending, excludes apex
    std::vector<std::pair<int, int>> leaf_edges;    // (leaf, apex edge id), ascending leaf
};

/// New vertex n joined to every leaf of T, edges appended in ascending leaf
/// order.  T must be a tree with at least one edge.
Suspension suspend_tree(const Multigraph& tree);

/// One shared apex joined to every leaf of every component.  F must be a
/// forest whose components all have at least one edge.
Suspension suspend_forest(const Multigraph& forest);

/// Sphere embedding of a suspended tree, honoring a given rotation of the
/// base tree: the base's unique face walk fixes the cyclic order in which
/// leaves appear, the apex cycle is that order reversed, and each leaf's
/// apex dart sits next to its single tree dart.  Always genus 0.
RotationSystem embed_suspension(const Multigraph& graph, int apex,
                                const RotationSystem& base_rot);
RotationSystem embed_suspension(const Multigraph& graph, int apex);

/// suspend_tree plus embed_suspension for the given tree rotation.
std::pair<Suspension, RotationSystem> suspend_tree_embedded(
    const Multigraph& tree, const RotationSystem& tree_rot);

// -- apex normalization ----------------------------------------------------

struct LoopDeletionStep {
    int edge;
    friend bool operator==(const LoopDeletionStep&, const LoopDeletionStep&) = default;
};
struct ParallelPairDeletionStep {
    int vertex;    // tree-side endpoint
    int edge_lo;
    int edge_hi;
    friend bool operator==(const ParallelPairDeletionStep&,
                           const ParallelPairDeletionStep&) = default;
};
struct LeafUntwistContractionStep {
    int edge;
    friend bool operator==(const LeafUntwistContractionStep&,
                           const LeafUntwistContractionStep&) = default;
};
struct PathAttachmentStep {
    int vertex;    // the non-leaf x gaining the length-two path
    int p;
    int q;
    friend bool operator==(const PathAttachmentStep&, const PathAttachmentStep&) = default;
};

using NormStep = std::variant<LoopDeletionStep, ParallelPairDeletionStep,
                              LeafUntwistContractionStep, PathAttachmentStep>;

struct NormalizationTrace {
    std::vector<NormStep> steps;
};

struct NormalizeResult {
    /// The suspended-tree form, absent when the reduction degenerated.
    std::optional<Suspension> suspended;
    /// Set in the degenerate outcomes: base collapsed to one vertex with
    /// the apex isolated (l = 2) or joined by a single edge (l = 1).
    std::optional<int> degenerate_l;
    Multigraph output;   // exactly what replaying the trace produces
    int output_apex;     // apex id inside output
    NormalizationTrace trace;
};

/// Rewrites an apex graph (G minus apex is a tree; parallels only at the
/// apex) into a suspended tree with the same link component number, by
/// applying to fixpoint, in this order: delete apex loops, cancel parallel
/// pairs, untwist-contract tree leaves not joined to the apex, then divert
/// each apex edge ending at a non-leaf x through a fresh length-two path
/// x-p-q.
NormalizeResult normalize_apex(const Multigraph& g, int apex);

/// Re-applies a recorded trace; the result must equal the original output.
Multigraph replay_normalization(const Multigraph& g, int apex,
                                const NormalizationTrace& trace);

}  // namespace linkcomp
