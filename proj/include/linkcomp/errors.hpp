#pragma once

#include <stdexcept>
#include <string>

namespace linkcomp {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition (bad vertex id, loop
// contraction, non-tree input, ...).
struct precondition_error : error {
    using error::error;
};

// Input text could not be parsed (malformed JSON, wrong field types).
struct parse_error : error {
    using error::error;
};

// The Tutte evaluator refused an instance above its edge cap.  This is a
// deliberate refusal, not a failure.
struct cap_exceeded_error : error {
    cap_exceeded_error(int edges, int cap)
        : error("edge count " + std::to_string(edges) +
                " exceeds tutte cap " + std::to_string(cap)),
          edges(edges), cap(cap) {}
    int edges;
    int cap;
};

// A rotation system does not describe a sphere embedding.  Carries the
// offending component (by its minimum vertex id) and its Euler value.
struct genus_error : error {
    genus_error(int component_min_vertex, int euler)
        : error("component at vertex " + std::to_string(component_min_vertex) +
                " has Euler value " + std::to_string(euler) + ", expected 2"),
          component_min_vertex(component_min_vertex), euler(euler) {}
    int component_min_vertex;
    int euler;
};

// An internal consistency guard fired.  Indicates an implementation bug,
// never bad input.
struct internal_error : error {
    using error::error;
};

}  // namespace linkcomp
