#pragma once

#include <vector>

#include "delmorse/morse.hpp"

namespace delmorse {

// Directed graph on the intervals of the Delaunay gradient: an arc (mu, nu)
// whenever some simplex of mu is a face of some simplex of nu. Acyclic after
// removing self-loops.
struct IntervalDigraph {
    int num_nodes = 0;
    std::vector<std::pair<int, int>> arcs;       // deduplicated, sorted
    std::vector<std::vector<int>> out_adjacency;

    bool has_arc(int from, int to) const;
};

IntervalDigraph build_interval_digraph(const GeneralizedVectorField& VX);

// Per-interval entry value into the Wrap filtration: the smallest value of a
// singular interval reachable along directed paths (infinity when none is).
// An interval belongs to Wrap_r exactly when its entry value is at most r^2.
std::vector<double> wrap_entry_values(const GeneralizedVectorField& VX, const IntervalDigraph& G);

// Wrap complex for the cap: union of the lower sets of all singular intervals
// with value at most the cap. Simplices carry their Wrap filtration entry
// values, so sublevel restriction reproduces Wrap_r for every r.
FilteredComplex wrap_complex(const WeightedPointSet& X, double sq_radius_cap,
                             const Tolerances& tol = {});

// Same construction from an already computed Delaunay triangulation and
// gradient; deltri must be the full (uncapped) Delaunay complex.
FilteredComplex wrap_complex_from_gradient(const FilteredComplex& deltri,
                                           const GeneralizedVectorField& VX, double sq_radius_cap);

}  // namespace delmorse
