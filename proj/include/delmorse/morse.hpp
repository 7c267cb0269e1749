#pragma once

#include <utility>
#include <vector>

#include "delmorse/complex.hpp"
#include "delmorse/simplex.hpp"

namespace delmorse {

// Face interval [lower, upper] = { Q : lower subset Q subset upper }.
struct Interval {
    Simplex lower;
    Simplex upper;
    double value = 0.0;

    bool singular() const { return lower == upper; }
    bool contains(const Simplex& q) const {
        return simplex_subset(lower, q) && simplex_subset(q, upper);
    }
    std::vector<Simplex> members() const;
};

// Partition of a complex into face intervals; the gradient of a radius
// function when extracted by radius_gradient.
struct GeneralizedVectorField {
    const FilteredComplex* complex = nullptr;
    std::vector<Interval> intervals;
    std::vector<int> interval_of;  // aligned with complex entries

    const Interval& interval_of_simplex(const Simplex& s) const;
};

struct DiscreteGradient {
    std::vector<std::pair<Simplex, Simplex>> pairs;  // (facet, cofacet)
    std::vector<Simplex> critical;
};

// Gradient of the radius function of (X, E) on K: every stored simplex Q is
// assigned to the interval [Front(S), Incl(S)] of its smallest sphere
// S = S(Q, E). K must carry no dimension truncation, so that intervals lie
// entirely inside it.
GeneralizedVectorField radius_gradient(const WeightedPointSet& X, const Simplex& E,
                                       const FilteredComplex& K, const Tolerances& tol = {});

// True iff W partitions K, values are constant on intervals and strictly
// separate facet-cofacet pairs across intervals, and the contracted Hasse
// digraph is acyclic.
bool is_generalized_morse(const FilteredComplex& K, const GeneralizedVectorField& W,
                          const Tolerances& tol = {});

// Refines every non-singular interval [P, R] into the pairs {Q - x, Q + x}
// where x is the minimal vertex of R minus P under the given order (vertex ->
// rank; empty means the natural vertex order). Singular intervals become
// critical simplices.
DiscreteGradient vertex_refine(const GeneralizedVectorField& W, const std::vector<int>& order = {});

std::vector<std::pair<Simplex, double>> critical_simplices(const GeneralizedVectorField& W);

// Gradient on K1 whose pairs are those of V0 (on K0) plus those of V1; every
// pair of V1 must be disjoint from K0.
DiscreteGradient compose_gradients(const DiscreteGradient& V0, const FilteredComplex& K0,
                                   const DiscreteGradient& V1, const FilteredComplex& K1);

// Common refinement { I cap J } of two generalized vector fields over K;
// the gradient of the sum of the two underlying Morse functions.
GeneralizedVectorField sum_refinement(const GeneralizedVectorField& WE,
                                      const GeneralizedVectorField& WF, const FilteredComplex& K);

// Partition into singletons and facet-cofacet pairs with acyclic contracted
// Hasse digraph.
bool is_gradient(const DiscreteGradient& V, const FilteredComplex& K);

// Shared acyclicity test: arcs run from the class of a facet to the class of
// its cofacet (classes with negative id are skipped); true iff the contracted
// digraph, minus self-loops, has a topological order.
bool contracted_digraph_acyclic(const FilteredComplex& K, const std::vector<int>& class_of,
                                int num_classes);

}  // namespace delmorse
