#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "delmorse/morse.hpp"
#include "delmorse/wrap.hpp"

namespace delmorse {

// The pairing function g on Del(X,E) \ Del(X,F): g(Q) = x with
// S(Q-x, E) = S(Q+x, E), both partners outside Del(X,F), and
// g(Q-x) = g(Q+x) = x, so the pairs {Q-x, Q+x} partition the domain.
struct PairingAssignment {
    std::unordered_map<Simplex, int, SimplexHash> g;
};

// Builds g by scanning the fixed vertex order: starting from
// A = F cap Excl(S(Q,E)), the first x in F whose addition to the exclusion set
// makes Q infeasible is the pairing vertex.
PairingAssignment pairing_map(const WeightedPointSet& X, const Simplex& E, const Simplex& F,
                              const Tolerances& tol = {});

struct CollapseStep {
    Simplex facet;
    Simplex cofacet;
    double value = 0.0;
};

struct CollapseSequence {
    std::string from_label;
    std::string to_label;
    std::vector<CollapseStep> steps;

    CollapseSequence& append(const CollapseSequence& other);
};

// Del_cap(X,E) collapses onto Del_cap(X,E) cap DelTri(X,F): the pairing-map
// pairs, emitted stage by stage along the vertex order and within a stage by
// decreasing value, decreasing dimension, reverse-lexicographic facet.
CollapseSequence collapse_outside_deltri(const WeightedPointSet& X, const Simplex& E,
                                         const Simplex& F, double sq_radius_cap,
                                         const Tolerances& tol = {});

// Del_cap(X,E) cap DelTri(X,F) collapses onto Del_cap(X,F): vertex refinement
// of the sum-refined gradient intervals strictly between the two caps.
CollapseSequence collapse_inside_deltri(const WeightedPointSet& X, const Simplex& E,
                                        const Simplex& F, double sq_radius_cap,
                                        const Tolerances& tol = {});

CollapseSequence collapse_cech_to_delcech(const WeightedPointSet& X, double sq_radius_cap,
                                          const Tolerances& tol = {});
CollapseSequence collapse_delcech_to_del(const WeightedPointSet& X, double sq_radius_cap,
                                         const Tolerances& tol = {});
CollapseSequence collapse_del_to_wrap(const WeightedPointSet& X, double sq_radius_cap,
                                      const Tolerances& tol = {});

struct CollapseVerification {
    bool ok = true;
    long failing_step = -1;  // -1: no failing step (mismatched final set reports -2)
    std::string reason;
};

// Replays the steps on a copy of K, checking that each facet is free (its
// unique remaining cofacet is the step's cofacet and that cofacet is maximal),
// and that the surviving simplex set equals the target.
CollapseVerification verify_collapse(const FilteredComplex& K, const CollapseSequence& seq,
                                     const FilteredComplex& target);

// Simplices of DelTri(X,F) whose (X,E) radius value is at most the cap,
// carrying those values: the middle complex of the two-stage collapse.
FilteredComplex build_selective_restricted(const WeightedPointSet& X, const Simplex& E,
                                           const Simplex& F, double sq_radius_cap,
                                           const Tolerances& tol = {});

// Precomputed data of the full hierarchy Cech -> DelCech -> Del -> Wrap for
// one point set. The pair sets do not depend on the cap, so sequences and
// complexes at any cap come from filtering the master lists.
class HierarchyPlan {
public:
    explicit HierarchyPlan(const WeightedPointSet& X, const Tolerances& tol = {});

    CollapseSequence cech_to_delcech(double sq_radius_cap) const;
    CollapseSequence delcech_to_del(double sq_radius_cap) const;
    CollapseSequence del_to_wrap(double sq_radius_cap) const;

    FilteredComplex cech(double sq_radius_cap) const { return cech_inf_.restrict_to_cap(sq_radius_cap); }
    FilteredComplex delcech(double sq_radius_cap) const { return delcech_inf_.restrict_to_cap(sq_radius_cap); }
    FilteredComplex delaunay(double sq_radius_cap) const { return deltri_.restrict_to_cap(sq_radius_cap); }
    FilteredComplex wrap(double sq_radius_cap) const { return wrap_inf_.restrict_to_cap(sq_radius_cap); }

    const std::vector<double>& critical_values() const { return critical_values_; }

private:
    FilteredComplex cech_inf_, delcech_inf_, deltri_, wrap_inf_;
    struct Stage1Item { CollapseStep step; };                   // emit when value <= cap
    struct Stage2Item { CollapseStep step; double value_f; };   // emit when value <= cap < value_f
    struct Stage3Item { CollapseStep step; double entry; };     // emit when value <= cap < entry
    std::vector<Stage1Item> stage1_;
    std::vector<Stage2Item> stage2_;
    std::vector<Stage3Item> stage3_;
    std::vector<double> critical_values_;
};

struct ZigzagInclusion {
    std::string from, to;
    size_t from_size = 0, to_size = 0;
    bool holds = false;
};

struct ZigzagCollapse {
    std::string label;
    size_t steps = 0;
    bool verified = false;
};

struct ZigzagReport {
    std::vector<ZigzagInclusion> inclusions;
    std::vector<ZigzagCollapse> collapses;
    std::vector<std::pair<std::string, size_t>> complex_sizes;

    bool all_hold() const;
    std::string summary() const;
};

// Connects Del_r(X) and Del_r(Y) through the selective complexes of the union:
// verifies every inclusion of the connecting diagram and replays the
// collapse-marked arrows.
ZigzagReport zigzag_connect(const WeightedPointSet& X, const WeightedPointSet& Y,
                            double sq_radius_cap, const Tolerances& tol = {});

}  // namespace delmorse
