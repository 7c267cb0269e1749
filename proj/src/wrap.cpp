#include "delmorse/wrap.hpp"

#include <algorithm>

namespace delmorse {

bool IntervalDigraph::has_arc(int from, int to) const {
    return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(from, to));
}

IntervalDigraph build_interval_digraph(const GeneralizedVectorField& VX) {
    const FilteredComplex& K = *VX.complex;
    IntervalDigraph G;
    G.num_nodes = static_cast<int>(VX.intervals.size());
    for (size_t i = 0; i < K.size(); ++i) {
        const int ci = VX.interval_of[i];
        for (const auto& f : simplex_facets(K.entry(i).simplex)) {
            const int j = K.index_of(f);
            if (j < 0) continue;
            const int cj = VX.interval_of[j];
            if (cj != ci) G.arcs.emplace_back(cj, ci);
        }
    }
    std::sort(G.arcs.begin(), G.arcs.end());
    G.arcs.erase(std::unique(G.arcs.begin(), G.arcs.end()), G.arcs.end());
    G.out_adjacency.assign(G.num_nodes, {});
    for (const auto& [a, b] : G.arcs) G.out_adjacency[a].push_back(b);
    return G;
}

std::vector<double> wrap_entry_values(const GeneralizedVectorField& VX, const IntervalDigraph& G) {
    // entry(I) = min over singular intervals reachable from I of their value.
    // The digraph is acyclic, so a memoized depth-first pass suffices.
    std::vector<double> entry(G.num_nodes, kInf);
    std::vector<char> done(G.num_nodes, 0);
    std::vector<int> stack;
    for (int s = 0; s < G.num_nodes; ++s) {
        if (done[s]) continue;
        stack.push_back(s);
        while (!stack.empty()) {
            const int u = stack.back();
            if (done[u]) {
                stack.pop_back();
                continue;
            }
            bool ready = true;
            for (int v : G.out_adjacency[u]) {
                if (!done[v]) {
                    stack.push_back(v);
                    ready = false;
                }
            }
            if (!ready) continue;
            double best = VX.intervals[u].singular() ? VX.intervals[u].value : kInf;
            for (int v : G.out_adjacency[u]) best = std::min(best, entry[v]);
            entry[u] = best;
            done[u] = 1;
            stack.pop_back();
        }
    }
    return entry;
}

FilteredComplex wrap_complex_from_gradient(const FilteredComplex& deltri,
                                           const GeneralizedVectorField& VX,
                                           double sq_radius_cap) {
    IntervalDigraph G = build_interval_digraph(VX);
    std::vector<double> entry = wrap_entry_values(VX, G);

    FilteredComplex out(deltri.ambient_dim(), deltri.ground_size(), deltri.selective_set(),
                        sq_radius_cap, "wrap");
    for (size_t i = 0; i < deltri.size(); ++i) {
        const double v = entry[VX.interval_of[i]];
        // A finite entry value is required: intervals that reach no singular
        // interval stay outside the Wrap complex for every cap.
        if (v < kInf && v <= sq_radius_cap) out.insert(deltri.entry(i).simplex, v);
    }
    out.finalize();
    return out;
}

FilteredComplex wrap_complex(const WeightedPointSet& X, double sq_radius_cap,
                             const Tolerances& tol) {
    BuildOptions opt;
    opt.tol = tol;
    FilteredComplex deltri = build_delaunay(X, opt);
    GeneralizedVectorField VX = radius_gradient(X, X.all_vertices(), deltri, tol);
    return wrap_complex_from_gradient(deltri, VX, sq_radius_cap);
}

}  // namespace delmorse
