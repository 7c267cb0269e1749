#include "delmorse/morse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace delmorse {

std::vector<Simplex> Interval::members() const {
    const Simplex free = simplex_difference(upper, lower);
    std::vector<Simplex> out;
    out.reserve(size_t{1} << free.size());
    for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
        Simplex q = lower;
        for (size_t i = 0; i < free.size(); ++i)
            if (mask & (1u << i)) q = simplex_plus(q, free[i]);
        out.push_back(std::move(q));
    }
    return out;
}

const Interval& GeneralizedVectorField::interval_of_simplex(const Simplex& s) const {
    const int idx = complex->index_of(s);
    if (idx < 0) throw PreconditionViolated("simplex not in the field's complex");
    return intervals[interval_of[idx]];
}

GeneralizedVectorField radius_gradient(const WeightedPointSet& X, const Simplex& E,
                                       const FilteredComplex& K, const Tolerances& tol) {
    GeneralizedVectorField W;
    W.complex = &K;
    W.interval_of.assign(K.size(), -1);

    std::map<std::pair<Simplex, Simplex>, int> seen;
    for (size_t i = 0; i < K.size(); ++i) {
        const auto& e = K.entry(i);
        SolveResult r = smallest_sphere(X, e.simplex, E, tol);
        if (!r.feasible())
            throw PreconditionViolated("stored simplex has no sphere; complex does not match (X, E)");
        const auto key = std::make_pair(r.cert.front, r.cert.incl_set);
        auto [it, fresh] = seen.try_emplace(key, static_cast<int>(W.intervals.size()));
        if (fresh) {
            W.intervals.push_back({key.first, key.second, r.value()});
        } else if (std::abs(W.intervals[it->second].value - r.value()) > tol.classify) {
            throw DegenerateInput("two distinct spheres collide on one interval within tolerance");
        }
        W.interval_of[i] = it->second;
    }

    // The intervals must partition K: every member of every interval is a
    // stored simplex assigned to that same interval.
    for (size_t id = 0; id < W.intervals.size(); ++id) {
        for (const auto& q : W.intervals[id].members()) {
            const int idx = K.index_of(q);
            if (idx < 0 || W.interval_of[idx] != static_cast<int>(id))
                throw PreconditionViolated(
                    "gradient intervals do not partition the complex; was it built with a "
                    "dimension cap?");
        }
    }
    return W;
}

bool contracted_digraph_acyclic(const FilteredComplex& K, const std::vector<int>& class_of,
                                int num_classes) {
    std::vector<std::vector<int>> out_adj(num_classes);
    for (size_t i = 0; i < K.size(); ++i) {
        const int ci = class_of[i];
        if (ci < 0) continue;
        for (const auto& f : simplex_facets(K.entry(i).simplex)) {
            const int j = K.index_of(f);
            if (j < 0) continue;
            const int cj = class_of[j];
            if (cj < 0 || cj == ci) continue;
            out_adj[cj].push_back(ci);
        }
    }
    std::vector<int> indegree(num_classes, 0);
    for (auto& adj : out_adj) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        for (int t : adj) ++indegree[t];
    }
    std::vector<int> stack;
    for (int c = 0; c < num_classes; ++c)
        if (indegree[c] == 0) stack.push_back(c);
    int seen = 0;
    while (!stack.empty()) {
        const int c = stack.back();
        stack.pop_back();
        ++seen;
        for (int t : out_adj[c])
            if (--indegree[t] == 0) stack.push_back(t);
    }
    return seen == num_classes;
}

bool is_generalized_morse(const FilteredComplex& K, const GeneralizedVectorField& W,
                          const Tolerances& tol) {
    if (W.complex != &K || W.interval_of.size() != K.size()) return false;

    // Exact partition with coherent values.
    size_t covered = 0;
    for (size_t id = 0; id < W.intervals.size(); ++id) {
        const auto& iv = W.intervals[id];
        if (!simplex_subset(iv.lower, iv.upper)) return false;
        for (const auto& q : iv.members()) {
            const int idx = K.index_of(q);
            if (idx < 0 || W.interval_of[idx] != static_cast<int>(id)) return false;
            if (std::abs(K.entry(idx).value - iv.value) > tol.classify) return false;
            ++covered;
        }
    }
    if (covered != K.size()) return false;

    // Monotone with equality exactly inside intervals.
    for (size_t i = 0; i < K.size(); ++i) {
        const auto& e = K.entry(i);
        for (const auto& f : simplex_facets(e.simplex)) {
            const int j = K.index_of(f);
            if (j < 0) return false;
            const bool same = W.interval_of[i] == W.interval_of[j];
            const double fv = K.entry(j).value;
            if (same) {
                if (std::abs(fv - e.value) > tol.classify) return false;
            } else {
                if (fv >= e.value - tol.classify) return false;
            }
        }
    }
    return contracted_digraph_acyclic(K, W.interval_of, static_cast<int>(W.intervals.size()));
}

DiscreteGradient vertex_refine(const GeneralizedVectorField& W, const std::vector<int>& order) {
    auto rank = [&](int v) { return order.empty() ? v : order[v]; };
    DiscreteGradient V;
    for (const auto& iv : W.intervals) {
        if (iv.singular()) {
            V.critical.push_back(iv.lower);
            continue;
        }
        const Simplex free = simplex_difference(iv.upper, iv.lower);
        int x = free[0];
        for (int v : free)
            if (rank(v) < rank(x)) x = v;
        Simplex rest = simplex_minus(free, x);
        for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
            Simplex q = iv.lower;
            for (size_t i = 0; i < rest.size(); ++i)
                if (mask & (1u << i)) q = simplex_plus(q, rest[i]);
            V.pairs.emplace_back(q, simplex_plus(q, x));
        }
    }
    return V;
}

std::vector<std::pair<Simplex, double>> critical_simplices(const GeneralizedVectorField& W) {
    std::vector<std::pair<Simplex, double>> out;
    for (const auto& iv : W.intervals)
        if (iv.singular()) out.emplace_back(iv.lower, iv.value);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return out;
}

DiscreteGradient compose_gradients(const DiscreteGradient& V0, const FilteredComplex& K0,
                                   const DiscreteGradient& V1, const FilteredComplex& K1) {
    for (const auto& [p, r] : V1.pairs)
        if (K0.contains(p) || K0.contains(r))
            throw PreconditionViolated("a pair of the second gradient touches the subcomplex");
    DiscreteGradient V;
    V.pairs = V0.pairs;
    V.pairs.insert(V.pairs.end(), V1.pairs.begin(), V1.pairs.end());
    std::unordered_map<Simplex, bool, SimplexHash> paired;
    for (const auto& [p, r] : V.pairs) {
        paired[p] = true;
        paired[r] = true;
    }
    for (const auto& e : K1.entries())
        if (!paired.count(e.simplex)) V.critical.push_back(e.simplex);
    return V;
}

GeneralizedVectorField sum_refinement(const GeneralizedVectorField& WE,
                                      const GeneralizedVectorField& WF,
                                      const FilteredComplex& K) {
    GeneralizedVectorField W;
    W.complex = &K;
    W.interval_of.assign(K.size(), -1);
    std::map<std::pair<Simplex, Simplex>, int> seen;
    for (size_t i = 0; i < K.size(); ++i) {
        const auto& q = K.entry(i).simplex;
        const Interval& ie = WE.interval_of_simplex(q);
        const Interval& jf = WF.interval_of_simplex(q);
        // [P1,R1] cap [P2,R2] = [P1 cup P2, R1 cap R2], nonempty since q is in both.
        auto key = std::make_pair(simplex_union(ie.lower, jf.lower),
                                  simplex_intersection(ie.upper, jf.upper));
        auto [it, fresh] = seen.try_emplace(key, static_cast<int>(W.intervals.size()));
        if (fresh) W.intervals.push_back({key.first, key.second, K.entry(i).value});
        W.interval_of[i] = it->second;
    }
    return W;
}

bool is_gradient(const DiscreteGradient& V, const FilteredComplex& K) {
    std::vector<int> class_of(K.size(), -1);
    int next = 0;
    for (const auto& [p, r] : V.pairs) {
        const int ip = K.index_of(p);
        const int ir = K.index_of(r);
        if (ip < 0 || ir < 0) return false;
        if (r.size() != p.size() + 1 || !simplex_subset(p, r)) return false;
        if (class_of[ip] != -1 || class_of[ir] != -1) return false;  // not a partition
        class_of[ip] = next;
        class_of[ir] = next;
        ++next;
    }
    for (const auto& c : V.critical) {
        const int ic = K.index_of(c);
        if (ic < 0 || class_of[ic] != -1) return false;
        class_of[ic] = next++;
    }
    for (int c : class_of)
        if (c == -1) return false;  // uncovered simplex
    return contracted_digraph_acyclic(K, class_of, next);
}

}  // namespace delmorse
