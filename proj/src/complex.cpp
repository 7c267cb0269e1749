#include "delmorse/complex.hpp"

#include <algorithm>
#include <thread>

namespace delmorse {

FilteredComplex::FilteredComplex(int ambient_dim, int ground_size, Simplex selective, double cap,
                                 std::string kind)
    : ambient_dim_(ambient_dim),
      ground_size_(ground_size),
      selective_(std::move(selective)),
      cap_(cap),
      kind_(std::move(kind)) {}

std::optional<double> FilteredComplex::value_of(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return entries_[it->second].value;
}

int FilteredComplex::index_of(const Simplex& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

void FilteredComplex::insert(Simplex s, double value) {
    entries_.push_back({std::move(s), value});
}

void FilteredComplex::finalize() {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.simplex.size() != b.simplex.size()) return a.simplex.size() < b.simplex.size();
        return a.simplex < b.simplex;
    });
    index_.clear();
    index_.reserve(entries_.size());
    for (size_t i = 0; i < entries_.size(); ++i) index_[entries_[i].simplex] = static_cast<int>(i);
}

FilteredComplex FilteredComplex::restrict_to_cap(double sq_radius_cap) const {
    FilteredComplex out(ambient_dim_, ground_size_, selective_, std::min(cap_, sq_radius_cap), kind_);
    for (const auto& e : entries_)
        if (e.value <= sq_radius_cap) out.insert(e.simplex, e.value);
    out.finalize();
    return out;
}

bool FilteredComplex::subset_of(const FilteredComplex& other) const {
    for (const auto& e : entries_)
        if (!other.contains(e.simplex)) return false;
    return true;
}

bool FilteredComplex::same_simplices(const FilteredComplex& other) const {
    return size() == other.size() && subset_of(other);
}

bool FilteredComplex::face_closed() const {
    for (const auto& e : entries_)
        for (const auto& f : simplex_facets(e.simplex))
            if (!contains(f)) return false;
    return true;
}

bool FilteredComplex::monotone(double eps) const {
    for (const auto& e : entries_) {
        for (const auto& f : simplex_facets(e.simplex)) {
            auto v = value_of(f);
            if (!v || *v > e.value + eps) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> FilteredComplex::cofacet_lists() const {
    std::vector<std::vector<int>> out(entries_.size());
    for (size_t i = 0; i < entries_.size(); ++i) {
        for (const auto& f : simplex_facets(entries_[i].simplex)) {
            const int j = index_of(f);
            if (j >= 0) out[j].push_back(static_cast<int>(i));
        }
    }
    return out;
}

namespace {

// Evaluates the candidate simplices of one dimension sweep, optionally across
// threads; sphere solves are pure so the split is safe.
std::vector<std::optional<double>> evaluate_candidates(const WeightedPointSet& X, const Simplex& E,
                                                       const std::vector<Simplex>& candidates,
                                                       const BuildOptions& opt) {
    std::vector<std::optional<double>> values(candidates.size());
    auto evaluate_range = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            SolveResult r = smallest_sphere(X, candidates[i], E, opt.tol);
            if (r.feasible() && r.value() <= opt.sq_radius_cap) values[i] = r.value();
        }
    };
    const int threads = std::max(1, opt.threads);
    if (threads == 1 || candidates.size() < 64) {
        evaluate_range(0, candidates.size());
    } else {
        std::vector<std::thread> pool;
        const size_t chunk = (candidates.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const size_t lo = std::min(candidates.size(), t * chunk);
            const size_t hi = std::min(candidates.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(evaluate_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return values;
}

}  // namespace

FilteredComplex build_selective_delaunay(const WeightedPointSet& X, const Simplex& E,
                                         const BuildOptions& opt) {
    const int m = X.size();
    FilteredComplex K(X.dim(), m, E, opt.sq_radius_cap, "selective");
    const int max_dim = opt.max_dim < 0 ? std::max(0, m - 1) : opt.max_dim;

    std::vector<Simplex> layer;
    {
        std::vector<Simplex> candidates;
        for (int v = 0; v < m; ++v) candidates.push_back({v});
        auto values = evaluate_candidates(X, E, candidates, opt);
        for (size_t i = 0; i < candidates.size(); ++i) {
            if (values[i]) {
                K.insert(candidates[i], *values[i]);
                layer.push_back(candidates[i]);
            }
        }
    }

    // K is face-closed by monotonicity of the radius function, so a simplex can
    // only be present when all of its facets are; expanding dimension by
    // dimension and testing exactly those candidates is exhaustive.
    std::unordered_map<Simplex, bool, SimplexHash> present;
    for (const auto& s : layer) present[s] = true;

    for (int d = 1; d <= max_dim && !layer.empty(); ++d) {
        std::vector<Simplex> candidates;
        for (const auto& s : layer) {
            for (int v = s.back() + 1; v < m; ++v) {
                Simplex t = s;
                t.push_back(v);
                bool facets_ok = true;
                for (const auto& f : simplex_facets(t)) {
                    if (!present.count(f)) {
                        facets_ok = false;
                        break;
                    }
                }
                if (facets_ok) candidates.push_back(std::move(t));
            }
        }
        auto values = evaluate_candidates(X, E, candidates, opt);
        std::vector<Simplex> next;
        for (size_t i = 0; i < candidates.size(); ++i) {
            if (values[i]) {
                K.insert(candidates[i], *values[i]);
                present[candidates[i]] = true;
                next.push_back(candidates[i]);
            }
        }
        layer = std::move(next);
    }
    K.finalize();
    return K;
}

FilteredComplex build_cech(const WeightedPointSet& X, const BuildOptions& opt) {
    FilteredComplex K = build_selective_delaunay(X, {}, opt);
    FilteredComplex out(X.dim(), X.size(), {}, opt.sq_radius_cap, "cech");
    for (const auto& e : K.entries()) out.insert(e.simplex, e.value);
    out.finalize();
    return out;
}

FilteredComplex build_delaunay(const WeightedPointSet& X, const BuildOptions& opt) {
    FilteredComplex K = build_selective_delaunay(X, X.all_vertices(), opt);
    FilteredComplex out(X.dim(), X.size(), X.all_vertices(), opt.sq_radius_cap, "delaunay");
    for (const auto& e : K.entries()) out.insert(e.simplex, e.value);
    out.finalize();
    return out;
}

FilteredComplex build_delaunay_cech(const WeightedPointSet& X, const BuildOptions& opt) {
    BuildOptions full = opt;
    full.sq_radius_cap = kInf;
    FilteredComplex deltri = build_selective_delaunay(X, X.all_vertices(), full);

    FilteredComplex out(X.dim(), X.size(), {}, opt.sq_radius_cap, "delcech");
    for (const auto& e : deltri.entries()) {
        SolveResult r = smallest_sphere(X, e.simplex, {}, opt.tol);
        if (r.feasible() && r.value() <= opt.sq_radius_cap) out.insert(e.simplex, r.value());
    }
    out.finalize();
    return out;
}

}  // namespace delmorse
