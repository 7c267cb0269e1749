#include "delmorse/collapse.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace delmorse {

CollapseSequence& CollapseSequence::append(const CollapseSequence& other) {
    steps.insert(steps.end(), other.steps.begin(), other.steps.end());
    to_label = other.to_label;
    return *this;
}

PairingAssignment pairing_map(const WeightedPointSet& X, const Simplex& E, const Simplex& F,
                              const Tolerances& tol) {
    if (!simplex_subset(E, F)) throw PreconditionViolated("pairing_map requires E subset of F");
    BuildOptions full;
    full.tol = tol;
    FilteredComplex KE = build_selective_delaunay(X, E, full);
    FilteredComplex KF = build_selective_delaunay(X, F, full);

    PairingAssignment out;
    for (const auto& e : KE.entries()) {
        const Simplex& Q = e.simplex;
        if (KF.contains(Q)) continue;

        SolveResult r = smallest_sphere(X, Q, E, tol);
        Simplex A = simplex_intersection(F, r.cert.excl_set);
        int x = -1;
        for (int v : F) {
            if (simplex_contains_vertex(A, v)) continue;
            SolveResult grown = smallest_sphere(X, Q, simplex_plus(A, v), tol);
            if (!grown.feasible()) {
                x = v;
                break;
            }
            A = simplex_plus(A, v);
        }
        if (x < 0)
            throw DegenerateInput("pairing scan exhausted F although Q is outside Del(X,F)");
        out.g[Q] = x;
    }

    // Partition sanity: partners exist, carry the same vertex, and are outside
    // Del(X,F).
    for (const auto& [Q, x] : out.g) {
        const Simplex minus = simplex_minus(Q, x);
        const Simplex plus = simplex_plus(Q, x);
        auto im = out.g.find(minus);
        auto ip = out.g.find(plus);
        if (im == out.g.end() || ip == out.g.end() || im->second != x || ip->second != x ||
            KF.contains(minus) || KF.contains(plus))
            throw DegenerateInput("pairing map is not a consistent partition into pairs");
    }
    return out;
}

namespace {

// Within one removal batch: decreasing value, then decreasing dimension, then
// reverse-lexicographic facet. Any linear extension works; this one is fixed
// for determinism.
void sort_steps(std::vector<CollapseStep>& steps, const std::vector<double>& keys) {
    std::vector<size_t> order(steps.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (keys[a] != keys[b]) return keys[a] > keys[b];
        if (steps[a].cofacet.size() != steps[b].cofacet.size())
            return steps[a].cofacet.size() > steps[b].cofacet.size();
        return steps[a].facet > steps[b].facet;
    });
    std::vector<CollapseStep> sorted;
    sorted.reserve(steps.size());
    for (size_t i : order) sorted.push_back(std::move(steps[i]));
    steps = std::move(sorted);
}

}  // namespace

namespace {

// Refines a non-singular interval into the pairs {Q - x, Q + x} for the
// minimal free vertex x, pushing one step per pair.
void refine_interval(const Interval& iv, double step_value, double sort_key,
                     std::vector<CollapseStep>& steps, std::vector<double>& keys) {
    const Simplex free = simplex_difference(iv.upper, iv.lower);
    const int x = free.front();
    const Simplex rest = simplex_minus(free, x);
    for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
        Simplex q = iv.lower;
        for (size_t i = 0; i < rest.size(); ++i)
            if (mask & (1u << i)) q = simplex_plus(q, rest[i]);
        steps.push_back({q, simplex_plus(q, x), step_value});
        keys.push_back(sort_key);
    }
}

// Orders a set of gradient pairs into an elementary collapse sequence on the
// start complex by repeatedly removing the best free pair (value descending,
// then dimension, then reverse-lexicographic facet). Acyclicity of the pair
// set guarantees a free pair exists at every step; the pairing vertex is not
// monotone along the face relation, so no fixed per-vertex batch order would
// do.
std::vector<CollapseStep> realize_collapse(const FilteredComplex& start,
                                           std::vector<CollapseStep> pairs) {
    std::vector<double> keys;
    keys.reserve(pairs.size());
    for (const auto& p : pairs) keys.push_back(p.value);
    sort_steps(pairs, keys);

    const auto cofacets = start.cofacet_lists();
    std::vector<char> alive(start.size(), 1);
    std::vector<char> used(pairs.size(), 0);
    std::vector<std::pair<int, int>> ids(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        ids[i] = {start.index_of(pairs[i].facet), start.index_of(pairs[i].cofacet)};
        if (ids[i].first < 0 || ids[i].second < 0)
            throw PreconditionViolated("collapse pair outside the start complex");
    }

    std::vector<CollapseStep> out;
    out.reserve(pairs.size());
    for (size_t removed = 0; removed < pairs.size(); ++removed) {
        bool progressed = false;
        for (size_t i = 0; i < pairs.size() && !progressed; ++i) {
            if (used[i]) continue;
            const auto [fi, ci] = ids[i];
            bool free = true;
            for (int c : cofacets[fi])
                if (alive[c] && c != ci) free = false;
            for (int c : cofacets[ci])
                if (alive[c]) free = false;
            if (!free) continue;
            alive[fi] = alive[ci] = 0;
            used[i] = 1;
            out.push_back(pairs[i]);
            progressed = true;
        }
        if (!progressed)
            throw DegenerateInput("gradient pairs admit no free pair; acyclicity violated");
    }
    return out;
}

// Master pair list of the pairing-map collapse at cap infinity; restricting to
// a cap keeps exactly the pairs whose value is at most the cap.
std::vector<CollapseStep> stage1_master(const WeightedPointSet& X, const Simplex& E,
                                        const Simplex& F, const Tolerances& tol) {
    BuildOptions full;
    full.tol = tol;
    FilteredComplex KE = build_selective_delaunay(X, E, full);
    PairingAssignment g = pairing_map(X, E, F, tol);

    std::vector<CollapseStep> out;
    for (const auto& [Q, x] : g.g) {
        if (simplex_contains_vertex(Q, x)) continue;
        out.push_back({Q, simplex_plus(Q, x), *KE.value_of(Q)});
    }
    return out;
}

// Master list for the collapse within DelTri(X, F): one entry per refined pair
// of a sum-refinement interval, tagged with both radius values.
struct Stage2MasterItem {
    CollapseStep step;
    double value_f;
};

std::vector<Stage2MasterItem> stage2_master(const WeightedPointSet& X, const Simplex& E,
                                            const Simplex& F, const Tolerances& tol) {
    if (!simplex_subset(E, F)) throw PreconditionViolated("requires E subset of F");
    BuildOptions full;
    full.tol = tol;
    FilteredComplex deltri = build_selective_delaunay(X, F, full);

    struct IntervalData {
        Interval interval;
        double value_e;
        double value_f;
    };
    std::map<std::pair<Simplex, Simplex>, IntervalData> intervals;
    for (const auto& entry : deltri.entries()) {
        SolveResult re = smallest_sphere(X, entry.simplex, E, tol);
        SolveResult rf = smallest_sphere(X, entry.simplex, F, tol);
        auto key = std::make_pair(simplex_union(re.cert.front, rf.cert.front),
                                  simplex_intersection(re.cert.incl_set, rf.cert.incl_set));
        intervals.try_emplace(key, IntervalData{{key.first, key.second, re.value()}, re.value(),
                                                rf.value()});
    }

    std::vector<CollapseStep> steps;
    std::vector<double> keys;
    std::vector<double> value_f;
    for (const auto& [key, data] : intervals) {
        if (data.value_f <= data.value_e + tol.classify) continue;  // same sphere: never removed
        if (data.interval.singular())
            throw DegenerateInput("removal interval is singular; general position violated");
        // Ordering across intervals follows the sum of the two radius
        // functions, which is strictly monotone on the refined field.
        refine_interval(data.interval, data.value_e, data.value_e + data.value_f, steps, keys);
        value_f.resize(steps.size(), data.value_f);
    }
    std::vector<size_t> order(steps.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (keys[a] != keys[b]) return keys[a] > keys[b];
        if (steps[a].cofacet.size() != steps[b].cofacet.size())
            return steps[a].cofacet.size() > steps[b].cofacet.size();
        return steps[a].facet > steps[b].facet;
    });
    std::vector<Stage2MasterItem> out;
    out.reserve(steps.size());
    for (size_t i : order) out.push_back({std::move(steps[i]), value_f[i]});
    return out;
}

}  // namespace

CollapseSequence collapse_outside_deltri(const WeightedPointSet& X, const Simplex& E,
                                         const Simplex& F, double sq_radius_cap,
                                         const Tolerances& tol) {
    CollapseSequence seq;
    seq.from_label = "sel-delaunay";
    seq.to_label = "sel-delaunay-restricted";
    std::vector<CollapseStep> pairs;
    for (auto& step : stage1_master(X, E, F, tol))
        if (step.value <= sq_radius_cap) pairs.push_back(std::move(step));
    BuildOptions opt;
    opt.sq_radius_cap = sq_radius_cap;
    opt.tol = tol;
    seq.steps = realize_collapse(build_selective_delaunay(X, E, opt), std::move(pairs));
    return seq;
}

CollapseSequence collapse_inside_deltri(const WeightedPointSet& X, const Simplex& E,
                                        const Simplex& F, double sq_radius_cap,
                                        const Tolerances& tol) {
    CollapseSequence seq;
    seq.from_label = "sel-delaunay-restricted";
    seq.to_label = "sel-delaunay-target";
    for (auto& item : stage2_master(X, E, F, tol))
        if (item.step.value <= sq_radius_cap && sq_radius_cap < item.value_f)
            seq.steps.push_back(std::move(item.step));
    return seq;
}

CollapseSequence collapse_cech_to_delcech(const WeightedPointSet& X, double sq_radius_cap,
                                          const Tolerances& tol) {
    CollapseSequence seq = collapse_outside_deltri(X, {}, X.all_vertices(), sq_radius_cap, tol);
    seq.from_label = "cech";
    seq.to_label = "delcech";
    return seq;
}

CollapseSequence collapse_delcech_to_del(const WeightedPointSet& X, double sq_radius_cap,
                                         const Tolerances& tol) {
    CollapseSequence seq = collapse_inside_deltri(X, {}, X.all_vertices(), sq_radius_cap, tol);
    seq.from_label = "delcech";
    seq.to_label = "delaunay";
    return seq;
}

CollapseSequence collapse_del_to_wrap(const WeightedPointSet& X, double sq_radius_cap,
                                      const Tolerances& tol) {
    BuildOptions full;
    full.tol = tol;
    FilteredComplex deltri = build_delaunay(X, full);
    GeneralizedVectorField VX = radius_gradient(X, X.all_vertices(), deltri, tol);
    IntervalDigraph G = build_interval_digraph(VX);
    std::vector<double> entry = wrap_entry_values(VX, G);

    CollapseSequence seq;
    seq.from_label = "delaunay";
    seq.to_label = "wrap";
    std::vector<CollapseStep> steps;
    std::vector<double> keys;
    for (size_t id = 0; id < VX.intervals.size(); ++id) {
        const Interval& iv = VX.intervals[id];
        const bool in_del = iv.value <= sq_radius_cap;
        // An infinite entry never reaches the wrap complex, not even at cap
        // infinity.
        const bool in_wrap = entry[id] < kInf && entry[id] <= sq_radius_cap;
        if (!in_del || in_wrap) continue;
        if (iv.singular())
            throw DegenerateInput("critical interval outside the wrap complex");
        refine_interval(iv, iv.value, iv.value, steps, keys);
    }
    sort_steps(steps, keys);
    seq.steps = std::move(steps);
    return seq;
}

HierarchyPlan::HierarchyPlan(const WeightedPointSet& X, const Tolerances& tol) {
    BuildOptions full;
    full.tol = tol;
    cech_inf_ = build_cech(X, full);
    deltri_ = build_delaunay(X, full);
    delcech_inf_ = build_delaunay_cech(X, full);

    for (auto& step : stage1_master(X, {}, X.all_vertices(), tol)) stage1_.push_back({std::move(step)});
    for (auto& item : stage2_master(X, {}, X.all_vertices(), tol))
        stage2_.push_back({std::move(item.step), item.value_f});

    GeneralizedVectorField VX = radius_gradient(X, X.all_vertices(), deltri_, tol);
    IntervalDigraph G = build_interval_digraph(VX);
    std::vector<double> entry = wrap_entry_values(VX, G);
    wrap_inf_ = wrap_complex_from_gradient(deltri_, VX, kInf);
    for (const auto& [s, v] : critical_simplices(VX)) critical_values_.push_back(v);

    std::vector<CollapseStep> steps;
    std::vector<double> keys;
    std::vector<double> entries;
    for (size_t id = 0; id < VX.intervals.size(); ++id) {
        const Interval& iv = VX.intervals[id];
        if (entry[id] < kInf && entry[id] <= iv.value + tol.classify) continue;  // inside wrap as soon as present
        if (iv.singular()) throw DegenerateInput("critical interval outside the wrap complex");
        refine_interval(iv, iv.value, iv.value, steps, keys);
        entries.resize(steps.size(), entry[id]);
    }
    std::vector<size_t> order(steps.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (keys[a] != keys[b]) return keys[a] > keys[b];
        if (steps[a].cofacet.size() != steps[b].cofacet.size())
            return steps[a].cofacet.size() > steps[b].cofacet.size();
        return steps[a].facet > steps[b].facet;
    });
    for (size_t i : order) stage3_.push_back({std::move(steps[i]), entries[i]});
}

CollapseSequence HierarchyPlan::cech_to_delcech(double sq_radius_cap) const {
    CollapseSequence seq;
    seq.from_label = "cech";
    seq.to_label = "delcech";
    std::vector<CollapseStep> pairs;
    for (const auto& item : stage1_)
        if (item.step.value <= sq_radius_cap) pairs.push_back(item.step);
    seq.steps = realize_collapse(cech(sq_radius_cap), std::move(pairs));
    return seq;
}

CollapseSequence HierarchyPlan::delcech_to_del(double sq_radius_cap) const {
    CollapseSequence seq;
    seq.from_label = "delcech";
    seq.to_label = "delaunay";
    for (const auto& item : stage2_)
        if (item.step.value <= sq_radius_cap && sq_radius_cap < item.value_f)
            seq.steps.push_back(item.step);
    return seq;
}

CollapseSequence HierarchyPlan::del_to_wrap(double sq_radius_cap) const {
    CollapseSequence seq;
    seq.from_label = "delaunay";
    seq.to_label = "wrap";
    for (const auto& item : stage3_) {
        const bool in_wrap = item.entry < kInf && item.entry <= sq_radius_cap;
        if (item.step.value <= sq_radius_cap && !in_wrap) seq.steps.push_back(item.step);
    }
    return seq;
}

CollapseVerification verify_collapse(const FilteredComplex& K, const CollapseSequence& seq,
                                     const FilteredComplex& target) {
    CollapseVerification out;
    auto fail = [&](long step, std::string reason) {
        out.ok = false;
        out.failing_step = step;
        out.reason = std::move(reason);
        return out;
    };

    const auto cofacets = K.cofacet_lists();
    std::vector<char> alive(K.size(), 1);
    for (size_t k = 0; k < seq.steps.size(); ++k) {
        const auto& st = seq.steps[k];
        const int fi = K.index_of(st.facet);
        const int ci = K.index_of(st.cofacet);
        if (fi < 0 || ci < 0) return fail(k, "step refers to a simplex outside the complex");
        if (!alive[fi] || !alive[ci]) return fail(k, "step refers to an already removed simplex");
        if (st.cofacet.size() != st.facet.size() + 1 || !simplex_subset(st.facet, st.cofacet))
            return fail(k, "cofacet does not cover facet");
        for (int c : cofacets[fi])
            if (alive[c] && c != ci)
                return fail(k, "facet is not free: simplex " +
                                   simplex_to_string(K.entry(c).simplex) + " still present");
        for (int c : cofacets[ci])
            if (alive[c]) return fail(k, "cofacet is not maximal");
        alive[fi] = 0;
        alive[ci] = 0;
    }

    size_t alive_count = 0;
    for (char a : alive) alive_count += a;
    if (alive_count != target.size())
        return fail(-2, "surviving complex has " + std::to_string(alive_count) +
                            " simplices, target has " + std::to_string(target.size()));
    for (const auto& e : target.entries()) {
        const int i = K.index_of(e.simplex);
        if (i < 0 || !alive[i])
            return fail(-2, "target simplex " + simplex_to_string(e.simplex) + " was removed");
    }
    return out;
}

FilteredComplex build_selective_restricted(const WeightedPointSet& X, const Simplex& E,
                                           const Simplex& F, double sq_radius_cap,
                                           const Tolerances& tol) {
    BuildOptions full;
    full.tol = tol;
    FilteredComplex deltri = build_selective_delaunay(X, F, full);
    FilteredComplex out(X.dim(), X.size(), E, sq_radius_cap, "selective-restricted");
    for (const auto& e : deltri.entries()) {
        SolveResult r = smallest_sphere(X, e.simplex, E, tol);
        if (r.feasible() && r.value() <= sq_radius_cap) out.insert(e.simplex, r.value());
    }
    out.finalize();
    return out;
}

bool ZigzagReport::all_hold() const {
    for (const auto& i : inclusions)
        if (!i.holds) return false;
    for (const auto& c : collapses)
        if (!c.verified) return false;
    return true;
}

std::string ZigzagReport::summary() const {
    std::ostringstream os;
    for (const auto& [label, size] : complex_sizes)
        os << "complex " << label << ": " << size << " simplices\n";
    for (const auto& i : inclusions)
        os << (i.holds ? "ok  " : "FAIL") << "  " << i.from << " (" << i.from_size << ") into "
           << i.to << " (" << i.to_size << ")\n";
    for (const auto& c : collapses)
        os << (c.verified ? "ok  " : "FAIL") << "  " << c.label << " collapses in " << c.steps
           << " steps\n";
    return os.str();
}

namespace {

Simplex relabel(const Simplex& s, const std::vector<int>& map) {
    Simplex out;
    out.reserve(s.size());
    for (int v : s) out.push_back(map[v]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool included(const FilteredComplex& sub, const std::vector<int>& map,
              const FilteredComplex& super) {
    for (const auto& e : sub.entries())
        if (!super.contains(relabel(e.simplex, map))) return false;
    return true;
}

}  // namespace

ZigzagReport zigzag_connect(const WeightedPointSet& X, const WeightedPointSet& Y,
                            double sq_radius_cap, const Tolerances& tol) {
    if (Y.size() > 0 && X.size() > 0 && X.dim() != Y.dim())
        throw PreconditionViolated("point sets live in different ambient dimensions");
    const int n = X.size() > 0 ? X.dim() : Y.dim();

    // Ground set of the union; exactly coincident points are merged so that
    // X = Y degenerates to the identity diagram.
    std::vector<std::vector<double>> rows;
    std::vector<double> weights;
    std::vector<int> map_x(X.size()), map_y(Y.size());
    auto add_point = [&](std::span<const double> p, double w) {
        for (size_t i = 0; i < rows.size(); ++i) {
            if (weights[i] != w) continue;
            bool same = true;
            for (int d = 0; d < n; ++d)
                if (rows[i][d] != p[d]) same = false;
            if (same) return static_cast<int>(i);
        }
        rows.emplace_back(p.begin(), p.end());
        weights.push_back(w);
        return static_cast<int>(rows.size() - 1);
    };
    for (int i = 0; i < X.size(); ++i) map_x[i] = add_point(X.point(i), X.weight(i));
    for (int i = 0; i < Y.size(); ++i) map_y[i] = add_point(Y.point(i), Y.weight(i));
    WeightedPointSet U = WeightedPointSet::from_rows(n, rows, weights);

    auto gp = check_general_position(U, tol);
    if (!gp.accepted())
        throw DegenerateInput("union of the two point sets is not in general position: " +
                              gp.violations.front().describe());

    Simplex EX, EY;
    for (int v : map_x) EX.push_back(v);
    for (int v : map_y) EY.push_back(v);
    std::sort(EX.begin(), EX.end());
    EX.erase(std::unique(EX.begin(), EX.end()), EX.end());
    std::sort(EY.begin(), EY.end());
    EY.erase(std::unique(EY.begin(), EY.end()), EY.end());

    BuildOptions opt;
    opt.sq_radius_cap = sq_radius_cap;
    opt.tol = tol;
    FilteredComplex cech_x = X.size() ? build_cech(X, opt) : FilteredComplex(n, 0, {}, sq_radius_cap, "cech");
    FilteredComplex cech_y = Y.size() ? build_cech(Y, opt) : FilteredComplex(n, 0, {}, sq_radius_cap, "cech");
    FilteredComplex del_x = X.size() ? build_delaunay(X, opt) : FilteredComplex(n, 0, {}, sq_radius_cap, "delaunay");
    FilteredComplex del_y = Y.size() ? build_delaunay(Y, opt) : FilteredComplex(n, 0, {}, sq_radius_cap, "delaunay");
    FilteredComplex cech_u = build_cech(U, opt);
    FilteredComplex del_u = build_delaunay(U, opt);
    FilteredComplex del_ux = build_selective_delaunay(U, EX, opt);
    FilteredComplex del_uy = build_selective_delaunay(U, EY, opt);

    std::vector<int> identity(U.size());
    for (size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
    // Same-ground-set inclusions use each set's own indexing.
    std::vector<int> id_x(X.size()), id_y(Y.size());
    for (size_t i = 0; i < id_x.size(); ++i) id_x[i] = static_cast<int>(i);
    for (size_t i = 0; i < id_y.size(); ++i) id_y[i] = static_cast<int>(i);

    ZigzagReport report;
    report.complex_sizes = {
        {"cech(X)", cech_x.size()},         {"cech(Y)", cech_y.size()},
        {"cech(XuY)", cech_u.size()},       {"del(X)", del_x.size()},
        {"del(Y)", del_y.size()},           {"del(XuY)", del_u.size()},
        {"del(XuY,X)", del_ux.size()},      {"del(XuY,Y)", del_uy.size()},
    };

    auto inclusion = [&](const std::string& a, const FilteredComplex& sub,
                         const std::vector<int>& map, const std::string& b,
                         const FilteredComplex& super) {
        report.inclusions.push_back({a, b, sub.size(), super.size(), included(sub, map, super)});
    };
    inclusion("cech(X)", cech_x, map_x, "cech(XuY)", cech_u);
    inclusion("cech(Y)", cech_y, map_y, "cech(XuY)", cech_u);
    inclusion("del(X)", del_x, id_x, "cech(X)", cech_x);
    inclusion("del(Y)", del_y, id_y, "cech(Y)", cech_y);
    inclusion("del(XuY,X)", del_ux, identity, "cech(XuY)", cech_u);
    inclusion("del(XuY,Y)", del_uy, identity, "cech(XuY)", cech_u);
    inclusion("del(X)", del_x, map_x, "del(XuY,X)", del_ux);
    inclusion("del(Y)", del_y, map_y, "del(XuY,Y)", del_uy);
    inclusion("del(XuY)", del_u, identity, "del(XuY,X)", del_ux);
    inclusion("del(XuY)", del_u, identity, "del(XuY,Y)", del_uy);

    auto run_collapse = [&](const std::string& label, const Simplex& E, const Simplex& F,
                            const FilteredComplex& start, const FilteredComplex& end) {
        CollapseSequence s1 = collapse_outside_deltri(U, E, F, sq_radius_cap, tol);
        CollapseSequence s2 = collapse_inside_deltri(U, E, F, sq_radius_cap, tol);
        FilteredComplex mid = build_selective_restricted(U, E, F, sq_radius_cap, tol);
        const bool ok = verify_collapse(start, s1, mid).ok && verify_collapse(mid, s2, end).ok;
        report.collapses.push_back({label, s1.steps.size() + s2.steps.size(), ok});
    };
    const Simplex all_u = U.all_vertices();
    run_collapse("del(XuY,X) onto del(XuY)", EX, all_u, del_ux, del_u);
    run_collapse("del(XuY,Y) onto del(XuY)", EY, all_u, del_uy, del_u);
    run_collapse("cech(XuY) onto del(XuY,X)", {}, EX, cech_u, del_ux);
    run_collapse("cech(XuY) onto del(XuY,Y)", {}, EY, cech_u, del_uy);
    return report;
}

}  // namespace delmorse
