#include "delmorse/geometry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace delmorse {

namespace {

double sq_dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

}  // namespace

WeightedPointSet::WeightedPointSet(int dim, std::vector<double> coords, std::vector<double> weights)
    : dim_(dim), coords_(std::move(coords)), weights_(std::move(weights)) {
    if (dim_ <= 0) throw PreconditionViolated("point set dimension must be positive");
    if (coords_.size() != weights_.size() * static_cast<size_t>(dim_))
        throw PreconditionViolated("coordinate array size does not match dim * count");
}

WeightedPointSet WeightedPointSet::from_rows(int dim, const std::vector<std::vector<double>>& rows,
                                             const std::vector<double>& weights) {
    std::vector<double> coords;
    coords.reserve(rows.size() * dim);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != dim)
            throw PreconditionViolated("point has wrong number of coordinates");
        coords.insert(coords.end(), r.begin(), r.end());
    }
    std::vector<double> w = weights;
    if (w.empty()) w.assign(rows.size(), 0.0);
    if (w.size() != rows.size()) throw PreconditionViolated("weight count does not match point count");
    return WeightedPointSet(dim, std::move(coords), std::move(w));
}

bool WeightedPointSet::unweighted() const {
    return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w == 0.0; });
}

Simplex WeightedPointSet::all_vertices() const {
    Simplex s(size());
    std::iota(s.begin(), s.end(), 0);
    return s;
}

double Sphere::power(std::span<const double> x, double w) const {
    return sq_dist({center.data(), center.size()}, x) - w - sq_radius;
}

double SphereCertificate::coeff_of(int v) const {
    for (const auto& [u, c] : coeffs)
        if (u == v) return c;
    return 0.0;
}

namespace {

using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXld = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

enum class BaseStatus { Null, Ok, Infeasible, Degenerate };

struct BasicSphere {
    BaseStatus status = BaseStatus::Null;
    Sphere sphere;
    std::vector<int> support;      // vertices forced on the sphere
    std::vector<double> lambda;    // affine coefficients of the center, one per support vertex
    std::string note;
};

// Smallest sphere with all points of `on` on its boundary: the center lies in
// the affine hull, so in tangent coordinates z = p0 + y with y in the column
// space of B = [p_i - p0] the on-sphere equalities reduce to B^T y = c/2 with
// c_i = |p_i - p0|^2 + w_0 - w_i. Solved through a long double QR of B, which
// keeps the center accurate at the condition number of B rather than its
// square; near-flat supports produce very large spheres otherwise drowned in
// rounding.
BasicSphere circumsphere_of(const WeightedPointSet& X, const std::vector<int>& on,
                            const Tolerances& tol) {
    BasicSphere out;
    const int n = X.dim();
    const int k = static_cast<int>(on.size());
    if (k == 0) {
        out.status = BaseStatus::Null;
        return out;
    }
    out.support = on;
    std::sort(out.support.begin(), out.support.end());
    const auto p0 = X.point(out.support[0]);
    const double w0 = X.weight(out.support[0]);
    if (k == 1) {
        out.status = BaseStatus::Ok;
        out.sphere.center.assign(p0.begin(), p0.end());
        out.sphere.sq_radius = -w0 + 0.0;
        out.lambda = {1.0};
        return out;
    }

    MatrixXld B(n, k - 1);
    VectorXld c(k - 1);
    for (int i = 1; i < k; ++i) {
        const auto pi = X.point(out.support[i]);
        long double nrm = 0.0;
        for (int d = 0; d < n; ++d) {
            B(d, i - 1) = static_cast<long double>(pi[d]) - p0[d];
            nrm += B(d, i - 1) * B(d, i - 1);
        }
        c(i - 1) = nrm + w0 - X.weight(out.support[i]);
    }

    VectorXld y;
    VectorXld t;
    if (k <= n + 1) {
        Eigen::ColPivHouseholderQR<MatrixXld> qr(B);
        if (qr.rank() < k - 1) {
            out.status = BaseStatus::Degenerate;
            out.note = "affinely dependent on-set";
            return out;
        }
        // B P = Q R, so B^T y = c/2 with y = Q u becomes R^T u = P^T c / 2.
        const MatrixXld R =
            qr.matrixR().topLeftCorner(k - 1, k - 1).template triangularView<Eigen::Upper>();
        VectorXld rhs = qr.colsPermutation().transpose() * (0.5 * c);
        VectorXld u = R.transpose().triangularView<Eigen::Lower>().solve(rhs);
        VectorXld u_full = VectorXld::Zero(n);
        u_full.head(k - 1) = u;
        y = qr.householderQ() * u_full;
        t = qr.colsPermutation() * R.triangularView<Eigen::Upper>().solve(u);
    } else {
        // n+2 forced points: no circumsphere generically. A consistent system
        // means n+2 cospherical points, which violates general position.
        const MatrixXld G = 2.0 * B.transpose() * B;
        t = G.completeOrthogonalDecomposition().solve(c);
        y = B * t;
    }

    out.sphere.center.assign(p0.begin(), p0.end());
    for (int d = 0; d < n; ++d) out.sphere.center[d] += static_cast<double>(y(d));
    out.sphere.sq_radius = static_cast<double>(y.squaredNorm() - w0);

    if (k > n + 1) {
        double resid = 0.0;
        for (int v : out.support)
            resid = std::max(resid, std::abs(out.sphere.power(X.point(v), X.weight(v))));
        const double scale = 1.0 + std::abs(out.sphere.sq_radius);
        if (resid <= tol.general_position * scale) {
            out.status = BaseStatus::Degenerate;
            out.note = std::to_string(k) + " cospherical points";
        } else {
            out.status = BaseStatus::Infeasible;
        }
        return out;
    }

    out.lambda.assign(k, 0.0);
    long double sum = 0.0;
    for (int i = 1; i < k; ++i) {
        out.lambda[i] = static_cast<double>(t(i - 1));
        sum += t(i - 1);
    }
    out.lambda[0] = static_cast<double>(1.0L - sum);
    out.status = BaseStatus::Ok;
    return out;
}

struct Constraint {
    int vertex;
    bool include;
};

bool violated(const BasicSphere& S, const WeightedPointSet& X, const Constraint& c, double eps) {
    if (S.status == BaseStatus::Null) return c.include;
    const double pow = S.sphere.power(X.point(c.vertex), X.weight(c.vertex));
    return c.include ? pow > eps : pow < -eps;
}

// Welzl-style randomized descent with move-to-front, generalized to carry both
// inclusion and exclusion constraints. A constraint violated by the optimum of
// the remaining system must be tight at the full optimum, so it is forced onto
// the sphere and the prefix re-solved.
class SupportSolver {
public:
    SupportSolver(const WeightedPointSet& X, const Tolerances& tol) : X_(X), tol_(tol) {}

    BasicSphere run(std::vector<Constraint> constraints) {
        work_ = std::move(constraints);
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
        std::shuffle(work_.begin(), work_.end(), rng);
        std::vector<int> on;
        return recurse(work_.size(), on);
    }

private:
    BasicSphere recurse(size_t m, std::vector<int>& on) {
        BasicSphere S = circumsphere_of(X_, on, tol_);
        if (S.status == BaseStatus::Infeasible || S.status == BaseStatus::Degenerate) return S;
        if (static_cast<int>(on.size()) >= X_.dim() + 2) return S;
        for (size_t i = 0; i < m; ++i) {
            const Constraint c = work_[i];
            if (!violated(S, X_, c, tol_.classify)) continue;
            if (std::find(on.begin(), on.end(), c.vertex) != on.end()) continue;
            on.push_back(c.vertex);
            BasicSphere S2 = recurse(i, on);
            on.pop_back();
            if (S2.status == BaseStatus::Infeasible || S2.status == BaseStatus::Degenerate) return S2;
            S = std::move(S2);
            std::rotate(work_.begin(), work_.begin() + i, work_.begin() + i + 1);
        }
        return S;
    }

    const WeightedPointSet& X_;
    Tolerances tol_;
    std::vector<Constraint> work_;
};

void validate_vertex_set(const WeightedPointSet& X, const Simplex& s, const char* name) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= X.size())
            throw PreconditionViolated(std::string(name) + " contains an out-of-range vertex index");
        if (i > 0 && s[i] <= s[i - 1])
            throw PreconditionViolated(std::string(name) + " must be sorted and duplicate-free");
    }
}

// Classification of all of X against the solved sphere, plus sign split of the
// support coefficients. Rejects configurations where the classified on-set
// disagrees with the support (an extra cospherical point) or a coefficient
// vanishes: both are general position failures.
SphereCertificate assemble_certificate(const WeightedPointSet& X, const BasicSphere& S,
                                       const Tolerances& tol) {
    SphereCertificate cert;
    cert.sphere = S.sphere;
    for (int v = 0; v < X.size(); ++v) {
        const double pow = cert.sphere.power(X.point(v), X.weight(v));
        if (pow <= tol.classify) cert.incl_set.push_back(v);
        if (pow >= -tol.classify) cert.excl_set.push_back(v);
        if (std::abs(pow) <= tol.classify) cert.on_set.push_back(v);
    }
    std::vector<std::pair<int, double>> coeffs;
    for (size_t i = 0; i < S.support.size(); ++i) coeffs.emplace_back(S.support[i], S.lambda[i]);
    std::sort(coeffs.begin(), coeffs.end());
    Simplex support;
    for (const auto& [v, l] : coeffs) support.push_back(v);
    if (support != cert.on_set)
        throw DegenerateInput("classified on-set differs from the sphere's support set");
    for (const auto& [v, l] : coeffs) {
        if (std::abs(l) <= tol.classify)
            throw DegenerateInput("affine coefficient of vertex " + std::to_string(v) +
                                  " vanishes within tolerance");
        (l > 0 ? cert.front : cert.back).push_back(v);
    }
    cert.coeffs = std::move(coeffs);
    return cert;
}

}  // namespace

SolveResult smallest_sphere(const WeightedPointSet& X, const Simplex& Q, const Simplex& E,
                            const Tolerances& tol) {
    if (Q.empty()) throw PreconditionViolated("inclusion set Q must be nonempty");
    validate_vertex_set(X, Q, "Q");
    validate_vertex_set(X, E, "E");
    std::vector<Constraint> constraints;
    constraints.reserve(Q.size() + E.size());
    for (int q : Q) constraints.push_back({q, true});
    for (int e : E) constraints.push_back({e, false});

    SupportSolver solver(X, tol);
    BasicSphere S = solver.run(std::move(constraints));
    SolveResult out;
    switch (S.status) {
        case BaseStatus::Infeasible:
            out.status = SolveStatus::Infeasible;
            return out;
        case BaseStatus::Degenerate:
            throw DegenerateInput("smallest_sphere: " + (S.note.empty() ? "degenerate input" : S.note));
        case BaseStatus::Null:
            throw PreconditionViolated("solver returned no sphere for nonempty Q");
        case BaseStatus::Ok:
            break;
    }
    out.status = SolveStatus::Feasible;
    out.cert = assemble_certificate(X, S, tol);
    return out;
}

SolveResult smallest_sphere_oracle(const WeightedPointSet& X, const Simplex& Q, const Simplex& E,
                                   const Tolerances& tol) {
    if (Q.empty()) throw PreconditionViolated("inclusion set Q must be nonempty");
    validate_vertex_set(X, Q, "Q");
    validate_vertex_set(X, E, "E");
    const Simplex U = simplex_union(Q, E);
    const int n = X.dim();
    const int u = static_cast<int>(U.size());

    struct Candidate {
        double s = kInf;
        Simplex on;
        Sphere sphere;
        std::vector<double> lambda;
        bool degenerate_coeff = false;
        bool found = false;
    } best;

    // Candidate on-sets are solved in the lifted formulation: unknown affine
    // coefficients lambda with sum(lambda) = 1 and equal power distances to all
    // members, a (k x k) linear system.
    std::vector<int> pick;
    auto try_subset = [&](const std::vector<int>& T) {
        const int k = static_cast<int>(T.size());
        MatrixXld A = MatrixXld::Zero(k, k);
        VectorXld b = VectorXld::Zero(k);
        for (int j = 0; j < k; ++j) A(0, j) = 1.0;
        b(0) = 1.0;
        const auto p0 = X.point(T[0]);
        for (int i = 1; i < k; ++i) {
            const auto pi = X.point(T[i]);
            for (int j = 0; j < k; ++j) {
                const auto pj = X.point(T[j]);
                long double dot = 0.0;
                for (int d = 0; d < n; ++d)
                    dot += static_cast<long double>(pj[d]) * (static_cast<long double>(pi[d]) - p0[d]);
                A(i, j) = 2.0L * dot;
            }
            long double hi = 0.0, h0 = 0.0;
            for (int d = 0; d < n; ++d) {
                hi += static_cast<long double>(pi[d]) * pi[d];
                h0 += static_cast<long double>(p0[d]) * p0[d];
            }
            hi -= X.weight(T[i]);
            h0 -= X.weight(T[0]);
            b(i) = hi - h0;
        }
        Eigen::FullPivLU<MatrixXld> lu(A);
        if (!lu.isInvertible()) return;  // affinely dependent candidate
        VectorXld lambda = lu.solve(b);

        Sphere sphere;
        sphere.center.assign(n, 0.0);
        std::vector<long double> center_ld(n, 0.0L);
        for (int j = 0; j < k; ++j) {
            const auto pj = X.point(T[j]);
            for (int d = 0; d < n; ++d) center_ld[d] += lambda(j) * pj[d];
        }
        long double sq = 0.0L;
        for (int d = 0; d < n; ++d) {
            sphere.center[d] = static_cast<double>(center_ld[d]);
            const long double diff = center_ld[d] - p0[d];
            sq += diff * diff;
        }
        sphere.sq_radius = static_cast<double>(sq - X.weight(T[0]));

        // Feasibility and the combinatorial sign conditions.
        for (int q : Q)
            if (sphere.power(X.point(q), X.weight(q)) > tol.classify) return;
        for (int e : E)
            if (sphere.power(X.point(e), X.weight(e)) < -tol.classify) return;
        bool degen = false;
        for (int j = 0; j < k; ++j) {
            if (std::abs(lambda(j)) <= tol.classify) degen = true;
            if (lambda(j) > tol.classify && !simplex_contains_vertex(Q, T[j])) return;   // front not in Q
            if (lambda(j) < -tol.classify && !simplex_contains_vertex(E, T[j])) return;  // back not in E
        }

        Simplex on(T.begin(), T.end());
        const double tie = 1e-12 * (1.0 + std::abs(sphere.sq_radius));
        if (!best.found || sphere.sq_radius < best.s - tie ||
            (std::abs(sphere.sq_radius - best.s) <= tie && on < best.on)) {
            best.found = true;
            best.s = sphere.sq_radius;
            best.on = on;
            best.sphere = sphere;
            best.lambda.assign(lambda.data(), lambda.data() + k);
            best.degenerate_coeff = degen;
        }
    };

    const int kmax = std::min(u, n + 1);
    std::vector<int> idx;
    for (int k = 1; k <= kmax; ++k) {
        idx.assign(k, 0);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            pick.clear();
            for (int i : idx) pick.push_back(U[i]);
            try_subset(pick);
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == u - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }

    SolveResult out;
    if (!best.found) {
        out.status = SolveStatus::Infeasible;
        return out;
    }
    if (best.degenerate_coeff)
        throw DegenerateInput("oracle: optimal on-set has a vanishing affine coefficient");
    BasicSphere S;
    S.status = BaseStatus::Ok;
    S.sphere = best.sphere;
    S.support.assign(best.on.begin(), best.on.end());
    S.lambda = best.lambda;
    out.status = SolveStatus::Feasible;
    out.cert = assemble_certificate(X, S, tol);
    return out;
}

bool check_kkt(const WeightedPointSet& X, const Simplex& Q, const Simplex& E,
               const SphereCertificate& cert, const Tolerances& tol) {
    const double eps = tol.classify;
    const Sphere& S = cert.sphere;
    if (S.center.size() != static_cast<size_t>(X.dim())) return false;

    // Structural coherence of the stored sets.
    if (cert.on_set != simplex_intersection(cert.incl_set, cert.excl_set)) return false;
    if (simplex_union(cert.front, cert.back) != cert.on_set) return false;
    if (!simplex_intersection(cert.front, cert.back).empty()) return false;
    Simplex coeff_verts;
    for (const auto& [v, l] : cert.coeffs) coeff_verts.push_back(v);
    if (coeff_verts != cert.on_set) return false;

    // Feasibility: S includes Q and excludes E.
    for (int q : Q)
        if (S.power(X.point(q), X.weight(q)) > eps) return false;
    for (int e : E)
        if (S.power(X.point(e), X.weight(e)) < -eps) return false;

    // Stationarity: the center is the claimed affine combination.
    double sum = 0.0;
    std::vector<double> z(X.dim(), 0.0);
    double scale = 1.0;
    for (const auto& [v, l] : cert.coeffs) {
        sum += l;
        const auto p = X.point(v);
        for (int d = 0; d < X.dim(); ++d) {
            z[d] += l * p[d];
            scale = std::max(scale, std::abs(p[d]));
        }
    }
    if (std::abs(sum - 1.0) > 1e-7) return false;
    for (int d = 0; d < X.dim(); ++d)
        if (std::abs(z[d] - S.center[d]) > 1e-7 * scale) return false;

    for (const auto& [v, l] : cert.coeffs) {
        // (I) nonzero coefficients only on the sphere.
        if (std::abs(S.power(X.point(v), X.weight(v))) > eps) return false;
        const bool in_q = simplex_contains_vertex(Q, v);
        const bool in_e = simplex_contains_vertex(E, v);
        if (!in_q && !in_e) return false;          // coefficient outside Q union E
        if (in_q && !in_e && l < -eps) return false;  // (II)
        if (in_e && !in_q && l > eps) return false;   // (III)
    }

    // Combinatorial form: Front inside Q, Back inside E.
    if (!simplex_subset(cert.front, Q)) return false;
    if (!simplex_subset(cert.back, E)) return false;
    return true;
}

std::string GeneralPositionViolation::describe() const {
    std::string out = kind == Kind::AffineDependence ? "affinely dependent subset {"
                                                     : "cospherical point: vertex ";
    if (kind == Kind::AffineDependence) {
        out += simplex_to_string(subset) + "}";
    } else {
        out += std::to_string(witness) + " lies on the smallest circumsphere of {" +
               simplex_to_string(subset) + "}";
    }
    return out;
}

GeneralPositionReport check_general_position(const WeightedPointSet& X, const Tolerances& tol,
                                             size_t subset_budget) {
    GeneralPositionReport report;
    const int m = X.size();
    const int n = X.dim();
    const int kmax = std::min(m, n + 1);

    auto inspect = [&](const std::vector<int>& T) {
        const int k = static_cast<int>(T.size());
        if (k >= 2) {
            Eigen::MatrixXd B(n, k - 1);
            const auto p0 = X.point(T[0]);
            for (int i = 1; i < k; ++i) {
                const auto pi = X.point(T[i]);
                for (int d = 0; d < n; ++d) B(d, i - 1) = pi[d] - p0[d];
            }
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(B);
            const auto& sv = svd.singularValues();
            if (sv.size() == 0 || sv(sv.size() - 1) <= tol.general_position * std::max(1.0, sv(0))) {
                GeneralPositionViolation v;
                v.kind = GeneralPositionViolation::Kind::AffineDependence;
                v.subset.assign(T.begin(), T.end());
                report.violations.push_back(std::move(v));
                return;
            }
        }
        BasicSphere S = circumsphere_of(X, T, tol);
        if (S.status != BaseStatus::Ok) return;
        for (int v = 0; v < m; ++v) {
            if (std::binary_search(T.begin(), T.end(), v)) continue;
            if (std::abs(S.sphere.power(X.point(v), X.weight(v))) <=
                tol.general_position * (1.0 + std::abs(S.sphere.sq_radius))) {
                GeneralPositionViolation viol;
                viol.kind = GeneralPositionViolation::Kind::CospherePoint;
                viol.subset.assign(T.begin(), T.end());
                viol.witness = v;
                report.violations.push_back(std::move(viol));
            }
        }
    };

    // Count subsets to decide between exhaustive and sampled checking.
    double total = 0.0;
    {
        double binom = 1.0;
        for (int k = 1; k <= kmax; ++k) {
            binom = binom * (m - k + 1) / k;
            total += binom;
        }
    }

    if (total <= static_cast<double>(subset_budget)) {
        std::vector<int> idx;
        for (int k = 1; k <= kmax; ++k) {
            idx.assign(k, 0);
            std::iota(idx.begin(), idx.end(), 0);
            std::vector<int> T(k);
            while (true) {
                for (int i = 0; i < k; ++i) T[i] = idx[i];
                inspect(T);
                int pos = k - 1;
                while (pos >= 0 && idx[pos] == m - k + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
    } else {
        report.exhaustive = false;
        std::mt19937_64 rng(12345);
        std::vector<int> all(m);
        std::iota(all.begin(), all.end(), 0);
        for (size_t trial = 0; trial < subset_budget; ++trial) {
            const int k = 1 + static_cast<int>(rng() % kmax);
            std::vector<int> T;
            for (int i = 0; i < k; ++i) {
                const int j = i + static_cast<int>(rng() % (m - i));
                std::swap(all[i], all[j]);
                T.push_back(all[i]);
            }
            std::sort(T.begin(), T.end());
            T.erase(std::unique(T.begin(), T.end()), T.end());
            inspect(T);
        }
    }
    return report;
}

WeightedPointSet perturb(const WeightedPointSet& X, double magnitude, uint64_t seed) {
    if (!(magnitude > 0.0)) throw PreconditionViolated("perturbation magnitude must be positive");
    std::mt19937_64 rng(seed);
    std::vector<double> coords = X.coords();
    for (double& c : coords) {
        // Top 53 bits to a double in [0,1); portable across standard libraries.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        c += (2.0 * u - 1.0) * magnitude;
    }
    return WeightedPointSet(X.dim(), std::move(coords), X.weights());
}

}  // namespace delmorse
