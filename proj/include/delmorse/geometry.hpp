#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "delmorse/simplex.hpp"

namespace delmorse {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Raised when a certificate cannot be produced because the input fails the
// general position requirements within tolerance.
struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
    explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct Tolerances {
    double classify = 1e-9;          // on/inside/outside classification
    double general_position = 1e-7;  // rejection threshold for degeneracy checks
};

// Finite set of points in R^n with optional real weights. The list order is
// the fixed total vertex order used by all pairing constructions.
class WeightedPointSet {
public:
    WeightedPointSet() = default;
    WeightedPointSet(int dim, std::vector<double> coords, std::vector<double> weights);

    static WeightedPointSet from_rows(int dim, const std::vector<std::vector<double>>& rows,
                                      const std::vector<double>& weights = {});

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(weights_.size()); }
    std::span<const double> point(int i) const { return {coords_.data() + static_cast<size_t>(i) * dim_, static_cast<size_t>(dim_)}; }
    double weight(int i) const { return weights_[i]; }
    const std::vector<double>& coords() const { return coords_; }
    const std::vector<double>& weights() const { return weights_; }
    bool unweighted() const;

    Simplex all_vertices() const;

private:
    int dim_ = 0;
    std::vector<double> coords_;   // row major, size() * dim_
    std::vector<double> weights_;  // one per point
};

// Sphere with center z and squared radius s; s may be negative for weighted
// points. Membership is in the power sense: S includes x iff |z-x|^2 <= s + w_x.
struct Sphere {
    std::vector<double> center;
    double sq_radius = 0.0;

    // |z-x|^2 - w_x - s: negative inside, zero on, positive outside.
    double power(std::span<const double> x, double w) const;
};

// KKT witness for the smallest sphere including Q and excluding E.
struct SphereCertificate {
    Sphere sphere;
    Simplex on_set;    // points of X on the sphere
    Simplex incl_set;  // points of X on or inside
    Simplex excl_set;  // points of X on or outside
    Simplex front;     // on-points with positive affine coefficient
    Simplex back;      // on-points with negative affine coefficient
    std::vector<std::pair<int, double>> coeffs;  // affine coefficients on on_set, sorted by vertex

    double coeff_of(int v) const;
};

enum class SolveStatus { Feasible, Infeasible };

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    SphereCertificate cert;  // meaningful only when feasible

    bool feasible() const { return status == SolveStatus::Feasible; }
    double value() const { return cert.sphere.sq_radius; }
};

// Smallest sphere including every q in Q and excluding every e in E, with KKT
// certificate. Randomized support-set descent; exact at desk scale.
// Throws DegenerateInput when the certificate cannot be produced (general
// position failure within tolerance).
SolveResult smallest_sphere(const WeightedPointSet& X, const Simplex& Q, const Simplex& E,
                            const Tolerances& tol = {});

// Independent reference: exhaustive enumeration of candidate on-sets
// T subset of Q union E with 1 <= |T| <= n+1, keeping the feasible candidate of
// minimal squared radius (ties broken by lexicographically smallest vertex set).
SolveResult smallest_sphere_oracle(const WeightedPointSet& X, const Simplex& Q, const Simplex& E,
                                   const Tolerances& tol = {});

// Pure predicate: feasibility plus the stationarity/complementarity/sign
// conditions of the certificate, all within tolerance.
bool check_kkt(const WeightedPointSet& X, const Simplex& Q, const Simplex& E,
               const SphereCertificate& cert, const Tolerances& tol = {});

struct GeneralPositionViolation {
    enum class Kind { AffineDependence, CospherePoint };
    Kind kind;
    Simplex subset;   // the offending subset Q
    int witness = -1; // external point on the circumsphere, for CospherePoint

    std::string describe() const;
};

struct GeneralPositionReport {
    std::vector<GeneralPositionViolation> violations;
    bool exhaustive = true;  // false when subsets were sampled

    bool accepted() const { return violations.empty(); }
};

// Checks every subset of at most n+1 points for affine independence and for
// external points on its smallest circumsphere. Falls back to deterministic
// sampling when the number of subsets is too large for exhaustive search.
GeneralPositionReport check_general_position(const WeightedPointSet& X, const Tolerances& tol = {},
                                             size_t subset_budget = 2'000'000);

// Copy of X with every coordinate jittered uniformly in [-magnitude, magnitude].
// Deterministic for a fixed seed; weights unchanged.
WeightedPointSet perturb(const WeightedPointSet& X, double magnitude, uint64_t seed);

}  // namespace delmorse
