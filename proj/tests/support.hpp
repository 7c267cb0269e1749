#pragma once

// Shared helpers for the test suites: deterministic random instances in
// general position, subset enumeration, and a rank-based Betti oracle that is
// independent of the persistence reduction.

#include <cstdint>
#include <random>
#include <vector>

#include "delmorse/geometry.hpp"
#include "delmorse/simplex.hpp"

namespace delmorse::testing {

inline double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline WeightedPointSet random_points(std::mt19937_64& rng, int n, int count, bool weighted) {
    std::vector<double> coords(static_cast<size_t>(n) * count);
    std::vector<double> weights(count, 0.0);
    for (double& c : coords) c = unit_double(rng) * 2.0 - 1.0;
    if (weighted) {
        for (double& w : weights) w = (rng() % 2) ? unit_double(rng) : 0.0;
    }
    return WeightedPointSet(n, std::move(coords), weights);
}

// Random instance re-drawn until the general position check accepts it.
inline WeightedPointSet random_gp_points(std::mt19937_64& rng, int n, int count, bool weighted,
                                         const Tolerances& tol = {}) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        WeightedPointSet X = random_points(rng, n, count, weighted);
        if (check_general_position(X, tol).accepted()) return X;
    }
    throw std::runtime_error("could not draw a general position instance");
}

inline std::vector<Simplex> all_subsets(int m, bool include_empty) {
    std::vector<Simplex> out;
    for (unsigned mask = include_empty ? 0 : 1; mask < (1u << m); ++mask) {
        Simplex s;
        for (int v = 0; v < m; ++v)
            if (mask & (1u << v)) s.push_back(v);
        out.push_back(std::move(s));
    }
    return out;
}

// Betti numbers over Z/2 by direct Gaussian elimination on the boundary
// matrices of the given simplices. Independent of the reduction in the
// persistence module.
inline std::vector<int> betti_numbers(const std::vector<Simplex>& simplices) {
    int top = 0;
    for (const auto& s : simplices) top = std::max(top, simplex_dim(s));

    std::vector<std::vector<Simplex>> by_dim(top + 1);
    for (const auto& s : simplices) by_dim[simplex_dim(s)].push_back(s);

    auto rank_of_boundary = [&](int d) -> int {
        if (d <= 0 || d > top || by_dim[d].empty()) return 0;
        std::vector<Simplex> rows = by_dim[d - 1];
        std::sort(rows.begin(), rows.end());
        auto row_index = [&](const Simplex& f) {
            return static_cast<int>(std::lower_bound(rows.begin(), rows.end(), f) - rows.begin());
        };
        std::vector<std::vector<int>> cols;
        for (const auto& s : by_dim[d]) {
            std::vector<int> col;
            for (const auto& f : simplex_facets(s)) col.push_back(row_index(f));
            std::sort(col.begin(), col.end());
            cols.push_back(std::move(col));
        }
        // Column elimination over Z/2.
        std::vector<int> pivot_owner(rows.size(), -1);
        int rank = 0;
        for (auto& col : cols) {
            while (!col.empty()) {
                const int low = col.back();
                if (pivot_owner[low] < 0) break;
                // symmetric difference with the pivot column
                const auto& other = cols[pivot_owner[low]];
                std::vector<int> merged;
                std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                              std::back_inserter(merged));
                col = std::move(merged);
            }
            if (!col.empty()) {
                pivot_owner[col.back()] = static_cast<int>(&col - cols.data());
                ++rank;
            }
        }
        return rank;
    };

    std::vector<int> betti(top + 1, 0);
    for (int d = 0; d <= top; ++d) {
        const int nd = static_cast<int>(by_dim[d].size());
        betti[d] = nd - rank_of_boundary(d) - rank_of_boundary(d + 1);
    }
    return betti;
}

}  // namespace delmorse::testing
