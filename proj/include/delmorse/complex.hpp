#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "delmorse/geometry.hpp"
#include "delmorse/simplex.hpp"

namespace delmorse {

struct BuildOptions {
    double sq_radius_cap = kInf;
    int max_dim = -1;  // negative: no dimension cap
    int threads = 1;
    Tolerances tol;
};

// Simplices with radius-function values, closed under faces and monotone.
// Entries are kept in canonical order: (value, dimension, lexicographic).
class FilteredComplex {
public:
    struct Entry {
        Simplex simplex;
        double value;
    };

    FilteredComplex() = default;
    FilteredComplex(int ambient_dim, int ground_size, Simplex selective, double cap, std::string kind);

    int ambient_dim() const { return ambient_dim_; }
    int ground_size() const { return ground_size_; }
    const Simplex& selective_set() const { return selective_; }
    double cap() const { return cap_; }
    const std::string& kind() const { return kind_; }

    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const Entry& entry(size_t i) const { return entries_[i]; }
    const std::vector<Entry>& entries() const { return entries_; }

    bool contains(const Simplex& s) const { return index_.count(s) != 0; }
    // Value if stored, absent otherwise.
    std::optional<double> value_of(const Simplex& s) const;
    int index_of(const Simplex& s) const;  // -1 when absent

    void insert(Simplex s, double value);
    void finalize();  // sorts canonically and rebuilds the index

    FilteredComplex restrict_to_cap(double sq_radius_cap) const;
    bool subset_of(const FilteredComplex& other) const;
    bool same_simplices(const FilteredComplex& other) const;

    bool face_closed() const;
    bool monotone(double eps = 1e-9) const;

    // Indices of the codimension-1 cofaces of every entry.
    std::vector<std::vector<int>> cofacet_lists() const;

private:
    int ambient_dim_ = 0;
    int ground_size_ = 0;
    Simplex selective_;
    double cap_ = kInf;
    std::string kind_;
    std::vector<Entry> entries_;
    std::unordered_map<Simplex, int, SimplexHash> index_;
};

// Del_r(X, E): all simplices Q with a feasible sphere including Q and
// excluding E of squared radius at most the cap. Enumeration expands by
// dimension; a candidate is solved only when all of its facets are present.
FilteredComplex build_selective_delaunay(const WeightedPointSet& X, const Simplex& E,
                                         const BuildOptions& opt = {});

FilteredComplex build_cech(const WeightedPointSet& X, const BuildOptions& opt = {});
FilteredComplex build_delaunay(const WeightedPointSet& X, const BuildOptions& opt = {});

// Simplices of the Delaunay triangulation carrying their Cech values.
FilteredComplex build_delaunay_cech(const WeightedPointSet& X, const BuildOptions& opt = {});

inline std::optional<double> complex_contains(const FilteredComplex& K, const Simplex& Q) {
    return K.value_of(Q);
}

}  // namespace delmorse
