#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace delmorse {

// A simplex is a sorted list of distinct vertex indices into a point set.
// Dimension = number of vertices - 1.
using Simplex = std::vector<int>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

inline Simplex make_simplex(std::initializer_list<int> verts) {
    Simplex s(verts);
    std::sort(s.begin(), s.end());
    return s;
}

inline bool is_valid_simplex(const Simplex& s) {
    if (s.empty()) return false;
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] >= s[i + 1]) return false;
    return s.front() >= 0;
}

// Subset test; both arguments sorted.
inline bool simplex_subset(const Simplex& a, const Simplex& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Simplex simplex_union(const Simplex& a, const Simplex& b) {
    Simplex out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Simplex simplex_intersection(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Simplex simplex_difference(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool simplex_contains_vertex(const Simplex& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

// Q - x and Q + x in the sense of removing/adding a single vertex.
inline Simplex simplex_minus(const Simplex& s, int v) {
    Simplex out;
    out.reserve(s.size());
    for (int u : s)
        if (u != v) out.push_back(u);
    return out;
}

inline Simplex simplex_plus(const Simplex& s, int v) {
    if (simplex_contains_vertex(s, v)) return s;
    Simplex out = s;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

// All facets (codimension-1 faces); empty for vertices.
inline std::vector<Simplex> simplex_facets(const Simplex& s) {
    std::vector<Simplex> out;
    if (s.size() <= 1) return out;
    out.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        Simplex f;
        f.reserve(s.size() - 1);
        for (size_t j = 0; j < s.size(); ++j)
            if (j != i) f.push_back(s[j]);
        out.push_back(std::move(f));
    }
    return out;
}

struct SimplexHash {
    size_t operator()(const Simplex& s) const {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (int v : s) {
            h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline std::string simplex_to_string(const Simplex& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

}  // namespace delmorse
