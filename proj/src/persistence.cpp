#include "delmorse/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace delmorse {

std::vector<int> Barcode::betti_at(double t) const {
    std::vector<int> betti;
    for (const auto& b : bars) {
        if (!(b.birth <= t && t < b.death)) continue;
        if (static_cast<int>(betti.size()) <= b.dim) betti.resize(b.dim + 1, 0);
        ++betti[b.dim];
    }
    return betti;
}

namespace {

bool bar_less(const Bar& a, const Bar& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death < b.death;
}

}  // namespace

Barcode compute_barcode(const FilteredComplex& K, double zero_tol) {
    const size_t m = K.size();

    // Boundary columns in filtration order; entries are row indices, kept
    // sorted so the pivot is the last entry.
    std::vector<std::vector<int>> columns(m);
    for (size_t j = 0; j < m; ++j) {
        for (const auto& f : simplex_facets(K.entry(j).simplex)) {
            const int i = K.index_of(f);
            if (i < 0) throw PreconditionViolated("complex is not face-closed");
            columns[j].push_back(i);
        }
        std::sort(columns[j].begin(), columns[j].end());
    }

    std::vector<int> pivot_owner(m, -1);
    std::vector<int> death_of(m, -1);  // birth index -> death index
    std::vector<char> is_death(m, 0);

    for (size_t j = 0; j < m; ++j) {
        auto& col = columns[j];
        while (!col.empty()) {
            const int low = col.back();
            const int owner = pivot_owner[low];
            if (owner < 0) break;
            std::vector<int> merged;
            std::set_symmetric_difference(col.begin(), col.end(), columns[owner].begin(),
                                          columns[owner].end(), std::back_inserter(merged));
            col = std::move(merged);
        }
        if (!col.empty()) {
            const int low = col.back();
            pivot_owner[low] = static_cast<int>(j);
            death_of[low] = static_cast<int>(j);
            is_death[j] = 1;
        }
    }

    Barcode out;
    for (size_t i = 0; i < m; ++i) {
        if (is_death[i]) continue;  // death simplices do not create classes
        Bar bar;
        bar.dim = simplex_dim(K.entry(i).simplex);
        bar.birth = K.entry(i).value;
        bar.death = death_of[i] >= 0 ? K.entry(death_of[i]).value : kInf;
        if (bar.death != kInf && bar.death - bar.birth <= zero_tol)
            out.zero_bars.push_back(bar);
        else
            out.bars.push_back(bar);
    }
    std::sort(out.bars.begin(), out.bars.end(), bar_less);
    std::sort(out.zero_bars.begin(), out.zero_bars.end(), bar_less);
    return out;
}

BarcodeCompareResult compare_barcodes(const std::vector<Barcode>& barcodes,
                                      const std::vector<std::string>& labels, double tol) {
    BarcodeCompareResult out;
    if (barcodes.size() < 2) return out;
    auto name = [&](size_t i) {
        return i < labels.size() ? labels[i] : "barcode " + std::to_string(i);
    };
    std::ostringstream diff;
    const auto& ref = barcodes[0].bars;
    for (size_t i = 1; i < barcodes.size(); ++i) {
        const auto& cur = barcodes[i].bars;
        if (cur.size() != ref.size()) {
            out.equal = false;
            diff << name(i) << " has " << cur.size() << " bars, " << name(0) << " has "
                 << ref.size() << "\n";
            continue;
        }
        for (size_t k = 0; k < ref.size(); ++k) {
            const Bar& a = ref[k];
            const Bar& b = cur[k];
            const bool same = a.dim == b.dim && std::abs(a.birth - b.birth) <= tol &&
                              ((a.essential() && b.essential()) ||
                               (!a.essential() && !b.essential() && std::abs(a.death - b.death) <= tol));
            if (!same) {
                out.equal = false;
                diff << name(i) << " bar " << k << " (dim " << b.dim << ", [" << b.birth << ", "
                     << b.death << ")) differs from " << name(0) << " (dim " << a.dim << ", ["
                     << a.birth << ", " << a.death << "))\n";
            }
        }
    }
    out.diff = diff.str();
    return out;
}

}  // namespace delmorse
