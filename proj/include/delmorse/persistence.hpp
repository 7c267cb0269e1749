#pragma once

#include <string>
#include <vector>

#include "delmorse/complex.hpp"

namespace delmorse {

struct Bar {
    int dim = 0;
    double birth = 0.0;
    double death = kInf;  // kInf for essential classes

    bool essential() const { return death == kInf; }
};

// Multiset of bars in canonical order (dim, birth, death).
struct Barcode {
    std::vector<Bar> bars;
    std::vector<Bar> zero_bars;  // verbose side-channel: the discarded birth=death pairs

    std::vector<int> betti_at(double t) const;
};

// Persistent homology over Z/2 of the sublevel filtration of K, by standard
// boundary-matrix reduction in the canonical (value, dimension, lexicographic)
// simplex order. Bars of length at most zero_tol are moved to the verbose
// side-channel.
Barcode compute_barcode(const FilteredComplex& K, double zero_tol = 1e-9);

struct BarcodeCompareResult {
    bool equal = true;
    std::string diff;
};

// Multiset equality of barcodes within tolerance; filtrations are expected to
// be over the same point set.
BarcodeCompareResult compare_barcodes(const std::vector<Barcode>& barcodes,
                                      const std::vector<std::string>& labels = {},
                                      double tol = 1e-9);

}  // namespace delmorse
