#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "delmorse/collapse.hpp"
#include "delmorse/complex.hpp"
#include "delmorse/morse.hpp"
#include "delmorse/persistence.hpp"

namespace delmorse {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// 12 significant digits; infinities spelled "inf"/"-inf".
std::string format_value(double v);
double parse_value(const std::string& token);

// Point file: first line `dim n`, one point per line (n coordinates, optional
// trailing `w=<decimal>`), `#` starts a comment.
WeightedPointSet read_points(std::istream& in);
WeightedPointSet read_points_file(const std::string& path);
void write_points(std::ostream& out, const WeightedPointSet& X);
void write_points_file(const std::string& path, const WeightedPointSet& X);

// Complex file: header `complex dim=<n> E=<comma-list|all|empty> cap=<decimal|inf>`
// (wrap complexes use the header word `wrap`), then one `v0,...,vk value` line
// per simplex in canonical order.
void write_complex(std::ostream& out, const FilteredComplex& K);
void write_complex_file(const std::string& path, const FilteredComplex& K);
FilteredComplex read_complex(std::istream& in);
FilteredComplex read_complex_file(const std::string& path);

// Gradient file: header `gradient E=<...>`, one line per interval.
void write_gradient(std::ostream& out, const GeneralizedVectorField& W, const Simplex& E,
                    int ground_size);

// Collapse file: header `collapse from=<label> to=<label>`, one line per step.
void write_collapse(std::ostream& out, const CollapseSequence& seq);
void write_collapse_file(const std::string& path, const CollapseSequence& seq);

// Barcode CSV: `dim,birth,death` with `inf` for essential classes.
void write_barcode(std::ostream& out, const Barcode& bc);
void write_barcode_file(const std::string& path, const Barcode& bc);

std::string format_selective(const Simplex& E, int ground_size);

}  // namespace delmorse
