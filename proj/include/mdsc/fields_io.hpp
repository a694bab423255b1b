#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "mdsc/torus_grid.hpp"

namespace mdsc {

/// %.12g formatting used for every floating-point value written to files,
/// so regression diffs are byte-stable.
std::string format_double(double v);

/// CSV export. D = 2: one line per slowest-axis slice (L rows of L values).
/// Other dimensions: a "D,L,order=row-major" header followed by one value
/// per line in flattened order.
void write_field_csv(std::ostream& os, const ScalarField& field);
void write_field_csv(const std::filesystem::path& path, const ScalarField& field);

/// 8-bit PGM heatmap for D = 2 fields: value v maps to round(255 (1 - v)),
/// so full erasure is black.
void write_field_pgm(const std::filesystem::path& path, const ScalarField& field);

}  // namespace mdsc
