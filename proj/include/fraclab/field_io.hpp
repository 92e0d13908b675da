#pragma once

#include <iosfwd>
#include <string>

#include "fraclab/fields.hpp"

namespace fraclab {

// Field CSV: a header line "# n,L,N" carrying the grid, then one
// "index,value" row per node in row-major order (vector fields write one
// value column per component). Reals use 17 significant digits, so a
// write/read cycle reproduces every double exactly.

std::string format_real(double v);

void write_field_csv(std::ostream& os, const ScalarField& f);
void write_field_csv(std::ostream& os, const VectorField& f);
void write_field_csv(const std::string& path, const ScalarField& f);
void write_field_csv(const std::string& path, const VectorField& f);

/// Reads the first value column back as a scalar field.
ScalarField read_field_csv(std::istream& is);
ScalarField read_field_csv(const std::string& path);

}  // namespace fraclab
