#pragma once

#include "ccorder/cca.hpp"

#include <complex>
#include <string>

namespace ccorder {

/// Parse one complex entry. Accepts `a+bi` / `a-bi`, pure real (`a`), and
/// pure imaginary (`bi`) forms, with scientific notation in either part.
/// @throws ArgumentError on malformed input.
std::complex<double> parse_complex(const std::string& token);

/// Format a complex entry as `a+bi` / `a-bi` with shortest round-trip
/// number representations.
std::string format_complex(const std::complex<double>& z);

/// Read a complex matrix from CSV: one row per line, comma-separated
/// entries, rows = components, columns = samples.
/// @throws ArgumentError on I/O failure, ragged rows, or bad entries.
CMatrix read_matrix_csv(const std::string& path);

/// Write a complex matrix as CSV in the same format read_matrix_csv accepts.
void write_matrix_csv(const CMatrix& mat, const std::string& path);

} // namespace ccorder
