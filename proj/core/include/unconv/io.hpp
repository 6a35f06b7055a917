#pragma once

// Text formats: single points ("p=3 K=4" header plus a digit line),
// limit-set sample files, Monna-map plotting export, and pairwise distance
// matrices. The digit formats round-trip bit-exactly; the Monna export is
// lossy by design and exists only for plotting.

#include <string>
#include <string_view>

#include "unconv/limit_set.hpp"

namespace unconv {

std::string point_to_text(const PadicInt& x);
PadicInt point_from_text(std::string_view text);

std::string sample_to_text(const LimitSetSample& sample);
LimitSetSample sample_from_text(std::string_view text);

// Monna embedding sum d_i p^i -> sum d_i p^(-i-1) into [0, 1).
double monna_value(const PadicInt& x);
std::string monna_to_text(const LimitSetSample& sample);

// Pairwise difference valuations; the diagonal holds the precision.
std::string distance_matrix_to_text(const LimitSetSample& sample);

// Writes to a temporary sibling and renames, so readers never see a partial
// artifact.
void write_file_atomic(const std::string& path, std::string_view content);
std::string read_file(const std::string& path);

}  // namespace unconv
