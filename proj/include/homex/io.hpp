#ifndef HOMEX_IO_HPP
#define HOMEX_IO_HPP

#include <iosfwd>
#include <string>

#include "homex/complex.hpp"

namespace homex {

/**
 * Reads a complex from the ".sc" facet format: one facet per line,
 * whitespace-separated vertex tokens, lines starting with '#' ignored.
 * Tokens are arbitrary strings mapped to dense ids in first-seen order and
 * kept as vertex labels. If the first non-space character is '{' the input
 * is parsed as the JSON alternative {"facets": [[...], ...]} instead, where
 * all-integer arrays use the integers as literal vertex ids.
 */
SimplicialComplex read_complex(std::istream& in);
SimplicialComplex read_complex_string(const std::string& text);
SimplicialComplex read_complex_file(const std::string& path);

// Writes the ".sc" format: facets in lexicographic order, one per line,
// vertices printed as their labels when present, ids otherwise.
void write_sc(std::ostream& out, const SimplicialComplex& x);
std::string to_sc_string(const SimplicialComplex& x);

void write_json(std::ostream& out, const SimplicialComplex& x);

void write_complex_file(const std::string& path, const SimplicialComplex& x,
                        bool json = false);

} // namespace homex

#endif
