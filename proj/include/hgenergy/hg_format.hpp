#ifndef HGENERGY_HG_FORMAT_HPP
#define HGENERGY_HG_FORMAT_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "hgenergy/hypergraph.hpp"

namespace hgenergy {

// The `.hg` text format:
//
//   k n m
//   v1 v2 ... vk      (m lines, 0-based vertex indices)
//
// '#' starts a comment running to end of line; blank lines are ignored.
// Parse errors throw Error(ParseError) naming the 1-based line number.

Hypergraph parse_hg(std::istream& in);
Hypergraph parse_hg(std::string_view text);
Hypergraph read_hg_file(const std::string& path);

/// Canonical serialization: header, then one ascending edge per line.
void write_hg(std::ostream& out, const Hypergraph& h);
std::string to_hg_string(const Hypergraph& h);

} // namespace hgenergy

#endif // HGENERGY_HG_FORMAT_HPP
