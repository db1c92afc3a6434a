#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "subsums/rational.hpp"

namespace subsums {

// Finite list of exact rationals. MCSP inputs are 1-based a_1..a_n in the
// math; stored 0-based here. Convolution inputs are x_0..x_n.
using Sequence = std::vector<Rational>;

// Text format: one rational per line ("p/q", integer, or finite decimal).
// Blank lines and '#' comments are ignored.
Sequence read_sequence(std::istream& in);
Sequence read_sequence_file(const std::string& path);
void write_sequence(std::ostream& out, const Sequence& a);

}  // namespace subsums
