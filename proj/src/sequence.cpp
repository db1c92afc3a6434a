#include "subsums/sequence.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace subsums {

Sequence read_sequence(std::istream& in) {
  Sequence out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // skip blank lines
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    if (blank) continue;
    out.push_back(parse_rational(line));
  }
  return out;
}

Sequence read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open sequence file: " + path);
  return read_sequence(in);
}

void write_sequence(std::ostream& out, const Sequence& a) {
  for (const auto& v : a) out << to_string(v) << "\n";
}

}  // namespace subsums
