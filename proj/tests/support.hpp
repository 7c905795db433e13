#ifndef SIGGB_TESTS_SUPPORT_HPP
#define SIGGB_TESTS_SUPPORT_HPP

#include "siggb/poly.hpp"
#include "siggb/problem.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace siggb::test {

inline Ring ring_of(std::uint64_t p, std::vector<std::string> names,
                    TermOrderKind kind = TermOrderKind::GrevLex) {
  const std::size_t n = names.size();
  return Ring(PrimeField(p), std::move(names), TermOrder(kind, n));
}

inline Polynomial P(const Ring& ring, const std::string& text) {
  return parse_polynomial(ring, text);
}

inline std::vector<Polynomial> Ps(const Ring& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const std::string& t : texts)
    out.push_back(parse_polynomial(ring, t));
  return out;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct KatsuraEntry {
  std::size_t index;
  std::size_t size;
};

/// Table name -> generator index and expected size.
inline std::map<std::string, KatsuraEntry> katsura_calibration() {
  std::istringstream in(slurp(std::string(SIGGB_FIXTURES) + "/katsura_calibration.txt"));
  std::map<std::string, KatsuraEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream fields(line);
    std::string name;
    KatsuraEntry e{};
    fields >> name >> e.index >> e.size;
    out[name] = e;
  }
  return out;
}

} // namespace siggb::test

#endif
