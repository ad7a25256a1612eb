#include "strata/partition.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace strata {

static void check_parts(const std::vector<int>& parts) {
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("Partition: parts must be >= 1");
}

Partition::Partition(std::initializer_list<int> p) : parts(p) { check_parts(parts); }

Partition::Partition(std::vector<int> p) : parts(std::move(p)) { check_parts(parts); }

int Partition::sum() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition concat(const Partition& a, const Partition& b) {
  Partition out = a;
  out.parts.insert(out.parts.end(), b.parts.begin(), b.parts.end());
  return out;
}

Partition with_ones(const Partition& a, int k) {
  if (k < 0) throw std::invalid_argument("with_ones: negative count");
  Partition out = a;
  out.parts.insert(out.parts.end(), k, 1);
  return out;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto read_int = [&]() {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("parse_partition: expected integer in '" + text + "'");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) throw std::invalid_argument("parse_partition: part too large");
      ++i;
    }
    return static_cast<int>(v);
  };
  for (;;) {
    int part = read_int();
    int rep = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      rep = read_int();
    }
    if (part < 1 || rep < 1)
      throw std::invalid_argument("parse_partition: parts and exponents must be >= 1");
    parts.insert(parts.end(), rep, part);
    if (i == text.size()) break;
    if (text[i] != ',')
      throw std::invalid_argument("parse_partition: unexpected character in '" + text + "'");
    ++i;
  }
  return Partition(std::move(parts));
}

std::string render_partition(const Partition& p) {
  std::string out;
  std::size_t i = 0;
  while (i < p.parts.size()) {
    std::size_t run = 1;
    while (i + run < p.parts.size() && p.parts[i + run] == p.parts[i]) ++run;
    if (!out.empty()) out += ',';
    out += std::to_string(p.parts[i]);
    if (run > 1) out += '^' + std::to_string(run);
    i += run;
  }
  return out;
}

}  // namespace strata
