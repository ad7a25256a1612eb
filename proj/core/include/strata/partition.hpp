#pragma once

#include <string>
#include <vector>

namespace strata {

// Ordered multiset of positive integer parts. Order matters: parts are
// attached to ordered marked points.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p);
  explicit Partition(std::vector<int> p);

  int sum() const;
  int size() const { return static_cast<int>(parts.size()); }

  bool operator==(const Partition&) const = default;
};

// Concatenation, keeping order.
Partition concat(const Partition& a, const Partition& b);

// (m, 1^k) appended: the partition a followed by k ones.
Partition with_ones(const Partition& a, int k);

// Grammar: partition := part ("," part)* ; part := INT ("^" INT)? ; both
// INTs >= 1. "2,1^4" parses to (2,1,1,1,1).
Partition parse_partition(const std::string& text);

// Canonical rendering with runs compressed to exponent notation,
// e.g. (2,1,1,1,1) -> "2,1^4". parse_partition is a left inverse.
std::string render_partition(const Partition& p);

}  // namespace strata
