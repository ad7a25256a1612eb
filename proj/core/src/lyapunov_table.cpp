#include "strata/teich.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace strata {

std::string row_name(const LyapunovRow& row) {
  if (row.a.size() == 1) return "W-g" + std::to_string(row.g);
  std::string digits;
  for (int ai : row.a.parts) digits += std::to_string(ai);
  return "BN-" + std::to_string(row.g) + "-" + digits;
}

static LyapunovRow make_row(int g, Partition a, const char* L, LKind kind,
                            const char* citation) {
  LyapunovRow row;
  row.g = g;
  row.a = std::move(a);
  row.mu = with_ones(row.a, g - 2);
  row.L = parse_rational(L);
  row.kind = kind;
  row.divisor_name =
      row.a.size() == 1 ? "W" : "BN^1_{" + std::to_string(g) + ",(" +
                                    render_partition(row.a) + ")}";
  row.citation = citation;
  return row;
}

const std::vector<LyapunovRow>& lyapunov_table() {
  static const std::vector<LyapunovRow> table = {
      make_row(2, {2}, "4/3", LKind::Exact, "Chen-Moeller, Corollary 4.3"),
      make_row(3, {3}, "7/4", LKind::Exact, "Chen-Moeller, Section 5.2"),
      make_row(4, {4}, "1137/550", LKind::StratumLimit, "Chen-Moeller, Figure 3"),
      make_row(2, {1, 1}, "3/2", LKind::Exact, "Chen-Moeller, Corollary 4.3"),
      make_row(3, {2, 1}, "11/6", LKind::Exact, "Chen-Moeller, Section 5.4"),
      make_row(4, {3, 1}, "66/31", LKind::StratumLimit, "Chen-Moeller, Figure 3"),
      make_row(4, {2, 2}, "5045/2358", LKind::StratumLimit, "Chen-Moeller, Figure 3"),
      make_row(3, {1, 1, 1}, "53/28", LKind::StratumLimit, "Chen-Moeller, Figure 2"),
      make_row(4, {2, 1, 1}, "131/60", LKind::StratumLimit, "Chen-Moeller, Figure 3"),
      make_row(4, {1, 1, 1, 1}, "839/377", LKind::StratumLimit, "Chen-Moeller, Figure 3"),
      make_row(5, {1, 1, 1, 1, 1}, "235761/93428", LKind::StratumLimit,
               "Chen-Moeller, Figure 5"),
  };
  return table;
}

static std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<LyapunovRow> parse_lyapunov_table(std::istream& in) {
  std::vector<LyapunovRow> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(t);
    std::string col;
    while (std::getline(ss, col, '|')) cols.push_back(trim(col));
    if (cols.size() != 6)
      throw std::invalid_argument("lyapunov table line " + std::to_string(lineno) +
                                  ": expected 6 '|'-separated columns");
    LyapunovRow row;
    row.g = std::stoi(cols[0]);
    row.a = parse_partition(cols[1]);
    row.mu = parse_partition(cols[2]);
    row.L = parse_rational(cols[3]);
    if (cols[4] == "exact")
      row.kind = LKind::Exact;
    else if (cols[4] == "limit")
      row.kind = LKind::StratumLimit;
    else
      throw std::invalid_argument("lyapunov table line " + std::to_string(lineno) +
                                  ": kind must be 'exact' or 'limit'");
    row.citation = cols[5];
    row.divisor_name =
        row.a.size() == 1 ? "W" : "BN^1_{" + std::to_string(row.g) + ",(" +
                                      render_partition(row.a) + ")}";
    if (row.a.sum() != row.g)
      throw std::invalid_argument("lyapunov table line " + std::to_string(lineno) +
                                  ": weights must sum to g");
    if (row.mu != with_ones(row.a, row.g - 2))
      throw std::invalid_argument("lyapunov table line " + std::to_string(lineno) +
                                  ": mu must equal (a, 1^{g-2})");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace strata
