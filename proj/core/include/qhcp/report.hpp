#ifndef QHCP_REPORT_HPP
#define QHCP_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qhcp/screening.hpp"

namespace qhcp::report {

/// "2⁵·3", or "p/q" factored on both sides; negative values carry a leading '-'.
std::string factored(const Rational& r);

/// Stable JSON document (two-space indent, trailing newline).
std::string to_json(const screening::ClassificationReport& r);

/// Inverse of to_json; throws DomainError on schema violations.
screening::ClassificationReport from_json(std::string_view text);

std::string to_markdown(const screening::ClassificationReport& r);

struct DRow {
  std::string type;
  int L = 0;
  Rational K2;
  Rational D;
  bool square = false;
};

/// Ids: "index2-D" (the arithmetic eliminations of index 2), "index3-case1" .. "index3-case6".
std::vector<DRow> d_table(std::string_view id);
std::string d_table_markdown(std::string_view id);
std::vector<std::string> d_table_ids();

/// Candidate listing with L, K^2, D as markdown.
std::string candidates_markdown(const std::vector<Configuration>& configs);

}  // namespace qhcp::report

#endif  // QHCP_REPORT_HPP
