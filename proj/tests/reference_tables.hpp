#ifndef QHCP_TESTS_REFERENCE_TABLES_HPP
#define QHCP_TESTS_REFERENCE_TABLES_HPP

// Published D tables and classification lists, transcribed row by row.

#include <string>
#include <utility>
#include <vector>

namespace qhcp::reference {

using DTable = std::vector<std::pair<std::string, std::string>>;  // type, factored D

inline const DTable& index2_d() {
  static const DTable t{
      {"K7", "2²·3·7"},     {"K7A2", "2²·3·7"},   {"K6", "2⁵·3"},       {"K5A2", "2²·3²·5"},  {"K4", "2⁵·3"},
      {"K4A2", "2⁶·3"},     {"K4A4", "2⁵·5"},     {"K3", "2²·3·7"},     {"K3A4", "2²·3²·5"},  {"K3A6", "2²·3·7"},
      {"K2A4", "2⁵·5"},     {"K2A6", "2⁴·7"},     {"K2E6", "2⁴·3"},     {"K2A2A4", "2⁴·3·5"}, {"K1A2", "2³·3·7"},  // as printed; K² = 7 and det = 12 give 2²·3·7
      {"K1A6", "2²·3·7"},   {"K1A2A4", "2²·3²·5"}, {"K1A2A6", "2²·3·7"},
  };
  return t;
}

inline const DTable& index3_case1() {
  static const DTable t{
      {"A1(1)E8", "1"},        {"A1(1)E7", "2³"},   {"A1(1)D7", "2⁴"},     {"A1(1)D5", "2³·5"},
      {"A1(1)A7", "2⁵"},       {"A1(1)A6A1", "2³·7"}, {"A1(1)A6", "7²"},   {"A1(1)A4A3", "2⁴·5"},
      {"A1(1)A4A1", "2²·5²"},  {"A1(1)A4", "5·13"}, {"A1(1)A3", "2⁶"},     {"A1(1)A1", "2²·11"},
      {"A1(1)", "5²"},
  };
  return t;
}

inline const DTable& index3_case2() {
  static const DTable t{
      {"A3(1,1)A6", "2⁴·7"},    {"A3(1,1)A4", "2³·5²"},  {"A3(1,1)", "2³·11"},  {"A4(1,1)D5", "2⁴·7"},
      {"A4(1,1)A4A1", "2³·5·7"}, {"A4(1,1)A4", "5·7²"},  {"A4(1,1)A3", "2³·5·7"}, {"A4(1,1)A1", "2⁵·7"},
      {"A4(1,1)", "7·19"},      {"A5(1,1)", "2⁵·5"},     {"A6(1,1)A4", "5·13"}, {"A6(1,1)A3", "2⁴·13"},
      {"A6(1,1)A1", "2²·5·13"}, {"A6(1,1)", "13²"},      {"A7(1,1)", "2⁵·5"},   {"A8(1,1)A1", "2³·19"},
      {"A8(1,1)", "7·19"},      {"A9(1,1)", "2³·11"},    {"A10(1,1)", "5²"},
  };
  return t;
}

inline const DTable& index3_case3() {
  static const DTable t{
      {"A2(1,2)E8", "3²"},        {"A2(1,2)E7", "2²·3²"},    {"A2(1,2)D7", "2³·3²"},   {"A2(1,2)D5", "2⁴·3²"},
      {"A2(1,2)A7", "2⁴·3²"},     {"A2(1,2)A6A1", "2²·3²·7"}, {"A2(1,2)A6", "3³·7"},   {"A2(1,2)A4A3", "2³·3²·5"},
      {"A2(1,2)A4A1", "2³·3²·5"}, {"A2(1,2)A4", "3²·5²"},    {"A2(1,2)A3", "2³·3³"},   {"A2(1,2)A1", "2⁴·3²"},
      {"A2(1,2)", "3⁴"},          {"A3(1,2)A6", "2²·3²·7"},  {"A3(1,2)A4", "2³·3²·5"}, {"A3(1,2)", "2⁴·3²"},
      {"A4(1,2)D5", "2³·3³"},     {"A4(1,2)A6", "3³·7"},     {"A4(1,2)A4A1", "2²·3³·5"}, {"A4(1,2)A4", "3⁴·5"},
      {"A4(1,2)A3", "2⁴·3³"},     {"A4(1,2)A1", "2²·3⁴"},    {"A4(1,2)", "3³·7"},      {"A5(1,2)A4", "2³·3²·5"},
      {"A5(1,2)", "2³·3³"},       {"A6(1,2)A3", "2³·3²·5"},  {"A6(1,2)A1", "2³·3²·5"}, {"A6(1,2)", "3²·5²"},
      {"A7(1,2)", "2³·3³"},       {"A8(1,2)A1", "2²·3²·7"},  {"A8(1,2)", "3³·7"},      {"A9(1,2)", "2⁴·3²"},
      {"A10(1,2)", "3⁴"},
  };
  return t;
}

inline const DTable& index3_case4() {
  static const DTable t{
      {"A1(2)E8", "2⁴"},          {"A1(2)A10", "2²·11"},      {"A1(2)A6A4", "2²·5·7"},   {"A1(2)A6", "2²·7²"},
      {"A1(2)A4", "2³·5²"},       {"A1(2)", "2⁶"},            {"A2(2,2)E8A1", "2²·5"},   {"A2(2,2)E8", "5²"},
      {"A2(2,2)E7", "2⁴·5"},      {"A2(2,2)D9", "2³·5"},      {"A2(2,2)D7", "2⁵·5"},     {"A2(2,2)D5A4", "2³·5²"},
      {"A2(2,2)D5", "2³·5·7"},    {"A2(2,2)A9", "2²·5²"},     {"A2(2,2)A7", "2⁶·5"},     {"A2(2,2)A6A3", "2³·5·7"},
      {"A2(2,2)A6A1", "2⁴·5·7"},  {"A2(2,2)A6", "5·7·11"},    {"A2(2,2)A4A3", "2⁵·5²"},  {"A2(2,2)A4A1", "2²·5²·7"},
      {"A2(2,2)A4", "5²·17"},     {"A2(2,2)A3", "2⁴·5²"},     {"A2(2,2)A1", "2²·5·13"},  {"A2(2,2)", "5·29"},
      {"A3(2,2)E8", "2⁴"},        {"A3(2,2)A6", "2⁶·7"},      {"A3(2,2)A4", "2⁴·5·7"},   {"A3(2,2)", "2⁴·13"},
      {"A4(2,2)E7", "2²·11"},     {"A4(2,2)D7", "2³·11"},     {"A4(2,2)D5", "2⁵·11"},    {"A4(2,2)A7", "2⁴·11"},
      {"A4(2,2)A6A1", "2²·7·11"}, {"A4(2,2)A6", "5·7·11"},    {"A4(2,2)A4A3", "2³·5·11"}, {"A4(2,2)A4A1", "2⁴·5·11"},
      {"A4(2,2)A4", "5·11²"},     {"A4(2,2)A3", "2³·7·11"},   {"A4(2,2)A1", "2³·5·11"},  {"A4(2,2)", "11·23"},
      {"A5(2,2)A6", "2²·7²"},     {"A5(2,2)A4", "2⁴·5·7"},    {"A5(2,2)", "2³·5·7"},     {"A6(2,2)D5", "2³·17"},
      {"A6(2,2)A4A1", "2²·5·17"}, {"A6(2,2)A4", "5²·17"},     {"A6(2,2)A3", "2⁵·17"},    {"A6(2,2)A1", "2²·7·17"},
      {"A6(2,2)", "17²"},         {"A7(2,2)A4", "2³·5²"},     {"A7(2,2)", "2³·5·7"},     {"A8(2,2)A3", "2³·23"},
      {"A8(2,2)A1", "2⁴·23"},     {"A8(2,2)", "11·23"},       {"A9(2,2)", "2⁴·13"},      {"A10(2,2)A1", "2²·29"},
      {"A10(2,2)", "5·29"},       {"A11(2,2)", "2⁶"},
  };
  return t;
}

inline const DTable& index3_case5() {
  static const DTable t{{"D5(1)A4", "2³·5"}, {"D5(1)", "2³·7"}, {"D7(1)", "2⁵"}, {"D9(1)", "2³"}};
  return t;
}

inline const DTable& index3_case6() {
  static const DTable t{{"D5(2)A4", "2⁴·5"}, {"D5(2)", "2⁶"}, {"D7(2)", "2³·5"}, {"D9(2)", "2⁴"}};
  return t;
}

// Printed rows that disagree with D = K² · ∏|det R_p| for the row's own type: (type, recomputed D).
inline const DTable& printed_errata() {
  static const DTable t{{"K1A2", "2²·3·7"}};
  return t;
}

inline const std::vector<std::pair<std::string, const DTable*>>& all_tables() {
  static const std::vector<std::pair<std::string, const DTable*>> t{
      {"index2-D", &index2_d()},         {"index3-case1", &index3_case1()}, {"index3-case2", &index3_case2()},
      {"index3-case3", &index3_case3()}, {"index3-case4", &index3_case4()}, {"index3-case5", &index3_case5()},
      {"index3-case6", &index3_case6()},
  };
  return t;
}

inline const std::vector<std::string>& survivors_index1() {
  static const std::vector<std::string> s{"E8", "E7", "E6", "D5", "A4", "A2A1", "A1"};
  return s;
}

inline const std::vector<std::string>& survivors_index2() {
  static const std::vector<std::string> s{"K5", "K2A2", "K1A4", "K1"};
  return s;
}

inline const std::vector<std::string>& survivors_index3() {
  static const std::vector<std::string> s{
      "A1(1)E8",    "A1(1)D7",    "A1(1)A6",    "A1(1)A4A1", "A1(1)A3",   "A1(1)",     "A6(1,1)",
      "A10(1,1)",   "A2(1,2)E7",  "A2(1,2)A4",  "A2(1,2)A1", "A4(1,2)A1", "A1(2)A6",   "A1(2)",
      "A2(2,2)E8",  "A2(2,2)A3",  "A6(2,2)",    "D5(2)",
  };
  return s;
}

inline const std::vector<std::string>& unmarked_index3() {
  static const std::vector<std::string> s{"A2(1,2)E7", "A2(2,2)E8"};
  return s;
}

struct EmbeddingInstance {
  std::vector<std::pair<long long, long long>> lenses;  // X(p,q) summands
  int ambient;
  std::vector<long long> complement_squares;  // sorted descending
};

inline const std::vector<EmbeddingInstance>& embedding_instances() {
  static const std::vector<EmbeddingInstance> v{
      {{{9, 1}}, 2, {-1}},
      {{{8, 1}}, 2, {-2}},
      {{{36, 19}}, 4, {-1, -4}},
      {{{32, 17}}, 4, {-2}},
      {{{4, 3}, {9, 1}}, 5, {-1, -4}},
      {{{9, 4}, {8, 1}}, 6, {-2, -18}},
      {{{9, 4}}, 5, {-1}},
      {{{18, 7}}, 5, {-2}},
      {{{45, 16}}, 5, {-5}},
      {{{72, 25}}, 5, {-2}},
      {{{81, 28}}, 5, {-1}},
      {{{15, 11}, {10, 1}}, 7, {-6, -6}},
      {{{42, 29}, {7, 1}}, 7, {-6, -6}},
      {{{96, 65}}, 6, {-6}},
  };
  return v;
}

}  // namespace qhcp::reference

#endif  // QHCP_TESTS_REFERENCE_TABLES_HPP
