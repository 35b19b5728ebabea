#include "qhcp/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "embedded_data.hpp"
#include "qhcp/floer.hpp"

namespace qhcp {

std::string H1Group::str() const {
  switch (kind) {
    case Kind::Z2xZ2: return "Z2xZ2";
    case Kind::Z6xZ2: return "Z6xZ2";
    case Kind::Cyclic: break;
  }
  return order == 1 ? "0" : "Z" + std::to_string(order);
}

std::string link_string(const LinkDescriptor& link) {
  struct {
    std::string operator()(const LensLink& l) const {
      return "L(" + std::to_string(l.p) + "," + std::to_string(l.q) + ")";
    }
    std::string operator()(const TrefoilSurgeryLink& t) const {
      return "S3_" + std::to_string(t.framing) + "(LHT)";
    }
    std::string operator()(const TabulatedLink& t) const { return t.name; }
  } visitor;
  return std::visit(visitor, link);
}

Rational SingularityType::dp_square() const {
  if (!dp_square_value) throw DomainError("D_p^2 is not defined for " + token());
  return *dp_square_value;
}

std::string SingularityType::token() const {
  const std::string n = std::to_string(parameter);
  switch (species) {
    case Species::A: return "A" + n;
    case Species::D: return "D" + n;
    case Species::E: return "E" + n;
    case Species::K: return "K" + n;
    case Species::A1_1: return "A1(1)";
    case Species::A1_2: return "A1(2)";
    case Species::An_11: return "A" + n + "(1,1)";
    case Species::An_12: return "A" + n + "(1,2)";
    case Species::An_22: return "A" + n + "(2,2)";
    case Species::Dn_1: return "D" + n + "(1)";
    case Species::Dn_2: return "D" + n + "(2)";
  }
  return "?";
}

namespace {

int family_rank(Species s) {
  switch (s) {
    case Species::E: return 0;
    case Species::D: return 1;
    case Species::A: return 2;
    default: return -1;
  }
}

SingularityType cyclic_index3(Species s, int n, std::int64_t p, std::int64_t q, int curves, Rational dp) {
  SingularityType t;
  t.species = s;
  t.parameter = n;
  t.index = 3;
  t.det_R = p;
  t.group_order = p;
  t.curve_count = curves;
  t.dp_square_value = dp;
  t.h1 = {H1Group::Kind::Cyclic, p};
  t.link = LensLink{p, q};
  return t;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("parameter out of range: " + what);
}

}  // namespace

bool display_before(const SingularityType& a, const SingularityType& b) {
  if (a.index != b.index) return a.index > b.index;
  if (a.index == 1) {
    int ra = family_rank(a.species);
    int rb = family_rank(b.species);
    if (ra != rb) return ra < rb;
    return a.parameter > b.parameter;
  }
  if (a.species != b.species) return static_cast<int>(a.species) < static_cast<int>(b.species);
  return a.parameter < b.parameter;
}

SingularityType lookup(Species species, int n) {
  SingularityType t;
  t.species = species;
  t.parameter = n;
  switch (species) {
    case Species::A:
      require(n >= 1, "A" + std::to_string(n));
      t.det_R = t.group_order = n + 1;
      t.curve_count = n;
      t.dp_square_value = Rational(0);
      t.h1 = {H1Group::Kind::Cyclic, n + 1};
      t.link = LensLink{n + 1, n};
      return t;
    case Species::D:
      require(n >= 4, "D" + std::to_string(n));
      t.det_R = 4;
      t.group_order = 4 * (n - 2);
      t.curve_count = n;
      t.dp_square_value = Rational(0);
      t.h1 = n % 2 == 0 ? H1Group{H1Group::Kind::Z2xZ2, 4} : H1Group{H1Group::Kind::Cyclic, 4};
      if (n == 5)
        t.link = TrefoilSurgeryLink{-4};
      else
        t.link = TabulatedLink{"L(D" + std::to_string(n) + ")", 4};
      return t;
    case Species::E:
      require(n >= 6 && n <= 8, "E" + std::to_string(n));
      t.det_R = 9 - n;
      t.group_order = n == 6 ? 24 : n == 7 ? 48 : 120;
      t.curve_count = n;
      t.dp_square_value = Rational(0);
      t.h1 = {H1Group::Kind::Cyclic, 9 - n};
      t.link = TrefoilSurgeryLink{n - 9};
      return t;
    case Species::K:
      require(n >= 1, "K" + std::to_string(n));
      t.index = 2;
      t.det_R = t.group_order = 4 * n;
      t.curve_count = n;
      t.dp_square_value = Rational(-1);
      t.h1 = {H1Group::Kind::Cyclic, 4 * n};
      t.link = LensLink{4 * n, 2 * n - 1};
      return t;
    case Species::A1_1:
      require(n == 1, "A1(1)");
      return cyclic_index3(species, 1, 3, 1, 1, Rational(-1, 3));
    case Species::A1_2:
      require(n == 1, "A1(2)");
      return cyclic_index3(species, 1, 6, 1, 1, Rational(-8, 3));
    case Species::An_11:
      require(n >= 3, "A" + std::to_string(n) + "(1,1)");
      return cyclic_index3(species, n, 9 * n - 15, 6 * n - 11, n, Rational(-4, 3));
    case Species::An_12:
      require(n >= 2, "A" + std::to_string(n) + "(1,2)");
      return cyclic_index3(species, n, 9 * n - 9, 6 * n - 7, n, Rational(-2));
    case Species::An_22:
      require(n >= 2, "A" + std::to_string(n) + "(2,2)");
      return cyclic_index3(species, n, 9 * n - 3, 3 * n - 2, n, Rational(-8, 3));
    case Species::Dn_1:
    case Species::Dn_2: {
      const bool first = species == Species::Dn_1;
      require(n >= 4, "D" + std::to_string(n) + (first ? "(1)" : "(2)"));
      t.index = 3;
      t.det_R = 12;
      t.group_order = 12 * (n - 2);
      t.curve_count = n;
      if (n >= 5) t.dp_square_value = first ? Rational(-2, 3) : Rational(-4, 3);
      t.h1 = n % 2 == 0 ? H1Group{H1Group::Kind::Z6xZ2, 12} : H1Group{H1Group::Kind::Cyclic, 12};
      t.link = TabulatedLink{"L(" + t.token() + ")", 12};
      return t;
    }
  }
  throw DomainError("unknown species");
}

namespace {

// Parses one token starting at pos; advances pos.
SingularityType parse_one(std::string_view s, std::size_t& pos) {
  auto fail = [&](const std::string& why) -> SingularityType {
    throw DomainError("cannot parse singularity token in '" + std::string(s) + "': " + why);
  };
  if (pos >= s.size()) return fail("unexpected end");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos++])));
  if (pos < s.size() && s[pos] == '_') ++pos;
  bool braced = pos < s.size() && s[pos] == '{';
  if (braced) ++pos;
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) return fail("missing parameter");
  const int n = std::stoi(std::string(s.substr(start, pos - start)));
  if (braced) {
    if (pos >= s.size() || s[pos] != '}') return fail("unbalanced brace");
    ++pos;
  }
  std::string suffix;
  if (pos < s.size() && s[pos] == '(') {
    auto close = s.find(')', pos);
    if (close == std::string_view::npos) return fail("unbalanced parenthesis");
    suffix = std::string(s.substr(pos + 1, close - pos - 1));
    pos = close + 1;
  }
  switch (letter) {
    case 'A':
      if (suffix.empty()) return lookup(Species::A, n);
      if (n == 1 && suffix == "1") return lookup(Species::A1_1, 1);
      if (n == 1 && suffix == "2") return lookup(Species::A1_2, 1);
      if (suffix == "1,1") return lookup(Species::An_11, n);
      if (suffix == "1,2") return lookup(Species::An_12, n);
      if (suffix == "2,2") return lookup(Species::An_22, n);
      break;
    case 'D':
      if (suffix.empty()) return lookup(Species::D, n);
      if (suffix == "1") return lookup(Species::Dn_1, n);
      if (suffix == "2") return lookup(Species::Dn_2, n);
      break;
    case 'E':
      if (suffix.empty()) return lookup(Species::E, n);
      break;
    case 'K':
      if (suffix.empty()) return lookup(Species::K, n);
      break;
    default:
      break;
  }
  return fail("unknown species");
}

}  // namespace

SingularityType parse_token(std::string_view token) {
  std::size_t pos = 0;
  SingularityType t = parse_one(token, pos);
  if (pos != token.size()) throw DomainError("trailing characters in token '" + std::string(token) + "'");
  return t;
}

std::vector<SingularityType> parse_multiset(std::string_view text) {
  std::vector<SingularityType> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '+' || c == ','; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t end = i;
    int depth = 0;
    while (end < text.size() && (depth > 0 || !is_sep(text[end]))) {
      if (text[end] == '(') ++depth;
      if (text[end] == ')') --depth;
      ++end;
    }
    std::string_view chunk = text.substr(i, end - i);
    std::size_t pos = 0;
    int multiplicity = 1;
    if (std::isdigit(static_cast<unsigned char>(chunk[0]))) {
      while (pos < chunk.size() && std::isdigit(static_cast<unsigned char>(chunk[pos]))) ++pos;
      multiplicity = std::stoi(std::string(chunk.substr(0, pos)));
      if (multiplicity < 1) throw DomainError("multiplicity must be positive");
    }
    bool first = true;
    while (pos < chunk.size()) {
      SingularityType t = parse_one(chunk, pos);
      for (int k = 0; k < (first ? multiplicity : 1); ++k) out.push_back(t);
      first = false;
    }
    i = end;
  }
  return out;
}

std::optional<std::vector<Rational>> spin_d_invariants(const SingularityType& t) {
  if (t.species == Species::D) {
    // Tabulated values for the Seifert links of D_n.
    std::vector<Rational> v{Rational(t.parameter - 4, 4), Rational(t.parameter, 4)};
    return v;
  }
  if (t.species == Species::Dn_2 && t.parameter == 9) {
    // Tabulated for the reversed link as -5/4, -9/4.
    return std::vector<Rational>{Rational(5, 4), Rational(9, 4)};
  }
  if (const auto* lens = std::get_if<LensLink>(&t.link)) return floer::spin_d_lens(lens->p, lens->q);
  if (const auto* tref = std::get_if<TrefoilSurgeryLink>(&t.link)) {
    // The link is -S^3_{|f|}(RHT); reverse orientation once here.
    std::vector<Rational> out;
    for (const auto& d : floer::spin_d_trefoil_surgery(-tref->framing)) out.push_back(-d);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  return std::nullopt;
}

std::vector<ImportedClassification> parse_classification_text(std::string_view text) {
  std::vector<ImportedClassification> out;
  std::size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') throw DomainError("malformed section header at line " + std::to_string(line_no));
      out.push_back({std::string(line.substr(1, line.size() - 2)), {}});
    } else {
      if (out.empty()) throw DomainError("entry before any section at line " + std::to_string(line_no));
      out.back().entries.push_back(parse_multiset(line));
    }
    if (end == text.size()) break;
  }
  return out;
}

const ImportedClassification& imported(std::string_view name) {
  static const std::vector<ImportedClassification> all = [] {
    std::vector<ImportedClassification> v;
    for (std::string_view text : detail::embedded_data_files()) {
      auto part = parse_classification_text(text);
      v.insert(v.end(), part.begin(), part.end());
    }
    return v;
  }();
  for (const auto& c : all)
    if (c.name == name) return c;
  throw DomainError("no imported classification named '" + std::string(name) + "'");
}

bool same_multiset(std::vector<SingularityType> a, std::vector<SingularityType> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end(), display_before);
  std::sort(b.begin(), b.end(), display_before);
  return a == b;
}

}  // namespace qhcp
