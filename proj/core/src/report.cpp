#include "qhcp/report.hpp"

#include <sstream>

#include "json.hpp"

namespace qhcp::report {

using json = nlohmann::ordered_json;
using screening::CandidateResult;
using screening::ClassificationReport;

std::string factored(const Rational& r) {
  if (r.sign() == 0) return "0";
  std::string out = r.sign() < 0 ? "-" : "";
  const std::int64_t n = r.num() < 0 ? checked::neg(r.num()) : r.num();
  out += factor_string(n);
  if (r.den() != 1) out += "/" + factor_string(r.den());
  return out;
}

namespace {

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

std::vector<Rational> parse_rationals(const json& a) {
  std::vector<Rational> out;
  for (const auto& x : a) out.push_back(Rational::parse(x.get<std::string>()));
  return out;
}

json evidence_json(const Evidence& e) {
  struct {
    json operator()(std::monostate) const { return json{{"kind", "none"}}; }
    json operator()(const GroupEvidence& g) const {
      return json{{"kind", "groups"}, {"members", g.members}, {"orders", g.orders}, {"groups", g.groups}};
    }
    json operator()(const ArithmeticEvidence& a) const {
      return json{{"kind", "arithmetic"},
                  {"K2", a.K2.str()},
                  {"det_product", a.det_product},
                  {"D", a.D.str()},
                  {"D_factored", factored(a.D)}};
    }
    json operator()(const BmyEvidence& b) const {
      return json{{"kind", "bmy"},
                  {"K2", b.K2.str()},
                  {"e_orb", b.e_orb.str()},
                  {"three_e_orb", (Rational(3) * b.e_orb).str()},
                  {"anti_ample_possible", b.anti_ample_possible}};
    }
    json operator()(const DonaldsonEvidence& d) const {
      json orbits = json::array();
      for (const auto& o : d.orbits)
        orbits.push_back(
            json{{"vectors", o.vectors}, {"complement", o.complement}, {"complement_square", o.complement_square}});
      return json{{"kind", "donaldson"},
                  {"weights", d.weights},
                  {"ambient_rank", d.ambient_rank},
                  {"required_square", d.required_square},
                  {"orbits", orbits}};
    }
    json operator()(const LinkingEvidence& l) const {
      return json{{"kind", "linking"}, {"orders", l.orders}, {"values", l.values},
                  {"order", l.order},  {"value", l.value},   {"residue", l.residue}};
    }
    json operator()(const SpinSumEvidence& s) const {
      json sets = json::array();
      for (const auto& set : s.spin_sets) sets.push_back(rationals(set));
      return json{{"kind", "spin_sum"}, {"spin_sets", sets}, {"sums", rationals(s.sums)}};
    }
  } visitor;
  return std::visit(visitor, e);
}

Evidence parse_evidence(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "none") return std::monostate{};
  if (kind == "groups") {
    return GroupEvidence{j.at("members").get<std::vector<std::string>>(), j.at("orders").get<std::vector<std::int64_t>>(),
                         j.at("groups").get<std::vector<std::string>>()};
  }
  if (kind == "arithmetic") {
    return ArithmeticEvidence{Rational::parse(j.at("K2").get<std::string>()), j.at("det_product").get<std::int64_t>(),
                              Rational::parse(j.at("D").get<std::string>())};
  }
  if (kind == "bmy") {
    return BmyEvidence{Rational::parse(j.at("K2").get<std::string>()), Rational::parse(j.at("e_orb").get<std::string>()),
                       j.at("anti_ample_possible").get<bool>()};
  }
  if (kind == "donaldson") {
    DonaldsonEvidence d;
    d.weights = j.at("weights").get<std::vector<std::vector<std::int64_t>>>();
    d.ambient_rank = j.at("ambient_rank").get<int>();
    d.required_square = j.at("required_square").get<std::int64_t>();
    for (const auto& o : j.at("orbits"))
      d.orbits.push_back({o.at("vectors").get<std::vector<std::vector<std::int64_t>>>(),
                          o.at("complement").get<std::vector<std::int64_t>>(), o.at("complement_square").get<std::int64_t>()});
    return d;
  }
  if (kind == "linking") {
    return LinkingEvidence{j.at("orders").get<std::vector<std::int64_t>>(), j.at("values").get<std::vector<std::int64_t>>(),
                           j.at("order").get<std::int64_t>(), j.at("value").get<std::int64_t>(),
                           j.at("residue").get<std::int64_t>()};
  }
  if (kind == "spin_sum") {
    SpinSumEvidence s;
    for (const auto& set : j.at("spin_sets")) s.spin_sets.push_back(parse_rationals(set));
    s.sums = parse_rationals(j.at("sums"));
    return s;
  }
  throw DomainError("unknown evidence kind '" + kind + "'");
}

json names(const std::vector<Configuration>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(c.name());
  return a;
}

}  // namespace

std::string to_json(const ClassificationReport& r) {
  json doc;
  doc["index"] = r.index;
  json cands = json::array();
  for (const auto& c : r.candidates) {
    json verdicts = json::array();
    for (const auto& v : c.verdicts)
      verdicts.push_back(json{{"filter", filter_name(v.filter)},
                              {"outcome", outcome_name(v.outcome)},
                              {"note", v.note},
                              {"evidence", evidence_json(v.evidence)}});
    json entry;
    entry["type"] = c.config.name();
    entry["members"] = c.config.tokens();
    entry["L"] = c.config.L;
    entry["K2"] = c.config.K2.str();
    entry["D"] = c.config.D.str();
    entry["D_factored"] = factored(c.config.D);
    entry["e_orb"] = c.config.e_orb.str();
    entry["h1_product"] = c.config.h1_product;
    entry["verdicts"] = verdicts;
    entry["status"] = c.survived ? "SURVIVED-ALL-FILTERS" : "OBSTRUCTED";
    entry["eliminated_by"] = c.eliminated_by ? json(filter_name(*c.eliminated_by)) : json(nullptr);
    entry["realizability"] = c.realizable ? json("REALIZABLE") : c.survived ? json("UNDECIDED") : json(nullptr);
    cands.push_back(entry);
  }
  doc["candidates"] = cands;
  doc["survivors"] = names(r.survivors());
  doc["undecided"] = names(r.undecided());
  doc["covers_realizable"] = r.covers_realizable();
  return doc.dump(2) + "\n";
}

ClassificationReport from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    ClassificationReport r;
    r.index = doc.at("index").get<int>();
    for (const auto& e : doc.at("candidates")) {
      CandidateResult c;
      std::vector<SingularityType> members;
      for (const auto& t : e.at("members")) members.push_back(parse_token(t.get<std::string>()));
      c.config = Configuration::from_members(std::move(members));
      if (c.config.name() != e.at("type").get<std::string>() || c.config.D.str() != e.at("D").get<std::string>())
        throw DomainError("derived fields disagree for " + e.at("type").get<std::string>());
      for (const auto& v : e.at("verdicts")) {
        ObstructionVerdict ov;
        ov.filter = parse_filter(v.at("filter").get<std::string>());
        ov.outcome = parse_outcome(v.at("outcome").get<std::string>());
        ov.note = v.at("note").get<std::string>();
        ov.evidence = parse_evidence(v.at("evidence"));
        c.verdicts.push_back(std::move(ov));
      }
      c.survived = e.at("status").get<std::string>() == "SURVIVED-ALL-FILTERS";
      if (!e.at("eliminated_by").is_null()) c.eliminated_by = parse_filter(e.at("eliminated_by").get<std::string>());
      c.realizable = e.at("realizability") == "REALIZABLE";
      r.candidates.push_back(std::move(c));
    }
    return r;
  } catch (const json::exception& ex) {
    throw DomainError(std::string("malformed report JSON: ") + ex.what());
  }
}

std::string to_markdown(const ClassificationReport& r) {
  std::ostringstream os;
  os << "## Index " << r.index << " classification\n\n";
  os << "| Type | L | K² | D | e_orb |";
  for (Filter f : default_filter_order()) os << ' ' << filter_name(f) << " |";
  os << " Status | Realizable |\n|---|---|---|---|---|";
  for (std::size_t i = 0; i < default_filter_order().size(); ++i) os << "---|";
  os << "---|---|\n";
  for (const auto& c : r.candidates) {
    os << "| " << c.config.name() << " | " << c.config.L << " | " << c.config.K2.str() << " | " << factored(c.config.D)
       << " | " << c.config.e_orb.str() << " |";
    for (Filter f : default_filter_order()) {
      std::string cell = "";
      for (const auto& v : c.verdicts)
        if (v.filter == f) cell = outcome_name(v.outcome);
      os << ' ' << (cell.empty() ? "-" : cell) << " |";
    }
    os << ' ' << (c.survived ? "SURVIVED-ALL-FILTERS" : "OBSTRUCTED") << " | "
       << (c.realizable ? "REALIZABLE" : c.survived ? "UNDECIDED" : "") << " |\n";
  }
  os << "\nSurvivors (" << r.survivors().size() << "):";
  for (const auto& s : r.survivors()) os << ' ' << s.name();
  os << "\n\nWithout realizability mark:";
  const auto und = r.undecided();
  if (und.empty()) os << " none";
  for (const auto& s : und) os << ' ' << s.name();
  os << "\n\nEvery imported realizable type survived: " << (r.covers_realizable() ? "yes" : "no") << "\n";
  return os.str();
}

std::vector<std::string> d_table_ids() {
  return {"index2-D", "index3-case1", "index3-case2", "index3-case3", "index3-case4", "index3-case5", "index3-case6"};
}

std::vector<DRow> d_table(std::string_view id) {
  std::vector<Configuration> configs;
  if (id == "index2-D") {
    for (auto& c : screening::enumerate_candidates(2))
      if (screening::arithmetic_filter(c).outcome == Outcome::Obstructed) configs.push_back(std::move(c));
  } else if (id.substr(0, 10) == "index3-cas" && id.size() == 12 && id[11] >= '1' && id[11] <= '6') {
    configs = screening::enumerate_index3_case(id[11] - '0');
  } else {
    throw DomainError("unknown table id '" + std::string(id) + "'");
  }
  std::vector<DRow> rows;
  for (const auto& c : configs) {
    const bool sq = c.D.sign() > 0 && c.D.is_integer() && is_perfect_square(c.D.num());
    rows.push_back({c.name(), c.L, c.K2, c.D, sq});
  }
  return rows;
}

std::string d_table_markdown(std::string_view id) {
  const auto rows = d_table(id);
  std::ostringstream os;
  os << "## D table " << id << " (" << rows.size() << " rows)\n\n";
  os << "| Type | L | K² | D | square |\n|---|---|---|---|---|\n";
  for (const auto& r : rows)
    os << "| " << r.type << " | " << r.L << " | " << r.K2.str() << " | " << factored(r.D) << " | "
       << (r.square ? "yes" : "no") << " |\n";
  return os.str();
}

std::string candidates_markdown(const std::vector<Configuration>& configs) {
  std::ostringstream os;
  os << "| Type | L | K² | D | e_orb |\n|---|---|---|---|---|\n";
  for (const auto& c : configs)
    os << "| " << c.name() << " | " << c.L << " | " << c.K2.str() << " | " << factored(c.D) << " | "
       << c.e_orb.str() << " |\n";
  os << "\n" << configs.size() << " configurations\n";
  return os.str();
}

}  // namespace qhcp::report
