#include "qhcp/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qhcp/floer.hpp"
#include "qhcp/lattice.hpp"
#include "qhcp/linking.hpp"
#include "qhcp/report.hpp"
#include "qhcp/screening.hpp"

namespace qhcp::cli {

namespace {

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw DomainError("expected 'p,q', got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const std::int64_t p = std::stoll(a, &used);
    if (used != a.size()) throw DomainError("bad integer '" + a + "'");
    const std::int64_t q = std::stoll(b, &used);
    if (used != b.size()) throw DomainError("bad integer '" + b + "'");
    return {p, q};
  } catch (const std::logic_error&) {
    throw DomainError("expected 'p,q', got '" + text + "'");
  }
}

std::string vector_string(const lattice::Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

// Commas inside parentheses belong to the descriptor ("L(5,2)").
std::vector<std::string> split_descriptors(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    if (ch != ' ') cur += ch;
  }
  out.push_back(cur);
  for (const auto& s : out)
    if (s.empty()) throw DomainError("empty descriptor in '" + text + "'");
  return out;
}

linking::CyclicLinkingForm descriptor_form(const std::string& d) {
  if (d.size() > 3 && d[0] == 'L' && d[1] == '(' && d.back() == ')') {
    const auto [p, q] = parse_pair(d.substr(2, d.size() - 3));
    return linking::lens_linking_form(p, q);
  }
  if (d.size() > 3 && d[0] == 'S' && d[1] == '(' && d.back() == ')') {
    const std::string k = d.substr(2, d.size() - 3);
    std::size_t used = 0;
    std::int64_t framing = 0;
    try {
      framing = std::stoll(k, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != k.size()) throw DomainError("bad framing in '" + d + "'");
    return linking::surgery_linking_form(framing);
  }
  auto form = linking::reversed_link_form(parse_token(d));
  if (!form) throw DomainError("no cyclic linking form known for '" + d + "'");
  return *form;
}

int cmd_classify(int index, const std::string& format, int jobs, std::int64_t budget, bool exhaustive,
                 std::ostream& out) {
  screening::ScreeningOptions opts;
  opts.jobs = jobs;
  opts.exhaustive = exhaustive;
  opts.lattice.budget = budget;
  const auto r = screening::classify(index, opts);
  out << (format == "json" ? report::to_json(r) : report::to_markdown(r));
  return kExitOk;
}

int cmd_embed(const std::string& graphs, int ambient, std::int64_t budget, int jobs, std::ostream& out) {
  const auto lats = lattice::parse_graphs(graphs);
  lattice::EnumerationOptions opts;
  opts.budget = budget;
  opts.jobs = jobs;
  const auto found = lattice::enumerate_embeddings(lats, ambient, opts);
  std::size_t vertices = 0;
  for (const auto& l : lats) vertices += l.rank();
  out << "graphs:";
  for (const auto& l : lats) out << " [" << l.str() << "]";
  out << "\nambient: -Z^" << ambient << "\norbits: " << found.size() << "\n";
  for (std::size_t i = 0; i < found.size(); ++i) {
    out << "orbit " << i + 1 << ":\n";
    for (std::size_t v = 0; v < found[i].vectors.size(); ++v)
      out << "  v" << v + 1 << " = " << vector_string(found[i].vectors[v]) << "\n";
    if (vertices + 1 == static_cast<std::size_t>(ambient)) {
      const auto w = lattice::complement_witness(found[i]);
      out << "  complement = " << vector_string(w.generator) << ", square " << w.square << "\n";
    }
  }
  return kExitOk;
}

int cmd_dinv(const std::string& lens, bool spin, std::ostream& out) {
  const auto [p, q] = parse_pair(lens);
  out << "L(" << p << "," << q << ")" << (spin ? " spin" : "") << "\n";
  if (spin) {
    for (auto i : floer::spin_labels(p, q)) out << i << "\t" << floer::d_lens(p, q, i).str() << "\n";
  } else {
    const auto all = floer::d_lens_all(p, q);
    for (std::size_t i = 0; i < all.size(); ++i) out << i << "\t" << all[i].str() << "\n";
  }
  return kExitOk;
}

int cmd_linkform(const std::string& sum, std::ostream& out) {
  std::vector<linking::CyclicLinkingForm> forms;
  for (const auto& d : split_descriptors(sum)) {
    forms.push_back(descriptor_form(d));
    out << d << "\t" << forms.back().str() << "\n";
  }
  const auto total = linking::connected_sum_form(forms);
  out << "composed\t" << total.str() << "\n";
  if (total.is_trivial()) {
    out << "verdict\tPASS (trivial form)\n";
    return kExitOk;
  }
  const std::int64_t residue = mod(-total.value(), total.order());
  const bool square = is_square_unit_mod(residue, total.order());
  out << "residue\t" << residue << " mod " << total.order() << (square ? " (square)" : " (not a square)") << "\n";
  out << "verdict\t" << (square ? "PASS" : "OBSTRUCTED") << "\n";
  return kExitOk;
}

int cmd_candidates(int index, int case_number, std::ostream& out) {
  if (case_number != 0 && index != 3) throw DomainError("--case requires --index 3");
  const auto configs =
      case_number ? screening::enumerate_index3_case(case_number) : screening::enumerate_candidates(index);
  out << report::candidates_markdown(configs);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Screening engine for rational homology projective planes with quotient singularities", "qhcp"};
  app.require_subcommand(1);

  int index = 0, jobs = 1, ambient = 0, case_number = 0;
  std::int64_t budget = lattice::EnumerationOptions{}.budget;
  std::string format = "json", table_id, graphs, lens, sum;
  bool spin = false, exhaustive = false;

  auto* classify = app.add_subcommand("classify", "Screen every candidate of one index");
  classify->add_option("--index", index, "Index 1, 2 or 3")->required()->check(CLI::Range(1, 3));
  classify->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
  classify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  classify->add_option("--budget", budget, "Embedding search budget")->check(CLI::PositiveNumber);
  classify->add_flag("--exhaustive", exhaustive, "Run every filter after an obstruction");

  auto* table = app.add_subcommand("table", "D table with factorizations");
  table->add_option("--id", table_id, "Table id")->required()->check(CLI::IsMember(report::d_table_ids()));

  auto* embed = app.add_subcommand("embed", "Embeddings of plumbing lattices into -Z^N up to symmetry");
  embed->add_option("--graphs", graphs, "Linear graphs, e.g. \"-2,-10,-2;-9\"")->required();
  embed->add_option("--ambient", ambient, "Ambient rank N")->required()->check(CLI::PositiveNumber);
  embed->add_option("--budget", budget, "Search budget")->check(CLI::PositiveNumber);
  embed->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* dinv = app.add_subcommand("dinv", "d-invariants of a lens space by spin^c label");
  dinv->add_option("--lens", lens, "p,q")->required();
  dinv->add_flag("--spin", spin, "Spin structures only");

  auto* linkform = app.add_subcommand("linkform", "Compose linking forms and test the square-unit condition");
  linkform->add_option("--sum", sum, "Descriptors: species tokens, L(p,q), S(k)")->required();

  auto* candidates = app.add_subcommand("candidates", "Enumerated configurations with L, K^2, D");
  candidates->add_option("--index", index, "Index 1, 2 or 3")->required()->check(CLI::Range(1, 3));
  candidates->add_option("--case", case_number, "Index-3 case 1..6")->check(CLI::Range(1, 6));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(index, format, jobs, budget, exhaustive, out);
    if (*table) {
      out << report::d_table_markdown(table_id);
      return kExitOk;
    }
    if (*embed) return cmd_embed(graphs, ambient, budget, jobs, out);
    if (*dinv) return cmd_dinv(lens, spin, out);
    if (*linkform) return cmd_linkform(sum, out);
    if (*candidates) return cmd_candidates(index, case_number, out);
  } catch (const lattice::BudgetExceeded& e) {
    err << "error: search budget exhausted: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace qhcp::cli
