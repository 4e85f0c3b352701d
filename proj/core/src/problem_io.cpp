#include "seqdual/problem_io.hpp"

#include <cstddef>
#include <sstream>

#include "seqdual/errors.hpp"

namespace seqdual {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

EcSeq parse_sequence_at(std::string_view text, std::size_t line) {
  try {
    return parse_sequence(text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), e.column(), line);
  }
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  ProblemFile file;
  bool have_space = false;
  bool have_point = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;

    std::size_t space = line.find_first_of(" \t");
    std::string_view keyword = line.substr(0, space);
    std::string_view rest =
        space == std::string_view::npos ? "" : strip(line.substr(space + 1));

    if (keyword == "space") {
      if (have_space) throw ParseError("duplicate space line", 1, line_no);
      if (rest != "l1")
        throw ParseError("unsupported space '" + std::string(rest) + "' (expected l1)",
                         1, line_no);
      file.space = SpaceTag::L1;
      have_space = true;
    } else if (keyword == "constraint") {
      file.constraints.push_back(parse_sequence_at(rest, line_no));
    } else if (keyword == "point") {
      if (have_point) throw ParseError("duplicate point line", 1, line_no);
      file.point = parse_sequence_at(rest, line_no);
      if (!file.point.has_zero_tail())
        throw ParseError("point not in l1: tail must be 0", 1, line_no);
      have_point = true;
    } else {
      throw ParseError("unknown keyword '" + std::string(keyword) + "'", 1, line_no);
    }
  }

  if (!have_space) throw ParseError("missing 'space' line", 1, line_no);
  if (!have_point) throw ParseError("missing 'point' line", 1, line_no);
  return file;
}

std::string render_report(const DualityReport& report, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Machine) {
    auto seq = [](const EcSeq& s) { return render_sequence(s, /*exact=*/true); };
    out << "space=l1\n";
    out << "condition=" << (report.condition_holds ? "true" : "false") << "\n";
    out << "double_perp_defect=" << report.double_perp_defect << "\n";
    out << "primal=" << render_rational_exact(report.primal_value) << "\n";
    out << "primal_witness=" << seq(report.primal_witness) << "\n";
    out << "primal_certified=" << (report.primal_certified ? "true" : "false")
        << "\n";
    out << "dual=" << render_rational_exact(report.dual_value) << "\n";
    out << "dual_witness=" << seq(report.dual_witness) << "\n";
    out << "predual=" << render_rational_exact(report.predual_value) << "\n";
    out << "predual_witness=" << seq(report.predual_witness) << "\n";
    out << "gap=" << render_rational_exact(report.gap) << "\n";
    out << "window_used=" << report.window_used << "\n";
    return out.str();
  }

  out << "space                 : l1\n";
  out << "restoring condition   : "
      << (report.condition_holds ? "holds" : "fails");
  if (!report.condition_holds)
    out << "  (double-perp defect " << report.double_perp_defect << ")";
  out << "\n";
  out << "primal min distance   : " << render_rational(report.primal_value)
      << "\n";
  out << "  witness x*          : " << render_sequence(report.primal_witness)
      << (report.primal_certified ? "  (certified)" : "  (best effort, not certified)")
      << "\n";
  out << "dual max <y,lambda>   : " << render_rational(report.dual_value) << "\n";
  out << "  witness lambda*     : " << render_sequence(report.dual_witness) << "\n";
  out << "predual sup <nu,y>    : " << render_rational(report.predual_value)
      << "\n";
  out << "  witness nu*         : " << render_sequence(report.predual_witness)
      << "\n";
  out << "duality gap           : " << render_rational(report.gap) << "\n";
  return out.str();
}

}  // namespace seqdual
