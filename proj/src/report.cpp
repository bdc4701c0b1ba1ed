#include "mackey/report.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mackey {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_json(const Rational& value) {
  ordered_json j;
  j["num"] = boost::multiprecision::numerator(value).str();
  j["den"] = boost::multiprecision::denominator(value).str();
  return j;
}

ordered_json report_json(const CartanReport& report) {
  ordered_json j;
  j["group"] = report.group_name;
  j["order"] = report.order;
  j["degree"] = report.degree;
  j["prime"] = report.prime;
  j["pairs"] = ordered_json::array();
  for (const PairRow& row : report.rows) {
    ordered_json r;
    r["r_order"] = row.r_order;
    r["s_order"] = row.s_order;
    r["centralizer_order"] = row.centralizer_order;
    r["centralizer_p_part"] = row.centralizer_p_part;
    r["factor"] = rational_json(row.factor);
    r["cyclic"] = row.cyclic;
    j["pairs"].push_back(std::move(r));
  }
  j["det_mackey"] = rational_json(report.det_mackey);
  ordered_json comackey;
  comackey["rank"] = report.comackey_rank;
  comackey["size"] = report.comackey_size;
  comackey["nonsingular"] = report.nonsingular;
  if (report.det_comackey) comackey["det"] = rational_json(*report.det_comackey);
  j["comackey"] = std::move(comackey);
  j["p_nilpotent"] = report.p_nilpotent;
  j["sylow_cyclic"] = report.sylow_cyclic;
  if (report.verification) {
    j["verification"] = ordered_json::array();
    for (const VerificationRecord& record : *report.verification) {
      ordered_json v;
      v["check"] = record.check;
      v["subject"] = record.subject;
      v["pass"] = record.pass;
      j["verification"].push_back(std::move(v));
    }
  }
  return j;
}

} // namespace

std::string render_text(const CartanReport& report) {
  std::ostringstream out;
  out << "group:         " << report.group_name << "\n"
      << "order:         " << report.order << "\n"
      << "degree:        " << report.degree << "\n"
      << "prime:         " << report.prime << "\n"
      << "\n"
      << "pairs:\n"
      << "    #    |R|    |s|    |C|  |C|_p  cyclic  factor\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const PairRow& row = report.rows[i];
    out << std::setw(5) << (i + 1) << std::setw(7) << row.r_order << std::setw(7)
        << row.s_order << std::setw(7) << row.centralizer_order << std::setw(7)
        << row.centralizer_p_part << std::setw(8) << (row.cyclic ? "yes" : "no") << "  "
        << fraction_string(row.factor) << "\n";
  }
  out << "\n"
      << "det_mackey:    " << fraction_string(report.det_mackey) << "\n"
      << "comackey_rank: " << report.comackey_rank << "\n"
      << "comackey_size: " << report.comackey_size << "\n"
      << "nonsingular:   " << (report.nonsingular ? "true" : "false") << "\n";
  if (report.det_comackey)
    out << "det_comackey:  " << fraction_string(*report.det_comackey) << "\n";
  out << "p_nilpotent:   " << (report.p_nilpotent ? "true" : "false") << "\n"
      << "sylow_cyclic:  " << (report.sylow_cyclic ? "true" : "false") << "\n";
  if (report.verification) {
    out << "\nverification:\n" << render_verification_lines(report);
  }
  return out.str();
}

std::string render_json(const CartanReport& report) {
  return report_json(report).dump(2) + "\n";
}

std::string render_json(const std::vector<CartanReport>& reports) {
  ordered_json array = ordered_json::array();
  for (const CartanReport& report : reports) array.push_back(report_json(report));
  return array.dump(2) + "\n";
}

std::string render_verification_lines(const CartanReport& report) {
  if (!report.verification) return "";
  std::ostringstream out;
  for (const VerificationRecord& record : *report.verification) {
    std::string check = record.check;
    if (check.size() < 30) check.resize(30, ' ');
    out << (record.pass ? "PASS" : "FAIL") << "  " << check << "  [" << record.subject
        << "]\n";
  }
  return out.str();
}

} // namespace mackey
