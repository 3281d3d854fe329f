#include <gradval/report.hpp>

#include <json.hpp>

#include <sstream>

namespace gradval {

namespace {

using ojson = nlohmann::ordered_json;

ojson int_value(const Int& z) {
  if (z.fits_slong_p()) return ojson(z.get_si());
  return ojson(to_string(z));  // too large for a JSON number, keep it exact
}

}  // namespace

std::string to_json(const Report& r) {
  ojson j;
  j["kind"] = r.kind;
  j["label"] = r.label;
  j["verdict"] = r.verdict;
  j["ok"] = r.ok;
  j["e"] = r.e ? int_value(*r.e) : ojson(nullptr);
  j["invariant_factors"] = ojson::array();
  for (const auto& d : r.invariant_factors) j["invariant_factors"].push_back(int_value(d));
  j["coset_values"] = r.coset_values;
  j["levels"] = r.levels;
  j["witnesses"] = r.witnesses;
  j["details"] = ojson::object();
  for (const auto& [k, v] : r.details) j["details"][k] = v;
  j["notes"] = r.notes;
  return j.dump(2);
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "kind:    " << r.kind << "\n";
  if (!r.label.empty()) out << "label:   " << r.label << "\n";
  out << "verdict: " << r.verdict << "\n";
  if (r.e) out << "e:       " << to_string(*r.e) << "\n";
  if (!r.invariant_factors.empty()) {
    out << "invariant_factors:";
    for (const auto& d : r.invariant_factors) out << " " << to_string(d);
    out << "\n";
  }
  if (!r.coset_values.empty()) {
    out << "coset_values:";
    for (const auto& v : r.coset_values) out << " " << v;
    out << "\n";
  }
  if (!r.levels.empty()) {
    out << "levels:";
    for (long long n : r.levels) out << " " << n;
    out << "\n";
  }
  for (const auto& w : r.witnesses) out << "witness: " << w << "\n";
  for (const auto& [k, v] : r.details) out << k << ": " << v << "\n";
  for (const auto& n : r.notes) out << "note:    " << n << "\n";
  out << (r.ok ? "ok" : "FAILED") << "\n";
  return out.str();
}

}  // namespace gradval
