#include "cornerwalk/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cornerwalk {

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Confirmed: return "confirmed";
  case Verdict::Counterexample: return "counterexample";
  case Verdict::DiscrepancyWithPaper: return "discrepancy-with-paper";
  }
  return "?";
}

std::string to_string(Format f) {
  switch (f) {
  case Format::Json: return "json";
  case Format::Csv: return "csv";
  case Format::Pretty: return "pretty";
  }
  return "?";
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "pretty") return Format::Pretty;
  throw Error("unknown format '" + std::string(name) + "'");
}

json to_json(const BigInt& v) { return v.get_str(); }

json coeffs_json(const std::vector<BigInt>& c) {
  json out = json::array();
  for (const auto& v : c) out.push_back(v.get_str());
  return out;
}

json to_json(const IntPoly& p) {
  return coeffs_json(std::vector<BigInt>(p.coeffs().begin(), p.coeffs().end()));
}

json to_json(const ShiftedCoeffs& c) {
  return coeffs_json(std::vector<BigInt>(c.coeffs().begin(), c.coeffs().end()));
}

json to_json(const Distribution& d) {
  json out = json::object();
  for (const auto& [v, c] : d.entries()) out[std::to_string(v)] = c.get_str();
  return out;
}

json to_json(const ClassParams& p) {
  return json{{"r", std::to_string(p.r)},
              {"l", std::to_string(p.l)},
              {"u", std::to_string(p.u)},
              {"d", std::to_string(p.d)}};
}

json to_json(const VerdictReport& r, bool include_runtime) {
  json out{{"check", r.check},       {"params", r.params},
           {"expected", r.expected}, {"observed", r.observed},
           {"verdict", to_string(r.verdict)}, {"witness", r.witness}};
  if (!r.note.empty()) out["note"] = r.note;
  if (include_runtime) out["runtime_us"] = std::to_string(r.runtime_us);
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string compact(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string params_text(const json& params) {
  std::string out;
  for (const auto& [k, v] : params.items()) {
    if (!out.empty()) out += ' ';
    out += k + "=" + compact(v);
  }
  return out;
}

} // namespace

std::string emit(const std::vector<VerdictReport>& reports, Format f, bool include_runtime) {
  std::ostringstream os;
  switch (f) {
  case Format::Json: {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, include_runtime));
    os << (arr.empty() ? std::string("[]") : arr.dump(2)) << '\n';
    break;
  }
  case Format::Csv: {
    os << "check,params,verdict,expected,observed,witness,note";
    if (include_runtime) os << ",runtime_us";
    os << '\n';
    for (const auto& r : reports) {
      os << csv_field(r.check) << ',' << csv_field(params_text(r.params)) << ','
         << to_string(r.verdict) << ',' << csv_field(compact(r.expected)) << ','
         << csv_field(compact(r.observed)) << ',' << csv_field(compact(r.witness)) << ','
         << csv_field(r.note);
      if (include_runtime) os << ',' << r.runtime_us;
      os << '\n';
    }
    break;
  }
  case Format::Pretty: {
    std::map<std::string, std::size_t> tally;
    for (const auto& r : reports) {
      ++tally[to_string(r.verdict)];
      os << '[' << to_string(r.verdict) << "] " << r.check;
      if (!r.params.empty()) os << "  " << params_text(r.params);
      if (include_runtime) os << "  (" << r.runtime_us << " us)";
      os << '\n';
      if (r.verdict != Verdict::Confirmed) {
        os << "    expected: " << compact(r.expected) << '\n';
        os << "    observed: " << compact(r.observed) << '\n';
        if (!r.witness.is_null()) os << "    witness:  " << compact(r.witness) << '\n';
      }
      if (!r.note.empty()) os << "    note: " << r.note << '\n';
    }
    os << reports.size() << " report(s)";
    for (const auto& [verdict, n] : tally) os << ", " << n << ' ' << verdict;
    os << '\n';
    break;
  }
  }
  return os.str();
}

std::string emit(const Distribution& d, Format f) {
  std::ostringstream os;
  switch (f) {
  case Format::Json: os << to_json(d).dump() << '\n'; break;
  case Format::Csv:
    os << "value,count\n";
    for (const auto& [v, c] : d.entries()) os << v << ',' << c.get_str() << '\n';
    break;
  case Format::Pretty:
    for (const auto& [v, c] : d.entries()) os << v << '\t' << c.get_str() << '\n';
    os << "total\t" << d.total().get_str() << '\n';
    break;
  }
  return os.str();
}

std::string emit(const IntPoly& p, Format f, const json& extra) {
  auto shifted = to_shifted_basis(p);
  std::ostringstream os;
  switch (f) {
  case Format::Json: {
    json out = extra;
    out["coeffs"] = to_json(p);
    out["shifted"] = to_json(shifted);
    os << out.dump() << '\n';
    break;
  }
  case Format::Csv: {
    os << "power,coeff,shifted\n";
    std::size_t n = std::max(p.coeffs().size(), shifted.coeffs().size());
    for (std::size_t i = 0; i < n; ++i)
      os << i << ',' << p.coeff(i).get_str() << ',' << shifted.coeff(i).get_str() << '\n';
    break;
  }
  case Format::Pretty: {
    os << "p(x) = " << p.str() << '\n';
    os << "in powers of (x+1):";
    for (std::size_t i = 0; i < shifted.coeffs().size(); ++i)
      os << ' ' << shifted.coeff(i).get_str();
    os << '\n';
    for (const auto& [k, v] : extra.items()) os << k << ": " << compact(v) << '\n';
    break;
  }
  }
  return os.str();
}

} // namespace cornerwalk
