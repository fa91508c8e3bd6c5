#ifndef CORNERWALK_REPORT_HPP
#define CORNERWALK_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cornerwalk/enumeration.hpp"
#include "cornerwalk/paths.hpp"
#include "cornerwalk/polynomial.hpp"

namespace cornerwalk {

using json = nlohmann::json;

enum class Verdict { Confirmed, Counterexample, DiscrepancyWithPaper };
std::string to_string(Verdict v);

/// Outcome of one check at one parameter point. Numbers inside params,
/// expected, observed and witness are decimal strings.
struct VerdictReport {
  std::string check;
  json params = json::object();
  json expected;
  json observed;
  Verdict verdict = Verdict::Confirmed;
  /// Everything needed to reproduce a failure; null when confirmed.
  json witness;
  std::string note;
  std::int64_t runtime_us = 0;
};

enum class Format { Json, Csv, Pretty };
std::string to_string(Format f);
Format parse_format(std::string_view name);

json to_json(const BigInt& v);
json to_json(const IntPoly& p);
json to_json(const ShiftedCoeffs& c);
json to_json(const Distribution& d);
json to_json(const ClassParams& p);
json to_json(const VerdictReport& r, bool include_runtime);
json coeffs_json(const std::vector<BigInt>& c);

/// Serializations are deterministic: sorted JSON keys, decimal-string
/// counts, CSV with a header row.
std::string emit(const std::vector<VerdictReport>& reports, Format f, bool include_runtime = false);
std::string emit(const Distribution& d, Format f);
/// {"coeffs": [...], "shifted": [...]} plus any extra fields.
std::string emit(const IntPoly& p, Format f, const json& extra = json::object());

} // namespace cornerwalk

#endif
