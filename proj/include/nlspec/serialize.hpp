// serialize.hpp — JSON forms for fingerprints and reports (nlohmann::json).
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nlspec/numbers.hpp"
#include "nlspec/polynomial.hpp"
#include "nlspec/spectral.hpp"
#include "nlspec/structure.hpp"

namespace nlspec {

using Json = nlohmann::json;

// {"det": [decimal strings low-to-high], "degprod": decimal, "isolated": k}
inline Json fingerprint_to_json(const Fingerprint& fp) {
  Json det = Json::array();
  for (const BigInt& c : fp.det_poly.coeffs()) det.push_back(to_decimal(c));
  return Json{{"det", det}, {"degprod", to_decimal(fp.deg_product)}, {"isolated", fp.isolated_count}};
}

inline Fingerprint fingerprint_from_json(const Json& j) {
  Fingerprint fp;
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("det")) coeffs.push_back(bigint_from_decimal(c.get<std::string>()));
  fp.det_poly = IntPoly(std::move(coeffs));
  fp.deg_product = bigint_from_decimal(j.at("degprod").get<std::string>());
  fp.isolated_count = j.at("isolated").get<int>();
  return fp;
}

inline Json check_report_to_json(const CheckReport& report) {
  Json j{{"passed", report.passed}};
  if (report.violation) {
    const Violation& v = *report.violation;
    Json vj{{"eq", v.condition},
            {"lhs", rational_string(v.lhs)},
            {"rhs", rational_string(v.rhs)}};
    if (v.u >= 0 && v.v >= 0) {
      vj["pair"] = Json::array({v.u, v.v});
    } else if (v.u >= 0) {
      vj["vertex"] = v.u;
    }
    j["violation"] = vj;
  }
  return j;
}

}  // namespace nlspec
