#pragma once

#include <json.hpp>

#include "normcert/criterion.hpp"
#include "normcert/cyclotomic.hpp"
#include "normcert/modular.hpp"
#include "normcert/normality.hpp"
#include "normcert/qseries.hpp"

namespace normcert {

using Json = nlohmann::json;

inline constexpr const char* kCertificateSchema = "normcert.certificate/1";
inline constexpr const char* kReportSchema = "normcert.report/1";

/// {"level": l, "coords": ["p/q", ...]}
Json to_json(const CyclotomicElement& x);
CyclotomicElement element_from_json(const Json& j);

/// {"truncation": "p/q", "terms": [{"exponent", "level", "coords"}, ...]}
Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

Json to_json(const NormalityCertificate& cert);
Json to_json(const ExponentResult& r);
Json to_json(const CompositeReport& r);
Json to_json(const IdentityCheck& r);
Json to_json(const ValuationReport& r);

}  // namespace normcert
