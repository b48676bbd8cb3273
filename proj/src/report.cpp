#include "normcert/report.hpp"

#include "normcert/errors.hpp"

namespace normcert {

namespace {

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

}  // namespace

Json to_json(const CyclotomicElement& x) {
  return Json{{"level", x.level()}, {"coords", rational_list(x.coords())}};
}

CyclotomicElement element_from_json(const Json& j) {
  try {
    const auto level = j.at("level").get<std::uint32_t>();
    std::vector<Rational> coords;
    for (const auto& c : j.at("coords")) coords.push_back(parse_rational(c.get<std::string>()));
    return CyclotomicElement::from_coords(CyclotomicField::make(level), coords);
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed element record: ") + e.what());
  }
}

Json to_json(const QSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) {
    terms.push_back(Json{{"exponent", to_string(e)},
                         {"level", c.level()},
                         {"coords", rational_list(c.coords())}});
  }
  return Json{{"truncation", to_string(s.truncation())}, {"terms", terms}};
}

QSeries qseries_from_json(const Json& j) {
  try {
    const Rational truncation = parse_rational(j.at("truncation").get<std::string>());
    const auto& terms = j.at("terms");
    if (terms.empty()) throw DomainError("cannot infer the coefficient field of an empty series");
    const auto field = CyclotomicField::make(terms.front().at("level").get<std::uint32_t>());
    QSeries out(field, truncation);
    for (const auto& t : terms) {
      std::vector<Rational> coords;
      for (const auto& c : t.at("coords")) coords.push_back(parse_rational(c.get<std::string>()));
      if (t.at("level").get<std::uint32_t>() != field->level())
        throw DomainError("series terms use different coefficient levels");
      const auto coeff = CyclotomicElement::from_coords(field, coords);
      out = out + QSeries::monomial(coeff, parse_rational(t.at("exponent").get<std::string>()), truncation);
    }
    return out;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed series record: ") + e.what());
  }
}

Json to_json(const NormalityCertificate& cert) {
  Json subgroups = Json::array();
  for (const auto& v : cert.subgroups) {
    Json s{{"elements", v.elements},
           {"order", v.elements.size()},
           {"character_sum_test", v.character_sum_test ? "pass" : "fail"},
           {"determinant_test", v.determinant_test ? "pass" : "fail"},
           {"vanishing_characters", v.vanishing_characters}};
    if (!v.notes.empty()) s["notes"] = v.notes;
    subgroups.push_back(std::move(s));
  }
  Json out{{"schema", kCertificateSchema},
           {"kind", cert.kind},
           {"level", cert.level},
           {"group_mode", to_string(cert.mode)},
           {"claim", cert.claim == NormalityClaim::normal ? "normal" : "completely normal"},
           {"exponent", cert.exponent},
           {"subgroups", subgroups},
           {"verdict", cert.verdict()}};
  if (cert.element) out["element"] = to_json(*cert.element);
  if (!cert.element_label.empty()) out["element_label"] = cert.element_label;
  if (cert.kind == "modular") {
    out["method"] = "nonarchimedean valuation exp(-ord_q)";
    out["tests"] = Json{{"character_sum_test", "dominance from Bernoulli sums"},
                        {"determinant_test", "dominance from Siegel product expansions"}};
  } else {
    out["tests"] = Json{{"character_sum_test", "all character sums nonzero"},
                        {"determinant_test", "group determinant nonzero"}};
  }
  return out;
}

Json to_json(const ExponentResult& r) {
  Json out{{"level", r.level},
           {"construction", to_string(r.construction)},
           {"exponent", r.exponent},
           {"ratio_bound", to_string(r.ratio_bound)},
           {"threshold", to_string(r.threshold)},
           {"boundary_exact", r.boundary_exact}};
  if (r.dominant) out["dominant"] = *r.dominant;
  if (!r.per_subgroup.empty()) {
    Json subs = Json::array();
    for (const auto& s : r.per_subgroup)
      subs.push_back(Json{{"elements", s.elements},
                          {"dominant", s.dominant},
                          {"exponent", s.exponent},
                          {"ratio_bound", to_string(s.ratio_bound)},
                          {"threshold", to_string(s.threshold)}});
    out["per_subgroup"] = subs;
  }
  return out;
}

Json to_json(const CompositeReport& r) {
  return Json{{"level", r.level},
              {"degree_first", r.degree_first},
              {"degree_second", r.degree_second},
              {"degree_compositum", r.degree_compositum},
              {"disjoint", r.degree_compositum == r.degree_first * r.degree_second},
              {"first_factor_normal", r.first_normal},
              {"second_factor_normal", r.second_normal},
              {"certificate", to_json(r.certificate)}};
}

Json to_json(const IdentityCheck& r) {
  Json out{{"holds", r.holds}, {"checked_below", to_string(r.checked_below)}};
  if (r.first_mismatch) out["first_mismatch"] = to_string(*r.first_mismatch);
  return out;
}

Json to_json(const ValuationReport& r) {
  Json sums = Json::array();
  for (std::uint32_t t = 1; t < r.level; ++t)
    sums.push_back(Json{{"t", t},
                        {"S", to_string(r.exponent_sums[t])},
                        {"ord_bernoulli", to_string(r.conjugate_orders_bernoulli[t])},
                        {"ord_series", to_string(r.conjugate_orders_series[t])}});
  return Json{{"level", r.level},
              {"order", to_string(r.order)},
              {"sums_negative", r.sums_negative},
              {"exponent_sums", sums},
              {"certificate", to_json(r.certificate)}};
}

}  // namespace normcert
