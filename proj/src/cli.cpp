#include "normcert/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "normcert/elements.hpp"
#include "normcert/errors.hpp"
#include "normcert/modular.hpp"
#include "normcert/normality.hpp"
#include "normcert/report.hpp"

namespace normcert::cli {

namespace {

constexpr std::uint32_t kMaxLevel = 1U << 16;
constexpr std::size_t kMaxItems = 4096;

enum class Outcome { passed, failed, skipped };

struct Item {
  Json json;
  Outcome outcome = Outcome::skipped;
};

std::uint32_t parse_level_value(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw DomainError("not a nonnegative integer: '" + s + "'");
  const unsigned long long v = std::stoull(s);
  if (v > kMaxLevel) throw DomainError("level " + s + " exceeds the bound " + std::to_string(kMaxLevel));
  return static_cast<std::uint32_t>(v);
}

std::string ordering_note(Outcome o) {
  switch (o) {
    case Outcome::passed: return "passed";
    case Outcome::failed: return "failed";
    case Outcome::skipped: return "skipped";
  }
  return "?";
}

// Shared per-item error policy: domain problems skip the item, anything else
// is a mathematical failure.
template <class F>
Item guarded(Json head, F&& body) {
  Item item;
  item.json = std::move(head);
  try {
    item.outcome = body(item.json) ? Outcome::passed : Outcome::failed;
  } catch (const DomainError& e) {
    item.outcome = Outcome::skipped;
    item.json["note"] = e.what();
  } catch (const HypothesisError& e) {
    item.outcome = Outcome::failed;
    item.json["error"] = std::string("hypothesis violated: ") + e.what();
  } catch (const std::exception& e) {
    item.outcome = Outcome::failed;
    item.json["error"] = std::string("internal error: ") + e.what();
  }
  item.json["status"] = ordering_note(item.outcome);
  return item;
}

Item cyclotomic_item(const RunConfig& cfg, std::uint32_t ell) {
  return guarded(Json{{"ell", ell}}, [&](Json& j) {
    CyclotomicElement base(CyclotomicField::make(1));
    ExponentResult crit;
    std::string label;
    if (cfg.construction == "cos-plus-one") {
      base = cos_plus_one_element(ell);
      crit = cos_plus_one_exponent(ell, cfg.precision);
      label = "(cos(2pi/" + std::to_string(ell) + ")+1)";
    } else if (cfg.construction == "cos-half") {
      base = cos_half_element(ell);
      crit = cos_half_exponent(ell, cfg.precision);
      label = "cos(pi/" + std::to_string(ell) + ")";
    } else {
      if (is_degenerate_real_level(ell))
        throw DomainError("ax+b construction needs l not in {1,2,3,4,6}; got l=" + std::to_string(ell));
      const auto x = two_cos_element(ell);
      const auto group = GaloisGroup::build(ell, GroupMode::real_quotient);
      crit = ax_plus_b_exponent(x, *cfg.a, *cfg.b, group, cfg.precision);
      base = x * Rational(*cfg.a) + CyclotomicElement::from_rational(x.field(), Rational(*cfg.b));
      label = "(" + std::to_string(*cfg.a) + "*(z+1/z)+" + std::to_string(*cfg.b) + ")";
    }
    const unsigned long m = cfg.exponent.value_or(crit.exponent);
    const auto x = base.pow(static_cast<long>(m));
    const auto group = GaloisGroup::build(x.level(), GroupMode::real_quotient);
    auto cert = is_completely_normal(x, group);
    cert.exponent = std::to_string(m);
    cert.element_label = label + "^" + std::to_string(m);
    j["exponent"] = m;
    j["exponent_source"] = cfg.exponent ? "given" : "auto";
    j["meets_criterion_bound"] = m >= crit.exponent;
    j["criterion"] = to_json(crit);
    j["certificate"] = to_json(cert);
    return cert.passed();
  });
}

Item composite_item(const RunConfig& cfg, std::uint32_t ell) {
  const std::uint32_t t = *cfg.t;
  return guarded(Json{{"ell", ell}, {"t", t}}, [&](Json& j) {
    if (is_degenerate_real_level(ell))
      throw DomainError("composite construction needs l not in {1,2,3,4,6}; got l=" + std::to_string(ell));
    const std::uint32_t level = t * ell;
    const auto crit = cos_plus_one_exponent(level, cfg.precision);
    const unsigned long m = cfg.exponent.value_or(crit.exponent);
    const auto root = sqrt_minus_t(t);
    const auto x1 = root + CyclotomicElement::from_rational(root.field(), 1);
    const auto x2 = cos_plus_one_element(level).pow(static_cast<long>(m));
    auto rep = composite_normal_check(x1, x2, level);
    rep.certificate.exponent = std::to_string(m);
    rep.certificate.element_label = "(sqrt(-" + std::to_string(t) + ")+1)(cos(2pi/" + std::to_string(level) +
                                    ")+1)^" + std::to_string(m);
    j["level"] = level;
    j["exponent"] = m;
    j["exponent_source"] = cfg.exponent ? "given" : "auto";
    j["meets_criterion_bound"] = m >= crit.exponent;
    j["criterion"] = to_json(crit);
    j["composite"] = to_json(rep);
    return rep.normal() && rep.first_normal && rep.second_normal;
  });
}

Item modular_item(const RunConfig& cfg, std::uint32_t level) {
  return guarded(Json{{"level", level}}, [&](Json& j) {
    const Rational trunc(cfg.truncation);
    const auto identity = verify_delta_identity(level, trunc);
    const auto valuation = verify_valuation_certificate(level);
    j["truncation"] = cfg.truncation;
    j["delta_identity"] = to_json(identity);
    j["valuation"] = to_json(valuation);
    return identity.holds && valuation.passed();
  });
}

void configure_workers() {
  const char* env = std::getenv("NORMCERT_WORKERS");
  if (env == nullptr || *env == '\0') return;
  const std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 4 || std::stoi(s) < 1)
    throw DomainError("NORMCERT_WORKERS must be a positive integer; got '" + s + "'");
  omp_set_num_threads(std::stoi(s));
}

Json config_echo(const RunConfig& cfg) {
  Json c{{"command", cfg.command},
         {"exponent", cfg.exponent ? Json(*cfg.exponent) : Json("auto")},
         {"format", cfg.format},
         {"precision_bits", cfg.precision.start_bits}};
  if (cfg.command == "modular") {
    c["level"] = cfg.levels.text;
    c["truncation"] = cfg.truncation;
  } else {
    c["ell"] = cfg.levels.text;
  }
  if (cfg.command == "cyclotomic") c["construction"] = cfg.construction;
  if (cfg.a) c["a"] = *cfg.a;
  if (cfg.b) c["b"] = *cfg.b;
  if (cfg.t) c["t"] = *cfg.t;
  return c;
}

std::string item_line(const RunConfig& cfg, const Json& j) {
  std::ostringstream s;
  if (cfg.command == "modular") {
    s << "N=" << j["level"].get<std::uint32_t>();
  } else {
    s << "l=" << j["ell"].get<std::uint32_t>();
    if (cfg.command == "composite") s << " t=" << j["t"].get<std::uint32_t>();
  }
  s << "  " << j["status"].get<std::string>();
  if (j.contains("exponent")) s << "  m=" << j["exponent"].get<unsigned long>();
  if (j.contains("certificate")) s << "  " << j["certificate"]["verdict"].get<std::string>();
  if (j.contains("composite")) s << "  " << j["composite"]["certificate"]["verdict"].get<std::string>();
  if (j.contains("delta_identity"))
    s << "  identity=" << (j["delta_identity"]["holds"].get<bool>() ? "holds" : "fails")
      << "  valuation=" << j["valuation"]["certificate"]["verdict"].get<std::string>();
  if (j.contains("note")) s << "  (" << j["note"].get<std::string>() << ")";
  if (j.contains("error")) s << "  (" << j["error"].get<std::string>() << ")";
  return s.str();
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "composite" && !is_admissible_quadratic_t(*cfg.t))
    throw DomainError("t must be 4 or a prime = 3 mod 4; got t=" + std::to_string(*cfg.t));
  if (cfg.command == "modular" && cfg.truncation < 1)
    throw DomainError("truncation must be at least 1 to resolve leading terms");
  if (cfg.command == "cyclotomic" && cfg.construction == "ax-plus-b" && (!cfg.a || !cfg.b))
    throw DomainError("ax-plus-b needs --a and --b");
  if (cfg.exponent && *cfg.exponent == 0) throw DomainError("exponent must be positive");
  configure_workers();

  const auto& values = cfg.levels.values;
  std::vector<Item> items(values.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (cfg.command == "cyclotomic")
      items[i] = cyclotomic_item(cfg, values[i]);
    else if (cfg.command == "composite")
      items[i] = composite_item(cfg, values[i]);
    else
      items[i] = modular_item(cfg, values[i]);
  }

  std::size_t passed = 0, failed = 0, skipped = 0;
  Json list = Json::array();
  for (auto& it : items) {
    if (it.outcome == Outcome::passed) ++passed;
    if (it.outcome == Outcome::failed) ++failed;
    if (it.outcome == Outcome::skipped) ++skipped;
    list.push_back(std::move(it.json));
  }
  if (passed + failed == 0) {
    for (const auto& j : list) err << "error: " << j.value("note", std::string("skipped")) << "\n";
    return static_cast<int>(ExitCode::usage);
  }
  const auto code = failed > 0 ? ExitCode::math_failure : ExitCode::ok;

  std::ostringstream body;
  if (cfg.format == "json") {
    Json report{{"schema", kReportSchema},
                {"config", config_echo(cfg)},
                {"items", list},
                {"summary",
                 {{"requested", values.size()},
                  {"passed", passed},
                  {"failed", failed},
                  {"skipped", skipped},
                  {"exit_code", static_cast<int>(code)}}}};
    body << report.dump(2) << "\n";
  } else {
    body << "verify " << cfg.command;
    if (cfg.command == "cyclotomic") body << " (" << cfg.construction << ")";
    body << "\n";
    for (const auto& j : list) body << "  " << item_line(cfg, j) << "\n";
    body << "summary: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  }
  if (cfg.out.empty()) {
    out << body.str();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw DomainError("cannot open output file " + cfg.out);
    f << body.str();
  }
  return static_cast<int>(code);
}

}  // namespace

LevelSpec parse_levels(const std::string& text) {
  LevelSpec spec;
  spec.text = text;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = parse_level_value(text.substr(0, dots));
    const auto hi = parse_level_value(text.substr(dots + 2));
    if (lo > hi) throw DomainError("empty range " + text);
    if (hi - lo + 1 > kMaxItems) throw DomainError("range " + text + " has too many items");
    for (auto v = lo; v <= hi; ++v) spec.values.push_back(v);
    spec.single = false;
    return spec;
  }
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) spec.values.push_back(parse_level_value(part));
  if (spec.values.empty()) throw DomainError("no levels given");
  if (spec.values.size() > kMaxItems) throw DomainError("too many levels");
  spec.single = spec.values.size() == 1;
  return spec;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string levels, exponent = "auto";
  unsigned precision_bits = cfg.precision.start_bits;

  CLI::App app{"Certify normal and completely normal elements", "verify"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--exponent", exponent, "Exponent m, or auto");
    sub->add_option("--precision", precision_bits, "Starting interval precision in bits")
        ->check(CLI::Range(16U, 1U << 14));
    sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", cfg.out, "Write the report to this path");
  };
  auto* cyc = app.add_subcommand("cyclotomic", "Real cyclotomic constructions");
  cyc->add_option("--ell", levels, "Level l, a range a..b or a list")->required();
  cyc->add_option("--construction", cfg.construction)
      ->check(CLI::IsMember({"cos-plus-one", "cos-half", "ax-plus-b"}));
  cyc->add_option("--a", cfg.a, "Coefficient a for ax-plus-b");
  cyc->add_option("--b", cfg.b, "Coefficient b for ax-plus-b");
  common(cyc);
  auto* comp = app.add_subcommand("composite", "(sqrt(-t)+1)(cos(2pi/tl)+1)^m in Q(zeta_tl)");
  comp->add_option("--t", cfg.t, "t = 4 or a prime = 3 mod 4")->required();
  comp->add_option("--ell", levels, "Level l, a range a..b or a list")->required();
  common(comp);
  auto* mod = app.add_subcommand("modular", "Delta(tau)/Delta(N tau) checks");
  mod->add_option("--level", levels, "Level N, a range a..b or a list")->required();
  mod->add_option("--truncation", cfg.truncation, "Series terms past the leading exponent");
  common(mod);

  std::vector<const char*> argv{"verify"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.levels = parse_levels(levels);
    cfg.precision.start_bits = precision_bits;
    if (exponent != "auto") {
      if (exponent.empty() || exponent.find_first_not_of("0123456789") != std::string::npos ||
          exponent.size() > 9)
        throw DomainError("--exponent takes a positive integer or 'auto'");
      cfg.exponent = std::stoul(exponent);
    }
    return execute(cfg, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  }
}

}  // namespace normcert::cli
