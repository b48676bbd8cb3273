#include "normcert/galois.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "normcert/errors.hpp"

namespace normcert {

std::string to_string(GroupMode mode) {
  switch (mode) {
    case GroupMode::full:
      return "full";
    case GroupMode::real_quotient:
      return "real-quotient";
    case GroupMode::unipotent:
      return "unipotent";
  }
  return "unknown";
}

GroupMode parse_group_mode(const std::string& text) {
  if (text == "full") return GroupMode::full;
  if (text == "real-quotient") return GroupMode::real_quotient;
  if (text == "unipotent") return GroupMode::unipotent;
  throw DomainError("unknown group mode '" + text + "'");
}

std::uint32_t GroupLaw::identity() const {
  if (mode == GroupMode::unipotent) return 0;
  return level == 1 ? 0 : 1;
}

std::uint32_t GroupLaw::canonical(long long t) const {
  const auto r = static_cast<std::uint32_t>(mod(t, level));
  if (mode == GroupMode::unipotent) return r;
  if (level == 1) return 0;
  if (gcd(r, level) != 1)
    throw DomainError(std::to_string(t) + " is not a unit modulo " + std::to_string(level));
  if (mode == GroupMode::real_quotient) return std::min(r, level - r);
  return r;
}

std::uint32_t GroupLaw::multiply(std::uint32_t a, std::uint32_t b) const {
  if (mode == GroupMode::unipotent) return static_cast<std::uint32_t>((std::uint64_t{a} + b) % level);
  return canonical(static_cast<long long>((std::uint64_t{a} * b) % level));
}

std::uint32_t GroupLaw::inverse(std::uint32_t a) const {
  if (mode == GroupMode::unipotent) return static_cast<std::uint32_t>((level - a) % level);
  if (level == 1) return 0;
  return canonical(static_cast<long long>(inverse_mod(a, level)));
}

std::uint32_t GroupLaw::power(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t result = identity();
  std::uint32_t base = a;
  while (k > 0) {
    if (k & 1U) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

std::uint64_t GroupLaw::element_order(std::uint32_t a) const {
  std::uint64_t k = 1;
  for (std::uint32_t x = a; x != identity(); x = multiply(x, a)) ++k;
  return k;
}

GaloisGroup GaloisGroup::build(std::uint32_t level, GroupMode mode) {
  if (level < 1) throw DomainError("group level must be >= 1");
  if (mode == GroupMode::real_quotient && level < 3)
    throw DomainError("real-quotient mode needs level >= 3; got " + std::to_string(level));
  GaloisGroup g;
  g.law_ = GroupLaw{level, mode};
  std::set<std::uint32_t> seen;
  for (std::uint32_t t = 0; t < level; ++t) {
    if (mode != GroupMode::unipotent && gcd(t, level) != 1 && level != 1) continue;
    seen.insert(g.law_.canonical(t));
  }
  g.elements_.assign(seen.begin(), seen.end());
  return g;
}

bool GaloisGroup::contains(std::uint32_t t) const {
  return std::binary_search(elements_.begin(), elements_.end(), t);
}

Subgroup::Subgroup(const GaloisGroup& parent, std::vector<std::uint32_t> elements)
    : law_(parent.law()), parent_order_(parent.order()), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (const auto e : elements_)
    if (!parent.contains(e)) throw DomainError("subgroup element not in parent group");
  if (!contains(law_.identity())) throw DomainError("subgroup lacks the identity");
  for (const auto a : elements_) {
    if (!contains(law_.inverse(a))) throw DomainError("subgroup not closed under inverse");
    for (const auto b : elements_)
      if (!contains(law_.multiply(a, b))) throw DomainError("subgroup not closed under product");
  }
}

bool Subgroup::contains(std::uint32_t t) const {
  return std::binary_search(elements_.begin(), elements_.end(), t);
}

std::size_t Subgroup::index_of(std::uint32_t t) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), t);
  if (it == elements_.end() || *it != t) throw DomainError("element not in subgroup");
  return static_cast<std::size_t>(it - elements_.begin());
}

std::uint64_t Subgroup::exponent() const {
  std::uint64_t e = 1;
  for (const auto a : elements_) e = lcm(e, law_.element_order(a));
  return e;
}

Subgroup whole_group(const GaloisGroup& g) { return Subgroup(g, g.elements()); }

namespace {

// Closure of a generating set under the group law (finite, so products suffice).
std::vector<std::uint32_t> closure(const GroupLaw& law, const std::vector<std::uint32_t>& gens) {
  std::set<std::uint32_t> members{law.identity()};
  std::vector<std::uint32_t> frontier{law.identity()};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (const auto a : frontier)
      for (const auto g : gens) {
        const auto p = law.multiply(a, g);
        if (members.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return {members.begin(), members.end()};
}

}  // namespace

Subgroup generated_subgroup(const GaloisGroup& g, const std::vector<std::uint32_t>& generators) {
  return Subgroup(g, closure(g.law(), generators));
}

std::vector<Subgroup> all_subgroups(const GaloisGroup& g, std::size_t bound) {
  if (g.order() > bound)
    throw BoundExceeded("group order " + std::to_string(g.order()) + " exceeds enumeration bound " +
                        std::to_string(bound));
  const auto& law = g.law();
  std::set<std::vector<std::uint32_t>> found;
  for (const auto a : g.elements()) found.insert(closure(law, {a}));

  // Join pairs until nothing new appears. In an abelian group the join of
  // A and B is the product set AB.
  std::vector<std::vector<std::uint32_t>> pending(found.begin(), found.end());
  std::vector<std::vector<std::uint32_t>> all = pending;
  while (!pending.empty()) {
    std::vector<std::vector<std::uint32_t>> fresh;
    for (const auto& a : pending)
      for (const auto& b : all) {
        std::set<std::uint32_t> product;
        for (const auto x : a)
          for (const auto y : b) product.insert(law.multiply(x, y));
        std::vector<std::uint32_t> joined(product.begin(), product.end());
        if (found.insert(joined).second) fresh.push_back(std::move(joined));
      }
    all.insert(all.end(), fresh.begin(), fresh.end());
    pending = std::move(fresh);
  }

  std::vector<std::vector<std::uint32_t>> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Subgroup> out;
  out.reserve(sorted.size());
  for (auto& elements : sorted) out.emplace_back(g, std::move(elements));
  return out;
}

bool Character::is_trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [](auto e) { return e == 0; });
}

std::vector<Character> characters(const Subgroup& h, std::size_t bound) {
  if (h.order() > bound)
    throw BoundExceeded("subgroup order " + std::to_string(h.order()) +
                        " exceeds character-table bound " + std::to_string(bound));
  const auto& law = h.law();
  const std::uint64_t d = h.exponent();
  const std::size_t level = law.level;

  // Build the dual one generator at a time. If g^k is the first power of g
  // inside the current subgroup C, each character psi of C extends in
  // exactly k ways: e(g) = psi(g^k)/k + i*d/k, i = 0..k-1.
  std::vector<std::uint32_t> current{law.identity()};
  std::vector<char> in_current(level, 0);
  in_current[law.identity()] = 1;
  std::vector<std::vector<std::uint64_t>> tables{std::vector<std::uint64_t>(level, 0)};

  for (const auto g : h.elements()) {
    if (in_current[g]) continue;
    std::uint64_t k = 1;
    std::uint32_t gk = g;
    while (!in_current[gk]) {
      gk = law.multiply(gk, g);
      ++k;
    }
    std::vector<std::uint32_t> extended;
    extended.reserve(current.size() * k);
    std::vector<std::vector<std::uint64_t>> next_tables;
    next_tables.reserve(tables.size() * k);
    for (const auto& psi : tables) {
      const std::uint64_t c = psi[gk];
      if (c % k != 0) throw InternalError("character extension has no solution");
      for (std::uint64_t i = 0; i < k; ++i) {
        const std::uint64_t eg = (c / k + i * (d / k)) % d;
        std::vector<std::uint64_t> chi = psi;
        for (const auto base : current) {
          std::uint32_t elem = base;
          for (std::uint64_t j = 1; j < k; ++j) {
            elem = law.multiply(elem, g);
            chi[elem] = (psi[base] + j * eg) % d;
          }
        }
        next_tables.push_back(std::move(chi));
      }
    }
    for (const auto base : current) {
      std::uint32_t elem = base;
      extended.push_back(elem);
      for (std::uint64_t j = 1; j < k; ++j) {
        elem = law.multiply(elem, g);
        extended.push_back(elem);
      }
    }
    for (const auto e : extended) in_current[e] = 1;
    current = std::move(extended);
    tables = std::move(next_tables);
  }

  std::vector<Character> out;
  out.reserve(tables.size());
  for (const auto& table : tables) {
    Character chi;
    chi.modulus = d;
    chi.exponents.reserve(h.order());
    for (const auto e : h.elements()) chi.exponents.push_back(table[e]);
    out.push_back(std::move(chi));
  }
  if (out.size() != h.order()) throw InternalError("dual group has the wrong order");
  return out;
}

}  // namespace normcert
