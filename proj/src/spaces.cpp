#include "hodgeledger/spaces.hpp"

#include <array>

#include "hodgeledger/errors.hpp"

namespace hodgeledger {

namespace {

Int small_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

HodgeClass abelian(int g) {
  if (g < 0) throw BadInput("abelian: negative dimension " + std::to_string(g));
  if (g > 8) throw DimensionGuard("abelian: dimension " + std::to_string(g) + " exceeds guard (8)");
  HodgeClass out;
  for (int p = 0; p <= g; ++p)
    for (int q = 0; q <= g; ++q)
      out.add(p + q, p, q, small_binomial(g, p) * small_binomial(g, q));
  return out;
}

HodgeClass parity_part(const HodgeClass& a, Parity parity) {
  const int want = parity == Parity::even ? 0 : 1;
  HodgeClass out;
  for (const auto& [key, m] : a.entries())
    if (((key.n % 2) + 2) % 2 == want) out.add(key.n, key.p, key.q, m);
  return out;
}

HodgeClass curve(int g) {
  if (g < 0) throw BadInput("curve: negative genus " + std::to_string(g));
  HodgeClass out = unit_class();
  out.add(1, 1, 0, g);
  out.add(1, 0, 1, g);
  out.add(2, 1, 1, 1);
  return out;
}

HodgeClass projective(int n) {
  if (n < 0) throw BadInput("projective: negative dimension " + std::to_string(n));
  HodgeClass out;
  for (int k = 0; k <= n; ++k) out.add(2 * k, k, k, 1);
  return out;
}

HodgeClass kummer_k3(const HodgeClass& j) {
  if (j != abelian(2))
    throw BadInput("kummer_k3: input is not the 2-dimensional abelian table");
  return add_exceptional(parity_part(j, Parity::even), 16);
}

HodgeClass add_exceptional(const HodgeClass& a, int k) {
  if (k < 0) throw BadInput("add_exceptional: negative count " + std::to_string(k));
  HodgeClass out = a;
  out.add(2, 1, 1, k);
  return out;
}

HodgeClass fixture(FixtureName name) {
  switch (name) {
    case FixtureName::J:
      return abelian(2);
    case FixtureName::A:
      return tensor(abelian(2), abelian(2));
    case FixtureName::U:
      return parity_part(abelian(2), Parity::even);
    case FixtureName::W:
      return parity_part(abelian(2), Parity::odd);
    case FixtureName::KummerK3:
      return kummer_k3(abelian(2));
    case FixtureName::Z:
      return add_exceptional(parity_part(abelian(2), Parity::even), 24);
    case FixtureName::Sigma:
      return parity_part(tensor(abelian(2), abelian(2)), Parity::even);
  }
  throw UnknownName("fixture: bad enumerator");
}

namespace {

constexpr std::array<std::pair<FixtureName, const char*>, 7> kFixtureNames{{
    {FixtureName::J, "J"},
    {FixtureName::A, "A"},
    {FixtureName::U, "U"},
    {FixtureName::W, "W"},
    {FixtureName::KummerK3, "KummerK3"},
    {FixtureName::Z, "Z"},
    {FixtureName::Sigma, "Sigma"},
}};

}  // namespace

FixtureName fixture_from_name(const std::string& name) {
  for (const auto& [value, text] : kFixtureNames)
    if (name == text) return value;
  throw UnknownName("fixture: unknown name \"" + name + "\"");
}

const char* fixture_to_name(FixtureName name) {
  for (const auto& [value, text] : kFixtureNames)
    if (name == value) return text;
  throw UnknownName("fixture: bad enumerator");
}

}  // namespace hodgeledger
