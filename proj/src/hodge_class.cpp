#include "hodgeledger/hodge_class.hpp"

#include <json.hpp>

#include <limits>

#include "hodgeledger/errors.hpp"

namespace hodgeledger {

namespace {

// C(top, j) by the exact stepwise product; zero when 0 <= top < j.
Int binomial(const Int& top, int j) {
  if (j < 0) return 0;
  Int r = 1;
  for (int i = 1; i <= j; ++i) {
    r *= top - j + i;
    r /= i;  // exact: r is a partial binomial after each step
  }
  return r < 0 ? Int(0) : r;
}

}  // namespace

HodgeClass HodgeClass::from_entries(const std::vector<std::tuple<int, int, int, Int>>& entries) {
  HodgeClass out;
  for (const auto& [n, p, q, m] : entries) out.add(n, p, q, m);
  return out;
}

void HodgeClass::add(int n, int p, int q, const Int& m) {
  if (m == 0) return;
  CellKey key{n, p, q};
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, m);
    return;
  }
  it->second += m;
  if (it->second == 0) entries_.erase(it);
}

bool HodgeClass::is_effective() const {
  for (const auto& [key, m] : entries_)
    if (m < 0) return false;
  return true;
}

bool HodgeClass::weight_parity() const {
  for (const auto& [key, m] : entries_)
    if (((key.p + key.q) - key.n) % 2 != 0) return false;
  return true;
}

Int HodgeClass::total_dimension() const {
  Int total = 0;
  for (const auto& [key, m] : entries_) total += m;
  return total;
}

HodgeClass unit_class() { return make_class(0, 0, 0); }

HodgeClass make_class(int n, int p, int q, const Int& m) {
  HodgeClass out;
  out.add(n, p, q, m);
  return out;
}

HodgeClass linear_combine(const std::vector<std::pair<Int, HodgeClass>>& terms) {
  HodgeClass out;
  for (const auto& [c, a] : terms)
    for (const auto& [key, m] : a.entries()) out.add(key.n, key.p, key.q, c * m);
  return out;
}

HodgeClass scale(const Int& c, const HodgeClass& a) { return linear_combine({{c, a}}); }

HodgeClass tensor(const HodgeClass& a, const HodgeClass& b) {
  HodgeClass out;
  for (const auto& [ka, ma] : a.entries())
    for (const auto& [kb, mb] : b.entries())
      out.add(ka.n + kb.n, ka.p + kb.p, ka.q + kb.q, ma * mb);
  return out;
}

HodgeClass operator+(const HodgeClass& a, const HodgeClass& b) {
  return linear_combine({{1, a}, {1, b}});
}

HodgeClass operator-(const HodgeClass& a, const HodgeClass& b) {
  return linear_combine({{1, a}, {-1, b}});
}

HodgeClass operator*(const HodgeClass& a, const HodgeClass& b) { return tensor(a, b); }

HodgeClass shift_up(int k, const HodgeClass& a) {
  if (k < 0) throw BadInput("shift_up: negative shift " + std::to_string(k));
  HodgeClass out;
  for (const auto& [key, m] : a.entries()) out.add(key.n + k, key.p, key.q, m);
  return out;
}

HodgeClass tate(int k, const HodgeClass& a) {
  HodgeClass out;
  for (const auto& [key, m] : a.entries()) out.add(key.n, key.p - k, key.q - k, m);
  return out;
}

HodgeClass angle(int k, const HodgeClass& a) {
  if (k < 0) throw BadInput("angle: negative index " + std::to_string(k));
  return tate(-k, shift_up(2 * k, a));
}

HodgeClass dual(const HodgeClass& a) {
  HodgeClass out;
  for (const auto& [key, m] : a.entries()) out.add(-key.n, -key.p, -key.q, m);
  return out;
}

namespace {

// Shared core of super_sym / super_wedge.  `repeats_on_even` selects which
// parity of generator may repeat: symmetric powers repeat even generators
// and exclude repeated odd ones (they square to zero), exterior powers do
// the opposite.  Dynamic programming over cells: a cell of multiplicity m
// contributes j of the k chosen generators in C(m+j-1, j) ways when repeats
// are allowed and C(m, j) ways when they are not.
HodgeClass super_power(int k, const HodgeClass& a, bool repeats_on_even, const char* op) {
  if (k < 0) throw BadInput(std::string(op) + ": negative power " + std::to_string(k));
  if (!a.is_effective()) throw VirtualInput(std::string(op) + ": input has negative multiplicities");

  std::vector<HodgeClass> acc(static_cast<std::size_t>(k) + 1);
  acc[0] = unit_class();
  for (const auto& [key, m] : a.entries()) {
    const bool even = key.n % 2 == 0;
    const bool repeats = even == repeats_on_even;
    std::vector<Int> ways(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j)
      ways[j] = repeats ? binomial(m + j - 1, j) : binomial(m, j);
    std::vector<HodgeClass> next(static_cast<std::size_t>(k) + 1);
    for (int t = 0; t <= k; ++t)
      for (int j = 0; j <= t; ++j) {
        if (ways[j] == 0) continue;
        for (const auto& [prev, pm] : acc[t - j].entries())
          next[t].add(prev.n + j * key.n, prev.p + j * key.p, prev.q + j * key.q, pm * ways[j]);
      }
    acc = std::move(next);
  }
  return acc[static_cast<std::size_t>(k)];
}

}  // namespace

HodgeClass super_sym(int k, const HodgeClass& a) {
  return super_power(k, a, /*repeats_on_even=*/true, "super_sym");
}

HodgeClass super_wedge(int k, const HodgeClass& a) {
  return super_power(k, a, /*repeats_on_even=*/false, "super_wedge");
}

Numerics numerics(const HodgeClass& a) {
  Numerics out;
  for (const auto& [key, m] : a.entries()) {
    const Int signed_m = key.n % 2 == 0 ? m : -m;
    out.betti[key.n] += m;
    out.euler += signed_m;
    out.e_polynomial[{key.p, key.q}] += signed_m;
  }
  // Degrees/bidegrees that cancel to zero are not part of the result.
  for (auto it = out.betti.begin(); it != out.betti.end();)
    it = it->second == 0 ? out.betti.erase(it) : std::next(it);
  for (auto it = out.e_polynomial.begin(); it != out.e_polynomial.end();)
    it = it->second == 0 ? out.e_polynomial.erase(it) : std::next(it);
  return out;
}

SymmetryResult symmetry_checks(const HodgeClass& a, int d) {
  SymmetryResult res{true, true};
  const auto& table = a.entries();
  auto lookup = [&table](int n, int p, int q) -> Int {
    auto it = table.find(CellKey{n, p, q});
    return it == table.end() ? Int(0) : it->second;
  };
  for (const auto& [key, m] : table) {
    if (lookup(2 * d - key.n, d - key.p, d - key.q) != m) res.poincare = false;
    if (lookup(key.n, key.q, key.p) != m) res.hodge = false;
  }
  return res;
}

namespace {

long long to_wire_int(const Int& m) {
  static const Int kMax = std::numeric_limits<long long>::max();
  static const Int kMin = std::numeric_limits<long long>::min();
  if (m > kMax || m < kMin)
    throw SerializationRange("multiplicity " + m.str() + " exceeds the JSON integer range");
  return m.convert_to<long long>();
}

}  // namespace

std::string serialize(const HodgeClass& a) {
  nlohmann::ordered_json doc;
  doc["format"] = "hodgeclass/v1";
  auto& entries = doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, m] : a.entries())
    entries.push_back({key.n, key.p, key.q, to_wire_int(m)});
  return doc.dump();
}

HodgeClass deserialize(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw BadInput(std::string("deserialize: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != "hodgeclass/v1")
    throw BadInput("deserialize: missing format tag hodgeclass/v1");
  const auto entries = doc.find("entries");
  if (entries == doc.end() || !entries->is_array())
    throw BadInput("deserialize: missing entries array");
  HodgeClass out;
  for (const auto& row : *entries) {
    if (!row.is_array() || row.size() != 4) throw BadInput("deserialize: entry is not [n,p,q,m]");
    for (const auto& v : row)
      if (!v.is_number_integer()) throw BadInput("deserialize: non-integer entry field");
    const long long n = row[0].get<long long>();
    const long long p = row[1].get<long long>();
    const long long q = row[2].get<long long>();
    constexpr long long kIdx = std::numeric_limits<int>::max();
    if (n > kIdx || n < -kIdx || p > kIdx || p < -kIdx || q > kIdx || q < -kIdx)
      throw BadInput("deserialize: degree out of range");
    out.add(static_cast<int>(n), static_cast<int>(p), static_cast<int>(q),
            Int(row[3].get<long long>()));
  }
  return out;
}

}  // namespace hodgeledger
