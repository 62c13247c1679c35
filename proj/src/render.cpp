#include "hodgeledger/render.hpp"

#include <map>
#include <set>
#include <sstream>

#include "hodgeledger/errors.hpp"

namespace hodgeledger {

RenderFormat render_format_from_name(const std::string& name) {
  if (name == "json") return RenderFormat::json;
  if (name == "diamond") return RenderFormat::diamond;
  if (name == "betti") return RenderFormat::betti;
  if (name == "epoly") return RenderFormat::epoly;
  if (name == "tex") return RenderFormat::tex;
  throw BadInput("unknown output format \"" + name + "\"");
}

namespace {

std::string render_betti(const HodgeClass& a) {
  const Numerics num = numerics(a);
  if (num.betti.empty()) return "0";
  std::ostringstream out;
  const int lo = num.betti.begin()->first;
  const int hi = num.betti.rbegin()->first;
  for (int n = lo; n <= hi; ++n) {
    if (n > lo) out << " ";
    const auto it = num.betti.find(n);
    out << (it == num.betti.end() ? Int(0) : it->second).str();
  }
  return out.str();
}

std::string render_diamond(const HodgeClass& a) {
  if (a.empty()) return "(empty)";
  // Group by degree; within a degree list p from high to low, the usual
  // left-to-right order of a diamond row.
  std::map<int, std::map<int, std::map<int, Int>>> rows;  // n -> -p -> q -> m
  for (const auto& [key, m] : a.entries()) rows[key.n][-key.p][key.q] = m;
  std::ostringstream out;
  bool first_row = true;
  for (const auto& [n, by_p] : rows) {
    if (!first_row) out << "\n";
    first_row = false;
    out << "n=" << n << ":";
    for (const auto& [neg_p, by_q] : by_p)
      for (const auto& [q, m] : by_q) out << " (" << -neg_p << "," << q << "):" << m.str();
  }
  return out.str();
}

std::string render_epoly(const HodgeClass& a) {
  const Numerics num = numerics(a);
  if (num.e_polynomial.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [pq, v] : num.e_polynomial) {
    if (!first) out << "\n";
    first = false;
    out << "(" << pq.first << "," << pq.second << "): " << v.str();
  }
  return out.str();
}

std::string render_tex(const HodgeClass& a) {
  if (a.empty()) return "\\begin{tabular}{c}\n0 \\\\\n\\end{tabular}";
  // Bounding box of occupied bidegrees; cells sum multiplicities over all
  // degrees (one degree per bidegree for the pure tables this prints).
  std::map<std::pair<int, int>, Int> cells;
  int p_lo = 0, p_hi = 0, q_lo = 0, q_hi = 0;
  bool first = true;
  for (const auto& [key, m] : a.entries()) {
    cells[{key.p, key.q}] += m;
    if (first || key.p < p_lo) p_lo = key.p;
    if (first || key.p > p_hi) p_hi = key.p;
    if (first || key.q < q_lo) q_lo = key.q;
    if (first || key.q > q_hi) q_hi = key.q;
    first = false;
  }
  std::ostringstream out;
  out << "\\begin{tabular}{r|";
  for (int q = q_lo; q <= q_hi; ++q) out << "c";
  out << "}\n";
  for (int q = q_lo; q <= q_hi; ++q) out << " & $q=" << q << "$";
  out << " \\\\\n\\hline\n";
  for (int p = p_hi; p >= p_lo; --p) {
    out << "$p=" << p << "$";
    for (int q = q_lo; q <= q_hi; ++q) {
      const auto it = cells.find({p, q});
      out << " & " << (it == cells.end() || it->second == 0 ? Int(0) : it->second).str();
    }
    out << " \\\\\n";
  }
  out << "\\end{tabular}";
  return out.str();
}

}  // namespace

std::string render(const HodgeClass& a, RenderFormat format) {
  switch (format) {
    case RenderFormat::json: return serialize(a);
    case RenderFormat::diamond: return render_diamond(a);
    case RenderFormat::betti: return render_betti(a);
    case RenderFormat::epoly: return render_epoly(a);
    case RenderFormat::tex: return render_tex(a);
  }
  throw BadInput("bad render format");
}

}  // namespace hodgeledger
