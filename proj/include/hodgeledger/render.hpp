#pragma once

#include <string>

#include "hodgeledger/hodge_class.hpp"

namespace hodgeledger {

// Output formats for a class:
//   json    — the canonical hodgeclass/v1 document
//   diamond — one line per degree listing (p,q) multiplicities
//   betti   — space-separated totals per degree, lowest to highest
//   epoly   — the signed (p,q) table, one "(p,q): v" line each
//   tex     — a LaTeX tabular of the (p,q) multiplicities
enum class RenderFormat { json, diamond, betti, epoly, tex };

// Parses "json" | "diamond" | "betti" | "epoly" | "tex"; BadInput otherwise.
RenderFormat render_format_from_name(const std::string& name);

// Deterministic, newline-free at the end: equal classes render to
// byte-identical text.
std::string render(const HodgeClass& a, RenderFormat format);

}  // namespace hodgeledger
