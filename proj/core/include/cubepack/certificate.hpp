#pragma once

#include <iosfwd>
#include <string>

#include "cubepack/coloring.hpp"

namespace cubepack {

/// Certificate format: a header line `n=<n> colors=<k>`, then 2^n lines
/// `vertex-bitstring color` with vertices in ascending encoding order.
void write_certificate(const PackingColoring& pc, std::ostream& out);
std::string format_certificate(const PackingColoring& pc);

/// Parses a certificate; every vertex must appear exactly once. The reader
/// accepts any line order. Requires n <= 20.
PackingColoring read_certificate(std::istream& in);

std::string format_report(const VerificationReport& report);
std::string format_report_json(const VerificationReport& report);

}  // namespace cubepack
