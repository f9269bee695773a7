#include "cubepack/certificate.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cubepack/errors.hpp"

namespace cubepack {

void write_certificate(const PackingColoring& pc, std::ostream& out) {
  std::set<std::uint32_t> distinct(pc.assignment.begin(), pc.assignment.end());
  out << "n=" << pc.n << " colors=" << distinct.size() << "\n";
  const std::uint64_t total = std::uint64_t{1} << pc.n;
  for (std::uint64_t v = 0; v < total; ++v) {
    out << BinaryWord::from_index(pc.n, v).to_string() << ' '
        << pc.assignment[static_cast<std::size_t>(v)] << "\n";
  }
}

std::string format_certificate(const PackingColoring& pc) {
  std::ostringstream os;
  write_certificate(pc, os);
  return os.str();
}

PackingColoring read_certificate(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("line 1: empty certificate");
  int n = -1;
  long long declared_colors = -1;
  {
    std::istringstream hs(line);
    std::string field;
    while (hs >> field) {
      if (field.rfind("n=", 0) == 0) {
        n = std::stoi(field.substr(2));
      } else if (field.rfind("colors=", 0) == 0) {
        declared_colors = std::stoll(field.substr(7));
      } else {
        throw ParseError("line 1: unexpected header field '" + field + "'");
      }
    }
  }
  if (n < 1) throw ParseError("line 1: missing or bad n");
  if (n > 20) throw BudgetError("certificate dimension too large: n > 20");
  if (declared_colors < 1) throw ParseError("line 1: missing or bad colors");

  PackingColoring pc;
  pc.n = n;
  const std::uint64_t total = std::uint64_t{1} << n;
  pc.assignment.assign(static_cast<std::size_t>(total), 0);
  std::uint64_t seen = 0;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string bits;
    long long color = 0;
    if (!(ls >> bits >> color)) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 'bits color'");
    }
    BinaryWord w = [&] {
      try {
        return BinaryWord::parse(bits);
      } catch (const std::exception& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
      }
    }();
    if (w.length() != n) {
      throw ParseError("line " + std::to_string(lineno) + ": vertex length " +
                       std::to_string(w.length()) + " != n=" + std::to_string(n));
    }
    if (color < 1 || color > static_cast<long long>(total)) {
      throw ParseError("line " + std::to_string(lineno) + ": color out of range");
    }
    std::uint64_t v = w.index();
    if (pc.assignment[static_cast<std::size_t>(v)] != 0) {
      throw ParseError("line " + std::to_string(lineno) + ": vertex " + bits +
                       " colored twice");
    }
    pc.assignment[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(color);
    ++seen;
  }
  if (seen != total) {
    throw ParseError("certificate covers " + std::to_string(seen) + " of " +
                     std::to_string(total) + " vertices");
  }
  return pc;
}

std::string format_report(const VerificationReport& report) {
  std::ostringstream os;
  os << "valid: " << (report.valid ? "yes" : "no") << "\n";
  os << "total: " << (report.total ? "yes" : "no") << "\n";
  os << "colors_used: " << report.colors_used << "\n";
  os << "violations: " << report.violation_count << "\n";
  for (const auto& v : report.violations) {
    os << "  color " << v.color << ": " << v.u << " " << v.v << " distance "
       << v.distance << "\n";
  }
  if (report.violation_count > report.violations.size()) {
    os << "  ... " << (report.violation_count - report.violations.size())
       << " more\n";
  }
  os << "class_sizes:";
  for (const auto& [c, s] : report.class_sizes) os << " " << c << ":" << s;
  os << "\n";
  return os.str();
}

std::string format_report_json(const VerificationReport& report) {
  nlohmann::json j;
  j["valid"] = report.valid;
  j["total"] = report.total;
  j["colors_used"] = report.colors_used;
  j["violation_count"] = report.violation_count;
  nlohmann::json viols = nlohmann::json::array();
  for (const auto& v : report.violations) {
    viols.push_back({{"color", v.color},
                     {"u", v.u},
                     {"v", v.v},
                     {"distance", v.distance}});
  }
  j["violations"] = viols;
  nlohmann::json sizes = nlohmann::json::object();
  for (const auto& [c, s] : report.class_sizes) sizes[std::to_string(c)] = s;
  j["class_sizes"] = sizes;
  return j.dump(2);
}

}  // namespace cubepack
