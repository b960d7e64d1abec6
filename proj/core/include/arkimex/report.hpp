#pragma once

#include "arkimex/certify.hpp"
#include "arkimex/convergence.hpp"
#include "arkimex/energy.hpp"
#include "arkimex/stability.hpp"
#include "arkimex/stability_scan.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace arkimex {

/// Every CSV starts with "# schema_version=<n> kind=<kind>"; every JSON
/// document carries "schema_version" and "kind".
inline constexpr int kReportSchemaVersion = 1;

void write_csv(std::ostream& os, const std::vector<PropertyReport>& reports);
void write_csv(std::ostream& os, const std::vector<ConvergenceReport>& reports);
void write_csv(std::ostream& os, const std::vector<ScanReport>& reports);
void write_csv(std::ostream& os, const std::vector<EnergyReport>& reports);
void write_csv(std::ostream& os, const std::string& method, const std::vector<ScalingRow>& rows,
               bool with_header = true);
/// Explicit boundary points (tableau=explicit, theta, re, im) followed by
/// implicit |R(iy)| samples (tableau=implicit, y, modulus).
void write_csv(std::ostream& os, const std::string& method, const StabilityBoundary& boundary,
               const std::vector<ImagAxisSample>& implicit_samples, bool with_header = true);

std::string to_json(const std::vector<PropertyReport>& reports, const std::vector<Comparison>& comparisons = {});
std::string to_json(const std::vector<ConvergenceReport>& reports);
std::string to_json(const std::vector<ScanReport>& reports);
std::string to_json(const std::vector<EnergyReport>& reports);

}  // namespace arkimex
