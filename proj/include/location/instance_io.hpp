#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "location/oracle.hpp"
#include "location/types.hpp"

namespace location {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AuditRequest {
  double step = 0.05;
};

// One instance file: the problem plus run options.
struct InstanceFile {
  ProblemInstance instance;
  double alpha = 0.5;
  std::optional<AuditRequest> audit;
};

// Parses the JSON instance format:
//   { "points": [{"x1": .., "x2": .., "w": ..}, ...],
//     "constraint": {"a1": .., "b1": .., "c1": .., "d1": ..},   optional,
//                                                   each field optional
//     "alpha": 0.5,                                             optional
//     "audit": {"step": 0.05} }                                 optional
// Throws ParseError with field context on malformed input.
InstanceFile parse_instance(const std::string& text);

// Reads and parses a file; throws IoError when unreadable.
InstanceFile load_instance(const std::string& path);

// Inverse of parse_instance up to field order and number formatting.
std::string serialize_instance(const InstanceFile& file);

// Structured report for one solved instance, optionally with the audit
// verdict attached. Deterministic formatting, newline-terminated.
std::string report_to_json(const InstanceFile& file,
                           const SolutionReport& report,
                           const std::optional<VerificationVerdict>& verdict);

// Samples phi, phi1 and psi over the window and writes CSV rows
// (x1,x2,phi,phi1,psi), one header row, then the grid rows, then the two
// solution endpoints. Throws IoError when the path is unwritable.
void write_contours(const ProblemInstance& instance,
                    const SolutionReport& report, const GridSpec& window,
                    const std::string& path);

}  // namespace location
