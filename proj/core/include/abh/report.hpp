#pragma once

#include <string>

#include "abh/io.hpp"

namespace abh {

/// Rendered verification report. Both renderings are generated from the same
/// document, field by field, so they carry identical data.
struct Report {
  std::string json_text;
  std::string text;
  bool checks_pass = false;      // every applicable hypothesis check holds
  bool jacobi_ok = false;
  bool non_jacobi_pass = false;  // applicable checks other than Jacobi (lax mode)
};

/// jacobi / unimodular / complex / abelian / balanced pipeline plus the
/// fingerprint block.
Report run_checks(const AlgebraFile& file, double tolerance = 1e-12);

/// Full pipeline: checks plus the Bismut block (torsion, connection forms,
/// curvature summary, scalar curvature) and the holonomy block.
Report run_full(const AlgebraFile& file, double tolerance = 1e-12);

}  // namespace abh
