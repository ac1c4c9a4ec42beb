#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abh/catalog.hpp"
#include "abh/lie_algebra.hpp"
#include "abh/linalg.hpp"

namespace abh {

/// Malformed input file; carries the offending field or location in what().
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// On-disk description of a Lie algebra with an optional Hermitian package.
/// Coefficients travel as exact strings "p" or "p/q" (q > 0), structure rows
/// as [i, j, k, coefficient] with 1 <= i < j <= dim storing the coefficient
/// of e^{ij} in de^k.
struct AlgebraFile {
  enum class JSpec { none, adapted, matrix };
  enum class MetricSpec { none, identity, matrix };

  std::string name;
  int dim = 0;
  std::vector<StructureEntry> structure;
  JSpec j_spec = JSpec::none;
  Matrix j_matrix;  // only when j_spec == matrix
  MetricSpec metric_spec = MetricSpec::none;
  Matrix metric;    // only when metric_spec == matrix

  friend bool operator==(const AlgebraFile& a, const AlgebraFile& b) = default;
};

AlgebraFile parse_algebra_file(const std::string& json_text);
std::string render_algebra_file(const AlgebraFile& file);

AlgebraFile algebra_file_from_structure(const std::string& name, const HermitianStructure& h);
AlgebraFile algebra_file_from_algebra(const std::string& name, const LieAlgebra& alg);

/// {"dim": d, "product": [[i, j, k, "c"], ...]} with symmetric completion.
AssocAlgebra parse_assoc_file(const std::string& json_text);

/// {"m": m, "n": n, "matrices": [{"re": [["0",...],...], "im": ...}, ...]}.
ComplexMatrixRep parse_rep_file(const std::string& json_text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace abh
