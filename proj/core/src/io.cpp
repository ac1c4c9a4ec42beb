#include "abh/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace abh {

namespace {

using nlohmann::ordered_json;

// Canonical entry order (k, i, j): files render equation by equation and
// AlgebraFile equality is representation independent.
void sort_structure(std::vector<StructureEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const StructureEntry& a, const StructureEntry& b) {
    return std::array<int, 3>{a.k, a.i, a.j} < std::array<int, 3>{b.k, b.i, b.j};
  });
}

Rational parse_coefficient(const ordered_json& j, const std::string& where) {
  if (!j.is_string())
    throw parse_error(where + ": coefficient must be a string like \"1\" or \"-3/4\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw parse_error(where + ": " + e.what());
  }
}

Matrix parse_matrix(const ordered_json& j, int dim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw parse_error(where + ": expected a " + std::to_string(dim) + "-row matrix");
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw parse_error(where + ": row " + std::to_string(i + 1) + " must have " +
                        std::to_string(dim) + " entries");
    for (int k = 0; k < dim; ++k)
      m(i, k) = parse_coefficient(row[k], where + "[" + std::to_string(i + 1) + "][" +
                                              std::to_string(k + 1) + "]");
  }
  return m;
}

ordered_json render_matrix(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json parse_document(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

int parse_dim(const ordered_json& doc) {
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw parse_error("field 'dim': required integer");
  const int dim = doc["dim"].get<int>();
  if (dim < 1) throw parse_error("field 'dim': must be positive");
  return dim;
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& json_text) {
  const ordered_json doc = parse_document(json_text);
  if (!doc.is_object()) throw parse_error("top level: expected a JSON object");

  AlgebraFile file;
  file.name = doc.value("name", std::string{});
  file.dim = parse_dim(doc);

  if (!doc.contains("structure") || !doc["structure"].is_array())
    throw parse_error("field 'structure': required array");
  std::set<std::array<int, 3>> seen;
  int row_no = 0;
  for (const auto& row : doc["structure"]) {
    ++row_no;
    const std::string where = "structure row " + std::to_string(row_no);
    if (!row.is_array() || row.size() != 4)
      throw parse_error(where + ": expected [i, j, k, coefficient]");
    if (!row[0].is_number_integer() || !row[1].is_number_integer() || !row[2].is_number_integer())
      throw parse_error(where + ": indices must be integers");
    StructureEntry e{row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
                     parse_coefficient(row[3], where)};
    if (e.i < 1 || e.j < 1 || e.k < 1 || e.i > file.dim || e.j > file.dim || e.k > file.dim)
      throw parse_error(where + ": index out of range 1.." + std::to_string(file.dim));
    if (e.i >= e.j) throw parse_error(where + ": requires i < j");
    if (!seen.insert({e.i, e.j, e.k}).second)
      throw parse_error(where + ": duplicate (i, j, k) triple");
    file.structure.push_back(std::move(e));
  }
  sort_structure(file.structure);

  if (doc.contains("J")) {
    const auto& j = doc["J"];
    if (j.is_string() && j.get<std::string>() == "adapted") {
      if (file.dim % 2 != 0)
        throw parse_error("field 'J': adapted structure needs an even dimension");
      file.j_spec = AlgebraFile::JSpec::adapted;
    } else if (j.is_array()) {
      file.j_spec = AlgebraFile::JSpec::matrix;
      file.j_matrix = parse_matrix(j, file.dim, "field 'J'");
    } else {
      throw parse_error("field 'J': expected \"adapted\" or a matrix of coefficient strings");
    }
  }

  if (doc.contains("metric")) {
    if (file.j_spec == AlgebraFile::JSpec::none)
      throw parse_error("field 'metric': requires a 'J' field");
    const auto& g = doc["metric"];
    if (g.is_string() && g.get<std::string>() == "identity") {
      file.metric_spec = AlgebraFile::MetricSpec::identity;
    } else if (g.is_array()) {
      file.metric_spec = AlgebraFile::MetricSpec::matrix;
      file.metric = parse_matrix(g, file.dim, "field 'metric'");
      if (!file.metric.is_symmetric()) throw parse_error("field 'metric': must be symmetric");
    } else {
      throw parse_error("field 'metric': expected \"identity\" or a symmetric matrix");
    }
  } else if (file.j_spec != AlgebraFile::JSpec::none) {
    file.metric_spec = AlgebraFile::MetricSpec::identity;
  }
  return file;
}

std::string render_algebra_file(const AlgebraFile& file) {
  ordered_json doc;
  doc["name"] = file.name;
  doc["dim"] = file.dim;
  ordered_json structure = ordered_json::array();
  std::vector<StructureEntry> sorted = file.structure;
  sort_structure(sorted);
  for (const auto& e : sorted)
    structure.push_back(ordered_json::array({e.i, e.j, e.k, e.c.str()}));
  doc["structure"] = std::move(structure);
  switch (file.j_spec) {
    case AlgebraFile::JSpec::none: break;
    case AlgebraFile::JSpec::adapted: doc["J"] = "adapted"; break;
    case AlgebraFile::JSpec::matrix: doc["J"] = render_matrix(file.j_matrix); break;
  }
  switch (file.metric_spec) {
    case AlgebraFile::MetricSpec::none: break;
    case AlgebraFile::MetricSpec::identity: doc["metric"] = "identity"; break;
    case AlgebraFile::MetricSpec::matrix: doc["metric"] = render_matrix(file.metric); break;
  }
  return doc.dump(2) + "\n";
}

AlgebraFile algebra_file_from_algebra(const std::string& name, const LieAlgebra& alg) {
  AlgebraFile file;
  file.name = name;
  file.dim = alg.dim();
  for (const auto& [key, c] : alg.structure()) file.structure.push_back({key[0], key[1], key[2], c});
  sort_structure(file.structure);
  return file;
}

AlgebraFile algebra_file_from_structure(const std::string& name, const HermitianStructure& h) {
  AlgebraFile file = algebra_file_from_algebra(name, h.alg());
  file.j_spec = AlgebraFile::JSpec::adapted;
  file.metric_spec = AlgebraFile::MetricSpec::identity;
  return file;
}

AssocAlgebra parse_assoc_file(const std::string& json_text) {
  const ordered_json doc = parse_document(json_text);
  if (!doc.is_object()) throw parse_error("top level: expected a JSON object");
  const int dim = parse_dim(doc);
  if (!doc.contains("product") || !doc["product"].is_array())
    throw parse_error("field 'product': required array");
  std::vector<AssocAlgebra::ProductEntry> entries;
  int row_no = 0;
  for (const auto& row : doc["product"]) {
    ++row_no;
    const std::string where = "product row " + std::to_string(row_no);
    if (!row.is_array() || row.size() != 4)
      throw parse_error(where + ": expected [i, j, k, coefficient]");
    if (!row[0].is_number_integer() || !row[1].is_number_integer() || !row[2].is_number_integer())
      throw parse_error(where + ": indices must be integers");
    AssocAlgebra::ProductEntry e{row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
                                 parse_coefficient(row[3], where)};
    if (e.i < 1 || e.j < 1 || e.k < 1 || e.i > dim || e.j > dim || e.k > dim)
      throw parse_error(where + ": index out of range");
    entries.push_back(std::move(e));
  }
  try {
    return AssocAlgebra(dim, entries);
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

ComplexMatrixRep parse_rep_file(const std::string& json_text) {
  const ordered_json doc = parse_document(json_text);
  if (!doc.is_object()) throw parse_error("top level: expected a JSON object");
  if (!doc.contains("m") || !doc["m"].is_number_integer() || doc["m"].get<int>() < 1)
    throw parse_error("field 'm': required positive integer");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<int>() < 1)
    throw parse_error("field 'n': required positive integer");
  ComplexMatrixRep rep{doc["m"].get<int>(), doc["n"].get<int>(), {}};
  if (!doc.contains("matrices") || !doc["matrices"].is_array() ||
      static_cast<int>(doc["matrices"].size()) != rep.m)
    throw parse_error("field 'matrices': expected an array of m entries");
  int idx = 0;
  for (const auto& entry : doc["matrices"]) {
    ++idx;
    const std::string where = "matrices[" + std::to_string(idx) + "]";
    if (!entry.is_object() || !entry.contains("re") || !entry.contains("im"))
      throw parse_error(where + ": expected an object with 're' and 'im'");
    rep.matrices.emplace_back(parse_matrix(entry["re"], rep.n, where + ".re"),
                              parse_matrix(entry["im"], rep.n, where + ".im"));
  }
  return rep;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write file: " + path);
  out << content;
}

}  // namespace abh
