#include "abh/report.hpp"

#include <sstream>

#include <json.hpp>

#include "abh/connection.hpp"
#include "abh/gamma.hpp"
#include "abh/holonomy.hpp"

namespace abh {

namespace {

using nlohmann::ordered_json;

ordered_json conventions() {
  return ordered_json{
      {"structure_constants", "de^k = sum_{i<j} c_ij^k e^{ij}; [e_i,e_j] = -sum_k c_ij^k e_k"},
      {"J_matrix", "column convention: J e_j = sum_i J_ij e_i"},
      {"J_on_forms", "(J eta)(X_1..X_k) = (-1)^k eta(J X_1..J X_k)"},
      {"scalar_curvature", "Levi-Civita, normalised to -3 lambda^2 on aff(B2)_lambda"},
  };
}

struct PipelineState {
  explicit PipelineState(LieAlgebra a) : alg(std::move(a)) {}

  LieAlgebra alg;                 // lax construction of the file content
  std::optional<HermitianStructure> h;  // present when an exact adapted frame exists
  std::string frame;              // "adapted" | "exact-adaptation" | "approximate" | "none"
  std::string frame_note;
  bool jacobi_ok = false;
  bool unimodular = false;
  std::optional<bool> complex_ok;
  std::optional<bool> abelian;
  std::optional<std::string> j_problem;
};

PipelineState run_pipeline(const AlgebraFile& file, double tolerance) {
  PipelineState st(LieAlgebra(file.dim, file.structure, LieAlgebra::Mode::lax));
  st.jacobi_ok = st.alg.jacobi_ok();
  st.unimodular = st.alg.is_unimodular();
  st.frame = "none";

  if (file.j_spec == AlgebraFile::JSpec::none) return st;

  std::optional<ComplexStructure> J;
  try {
    J = (file.j_spec == AlgebraFile::JSpec::adapted)
            ? ComplexStructure::adapted(file.dim)
            : ComplexStructure::from_matrix(file.j_matrix);
  } catch (const std::invalid_argument& e) {
    st.j_problem = e.what();
    st.complex_ok = false;
    st.abelian = false;
    return st;
  }
  st.complex_ok = is_complex_structure(st.alg, *J);
  st.abelian = is_abelian(st.alg, *J);

  const bool metric_is_identity = file.metric_spec != AlgebraFile::MetricSpec::matrix ||
                                  file.metric == Matrix::identity(file.dim);
  if (metric_is_identity && J->is_adapted()) {
    st.h = HermitianStructure::adapted(st.alg);
    st.frame = "adapted";
    return st;
  }
  const Matrix g = file.metric_spec == AlgebraFile::MetricSpec::matrix
                       ? file.metric
                       : Matrix::identity(file.dim);
  try {
    const AdaptedFrame frame = adapt_basis(st.alg, *J, g, tolerance);
    if (frame.exact) {
      st.h = to_adapted_structure(st.alg, frame);
      st.frame = "exact-adaptation";
      st.frame_note = "structure constants rewritten in the adapted orthonormal frame";
    } else {
      st.frame = "approximate";
      std::ostringstream os;
      os << "no exact rational adapted frame; Gram-Schmidt residual " << frame.residual
         << "; exact balanced/Bismut/holonomy computations refuse this frame";
      st.frame_note = os.str();
    }
  } catch (const std::invalid_argument& e) {
    st.frame = "invalid";
    st.frame_note = e.what();
  }
  return st;
}

ordered_json fingerprint_block(const LieAlgebra& alg) {
  const Fingerprint fp = fingerprint(alg);
  ordered_json j{{"dim", fp.dim},
                 {"b1", fp.betti_1},
                 {"center_dim", fp.center_dim},
                 {"derived_dim", fp.derived_dim}};
  j["nilpotency_step"] = fp.nilpotency_step ? ordered_json(*fp.nilpotency_step) : ordered_json();
  j["solvability_step"] =
      fp.solvability_step ? ordered_json(*fp.solvability_step) : ordered_json();
  j["d_ranks"] = fp.d_ranks;
  return j;
}

ordered_json checks_block(const PipelineState& st, bool& all_pass, bool& non_jacobi_pass) {
  ordered_json checks;
  non_jacobi_pass = true;

  {
    ordered_json jacobi{{"ok", st.jacobi_ok}};
    ordered_json defects = ordered_json::array();
    for (const auto& [k, form] : st.alg.jacobi_defect())
      defects.push_back(ordered_json{{"k", k}, {"defect", form.str()}});
    jacobi["defects"] = std::move(defects);
    checks["jacobi"] = std::move(jacobi);
  }
  checks["unimodular"] = ordered_json{{"ok", st.unimodular}};
  non_jacobi_pass = non_jacobi_pass && st.unimodular;

  if (!st.complex_ok.has_value()) {
    checks["complex"] = ordered_json{{"applicable", false}, {"reason", "no J attached"}};
    checks["abelian"] = ordered_json{{"applicable", false}, {"reason", "no J attached"}};
  } else {
    ordered_json complex_check{{"applicable", true}, {"ok", *st.complex_ok}};
    if (st.j_problem) complex_check["reason"] = *st.j_problem;
    checks["complex"] = std::move(complex_check);
    checks["abelian"] = ordered_json{{"applicable", true}, {"ok", *st.abelian}};
    non_jacobi_pass = non_jacobi_pass && *st.complex_ok && *st.abelian;
  }

  if (!st.h.has_value() || !st.unimodular) {
    std::string reason = !st.complex_ok.has_value() ? "no J attached"
                         : !st.unimodular
                             ? "balanced criteria are only equivalent on unimodular algebras"
                             : "no exact adapted frame";
    checks["balanced"] = ordered_json{{"applicable", false}, {"reason", reason}};
  } else {
    const BalancedCertificate cert = balanced_certificate(*st.h);
    ordered_json balanced{{"applicable", true}, {"ok", cert.balanced()}};
    balanced["criteria"] = ordered_json{{"bracket_sum_zero", cert.bracket_sum_zero},
                                        {"structure_sums_zero", cert.structure_sums_zero},
                                        {"top_wedge_zero", cert.top_wedge_zero},
                                        {"codifferential_zero", cert.codifferential_zero}};
    if (cert.structure_witness_k) {
      balanced["witness_k"] = *cert.structure_witness_k;
      balanced["witness_sum"] = cert.structure_witness_sum.str();
    }
    balanced["codifferential"] = cert.codifferential.str();
    checks["balanced"] = std::move(balanced);
    non_jacobi_pass = non_jacobi_pass && cert.balanced();
  }
  all_pass = non_jacobi_pass && st.jacobi_ok;
  return checks;
}

ordered_json bismut_block(const HermitianStructure& h) {
  ordered_json block;
  block["torsion"] = bismut_torsion(h).str();
  const ConnectionForms sigma = bismut_forms(h);
  ordered_json forms = ordered_json::array();
  for (int i = 1; i <= h.dim(); ++i)
    for (int j = i + 1; j <= h.dim(); ++j)
      if (!sigma.sigma(i, j).is_zero())
        forms.push_back(
            ordered_json{{"i", i}, {"j", j}, {"sigma", sigma.sigma(i, j).str()}});
  block["connection_forms"] = std::move(forms);

  const CurvatureForms omega = curvature_forms(sigma, h.alg());
  int nonzero = 0;
  KForm pair_trace(h.dim(), 2);
  for (int i = 1; i <= h.dim(); ++i)
    for (int j = i + 1; j <= h.dim(); ++j)
      if (!omega.omega(i, j).is_zero()) ++nonzero;
  for (int k = 1; k <= h.n(); ++k)
    pair_trace = pair_trace + omega.omega(2 * k - 1, 2 * k);
  block["curvature"] = ordered_json{{"nonzero_entries", nonzero},
                                    {"pair_trace_sum", pair_trace.str()},
                                    {"pair_trace_sum_zero", pair_trace.is_zero()}};
  block["scalar_curvature"] = riemannian_scalar_curvature(h).str();
  return block;
}

ordered_json holonomy_block(const HermitianStructure& h) {
  const HolonomyReport rep = holonomy_algebra(h);
  ordered_json block{{"dim", rep.dim}, {"iterations", rep.iterations}};
  ordered_json basis = ordered_json::array();
  for (const KForm& b : rep.basis) basis.push_back(b.str());
  block["basis"] = std::move(basis);
  block["in_gamma"] = rep.spans_in_gamma;
  block["minimal_q"] = rep.minimal_q ? ordered_json(*rep.minimal_q) : ordered_json();
  block["pair_order"] = rep.pair_order;
  block["center_dim"] = rep.center_dim;
  ordered_json theorem{{"applicable", rep.theorem_applicable}};
  theorem["bound"] = rep.theorem_bound ? ordered_json(*rep.theorem_bound) : ordered_json();
  theorem["holds"] = rep.theorem_holds ? ordered_json(*rep.theorem_holds) : ordered_json();
  block["theorem"] = std::move(theorem);
  return block;
}

void render_text_node(const ordered_json& node, const std::string& key, int depth,
                      std::ostream& os) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  if (node.is_object()) {
    os << indent << key << ":\n";
    for (const auto& [k, v] : node.items()) render_text_node(v, k, depth + 1, os);
  } else if (node.is_array()) {
    if (node.empty()) {
      os << indent << key << ": []\n";
      return;
    }
    os << indent << key << ":\n";
    int idx = 0;
    for (const auto& v : node) render_text_node(v, "- " + std::to_string(++idx), depth + 1, os);
  } else if (node.is_null()) {
    os << indent << key << ": n/a\n";
  } else if (node.is_string()) {
    os << indent << key << ": " << node.get<std::string>() << "\n";
  } else {
    os << indent << key << ": " << node.dump() << "\n";
  }
}

Report build(const AlgebraFile& file, bool full, double tolerance) {
  const PipelineState st = run_pipeline(file, tolerance);
  ordered_json doc;
  doc["conventions"] = conventions();
  doc["name"] = file.name;
  doc["dim"] = file.dim;
  bool all_pass = false, non_jacobi_pass = false;
  doc["checks"] = checks_block(st, all_pass, non_jacobi_pass);
  doc["frame"] = ordered_json{{"kind", st.frame}, {"note", st.frame_note}};
  doc["fingerprint"] = fingerprint_block(st.alg);
  if (full) {
    if (st.h.has_value() && st.jacobi_ok) {
      doc["bismut"] = bismut_block(*st.h);
      doc["holonomy"] = holonomy_block(*st.h);
    } else {
      const std::string reason =
          !st.jacobi_ok ? "Jacobi identity fails" : "no exact adapted Hermitian frame";
      doc["bismut"] = ordered_json{{"applicable", false}, {"reason", reason}};
      doc["holonomy"] = ordered_json{{"applicable", false}, {"reason", reason}};
    }
  }
  doc["checks_pass"] = all_pass;

  Report rep;
  rep.checks_pass = all_pass;
  rep.jacobi_ok = st.jacobi_ok;
  rep.non_jacobi_pass = non_jacobi_pass;
  rep.json_text = doc.dump(2) + "\n";
  std::ostringstream os;
  for (const auto& [k, v] : doc.items()) render_text_node(v, k, 0, os);
  rep.text = os.str();
  return rep;
}

}  // namespace

Report run_checks(const AlgebraFile& file, double tolerance) {
  return build(file, false, tolerance);
}

Report run_full(const AlgebraFile& file, double tolerance) {
  return build(file, true, tolerance);
}

}  // namespace abh
