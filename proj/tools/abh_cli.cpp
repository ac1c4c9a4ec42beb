// Command-line front end: verification pipelines over algebra files, the
// example generators, and the built-in catalog.
//
// Exit codes: 0 success, 1 mathematical check failure, 2 usage/parse/IO error.

#include <algorithm>
#include <array>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abh/catalog.hpp"
#include "abh/io.hpp"
#include "abh/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
  bool json = false;
  bool lax = false;
  double tolerance = 1e-12;
  std::string out;
};

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    abh::write_file(out_path, content);
}

std::map<std::string, abh::Rational> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, abh::Rational> params;
  for (const std::string& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--param", "expected key=value, got '" + kv + "'");
    try {
      params[kv.substr(0, eq)] = abh::Rational::parse(kv.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("--param", e.what());
    }
  }
  return params;
}

std::vector<abh::Rational> parse_comma_list(const std::string& spec, const char* flag) {
  std::vector<abh::Rational> values;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ',')) {
    try {
      values.push_back(abh::Rational::parse(token));
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError(flag, e.what());
    }
  }
  return values;
}

int run_report(const abh::AlgebraFile& file, const CommonFlags& flags, bool full) {
  const abh::Report report =
      full ? abh::run_full(file, flags.tolerance) : abh::run_checks(file, flags.tolerance);
  emit(flags.json ? report.json_text : report.text, flags.out);
  const bool pass = flags.lax ? report.non_jacobi_pass : report.checks_pass;
  return pass ? kExitOk : kExitCheckFailed;
}

abh::AlgebraFile generate(const std::string& generator, const std::string& gen_name,
                          const std::map<std::string, abh::Rational>& params, int opt_n,
                          int opt_k, int opt_r, const std::string& named_assoc,
                          const std::string& algebra_path, const std::string& rep_path,
                          const std::string& diag_spec, const std::string& coeffs_spec,
                          bool lax) {
  auto default_name = [&gen_name](const char* fallback) {
    return gen_name.empty() ? std::string(fallback) : gen_name;
  };

  if (generator == "heisenberg") {
    auto get = [&](const char* key, int fallback) {
      const auto it = params.find(key);
      return it != params.end() ? static_cast<int>(it->second.numerator().get_si()) : fallback;
    };
    return abh::algebra_file_from_structure(
        default_name("heisenberg"),
        abh::heisenberg(get("n", opt_n), get("k", opt_k), get("r", opt_r)));
  }

  if (generator == "aff") {
    std::optional<abh::AssocAlgebra> a;
    if (!named_assoc.empty()) {
      if (named_assoc == "A1")
        a = abh::assoc_A1();
      else if (named_assoc == "B1")
        a = abh::assoc_B1();
      else if (named_assoc == "B2") {
        const auto it = params.find("lambda");
        a = abh::assoc_B2(it == params.end() ? abh::Rational(1) : it->second);
      } else if (named_assoc == "B3")
        a = abh::assoc_B3();
      else
        throw CLI::ValidationError("--named", "unknown algebra '" + named_assoc + "'");
    } else if (!algebra_path.empty()) {
      a = abh::parse_assoc_file(abh::read_file(algebra_path));
    } else {
      throw CLI::ValidationError("gen aff", "needs --named or --algebra");
    }
    const abh::AffResult result = abh::aff(*a);
    if (!result.balanced)
      std::cerr << "note: sum of squares is nonzero, the structure is not balanced\n";
    return abh::algebra_file_from_structure(default_name("aff"), result.structure);
  }

  if (generator == "semidirect") {
    abh::ComplexMatrixRep rep{0, 0, {}};
    if (!rep_path.empty()) {
      rep = abh::parse_rep_file(abh::read_file(rep_path));
    } else if (!diag_spec.empty()) {
      const auto diag = parse_comma_list(diag_spec, "--diag");
      const int n = static_cast<int>(diag.size());
      abh::Matrix re(n, n), im(n, n);
      for (int i = 0; i < n; ++i) re(i, i) = diag[i];
      rep = abh::ComplexMatrixRep{1, n, {{re, im}}};
    } else {
      throw CLI::ValidationError("gen semidirect", "needs --rep or --diag");
    }
    return abh::algebra_file_from_structure(default_name("semidirect"),
                                            abh::semidirect_realification(rep));
  }

  if (generator == "family8") {
    if (coeffs_spec.empty()) throw CLI::ValidationError("gen family8", "needs --coeffs");
    const auto values = parse_comma_list(coeffs_spec, "--coeffs");
    if (values.size() != 22) throw CLI::ValidationError("--coeffs", "expected 22 entries");
    std::array<abh::Rational, 22> c{};
    std::copy(values.begin(), values.end(), c.begin());
    const abh::Family8Result result = abh::family8(c);
    std::cerr << "family8 classification: " << abh::family8_class_name(result.classification)
              << "\n";
    if (!result.jacobi_ok && !lax)
      throw std::invalid_argument("family8: Jacobi identity fails on e^" +
                                  std::to_string(result.defects.front().first) +
                                  " (use --lax to write the file anyway)");
    abh::AlgebraFile file =
        abh::algebra_file_from_algebra(default_name("family8"), result.alg);
    file.j_spec = abh::AlgebraFile::JSpec::adapted;
    file.metric_spec = abh::AlgebraFile::MetricSpec::identity;
    return file;
  }

  throw CLI::ValidationError("generator", "unknown generator '" + generator +
                                              "' (expected heisenberg | aff | semidirect |"
                                              " family8)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Hermitian geometry on Lie algebras"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::vector<std::string> raw_params;

  auto* check = app.add_subcommand("check", "Run the hypothesis checks on an algebra file");
  std::string check_file;
  check->add_option("file", check_file, "algebra JSON file")->required();
  check->add_flag("--json", flags.json, "machine-readable output");
  check->add_flag("--lax", flags.lax, "report Jacobi defects without failing the run");
  check->add_option("--tol", flags.tolerance, "tolerance for approximate frame adaptation");
  check->add_option("--out", flags.out, "write the report to a file");

  auto* holonomy =
      app.add_subcommand("holonomy", "Full pipeline: checks, Bismut data, holonomy algebra");
  std::string holonomy_file;
  holonomy->add_option("file", holonomy_file, "algebra JSON file")->required();
  holonomy->add_flag("--json", flags.json, "machine-readable output");
  holonomy->add_flag("--lax", flags.lax, "report Jacobi defects without failing the run");
  holonomy->add_option("--tol", flags.tolerance, "tolerance for approximate frame adaptation");
  holonomy->add_option("--out", flags.out, "write the report to a file");

  auto* gen = app.add_subcommand("gen", "Generate an algebra file from a constructor");
  std::string generator, gen_name, algebra_path, rep_path, diag_spec, coeffs_spec, named_assoc;
  int opt_n = 0, opt_k = 0, opt_r = 0;
  gen->add_option("generator", generator, "heisenberg | aff | semidirect | family8")->required();
  gen->add_option("--n", opt_n, "heisenberg n");
  gen->add_option("--k", opt_k, "heisenberg k");
  gen->add_option("--r", opt_r, "heisenberg r");
  gen->add_option("--named", named_assoc, "built-in associative algebra: A1 | B1 | B2 | B3");
  gen->add_option("--algebra", algebra_path, "associative algebra JSON file (aff)");
  gen->add_option("--rep", rep_path, "representation JSON file (semidirect)");
  gen->add_option("--diag", diag_spec,
                  "comma-separated real diagonal for a single-matrix representation");
  gen->add_option("--coeffs", coeffs_spec, "22 comma-separated coefficients (family8)");
  gen->add_option("--param", raw_params, "generator parameter key=value (repeatable)");
  gen->add_option("--name", gen_name, "name recorded in the generated file");
  gen->add_flag("--lax", flags.lax, "allow writing families that fail the Jacobi identity");
  gen->add_option("--out", flags.out, "output file (default: stdout)");

  auto* catalog = app.add_subcommand("catalog", "List catalog entries or run one");
  std::string catalog_name;
  catalog->add_option("name", catalog_name, "entry name (omit to list)");
  catalog->add_option("--param", raw_params, "entry parameter key=value (repeatable)");
  catalog->add_flag("--json", flags.json, "machine-readable output");
  catalog->add_option("--out", flags.out, "write the output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed())
      return run_report(abh::parse_algebra_file(abh::read_file(check_file)), flags, false);

    if (holonomy->parsed())
      return run_report(abh::parse_algebra_file(abh::read_file(holonomy_file)), flags, true);

    if (gen->parsed()) {
      const abh::AlgebraFile file =
          generate(generator, gen_name, parse_params(raw_params), opt_n, opt_k, opt_r,
                   named_assoc, algebra_path, rep_path, diag_spec, coeffs_spec, flags.lax);
      emit(abh::render_algebra_file(file), flags.out);
      return kExitOk;
    }

    if (catalog->parsed()) {
      if (catalog_name.empty()) {
        std::ostringstream os;
        for (const auto& entry : abh::catalog_entries()) {
          os << entry.name;
          if (!entry.params.empty()) {
            os << " [";
            for (std::size_t i = 0; i < entry.params.size(); ++i)
              os << (i ? ", " : "") << entry.params[i];
            os << "]";
          }
          os << " - " << entry.description;
          if (!entry.note.empty()) os << " (" << entry.note << ")";
          os << "\n";
        }
        emit(os.str(), flags.out);
        return kExitOk;
      }
      const auto& entries = abh::catalog_entries();
      const bool known = std::any_of(entries.begin(), entries.end(),
                                     [&](const auto& e) { return e.name == catalog_name; });
      if (!known) {
        std::cerr << "error: unknown catalog entry '" << catalog_name << "'\n";
        return kExitUsage;
      }
      const abh::HermitianStructure h =
          abh::named_structure(catalog_name, parse_params(raw_params));
      return run_report(abh::algebra_file_from_structure(catalog_name, h), flags, true);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const abh::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // mathematical obstructions and domain violations from the library
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
