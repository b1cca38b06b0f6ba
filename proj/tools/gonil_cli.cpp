// Command-line front end.  Exit codes: 0 success or CONSISTENT, 1 property
// refuted or verification failed, 2 malformed input.

#include "gonil/catalog.hpp"
#include "gonil/errors.hpp"
#include "gonil/go_engine.hpp"
#include "gonil/io.hpp"
#include "gonil/normal_forms.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace gonil;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kMalformed = 2;

const std::string kCatalogPrefix = "catalog:";

AlgebraFile load_input(const std::string& source) {
  if (source.rfind(kCatalogPrefix, 0) == 0) {
    NamedExample ex = build_example(source.substr(kCatalogPrefix.size()));
    return AlgebraFile{std::move(ex.algebra), std::move(ex.basis_names)};
  }
  return parse_algebra_file(read_text_file(source));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_text_file(out_path, text);
}

VectorQ parse_vector(const std::string& text, std::size_t dim) {
  VectorQ v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("--vector: empty entry");
    try {
      v.push_back(parse_rational(item.substr(b, e - b + 1)));
    } catch (const std::invalid_argument& err) {
      throw InputError(std::string("--vector: ") + err.what());
    }
  }
  if (v.size() != dim)
    throw InputError("--vector: expected " + std::to_string(dim) + " entries, got " +
                     std::to_string(v.size()));
  return v;
}

std::string dims_of(const std::vector<Subspace>& chain) {
  std::string s = "(";
  for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? "," : "") + std::to_string(chain[i].dim());
  return s + ")";
}

int cmd_check(const std::string& input) {
  const AlgebraFile f = load_input(input);
  std::cout << "VALID: yes\n";
  std::cout << "DIM: " << f.algebra.dim() << "\n";
  std::cout << "SIGNATURE: " << to_string(f.algebra.form().signature()) << "\n";
  std::cout << "STEP: " << nilpotency_step(f.algebra.algebra()) << "\n";
  return kOk;
}

int cmd_invariants(const std::string& input) {
  const AlgebraFile f = load_input(input);
  const MetricLieAlgebra& m = f.algebra;
  const LieAlgebra& L = m.algebra();
  const Subspace nprime = derived_algebra(L);
  const Subspace v = orth_complement(m, nprime);
  std::cout << "DIM: " << m.dim() << "\n";
  std::cout << "LOWER_CENTRAL_SERIES: " << dims_of(lower_central_series(L)) << "\n";
  std::cout << "DERIVED_SERIES: " << dims_of(derived_series(L)) << "\n";
  std::cout << "STEP: " << nilpotency_step(L) << "\n";
  std::cout << "CENTER_DIM: " << center(L).dim() << "\n";
  std::cout << "DERIVED_DIM: " << nprime.dim() << "\n";
  std::cout << "SIGNATURE: " << to_string(m.form().signature()) << "\n";
  std::cout << "DERIVED_SIGNATURE: " << to_string(restrict_form(m.form(), nprime).signature())
            << "\n";
  std::cout << "COMPLEMENT_SIGNATURE: " << to_string(restrict_form(m.form(), v).signature())
            << "\n";
  std::cout << "DEGENERACY: " << to_string(classify_degeneracy(m).tag) << "\n";
  return kOk;
}

int cmd_isotropy(const std::string& input) {
  const AlgebraFile f = load_input(input);
  const OperatorSpace h = isotropy_algebra(f.algebra);
  std::cout << "H_DIM: " << h.dim() << "\n";
  for (std::size_t s = 0; s < h.dim(); ++s)
    std::cout << "H_BASIS: " << s << " " << to_string(h.basis()[s]) << "\n";
  return kOk;
}

int cmd_go(const std::string& input, std::size_t samples, std::uint64_t seed, std::int64_t bound) {
  const AlgebraFile f = load_input(input);
  if (samples < 1) throw InputError("--samples must be at least 1");
  if (bound < 1) throw InputError("--bound must be at least 1");
  const OperatorSpace h = isotropy_algebra(f.algebra);
  const GOAuditReport rep = go_random_audit(f.algebra, h, samples, seed, bound);
  std::cout << "H_DIM: " << h.dim() << "\n" << to_text(rep);
  return rep.failures.empty() ? kOk : kRefuted;
}

int cmd_go_at(const std::string& input, const std::string& vector) {
  const AlgebraFile f = load_input(input);
  const VectorQ t = parse_vector(vector, f.algebra.dim());
  const OperatorSpace h = isotropy_algebra(f.algebra);
  const auto cert = go_certificate_at(f.algebra, h, t);
  if (!cert) {
    std::cout << "T: " << to_string(t) << "\nRESULT: INFEASIBLE\n";
    return kRefuted;
  }
  std::cout << "RESULT: FEASIBLE\n" << to_text(*cert);
  return kOk;
}

int cmd_linear_go(const std::string& input) {
  const AlgebraFile f = load_input(input);
  const OperatorSpace h = isotropy_algebra(f.algebra);
  const auto cert = linear_go_certificate(f.algebra, h);
  std::cout << "H_DIM: " << h.dim() << "\n";
  if (!cert) {
    std::cout << "LINEAR_GO: INFEASIBLE\n"
                 "NOTE: no linear map T -> A(T) exists; the GO property itself is not decided\n";
    return kRefuted;
  }
  std::cout << to_text(*cert);
  return kOk;
}

int cmd_necessary(const std::string& input) {
  const AlgebraFile f = load_input(input);
  const auto rep = necessary_condition_check(f.algebra);
  std::cout << to_text(rep);
  return rep.applicable && !rep.passed() ? kRefuted : kOk;
}

int cmd_reduce(const std::string& input, const std::string& out_path) {
  const AlgebraFile f = load_input(input);
  QuotientResult q;
  try {
    q = reduce(f.algebra);
  } catch (const ReductionError& err) {
    std::cout << to_text(err.witness());
    std::cerr << "ERROR: " << err.what() << "\n";
    return kRefuted;
  } catch (const InputError& err) {
    std::cerr << "ERROR: " << err.what() << "\n";
    return kRefuted;
  }
  std::cout << to_text(q.witness);
  std::cout << "QUOTIENT_DIM: " << q.m0.dim() << "\n";
  std::cout << "QUOTIENT_SIGNATURE: " << to_string(q.m0.form().signature()) << "\n";
  std::cout << "COMPLEMENT: " << to_string(q.complement) << "\n";
  std::cout << "PROJECTION: " << to_string(q.projection) << "\n";
  const std::string file = serialize_algebra_file(q.m0);
  if (out_path.empty())
    std::cout << file;
  else
    write_text_file(out_path, file);
  return kOk;
}

int cmd_extend(const std::string& input, const std::string& data_path, const std::string& out_path) {
  const AlgebraFile f = load_input(input);
  const ExtensionData data = parse_extension_data(read_text_file(data_path));
  const MetricLieAlgebra n = extend2(f.algebra, data);
  emit(serialize_algebra_file(n), out_path);
  return kOk;
}

int cmd_catalog(const std::string& name, bool list, const std::string& out_path) {
  if (list) {
    for (const auto& nm : catalog_names()) std::cout << nm << "\n";
    return kOk;
  }
  if (name.empty()) throw InputError("catalog: missing example name");
  const NamedExample ex = build_example(name);
  emit(serialize_algebra_file(ex.algebra, ex.basis_names), out_path);
  return kOk;
}

int cmd_verify_paper(const std::string& perturb) {
  PaperPerturbation p = PaperPerturbation::None;
  if (perturb == "f4-norm-2")
    p = PaperPerturbation::F4Norm2;
  else if (perturb == "drop-f1-f4")
    p = PaperPerturbation::DropF1F4;
  else if (perturb != "none")
    throw InputError("--perturb must be none, f4-norm-2 or drop-f1-f4");
  const VerificationReport rep = verify_paper_example(p);
  std::cout << to_text(rep);
  return rep.passed() ? kOk : kRefuted;
}

int cmd_normal_forms(int q, std::size_t m, int family, const std::string& u1,
                     const std::string& v1) {
  std::vector<MatrixQ> gens;
  MatrixQ gram;
  if (family == 0) {
    const IwasawaFamily fam = iwasawa_nilpotent_basis(q, m);
    gens = fam.generators;
    gram = fam.gram;
  } else {
    if (q != 2) throw InputError("--family requires --q 2");
    AbelianParams params;
    try {
      params.u1 = parse_rational(u1);
      params.v1 = parse_rational(v1);
    } catch (const std::invalid_argument& err) {
      throw InputError(std::string("--u1/--v1: ") + err.what());
    }
    gens = maximal_abelian_family(family, m, params);
    gram = iwasawa_reference_gram(2, m);
  }
  bool skew = true;
  for (const auto& x : gens)
    if (!(gram * x + (gram * x).transpose()).is_zero()) skew = false;
  std::cout << "Q: " << q << "\nM: " << m << "\n";
  if (family) std::cout << "FAMILY: " << family << "\n";
  std::cout << "DIM: " << gens.size() << "\n";
  std::cout << "GRAM: " << to_string(gram) << "\n";
  std::cout << "SKEW: " << (skew ? "PASS" : "FAIL") << "\n";
  std::cout << "ABELIAN: " << (is_abelian_family(gens) ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < gens.size(); ++i)
    std::cout << "GENERATOR: " << i << " " << to_string(gens[i]) << "\n";
  return skew ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on metric nilpotent Lie algebras"};
  app.require_subcommand(1);

  std::string input, out_path, vector_text, data_path, name, perturb = "none", u1 = "0", v1 = "1";
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  std::int64_t bound = 10;
  bool list = false;
  int q = 1, family = 0;
  std::size_t m = 0;
  const std::string input_help = "algebra file, or catalog:<name>";

  auto* check = app.add_subcommand("check", "validate an algebra file");
  check->add_option("input", input, input_help)->required();
  auto* inv = app.add_subcommand("invariants", "series, step, center and signatures");
  inv->add_option("input", input, input_help)->required();
  auto* iso = app.add_subcommand("isotropy", "skew-symmetric derivations");
  iso->add_option("input", input, input_help)->required();
  auto* go = app.add_subcommand("go", "randomized GO audit");
  go->add_option("input", input, input_help)->required();
  go->add_option("--samples", samples, "number of random vectors")->capture_default_str();
  go->add_option("--seed", seed, "generator seed")->required();
  go->add_option("--bound", bound, "entries are drawn from [-bound, bound]")->capture_default_str();
  auto* go_at = app.add_subcommand("go-at", "GO certificate at one vector");
  go_at->add_option("input", input, input_help)->required();
  go_at->add_option("--vector", vector_text, "comma-separated rational coordinates")->required();
  auto* lin = app.add_subcommand("linear-go", "linear GO certificate");
  lin->add_option("input", input, input_help)->required();
  auto* nec = app.add_subcommand("necessary", "necessary identities on the derived algebra");
  nec->add_option("input", input, input_help)->required();
  auto* red = app.add_subcommand("reduce", "quotient by the reduction witness");
  red->add_option("input", input, input_help)->required();
  red->add_option("--out", out_path, "write the quotient algebra file here");
  auto* ext = app.add_subcommand("extend", "2-dimensional double extension");
  ext->add_option("input", input, input_help)->required();
  ext->add_option("--data", data_path, "extension data file")->required();
  ext->add_option("--out", out_path, "output file (default stdout)");
  auto* cat = app.add_subcommand("catalog", "write a built-in example");
  cat->add_option("name", name, "example name");
  cat->add_flag("--list", list, "list example names");
  cat->add_option("--out", out_path, "output file (default stdout)");
  auto* ver = app.add_subcommand("verify-paper", "itemized checks of the 12-dimensional example");
  ver->add_option("--perturb", perturb, "none, f4-norm-2 or drop-f1-f4")->capture_default_str();
  auto* nf = app.add_subcommand("normal-forms", "Iwasawa nilpotent families");
  nf->add_option("--q", q, "1 or 2")->required();
  nf->add_option("--m", m, "matrix size")->required();
  nf->add_option("--family", family, "maximal abelian family 1, 2 or 3 (q = 2)");
  nf->add_option("--u1", u1, "family 2 parameter")->capture_default_str();
  nf->add_option("--v1", v1, "family 2 parameter, nonzero")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    if (*check) return cmd_check(input);
    if (*inv) return cmd_invariants(input);
    if (*iso) return cmd_isotropy(input);
    if (*go) return cmd_go(input, samples, seed, bound);
    if (*go_at) return cmd_go_at(input, vector_text);
    if (*lin) return cmd_linear_go(input);
    if (*nec) return cmd_necessary(input);
    if (*red) return cmd_reduce(input, out_path);
    if (*ext) return cmd_extend(input, data_path, out_path);
    if (*cat) return cmd_catalog(name, list, out_path);
    if (*ver) return cmd_verify_paper(perturb);
    if (*nf) return cmd_normal_forms(q, m, family, u1, v1);
  } catch (const InputError& err) {
    std::cerr << "ERROR: " << err.what() << "\n";
    return kMalformed;
  } catch (const VerificationError& err) {
    std::cerr << "ERROR: " << err.what() << "\n";
    return kRefuted;
  } catch (const std::exception& err) {
    std::cerr << "ERROR: " << err.what() << "\n";
    return kRefuted;
  }
  return kMalformed;
}
