#pragma once

#include "gonil/double_ext.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gonil {

struct ExpectedValue {
  std::string key;     // dim, signature, step, lcs_dims, derived_dim, center_dim, ...
  std::string value;   // textual form produced by compute_invariant()
  std::string origin;  // "published", "hand", or "trivial"
};

/// Generator data for examples built by extend2.
struct ExtensionSource {
  MetricLieAlgebra m0;
  ExtensionData data;
};

struct NamedExample {
  std::string name;
  MetricLieAlgebra algebra;
  std::vector<std::string> basis_names;
  std::vector<ExpectedValue> expected;
  std::optional<ExtensionSource> source;
  std::string note;
};

/// Names accepted by build_example; "abelian_<n>" also works for any n >= 1.
std::vector<std::string> catalog_names();

/// Builds the example and re-verifies every expected value; a mismatch throws
/// std::logic_error.  Unknown names throw InputError.
NamedExample build_example(const std::string& name);

/// The invariant named by key, rendered as in ExpectedValue::value.
std::string compute_invariant(const MetricLieAlgebra& m, const std::string& key);

/// Keys whose computed value differs from the stored one.
std::vector<std::string> expected_mismatches(const NamedExample& ex);

/// Operators A(e_a), a = 0..11, of the linear isotropy map of "paper_2_3" in
/// the basis (f1..f8, e1..e4); A(T) = sum_a t_a A(e_a).
std::vector<MatrixQ> paper_isotropy_table();
MatrixQ paper_isotropy_operator(const VectorQ& t);

enum class PaperPerturbation { None, F4Norm2, DropF1F4 };

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckItem> items;

  bool passed() const;
  const CheckItem* find(const std::string& name) const;
};

/// Full pipeline on "paper_2_3", optionally on a perturbed copy of its data.
VerificationReport verify_paper_example(PaperPerturbation perturbation = PaperPerturbation::None);

std::string to_text(const VerificationReport& report);

}  // namespace gonil
