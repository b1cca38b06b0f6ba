#pragma once

#include "gonil/double_ext.hpp"

#include <string>
#include <vector>

namespace gonil {

/// JSON algebra file:
///   {"dim": n, "basis_names": [...], "brackets": {"i,j": {"k": "p/q"}},
///    "form": [["p/q", ...], ...]}
/// Indices are 0-based with i < j; rationals are strings "p" or "p/q".
struct AlgebraFile {
  MetricLieAlgebra algebra;
  std::vector<std::string> basis_names;  // empty when the file has none
};

/// Throws InputError naming the offending field.
AlgebraFile parse_algebra_file(const std::string& text);
std::string serialize_algebra_file(const MetricLieAlgebra& m,
                                   const std::vector<std::string>& basis_names = {});

/// Extension data file: {"D": [[...]], "phi": [...], "omega": [[...]], "mu": "p/q"};
/// D uses the column convention (column c holds D e_c).
ExtensionData parse_extension_data(const std::string& text);
std::string serialize_extension_data(const ExtensionData& data);

/// Throws InputError when the file cannot be read.
std::string read_text_file(const std::string& path);
/// Throws std::runtime_error when the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gonil
