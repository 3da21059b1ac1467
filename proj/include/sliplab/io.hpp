#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "sliplab/algebra.hpp"
#include "sliplab/matrix.hpp"
#include "sliplab/modules.hpp"

namespace sliplab {

// Line-oriented text formats.  '#' starts a comment; blank lines are skipped.
//
// Algebra file:
//   field <p>
//   dim <d>
//   unit <d residues>
//   mul <i> <j> : <d residues>     (one line per basis pair; all d*d required)
//
// Module file (right module):
//   over <algebra-file>            (path relative to the module file)
//   mdim <m>
//   ract <i> <j> : <m residues>    (i < mdim, j < dim of base; all pairs required)
//
// Bimodule file adds:
//   left <algebra-file>
//   lact <i> <j> : <m residues>    (i < dim of left algebra, j < mdim)
//
// Map file (matrix over the field supplied by context):
//   rows <r>
//   cols <c>
//   <c residues>                   (r data lines)

Algebra parse_algebra_text(std::string_view text, std::string_view origin = "<string>");
Algebra parse_algebra_file(const std::filesystem::path& path);

std::string serialize_algebra(const Algebra& a);

using ParsedModule = std::variant<RightModule, Bimodule>;

ParsedModule parse_module_text(std::string_view text, const std::filesystem::path& base_dir,
                               std::string_view origin = "<string>");
ParsedModule parse_module_file(const std::filesystem::path& path);

std::string serialize_right_module(const RightModule& x, std::string_view over_path);
std::string serialize_bimodule(const Bimodule& m, std::string_view left_path,
                               std::string_view over_path);

Matrix parse_map_text(std::string_view text, const PrimeField& field,
                      std::string_view origin = "<string>");
Matrix parse_map_file(const std::filesystem::path& path, const PrimeField& field);

std::string serialize_map(const Matrix& m);

}  // namespace sliplab
