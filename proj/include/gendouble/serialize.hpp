#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "gendouble/spinor.hpp"

namespace gd {

/// Named matrices over one ring; the unit of JSON import/export.
struct MatrixBundle {
  RingPtr ring;
  std::vector<PolyMatrix> matrices;
};

/// {ring: {n, parity, extended, variables}, matrices: [{name, rows, cols, entries}]},
/// each entry a list of [coefficient-string, exponent-array] terms.
nlohmann::json to_json(const MatrixBundle& bundle);
MatrixBundle bundle_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Certificate& cert, bool with_points = false);
nlohmann::json to_json(const SpinorReport& rep);

/// Self-contained Macaulay2 script declaring the ring and matrices and
/// asserting that consecutive products vanish.
std::string to_cas_script(const MatrixBundle& bundle, bool assert_complex = true);
/// bmatrix rendering of one matrix.
std::string to_latex(const PolyMatrix& m);
std::string poly_to_latex(const Poly& p);

/// Writes via a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace gd
