#pragma once

#include <json.hpp>

#include "lieform/structure.hpp"

namespace lieform {

// ordered_json everywhere: insertion order survives serialization, so equal
// inputs always produce byte-identical reports.
using Json = nlohmann::ordered_json;

std::string label_str(const BasisLabel& l, const RootSystem& rs);  // "E[1,1]", "H2", "K1"

Json rat_json(const Rat& q);
Rat rat_from_json(const Json& j);  // accepts "p/q" strings and integer numbers

std::vector<std::vector<int>> cartan_grid_from_json(const Json& j);  // bare grid or {"cartan": ...}
Json cartan_json(const CartanMatrix& c);

Json u_json(const UMatrix& u);
UMatrix u_from_json(const Json& j);  // bare grid or {"u": ...}

Json roots_json(const RootSystem& rs);

Json subspace_json(const Subspace& s);
Json report_json(const Report& r);

Json table_json(const GAlgebra& g);
Json table_json(const DAlgebra& d);

// Re-parses a table export: rebuilds the algebra from the embedded Cartan and
// u data, then checks the serialized basis, brackets, Gram table, and
// determinant entry-by-entry against the rebuilt one. Throws ParseError on
// any mismatch, so a successful return really is an equal algebra.
DAlgebra d_from_table_json(const Json& j);

}  // namespace lieform
