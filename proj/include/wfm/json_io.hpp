#pragma once

// JSON schemas for bases, invariants, series and invariant tables.
// Rationals are written as "p/q" strings and accepted as strings or integers.

#include <string>

#include "json.hpp"
#include "wfm/base_geometry.hpp"
#include "wfm/dt_invariants.hpp"
#include "wfm/fm_transform.hpp"
#include "wfm/modular_forms.hpp"
#include "wfm/stability.hpp"
#include "wfm/weierstrass_lattice.hpp"

namespace wfm::io {

using json = nlohmann::json;

Rational rational_from_json(const json& j);
json to_json(const Rational& q);

/// {"name": str, "gram": [[int]], "canonical": [int], "effective": [[int]]}
BasePtr base_from_json(const json& j);
json to_json(const BaseSurface& base);

/// A preset name, or a path to a base JSON file.
BasePtr load_base(const std::string& preset_or_path);

BaseClass base_class_from_json(const json& j, const BaseSurface& base);
json to_json(const BaseClass& c);

/// {"C":[int],"alpha":[int],"k2":int,"n":int}; alpha defaults to zero.
Dim2Chern dim2_from_json(const json& j, const BaseSurface& base);
json to_json(const Dim2Chern& g);

/// {"C":[int],"m":int,"chi":int}
Dim1Chern dim1_from_json(const json& j, const BaseSurface& base);
json to_json(const Dim1Chern& g);

/// {"r":int,"m":int,"l":int,"n":int}; m and l default to zero.
K3Invariants k3_from_json(const json& j);
json to_json(const K3Invariants& v);

/// {"theta": rat, "pullback": [rat]} and {"fiber": rat, "section": [rat]}
DivisorX divisor_from_json(const json& j, const BasePtr& base);
json to_json(const DivisorX& d);
CurveX curve_from_json(const json& j, const BasePtr& base);
json to_json(const CurveX& c);

json to_json(const ChernVector& v);

/// {"kind":"Omega","space":"Xhat","entries":[{"r":..,"n":..,"k":..,"value":"p/q"}]}
InvariantTable table_from_json(const json& j);
json to_json(const InvariantTable& t);

/// {"r","k","order","convention","offset","grading_shift","notes","coeffs":[{"exp","value"}]}
json to_json(const ZSeries& z);
std::string to_csv(const ZSeries& z);

json read_json_file(const std::string& path);

}  // namespace wfm::io
