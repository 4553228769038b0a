#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "resq/closed_forms.hpp"
#include "resq/energy.hpp"
#include "resq/matrix.hpp"
#include "resq/spectral.hpp"

namespace resq::io {

using nlohmann::json;

/// "%.17g": round-trips every double.
std::string format_double(double x);

/// Row-major, comma separated, one line per row, each line LF-terminated.
std::string matrix_to_csv(const DenseMatrix& m);
/// {"n": rows, "kind": kind, "data": [row-major entries]}
json matrix_to_json(const DenseMatrix& m, std::string_view kind);
/// Inverse of matrix_to_json for square matrices. Throws DimensionMismatch.
DenseMatrix matrix_from_json(const json& j);

/// {"values": [...], "multiplicities": [[value, count], ...], "tol": tol}
json spectrum_to_json(const Spectrum& s);
/// One eigenvalue per line, descending.
std::string spectrum_to_csv(const Spectrum& s);

json energy_to_json(const EnergyReport& r);
/// "key,value" lines; vectors are written as one "key[i],value" line per entry.
std::string energy_to_csv(const EnergyReport& r);

json closed_form_to_json(const closed_forms::ClosedForm& cf);

}  // namespace resq::io
