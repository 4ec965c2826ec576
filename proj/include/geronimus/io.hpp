#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "geronimus/banded_matrix.hpp"
#include "geronimus/double_transform.hpp"
#include "geronimus/single_transform.hpp"

namespace geronimus::io {

using Json = nlohmann::ordered_json;

// Exact "p/q" text unless decimal_bits is set, in which case the value is
// rounded to that binary precision and printed in scientific notation.
struct NumberFormat {
  std::optional<long> decimal_bits;
  std::string render(const Rational& r) const;
};

// Moment files: a JSON array of "p/q" (or integer) strings.
std::vector<Rational> parse_moments_json(const std::string& text);
std::vector<Rational> read_moments_file(const std::string& path);
std::string moments_to_json(const std::vector<Rational>& values);

// Ascending coefficients as strings.
Json polynomial_json(const Polynomial& p, const NumberFormat& fmt = {});
// Descending powers, \frac for non-integers, e.g. "t^{2} - \frac{1}{2} t + 3".
std::string polynomial_latex(const Polynomial& p);

// {"n", "lower", "upper", "diagonals": [{"offset", "entries"}...]} from the
// lowest subdiagonal up.
Json banded_json(const BandedMatrix<Rational>& m, const NumberFormat& fmt = {});
// RFC 4180 CSV of the dense matrix, no header.
std::string dense_csv(const BandedMatrix<Rational>& m, const NumberFormat& fmt = {});

Json single_record_json(const SingleTransform& st, const NumberFormat& fmt = {});
std::string single_record_csv(const SingleTransform& st, const NumberFormat& fmt = {});
std::string single_record_latex(const SingleTransform& st);

Json double_record_json(const DoubleTransform& dt, const std::optional<SobolevMassMatrix>& m,
                        const NumberFormat& fmt = {});
std::string double_record_csv(const DoubleTransform& dt, const NumberFormat& fmt = {});
std::string double_record_latex(const DoubleTransform& dt);

}  // namespace geronimus::io
