#include "geronimus/io.hpp"

#include <fstream>
#include <sstream>

#include "geronimus/bigfloat.hpp"
#include "geronimus/errors.hpp"

namespace geronimus::io {

std::string NumberFormat::render(const Rational& r) const {
  if (!decimal_bits) return r.str();
  // Significant decimal digits carried by decimal_bits binary digits.
  const int digits = static_cast<int>((*decimal_bits * 30103 + 99999) / 100000);
  return BigFloat(r, *decimal_bits).str(digits);
}

std::vector<Rational> parse_moments_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("moments: invalid JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) throw ParseError("moments: expected a non-empty JSON array");
  std::vector<Rational> out;
  out.reserve(doc.size());
  for (const auto& item : doc) {
    if (item.is_string()) out.push_back(Rational::parse(item.get<std::string>()));
    else if (item.is_number_integer()) out.emplace_back(item.get<long>());
    else throw ParseError("moments: entries must be \"p/q\" strings or integers");
  }
  return out;
}

std::vector<Rational> read_moments_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("moments: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_moments_json(buf.str());
}

std::string moments_to_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const Rational& v : values) arr.push_back(v.str());
  return arr.dump();
}

Json polynomial_json(const Polynomial& p, const NumberFormat& fmt) {
  Json arr = Json::array();
  for (const Rational& c : p.coeffs()) arr.push_back(fmt.render(c));
  return arr;
}

namespace {

std::string latex_abs(const Rational& c) {
  const Rational a = abs(c);
  if (a.is_integer()) return a.str();
  return "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

std::string latex_power(long k) {
  if (k == 0) return "";
  if (k == 1) return "t";
  return "t^{" + std::to_string(k) + "}";
}

template <class T>
Json list_json(const std::vector<T>& v, const NumberFormat& fmt) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(fmt.render(x));
  return arr;
}

Json polys_json(const std::vector<Polynomial>& polys, const NumberFormat& fmt) {
  Json arr = Json::array();
  for (const Polynomial& p : polys) arr.push_back(polynomial_json(p, fmt));
  return arr;
}

std::string latex_family(const std::vector<Polynomial>& polys, const std::string& stars) {
  std::string out;
  for (std::size_t n = 0; n < polys.size(); ++n) {
    out += "P^{" + stars + "}_{" + std::to_string(n) + "}(t) &= " + polynomial_latex(polys[n]);
    out += n + 1 < polys.size() ? " \\\\\n" : "\n";
  }
  return out;
}

}  // namespace

std::string polynomial_latex(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool first = out.empty();
    if (c.sign() < 0) out += first ? "-" : " - ";
    else if (!first) out += " + ";
    const bool unit = abs(c) == Rational(1);
    if (!unit || k == 0) out += latex_abs(c);
    if (k > 0) out += (unit ? "" : " ") + latex_power(k);
  }
  return out;
}

Json banded_json(const BandedMatrix<Rational>& m, const NumberFormat& fmt) {
  Json diags = Json::array();
  for (long d = -static_cast<long>(m.lower_bandwidth()); d <= static_cast<long>(m.upper_bandwidth()); ++d) {
    diags.push_back({{"offset", d}, {"entries", list_json(m.diagonal(d), fmt)}});
  }
  return {{"n", m.size()}, {"lower", m.lower_bandwidth()}, {"upper", m.upper_bandwidth()}, {"diagonals", diags}};
}

std::string dense_csv(const BandedMatrix<Rational>& m, const NumberFormat& fmt) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ',';
      out += fmt.render(m(i, j));
    }
    out += "\r\n";
  }
  return out;
}

Json single_record_json(const SingleTransform& st, const NumberFormat& fmt) {
  return {{"kind", "single"},
          {"parameters", {{"s0_star", st.s0_star.str()}}},
          {"n_max", st.n_max()},
          {"A", list_json(st.a, fmt)},
          {"d_star", list_json(st.d_star, fmt)},
          {"h_star_sq", list_json(st.h_star_sq, fmt)},
          {"p_star", polys_json(st.p_star, fmt)}};
}

std::string single_record_csv(const SingleTransform& st, const NumberFormat& fmt) {
  std::string out = "n,A_n,d_star_n,h_star_sq_n\r\n";
  for (std::size_t n = 1; n <= st.n_max(); ++n) {
    out += std::to_string(n) + ',' + fmt.render(st.A(n)) + ',' + fmt.render(st.d(n)) + ',' +
           fmt.render(st.h_star_sq[n]) + "\r\n";
  }
  return out;
}

std::string single_record_latex(const SingleTransform& st) { return latex_family(st.p_star, "*"); }

Json double_record_json(const DoubleTransform& dt, const std::optional<SobolevMassMatrix>& m,
                        const NumberFormat& fmt) {
  Json out = {{"kind", "double"},
              {"parameters",
               {{"s0_ss", dt.corner.s0.str()}, {"s1_ss", dt.corner.s1.str()}, {"s2_ss", dt.corner.s2.str()}}},
              {"n_max", dt.n_max()},
              {"B", list_json(dt.b2, fmt)},
              {"C", list_json(dt.c2, fmt)},
              {"d_ss", list_json(dt.d_ss, fmt)},
              {"h_ss_sq", list_json(dt.h_ss_sq, fmt)},
              {"p_ss", polys_json(dt.p_ss, fmt)}};
  if (m) {
    out["M"] = Json::array({Json::array({fmt.render(m->m00), fmt.render(m->m01)}),
                            Json::array({fmt.render(m->m01), fmt.render(m->m11)})});
  }
  return out;
}

std::string double_record_csv(const DoubleTransform& dt, const NumberFormat& fmt) {
  std::string out = "n,B_n,C_n,d_ss_n,h_ss_sq_n\r\n";
  for (std::size_t n = 1; n <= dt.n_max(); ++n) {
    out += std::to_string(n) + ',' + fmt.render(dt.B(n)) + ',' + (n >= 2 ? fmt.render(dt.C(n)) : "") + ',' +
           fmt.render(dt.d(n)) + ',' + fmt.render(dt.h_ss_sq[n]) + "\r\n";
  }
  return out;
}

std::string double_record_latex(const DoubleTransform& dt) { return latex_family(dt.p_ss, "**"); }

}  // namespace geronimus::io
