#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "geronimus/io.hpp"
#include "geronimus/matrix_factor.hpp"
#include "geronimus/oracle.hpp"

namespace geronimus::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ConfigError(what + ": expected a non-negative integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(std::stoul(text));
}

long parse_precision(const std::string& text, const std::string& what) {
  const std::size_t p = parse_size(text, what);
  if (p < static_cast<std::size_t>(kMinPrecision) || p > 1u << 20) {
    throw ConfigError(what + ": precision must be between " + std::to_string(kMinPrecision) + " and 1048576 bits");
  }
  return static_cast<long>(p);
}

struct Instance {
  MomentFunctional base;
  std::vector<Rational> head1;
  std::vector<Rational> head2;
};

std::vector<Rational> laguerre_head_or_zero(const Rational& alpha, unsigned order) {
  if (alpha > Rational(static_cast<long>(order) - 1)) return laguerre_divided_head(alpha, order);
  return std::vector<Rational>(order, Rational(0));
}

// Moments s_0 .. s_{2L} are needed for transforms up to level L.
Instance load_instance(const RunConfig& cfg, std::size_t levels) {
  const std::size_t needed = 2 * levels + 1;
  if (cfg.measure == "laguerre") {
    if (!cfg.alpha) throw ConfigError("--measure laguerre requires --alpha");
    Instance inst{laguerre_moments(*cfg.alpha), laguerre_head_or_zero(*cfg.alpha, 1),
                  laguerre_head_or_zero(*cfg.alpha, 2)};
    if (cfg.head) {
      if (cfg.kind == Kind::single) inst.head1 = *cfg.head;
      else inst.head2 = *cfg.head;
    }
    return inst;
  }
  if (cfg.measure != "custom") throw ConfigError("--measure must be laguerre or custom");
  if (cfg.file.empty()) throw ConfigError("--measure custom requires --file");
  std::vector<Rational> values = io::read_moments_file(cfg.file);
  if (values.size() < needed) {
    throw ConfigError("custom moments: N = " + std::to_string(cfg.n) + " needs at least " + std::to_string(needed) +
                      " moments, file has " + std::to_string(values.size()));
  }
  Instance inst{custom_moments(std::move(values), std::filesystem::path(cfg.file).filename().string()),
                {Rational(0)},
                {Rational(0), Rational(0)}};
  if (cfg.head) {
    if (cfg.kind == Kind::single) inst.head1 = *cfg.head;
    else inst.head2 = *cfg.head;
  }
  return inst;
}

void check_head(const RunConfig& cfg) {
  if (!cfg.head) return;
  const std::size_t want = cfg.kind == Kind::single ? 1 : 2;
  if (cfg.head->size() != want) {
    throw ConfigError("--head needs " + std::to_string(want) + " value(s) for a " +
                      (cfg.kind == Kind::single ? "single" : "double") + " transform");
  }
}

void check_common(const RunConfig& cfg) {
  if (cfg.n < 1) throw ConfigError("--n must be at least 1");
  if (cfg.kind == Kind::single && !cfg.s0_star) throw ConfigError("--single requires --s0star");
  if (cfg.kind == Kind::twofold && !cfg.corner) throw ConfigError("--double requires --corner s0,s1,s2");
  check_head(cfg);
}

struct Base {
  MonicOPS ops;
  SecondKindValues sk;
};

Base make_base(const MomentFunctional& m, std::size_t levels) {
  MonicOPS ops = monic_ops(build_gram(m, levels));
  SecondKindValues sk = second_kind(m, ops);
  return {std::move(ops), std::move(sk)};
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path);
  f << content;
}

io::Json with_measure(const std::string& label, const io::Json& record) {
  io::Json doc = {{"measure", label}};
  for (const auto& [key, value] : record.items()) doc[key] = value;
  return doc;
}

std::size_t guard(Kind kind) { return kind == Kind::single ? 1 : 2; }
// Levels computed beyond N before factorizing.
std::size_t factor_levels(Kind kind, std::size_t n) { return n + (kind == Kind::single ? 2 : 4); }

bool positive_up_to(const GramMatrix& g) { return regularity_check(g).positive_definite; }

}  // namespace

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& part : split(text, ',')) out.push_back(Rational::parse(part));
  return out;
}

Corner parse_corner(const std::string& text) {
  const auto v = parse_list(text);
  if (v.size() != 3) throw ConfigError("--corner expects three values s0,s1,s2");
  return {v[0], v[1], v[2]};
}

Corruption parse_corruption(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2 || parts[0].size() != 1 || std::string("abc").find(parts[0][0]) == std::string::npos) {
    throw ConfigError("--corrupt expects a:K, b:K or c:K");
  }
  const Corruption c{parts[0][0], parse_size(parts[1], "--corrupt")};
  if (c.level < 1 || (c.which == 'c' && c.level < 2)) throw ConfigError("--corrupt: level out of range");
  return c;
}

int cmd_transform(const RunConfig& cfg, std::ostream& out) {
  check_common(cfg);
  const Instance inst = load_instance(cfg, cfg.n);
  const Base base = make_base(inst.base, cfg.n);
  const io::NumberFormat fmt{cfg.decimal};
  std::string text;
  if (cfg.kind == Kind::single) {
    const SingleTransform st = transform_single(base.ops, base.sk, *cfg.s0_star, cfg.n);
    switch (cfg.format) {
      case Format::csv: text = io::single_record_csv(st, fmt); break;
      case Format::latex: text = io::single_record_latex(st); break;
      case Format::json: text = with_measure(inst.base.label(), io::single_record_json(st, fmt)).dump(2) + "\n"; break;
    }
  } else {
    const DoubleTransform dt = transform_double(base.ops, base.sk, *cfg.corner, cfg.n);
    const SobolevMassMatrix m = sobolev_mass_matrix(divided_measure(inst.base, 2, inst.head2), *cfg.corner);
    switch (cfg.format) {
      case Format::csv: text = io::double_record_csv(dt, fmt); break;
      case Format::latex: text = io::double_record_latex(dt); break;
      case Format::json: text = with_measure(inst.base.label(), io::double_record_json(dt, m, fmt)).dump(2) + "\n"; break;
    }
  }
  emit(cfg.output, text, out);
  return kOk;
}

int cmd_factorize(const RunConfig& cfg, std::ostream& out) {
  check_common(cfg);
  const std::size_t g = guard(cfg.kind);
  if (cfg.n <= g) {
    throw ConfigError("--n " + std::to_string(cfg.n) + " does not exceed the guard band " + std::to_string(g) +
                      "; use N >= " + std::to_string(g + 1));
  }
  const std::size_t n = cfg.n;
  const std::size_t levels = factor_levels(cfg.kind, n);
  const Instance inst = load_instance(cfg, levels);
  const Base base = make_base(inst.base, levels);
  const io::NumberFormat fmt{cfg.decimal};
  const MonicJacobi jm = build_monic_jacobi(base.ops, n);

  std::vector<std::pair<std::string, RationalBand>> mats;
  DarbouxFactors f{DarbouxKind::single, {}, {}};
  RationalBand target;
  std::optional<CholeskyCheck> chol;
  const bool base_pd = positive_up_to(build_gram(inst.base, n - 1));
  if (cfg.kind == Kind::single) {
    const SingleTransform st = transform_single(base.ops, base.sk, *cfg.s0_star, levels);
    f = darboux_factors_single(base.ops, st, n);
    target = multiplication_matrix(st.p_star, 1, n);
    mats = {{"L_mon", f.l_mon}, {"U_mon", f.u_mon}, {"J_mon", jm.matrix()}, {"Jstar_mon", target}};
    if (base_pd && positive_up_to(build_gram(geronimus1_moments(inst.base, *cfg.s0_star), n - 1))) {
      chol = symmetric_cholesky_check(st, base.ops, inst.base, n, cfg.precision);
    }
  } else {
    const DoubleTransform dt = transform_double(base.ops, base.sk, *cfg.corner, levels);
    f = darboux_factors_double(base.ops, dt, n);
    target = multiplication_matrix(dt.p_ss, 2, n);
    mats = {{"L_mon", f.l_mon},
            {"U_mon", f.u_mon},
            {"J_mon", jm.matrix()},
            {"J_mon_sq", band_mul(jm.matrix(), jm.matrix())},
            {"Jss_mon", target}};
    if (base_pd && positive_up_to(build_gram(GeronimusMoments2(inst.base, *cfg.corner), n - 1))) {
      chol = symmetric_cholesky_check(dt, base.ops, inst.base, n, cfg.precision);
    }
  }

  const std::filesystem::path dir(cfg.output_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create " + dir.string());
  io::Json files = io::Json::array();
  for (const auto& [name, m] : mats) {
    emit((dir / (name + ".json")).string(), io::banded_json(m, fmt).dump(2) + "\n", out);
    emit((dir / (name + ".csv")).string(), io::dense_csv(m, fmt), out);
    files.push_back(name + ".json");
    files.push_back(name + ".csv");
  }

  const CheckReport darboux = verify_darboux(jm, f, target);
  io::Json doc = {{"measure", inst.base.label()},
                  {"kind", cfg.kind == Kind::single ? "single" : "double"},
                  {"n", n},
                  {"guard_band", g},
                  {"files", files}};
  doc["darboux"] = {{"block", n - g},
                    {"checks", darboux.checks()},
                    {"verified", darboux.ok() ? "exact" : "FAILED"},
                    {"max_residual", "0"}};
  if (!darboux.ok()) doc["darboux"]["failure"] = darboux.summary();
  if (chol) {
    doc["cholesky"] = {{"precision", cfg.precision},
                       {"tolerance", "2^-" + std::to_string(cfg.precision / 2)},
                       {"checks", chol->report.checks()},
                       {"max_residual", chol->report.max_residual() ? chol->report.max_residual()->str(12) : "0"},
                       {"verified", chol->report.ok() ? "exact + within tolerance" : "FAILED"}};
    if (!chol->report.ok()) doc["cholesky"]["failure"] = chol->report.summary();
  } else {
    doc["cholesky"] = "skipped: forms not positive definite up to N";
  }
  emit(cfg.output, doc.dump(2) + "\n", out);
  darboux.require();
  if (chol) chol->report.require();
  return kOk;
}

namespace {

class Suite {
 public:
  explicit Suite(std::ostream& out) : out_(out) {}

  void record(const CheckReport& r) {
    out_ << (r.ok() ? "ok    " : "FAIL  ") << r.summary() << "\n";
    if (!r.ok() && !first_) first_ = r;
  }
  void skip(const std::string& name, const std::string& why) { out_ << "skip  " << name << ": " << why << "\n"; }
  const std::optional<CheckReport>& first_failure() const { return first_; }

 private:
  std::ostream& out_;
  std::optional<CheckReport> first_;
};

void verify_base(Suite& suite, const Instance& inst, const Base& base) {
  CheckReport r("base orthogonal polynomials");
  r.merge(oracle::check_orthogonality(base.ops.gram, base.ops.polys).report);
  for (std::size_t n = 0; n <= std::min<std::size_t>(8, base.ops.max_degree()); ++n) {
    r.expect(oracle::heine_polynomial(base.ops.gram, n) == base.ops.polys[n], "Heine determinant = P_n", n, n);
  }
  for (std::size_t n = 1; n < base.ops.polys.size(); ++n) {
    r.expect(base.ops.polys[n].is_monic() && base.ops.polys[n].degree() == static_cast<long>(n), "P_n monic of degree n", n);
    r.expect(base.sk.q[n].degree() == static_cast<long>(n) - 1, "deg Q_n = n - 1", n);
    r.expect_equal(base.sk.q[n].lead(), inst.base.moment(0), "lead(Q_n) = s_0", n);
  }
  for (std::size_t n = 1; n + 1 < base.ops.polys.size(); ++n) {
    r.expect_equal(base.ops.norms_sq[n], base.ops.c_sq[n - 1] * base.ops.norms_sq[n - 1], "h_n^2 = c_{n-1}^2 h_{n-1}^2", n);
  }
  suite.record(r);
}

SingleTransform corrupted(SingleTransform st, const std::optional<Corruption>& c) {
  if (!c) return st;
  if (c->which != 'a') throw ConfigError("--corrupt " + std::string(1, c->which) + " applies to --double only");
  if (c->level > st.a.size()) throw ConfigError("--corrupt: level beyond the transform");
  st.a[c->level - 1] += Rational(1);
  return st;
}

DoubleTransform corrupted(DoubleTransform dt, const std::optional<Corruption>& c) {
  if (!c) return dt;
  if (c->which == 'a') throw ConfigError("--corrupt a applies to --single only");
  if (c->level > dt.b2.size()) throw ConfigError("--corrupt: level beyond the transform");
  if (c->which == 'b') dt.b2[c->level - 1] += Rational(1);
  else dt.c2[c->level - 2] += Rational(1);
  return dt;
}

void verify_single(Suite& suite, const RunConfig& cfg, const Instance& inst, const Base& base, std::size_t levels) {
  const std::size_t n = cfg.n;
  const Rational& s0s = *cfg.s0_star;
  const SingleTransform clean = transform_single(base.ops, base.sk, s0s, levels);
  const SingleTransform st = corrupted(clean, cfg.corrupt);
  const GramMatrix gram1 = build_gram(geronimus1_moments(inst.base, s0s), levels);

  CheckReport r("single transform");
  r.merge(oracle::check_orthogonality(gram1, st.p_star).report);
  for (std::size_t k = 1; k <= levels; ++k) {
    r.expect((st.p_star[k] - base.ops.polys[k] - st.A(k) * base.ops.polys[k - 1]).is_zero(),
             "P*_n = P_n + A_n P_{n-1}", k);
    r.expect_equal(st.A(k), solve_connection_single(gram1, base.ops, k), "A_n quotient = one-unknown solve", k);
    r.expect(single_determinant_form(base.ops, base.sk, s0s, k) == st.p_star[k], "determinant form of P*_n", k);
    r.expect_equal(st.h_star_sq[k], st.A(k) * base.ops.norms_sq[k - 1], "(h*_n)^2 = A_n h_{n-1}^2", k);
  }
  if (regularity_check(gram1).positive_definite) {
    for (std::size_t k = 1; k <= levels; ++k) r.expect(st.A(k).sign() > 0, "Gram_1 positive definite => A_n > 0", k);
  }
  suite.record(r);

  const DividedMeasure div = divided_measure(inst.base, 1, inst.head1);
  suite.record(verify_mass_vs_gram_1(div, s0s, n));
  std::vector<Rational> other = inst.head1;
  other[0] += Rational(1);
  CheckReport perturbed("mass form vs Gram_1, perturbed head");
  perturbed.merge(verify_mass_vs_gram_1(divided_measure(inst.base, 1, other), s0s, n));
  suite.record(perturbed);

  if (n <= 1) {
    suite.skip("Darboux (tridiagonal)", "N must exceed the guard band 1");
    return;
  }
  const MonicJacobi jm = build_monic_jacobi(base.ops, n);
  suite.record(verify_darboux(jm, darboux_factors_single(base.ops, st, n), multiplication_matrix(st.p_star, 1, n)));
  const bool pd = regularity_check(build_gram(inst.base, n - 1)).positive_definite &&
                  regularity_check(build_gram(geronimus1_moments(inst.base, s0s), n - 1)).positive_definite;
  if (!pd) suite.skip("Cholesky structure (P*)", "forms not positive definite up to N");
  else suite.record(symmetric_cholesky_check(st, base.ops, inst.base, n, cfg.precision).report);
}

void verify_double(Suite& suite, const RunConfig& cfg, const Instance& inst, const Base& base, std::size_t levels) {
  const std::size_t n = cfg.n;
  const Corner& corner = *cfg.corner;
  const DoubleTransform clean = transform_double(base.ops, base.sk, corner, levels);
  const DoubleTransform dt = corrupted(clean, cfg.corrupt);
  const GramMatrix gram2 = build_gram(GeronimusMoments2(inst.base, corner), levels);
  const auto entries = double_system_entries(base.ops, base.sk, corner);

  CheckReport r("double transform");
  r.merge(oracle::check_orthogonality(gram2, dt.p_ss).report);
  const Rational s1_over_s0 = inst.base.moment(1) / inst.base.moment(0);
  r.expect_equal(dt.h_ss_sq[1], corner.s2 + corner.s1 * (dt.B(1) - s1_over_s0), "(h**_1)^2 = s2** + s1** (B_1 - s_1/s_0)", 1);
  for (std::size_t k = 2; k <= levels; ++k) {
    r.expect((dt.p_ss[k] - base.ops.polys[k] - dt.B(k) * base.ops.polys[k - 1] - dt.C(k) * base.ops.polys[k - 2]).is_zero(),
             "P**_n = P_n + B_n P_{n-1} + C_n P_{n-2}", k);
    const Connection2 via_det = read_off_connection(double_determinant_form(base.ops, entries, k), base.ops);
    r.expect_equal(dt.B(k), via_det.b, "B_n system = determinant form", k);
    r.expect_equal(dt.C(k), via_det.c, "C_n system = determinant form", k);
    r.expect_equal(dt.h_ss_sq[k], dt.C(k) * base.ops.norms_sq[k - 2], "(h**_n)^2 = C_n h_{n-2}^2", k);
  }
  if (regularity_check(gram2).positive_definite) {
    for (std::size_t k = 2; k <= levels; ++k) r.expect(dt.C(k).sign() > 0, "Gram_2 positive definite => C_n > 0", k);
  }
  suite.record(r);

  suite.record(verify_sobolev_vs_gram_2(divided_measure(inst.base, 2, inst.head2), corner, n));
  std::vector<Rational> other = inst.head2;
  other[0] += Rational(1);
  other[1] -= Rational(1, 2);
  CheckReport perturbed("Sobolev form vs Gram_2, perturbed head");
  perturbed.merge(verify_sobolev_vs_gram_2(divided_measure(inst.base, 2, other), corner, n));
  suite.record(perturbed);

  if (corner.s2 == inst.base.moment(0)) {
    CheckReport comp("composition of two single steps");
    try {
      const auto composed = compose_single_steps(inst.base, corner, levels);
      for (std::size_t k = 0; k <= levels; ++k) comp.expect(composed[k] == clean.p_ss[k], "P**_n = composed single steps", k);
      suite.record(comp);
    } catch (const DegenerateDenominator& e) {
      suite.skip(comp.name(), std::string("intermediate step not regular: ") + e.what());
    } catch (const NotRegular& e) {
      suite.skip(comp.name(), std::string("intermediate step not regular: ") + e.what());
    }
  } else {
    suite.skip("composition of two single steps", "s2** differs from s_0");
  }

  if (n <= 2) {
    suite.skip("Darboux (pentadiagonal)", "N must exceed the guard band 2");
    return;
  }
  const MonicJacobi jm = build_monic_jacobi(base.ops, n);
  suite.record(verify_darboux(jm, darboux_factors_double(base.ops, dt, n), multiplication_matrix(dt.p_ss, 2, n)));
  const bool pd = regularity_check(build_gram(inst.base, n - 1)).positive_definite &&
                  regularity_check(build_gram(GeronimusMoments2(inst.base, corner), n - 1)).positive_definite;
  if (!pd) suite.skip("Cholesky structure (P**)", "forms not positive definite up to N");
  else suite.record(symmetric_cholesky_check(dt, base.ops, inst.base, n, cfg.precision).report);
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  check_common(cfg);
  const std::size_t levels = factor_levels(cfg.kind, cfg.n);
  const Instance inst = load_instance(cfg, levels);
  const Base base = make_base(inst.base, levels);
  Suite suite(out);
  verify_base(suite, inst, base);
  if (cfg.kind == Kind::single) verify_single(suite, cfg, inst, base, levels);
  else verify_double(suite, cfg, inst, base, levels);
  if (const auto& f = suite.first_failure()) {
    out << "first failing invariant: " << f->failure()->identity << " at (" << f->failure()->row << ","
        << f->failure()->col << ")\n";
    return kVerifyFailed;
  }
  out << "all invariants hold\n";
  return kOk;
}

namespace {

struct RawOptions {
  std::string measure = "laguerre";
  std::string alpha, file, s0star, corner, format = "json", precision, decimal, output, output_dir = ".", corrupt, head;
  std::size_t n = 0;
  bool single = false;
  bool twofold = false;
};

void add_options(CLI::App* sub, RawOptions& raw, bool factor, bool verify) {
  sub->add_option("--measure", raw.measure, "laguerre or custom")->capture_default_str();
  sub->add_option("--alpha", raw.alpha, "Laguerre parameter (rational, > -1)");
  sub->add_option("--file", raw.file, "JSON array of moments as \"p/q\" strings");
  auto* single = sub->add_flag("--single", raw.single, "single transform");
  auto* twofold = sub->add_flag("--double", raw.twofold, "double transform");
  single->excludes(twofold);
  sub->add_option("--s0star", raw.s0star, "free parameter s0* of the single transform");
  sub->add_option("--corner", raw.corner, "free corner s0**,s1**,s2** of the double transform");
  sub->add_option("--n", raw.n, "truncation N (>= 1)")->required();
  sub->add_option("--precision", raw.precision, "BigFloat precision in bits (default 256 or $GERONIMUS_PRECISION)");
  sub->add_option("--decimal", raw.decimal, "render numbers as decimals at this binary precision");
  sub->add_option("--output", raw.output, "output file (default stdout)");
  sub->add_option("--head", raw.head, "leading moments of the divided measure (m0 or m0,m1)");
  if (!factor && !verify) sub->add_option("--format", raw.format, "csv, json or latex")->capture_default_str();
  if (factor) sub->add_option("--output-dir", raw.output_dir, "directory for matrix files")->capture_default_str();
  if (verify) sub->add_option("--corrupt", raw.corrupt, "fault injection: a:K, b:K or c:K");
}

RunConfig to_config(const RawOptions& raw) {
  RunConfig cfg;
  cfg.measure = raw.measure;
  if (!raw.alpha.empty()) cfg.alpha = Rational::parse(raw.alpha);
  cfg.file = raw.file;
  cfg.kind = raw.twofold ? Kind::twofold : Kind::single;
  if (!raw.s0star.empty()) cfg.s0_star = Rational::parse(raw.s0star);
  if (!raw.corner.empty()) cfg.corner = parse_corner(raw.corner);
  cfg.n = raw.n;
  if (raw.format == "csv") cfg.format = Format::csv;
  else if (raw.format == "json") cfg.format = Format::json;
  else if (raw.format == "latex") cfg.format = Format::latex;
  else throw ConfigError("--format must be csv, json or latex");
  if (!raw.precision.empty()) {
    cfg.precision = parse_precision(raw.precision, "--precision");
  } else if (const char* env = std::getenv("GERONIMUS_PRECISION"); env && *env) {
    cfg.precision = parse_precision(env, "GERONIMUS_PRECISION");
  }
  if (!raw.decimal.empty()) cfg.decimal = parse_precision(raw.decimal, "--decimal");
  cfg.output = raw.output;
  cfg.output_dir = raw.output_dir;
  if (!raw.corrupt.empty()) cfg.corrupt = parse_corruption(raw.corrupt);
  if (!raw.head.empty()) cfg.head = parse_list(raw.head);
  return cfg;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact single and double Geronimus transformations of moment functionals"};
  app.require_subcommand(1);
  RawOptions raw;
  auto* transform = app.add_subcommand("transform", "connection coefficients, certificates, norms and polynomials");
  auto* factorize = app.add_subcommand("factorize", "Darboux factors and Jacobi matrices with verification");
  auto* verify = app.add_subcommand("verify", "run every invariant for the configured instance");
  add_options(transform, raw, false, false);
  add_options(factorize, raw, true, false);
  add_options(verify, raw, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    const RunConfig cfg = to_config(raw);
    if (transform->parsed()) return cmd_transform(cfg, out);
    if (factorize->parsed()) return cmd_factorize(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const NotRegular& e) {
    err << "error: " << e.what() << " (leading minor of order " << e.order() << " vanishes)\n";
    return kRegularityFailure;
  } catch (const DegenerateDenominator& e) {
    err << "error: " << e.what() << " (d*_" << e.level() << " = 0)\n";
    return kRegularityFailure;
  } catch (const DegenerateDeterminant& e) {
    err << "error: " << e.what() << " (d**_" << e.level() << " = 0)\n";
    return kRegularityFailure;
  } catch (const CertificateDivergence& e) {
    err << "error: " << e.what() << "\n";
    return kRegularityFailure;
  } catch (const ZeroE& e) {
    err << "error: " << e.what() << "\n";
    return kRegularityFailure;
  } catch (const MismatchAt& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const ToleranceExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

}  // namespace geronimus::cli
