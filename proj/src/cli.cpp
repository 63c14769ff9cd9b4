#include "zeta/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zeta/oracle.hpp"

namespace zeta::cli {

namespace {

using nlohmann::json;

std::int64_t parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw PreconditionError(what + " must be an integer, got '" + text + "'");
  return v;
}

void expect_args(const std::vector<std::string>& t, std::size_t count, const std::string& usage) {
  if (t.size() != count + 1) throw PreconditionError("usage: " + usage);
}

std::string join(const std::vector<std::string>& t) {
  std::string s;
  for (const auto& x : t) s += (s.empty() ? "" : " ") + x;
  return s;
}

json number(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return json(static_cast<std::uint64_t>(v));
  return json(v.str());
}

// Output sink: a file when --out is given, standard output otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      os_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw PreconditionError("cannot open output file " + path);
    os_ = file_.get();
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

int cmd_expand(const RunConfig& cfg, std::ostream& out) {
  const Construction c = make_construction(cfg.construction);
  const auto a = expand_global(c.zeta, cfg.N);
  Sink sink(cfg.out_path, out);
  if (cfg.format == Format::Csv) {
    *sink << "n,a_n\n";
    for (std::int64_t n = 1; n <= a.bound(); ++n) *sink << n << ',' << a[n] << '\n';
  } else {
    json rows = json::array();
    for (std::int64_t n = 1; n <= a.bound(); ++n) rows.push_back({{"n", n}, {"a_n", number(a[n])}});
    json doc{{"construction", c.label}, {"N", cfg.N}, {"coefficients", rows}};
    if (!c.note.empty()) doc["note"] = c.note;
    *sink << doc.dump(2) << '\n';
  }
  return kOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Construction c = make_construction(cfg.construction);
  const std::int64_t oracle_N = cfg.oracle_N > 0 ? std::min<std::int64_t>(cfg.oracle_N, cfg.N) : cfg.N;
  const auto formula = expand_global(c.zeta, cfg.N);
  const auto oracle = ideal_series(c.order, oracle_N, cfg.prime_powers_only);

  std::int64_t first_mismatch = 0;
  for (std::int64_t n = 1; n <= oracle_N && first_mismatch == 0; ++n)
    if (formula[n] != oracle[n]) first_mismatch = n;

  if (cfg.construction.front() == "zc6") {
    const auto swapped = expand_global(zc6_swapped_variant(), oracle_N);
    std::int64_t diverge = 0;
    for (std::int64_t n = 1; n <= oracle_N && diverge == 0; ++n)
      if (swapped[n] != oracle[n]) diverge = n;
    c.note += diverge ? " The swapped-correction variant disagrees with the census first at n=" + std::to_string(diverge) + "."
                      : " The swapped-correction variant is not distinguished below n=" + std::to_string(oracle_N + 1) + ".";
  }

  Sink sink(cfg.out_path, out);
  const auto match_text = [&](std::int64_t n) -> std::string {
    if (n > oracle_N) return "skipped";
    return formula[n] == oracle[n] ? "true" : "false";
  };
  if (cfg.format == Format::Csv) {
    *sink << "n,a_n,oracle_a_n,match\n";
    for (std::int64_t n = 1; n <= cfg.N; ++n) {
      *sink << n << ',' << formula[n] << ',';
      if (n <= oracle_N) *sink << oracle[n];
      *sink << ',' << match_text(n) << '\n';
    }
  } else {
    json rows = json::array();
    for (std::int64_t n = 1; n <= cfg.N; ++n) {
      json row{{"n", n}, {"a_n", number(formula[n])}};
      row["oracle_a_n"] = n <= oracle_N ? number(oracle[n]) : json(nullptr);
      row["match"] = n <= oracle_N ? json(formula[n] == oracle[n]) : json(nullptr);
      rows.push_back(std::move(row));
    }
    json doc{{"construction", c.label}, {"N", cfg.N}, {"oracle_N", oracle_N}, {"rows", rows},
             {"all_match", first_mismatch == 0}};
    doc["first_mismatch"] = first_mismatch ? json(first_mismatch) : json(nullptr);
    if (!c.note.empty()) doc["note"] = c.note;
    *sink << doc.dump(2) << '\n';
  }
  if (!c.note.empty()) err << "note: " << c.note << '\n';
  if (first_mismatch) {
    err << "mismatch: formula and census first differ at n=" << first_mismatch << " (formula " << formula[first_mismatch]
        << ", census " << oracle[first_mismatch] << ")\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const AssociationScheme S = load_scheme(cfg.inputs.at(0));
  out << "valid association scheme\n";
  out << "order: " << S.size() << "\nrank: " << S.rank() << "\nvalencies:";
  for (std::size_t s = 0; s < S.rank(); ++s) out << ' ' << S.valency(s);
  out << "\ncommutative: " << (S.is_commutative() ? "yes" : "no") << '\n';
  std::size_t nonzero = 0;
  int largest = 0;
  for (std::size_t s = 0; s < S.rank(); ++s)
    for (std::size_t t = 0; t < S.rank(); ++t)
      for (std::size_t u = 0; u < S.rank(); ++u) {
        const int c = S.structure_constant(s, t, u);
        nonzero += c != 0;
        largest = std::max(largest, c);
      }
  out << "structure constants: " << nonzero << " nonzero, largest " << largest << '\n';
  return kOk;
}

int cmd_product(const RunConfig& cfg, std::ostream& out) {
  const AssociationScheme a = load_scheme(cfg.inputs.at(0));
  const AssociationScheme b = load_scheme(cfg.inputs.at(1));
  const AssociationScheme p = direct_product(a, b);
  Sink sink(cfg.out_path, out);
  write_scheme_json(*sink, p);
  return kOk;
}

int cmd_hey(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 6) throw PreconditionError("usage: hey <r> <m> <k> <p> <e> <f>");
  std::vector<int> v;
  for (const auto& s : cfg.inputs) {
    const auto x = parse_int(s, "hey parameter");
    if (x < 1) throw PreconditionError("hey parameters must be positive");
    v.push_back(static_cast<int>(x));
  }
  const HeyComponent comp{v[0], v[1], v[2], PadicRingData{v[3], v[4], v[5]}};
  const LocalFactor f = hey_local(comp);
  const auto c = f.expand(static_cast<std::size_t>(cfg.N));
  Sink sink(cfg.out_path, out);
  if (cfg.format == Format::Csv) {
    *sink << "# " << f.to_string() << "\nk,c_k\n";
    for (std::size_t k = 0; k < c.size(); ++k) *sink << k << ',' << c[k] << '\n';
  } else {
    json coeffs = json::array();
    for (const auto& x : c) coeffs.push_back(number(x));
    *sink << json{{"prime", f.prime()},
                  {"numerator", to_string(f.numerator())},
                  {"denominator", to_string(f.denominator())},
                  {"coefficients", coeffs}}
                 .dump(2)
          << '\n';
  }
  return kOk;
}

}  // namespace

FieldDescriptor parse_field(const std::string& text) {
  if (text == "Q") return FieldDescriptor::rational();
  if (text.rfind("cyc", 0) == 0) return FieldDescriptor::cyclotomic(parse_int(text.substr(3), "cyclotomic conductor"));
  throw PreconditionError("unknown field '" + text + "' (expected Q or cyc<l>)");
}

Construction make_construction(const std::vector<std::string>& t) {
  if (t.empty()) throw PreconditionError("missing construction");
  const std::string& kind = t.front();
  const auto arg = [&](std::size_t i, const char* what) { return parse_int(t.at(i), what); };

  if (kind == "cp") {
    expect_args(t, 1, "cp <p>");
    const auto e = cp_catalog(arg(1, "p"));
    return {join(t), global_zeta(e), e.order, {}};
  }
  if (kind == "kn") {
    expect_args(t, 1, "kn <n>");
    const auto e = rank2_catalog(arg(1, "n"));
    return {join(t), global_zeta(e), e.order, {}};
  }
  if (kind == "cp-x-kn") {
    expect_args(t, 2, "cp-x-kn <p> <n>");
    const auto p = arg(1, "p"), n = arg(2, "n");
    if (is_prime(p) && n >= 2 && n % p == 0)
      throw PreconditionError("cp-x-kn needs p not dividing n: the tensor formula requires locally coprime orders");
    const auto a = cp_catalog(p), b = rank2_catalog(n);
    return {join(t), tensor_global_zeta(a, b), tensor_order(a.order, b.order), {}};
  }
  if (kind == "km-x-kn") {
    expect_args(t, 2, "km-x-kn <m> <n>");
    const auto m = arg(1, "m"), n = arg(2, "n");
    if (m >= 2 && n >= 2 && std::gcd(m, n) != 1)
      throw PreconditionError("km-x-kn needs gcd(m, n) = 1: the tensor formula requires locally coprime orders, but "
                              "gcd(" + std::to_string(m) + ", " + std::to_string(n) + ") = " +
                              std::to_string(std::gcd(m, n)));
    const auto a = rank2_catalog(m), b = rank2_catalog(n);
    return {join(t), tensor_global_zeta(a, b), tensor_order(a.order, b.order), {}};
  }
  if (kind == "zc6") {
    expect_args(t, 0, "zc6");
    return {"zc6", tensor_global_zeta(cp_catalog(3), cp_catalog(2)), order_from_scheme(cyclic_group_scheme(6)),
            "Assembled as C_3 x C_2 with the residue-degree-2 correction at p=2 (Q_2(e3) is unramified of degree 2) "
            "and the squared degree-1 Solomon correction at p=3."};
  }
  if (kind == "rank2-over") {
    expect_args(t, 2, "rank2-over <n> <field>");
    const auto e = rank2_over_catalog(arg(1, "n"), parse_field(t[2]));
    return {join(t), global_zeta(e), e.order, {}};
  }
  throw PreconditionError("unknown construction '" + kind + "' (expected cp, kn, cp-x-kn, km-x-kn, zc6, rank2-over)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Zeta functions of orders from association schemes", "zeta_cli"};
  app.require_subcommand(1);
  std::string format = "csv";

  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out_path, "output path (default: standard output)");
  };

  auto* expand = app.add_subcommand("expand", "Dirichlet coefficients of a construction");
  expand->add_option("construction", cfg.construction, "construction name and parameters")->required();
  expand->add_option("--N", cfg.N, "series bound")->check(CLI::PositiveNumber);
  add_output(expand);

  auto* compare = app.add_subcommand("compare", "formula versus ideal census");
  compare->add_option("construction", cfg.construction, "construction name and parameters")->required();
  compare->add_option("--N", cfg.N, "series bound")->check(CLI::PositiveNumber);
  compare->add_option("--oracle-N", cfg.oracle_N, "census bound (default: N)")->check(CLI::PositiveNumber);
  compare->add_flag("--prime-powers-only", cfg.prime_powers_only, "census at prime powers, rest multiplicative");
  add_output(compare);

  auto* validate_cmd = app.add_subcommand("validate", "check a scheme file");
  validate_cmd->add_option("file", cfg.inputs, "scheme JSON file")->required()->expected(1);

  auto* product = app.add_subcommand("product", "direct product of two scheme files");
  product->add_option("files", cfg.inputs, "two scheme JSON files")->required()->expected(2);
  product->add_option("--out", cfg.out_path, "output path (default: standard output)");

  auto* hey = app.add_subcommand("hey", "local factor of a maximal order from Hey's formula");
  hey->add_option("params", cfg.inputs, "r m k p e f")->required()->expected(6);
  long long hey_K = 8;
  hey->add_option("--K", hey_K, "highest power of u to print")->check(CLI::NonNegativeNumber);
  add_output(hey);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  cfg.format = format == "json" ? Format::Json : Format::Csv;
  if (hey->parsed()) cfg.N = hey_K;

  try {
    if (expand->parsed()) return cmd_expand(cfg, out);
    if (compare->parsed()) return cmd_compare(cfg, out, err);
    if (validate_cmd->parsed()) return cmd_validate(cfg, out);
    if (product->parsed()) return cmd_product(cfg, out);
    return cmd_hey(cfg, out);
  } catch (const SchemeError& e) {
    err << "invalid scheme: " << e.what() << '\n';
    return validate_cmd->parsed() ? kMismatch : kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace zeta::cli
