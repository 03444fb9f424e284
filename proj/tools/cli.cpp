#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "udesign/udesign.hpp"

namespace udesign::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string out_file;
  bool sparse = false;
  bool json = false;
  bool force = false;
};

Prime make_prime(std::uint64_t p) {
  try {
    return Prime(p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

TwoPartPartition make_partition(std::uint64_t a, std::uint64_t b) {
  try {
    return TwoPartPartition(a, b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void guard(std::uint64_t v, std::uint64_t b, bool force) {
  if (v > kMaxGround) throw UsageError("v = " + std::to_string(v) + " exceeds the supported 62");
  if (b < 1 || b > v) throw UsageError("block size must satisfy 1 <= b <= v");
  if (!force && binomial(v, b) > kGuardrail) {
    throw UsageError("C(v,b) = " + std::to_string(binomial(v, b)) +
                     " exceeds 10^6; pass --force to proceed");
  }
}

json spectrum_json(const Spectrum& s) {
  json arr = json::array();
  for (const auto& c : s.coeffs) arr.push_back(c ? json(*c) : json(nullptr));
  return arr;
}

std::string set_string(const std::vector<std::uint32_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i > 0 ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

std::string vector_string(const FpVector& xs) {
  return Spectrum::from_values(xs).to_string();
}

// Writes the design to --out (or stdout) and reports its spectrum.
int emit_design(const Design& u, const OutputOptions& opt, std::ostream& out, std::ostream& err) {
  const DesignFormat format = opt.sparse ? DesignFormat::Sparse : DesignFormat::Dense;
  const Spectrum s = spectrum(u);
  const bool universal = s.fully_defined();
  if (!opt.out_file.empty()) {
    std::ofstream file(opt.out_file, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + opt.out_file + "' for writing");
    write_design(file, u, format);
  }
  if (opt.json) {
    json doc{{"v", u.ground()},        {"b", u.block()},     {"p", u.prime().value()},
             {"spectrum", spectrum_json(s)}, {"universal", universal}};
    doc["file"] = opt.out_file.empty() ? json(nullptr) : json(opt.out_file);
    if (opt.out_file.empty()) doc["design"] = format_design(u, format);
    out << doc.dump(2) << '\n';
    return kSuccess;
  }
  if (opt.out_file.empty()) {
    write_design(out, u, format);
    err << "spectrum " << s.to_string() << '\n';
  } else {
    out << "wrote " << opt.out_file << '\n' << "spectrum " << s.to_string() << '\n';
  }
  return kSuccess;
}

void add_output_options(CLI::App* cmd, OutputOptions& opt) {
  cmd->add_option("--out", opt.out_file, "Write the design file here instead of stdout");
  cmd->add_flag("--sparse", opt.sparse, "Write the sparse file form");
  cmd->add_flag("--json", opt.json, "Machine-readable output");
  cmd->add_flag("--force", opt.force, "Allow C(v,b) above 10^6");
}

int do_classify(std::uint64_t a, std::uint64_t b, std::uint64_t p_raw, bool as_json,
                std::ostream& out) {
  const Prime p = make_prime(p_raw);
  const ClassifyReport r = classify_report(make_partition(a, b), p);
  if (as_json) {
    json doc{{"a", a},
             {"b", b},
             {"p", p.value()},
             {"class", r.cls.kind == PartitionKind::James     ? "James"
                       : r.cls.kind == PartitionKind::Pointed ? "Pointed"
                                                              : "Generic"},
             {"b_hat", r.decomposition.b_hat},
             {"alpha", r.decomposition.alpha},
             {"beta", r.decomposition.beta},
             {"X", r.poset.elements},
             {"components", r.poset.components},
             {"relation", r.poset.relation},
             {"dim", r.predicted_dimension}};
    doc["canonical_spectrum"] =
        r.canonical_spectrum ? spectrum_json(*r.canonical_spectrum) : json(nullptr);
    out << doc.dump(2) << '\n';
    return kSuccess;
  }
  out << to_string(r.cls) << "; X=" << set_string(r.poset.elements)
      << "; components=" << r.poset.components.size() << "; dim=" << r.predicted_dimension
      << '\n';
  out << "b = " << r.decomposition.alpha << "*" << p.value() << "^" << r.decomposition.beta
      << " + " << r.decomposition.b_hat << '\n';
  for (const auto& c : r.poset.components) out << "component " << set_string(c) << '\n';
  if (r.canonical_spectrum) out << "canonical spectrum " << r.canonical_spectrum->to_string() << '\n';
  return kSuccess;
}

int do_verify(const std::string& path, std::optional<std::uint32_t> level, bool as_json,
              std::ostream& out) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  const Design u = read_design(file);

  std::vector<std::uint32_t> levels;
  if (level) {
    if (*level >= u.block()) throw UsageError("--level must be below b");
    levels.push_back(*level);
  } else {
    for (std::uint32_t j = 0; j < u.block(); ++j) levels.push_back(j);
  }
  json coeffs = json::object();
  std::vector<std::uint32_t> failing;
  std::ostringstream text;
  for (std::uint32_t j : levels) {
    const auto mu = level_coefficient(u, j);
    coeffs[std::to_string(j)] = mu ? json(*mu) : json(nullptr);
    if (!mu) failing.push_back(j);
    text << "level " << j << ": " << (mu ? std::to_string(*mu) : "non-constant") << '\n';
  }
  const bool ok = failing.empty();
  if (as_json) {
    out << json{{"v", u.ground()},     {"b", u.block()},           {"p", u.prime().value()},
                {"coefficients", coeffs}, {"failing_levels", failing}, {"universal", ok}}
               .dump(2)
        << '\n';
  } else {
    out << "design v=" << u.ground() << " b=" << u.block() << " p=" << u.prime().value() << '\n'
        << text.str();
    if (level) {
      out << (ok ? "constant" : "non-constant") << " at level " << *level << '\n';
    } else {
      out << "universal: " << (ok ? "yes" : "no") << '\n';
    }
  }
  return ok ? kSuccess : kNegative;
}

int do_solve(std::uint64_t v, std::uint64_t b, std::uint64_t p_raw,
             const std::vector<std::int64_t>& mus, const OutputOptions& opt, std::ostream& out,
             std::ostream& err) {
  const Prime p = make_prime(p_raw);
  guard(v, b, opt.force);
  if (mus.size() != b) {
    throw UsageError("solve needs exactly b = " + std::to_string(b) + " coefficients");
  }
  Spectrum target;
  for (std::int64_t mu : mus) target.coeffs.emplace_back(p.reduce(mu));
  const auto u = solve_design(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(b), p,
                              target);
  if (!u) {
    if (opt.json) {
      out << json{{"v", v}, {"b", b}, {"p", p.value()}, {"spectrum", spectrum_json(target)},
                  {"feasible", false}}
                 .dump(2)
          << '\n';
    } else {
      out << "infeasible\n";
    }
    return kNegative;
  }
  return emit_design(*u, opt, out, err);
}

int do_space(std::uint64_t a, std::uint64_t b, std::uint64_t p_raw, bool as_json, bool force,
             std::ostream& out) {
  const Prime p = make_prime(p_raw);
  const TwoPartPartition part = make_partition(a, b);
  guard(part.v(), b, force);
  const auto basis = coefficient_space(static_cast<std::uint32_t>(part.v()),
                                       static_cast<std::uint32_t>(b), p);
  if (as_json) {
    out << json{{"a", a}, {"b", b}, {"p", p.value()}, {"dim", basis.size()}, {"basis", basis}}
               .dump(2)
        << '\n';
    return kSuccess;
  }
  out << "dim=" << basis.size() << '\n';
  for (const auto& s : basis) out << vector_string(s) << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify and classify universal p-ary designs", "udesign"};
  app.require_subcommand(1);

  // classify
  std::uint64_t a = 0, b = 0, v = 0, p = 0;
  bool as_json = false, force = false;
  auto* classify_cmd = app.add_subcommand("classify", "Classify the partition (a, b) at p");
  classify_cmd->add_option("a", a)->required();
  classify_cmd->add_option("b", b)->required();
  classify_cmd->add_option("p", p)->required();
  classify_cmd->add_flag("--json", as_json);

  // construct <kind>
  OutputOptions opt;
  auto* construct_cmd = app.add_subcommand("construct", "Build one of the known designs");
  construct_cmd->require_subcommand(1);

  std::int64_t k = 1;
  auto* constant_cmd = construct_cmd->add_subcommand("constant", "Constant design on [v]");
  constant_cmd->add_option("v", v)->required();
  constant_cmd->add_option("b", b)->required();
  constant_cmd->add_option("p", p)->required();
  constant_cmd->add_option("--k", k, "Value on every block")->capture_default_str();
  add_output_options(constant_cmd, opt);

  std::string x_text, y_text, f_text;
  auto* null_cmd = construct_cmd->add_subcommand("james-null", "Signed null design from X, Y, f");
  null_cmd->add_option("v", v)->required();
  null_cmd->add_option("b", b)->required();
  null_cmd->add_option("p", p)->required();
  null_cmd->add_option("--x", x_text, "X as 1,2,...")->required();
  null_cmd->add_option("--y", y_text, "Y as 3,4,...")->required();
  null_cmd->add_option("--f", f_text, "Images of X's elements in order (default: order-preserving)");
  add_output_options(null_cmd, opt);

  std::uint32_t beta = 0;
  auto* power_cmd = construct_cmd->add_subcommand("prime-power", "Design for (a, p^beta)");
  power_cmd->add_option("a,--a", a)->required();
  power_cmd->add_option("beta,--beta", beta)->required();
  power_cmd->add_option("p,--p", p)->required();
  add_output_options(power_cmd, opt);

  auto* pointed_cmd = construct_cmd->add_subcommand("pointed", "Pointed-partition design");
  pointed_cmd->add_option("a", a)->required();
  pointed_cmd->add_option("b", b)->required();
  pointed_cmd->add_option("p", p)->required();
  add_output_options(pointed_cmd, opt);

  auto* canonical_cmd =
      construct_cmd->add_subcommand("james-canonical", "Realise the James canonical spectrum");
  canonical_cmd->add_option("a", a)->required();
  canonical_cmd->add_option("b", b)->required();
  canonical_cmd->add_option("p", p)->required();
  add_output_options(canonical_cmd, opt);

  // verify
  std::string path;
  std::optional<std::uint32_t> level;
  auto* verify_cmd = app.add_subcommand("verify", "Report the spectrum of a design file");
  verify_cmd->add_option("file", path)->required();
  verify_cmd->add_option("--level", level, "Check a single level");
  verify_cmd->add_flag("--json", as_json);

  // solve
  std::vector<std::int64_t> mus;
  auto* solve_cmd = app.add_subcommand("solve", "Find a design with a given spectrum");
  solve_cmd->add_option("v", v)->required();
  solve_cmd->add_option("b", b)->required();
  solve_cmd->add_option("p", p)->required();
  solve_cmd->add_option("mu", mus, "mu_0 ... mu_{b-1}");
  add_output_options(solve_cmd, opt);

  // space
  auto* space_cmd = app.add_subcommand("space", "Basis of achievable spectra for (a, b)");
  space_cmd->add_option("a", a)->required();
  space_cmd->add_option("b", b)->required();
  space_cmd->add_option("p", p)->required();
  space_cmd->add_flag("--json", as_json);
  space_cmd->add_flag("--force", force);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*classify_cmd) return do_classify(a, b, p, as_json, out);
    if (*verify_cmd) return do_verify(path, level, as_json, out);
    if (*solve_cmd) return do_solve(v, b, p, mus, opt, out, err);
    if (*space_cmd) return do_space(a, b, p, as_json, force, out);

    const Prime prime = make_prime(p);
    if (*constant_cmd) {
      guard(v, b, opt.force);
      return emit_design(constant_design(static_cast<std::uint32_t>(v),
                                         static_cast<std::uint32_t>(b), prime, prime.reduce(k)),
                         opt, out, err);
    }
    if (*null_cmd) {
      guard(v, b, opt.force);
      const auto vv = static_cast<std::uint32_t>(v);
      const Subset xs = Subset::parse(x_text, vv);
      const Subset ys = Subset::parse(y_text, vv);
      if (xs.size() != b || ys.size() != b) throw UsageError("--x and --y need exactly b elements");
      std::vector<std::uint32_t> f(ys.elements().begin(), ys.elements().end());
      if (!f_text.empty()) {
        f.clear();
        std::stringstream ss(f_text);
        for (std::string item; std::getline(ss, item, ',');) f.push_back(static_cast<std::uint32_t>(std::stoul(item)));
      }
      return emit_design(james_null(vv, xs, ys, f, prime), opt, out, err);
    }
    if (*power_cmd) {
      guard(a + prime_power(prime, beta), prime_power(prime, beta), opt.force);
      return emit_design(prime_power_design(a, beta, prime), opt, out, err);
    }
    if (*pointed_cmd) {
      guard(a + b, b, opt.force);
      return emit_design(pointed_design(a, b, prime), opt, out, err);
    }
    if (*canonical_cmd) {
      guard(a + b, b, opt.force);
      const Spectrum target = james_canonical_spectrum(a, b, prime);
      const auto u = solve_design(static_cast<std::uint32_t>(a + b),
                                  static_cast<std::uint32_t>(b), prime, target);
      if (!u) {
        err << "canonical spectrum " << target.to_string() << " is not realisable\n";
        return kNegative;
      }
      return emit_design(*u, opt, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace udesign::cli
