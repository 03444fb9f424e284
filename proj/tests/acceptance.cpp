// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "udesign/udesign.hpp"

namespace {

using namespace udesign;

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  // Returns an empty string on success, else a description of the first failure.
  std::function<std::string()> check;
};

template <typename... Ts>
std::string describe(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::vector<std::uint32_t> levels_below(std::uint32_t b) {
  std::vector<std::uint32_t> out(b);
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

std::string binomial_oracles() {
  const auto tri = oracle::pascal(300);
  for (std::uint32_t pv : {2u, 3u, 5u, 7u}) {
    const Prime p(pv);
    for (std::uint64_t n = 0; n <= 300; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        const auto expected_mod = static_cast<Residue>(tri[n][k] % pv);
        if (binom_mod(n, k, p) != expected_mod) return describe("binom_mod(", n, ",", k, ",", pv, ")");
        if (binom_valuation(n, k, p) != oracle::big_valuation(tri[n][k], pv)) {
          return describe("binom_valuation(", n, ",", k, ",", pv, ")");
        }
      }
    }
  }
  return {};
}

std::string divisibility_sweep() {
  const auto tri = oracle::pascal(160);
  for (std::uint32_t pv : {2u, 3u, 5u}) {
    const Prime p(pv);
    for (std::uint64_t a = 0; a <= 100; ++a) {
      for (std::uint64_t b = 1; b <= 60; ++b) {
        if (divisibility_run(a, b, p) != oracle::divisibility_loop(a, b, pv, tri)) {
          return describe("divisibility_run(", a, ",", b, ",", pv, ")");
        }
      }
    }
  }
  return {};
}

std::string inclusion_identity() {
  for (std::uint32_t pv : {2u, 3u}) {
    const Prime p(pv);
    for (std::uint32_t v = 0; v <= 9; ++v) {
      for (std::uint32_t b = 0; b <= v; ++b) {
        for (std::uint32_t i = 0; i <= b; ++i) {
          const FpMatrix upper = inclusion_matrix(i, b, v, p).entries;
          for (std::uint32_t j = 0; j <= i; ++j) {
            const FpMatrix lhs = inclusion_matrix(j, i, v, p).entries * upper;
            const FpMatrix rhs = inclusion_matrix(j, b, v, p).entries.scaled(binom_mod(b - j, i - j, p));
            if (!(lhs == rhs)) return describe("v=", v, " b=", b, " i=", i, " j=", j, " p=", pv);
          }
        }
      }
    }
  }
  return {};
}

// Calls fn(X, Y, f) for every pair of disjoint b-subsets and every bijection.
void for_each_null_generator(std::uint32_t v, std::uint32_t b,
                             const std::function<void(const Subset&, const Subset&,
                                                      const std::vector<std::uint32_t>&)>& fn) {
  for_each_subset(v, b, [&](std::span<const std::uint32_t> xs) {
    const Subset x({xs.begin(), xs.end()}, v);
    for_each_subset(v, b, [&](std::span<const std::uint32_t> ys) {
      const Subset y({ys.begin(), ys.end()}, v);
      if (!x.disjoint_from(y)) return;
      std::vector<std::uint32_t> f(ys.begin(), ys.end());
      do {
        fn(x, y, f);
      } while (std::next_permutation(f.begin(), f.end()));
    });
  });
}

std::string null_designs() {
  for (std::uint32_t pv : {2u, 3u}) {
    const Prime p(pv);
    for (std::uint32_t v = 2; v <= 10; ++v) {
      for (std::uint32_t b = 1; 2 * b <= v; ++b) {
        const bool span_check = v <= 8 && b <= 3;
        std::vector<FpVector> generated;
        std::string failure;
        for_each_null_generator(v, b, [&](const Subset& x, const Subset& y,
                                          const std::vector<std::uint32_t>& f) {
          if (!failure.empty()) return;
          const Design u = james_null(v, x, y, f, p);
          const Spectrum s = spectrum(u);
          if (!s.fully_defined() || !s.is_null()) {
            failure = describe("non-null output v=", v, " X=", x.to_string(), " Y=", y.to_string(),
                               " p=", pv);
          }
          if (span_check) generated.emplace_back(u.values().begin(), u.values().end());
        });
        if (!failure.empty()) return failure;
        if (!span_check) continue;
        // Every generator lies in the null-universal space, so equal rank means equal span.
        const std::size_t null_dim = nullspace(stacked_inclusion(b, levels_below(b), v, p)).size();
        const std::size_t span_dim = rank(matrix_from_vectors(generated, binomial(v, b), p));
        const std::size_t expected = binomial(v, b) - binomial(v, b - 1);
        if (null_dim != expected || span_dim != expected) {
          return describe("v=", v, " b=", b, " p=", pv, ": null space ", null_dim, ", span ", span_dim,
                          ", expected ", expected);
        }
        if (v == 4 && b == 2 && expected != 2) return "v=4, b=2 dimension is not 2";
      }
    }
  }
  return {};
}

std::string classification_sweep() {
  for (std::uint32_t pv : {2u, 3u}) {
    const Prime p(pv);
    for (std::uint32_t v = 2; v <= 11; ++v) {
      for (std::uint32_t b = 1; 2 * b <= v; ++b) {
        const TwoPartPartition part(v - b, b);
        const bool pointed = classify(part, p).kind == PartitionKind::Pointed;
        const auto basis = coefficient_space(v, b, p);
        const auto where = describe(" for (", v - b, ",", b, ") p=", pv);
        if (basis.size() != (pointed ? 2u : 1u)) return describe("dimension ", basis.size(), where);
        const SupportPoset poset = support_poset(part, p);
        if (poset.components.size() != predicted_component_count(part, p) ||
            poset.components.size() != (pointed ? 2u : 1u)) {
          return describe("component count ", poset.components.size(), where);
        }
        for (const auto& mu : basis) {
          for (std::uint32_t j = 0; j < b; ++j) {
            if (mu[j] != 0 && !poset.contains(j)) return describe("support outside X at ", j, where);
          }
          for (auto [i, j] : poset.relation) {
            if (propagate_coefficient(v, b, i, j, mu[i], p) != mu[j]) {
              return describe("ratio law at ", i, " >= ", j, where);
            }
          }
        }
      }
    }
  }
  return {};
}

std::string constructions() {
  for (std::uint32_t pv : {2u, 3u, 5u}) {
    const Prime p(pv);
    for (std::uint32_t v = 2; v <= 11; ++v) {
      for (std::uint32_t b = 1; 2 * b <= v; ++b) {
        for (Residue k = 1; k < pv; ++k) {
          const Design u = constant_design(v, b, p, k);
          const auto brute = oracle::brute_spectrum(u);
          bool null = true;
          for (std::uint32_t j = 0; j < b; ++j) {
            const Residue expected = p.mul(k, binom_mod(v - j, b - j, p));
            if (brute[j] != std::optional<std::uint64_t>(expected)) {
              return describe("constant spectrum v=", v, " b=", b, " p=", pv);
            }
            null = null && expected == 0;
          }
          const bool james = classify(TwoPartPartition(v - b, b), p).kind == PartitionKind::James;
          if (null != james) return describe("constant null/James mismatch v=", v, " b=", b, " p=", pv);
        }
      }
    }
  }
  const Prime two(2);
  auto only_level = [](std::uint32_t b, std::uint32_t level) {
    FpVector mus(b, 0);
    mus[level] = 1;
    return Spectrum::from_values(mus);
  };
  for (auto [a, beta] : {std::pair<std::uint64_t, std::uint32_t>{2, 1}, {5, 2}}) {
    const Design u = prime_power_design(a, beta, two);
    if (!oracle::same_spectrum(u, only_level(u.block(), 0))) return describe("prime_power_design a=", a);
  }
  for (std::uint64_t a : {5u, 9u}) {
    const Design u = pointed_design(a, 5, two);
    if (!oracle::same_spectrum(u, only_level(5, 1))) return describe("pointed_design a=", a);
  }
  for (auto [a, b, pv] : {std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>{3, 2, 2},
                          {7, 4, 2}, {8, 6, 3}}) {
    const Spectrum target = james_canonical_spectrum(a, b, Prime(pv));
    const auto u = solve_design(a + b, b, Prime(pv), target);
    if (!u || !oracle::same_spectrum(*u, target)) {
      return describe("james canonical (", a, ",", b, ") p=", pv, " not realized");
    }
  }
  return {};
}

std::string fast_universality() {
  std::mt19937_64 rng(20240601);
  std::vector<Design> constructed;
  for (std::uint32_t pv : {2u, 3u}) {
    const Prime p(pv);
    for (std::uint32_t v = 1; v <= 10; ++v) {
      for (std::uint32_t b = 1; b <= v; ++b) {
        for (int trial = 0; trial < 1000; ++trial) {
          const Design u = oracle::random_design(v, b, p, rng);
          if (is_universal_fast(u) != is_universal(u)) {
            return describe("random design v=", v, " b=", b, " p=", pv);
          }
        }
        constructed.push_back(constant_design(v, b, p, 1));
        if (2 * b <= v) {
          constructed.push_back(james_null(v, Subset::range(1, b, v), Subset::range(b + 1, 2 * b, v), p));
        }
      }
    }
  }
  const Prime two(2);
  constructed.push_back(prime_power_design(2, 1, two));
  constructed.push_back(prime_power_design(5, 2, two));
  constructed.push_back(pointed_design(5, 5, two));
  constructed.push_back(pointed_design(9, 5, two));
  constructed.push_back(*solve_design(11, 4, two, james_canonical_spectrum(7, 4, two)));
  for (const auto& u : constructed) {
    if (!is_universal(u) || !is_universal_fast(u)) {
      return describe("constructed design v=", u.ground(), " b=", u.block(), " p=", u.prime().value());
    }
  }
  return {};
}

std::string wilson_agreement() {
  for (std::uint32_t pv : {2u, 3u}) {
    const Prime p(pv);
    for (std::uint32_t v = 1; v <= 9; ++v) {
      for (std::uint32_t t = 0; 2 * t <= v; ++t) {
        for (std::uint32_t b = std::max(t, 1u); b + t <= v; ++b) {
          const auto u = solve_level_design(v, b, t, 1, p);
          if (u.has_value() != wilson_exists(v, b, t, p)) {
            return describe("wilson v=", v, " b=", b, " t=", t, " p=", pv);
          }
          if (!u) continue;
          const FpVector level = hat(*u, t);
          if (!std::all_of(level.begin(), level.end(), [](Residue r) { return r == 1; })) {
            return describe("solver level mismatch v=", v, " b=", b, " t=", t, " p=", pv);
          }
        }
      }
    }
    for (std::uint64_t a = 1; a <= 12; ++a) {
      for (std::uint64_t b = 1; b <= a; ++b) {
        for (std::uint32_t l = 0; l <= p_length(b, p); ++l) {
          if (cor_nonnull_prime_power_level(a, b, l, p) !=
              wilson_exists(a + b, b, b - prime_power(p, l), p)) {
            return describe("prime-power level (", a, ",", b, ") l=", l, " p=", pv);
          }
        }
      }
    }
  }
  return {};
}

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str();
  return code;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string cli_contract() {
  const auto dir = std::filesystem::temp_directory_path() / "udesign_acceptance";
  std::filesystem::create_directories(dir);
  struct Cleanup {
    std::filesystem::path d;
    ~Cleanup() { std::filesystem::remove_all(d); }
  } cleanup{dir};

  const std::vector<std::vector<std::string>> commands{
      {"construct", "constant", "5", "2", "3", "--k", "1"},
      {"construct", "james-null", "6", "3", "2", "--x", "1,2,3", "--y", "4,5,6"},
      {"construct", "prime-power", "--a", "2", "--beta", "1", "--p", "2"},
      {"construct", "pointed", "5", "5", "2"},
      {"construct", "james-canonical", "3", "2", "2"},
  };
  for (std::size_t n = 0; n < commands.size(); ++n) {
    const std::string file = (dir / ("design" + std::to_string(n) + ".txt")).string();
    auto args = commands[n];
    std::string direct;
    if (run_cli(args, &direct) != cli::kSuccess) return describe("construct failed: ", args[1]);
    args.insert(args.end(), {"--out", file});
    if (run_cli(args) != cli::kSuccess) return describe("construct --out failed: ", args[1]);
    const std::string written = slurp(file);
    std::ifstream in(file, std::ios::binary);
    if (written != direct || format_design(read_design(in)) != written) {
      return describe("round trip differs: ", args[1]);
    }
    if (run_cli({"verify", file}) != cli::kSuccess) return describe("verify of ", args[1], " not 0");
  }

  const std::string corrupt = (dir / "corrupt.txt").string();
  {
    std::ifstream in((dir / "design1.txt").string(), std::ios::binary);
    Design u = read_design(in);
    u.set_rank(0, u[0] + 1);
    std::ofstream o(corrupt, std::ios::binary);
    write_design(o, u);
  }
  std::string report;
  if (run_cli({"verify", corrupt}, &report) != cli::kNegative) return "corrupted design: exit code not 1";
  if (report.find("non-constant") == std::string::npos) return "corrupted design: no failing level";

  const std::string zero = (dir / "zero.txt").string();
  {
    std::ofstream o(zero, std::ios::binary);
    write_design(o, Design(5, 2, Prime(3)));
  }
  if (run_cli({"verify", zero}, &report) != cli::kSuccess) return "zero design: exit code not 0";
  if (report.find("level 0: 0\nlevel 1: 0\n") == std::string::npos) return "zero design: spectrum not zero";
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "binomial residues and valuations vs big integers, n <= 300", 10, binomial_oracles},
      {2, "divisibility run vs exhaustive loop, a <= 100, b <= 60", 10, divisibility_sweep},
      {3, "inclusion matrix product identity, v <= 9", 60, inclusion_identity},
      {4, "null designs: zero spectra (v <= 10), span = null space (v <= 8, b <= 3)", 120, null_designs},
      {5, "classification sweep, a + b <= 11", 300, classification_sweep},
      {6, "constant, prime-power, pointed and canonical constructions", 120, constructions},
      {7, "fast universality test agrees with full test", 60, fast_universality},
      {8, "Wilson criterion vs solver, prime-power level criterion", 180, wilson_agreement},
      {9, "CLI round trip and verify exit codes", 30, cli_contract},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = c.check();
    } catch (const std::exception& e) {
      failure = describe("exception: ", e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && seconds > c.limit_seconds) failure = "time limit exceeded";
    const bool pass = failure.empty();
    failures += pass ? 0 : 1;
    std::printf("criterion %d: %s  %.2fs / %.0fs  %s%s%s\n", c.id, pass ? "PASS" : "FAIL", seconds,
                c.limit_seconds, c.title, pass ? "" : "  -- ", failure.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
