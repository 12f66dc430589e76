#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "uncond/classify.hpp"
#include "uncond/enumeration.hpp"
#include "uncond/errors.hpp"
#include "uncond/json_io.hpp"
#include "uncond/lemma_lab.hpp"
#include "uncond/unconditionality.hpp"
#include "uncond/witness.hpp"

namespace uncond::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string p, q, r;
  double C = 0.0;
  double B = 0.0;
  std::size_t n = 0;
  std::size_t dim = 0;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::string mode = "exhaustive";
  unsigned threads = 1;
  bool pretty = false;
  std::string out_path;
  std::string input;

  bool cross_validate = false;

  double p_min = 1.0, p_max = 8.0, q_min = 1.0, q_max = 8.0, step = 0.5;
  bool include_inf = false;

  std::string matrix_out;
  std::string matrix_format = "json";
};

struct Output {
  std::string text;
  int code = kOk;
};

Exponent exponent_flag(const std::string& name, const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return Exponent::infinity();
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw UsageError("--" + name + " expects a decimal literal or \"inf\", got \"" + text + "\"");
  }
  return Exponent::finite(v);
}

ExponentTriple triple_flags(const Flags& f) {
  return {exponent_flag("p", f.p), exponent_flag("q", f.q), exponent_flag("r", f.r)};
}

void require_valid(const ExponentTriple& t) {
  if (!t.holder_valid()) {
    throw DomainError("triple " + t.to_string() + " violates 1/r <= 1/p + 1/q (slack " +
                      format_double(t.holder_slack()) + ")");
  }
}

std::size_t max_exhaustive_from_env() {
  const char* raw = std::getenv("UNCOND_NEXH");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxExhaustive;
  std::string_view s(raw);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("UNCOND_NEXH must be a non-negative integer, got \"" + std::string(s) + "\"");
  }
  return v;
}

EnumerationOptions enumeration(const Flags& f) {
  EnumerationOptions opts;
  opts.max_exhaustive = max_exhaustive_from_env();
  opts.threads = std::max(1u, f.threads);
  return opts;
}

Family read_family_json(const Json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("input has no \"") + key + "\" family");
  return family_from_json(j.at(key));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw IoError("write to " + path + " failed");
}

// --pretty: one "key: value" line per scalar leaf.
void summarize(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) summarize(v, prefix.empty() ? k : prefix + "." + k, os);
    return;
  }
  os << std::left << std::setw(28) << prefix << " ";
  if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (flat && j.size() <= 16) {
      os << j.dump();
    } else if (!j.empty() && j.front().is_array()) {
      os << "[" << j.size() << " x " << j.front().size() << "]";
    } else {
      os << "[" << j.size() << " entries]";
    }
    os << "\n";
    if (!flat) {
      for (std::size_t i = 0; i < j.size() && j[i].is_object(); ++i) {
        summarize(j[i], prefix + "[" + std::to_string(i) + "]", os);
      }
    }
    return;
  }
  if (j.is_string()) {
    os << j.get<std::string>() << "\n";
  } else {
    os << j.dump() << "\n";
  }
}

std::string render(const Json& j, bool pretty) {
  if (!pretty) return j.dump() + "\n";
  std::ostringstream os;
  summarize(j, "", os);
  return os.str();
}

std::string render_grid(const std::vector<GridRecord>& grid, bool pretty) {
  if (!pretty) return grid_to_csv(grid);
  std::ostringstream os;
  os << std::left << std::setw(8) << "p" << std::setw(8) << "q" << std::setw(8) << "r" << std::setw(14)
     << "verdict" << std::setw(18) << "clause" << "margin\n";
  for (const auto& g : grid) {
    os << std::setw(8) << g.triple.p.to_string() << std::setw(8) << g.triple.q.to_string() << std::setw(8)
       << g.triple.r.to_string() << std::setw(14) << to_string(g.result.verdict) << std::setw(18)
       << to_string(g.result.clause) << format_double(g.result.margin) << "\n";
  }
  return os.str();
}

void report_critical(std::ostream& err, const std::string& what, const RatioReport& r) {
  err << "CRITICAL FINDING: " << what << " ratio " << format_double(r.ratio) << " exceeds bound "
      << format_double(r.bound) << "\n";
}

Output cmd_classify(const Flags& f) {
  const ExponentTriple t = triple_flags(f);
  require_valid(t);
  if (!f.cross_validate) return {render(to_json(t, classify(t)), f.pretty)};
  CrossValidationOptions opts;
  opts.enumeration = enumeration(f);
  if (f.n > 0) opts.search_n = f.n;
  if (f.dim > 0) opts.search_dim = f.dim;
  const auto report = cross_validate(t, f.budget == 0 ? 64 : f.budget, f.seed, opts);
  return {render(to_json(report), f.pretty)};
}

Output cmd_grid(const Flags& f) {
  const Exponent r = exponent_flag("r", f.r);
  const AxisRange pr{f.p_min, f.p_max, f.include_inf};
  const AxisRange qr{f.q_min, f.q_max, f.include_inf};
  return {render_grid(region_grid(r, pr, qr, f.step, std::max(1u, f.threads)), f.pretty)};
}

Output cmd_witness_hadamard(const Flags& f) {
  const ExponentTriple t = triple_flags(f);
  const auto opts = enumeration(f);
  const WitnessReport report = hadamard_witness(t, f.C, opts);
  if (!f.matrix_out.empty()) {
    if (report.n > kMaxSylvesterLog) {
      throw DomainError("matrix of order 2^" + std::to_string(report.n) + " is too large to write");
    }
    const HadamardMatrix h = sylvester(report.n);
    if (f.matrix_format == "bin") {
      const auto bits = h.pack_bits();
      write_file(f.matrix_out, std::string_view(reinterpret_cast<const char*>(bits.data()), bits.size()));
    } else {
      write_file(f.matrix_out, to_json(h).dump() + "\n");
    }
  }
  return {render(to_json(report), f.pretty)};
}

Output cmd_witness_tail(const Flags& f) {
  const Exponent q = exponent_flag("q", f.q);
  const Exponent r = exponent_flag("r", f.r);
  return {render(to_json(tail_witness(q, r, f.B), q, r, f.B), f.pretty)};
}

Output cmd_quotient(const Flags& f, bool seed_given) {
  const ExponentTriple t = triple_flags(f);
  require_valid(t);
  SubsetMode mode = Exhaustive{};
  if (f.mode == "random") {
    if (!seed_given) throw UsageError("--mode random requires --seed");
    mode = Randomized{f.budget == 0 ? 256 : f.budget, f.seed};
  }
  Family a, x;
  if (!f.input.empty()) {
    const Json j = read_json_file(f.input);
    a = read_family_json(j, "a");
    x = read_family_json(j, "x");
  } else {
    const int n = static_cast<int>(f.n == 0 ? 2 : f.n);
    if (n > kMaxSylvesterLog) throw DomainError("--n above " + std::to_string(kMaxSylvesterLog));
    a = x = sylvester(n).rows_as_family();
  }
  return {render(to_json(unconditionality_quotient(a, x, t, mode, enumeration(f))), f.pretty)};
}

Output cmd_search(const Flags& f) {
  const ExponentTriple t = triple_flags(f);
  require_valid(t);
  const auto res = quotient_lower_bound_search(t, f.n == 0 ? 4 : f.n, f.dim == 0 ? 4 : f.dim,
                                               f.budget == 0 ? 64 : f.budget, f.seed, enumeration(f));
  Json j = to_json(t, classify(t));
  j["best"] = to_json(res.best);
  j["restarts"] = res.restarts;
  j["a"] = to_json(res.a);
  j["x"] = to_json(res.x);
  return {render(j, f.pretty)};
}

Output cmd_lemmas(const Flags& f, std::ostream& err) {
  const std::uint64_t trials = f.budget == 0 ? 1000 : f.budget;
  const std::size_t max_len = f.n == 0 ? 12 : f.n;
  const auto opts = enumeration(f);
  Output result;

  auto summarize_trials = [&](const char* name, auto&& draw) {
    RatioReport worst;
    std::uint64_t violations = 0;
    bool any = false;
    for (std::uint64_t i = 0; i < trials; ++i) {
      std::mt19937_64 rng(derive_seed(f.seed, i));
      const RatioReport r = draw(rng);
      if (r.critical_finding) {
        ++violations;
        report_critical(err, name, r);
      }
      if (!any || r.ratio > worst.ratio) worst = r;
      any = true;
    }
    Json j;
    j["trials"] = trials;
    j["max_ratio"] = worst.ratio;
    j["bound"] = worst.bound;
    j["violations"] = violations;
    if (violations > 0) result.code = kInconsistent;
    return j;
  };

  Json j;
  j["seed"] = f.seed;
  j["real_subset"] = summarize_trials("real subset", [&](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::normal_distribution<double> g;
    std::vector<double> v(len(rng));
    do {
      for (auto& e : v) e = g(rng);
    } while (std::all_of(v.begin(), v.end(), [](double e) { return e == 0.0; }));
    return real_subset_ratio(v);
  });
  const std::vector<double> pair{1.0, -1.0};
  j["real_subset_extremal"] = to_json(real_subset_ratio(pair));

  j["complex_subset"] = summarize_trials("complex subset", [&](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::normal_distribution<double> g;
    std::vector<std::complex<double>> z(len(rng));
    for (auto& e : z) e = {g(rng), g(rng)};
    return complex_subset_ratio(z, opts);
  });
  std::vector<std::complex<double>> roots(64);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    roots[k] = std::polar(1.0, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(roots.size()));
  }
  j["complex_roots_of_unity"] = to_json(complex_subset_ratio(roots, opts));

  const std::vector<std::size_t> dims{1, 2, 5, 16};
  const std::vector<std::pair<Exponent, Exponent>> pairs{
      {Exponent::finite(1.0), Exponent::finite(2.0)},
      {Exponent::finite(1.5), Exponent::finite(3.0)},
      {Exponent::finite(2.0), Exponent::finite(4.0)},
  };
  const SandwichReport sw = sandwich_sweep(dims, pairs, std::max<std::uint64_t>(1, trials / 10), f.seed);
  if (sw.total_violations > 0) {
    err << "CRITICAL FINDING: " << sw.total_violations << " norm sandwich violations\n";
    result.code = kInconsistent;
  }
  j["sandwich"] = to_json(sw);
  result.text = render(j, f.pretty);
  return result;
}

Output cmd_grothendieck(const Flags& f, bool seed_given, std::ostream& err) {
  const auto opts = enumeration(f);
  RatioReport r;
  if (!f.input.empty()) {
    const Json j = read_json_file(f.input);
    r = grothendieck_ratio(j.is_object() ? read_family_json(j, "x") : family_from_json(j), kGrothendieckUpper,
                           opts);
  } else {
    if (!seed_given) throw UsageError("grothendieck search requires --seed (or --input FILE)");
    r = grothendieck_search(f.n == 0 ? 2 : f.n, f.dim == 0 ? 2 : f.dim, f.budget == 0 ? 1000 : f.budget, f.seed,
                            kGrothendieckUpper, opts);
  }
  Output out{render(to_json(r), f.pretty)};
  if (r.critical_finding) {
    report_critical(err, "Grothendieck", r);
    out.code = kInconsistent;
  }
  return out;
}

void error_json(std::ostream& err, std::string_view kind, std::string_view detail) {
  Json j;
  j["error"] = kind;
  j["detail"] = detail;
  err << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Unconditional convergence under coordinatewise multiplication", "uncond"};
  app.require_subcommand(1);

  auto common = [&f](CLI::App* sub) {
    sub->add_option("--threads", f.threads, "Worker threads for enumeration and grids")->check(CLI::Range(1u, 256u));
    sub->add_flag("--pretty", f.pretty, "Human-readable summary instead of JSON/CSV");
    sub->add_option("--out", f.out_path, "Write the result to FILE");
  };
  auto triple = [&f](CLI::App* sub) {
    sub->add_option("--p", f.p, "Multiplier exponent (decimal or inf)")->required();
    sub->add_option("--q", f.q, "Series exponent (decimal or inf)")->required();
    sub->add_option("--r", f.r, "Target exponent (decimal or inf)")->required();
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify a (p,q,r) triple");
  triple(classify_cmd);
  classify_cmd->add_flag("--cross-validate", f.cross_validate, "Back the verdict with witnesses and search");
  auto* classify_seed = classify_cmd->add_option("--seed", f.seed, "Seed for the cross-validation search");
  classify_cmd->add_option("--budget", f.budget, "Search restarts for cross-validation");
  classify_cmd->add_option("--n", f.n, "Family size for the cross-validation search");
  classify_cmd->add_option("--dim", f.dim, "Dimension for the cross-validation search");
  common(classify_cmd);

  auto* grid_cmd = app.add_subcommand("grid", "Classify the (p,q) lattice at fixed r as CSV");
  grid_cmd->add_option("--r", f.r, "Target exponent (decimal or inf)")->required();
  grid_cmd->add_option("--p-min", f.p_min, "Smallest p");
  grid_cmd->add_option("--p-max", f.p_max, "Largest finite p");
  grid_cmd->add_option("--q-min", f.q_min, "Smallest q");
  grid_cmd->add_option("--q-max", f.q_max, "Largest finite q");
  grid_cmd->add_option("--step", f.step, "Lattice step");
  grid_cmd->add_flag("--include-inf", f.include_inf, "Append inf to both axes");
  common(grid_cmd);

  auto* hadamard_cmd = app.add_subcommand("witness-hadamard", "Sylvester counterexample family for a constant C");
  triple(hadamard_cmd);
  hadamard_cmd->add_option("--C", f.C, "Constant to beat")->required();
  hadamard_cmd->add_option("--matrix-out", f.matrix_out, "Also write the Sylvester matrix to FILE");
  hadamard_cmd->add_option("--matrix-format", f.matrix_format, "Matrix file format")
      ->check(CLI::IsMember({"json", "bin"}));
  common(hadamard_cmd);

  auto* tail_cmd = app.add_subcommand("witness-tail", "Power sequence whose partial l_r norm reaches B");
  tail_cmd->add_option("--q", f.q, "Series exponent (decimal or inf)")->required();
  tail_cmd->add_option("--r", f.r, "Target exponent (decimal or inf)")->required();
  tail_cmd->add_option("--B", f.B, "Norm to reach")->required();
  common(tail_cmd);

  auto* quotient_cmd = app.add_subcommand("quotient", "Unconditionality quotient of a family");
  triple(quotient_cmd);
  quotient_cmd->add_option("--input", f.input, "JSON file {\"a\": [[...]], \"x\": [[...]]}");
  quotient_cmd->add_option("--n", f.n, "Use the Sylvester family of order 2^n (default 2)");
  quotient_cmd->add_option("--mode", f.mode, "Subset maximization")->check(CLI::IsMember({"exhaustive", "random"}));
  quotient_cmd->add_option("--budget", f.budget, "Restarts in random mode");
  auto* quotient_seed = quotient_cmd->add_option("--seed", f.seed, "Seed for random mode");
  common(quotient_cmd);

  auto* search_cmd = app.add_subcommand("search", "Seeded search for large quotients");
  triple(search_cmd);
  search_cmd->add_option("--n", f.n, "Family size (default 4)");
  search_cmd->add_option("--dim", f.dim, "Vector dimension (default 4)");
  search_cmd->add_option("--budget", f.budget, "Restarts (default 64)");
  search_cmd->add_option("--seed", f.seed, "Seed")->required();
  common(search_cmd);

  auto* lemmas_cmd = app.add_subcommand("lemmas", "Randomized checks of the subset-sum and sandwich inequalities");
  lemmas_cmd->add_option("--budget", f.budget, "Random sequences per check (default 1000)");
  lemmas_cmd->add_option("--n", f.n, "Longest random sequence (default 12)");
  lemmas_cmd->add_option("--seed", f.seed, "Seed")->required();
  common(lemmas_cmd);

  auto* groth_cmd = app.add_subcommand("grothendieck", "Grothendieck ratio of a family, or a seeded search");
  groth_cmd->add_option("--input", f.input, "JSON file with an array of vectors (or {\"x\": ...})");
  groth_cmd->add_option("--n", f.n, "Family size for the search (default 2)");
  groth_cmd->add_option("--dim", f.dim, "Dimension for the search (default 2)");
  groth_cmd->add_option("--budget", f.budget, "Search restarts (default 1000)");
  auto* groth_seed = groth_cmd->add_option("--seed", f.seed, "Seed for the search");
  common(groth_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    error_json(err, "usage", e.what());
    return kUsage;
  }

  try {
    if (f.cross_validate && classify_seed->count() == 0) throw UsageError("--cross-validate requires --seed");
    Output result;
    if (*classify_cmd) {
      result = cmd_classify(f);
    } else if (*grid_cmd) {
      result = cmd_grid(f);
    } else if (*hadamard_cmd) {
      result = cmd_witness_hadamard(f);
    } else if (*tail_cmd) {
      result = cmd_witness_tail(f);
    } else if (*quotient_cmd) {
      result = cmd_quotient(f, quotient_seed->count() > 0);
    } else if (*search_cmd) {
      result = cmd_search(f);
    } else if (*lemmas_cmd) {
      result = cmd_lemmas(f, err);
    } else {
      result = cmd_grothendieck(f, groth_seed->count() > 0, err);
    }
    if (f.out_path.empty()) {
      out << result.text;
    } else {
      write_file(f.out_path, result.text);
    }
    return result.code;
  } catch (const UsageError& e) {
    error_json(err, "usage", e.what());
    return kUsage;
  } catch (const IoError& e) {
    error_json(err, "io", e.what());
    return kUsage;
  } catch (const ScaleLimitError& e) {
    error_json(err, "scale_limit", e.what());
    return kDomain;
  } catch (const DomainError& e) {
    error_json(err, "domain", e.what());
    return kDomain;
  } catch (const InconsistencyError& e) {
    error_json(err, "inconsistency", e.what());
    return kInconsistent;
  }
}

}  // namespace uncond::cli
