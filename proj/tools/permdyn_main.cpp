// Command-line front end: every verification and experiment of the toolkit
// as a subcommand emitting machine-readable reports.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "permdyn/bch.hpp"
#include "permdyn/chain.hpp"
#include "permdyn/cogwheel.hpp"
#include "permdyn/operator_polynomial.hpp"
#include "permdyn/quantum_lab.hpp"
#include "permdyn/serialize.hpp"
#include "permdyn/spin_config.hpp"

namespace {

using nlohmann::json;
using namespace permdyn;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  int spins = 8;
  double T = 1.0;
  double tol_op = 1e-10;   // operator identities
  double tol_alg = 1e-12;  // algebraic round-trips
  int dense_cap = 14;
  std::uint64_t seed = 1;
  std::string output;  // empty = stdout

  void validate_spins() const {
    if (spins < 4 || spins % 2 != 0) {
      throw std::invalid_argument("--spins must be even and >= 4");
    }
  }
  void validate() const {
    validate_spins();
    if (!(T > 0.0)) throw std::invalid_argument("--T must be positive");
    if (!(tol_op > 0.0) || !(tol_alg > 0.0)) {
      throw std::invalid_argument("tolerances must be positive");
    }
  }
  int S() const { return spins / 2; }
};

class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int default_dense_cap() {
  if (const char* env = std::getenv("PERMDYN_DENSE_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("PERMDYN_DENSE_CAP must be an integer");
    }
  }
  return 14;
}

SpinConfig parse_state(const RunConfig& config, const std::string& text) {
  const SpinConfig state = SpinConfig::from_string(text);
  if (state.spins() != config.spins) {
    throw std::invalid_argument("state has " + std::to_string(state.spins()) +
                                " spins but --spins is " +
                                std::to_string(config.spins));
  }
  return state;
}

OperatorPolynomial make_poly(const RunConfig& config, const std::string& form) {
  if (form == "exact") return synthesize_exact(config.S(), config.T);
  if (form == "reduced") return synthesize_reduced(config.S(), config.T);
  if (form == "approx") return approx_hamiltonian(config.S(), config.T);
  throw std::invalid_argument("unknown Hamiltonian form: " + form);
}

json verify_entry(const std::string& check, int spins, double residual,
                  double tolerance) {
  return {{"check", check},
          {"spins", spins},
          {"residual", residual},
          {"tolerance", tolerance},
          {"pass", residual <= tolerance}};
}

int run_evolve(const RunConfig& config, const std::string& state_text,
               long steps, bool inverse) {
  config.validate();
  const ChainModel chain(config.S());
  SpinConfig state = parse_state(config, state_text);
  OutputSink sink(config.output);
  const Direction dir = inverse ? Direction::Inverse : Direction::Forward;
  for (long i = 0; i < steps; ++i) {
    state = chain.apply_update(state, 1, dir);
    sink.stream() << state.str() << "\n";
  }
  return kExitPass;
}

int run_orbits(const RunConfig& config, int cap) {
  config.validate();
  const ChainModel chain(config.S());
  const auto orbits = chain.enumerate_orbits(cap);
  OutputSink sink(config.output);
  sink.stream() << orbit_report(orbits, config.spins).dump() << "\n";
  return kExitPass;
}

int run_hamiltonian(const RunConfig& config, const std::string& form) {
  config.validate();
  OutputSink sink(config.output);
  sink.stream() << poly_to_json(make_poly(config, form)).dump() << "\n";
  return kExitPass;
}

int run_spectrum(const RunConfig& config, int cogwheel_n,
                 const std::string& form, const std::string& format) {
  OutputSink sink(config.output);
  auto& out = sink.stream();
  if (cogwheel_n > 0) {
    const auto energies = cogwheel_spectrum(CogwheelSystem::plain(cogwheel_n, config.T));
    if (format == "json") {
      out << json(energies).dump() << "\n";
    } else {
      out << "n,eigenvalue\n";
      for (std::size_t n = 0; n < energies.size(); ++n) {
        out << (n + 1) << "," << std::setprecision(17) << energies[n] << "\n";
      }
    }
    return kExitPass;
  }
  config.validate();
  const ChainModel chain(config.S());
  const auto poly = make_poly(config, form);
  const auto orbits = chain.enumerate_orbits();
  if (format == "json") {
    json rows = json::array();
    for (const auto& orbit : orbits) {
      const auto energies = orbit_spectrum(poly, orbit);
      for (std::size_t r = 0; r < energies.size(); ++r) {
        rows.push_back({{"orbit_rep", orbit.representative.str()},
                        {"L", orbit.length},
                        {"r", r},
                        {"re", energies[r].real()},
                        {"im", energies[r].imag()}});
      }
    }
    out << rows.dump() << "\n";
  } else {
    out << "orbit_rep,L,r,re,im\n";
    for (const auto& orbit : orbits) {
      const auto energies = orbit_spectrum(poly, orbit);
      for (std::size_t r = 0; r < energies.size(); ++r) {
        out << orbit.representative.str() << "," << orbit.length << "," << r
            << "," << std::setprecision(17) << energies[r].real() << ","
            << energies[r].imag() << "\n";
      }
    }
  }
  return kExitPass;
}

std::vector<SpinConfig> sample_states(const RunConfig& config, int count) {
  std::mt19937_64 rng(config.seed);
  std::vector<SpinConfig> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    SpinConfig state(config.spins);
    for (int p = 1; p <= config.spins; ++p) state.set_up(p, (rng() >> 40) & 1);
    out.push_back(state);
  }
  return out;
}

int run_verify(const RunConfig& config, const std::string& check) {
  config.validate();
  OutputSink sink(config.output);
  auto& out = sink.stream();
  std::vector<json> reports;

  if (check == "exp") {
    const ChainModel chain(config.S());
    const double residual = bch::terminating_exp_residual_dense(
        chain, synthesize_exact(config.S(), config.T), config.dense_cap);
    reports.push_back(verify_entry("exp", config.spins, residual, config.tol_op));
  } else if (check == "bch-product") {
    const ChainModel chain(config.S());
    const double product = bch::product_identity_residual(
        chain, bch::SweepOrdering::OddPairsLeft, config.dense_cap);
    reports.push_back(
        verify_entry("bch-product", config.spins, product, config.tol_op));
    double exponential = 0.0;
    for (int k = 0; k <= 2; ++k) {
      exponential = std::max(exponential,
                             bch::transposition_exponential_residual(
                                 1, 2, std::min(config.spins, 6), k));
    }
    reports.push_back(verify_entry("transposition-exponential", config.spins,
                                   exponential, config.tol_alg));
  } else if (check == "cogwheel") {
    const int n = config.S();
    const ComplexMatrix d = diagonalizer(n);
    reports.push_back(verify_entry("cogwheel-diagonalizer-unitary", config.spins,
                                   unitarity_residual(d), config.tol_alg));
    const auto energies = cogwheel_spectrum(CogwheelSystem::plain(n, config.T));
    ComplexVector diag(n);
    for (int i = 0; i < n; ++i) diag(i) = energies[i];
    const ComplexMatrix round_trip = d.adjoint() * diag.asDiagonal() * d;
    reports.push_back(verify_entry(
        "cogwheel-hamiltonian-roundtrip", config.spins,
        max_abs_diff(round_trip, cogwheel_hamiltonian(n, config.T)),
        config.tol_alg));
    reports.push_back(verify_entry(
        "cogwheel-exponential", config.spins,
        max_abs_diff(cogwheel_exponential(n, config.T),
                     standard_permutation_matrix(CogwheelSystem::plain(n, config.T))),
        config.tol_op));
  } else if (check == "conservation") {
    const ChainModel chain(config.S());
    std::vector<SpinConfig> states;
    if (config.spins <= 12) {
      for (std::uint64_t b = 0; b < (1ull << config.spins); ++b) {
        states.push_back(SpinConfig::from_bits(b, config.spins));
      }
    } else {
      states = sample_states(config, 1000);
    }
    long violations = 0;
    for (const auto& state : states) {
      const SpinConfig next = chain.apply_update(state);
      if (count_up_down(next) != count_up_down(state)) ++violations;
      if (!(magnetization(next) == magnetization(state))) ++violations;
      if (!(chain.apply_update(spin_flip(state)) == spin_flip(next))) ++violations;
      if (!(chain.apply_update(translate(state, 2)) == translate(next, 2))) {
        ++violations;
      }
    }
    reports.push_back(verify_entry("conservation", config.spins,
                                   static_cast<double>(violations), 0.0));
  } else {
    throw std::invalid_argument("unknown check: " + check);
  }

  bool all_pass = true;
  for (const auto& report : reports) {
    out << report.dump() << "\n";
    all_pass = all_pass && report.at("pass").get<bool>();
  }
  return all_pass ? kExitPass : kExitVerifyFail;
}

int run_perturb(const RunConfig& config, double epsilon,
                const std::string& state_text, const std::string& times_text,
                int top_k, int cut) {
  config.validate();
  if (epsilon < 0.0) throw std::invalid_argument("--epsilon must be >= 0");
  const ChainModel chain(config.S());
  const SpinConfig state = state_text.empty() ? bell_probe_state(config.spins)
                                              : parse_state(config, state_text);
  PerturbationSpec spec;
  spec.epsilon = epsilon;
  spec.seed = config.seed;
  const OperatorPolynomial poly =
      perturb(synthesize_exact(config.S(), config.T), spec);

  std::vector<double> times;
  std::stringstream ss(times_text);
  for (std::string item; std::getline(ss, item, ',');) {
    times.push_back(std::stod(item) * config.T);
  }
  if (times.empty()) throw std::invalid_argument("--times must list at least one time");

  OutputSink sink(config.output);
  auto& out = sink.stream();
  for (const double t : times) {
    QuantumState evolved = evolve(chain, poly, QuantumState::basis(state), t);
    evolved.normalize();
    json line = {{"t", t},
                 {"weight", superposition_weight(evolved)},
                 {"entropy", entanglement_entropy(evolved, cut)},
                 {"amplitudes", amplitudes_to_json(evolved, top_k)}};
    out << line.dump() << "\n";
  }
  return kExitPass;
}

int run_entropy(const RunConfig& config, const std::string& state_text,
                bool bell, const std::string& file, int cut) {
  config.validate();
  QuantumState psi(config.spins);
  if (bell) {
    const ChainModel chain(config.S());
    psi = commutator_action(chain, bell_probe_state(config.spins), true);
  } else if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open state file " + file);
    json j;
    in >> j;
    psi = state_from_json(j, config.spins);
    psi.normalize();
  } else if (!state_text.empty()) {
    psi = QuantumState::basis(parse_state(config, state_text));
  } else {
    throw std::invalid_argument("entropy needs --state, --bell, or --file");
  }
  OutputSink sink(config.output);
  sink.stream() << json{{"spins", config.spins},
                        {"cut", cut},
                        {"entropy", entanglement_entropy(psi, cut)}}
                       .dump()
                << "\n";
  return kExitPass;
}

int run_bell_probe(const RunConfig& config) {
  config.validate();
  const ChainModel chain(config.S());
  const SpinConfig probe = bell_probe_state(config.spins);
  const QuantumState raw = commutator_action(chain, probe, false);
  QuantumState normalized = raw;
  normalized.normalize();
  OutputSink sink(config.output);
  sink.stream() << json{{"spins", config.spins},
                        {"probe", probe.str()},
                        {"amplitudes", amplitudes_to_json(raw)},
                        {"cut", 4},
                        {"entropy", entanglement_entropy(normalized, 4)}}
                       .dump()
                << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simulator and operator toolkit for pairwise-exchange "
               "spin-chain dynamics"};
  app.require_subcommand(1);

  RunConfig config;
  int exit_code = kExitPass;
  try {
    config.dense_cap = default_dense_cap();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto add_common = [&config](CLI::App* cmd, bool with_spins = true) {
    if (with_spins) cmd->add_option("--spins", config.spins, "Chain length 2S");
    cmd->add_option("--T", config.T, "Time step");
    cmd->add_option("--tol-op", config.tol_op, "Tolerance for operator identities");
    cmd->add_option("--tol-alg", config.tol_alg, "Tolerance for algebraic round-trips");
    cmd->add_option("--dense-cap", config.dense_cap,
                    "Dense-dimension cap on 2S (env PERMDYN_DENSE_CAP overrides the default)");
    cmd->add_option("--seed", config.seed, "Random seed");
    cmd->add_option("--output", config.output, "Write output to a file instead of stdout");
  };

  // evolve
  std::string state_text;
  long steps = 1;
  bool inverse = false;
  auto* evolve_cmd = app.add_subcommand("evolve", "Print the basis-state trajectory");
  add_common(evolve_cmd);
  evolve_cmd->add_option("--state", state_text, "Initial state over {u,d}")->required();
  evolve_cmd->add_option("--steps", steps, "Number of updates");
  evolve_cmd->add_flag("--inverse", inverse, "Apply the inverse update");
  evolve_cmd->callback([&] { exit_code = run_evolve(config, state_text, steps, inverse); });

  // orbits
  int orbit_cap = 24;
  auto* orbits_cmd = app.add_subcommand("orbits", "Enumerate all orbits as a JSON report");
  add_common(orbits_cmd);
  orbits_cmd->add_option("--cap", orbit_cap, "Enumeration cap on 2S");
  orbits_cmd->callback([&] { exit_code = run_orbits(config, orbit_cap); });

  // hamiltonian
  std::string form = "exact";
  auto* ham_cmd = app.add_subcommand("hamiltonian", "Print operator-polynomial coefficients");
  add_common(ham_cmd);
  ham_cmd->add_option("--form", form, "exact | reduced | approx");
  ham_cmd->callback([&] { exit_code = run_hamiltonian(config, form); });

  // spectrum
  int cogwheel_n = 0;
  std::string format = "csv";
  std::string spec_form = "exact";
  auto* spec_cmd = app.add_subcommand("spectrum", "Cogwheel or per-orbit chain spectra");
  add_common(spec_cmd);
  spec_cmd->add_option("--N", cogwheel_n, "Cogwheel size (omit for chain orbit spectra)");
  spec_cmd->add_option("--form", spec_form, "Chain Hamiltonian form");
  spec_cmd->add_option("--format", format, "csv | json");
  spec_cmd->callback([&] { exit_code = run_spectrum(config, cogwheel_n, spec_form, format); });

  // verify
  std::string check;
  auto* verify_cmd = app.add_subcommand("verify", "Run a named verification, JSONL report");
  add_common(verify_cmd);
  verify_cmd->add_option("check", check, "exp | bch-product | cogwheel | conservation")
      ->required();
  verify_cmd->callback([&] { exit_code = run_verify(config, check); });

  // perturb
  double epsilon = 0.0;
  std::string times = "1,2,4";
  int top_k = 8;
  int cut = 0;
  std::string perturb_state;
  auto* perturb_cmd =
      app.add_subcommand("perturb", "Superposition weight and entropy vs time (JSONL)");
  add_common(perturb_cmd);
  perturb_cmd->add_option("--epsilon", epsilon, "Perturbation strength")->required();
  perturb_cmd->add_option("--state", perturb_state, "Initial basis state (default: down pair at 4,5)");
  perturb_cmd->add_option("--times", times, "Comma list of times in units of T");
  perturb_cmd->add_option("--top-k", top_k, "Keep only the k largest amplitudes (0 = all)");
  perturb_cmd->add_option("--cut", cut, "Entropy cut (default 2S/2)");
  perturb_cmd->callback([&] {
    exit_code = run_perturb(config, epsilon, perturb_state, times, top_k,
                            cut == 0 ? config.spins / 2 : cut);
  });

  // entropy
  bool bell = false;
  std::string entropy_state;
  std::string state_file;
  int entropy_cut = 0;
  auto* entropy_cmd = app.add_subcommand("entropy", "Entanglement entropy across a cut");
  add_common(entropy_cmd);
  entropy_cmd->add_option("--state", entropy_state, "Basis state over {u,d}");
  entropy_cmd->add_flag("--bell", bell, "Use the normalized two-term probe difference");
  entropy_cmd->add_option("--file", state_file, "JSON amplitude list");
  entropy_cmd->add_option("--cut", entropy_cut, "Cut position (default 2S/2)");
  entropy_cmd->callback([&] {
    exit_code = run_entropy(config, entropy_state, bell, state_file,
                            entropy_cut == 0 ? config.spins / 2 : entropy_cut);
  });

  // bell-probe
  auto* bell_cmd =
      app.add_subcommand("bell-probe", "Two-term difference state and its entropy");
  add_common(bell_cmd);
  bell_cmd->callback([&] { exit_code = run_bell_probe(config); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
