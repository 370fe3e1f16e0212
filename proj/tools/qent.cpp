// qent: command-line front end. Every subcommand prints one JSON report
//   {"command", "inputs": {flag: sha256}, "outputs": {name: {"value", "unit"}},
//    "seed", "tool_version"}
// Exit codes: 0 success, 2 validation or usage error, 1 internal error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "qent/io.hpp"
#include "qent/qent.hpp"

namespace {

using qent::ComplexMatrix;
using qent::Index;
using qent::Real;
using qent::io::Json;

constexpr const char* kToolVersion = "0.1.0";

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qent::Error(qent::ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string bytes = buffer.str();

  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

class Report {
 public:
  Report(std::string command, bool bits) : bits_(bits) {
    json_["command"] = std::move(command);
    json_["inputs"] = Json::object();
    json_["outputs"] = Json::object();
    json_["seed"] = nullptr;
    json_["tool_version"] = kToolVersion;
  }

  /// Records the digest of an input file and returns its parsed JSON.
  Json input(const std::string& flag, const std::string& path) {
    json_["inputs"][flag] = "sha256:" + sha256_file(path);
    return qent::io::read_json_file(path);
  }

  void seed(std::uint64_t s) { json_["seed"] = s; }

  /// Entropy-valued outputs follow the --bits switch.
  void entropy(const std::string& name, Real nats) {
    if (bits_) {
      put(name, nats / std::log(2.0), "bits");
    } else {
      put(name, nats, "nats");
    }
  }

  void entropies(const std::string& name, const std::vector<Real>& nats) {
    Json values = Json::array();
    for (Real v : nats) values.push_back(bits_ ? v / std::log(2.0) : v);
    put(name, values, bits_ ? "bits" : "nats");
  }

  void plain(const std::string& name, Json value) { put(name, std::move(value), "dimensionless"); }

  void matrix(const std::string& name, const ComplexMatrix& m) {
    put(name, qent::io::matrix_to_json(m), "dimensionless");
  }

  void emit(const std::string& json_path) const {
    const std::string text = json_.dump(2) + "\n";
    if (json_path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + json_path);
    out << text;
  }

 private:
  void put(const std::string& name, Json value, const char* unit) {
    json_["outputs"][name] = Json{{"value", std::move(value)}, {"unit", unit}};
  }

  Json json_;
  bool bits_;
};

std::vector<Real> parse_reals(const std::string& text, const char* flag) {
  std::vector<Real> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw qent::Error(qent::ErrorKind::ParseError,
                        std::string(flag) + ": not a number: '" + item + "'");
    }
  }
  if (values.empty()) throw qent::Error(qent::ErrorKind::ParseError, std::string(flag) + ": empty list");
  return values;
}

std::vector<Index> parse_dims(const std::string& text, std::size_t count) {
  std::vector<Index> dims;
  for (Real v : parse_reals(text, "--dims")) {
    if (v < 1 || v != std::floor(v))
      throw qent::Error(qent::ErrorKind::BadDimension, "--dims entries must be positive integers");
    dims.push_back(static_cast<Index>(v));
  }
  if (dims.size() != count)
    throw qent::Error(qent::ErrorKind::BadDimension,
                      "--dims needs " + std::to_string(count) + " entries");
  return dims;
}

qent::DensityOperator load_state(Report& report, const std::string& path) {
  return qent::validate_density(qent::io::matrix_from_json(report.input("state", path)));
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<Real>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << header << "\n" << std::setprecision(17);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
}

struct Options {
  std::string state;
  std::string hamiltonian;
  std::string ensemble;
  std::string chain;
  std::string basis;
  std::string json;
  std::string csv;
  std::string probs;
  std::string levels;
  std::string dims;
  std::string sector;
  std::optional<Real> energy;
  std::optional<Real> beta;
  std::uint64_t seed = 0;
  int trials = 20;
  int k = 0;
  int count = 0;
  int restarts = 4;
  int up_to = 0;
  bool bits = false;
};

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Von Neumann entropy toolkit"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--bits", opt.bits, "Report entropies in bits instead of nats");
    sub->add_option("--json", opt.json, "Write the report to this path instead of stdout");
  };
  auto state_option = [&](CLI::App* sub) {
    sub->add_option("--state", opt.state, "Density matrix JSON file")->required()->check(CLI::ExistingFile);
  };
  auto seed_option = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "Seed for all random draws")->required();
  };

  auto* entropy = app.add_subcommand("entropy", "Von Neumann entropy S(D)");
  state_option(entropy);
  common(entropy);

  auto* shannon = app.add_subcommand("shannon", "Shannon entropy of a probability vector");
  shannon->add_option("--probs", opt.probs, "Comma-separated probabilities")->required();
  common(shannon);

  auto* maxboltz = app.add_subcommand("maxboltz", "Maximum-entropy level populations at fixed mean energy");
  maxboltz->add_option("--levels", opt.levels, "Comma-separated increasing energy levels")->required();
  maxboltz->add_option("--energy", opt.energy, "Mean energy constraint")->required();
  common(maxboltz);

  auto* gibbs = app.add_subcommand("gibbs", "Gibbs state at --beta or at mean energy --energy");
  gibbs->add_option("--hamiltonian", opt.hamiltonian, "Hamiltonian JSON file")->required()->check(CLI::ExistingFile);
  auto* gibbs_energy = gibbs->add_option("--energy", opt.energy, "Mean energy constraint");
  auto* gibbs_beta = gibbs->add_option("--beta", opt.beta, "Inverse temperature");
  gibbs_energy->excludes(gibbs_beta);
  common(gibbs);

  auto* pinch = app.add_subcommand("pinch", "Pinch a state in a basis (computational by default)");
  state_option(pinch);
  pinch->add_option("--basis", opt.basis, "Unitary JSON file whose columns form the basis")->check(CLI::ExistingFile);
  common(pinch);

  auto* steer = app.add_subcommand("steer", "Steer |0> to |1> with k pinchings");
  steer->add_option("--k", opt.k, "Number of pinching steps")->required();
  steer->add_option("--csv", opt.csv, "Per-step table: step,fidelity,trace_distance");
  common(steer);

  auto* subadd = app.add_subcommand("subadd", "Subadditivity S12 <= S1 + S2");
  state_option(subadd);
  subadd->add_option("--dims", opt.dims, "d1,d2")->required();
  common(subadd);

  auto* ssa = app.add_subcommand("ssa", "Strong subadditivity S123 + S2 <= S12 + S23");
  state_option(ssa);
  ssa->add_option("--dims", opt.dims, "d1,d2,d3")->required();
  common(ssa);

  auto* chain = app.add_subcommand("chain", "Entropy density and Fekete checks of a Gibbs chain");
  chain->add_option("--chain", opt.chain, "Chain JSON file")->required()->check(CLI::ExistingFile);
  chain->add_option("--beta", opt.beta, "Inverse temperature")->required();
  chain->add_option("--up-to", opt.up_to, "Largest block length (default: chain length)");
  chain->add_option("--csv", opt.csv, "Per-length table: n,block_entropy,density");
  common(chain);

  auto* lindblad = app.add_subcommand("lindblad", "Observed entropy of state-invariant partitions");
  state_option(lindblad);
  lindblad->add_option("--trials", opt.trials, "Random invariant partitions to sample")->check(CLI::PositiveNumber);
  lindblad->add_option("--sector", opt.sector, "l1,l2,l3 for the two-sector example formula");
  seed_option(lindblad);
  common(lindblad);

  auto* capacity = app.add_subcommand("capacity", "Mutual information of the best projective read-out");
  capacity->add_option("--ensemble", opt.ensemble, "Ensemble JSON file")->required()->check(CLI::ExistingFile);
  capacity->add_option("--restarts", opt.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
  seed_option(capacity);
  common(capacity);

  auto* decompose = app.add_subcommand("decompose", "Random pure-state decomposition of a state");
  state_option(decompose);
  decompose->add_option("--count", opt.count, "Number of pure states")->required();
  seed_option(decompose);
  common(decompose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "UsageError: " << e.what() << "\n\n";
    const auto chosen = app.get_subcommands();
    std::cerr << (chosen.empty() ? app.help() : chosen.front()->help());
    return 2;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    Report report(name, opt.bits);

    if (name == "entropy") {
      report.entropy("entropy", qent::von_neumann(load_state(report, opt.state)));

    } else if (name == "shannon") {
      report.entropy("entropy", qent::shannon(qent::ProbabilityVector(parse_reals(opt.probs, "--probs"))));

    } else if (name == "maxboltz") {
      const auto levels = parse_reals(opt.levels, "--levels");
      const auto mb = qent::maxwell_boltzmann(levels, *opt.energy);
      const auto p = mb.probs.probs();
      report.plain("probabilities", std::vector<Real>(p.begin(), p.end()));
      report.plain("lambda", mb.lambda);
      report.entropy("entropy", qent::shannon(mb.probs));

    } else if (name == "gibbs") {
      const qent::Hamiltonian h(qent::io::matrix_from_json(report.input("hamiltonian", opt.hamiltonian)));
      if (opt.energy.has_value() == opt.beta.has_value())
        throw CLI::ValidationError("gibbs needs exactly one of --energy, --beta");
      const auto result = opt.energy ? qent::max_entropy_state(h, *opt.energy)
                                     : qent::MaxEntropyState{qent::gibbs_state(h, *opt.beta), *opt.beta};
      report.matrix("state", result.state.matrix());
      report.plain("beta", result.beta);
      report.plain("energy", (result.state.matrix() * h.matrix()).trace().real());
      report.entropy("entropy", qent::von_neumann(result.state));
      if (result.beta > 0) report.plain("free_energy", qent::free_energy(result.state, h, result.beta));

    } else if (name == "pinch") {
      const auto d = load_state(report, opt.state);
      const qent::PinchingBasis basis =
          opt.basis.empty() ? qent::PinchingBasis::computational(d.dim())
                            : qent::PinchingBasis(qent::io::matrix_from_json(report.input("basis", opt.basis)));
      const auto pinched = qent::validate_density(qent::pinch(d.matrix(), basis), qent::tol::kOperational);
      report.matrix("state", pinched.matrix());
      report.entropy("entropy_before", qent::von_neumann(d));
      report.entropy("entropy_after", qent::von_neumann(pinched));

    } else if (name == "steer") {
      const qent::PureState zero(qent::ComplexVector::Unit(2, 0));
      const qent::PureState one(qent::ComplexVector::Unit(2, 1));
      const auto seq = qent::steering_sequence(zero, one, opt.k);
      std::vector<std::vector<Real>> rows;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        rows.push_back({static_cast<Real>(i + 1), qent::fidelity(seq[i], one),
                        qent::trace_distance(seq[i].matrix(), one.density().matrix())});
      }
      report.plain("k", opt.k);
      report.plain("final_fidelity", rows.back()[1]);
      report.plain("closed_form", 0.5 * (1 + std::pow(std::cos(std::numbers::pi / opt.k), opt.k)));
      report.plain("trace_distance", rows.back()[2]);
      if (!opt.csv.empty()) write_csv(opt.csv, "step,fidelity,trace_distance", rows);

    } else if (name == "subadd") {
      const auto d = load_state(report, opt.state);
      const auto dims = parse_dims(opt.dims, 2);
      const auto r = qent::check_subadditivity(d, {dims[0], dims[1]});
      report.entropy("s12", r.joint);
      report.entropy("s1", r.first);
      report.entropy("s2", r.second);
      report.plain("holds", r.holds());

    } else if (name == "ssa") {
      const auto d = load_state(report, opt.state);
      const auto dims = parse_dims(opt.dims, 3);
      const auto r = qent::check_ssa(d, {dims[0], dims[1], dims[2]});
      report.entropy("s123", r.s123);
      report.entropy("s12", r.s12);
      report.entropy("s23", r.s23);
      report.entropy("s2", r.s2);
      report.plain("holds", r.holds());

    } else if (name == "chain") {
      const qent::ChainSpec spec = qent::io::chain_from_json(report.input("chain", opt.chain));
      const Index up_to = opt.up_to > 0 ? opt.up_to : spec.length;
      const auto profile = qent::entropy_density_profile(spec, *opt.beta, up_to);
      std::vector<Real> densities;
      std::vector<std::vector<Real>> rows;
      for (std::size_t i = 0; i < profile.densities.size(); ++i) {
        densities.push_back(profile.densities[i].second);
        rows.push_back({static_cast<Real>(profile.densities[i].first), profile.block_entropies[i],
                        profile.densities[i].second});
      }
      report.entropies("block_entropies", profile.block_entropies);
      report.entropies("densities", densities);
      report.plain("fekete_checks", profile.fekete.size());
      report.plain("fekete_holds", profile.fekete_holds());
      if (!opt.csv.empty()) write_csv(opt.csv, "n,block_entropy,density", rows);

    } else if (name == "lindblad") {
      report.seed(opt.seed);
      const auto d = load_state(report, opt.state);
      const auto bound = qent::lindblad_lower_bound(d, opt.trials, opt.seed);
      report.entropy("two_s", bound.two_s);
      report.entropy("canonical", bound.canonical_value);
      report.entropy("pinching", bound.pinching_value);
      report.entropy("lower_bound", bound.lower_bound);
      report.plain("samples_kept", bound.samples_kept());
      if (!opt.sector.empty()) {
        const auto l = parse_reals(opt.sector, "--sector");
        if (l.size() != 3)
          throw qent::Error(qent::ErrorKind::NotAProbabilityVector, "--sector needs three weights");
        report.entropy("sector_formula", qent::sector_example_formula(l[0], l[1], l[2]));
      }

    } else if (name == "capacity") {
      report.seed(opt.seed);
      const qent::Ensemble ens = qent::io::ensemble_from_json(report.input("ensemble", opt.ensemble));
      const auto best = qent::optimize_measurement(ens, opt.restarts, opt.seed);
      const auto holevo = qent::check_holevo_bound(ens, best.povm);
      report.entropy("entropy", holevo.entropy);
      report.entropy("information", best.information);
      report.plain("bound_holds", holevo.holds());

    } else if (name == "decompose") {
      report.seed(opt.seed);
      const auto d = load_state(report, opt.state);
      const auto dec = qent::random_pure_decomposition(d, opt.count, opt.seed);
      report.plain("weights", dec.weights);
      report.entropy("mixing_entropy", qent::mixing_entropy(dec));
      report.entropy("entropy", qent::von_neumann(d));
      report.plain("reconstruction_error", qent::max_abs(dec.reconstruct() - d.matrix()));
    }

    report.emit(opt.json);
    return 0;
  } catch (const qent::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "UsageError: " << e.what() << "\n\n" << sub->help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
