// Copyright 2026 The qiit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qiit/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qiit/hamiltonians.hpp"
#include "qiit/matrix_io.hpp"
#include "qiit/random.hpp"

namespace qiit {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

bool parse_bool(const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw std::invalid_argument("config: bad boolean '" + v + "'");
}

}  // namespace

std::string config_hash(const std::string& text) {
  // FNV-1a, 64 bit.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::string normalized;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    normalized += key + " = " + value + "\n";

    if (key == "task") cfg.task = value;
    else if (key == "n_sites") cfg.n_sites = std::stoi(value);
    else if (key == "local_dim") cfg.local_dim = std::stoi(value);
    else if (key == "geometry") cfg.geometry = value;
    else if (key == "state") cfg.state = value;
    else if (key == "dynamics") cfg.dynamics = value;
    else if (key == "t") cfg.time = std::stod(value);
    else if (key == "sign") cfg.sign = value;
    else if (key == "action") cfg.action = std::stod(value);
    else if (key == "prescription") cfg.prescription = value;
    else if (key == "sweep_start") cfg.sweep_start = std::stod(value);
    else if (key == "sweep_stop") cfg.sweep_stop = std::stod(value);
    else if (key == "sweep_points") cfg.sweep_points = std::stoi(value);
    else if (key == "sizes") {
      for (const auto& s : split(value, ',')) cfg.sizes.push_back(std::stoi(trim(s)));
    } else if (key == "fit_vs_log_size") cfg.fit_vs_log_size = parse_bool(value);
    else if (key == "k") cfg.k = std::stoi(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "samples") cfg.samples = std::stoi(value);
    else if (key == "mechanism_mask") cfg.mechanism_mask = std::stoul(value);
    else if (key == "workers") cfg.workers = std::stoi(value);
    else if (key == "out_dir") cfg.out_dir = value;
    else if (key == "cross_check") cfg.cross_check = parse_bool(value);
    else if (key == "force_large") cfg.force_large = parse_bool(value);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  cfg.raw_text = normalized;
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

namespace {

Eigen::VectorXcd named_ket(const std::string& token, int d) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd k = Eigen::VectorXcd::Zero(d);
  if (token == "+" && d == 2) {
    k << r, r;
  } else if (token == "-" && d == 2) {
    k << r, -r;
  } else if (token == "i" && d == 2) {
    k << r, Complex(0, r);
  } else if (token == "-i" && d == 2) {
    k << r, Complex(0, -r);
  } else {
    int idx = -1;
    try {
      idx = std::stoi(token);
    } catch (...) {
      throw std::invalid_argument("unknown state token '" + token + "'");
    }
    if (idx < 0 || idx >= d) throw std::invalid_argument("basis ket out of range: " + token);
    k(idx) = 1.0;
  }
  return k;
}

StateSpec parse_state(const std::string& text, int n, int d) {
  if (text == "bell") {
    if (n != 2 || d != 2) throw std::invalid_argument("bell state needs two qubits");
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    // (|00> + |11>)/sqrt(2)
    for (int a : {0, 3})
      for (int b : {0, 3}) rho(a, b) = 0.5;
    return StateSpec::explicit_spec(std::move(rho));
  }
  if (text.rfind("file:", 0) == 0)
    return StateSpec::explicit_spec(load_matrix_any(text.substr(5)));
  if (text.rfind("uniform:", 0) == 0) {
    const std::string tok = text.substr(8);
    std::vector<Eigen::VectorXcd> kets(n, named_ket(tok, d));
    return StateSpec::product_kets_spec(std::move(kets));
  }
  if (text.rfind("product:", 0) == 0) {
    const auto tokens = split(text.substr(8), ',');
    if (static_cast<int>(tokens.size()) != n)
      throw std::invalid_argument("state: need one token per site");
    std::vector<Eigen::VectorXcd> kets;
    for (const auto& t : tokens) kets.push_back(named_ket(trim(t), d));
    return StateSpec::product_kets_spec(std::move(kets));
  }
  if (text.rfind("bloch:", 0) == 0) {
    const auto tokens = split(text.substr(6), ',');
    if (static_cast<int>(tokens.size()) != n)
      throw std::invalid_argument("state: need one Bloch vector per site");
    std::vector<Eigen::Vector3d> bloch;
    for (const auto& t : tokens) {
      const auto xyz = split(trim(t), ';');
      if (xyz.size() != 3) throw std::invalid_argument("bloch token needs x;y;z");
      bloch.emplace_back(std::stod(xyz[0]), std::stod(xyz[1]), std::stod(xyz[2]));
    }
    return StateSpec::product_bloch_spec(std::move(bloch));
  }
  throw std::invalid_argument("unknown state spec '" + text + "'");
}

struct DynamicsKind {
  bool is_hamiltonian = false;
  std::string kind;
  std::string arg;
};

DynamicsKind parse_dynamics(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() < 2 || (parts[0] != "unitary" && parts[0] != "hamiltonian"))
    throw std::invalid_argument("dynamics must be 'unitary:...' or 'hamiltonian:...'");
  DynamicsKind out;
  out.is_hamiltonian = parts[0] == "hamiltonian";
  out.kind = parts[1];
  if (parts.size() > 2) {
    out.arg = parts[2];
    for (std::size_t i = 3; i < parts.size(); ++i) out.arg += ":" + parts[i];
  }
  return out;
}

ComplexMatrix hamiltonian_matrix(const DynamicsKind& dk, int n, int d, std::uint64_t seed) {
  if (dk.kind == "xx-ring") return xx_ring(n);
  if (dk.kind == "xx-full") return xx_full(n);
  if (dk.kind == "xxx-ring") return xxx_ring(n);
  if (dk.kind == "xxx-full") return xxx_full(n);
  if (dk.kind == "z-global") return z_global(n);
  if (dk.kind == "swap") {
    if (n != 2) throw std::invalid_argument("swap hamiltonian needs two sites");
    return swap_gate(d);
  }
  if (dk.kind == "gue") return sample_gue(dim_pow(d, n), seed);
  if (dk.kind == "file") return load_matrix_any(dk.arg);
  throw std::invalid_argument("unknown hamiltonian kind '" + dk.kind + "'");
}

double default_sign(const DynamicsKind& dk) {
  // Nearest-neighbour spin models evolve with exp(-itH); the global-phase
  // models and random ensembles with exp(+itH).
  if (dk.kind.rfind("xx", 0) == 0) return -1.0;
  return 1.0;
}

}  // namespace

Network build_network(const ExperimentConfig& cfg) {
  Network net;
  net.n_sites = cfg.n_sites;
  net.local_dim = cfg.local_dim;
  net.initial_state = parse_state(cfg.state, cfg.n_sites, cfg.local_dim);
  if (cfg.geometry == "ring")
    net.distances = Network::ring_distances(cfg.n_sites);
  else if (cfg.geometry != "none")
    throw std::invalid_argument("unknown geometry '" + cfg.geometry + "'");
  net.validate();
  return net;
}

Channel build_channel(const ExperimentConfig& cfg, std::optional<double> time_override,
                      std::optional<int> n_override, std::optional<std::uint64_t> seed_override) {
  const int n = n_override.value_or(cfg.n_sites);
  const int d = cfg.local_dim;
  const std::uint64_t seed = seed_override.value_or(cfg.seed);
  const SiteSubset sites = SiteSubset::full(n);
  const DynamicsKind dk = parse_dynamics(cfg.dynamics);

  if (!dk.is_hamiltonian) {
    if (dk.kind == "identity") return Channel::identity(sites, d);
    if (dk.kind == "swap") {
      if (n != 2) throw std::invalid_argument("swap unitary needs two sites");
      return Channel::unitary(swap_gate(d), sites, d, "swap");
    }
    if (dk.kind == "cnot") {
      if (n != 2 || d != 2) throw std::invalid_argument("cnot needs two qubits");
      return Channel::unitary(cnot_gate(), sites, d, "cnot");
    }
    if (dk.kind == "permutation") {
      std::vector<int> sigma;
      for (const auto& s : split(dk.arg, ',')) sigma.push_back(std::stoi(trim(s)));
      if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("permutation length mismatch");
      return Channel::unitary(permutation_unitary(sigma, d), sites, d,
                              "permutation:" + dk.arg);
    }
    if (dk.kind == "haar")
      return Channel::unitary(sample_haar_unitary(dim_pow(d, n), seed), sites, d,
                              "haar:" + std::to_string(seed));
    if (dk.kind == "diagonal")
      return Channel::unitary(diagonal_phase_unitary(n, d, seed), sites, d,
                              "diagonal:" + std::to_string(seed));
    if (dk.kind == "file")
      return Channel::unitary(load_matrix_any(dk.arg), sites, d, "file:" + dk.arg);
    throw std::invalid_argument("unknown unitary kind '" + dk.kind + "'");
  }

  const ComplexMatrix h = hamiltonian_matrix(dk, n, d, seed);
  const double sign = cfg.sign.empty() ? default_sign(dk)
                      : cfg.sign == "+" ? 1.0
                      : cfg.sign == "-" ? -1.0
                                        : throw std::invalid_argument("sign must be + or -");
  const double t = time_override.value_or(cfg.time);
  std::ostringstream desc;
  desc << "expm(" << dk.kind << (dk.arg.empty() ? "" : ":" + dk.arg) << ", t=" << t
       << ", sign=" << (sign > 0 ? "+" : "-") << ")";
  return Channel::unitary(herm_expm(h, sign * t), sites, d, desc.str());
}

System build_system(const ExperimentConfig& cfg) {
  const Network net = build_network(cfg);
  return System{SiteSubset::full(net.n_sites), net.local_dim, build_state(net),
                build_channel(cfg)};
}

namespace {

namespace fs = std::filesystem;

std::string out_path(const ExperimentConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out_dir);
  return (fs::path(cfg.out_dir) / name).string();
}

void check_desk_limit(const ExperimentConfig& cfg) {
  long dim = 1;
  int n = cfg.n_sites;
  for (const int s : cfg.sizes) n = std::max(n, s);
  for (int i = 0; i < n; ++i) dim *= cfg.local_dim;
  if (dim > desk_dimension_limit && !cfg.force_large) {
    std::ostringstream msg;
    msg << "refusing to run at dimension " << dim << " > " << desk_dimension_limit
        << " (pass --force-large to override)";
    throw std::invalid_argument(msg.str());
  }
}

double phi_of_system(const System& sys, const ExperimentConfig& cfg) {
  PhiOptions opts;
  opts.workers = cfg.workers;
  opts.cross_check = cfg.cross_check;
  return compute_phi(sys, opts).phi;
}

struct SweepResult {
  std::vector<double> times;
  std::vector<double> phis;
  std::vector<std::size_t> jump_indices;  // index i: jump between t[i] and t[i+1]
};

SweepResult sweep_phi(const ExperimentConfig& cfg) {
  SweepResult out;
  const Network net = build_network(cfg);
  const SupportedOperator psi = build_state(net);
  const SiteSubset sites = SiteSubset::full(net.n_sites);
  for (int i = 0; i < cfg.sweep_points; ++i) {
    const double t =
        cfg.sweep_start + (cfg.sweep_stop - cfg.sweep_start) * i / (cfg.sweep_points - 1);
    const System sys{sites, net.local_dim, psi, build_channel(cfg, t)};
    out.times.push_back(t);
    out.phis.push_back(phi_of_system(sys, cfg));
  }
  // Jump detection: adjacent steps larger than five times the median step.
  std::vector<double> deltas;
  for (std::size_t i = 0; i + 1 < out.phis.size(); ++i)
    deltas.push_back(std::abs(out.phis[i + 1] - out.phis[i]));
  std::vector<double> sorted = deltas;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted.empty() ? 0.0 : sorted[sorted.size() / 2];
  for (std::size_t i = 0; i < deltas.size(); ++i)
    if (deltas[i] > 5.0 * median && deltas[i] > tol::phi_epsilon) out.jump_indices.push_back(i);
  return out;
}

}  // namespace

RunRecord run(const ExperimentConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  check_desk_limit(cfg);

  RunRecord record;
  record.config_hash = config_hash(cfg.raw_text.empty() ? cfg.task : cfg.raw_text);
  record.engine_version = engine_version;

  auto emit = [&](const std::string& path) { record.emitted_files.push_back(path); };

  if (cfg.task == "repertoires") {
    const System sys = build_system(cfg);
    RepertoireTable table(sys.channel, sys.state);
    CsvWriter csv(out_path(cfg, "repertoires.csv"));
    const std::string sidecar = out_path(cfg, "repertoires.bin");
    std::ofstream matrices(sidecar, std::ios::binary);
    csv.comment("dynamics=" + sys.channel.descriptor());
    csv.header({"direction", "P_mask", "M_mask", "matrix_index"});
    int index = 0;
    for (Direction dir : {Direction::effect, Direction::cause})
      for (const SiteSubset& p : enumerate_subsets(sys.sites))
        for (const SiteSubset& m : enumerate_subsets(sys.sites)) {
          const auto& rep = table.get(dir, p, m);
          write_matrix_record(matrices, rep.matrix());
          csv.row({to_string(dir), CsvWriter::cell(std::size_t{p.bits()}),
                   CsvWriter::cell(std::size_t{m.bits()}), CsvWriter::cell(index)});
          ++index;
        }
    emit(csv.path());
    emit(sidecar);
    record.summary["repertoires"] = index;
  } else if (cfg.task == "xi-table") {
    const System sys = build_system(cfg);
    CsvWriter csv(out_path(cfg, "xi_table.csv"));
    csv.comment("dynamics=" + sys.channel.descriptor());
    csv.header({"direction", "P_mask", "M_mask", "value"});
    for (Direction dir : {Direction::effect, Direction::cause})
      for (const SiteSubset& p : enumerate_subsets(sys.sites))
        for (const SiteSubset& m : enumerate_subsets(sys.sites)) {
          if (p.empty() || m.empty()) continue;
          const double xi = cause_effect_info(sys.channel, sys.state, dir, p, m);
          csv.row({to_string(dir), CsvWriter::cell(std::size_t{p.bits()}),
                   CsvWriter::cell(std::size_t{m.bits()}), CsvWriter::cell(xi)});
        }
    emit(csv.path());
  } else if (cfg.task == "average-xi") {
    const System sys = build_system(cfg);
    const double e = average_xi(sys.channel, sys.state, Direction::effect);
    const double c = average_xi(sys.channel, sys.state, Direction::cause);
    CsvWriter csv(out_path(cfg, "average_xi.csv"));
    csv.header({"direction", "value"});
    csv.row({"e", CsvWriter::cell(e)});
    csv.row({"c", CsvWriter::cell(c)});
    emit(csv.path());
    record.summary["average_xi_effect"] = e;
    record.summary["average_xi_cause"] = c;
  } else if (cfg.task == "phi" || cfg.task == "phi-k") {
    const System sys = build_system(cfg);
    PhiOptions opts;
    opts.workers = cfg.workers;
    opts.cross_check = cfg.cross_check;
    if (cfg.task == "phi-k") opts.max_block_size = cfg.k;
    const PhiResult result = compute_phi(sys, opts);
    const PhiBounds bounds = phi_bounds(result.cs_full, result);

    CsvWriter parts(out_path(cfg, "partitions.csv"));
    parts.comment("dynamics=" + sys.channel.descriptor());
    parts.header({"partition_mask", "distance"});
    for (const auto& pd : result.per_partition)
      parts.row({CsvWriter::cell(std::size_t{pd.partition.part1.bits()}),
                 CsvWriter::cell(pd.distance)});
    emit(parts.path());

    CsvWriter cs_csv(out_path(cfg, "concepts.csv"));
    const std::string sidecar = out_path(cfg, "concepts.bin");
    std::ofstream matrices(sidecar, std::ios::binary);
    cs_csv.header({"mechanism_mask", "direction", "core_purview_mask", "phi", "matrix_index"});
    int index = 0;
    for (const auto& [mask, c] : result.cs_full.concepts)
      for (Direction dir : {Direction::effect, Direction::cause}) {
        const DirectionalCore& core = c.core(dir);
        write_matrix_record(matrices, core.state.matrix());
        cs_csv.row({CsvWriter::cell(std::size_t{mask}), to_string(dir),
                    CsvWriter::cell(std::size_t{core.purview.bits()}), CsvWriter::cell(c.phi),
                    CsvWriter::cell(index)});
        ++index;
      }
    emit(cs_csv.path());
    emit(sidecar);

    record.summary["phi"] = result.phi;
    record.summary["mip_mask"] = result.mip.part1.bits();
    record.summary["concepts"] = static_cast<double>(result.cs_full.concepts.size());
    record.summary["upper_bound"] = bounds.upper;
    record.summary["lower_bound"] = bounds.lower;
    if (cfg.cross_check)
      record.summary["cross_check_max_dev"] = result.cross_check_max_deviation;
  } else if (cfg.task == "sweep-t") {
    const SweepResult sweep = sweep_phi(cfg);
    CsvWriter csv(out_path(cfg, "sweep.csv"));
    csv.comment("dynamics=" + cfg.dynamics + " grid=[" + format_double(cfg.sweep_start) + "," +
                format_double(cfg.sweep_stop) + "] points=" + std::to_string(cfg.sweep_points));
    csv.header({"t", "phi"});
    for (std::size_t i = 0; i < sweep.times.size(); ++i)
      csv.row({CsvWriter::cell(sweep.times[i]), CsvWriter::cell(sweep.phis[i])});
    emit(csv.path());
    record.summary["jumps"] = static_cast<double>(sweep.jump_indices.size());
    for (std::size_t j = 0; j < sweep.jump_indices.size(); ++j)
      record.summary["jump_" + std::to_string(j)] = sweep.times[sweep.jump_indices[j]];
  } else if (cfg.task == "scaling") {
    if (cfg.sizes.size() < 3)
      throw std::invalid_argument("fit requires >= 3 sizes");
    std::vector<ScalingPoint> points;
    CsvWriter csv(out_path(cfg, "scaling.csv"));
    csv.comment("dynamics=" + cfg.dynamics + " prescription=" + cfg.prescription +
                " seed=" + std::to_string(cfg.seed));
    csv.header({"n_sites", "t", "phi", "log2_phi"});
    for (const int n : cfg.sizes) {
      ExperimentConfig sized = cfg;
      sized.n_sites = n;
      const Network net = build_network(sized);
      const SupportedOperator psi = build_state(net);
      const SiteSubset sites = SiteSubset::full(n);
      auto phi_at = [&](double t) {
        const System sys{sites, cfg.local_dim, psi, build_channel(cfg, t, n)};
        return phi_of_system(sys, cfg);
      };
      double t = cfg.time;
      if (cfg.prescription == "constant-action") {
        const DynamicsKind dk = parse_dynamics(cfg.dynamics);
        if (!dk.is_hamiltonian)
          throw std::invalid_argument("constant-action needs hamiltonian dynamics");
        t = cfg.action / spectral_norm(hamiltonian_matrix(dk, n, cfg.local_dim, cfg.seed));
      } else if (cfg.prescription == "argmax-t") {
        t = argmax_phi_time(phi_at, cfg.sweep_start, cfg.sweep_stop);
      } else if (cfg.prescription != "fixed-t") {
        throw std::invalid_argument("unknown prescription '" + cfg.prescription + "'");
      }
      const double phi = phi_at(t);
      points.push_back({n, t, phi});
      csv.row({CsvWriter::cell(n), CsvWriter::cell(t), CsvWriter::cell(phi),
               CsvWriter::cell(phi > 0 ? std::log2(phi) : 0.0)});
    }
    emit(csv.path());
    const ScalingFit fit = fit_scaling(points, cfg.fit_vs_log_size);
    record.summary["slope"] = fit.slope;
    record.summary["intercept"] = fit.intercept;
    record.summary["max_residual"] = fit.max_residual;
    record.summary["excluded"] = static_cast<double>(fit.excluded_sizes.size());
  } else if (cfg.task == "complexes") {
    const System sys = build_system(cfg);
    PhiOptions opts;
    opts.workers = cfg.workers;
    const auto list = find_complexes(sys, opts);
    CsvWriter csv(out_path(cfg, "complexes.csv"));
    csv.header({"omega_mask", "phi", "is_complex"});
    int n_complexes = 0;
    for (const auto& item : list) {
      csv.row({CsvWriter::cell(std::size_t{item.omega.bits()}), CsvWriter::cell(item.phi),
               CsvWriter::cell(item.is_complex ? 1 : 0)});
      n_complexes += item.is_complex ? 1 : 0;
    }
    emit(csv.path());
    record.summary["complexes"] = n_complexes;
  } else if (cfg.task == "lr-scan") {
    const Network net = build_network(cfg);
    const SupportedOperator psi = build_state(net);
    const Channel ch = build_channel(cfg);
    const auto scan =
        lr_decay_scan(ch, psi, net, Direction::effect, SiteSubset(cfg.mechanism_mask));
    CsvWriter csv(out_path(cfg, "lr_scan.csv"));
    csv.comment("dynamics=" + ch.descriptor() +
                " mechanism_mask=" + std::to_string(cfg.mechanism_mask));
    csv.header({"distance", "xi"});
    for (const auto& p : scan)
      csv.row({CsvWriter::cell(p.distance), CsvWriter::cell(p.xi)});
    emit(csv.path());
  } else if (cfg.task == "haar-mc") {
    const int n = cfg.n_sites;
    CsvWriter csv(out_path(cfg, "haar_mc.csv"));
    csv.comment("samples=" + std::to_string(cfg.samples) + " seed=" + std::to_string(cfg.seed));
    csv.header({"p_size", "m_size", "direction", "mc_mean", "mc_stderr", "closed_form"});
    const SiteSubset sites = SiteSubset::full(n);
    Network net;
    net.n_sites = n;
    net.local_dim = cfg.local_dim;
    net.initial_state = parse_state(cfg.state, n, cfg.local_dim);
    const SupportedOperator psi = build_state(net);
    for (int ps = 0; ps <= n; ++ps)
      for (int ms = 0; ms <= n; ++ms) {
        const SiteSubset p = SiteSubset::full(ps);
        const SiteSubset m = SiteSubset::full(ms);
        for (Direction dir : {Direction::effect, Direction::cause}) {
          double sum = 0.0, sum_sq = 0.0;
          for (int s = 0; s < cfg.samples; ++s) {
            const Channel ch = Channel::unitary(
                sample_haar_unitary(dim_pow(cfg.local_dim, n), cfg.seed + s), sites,
                cfg.local_dim, "haar");
            const double value = purity(repertoire(ch, psi, dir, p, m));
            sum += value;
            sum_sq += value * value;
          }
          const double mean = sum / cfg.samples;
          const double var = std::max(0.0, sum_sq / cfg.samples - mean * mean);
          const double stderr_mean = std::sqrt(var / cfg.samples);
          csv.row({CsvWriter::cell(ps), CsvWriter::cell(ms), to_string(dir),
                   CsvWriter::cell(mean), CsvWriter::cell(stderr_mean),
                   CsvWriter::cell(haar_average_purity(n, cfg.local_dim, ps, ms))});
        }
      }
    emit(csv.path());
  } else if (cfg.task == "gue-mc") {
    const Network net = build_network(cfg);
    const SupportedOperator psi = build_state(net);
    const SiteSubset sites = SiteSubset::full(net.n_sites);
    CsvWriter csv(out_path(cfg, "gue_mc.csv"));
    csv.comment("samples=" + std::to_string(cfg.samples) +
                " seeds=" + std::to_string(cfg.seed) + ".." +
                std::to_string(cfg.seed + cfg.samples - 1) + " sign=+ grid=[" +
                format_double(cfg.sweep_start) + "," + format_double(cfg.sweep_stop) +
                "] points=" + std::to_string(cfg.sweep_points));
    csv.header({"t", "mean_phi", "stderr"});
    for (int i = 0; i < cfg.sweep_points; ++i) {
      const double t =
          cfg.sweep_start + (cfg.sweep_stop - cfg.sweep_start) * i / (cfg.sweep_points - 1);
      double sum = 0.0, sum_sq = 0.0;
      for (int s = 0; s < cfg.samples; ++s) {
        const ComplexMatrix h = sample_gue(dim_pow(net.local_dim, net.n_sites), cfg.seed + s);
        const System sys{sites, net.local_dim, psi,
                         Channel::unitary(herm_expm(h, t), sites, net.local_dim, "gue")};
        const double phi = phi_of_system(sys, cfg);
        sum += phi;
        sum_sq += phi * phi;
      }
      const double mean = sum / cfg.samples;
      const double var = std::max(0.0, sum_sq / cfg.samples - mean * mean);
      csv.row({CsvWriter::cell(t), CsvWriter::cell(mean),
               CsvWriter::cell(std::sqrt(var / cfg.samples))});
    }
    emit(csv.path());
  } else {
    throw std::invalid_argument("unknown task '" + cfg.task + "'");
  }

  record.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::cout << "task " << cfg.task << " done in " << record.elapsed_seconds << " s; hash "
            << record.config_hash << "\n";
  for (const auto& [key, value] : record.summary)
    std::cout << "  " << key << " = " << format_double(value) << "\n";
  for (const auto& f : record.emitted_files) std::cout << "  wrote " << f << "\n";
  return record;
}

namespace {

ExperimentConfig base_reproduce_config(const std::string& out_dir, int workers) {
  ExperimentConfig cfg;
  cfg.out_dir = out_dir;
  cfg.workers = workers;
  return cfg;
}

}  // namespace

RunRecord reproduce(const std::string& figure_id, const std::string& out_dir, int workers) {
  ExperimentConfig cfg = base_reproduce_config(out_dir, workers);
  cfg.raw_text = "reproduce = " + figure_id + "\n";

  if (figure_id == "fig2-solid") {
    cfg.task = "sweep-t";
    cfg.n_sites = 2;
    cfg.state = "uniform:0";
    cfg.dynamics = "hamiltonian:swap";
    cfg.sign = "+";
    cfg.sweep_points = 160;  // grid step below 0.01
    return run(cfg);
  }
  if (figure_id == "fig2-gue") {
    cfg.task = "gue-mc";
    cfg.n_sites = 2;
    cfg.state = "uniform:0";
    cfg.dynamics = "hamiltonian:gue";
    cfg.sign = "+";
    cfg.sweep_points = 64;
    cfg.samples = 100;
    cfg.seed = 0;
    return run(cfg);
  }
  if (figure_id == "fig3a") {
    const auto t0 = std::chrono::steady_clock::now();
    RunRecord record;
    record.config_hash = config_hash(cfg.raw_text);
    record.engine_version = engine_version;
    cfg.task = "sweep-t";
    cfg.state = "uniform:+";
    cfg.dynamics = "hamiltonian:z-global";
    cfg.sign = "+";
    fs::create_directories(out_dir);
    CsvWriter csv((fs::path(out_dir) / "fig3a.csv").string());
    csv.comment("phi(t) for the global-phase model, sizes 3..5, reference 2 s^2 c^2; "
                "prescription=sweep grid=[0," +
                format_double(cfg.sweep_stop) + "] points=" +
                std::to_string(cfg.sweep_points) + " seed=" + std::to_string(cfg.seed));
    csv.header({"n_sites", "t", "phi", "reference"});
    for (int n : {3, 4, 5}) {
      cfg.n_sites = n;
      const SweepResult sweep = sweep_phi(cfg);
      for (std::size_t i = 0; i < sweep.times.size(); ++i) {
        const double s = std::sin(sweep.times[i]), c = std::cos(sweep.times[i]);
        csv.row({CsvWriter::cell(n), CsvWriter::cell(sweep.times[i]),
                 CsvWriter::cell(sweep.phis[i]), CsvWriter::cell(2.0 * s * s * c * c)});
      }
    }
    record.emitted_files.push_back((fs::path(out_dir) / "fig3a.csv").string());
    record.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return record;
  }
  if (figure_id == "fig3b" || figure_id == "fig5-inset") {
    const auto t0 = std::chrono::steady_clock::now();
    RunRecord record;
    record.config_hash = config_hash(cfg.raw_text);
    record.engine_version = engine_version;
    cfg.task = "scaling";
    cfg.state = "uniform:+";
    cfg.dynamics = "hamiltonian:z-global";
    cfg.sign = "+";
    cfg.sizes = {3, 4, 5};
    cfg.action = 2.5;
    cfg.time = 0.5;
    const std::vector<std::string> prescriptions =
        figure_id == "fig3b"
            ? std::vector<std::string>{"fixed-t", "constant-action", "argmax-t"}
            : std::vector<std::string>{"constant-action"};
    for (const auto& presc : prescriptions) {
      ExperimentConfig sub = cfg;
      sub.prescription = presc;
      sub.out_dir = (fs::path(out_dir) / (figure_id + "-" + presc)).string();
      const RunRecord r = run(sub);
      record.summary["slope_" + presc] = r.summary.at("slope");
      record.summary["intercept_" + presc] = r.summary.at("intercept");
      for (const auto& f : r.emitted_files) record.emitted_files.push_back(f);
    }
    record.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return record;
  }
  if (figure_id == "fig5") {
    const auto t0 = std::chrono::steady_clock::now();
    RunRecord record;
    record.config_hash = config_hash(cfg.raw_text);
    record.engine_version = engine_version;
    cfg.task = "scaling";
    cfg.state = "uniform:0";
    cfg.sign = "-";
    cfg.sizes = {3, 4, 5};
    cfg.prescription = "constant-action";
    cfg.action = 2.5;
    cfg.fit_vs_log_size = true;
    for (const std::string model : {"xx-ring", "xx-full"}) {
      ExperimentConfig sub = cfg;
      sub.dynamics = "hamiltonian:" + model;
      sub.out_dir = (fs::path(out_dir) / ("fig5-" + model)).string();
      const RunRecord r = run(sub);
      record.summary["slope_" + model] = r.summary.at("slope");
      record.summary["intercept_" + model] = r.summary.at("intercept");
      for (const auto& f : r.emitted_files) record.emitted_files.push_back(f);
    }
    record.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return record;
  }
  throw std::invalid_argument("unknown figure id '" + figure_id + "'");
}

namespace {

void golden(GoldenReport& report, const std::string& name, double expected, double computed,
            double tolerance = 1e-9) {
  GoldenItem item{name, expected, computed, std::abs(expected - computed), false};
  item.pass = item.delta <= tolerance;
  if (!item.pass) ++report.failures;
  report.items.push_back(item);
}

System swap_system() {
  ExperimentConfig cfg;
  cfg.n_sites = 2;
  cfg.state = "uniform:0";
  cfg.dynamics = "unitary:swap";
  return build_system(cfg);
}

}  // namespace

GoldenReport goldens() {
  GoldenReport report;
  const SiteSubset s0 = SiteSubset::single(0);
  const SiteSubset s1 = SiteSubset::single(1);
  const SiteSubset both = SiteSubset::full(2);

  {  // Swap worked example.
    const System swap = swap_system();
    auto xi = [&](SiteSubset p, SiteSubset m) {
      return cause_effect_info(swap.channel, swap.state, Direction::effect, p, m);
    };
    golden(report, "swap xi(1|1)", 0.0, xi(s0, s0));
    golden(report, "swap xi(2|1)", 0.5, xi(s1, s0));
    golden(report, "swap xi(1|2)", 0.5, xi(s0, s1));
    golden(report, "swap xi(1|L)", 0.5, xi(s0, both));
    golden(report, "swap xi(L|L)", 0.75, xi(both, both));
    golden(report, "swap trace norm of psi^2 - 1/4", 1.5,
           trace_norm(SupportedOperator(
               both, 2,
               swap.state.matrix() - ComplexMatrix::Identity(4, 4) / 4.0)));
    RepertoireTable table(swap.channel, swap.state);
    auto phi_pm = [&](SiteSubset p, SiteSubset m) {
      return phi_over_pairings(table, Direction::effect, p, m).value;
    };
    golden(report, "swap phi(2|1)", 0.5, phi_pm(s1, s0));
    golden(report, "swap phi(1|2)", 0.5, phi_pm(s0, s1));
    golden(report, "swap phi(1|1)", 0.0, phi_pm(s0, s0));
    golden(report, "swap phi(L|1)", 0.0, phi_pm(both, s0));
    golden(report, "swap phi(L|L)", 0.0, phi_pm(both, both));
    const PhiResult result = compute_phi(swap);
    golden(report, "swap concept count", 2.0,
           static_cast<double>(result.cs_full.concepts.size()));
    golden(report, "swap core effect purview of {0}", 2.0,
           static_cast<double>(result.cs_full.concepts.at(1).effect.purview.bits()));
    golden(report, "swap Phi", 0.5, result.phi);
    golden(report, "swap Tr C(U)", 1.0, result.cs_full.total_phi());
    golden(report, "swap average xi", 15.0 / 64.0,
           average_xi(swap.channel, swap.state, Direction::effect));
  }

  {  // Average cause/effect information of factorized unitaries.
    for (const int d : {2, 3}) {
      for (int n = 1; n <= 4; ++n) {
        ExperimentConfig cfg;
        cfg.n_sites = n;
        cfg.local_dim = d;
        cfg.state = "uniform:0";
        cfg.dynamics = "unitary:identity";
        const System sys = build_system(cfg);
        const double closed = 1.0 - std::pow((3.0 * d + 1.0) / (4.0 * d), n);
        golden(report,
               "identity XI d=" + std::to_string(d) + " n=" + std::to_string(n), closed,
               average_xi(sys.channel, sys.state, Direction::effect));
      }
    }
  }

  {  // cNOT loses average cause/effect power relative to doing nothing.
    ExperimentConfig cfg;
    cfg.n_sites = 2;
    cfg.state = "uniform:1";
    cfg.dynamics = "unitary:cnot";
    const System sys = build_system(cfg);
    golden(report, "cnot average xi", 11.0 / 64.0,
           average_xi(sys.channel, sys.state, Direction::effect));
  }

  {  // Permutation networks.
    ExperimentConfig cfg;
    cfg.n_sites = 4;
    cfg.state = "uniform:0";
    cfg.dynamics = "unitary:permutation:1,2,3,0";  // single 4-cycle
    const System cycle4 = build_system(cfg);
    const PhiResult r4 = compute_phi(cycle4);
    golden(report, "4-cycle Phi", 0.75, r4.phi);
    golden(report, "4-cycle phi(site)", 0.5, r4.cs_full.concepts.at(1).phi);
    golden(report, "4-cycle concept count", 4.0,
           static_cast<double>(r4.cs_full.concepts.size()));

    cfg.dynamics = "unitary:permutation:1,0,3,2";  // two disjoint 2-cycles
    const System pairs = build_system(cfg);
    golden(report, "two 2-cycles Phi", 0.0, compute_phi(pairs).phi);

    golden(report, "2-site cycle Phi", 0.5, compute_phi(swap_system()).phi);
  }

  {  // Entanglement-activated integration.
    ExperimentConfig cfg;
    cfg.n_sites = 2;
    cfg.state = "bell";
    cfg.dynamics = "unitary:identity";
    const System sys = build_system(cfg);
    const PhiResult r = compute_phi(sys);
    golden(report, "bell concept count", 1.0,
           static_cast<double>(r.cs_full.concepts.size()));
    golden(report, "bell Phi", 0.75, r.phi);

    cfg.state = "uniform:+";
    golden(report, "identity product Phi", 0.0, compute_phi(build_system(cfg)).phi);
  }

  {  // Partial swap endpoints and closed-form mechanism values.
    ExperimentConfig cfg;
    cfg.n_sites = 2;
    cfg.state = "uniform:0";
    cfg.dynamics = "hamiltonian:swap";
    cfg.sign = "+";
    cfg.time = 0.0;
    golden(report, "partial swap Phi(0)", 0.0, compute_phi(build_system(cfg)).phi);
    cfg.time = M_PI_2;
    golden(report, "partial swap Phi(pi/2)", 0.5, compute_phi(build_system(cfg)).phi);

    const double t = 0.3;
    cfg.time = t;
    const System sys = build_system(cfg);
    RepertoireTable table(sys.channel, sys.state);
    const double c2 = std::cos(t) * std::cos(t), s2 = std::sin(t) * std::sin(t);
    const double w1 = s2 / 2 + std::sqrt(s2 * s2 / 4 + c2 * s2);
    const double w2 = c2 / 2 + std::sqrt(c2 * c2 / 4 + c2 * s2);
    golden(report, "partial swap phi(site) at t=0.3",
           0.5 * std::max({c2, s2, std::min(w1, w2)}),
           core_purview_in(table, Direction::effect, SiteSubset::single(0), sys.sites).phi);
    golden(report, "partial swap phi(full) at t=0.3",
           0.5 * std::min(s2 * (2 - s2 / 2), c2 * (2 - c2 / 2)),
           phi_over_pairings(table, Direction::effect, sys.sites, sys.sites).value);
  }

  {  // Global-phase model closed forms at a sample time.
    const double t = 0.7;
    const double st = std::sin(t), ct = std::cos(t);
    ExperimentConfig cfg;
    cfg.n_sites = 3;
    cfg.state = "uniform:+";
    cfg.dynamics = "hamiltonian:z-global";
    cfg.sign = "+";
    cfg.time = t;
    const System sys = build_system(cfg);
    RepertoireTable table(sys.channel, sys.state);
    const SiteSubset m2 = SiteSubset::of({0, 1});
    golden(report, "z-model phi(M|M) |M|=2", 2.0 * st * st * ct * ct,
           phi_over_pairings(table, Direction::effect, m2, m2).value);
    const SiteSubset all3 = SiteSubset::full(3);
    golden(report, "z-model phi(L|L)", std::abs(st * ct) * (1.0 + std::abs(st * ct)),
           phi_over_pairings(table, Direction::effect, all3, all3).value);
    cfg.time = 0.0;
    golden(report, "z-model Phi(0)", 0.0, compute_phi(build_system(cfg)).phi);
  }

  {  // Unital two-point correlators.
    ExperimentConfig cfg;
    cfg.n_sites = 2;
    cfg.state = "uniform:0";
    cfg.dynamics = "unitary:swap";
    const System sys = build_system(cfg);
    const CorrelatorTable g = correlator_table(sys.channel, Direction::effect, s1, s0);
    golden(report, "correlator G[0,0]", 1.0, g.g(0, 0));
    double off = 0.0;
    for (int b = 1; b < 4; ++b) off = std::max({off, std::abs(g.g(0, b)), std::abs(g.g(b, 0))});
    golden(report, "correlator G[0,b]=G[b,0]=0", 0.0, off);
    // The swap transports the Bloch vector intact.
    double dev = 0.0;
    for (int a = 1; a < 4; ++a)
      for (int b = 1; b < 4; ++b) dev = std::max(dev, std::abs(g.g(a, b) - (a == b ? 1.0 : 0.0)));
    golden(report, "correlator swap G=1", 0.0, dev);
  }

  {  // Haar-average purity at full purview and mechanism is exactly 1.
    golden(report, "haar purity |P|=|M|=n", 1.0, haar_average_purity(3, 2, 3, 3));
  }

  return report;
}

}  // namespace qiit
