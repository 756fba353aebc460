#pragma once

// Command-line front end. `run` is the whole program; tools/nlft.cpp only
// forwards argv. Exit status: 0 success, 1 I/O or validation error, 2 valid
// input outside the image of the requested transform.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nlft/errors.hpp"
#include "nlft/exppoly.hpp"
#include "nlft/io/generate.hpp"
#include "nlft/io/json.hpp"
#include "nlft/nlft_d.hpp"
#include "nlft/nlft_dual.hpp"
#include "nlft/nlft_e.hpp"
#include "nlft/oracle.hpp"
#include "nlft/tolerances.hpp"

namespace nlft::cli {

enum class Command {
  ForwardD,
  InverseD,
  ForwardE,
  InverseE,
  DualForward,
  DualInverse,
  CheckD,
  CheckE,
  Strata,
  Complexity,
  Oracle,
  Sample,
  Gen,
};

struct JobConfig {
  Command command = Command::Gen;
  std::string input_path = "-";
  std::string output_path = "-";
  Tolerances tol;
  std::uint64_t seed = 0;
  int N = 0;
  int M = 0;
  long k = 0;
  long l = 0;

  // Per-command switches.
  std::string kind;          // gen: delta | signal | constmass; oracle: dyson-e | dyson-d | step | gauge | stratum
  bool full = false;         // forward-d: unreduced transform
  bool weighted = false;     // forward-d / inverse-d: dx_n-weighted distribution
  int max_poles = 64;        // inverse-d
  double epsilon = 1e-3;     // oracle step / gauge
  double z = 1.0;            // oracle step
  long n = 1;                // oracle gauge
  double z_min = 0.0, z_max = 1.0;  // sample
  int count = 101;           // sample
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotInImage = 2;

/// "≈2.3e17" style rendering of a positive integer.
inline std::string approx_magnitude(const BigInt& value) {
  const std::string digits = value.str();
  if (digits.size() < 2) return "≈" + digits;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", std::stod(digits.substr(0, 15)) / std::pow(10.0, static_cast<double>(std::min<std::size_t>(digits.size(), 15) - 1)));
  std::string mantissa = buf;
  auto exponent = static_cast<long>(digits.size()) - 1;
  if (mantissa == "10.0") {
    mantissa = "1.0";
    ++exponent;
  }
  return "≈" + mantissa + "e" + std::to_string(exponent);
}

namespace detail {

inline double max_sample_deviation(const GridMat& l, const GridMat& r) { return max_abs_diff(l, r); }

inline void run_oracle(const JobConfig& cfg, std::ostream& out) {
  using io::json;
  json report;
  if (cfg.kind == "dyson-e") {
    const DiscreteSignal s = io::signal_from_json(io::read_json(cfg.input_path));
    const GridMat g = forward_e(s);
    double dev = 0.0;
    for (long z = 0; z < static_cast<long>(s.size()); ++z) {
      dev = std::max(dev, max_abs_diff(oracle::dyson_product_e(s, z), g.samples[static_cast<std::size_t>(z)]));
    }
    report = {{"check", cfg.kind}, {"max_deviation", dev}};
  } else if (cfg.kind == "dyson-d") {
    const DeltaDistribution d = io::distribution_from_json(io::read_json(cfg.input_path));
    const double dev = em_max_coeff_diff(oracle::dyson_delta_d(d, cfg.tol), forward_reduced_d(d, cfg.tol), cfg.tol.eps_f);
    report = {{"check", cfg.kind}, {"max_deviation", dev}};
  } else if (cfg.kind == "step") {
    const DeltaDistribution d = io::distribution_from_json(io::read_json(cfg.input_path));
    const QMat step = oracle::step_transform({d, cfg.epsilon}, cfg.z);
    const QMat limit = forward_d_at(d, cfg.z);
    report = {{"check", cfg.kind}, {"epsilon", cfg.epsilon}, {"z", cfg.z}, {"max_deviation", max_abs_diff(step, limit)}};
  } else if (cfg.kind == "gauge") {
    const DeltaDistribution d = io::distribution_from_json(io::read_json(cfg.input_path));
    const oracle::GaugePair p = oracle::gauge_check({d, cfg.epsilon}, cfg.n);
    report = {{"check", cfg.kind}, {"n", cfg.n}, {"max_deviation", max_abs_diff(p.lhs, p.rhs)}};
  } else if (cfg.kind == "stratum") {
    const auto arrays = oracle::enumerate_stratum(cfg.N, static_cast<int>(2 * cfg.k - 1), cfg.l);
    const BigInt closed = stratum_count(cfg.N, cfg.k, cfg.l);
    report = {{"check", cfg.kind}, {"enumerated", arrays.size()}, {"closed_form", closed.str()},
              {"match", BigInt(arrays.size()) == closed}};
  } else {
    throw Error(ErrorCode::BadConstraints, "unknown oracle check '" + cfg.kind + "'");
  }
  out << report.dump(2) << "\n";
}

}  // namespace detail

/// Executes one parsed job. Output JSON goes to cfg.output_path; human-readable
/// lines go to `out`.
inline int run(const JobConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    switch (cfg.command) {
      case Command::Gen: {
        if (cfg.kind == "delta") {
          io::write_json(cfg.output_path, io::to_json(io::gen_delta(cfg.N, cfg.seed)));
        } else if (cfg.kind == "signal") {
          io::write_json(cfg.output_path, io::to_json(io::gen_signal(cfg.N, cfg.seed)));
        } else if (cfg.kind == "constmass") {
          io::write_json(cfg.output_path, io::to_json(io::gen_gaps(cfg.M, cfg.seed)));
        } else {
          throw Error(ErrorCode::BadConstraints, "unknown instance kind '" + cfg.kind + "'");
        }
        break;
      }
      case Command::ForwardD: {
        DeltaDistribution d = io::distribution_from_json(io::read_json(cfg.input_path));
        if (cfg.weighted) {
          for (std::size_t n = 0; n < d.size(); ++n) {
            const double next = n + 1 < d.size() ? d.poles[n + 1].x : 1.0;
            d.poles[n].u *= next - d.poles[n].x;
          }
        }
        const ExpMat m = cfg.full ? forward_d(d, cfg.tol) : forward_reduced_d(d, cfg.tol);
        io::write_json(cfg.output_path, io::to_json(m));
        break;
      }
      case Command::InverseD: {
        const ExpMat m = io::expmat_from_json(io::read_json(cfg.input_path), cfg.tol);
        const DeltaDistribution d =
            cfg.weighted ? inverse_d_weighted(m, cfg.max_poles, cfg.tol) : inverse_d(m, cfg.max_poles, cfg.tol);
        io::write_json(cfg.output_path, io::to_json(d));
        break;
      }
      case Command::ForwardE: {
        io::write_json(cfg.output_path, io::to_json(forward_e(io::signal_from_json(io::read_json(cfg.input_path)))));
        break;
      }
      case Command::InverseE: {
        const GridMat g = io::grid_from_json(io::read_json(cfg.input_path));
        io::write_json(cfg.output_path, io::to_json(inverse_e(g, cfg.tol)));
        break;
      }
      case Command::DualForward: {
        const GapVector xi = io::gaps_from_json(io::read_json(cfg.input_path));
        io::write_json(cfg.output_path, io::to_json(io::ConstMassJob{xi.size(), constmass_samples(xi, cfg.tol)}));
        break;
      }
      case Command::DualInverse: {
        const io::ConstMassJob job = io::job_from_json(io::read_json(cfg.input_path));
        io::write_json(cfg.output_path, io::to_json(inverse_dual_constmass(job.samples, job.M, cfg.tol)));
        break;
      }
      case Command::CheckD: {
        const ExpMat m = io::expmat_from_json(io::read_json(cfg.input_path), cfg.tol);
        const bool member = membership_d(m, cfg.N, cfg.tol);
        out << (member ? "member" : "not a member") << "\n";
        return member ? kExitOk : kExitNotInImage;
      }
      case Command::CheckE: {
        const bool member = membership_e(io::grid_from_json(io::read_json(cfg.input_path)), cfg.tol);
        out << (member ? "member" : "not a member") << "\n";
        return member ? kExitOk : kExitNotInImage;
      }
      case Command::Strata: {
        if (cfg.N < 1 || cfg.k < 1 || cfg.l < 0 || cfg.l > cfg.N - 1) {
          throw Error(ErrorCode::BadConstraints, "strata needs N >= 1, k >= 1 and 0 <= l <= N-1");
        }
        const BigInt count = stratum_count(cfg.N, cfg.k, cfg.l);
        out << "#D_" << 2 * cfg.k - 1 << "(" << cfg.l << ") for N = " << cfg.N << ": " << count.str() << " ("
            << approx_magnitude(count) << ")\n";
        break;
      }
      case Command::Complexity: {
        if (cfg.N < 1) throw Error(ErrorCode::BadConstraints, "complexity needs N >= 1");
        const ComplexityReport r = complexity_report(cfg.N);
        out << io::json{{"N", cfg.N}, {"full", r.full}, {"modified", r.modified}, {"difference", r.difference}}.dump(2)
            << "\n";
        break;
      }
      case Command::Oracle:
        detail::run_oracle(cfg, out);
        break;
      case Command::Sample: {
        if (cfg.count < 1) throw Error(ErrorCode::BadConstraints, "sample needs count >= 1");
        const ExpMat m = io::expmat_from_json(io::read_json(cfg.input_path), cfg.tol);
        std::ostringstream csv;
        csv.precision(17);
        csv << "z,re_a,im_a,re_b,im_b\n";
        for (int i = 0; i < cfg.count; ++i) {
          const double z =
              cfg.count == 1 ? cfg.z_min : cfg.z_min + (cfg.z_max - cfg.z_min) * i / static_cast<double>(cfg.count - 1);
          const QMat q = em_eval(m, z);
          csv << z << "," << q.a.real() << "," << q.a.imag() << "," << q.b.real() << "," << q.b.imag() << "\n";
        }
        io::write_text(cfg.output_path, csv.str());
        break;
      }
    }
  } catch (const Error& e) {
    err << "nlft: " << e.what() << "\n";
    const bool outside_image = e.code() == ErrorCode::NotInImage || e.code() == ErrorCode::NotConstMass;
    return outside_image ? kExitNotInImage : kExitError;
  } catch (const std::exception& e) {
    err << "nlft: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Nonlinear Fourier transforms of Dirac combs and uniform signals"};
  app.require_subcommand(1);

  JobConfig cfg;
  auto add_io = [&](CLI::App* sub, bool input, bool output) {
    if (input) sub->add_option("-i,--input", cfg.input_path, "input JSON file ('-' for stdin)")->required();
    if (output) sub->add_option("-o,--output", cfg.output_path, "output file ('-' for stdout)");
  };
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--eps-f", cfg.tol.eps_f, "frequency merge distance")->envname("NLFT_TOL_EPS_F");
    sub->add_option("--eps-c", cfg.tol.eps_c, "coefficient prune threshold")->envname("NLFT_TOL_EPS_C");
    sub->add_option("--eps-peel", cfg.tol.eps_peel, "minimum diagonal weight at 0 for a peel")
        ->envname("NLFT_TOL_EPS_PEEL");
    sub->add_option("--eps-member", cfg.tol.eps_member, "identity residual tolerance")
        ->envname("NLFT_TOL_EPS_MEMBER");
  };
  auto sub = [&](const char* name, const char* help, Command c) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&cfg, c] { cfg.command = c; });
    return s;
  };

  auto* gen = sub("gen", "write a seeded random instance", Command::Gen);
  gen->add_option("--kind", cfg.kind, "delta | signal | constmass")
      ->required()
      ->check(CLI::IsMember({"delta", "signal", "constmass"}));
  gen->add_option("--N", cfg.N, "number of poles / samples");
  gen->add_option("--M", cfg.M, "number of gaps (constmass)");
  gen->add_option("--seed", cfg.seed, "random seed");
  add_io(gen, false, true);

  auto* fd = sub("forward-d", "delta-comb transform as exponential polynomials", Command::ForwardD);
  add_io(fd, true, true);
  add_tol(fd);
  fd->add_flag("--full", cfg.full, "write E(1,z) times the reduced transform");
  fd->add_flag("--weighted", cfg.weighted, "transform sum dx_n u_n delta_{x_n}");

  auto* id = sub("inverse-d", "layer-peeling inverse of the reduced delta-comb transform", Command::InverseD);
  add_io(id, true, true);
  add_tol(id);
  id->add_option("--N-max", cfg.max_poles, "maximum number of peels");
  id->add_flag("--weighted", cfg.weighted, "divide recovered weights by the gaps dx_n");

  auto* fe = sub("forward-e", "Euler grid transform", Command::ForwardE);
  add_io(fe, true, true);

  auto* ie = sub("inverse-e", "FFT layer-peeling inverse of the Euler grid transform", Command::InverseE);
  add_io(ie, true, true);
  add_tol(ie);

  auto* dfw = sub("dual-forward", "constant-mass dual transform samples", Command::DualForward);
  add_io(dfw, true, true);
  add_tol(dfw);

  auto* dinv = sub("dual-inverse", "recover gaps from constant-mass dual samples", Command::DualInverse);
  add_io(dinv, true, true);
  add_tol(dinv);

  auto* cd = sub("check-d", "membership test for the reduced delta-comb transform", Command::CheckD);
  add_io(cd, true, false);
  add_tol(cd);
  cd->add_option("--N", cfg.N, "number of poles")->required();

  auto* ce = sub("check-e", "membership test for the Euler grid transform", Command::CheckE);
  add_io(ce, true, false);
  add_tol(ce);

  auto* st = sub("strata", "size of the stratum D_{2k-1}(l)", Command::Strata);
  st->add_option("--N", cfg.N)->required();
  st->add_option("--k", cfg.k)->required();
  st->add_option("--l", cfg.l)->required();

  auto* cx = sub("complexity", "N^2 ln N against ln H(N)", Command::Complexity);
  cx->add_option("--N", cfg.N)->required();

  auto* orc = sub("oracle", "brute-force cross-checks", Command::Oracle);
  orc->add_option("--kind", cfg.kind, "dyson-e | dyson-d | step | gauge | stratum")
      ->required()
      ->check(CLI::IsMember({"dyson-e", "dyson-d", "step", "gauge", "stratum"}));
  orc->add_option("-i,--input", cfg.input_path, "input JSON file");
  add_tol(orc);
  orc->add_option("--epsilon", cfg.epsilon, "spike width for step profiles");
  orc->add_option("--z", cfg.z, "spectral point for the step check");
  orc->add_option("--n", cfg.n, "integer spectral point for the gauge check");
  orc->add_option("--N", cfg.N, "grid size for stratum enumeration");
  orc->add_option("--k", cfg.k, "stratum order (d = 2k-1)");
  orc->add_option("--l", cfg.l, "alternating sum");

  auto* smp = sub("sample", "evaluate an ExpMat on a z-grid and write CSV", Command::Sample);
  add_io(smp, true, true);
  add_tol(smp);
  smp->add_option("--z-min", cfg.z_min);
  smp->add_option("--z-max", cfg.z_max);
  smp->add_option("--count", cfg.count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }
  return run(cfg, out, err);
}

}  // namespace nlft::cli
