#pragma once

// JSON encodings of the library's value types. Doubles are written in shortest
// round-trip form, so every document re-parses into bit-identical values.

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nlft/errors.hpp"
#include "nlft/exppoly.hpp"
#include "nlft/nlft_d.hpp"
#include "nlft/nlft_dual.hpp"
#include "nlft/nlft_e.hpp"
#include "nlft/tolerances.hpp"

namespace nlft::io {

using json = nlohmann::json;

inline json complex_to_json(Complex c) { return {{"re", c.real()}, {"im", c.imag()}}; }

inline Complex complex_from_json(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

inline json to_json(const ExpPoly& p) {
  json arr = json::array();
  for (const Term& t : p.terms()) arr.push_back({{"freq", t.freq}, {"re", t.coeff.real()}, {"im", t.coeff.imag()}});
  return arr;
}

inline ExpPoly exppoly_from_json(const json& j, const Tolerances& tol = {}) {
  std::vector<Term> raw;
  for (const json& t : j) raw.push_back({t.at("freq").get<double>(), complex_from_json(t)});
  return ep_normalize(std::move(raw), tol);
}

inline json to_json(const ExpMat& m) { return {{"a", to_json(m.a)}, {"b", to_json(m.b)}}; }

inline ExpMat expmat_from_json(const json& j, const Tolerances& tol = {}) {
  return {exppoly_from_json(j.at("a"), tol), exppoly_from_json(j.at("b"), tol)};
}

inline json to_json(const DeltaDistribution& d) {
  json poles = json::array();
  for (const Pole& p : d.poles) poles.push_back({{"x", p.x}, {"re", p.u.real()}, {"im", p.u.imag()}});
  return {{"poles", poles}};
}

inline DeltaDistribution distribution_from_json(const json& j) {
  DeltaDistribution d;
  for (const json& p : j.at("poles")) d.poles.push_back({p.at("x").get<double>(), complex_from_json(p)});
  validate(d);
  return d;
}

inline json to_json(const DiscreteSignal& s) {
  json u = json::array();
  for (Complex c : s.u) u.push_back(complex_to_json(c));
  return {{"u", u}};
}

inline DiscreteSignal signal_from_json(const json& j) {
  DiscreteSignal s;
  for (const json& c : j.at("u")) s.u.push_back(complex_from_json(c));
  if (s.u.empty()) throw Error(ErrorCode::LengthMismatch, "signal must have at least one sample");
  return s;
}

inline json samples_to_json(std::span<const QMat> samples) {
  json arr = json::array();
  for (const QMat& m : samples) arr.push_back({{"a", complex_to_json(m.a)}, {"b", complex_to_json(m.b)}});
  return arr;
}

inline std::vector<QMat> samples_from_json(const json& j) {
  std::vector<QMat> out;
  for (const json& m : j) out.push_back({complex_from_json(m.at("a")), complex_from_json(m.at("b"))});
  return out;
}

inline json to_json(const GridMat& g) { return {{"N", g.size()}, {"samples", samples_to_json(g.samples)}}; }

inline GridMat grid_from_json(const json& j) {
  GridMat g{samples_from_json(j.at("samples"))};
  if (j.at("N").get<std::size_t>() != g.size()) throw Error(ErrorCode::LengthMismatch, "N does not match sample count");
  return g;
}

inline json to_json(const GapVector& g) { return {{"xi", g.xi}}; }

inline GapVector gaps_from_json(const json& j) {
  GapVector g{j.at("xi").get<std::vector<double>>()};
  validate(g);
  return g;
}

/// Samples of the reduced constant-mass dual transform at zeta = 0..M-1.
struct ConstMassJob {
  std::size_t M = 0;
  std::vector<QMat> samples;
};

inline json to_json(const ConstMassJob& job) { return {{"M", job.M}, {"samples", samples_to_json(job.samples)}}; }

inline ConstMassJob job_from_json(const json& j) {
  ConstMassJob job{j.at("M").get<std::size_t>(), samples_from_json(j.at("samples"))};
  if (job.samples.size() != job.M) throw Error(ErrorCode::LengthMismatch, "M does not match sample count");
  return job;
}

inline json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Io, path + ": " + e.what());
  }
}

inline void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << text;
}

inline void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

}  // namespace nlft::io
