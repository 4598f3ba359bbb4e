// JSON (de)serialization with field-addressed validation errors.
//
// Complex numbers are [re, im] arrays throughout; polynomial coefficient
// lists are ascending in degree.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "atto/blaschke.hpp"
#include "atto/fourier.hpp"
#include "atto/modelspace.hpp"
#include "atto/rational.hpp"
#include "atto/symbol.hpp"
#include "atto/tto.hpp"

namespace atto {

using json = nlohmann::ordered_json;

inline json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline cplx complex_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError(path + ": expected a [re, im] pair");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

inline json to_json(const Polynomial& p) {
  json a = json::array();
  for (cplx c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

inline Polynomial polynomial_from_json(const json& j, const std::string& path) {
  if (!j.is_array())
    throw ConfigError(path + ": expected an array of [re, im] pairs");
  std::vector<cplx> c;
  c.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k)
    c.push_back(complex_from_json(j[k], path + "[" + std::to_string(k) + "]"));
  return Polynomial(std::move(c));
}

inline json to_json(const BlaschkeProduct& b) {
  json zeros = json::array();
  for (cplx a : b.zeros()) zeros.push_back(to_json(a));
  return json{{"constant", to_json(b.constant())}, {"zeros", zeros}};
}

inline BlaschkeProduct blaschke_from_json(const json& j,
                                          const std::string& path) {
  if (!j.is_object())
    throw ConfigError(path + ": expected {\"constant\", \"zeros\"}");
  cplx c(1.0, 0.0);
  if (j.contains("constant"))
    c = complex_from_json(j.at("constant"), path + ".constant");
  if (std::abs(std::abs(c) - 1.0) > 1e-8)
    throw ConfigError(path + ".constant: modulus " +
                      std::to_string(std::abs(c)) + " is not 1");
  c /= std::abs(c);  // absorb decimal rounding
  if (!j.contains("zeros") || !j.at("zeros").is_array())
    throw ConfigError(path + ".zeros: expected an array of [re, im] pairs");
  const json& zj = j.at("zeros");
  std::vector<cplx> zeros;
  zeros.reserve(zj.size());
  for (std::size_t k = 0; k < zj.size(); ++k) {
    std::string zpath = path + ".zeros[" + std::to_string(k) + "]";
    cplx z = complex_from_json(zj[k], zpath);
    if (std::abs(z) > 1.0 - kInteriorMargin)
      throw ConfigError(zpath + ": modulus " + std::to_string(std::abs(z)) +
                        " is not strictly inside the unit disk");
    zeros.push_back(z);
  }
  if (zeros.empty())
    throw ConfigError(path + ".zeros: at least one zero is required");
  return BlaschkeProduct(c, std::move(zeros));
}

inline json to_json(const RationalAnalytic& r) {
  return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

inline RationalAnalytic rational_from_json(const json& j,
                                           const std::string& path) {
  if (!j.is_object() || !j.contains("num"))
    throw ConfigError(path + ": expected {\"num\", optional \"den\"}");
  Polynomial num = polynomial_from_json(j.at("num"), path + ".num");
  Polynomial den{cplx(1.0)};
  if (j.contains("den")) den = polynomial_from_json(j.at("den"), path + ".den");
  try {
    return RationalAnalytic(std::move(num), std::move(den));
  } catch (const PoleOnOrInsideDisk& e) {
    throw ConfigError(path + ".den: " + e.what());
  }
}

inline json to_json(const Symbol& s) {
  return json{{"g_plus", to_json(s.g_plus())},
              {"g_minus", to_json(s.g_minus())}};
}

inline Symbol symbol_from_json(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("g_plus") || !j.contains("g_minus"))
    throw ConfigError(path + ": expected {\"g_plus\", \"g_minus\"}");
  return Symbol(rational_from_json(j.at("g_plus"), path + ".g_plus"),
                rational_from_json(j.at("g_minus"), path + ".g_minus"));
}

inline json to_json(const ModelSpaceElement& f) {
  json coeffs = json::array();
  for (int k = 0; k < f.coeffs().size(); ++k) coeffs.push_back(to_json(f.coeffs()(k)));
  return json{{"alpha", to_json(f.basis().alpha())}, {"coeffs", coeffs}};
}

inline ModelSpaceElement element_from_json(const json& j,
                                           const std::string& path) {
  if (!j.is_object() || !j.contains("alpha") || !j.contains("coeffs"))
    throw ConfigError(path + ": expected {\"alpha\", \"coeffs\"}");
  ModelSpaceBasis basis(blaschke_from_json(j.at("alpha"), path + ".alpha"));
  const json& cj = j.at("coeffs");
  if (!cj.is_array() || static_cast<int>(cj.size()) != basis.dim())
    throw ConfigError(path + ".coeffs: expected " +
                      std::to_string(basis.dim()) + " coefficients");
  Eigen::VectorXcd c(basis.dim());
  for (int k = 0; k < basis.dim(); ++k)
    c(k) = complex_from_json(cj[static_cast<std::size_t>(k)],
                             path + ".coeffs[" + std::to_string(k) + "]");
  return ModelSpaceElement(std::move(basis), std::move(c));
}

inline json to_json(const AttoMatrix& m) {
  json rows = json::array();
  for (int j = 0; j < m.entries.rows(); ++j) {
    json row = json::array();
    for (int k = 0; k < m.entries.cols(); ++k)
      row.push_back(to_json(m.entries(j, k)));
    rows.push_back(std::move(row));
  }
  return json{{"alpha", to_json(m.alpha)},
              {"beta", to_json(m.beta)},
              {"entries", std::move(rows)},
              {"norm", m.operator_norm()}};
}

/// Symbol field of an instance: either explicit analytic parts or one of
/// the builder tags.
struct SymbolSpec {
  enum class Kind { direct, zero_class, rank_one_a, rank_one_b, rank_one_boundary };
  Kind kind = Kind::direct;
  std::optional<Symbol> direct;
  std::optional<RationalAnalytic> h1, h2;  // zero_class
  cplx point{0.0, 0.0};                    // w or eta
};

struct InstanceConfig {
  BlaschkeProduct alpha;
  BlaschkeProduct beta;
  SymbolSpec symbol;
  double tol_matrix = 1e-9;
  double tol_quadrature = 1e-12;
  std::uint64_t seed = 1;

  QuadratureOptions quadrature() const {
    QuadratureOptions opt;
    opt.tol = tol_quadrature;
    return opt;
  }
};

inline SymbolSpec symbol_spec_from_json(const json& j,
                                        const std::string& path) {
  SymbolSpec spec;
  if (!j.is_object()) throw ConfigError(path + ": expected an object");
  if (!j.contains("builder")) {
    spec.kind = SymbolSpec::Kind::direct;
    spec.direct = symbol_from_json(j, path);
    return spec;
  }
  std::string tag = j.at("builder").get<std::string>();
  if (tag == "zero_class") {
    spec.kind = SymbolSpec::Kind::zero_class;
    if (!j.contains("h1") || !j.contains("h2"))
      throw ConfigError(path + ": zero_class builder needs \"h1\" and \"h2\"");
    spec.h1 = rational_from_json(j.at("h1"), path + ".h1");
    spec.h2 = rational_from_json(j.at("h2"), path + ".h2");
  } else if (tag == "rank_one_a" || tag == "rank_one_b") {
    spec.kind = tag == "rank_one_a" ? SymbolSpec::Kind::rank_one_a
                                    : SymbolSpec::Kind::rank_one_b;
    if (!j.contains("w"))
      throw ConfigError(path + ": " + tag + " builder needs \"w\"");
    spec.point = complex_from_json(j.at("w"), path + ".w");
    if (std::abs(spec.point) > 1.0 - kInteriorMargin)
      throw ConfigError(path + ".w: not strictly inside the unit disk");
  } else if (tag == "rank_one_boundary") {
    spec.kind = SymbolSpec::Kind::rank_one_boundary;
    if (!j.contains("eta"))
      throw ConfigError(path + ": rank_one_boundary builder needs \"eta\"");
    spec.point = complex_from_json(j.at("eta"), path + ".eta");
    if (std::abs(std::abs(spec.point) - 1.0) > 1e-8)
      throw ConfigError(path + ".eta: modulus " +
                        std::to_string(std::abs(spec.point)) + " is not 1");
    spec.point /= std::abs(spec.point);
  } else {
    throw ConfigError(path + ".builder: unknown builder \"" + tag + "\"");
  }
  return spec;
}

inline InstanceConfig instance_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  if (!j.contains("alpha")) throw ConfigError("alpha: missing");
  if (!j.contains("beta")) throw ConfigError("beta: missing");
  if (!j.contains("symbol")) throw ConfigError("symbol: missing");
  InstanceConfig cfg{blaschke_from_json(j.at("alpha"), "alpha"),
                     blaschke_from_json(j.at("beta"), "beta"),
                     symbol_spec_from_json(j.at("symbol"), "symbol")};
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    if (t.contains("matrix")) cfg.tol_matrix = t.at("matrix").get<double>();
    if (t.contains("quadrature"))
      cfg.tol_quadrature = t.at("quadrature").get<double>();
  }
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  return cfg;
}

/// Builds the concrete Symbol an instance describes.
inline Symbol realize_symbol(const InstanceConfig& cfg) {
  switch (cfg.symbol.kind) {
    case SymbolSpec::Kind::direct:
      return *cfg.symbol.direct;
    case SymbolSpec::Kind::zero_class:
      return zero_class_symbol(cfg.alpha, cfg.beta, *cfg.symbol.h1,
                               *cfg.symbol.h2);
    case SymbolSpec::Kind::rank_one_a:
      return rank_one_interior_a(cfg.alpha, cfg.beta, DiskPoint(cfg.symbol.point),
                                 cfg.quadrature())
          .first;
    case SymbolSpec::Kind::rank_one_b:
      return rank_one_interior_b(cfg.alpha, cfg.beta, DiskPoint(cfg.symbol.point),
                                 cfg.quadrature())
          .first;
    case SymbolSpec::Kind::rank_one_boundary:
      return rank_one_boundary(cfg.alpha, cfg.beta,
                               BoundaryPoint(cfg.symbol.point),
                               cfg.quadrature())
          .first;
  }
  throw ConfigError("symbol: unreachable builder kind");
}

}  // namespace atto
