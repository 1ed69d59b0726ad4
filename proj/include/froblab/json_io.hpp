#ifndef FROBLAB_JSON_IO_HPP
#define FROBLAB_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "froblab/cartier.hpp"
#include "froblab/kgroups.hpp"
#include "froblab/parse.hpp"

namespace froblab {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Ring specs: {"ring":"GF","p":2,"r":2}, {"ring":"PolyRing","p":2},
// {"ring":"RatFunc","p":2}, {"ring":"Product","p":2,"rs":[1,2]},
// {"ring":"Quotient","p":2,"f":[0,0,1]}. baseExp defaults to 1 for GF and
// Product, and to r for PolyRing/RatFunc coefficients.
// ---------------------------------------------------------------------------

inline RingPtr ring_from_json(const json& j) {
  require(j.is_object() && j.contains("ring"), errc::invalid_params,
          "ring spec must be an object with a \"ring\" kind");
  const std::string kind = j.at("ring").get<std::string>();
  const i64 p = j.value("p", i64{2});
  if (kind == "GF") {
    i64 r = j.value("r", i64{1});
    i64 be = j.value("baseExp", i64{1});
    return make_finite_field(p, r, be);
  }
  if (kind == "PolyRing") {
    i64 r = j.value("r", i64{1});
    return make_poly_ring(p, r);
  }
  if (kind == "RatFunc") {
    i64 r = j.value("r", i64{1});
    return make_ratfunc(p, r);
  }
  if (kind == "Product") {
    i64 be = j.value("baseExp", i64{1});
    std::vector<FieldSpecPtr> factors;
    for (const auto& rv : j.at("rs")) factors.push_back(FieldSpec::make(p, rv.get<i64>(), be));
    return make_product(std::move(factors));
  }
  if (kind == "Quotient") {
    i64 r = j.value("r", i64{1});
    auto spec = FieldSpec::make(p, r, r);
    std::vector<FqElem> coeffs;
    for (const auto& cv : j.at("f")) {
      if (cv.is_array()) {
        coeffs.emplace_back(spec, cv.get<std::vector<i64>>());
      } else {
        coeffs.push_back(FqElem::from_int(spec, cv.get<i64>()));
      }
    }
    return make_quotient(p, r, FqPoly(spec, std::move(coeffs)));
  }
  fail(errc::unsupported_ring, "unknown ring kind \"" + kind + "\"");
}

inline json field_spec_to_json(const FieldSpec& s) {
  return json{{"p", s.p}, {"r", s.r}, {"baseExp", s.base_exp}, {"modulus", s.modulus}};
}

inline json fq_to_json(const FqElem& a) { return json(a.coeffs()); }

inline json fqpoly_to_json(const FqPoly& f) {
  json arr = json::array();
  for (i64 i = 0; i <= f.degree(); ++i) {
    FqElem c = f.coeff(static_cast<std::size_t>(i));
    if (c.spec()->r == 1) {
      arr.push_back(c.coeffs()[0]);
    } else {
      arr.push_back(c.coeffs());
    }
  }
  return arr;
}

// ---------------------------------------------------------------------------
// Cartier modules:
// {"p":2,"baseExp":1,"blocks":[{"scalarDegree":1,"dim":2,"C":[[0,1],[0,0]]}]}
// C rows list the images of the F_p-basis vectors (the matrix is
// (dim*baseExp*scalarDegree)^2 over F_p). Non-reduced blocks replace
// "scalarDegree" with "quotient": coefficients of f for F_q[y]/(f).
// ---------------------------------------------------------------------------

inline CartierModule cartier_from_json(const json& j) {
  CartierModule m;
  m.p = j.value("p", i64{2});
  m.base_exp = j.value("baseExp", i64{1});
  require(j.contains("blocks") && j.at("blocks").is_array(), errc::invalid_params,
          "module needs a \"blocks\" array");
  for (const auto& bj : j.at("blocks")) {
    const i64 rank = bj.value("dim", i64{0});
    RingPtr scalars;
    if (bj.contains("quotient")) {
      auto spec = FieldSpec::make(m.p, m.base_exp, m.base_exp);
      std::vector<FqElem> coeffs;
      for (const auto& cv : bj.at("quotient")) {
        if (cv.is_array()) {
          coeffs.emplace_back(spec, cv.get<std::vector<i64>>());
        } else {
          coeffs.push_back(FqElem::from_int(spec, cv.get<i64>()));
        }
      }
      scalars = make_quotient(m.p, m.base_exp, FqPoly(spec, std::move(coeffs)), 'y');
    } else {
      const i64 sdeg = bj.value("scalarDegree", i64{1});
      scalars = make_finite_field(m.p, m.base_exp * sdeg, m.base_exp);
    }
    Block b = standard_block(scalars, rank);
    if (bj.contains("C")) {
      const auto& cj = bj.at("C");
      require(cj.is_array() && cj.size() == b.dim(), errc::invalid_params,
              "C must be a square matrix of the block's F_p-dimension");
      for (std::size_t i = 0; i < b.dim(); ++i) {
        require(cj[i].is_array() && cj[i].size() == b.dim(), errc::invalid_params,
                "C must be a square matrix of the block's F_p-dimension");
        // row i lists the image of basis vector i: internal column i
        for (std::size_t k = 0; k < b.dim(); ++k)
          b.cmat.at(k, i) = fp_norm(cj[i][k].get<i64>(), m.p);
      }
    }
    m.blocks.push_back(std::move(b));
  }
  return m;
}

inline json cartier_to_json(const CartierModule& m) {
  json blocks = json::array();
  for (const auto& b : m.blocks) {
    json bj;
    if (b.scalars->kind() == RingKind::quotient) {
      const auto& qr = static_cast<const QuotientBaseRing&>(*b.scalars);
      bj["quotient"] = fqpoly_to_json(qr.modulus());
      bj["dim"] = static_cast<i64>(b.dim()) / scalar_fp_dim(b.scalars);
    } else {
      bj["scalarDegree"] = b.scalars->coeff_spec()->r / m.base_exp;
      bj["dim"] = scalar_fp_dim(b.scalars) == 0
                      ? 0
                      : static_cast<i64>(b.dim()) / scalar_fp_dim(b.scalars);
    }
    json rows = json::array();
    for (std::size_t i = 0; i < b.dim(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < b.dim(); ++k) row.push_back(b.cmat.at(k, i));
      rows.push_back(std::move(row));
    }
    bj["C"] = std::move(rows);
    blocks.push_back(std::move(bj));
  }
  return json{{"p", m.p}, {"baseExp", m.base_exp}, {"blocks", std::move(blocks)}};
}

// ---------------------------------------------------------------------------
// Results.
// ---------------------------------------------------------------------------

inline json simple_factor_to_json(const SimpleFactor& f) {
  return json{{"point", f.point},
              {"f", fqpoly_to_json(f.min_poly)},
              {"multiplicity", f.multiplicity},
              {"endoDegree", f.endo_degree}};
}

inline json k0_class_to_json(const K0Class& cls) {
  json arr = json::array();
  for (const auto& [key, mult] : cls.terms())
    arr.push_back(json{{"point", key.point},
                       {"f", fqpoly_to_json(key.f)},
                       {"endoDegree", key.endo_degree},
                       {"mult", mult}});
  return arr;
}

inline json trace_to_json(const TraceFunction& t) {
  json vals = json::object();
  for (const auto& [i, v] : t.values) vals[std::to_string(i)] = fq_to_json(v);
  return json{{"field", field_spec_to_json(*t.fq)}, {"values", std::move(vals)}};
}

inline json exactness_to_json(const ExactnessReport& rep) {
  json degs = json::array();
  for (const auto& d : rep.degrees)
    degs.push_back(json{{"degree", d.degree},
                        {"imPsi", d.dim_im_psi},
                        {"kerPhi", d.dim_ker_phi},
                        {"imIncrement", d.im_increment},
                        {"equal", d.equal}});
  return json{{"psiInjective", rep.psi_injective},
              {"phiSurjective", rep.phi_surjective},
              {"degrees", std::move(degs)},
              {"exact", rep.exact}};
}

inline json taelman_to_json(const TaelmanReport& rep) {
  return json{{"spanning", rep.spanning},
              {"deltasMatch", rep.deltas_match},
              {"relationSamples", rep.relation_samples},
              {"relationFailures", rep.relation_failures},
              {"pMultipleSamples", rep.p_multiple_samples},
              {"pMultipleFailures", rep.p_multiple_failures},
              {"ok", rep.ok()}};
}

inline DPresentation presentation_from_json(const json& j) {
  RingPtr ring = ring_from_json(j.at("ring"));
  DPresentation pres{ring, j.at("generators").get<i64>(), {}};
  if (j.contains("relations")) {
    for (const auto& row : j.at("relations")) {
      std::vector<SkewPoly> r;
      for (const auto& cell : row) r.push_back(parse_skew_expr(cell.get<std::string>(), ring));
      pres.relations.push_back(std::move(r));
    }
  }
  return pres;
}

}  // namespace froblab

#endif  // FROBLAB_JSON_IO_HPP
