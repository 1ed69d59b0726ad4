// froblab: exact computations in Frobenius skew polynomial rings R[F],
// their Ore localizations, Cartier modules, and K_0-level invariants.
//
// Every command prints one deterministic JSON document (sorted keys, fixed
// indentation). Exit codes: 0 success, 1 domain error (JSON error object),
// 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "froblab/fmodules.hpp"
#include "froblab/json_io.hpp"
#include "froblab/kgroups.hpp"
#include "froblab/ore.hpp"

using namespace froblab;

namespace {

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

struct Emitter {
  std::string command;
  std::vector<std::string> inputs;
  json checks = json::array();
  std::string out_path;

  void check(const std::string& name, bool pass) {
    checks.push_back(json{{"name", name}, {"pass", pass}});
  }

  int emit(json result) {
    json doc;
    doc["command"] = command;
    std::uint64_t h = fnv1a(command);
    for (const auto& s : inputs) h = fnv1a(s, h);
    doc["inputs"] = json{{"count", inputs.size()}, {"hash", hex64(h)}};
    doc["result"] = std::move(result);
    if (!checks.empty()) doc["checks"] = checks;
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      require(f.good(), errc::invalid_params, "cannot open output file " + out_path);
      f << text;
    }
    return 0;
  }
};

json load_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
    std::ifstream f(arg, std::ios::binary);
    require(f.good(), errc::invalid_params, "cannot read " + arg);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::invalid_params, std::string("malformed JSON input: ") + e.what());
  }
}

Block single_block_module(const json& j) {
  CartierModule m = cartier_from_json(j);
  require(m.blocks.size() == 1, errc::invalid_params, "expected a single-block module");
  return m.blocks[0];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic in Frobenius skew rings, Ore localizations,\n"
               "Cartier modules, and K0-level invariants"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string ring_json = R"({"ring":"GF","p":2,"r":1})";
  std::string out_path;
  std::uint64_t seed = 0;
  app.add_option("--ring", ring_json, "base ring spec (JSON)");
  app.add_option("--out", out_path, "write the JSON document to this file");
  app.add_option("--seed", seed, "seed for randomized subcommands");

  // ---- skew ----
  auto* skew = app.add_subcommand("skew", "skew polynomial arithmetic");
  skew->require_subcommand(1);
  std::string arg_a, arg_b;
  auto* skew_mul = skew->add_subcommand("mul", "normal form of a product");
  skew_mul->add_option("A", arg_a)->required();
  skew_mul->add_option("B", arg_b)->required();
  auto* skew_divr = skew->add_subcommand("divr", "division A = Q*B + R");
  skew_divr->add_option("A", arg_a)->required();
  skew_divr->add_option("B", arg_b)->required();
  auto* skew_divl = skew->add_subcommand("divl", "division A = B*Q + R");
  skew_divl->add_option("A", arg_a)->required();
  skew_divl->add_option("B", arg_b)->required();
  auto* skew_gcrd = skew->add_subcommand("gcrd", "gcrd, lclm and cofactors");
  skew_gcrd->add_option("A", arg_a)->required();
  skew_gcrd->add_option("B", arg_b)->required();

  // ---- ore ----
  auto* ore = app.add_subcommand("ore", "Ore witnesses, localization, fractions");
  ore->require_subcommand(1);
  std::string side = "left";
  auto* ore_witness = ore->add_subcommand("witness", "permutability witness for (s, r)");
  ore_witness->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  std::string arg_s, arg_r;
  ore_witness->add_option("S", arg_s)->required();
  ore_witness->add_option("R", arg_r)->required();
  i64 maxdeg = 4, tdeg = 12;
  auto* ore_search = ore->add_subcommand("search", "bounded common right multiple search");
  ore_search->add_option("--maxdeg", maxdeg, "degree bound for the witness pair");
  ore_search->add_option("--tdeg", tdeg, "t-degree bound for F_q(t) coefficients");
  ore_search->add_option("A", arg_a)->required();
  ore_search->add_option("B", arg_b)->required();
  std::string arg_f = "x";
  auto* ore_localize = ore->add_subcommand("localize", "normal form in (S^{-1}R)[F]");
  ore_localize->add_option("NUM", arg_a)->required();
  ore_localize->add_option("DEN", arg_b)->required();
  ore_localize->add_option("--f", arg_f, "S is the set of powers of f");
  std::string dfrac_op = "add";
  std::string arg_n1, arg_d1, arg_n2 = "0", arg_d2 = "1";
  auto* ore_dfrac = ore->add_subcommand("dfrac", "arithmetic in the skew fraction field D");
  ore_dfrac->add_option("--op", dfrac_op, "add, mul or inv")
      ->check(CLI::IsMember({"add", "mul", "inv"}));
  ore_dfrac->add_option("N1", arg_n1)->required();
  ore_dfrac->add_option("D1", arg_d1)->required();
  ore_dfrac->add_option("N2", arg_n2);
  ore_dfrac->add_option("D2", arg_d2);

  // ---- koszul ----
  auto* koszul = app.add_subcommand("koszul", "twisted Koszul presentations");
  koszul->require_subcommand(1);
  std::string module_arg;
  auto* koszul_present = koszul->add_subcommand("present", "psi matrix of a module");
  koszul_present->add_option("MODULE", module_arg, "module JSON (inline or file)")->required();
  i64 bound = 6;
  auto* koszul_check = koszul->add_subcommand("check", "truncated exactness report");
  koszul_check->add_option("MODULE", module_arg)->required();
  koszul_check->add_option("--bound", bound, "X-degree truncation bound");

  // ---- ideal ----
  auto* ideal = app.add_subcommand("ideal", "right ideals and the degree filtration");
  ideal->require_subcommand(1);
  std::vector<std::string> gen_args;
  i64 filt_d = 4, dbound = 6;
  auto* ideal_reduce = ideal->add_subcommand("reduce", "inductive reduction process");
  ideal_reduce->add_option("GENS", gen_args)->required();
  auto* ideal_filt = ideal->add_subcommand("filtration", "basis of the span of degree <= d");
  ideal_filt->add_option("--d", filt_d);
  ideal_filt->add_option("GENS", gen_args)->required();
  auto* ideal_coker = ideal->add_subcommand("coker", "per-degree dims of I^{<=d}/(I^{<=d-1}F)");
  ideal_coker->add_option("--dbound", dbound);
  ideal_coker->add_option("GENS", gen_args)->required();

  // ---- cartier ----
  auto* cartier = app.add_subcommand("cartier", "Cartier modules and crystals");
  cartier->require_subcommand(1);
  auto* cartier_analyze = cartier->add_subcommand("analyze", "validate, nilpotence, simples");
  cartier_analyze->add_option("MODULE", module_arg)->required();
  i64 npoints = 1, point_x = 0, prime = 2, base_exp = 1;
  auto* cartier_delta = cartier->add_subcommand("delta", "skyscraper crystal at a point");
  cartier_delta->add_option("--points", npoints);
  cartier_delta->add_option("--x", point_x);
  cartier_delta->add_option("--p", prime);
  cartier_delta->add_option("--baseExp", base_exp);

  // ---- k0 ----
  auto* k0 = app.add_subcommand("k0", "K0 classes, traces, QD rank, Chow demo");
  k0->require_subcommand(1);
  auto* k0_class_cmd = k0->add_subcommand("class", "class in K0 of Cartier crystals");
  k0_class_cmd->add_option("MODULE", module_arg)->required();
  auto* k0_trace = k0->add_subcommand("trace", "function-sheaf trace");
  k0_trace->add_option("MODULE", module_arg)->required();
  i64 samples = 100;
  auto* k0_ses = k0->add_subcommand("ses", "verify the trace short exact sequence");
  k0_ses->add_option("--points", npoints);
  k0_ses->add_option("--p", prime);
  k0_ses->add_option("--baseExp", base_exp);
  k0_ses->add_option("--samples", samples);
  std::string pres_arg;
  auto* k0_qdrank = k0->add_subcommand("qdrank", "rank over the skew fraction field");
  k0_qdrank->add_option("PRESENTATION", pres_arg, "presentation JSON (inline or file)")->required();
  i64 chow_n = 2, chow_q = 2;
  auto* k0_chow = k0->add_subcommand("chow", "1 - F_* on the Chow summands of P^n");
  k0_chow->add_option("--n", chow_n);
  k0_chow->add_option("--q", chow_q);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err{{"error", "UsageError"}, {"detail", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 2;
  }

  Emitter em;
  em.out_path = out_path;

  try {
    auto ring_spec = [&]() -> json {
      try {
        return json::parse(ring_json);
      } catch (const json::parse_error& e) {
        fail(errc::invalid_params, std::string("malformed --ring JSON: ") + e.what());
      }
    };
    auto get_ring = [&]() { return ring_from_json(ring_spec()); };
    // {"ring":"Points","p":2,"count":3} selects a finite rational point set
    // for the point-indexed commands; explicit flags win
    auto apply_points_spec = [&](i64& np, i64& pp, i64& be) {
      json j = ring_spec();
      if (j.value("ring", std::string()) != "Points") return;
      np = j.value("count", np);
      pp = j.value("p", pp);
      be = j.value("baseExp", be);
    };

    if (skew_mul->parsed() || skew_divr->parsed() || skew_divl->parsed() || skew_gcrd->parsed()) {
      em.inputs = {ring_json, arg_a, arg_b};
      RingPtr ring = get_ring();
      SkewPoly a = parse_skew_expr(arg_a, ring);
      SkewPoly b = parse_skew_expr(arg_b, ring);
      if (skew_mul->parsed()) {
        em.command = "skew mul";
        return em.emit(json{{"result", (a * b).to_string()}});
      }
      if (skew_divr->parsed()) {
        em.command = "skew divr";
        auto [q, r] = div_right(a, b);
        em.check("multiply_back", q * b + r == a);
        em.check("remainder_degree", r.degree() < b.degree());
        return em.emit(json{{"Q", q.to_string()}, {"R", r.to_string()}});
      }
      if (skew_divl->parsed()) {
        em.command = "skew divl";
        auto [q, r] = div_left(a, b);
        em.check("multiply_back", b * q + r == a);
        em.check("remainder_degree", r.degree() < b.degree());
        return em.emit(json{{"Q", q.to_string()}, {"R", r.to_string()}});
      }
      em.command = "skew gcrd";
      auto res = gcrd_lclm(a, b);
      em.check("bezout", res.u * a + res.v * b == res.gcrd);
      em.check("lclm_left", res.lu * a == res.lclm);
      em.check("lclm_right", res.lv * b == res.lclm);
      return em.emit(json{{"gcrd", res.gcrd.to_string()},
                          {"lclm", res.lclm.to_string()},
                          {"u", res.u.to_string()},
                          {"v", res.v.to_string()},
                          {"lu", res.lu.to_string()},
                          {"lv", res.lv.to_string()}});
    }

    if (ore_witness->parsed()) {
      em.command = "ore witness";
      em.inputs = {ring_json, side, arg_s, arg_r};
      RingPtr ring = get_ring();
      RingElem s = parse_ring_elem(arg_s, ring);
      SkewPoly r = parse_skew_expr(arg_r, ring);
      OreWitness w = side == "left" ? left_ore_witness(s, r) : right_ore_witness(s, r);
      bool identity = side == "left"
                          ? w.r_tilde * SkewPoly::constant(s) == SkewPoly::constant(w.s_tilde) * r
                          : SkewPoly::constant(s) * w.r_tilde == r * SkewPoly::constant(w.s_tilde);
      em.check("identity", identity);
      return em.emit(json{{"side", side},
                          {"rTilde", w.r_tilde.to_string()},
                          {"sTilde", w.s_tilde.to_string()}});
    }

    if (ore_search->parsed()) {
      em.command = "ore search";
      em.inputs = {ring_json, arg_a, arg_b, std::to_string(maxdeg), std::to_string(tdeg)};
      RingPtr ring = get_ring();
      SkewPoly a = parse_skew_expr(arg_a, ring);
      SkewPoly b = parse_skew_expr(arg_b, ring);
      auto w = common_right_multiple_search(a, b, maxdeg, tdeg);
      if (!w) return em.emit(json{{"found", false}});
      em.check("identity", a * w->u == b * w->v);
      em.check("nonzero", !(a * w->u).is_zero());
      return em.emit(json{{"found", true}, {"u", w->u.to_string()}, {"v", w->v.to_string()}});
    }

    if (ore_localize->parsed()) {
      em.command = "ore localize";
      em.inputs = {ring_json, arg_a, arg_b, arg_f};
      RingPtr ring = get_ring();
      SkewPoly num = parse_skew_expr(arg_a, ring);
      RingElem den = parse_ring_elem(arg_b, ring);
      RingElem f = parse_ring_elem(arg_f, ring);
      require(ring->kind() == RingKind::poly, errc::unsupported_ring,
              "localization runs over PolyRing");
      auto loc = localization_normal_form(num, den.as_poly(), f.as_poly());
      return em.emit(json{{"result", loc.value.to_string()},
                          {"f", f.as_poly().to_string(
                                    static_cast<const PolyBaseRing&>(*ring).symbol())}});
    }

    if (ore_dfrac->parsed()) {
      em.command = "ore dfrac";
      em.inputs = {ring_json, dfrac_op, arg_n1, arg_d1, arg_n2, arg_d2};
      RingPtr ring = get_ring();
      SkewFraction x = SkewFraction::of(parse_skew_expr(arg_n1, ring), parse_skew_expr(arg_d1, ring));
      SkewFraction out = x;
      if (dfrac_op == "inv") {
        out = d_inv(x);
        em.check("inverse", d_mul(x, out).is_one());
      } else {
        SkewFraction y =
            SkewFraction::of(parse_skew_expr(arg_n2, ring), parse_skew_expr(arg_d2, ring));
        out = dfrac_op == "add" ? d_add(x, y) : d_mul(x, y);
      }
      return em.emit(json{{"num", out.num().to_string()}, {"den", out.den().to_string()}});
    }

    if (koszul_present->parsed() || koszul_check->parsed()) {
      json mj = load_json_arg(module_arg);
      em.inputs = {mj.dump()};
      Block b = single_block_module(mj);
      auto pres = koszul_presentation(b);
      if (koszul_present->parsed()) {
        em.command = "koszul present";
        json rows = json::array();
        for (const auto& row : pres.psi_matrix) {
          json r = json::array();
          for (const auto& e : row) r.push_back(e.to_string());
          rows.push_back(std::move(r));
        }
        return em.emit(json{{"rank", static_cast<i64>(pres.psi_matrix.size())},
                            {"psi", std::move(rows)}});
      }
      em.command = "koszul check";
      em.inputs.push_back(std::to_string(bound));
      auto rep = check_exactness(pres, bound);
      em.check("exact", rep.exact);
      return em.emit(exactness_to_json(rep));
    }

    if (ideal_reduce->parsed() || ideal_filt->parsed() || ideal_coker->parsed()) {
      em.inputs = {ring_json};
      for (const auto& g : gen_args) em.inputs.push_back(g);
      RingPtr ring = get_ring();
      std::vector<SkewPoly> gens;
      for (const auto& g : gen_args) gens.push_back(parse_skew_expr(g, ring));
      if (ideal_filt->parsed()) {
        em.command = "ideal filtration";
        em.inputs.push_back(std::to_string(filt_d));
        auto basis = ideal_filtration(gens, filt_d);
        json arr = json::array();
        for (const auto& v : basis) arr.push_back(v.to_string());
        return em.emit(json{{"d", filt_d}, {"dim", static_cast<i64>(basis.size())},
                            {"basis", std::move(arr)}});
      }
      if (ideal_coker->parsed()) {
        em.command = "ideal coker";
        em.inputs.push_back(std::to_string(dbound));
        auto out = cokernel_F_dim(gens, dbound);
        return em.emit(json{{"dims", out.dims}, {"stabilized", out.stabilized}});
      }
      em.command = "ideal reduce";
      auto res = emerton_reduce(gens);
      em.check("d0_matches_generator_degree", res.certificate.d0_matches_generator_degree);
      em.check("ideal_equality", res.certificate.ideal_equality);
      em.check("chains_reconstruct", res.certificate.chains_reconstruct);
      json rg = json::array();
      for (const auto& v : res.reduced_gens) rg.push_back(v.to_string());
      json chains = json::array();
      for (const auto& chain : res.certificate.chains) {
        json steps = json::array();
        for (const auto& st : chain)
          steps.push_back(json{{"degree", st.degree},
                               {"gamma", st.gamma.to_string()},
                               {"alphaHat", st.alpha_hat.to_string()}});
        chains.push_back(std::move(steps));
      }
      return em.emit(json{{"d0", res.d0},
                          {"reducedGens", std::move(rg)},
                          {"principalGenerator", res.certificate.principal_generator.to_string()},
                          {"chains", std::move(chains)}});
    }

    if (cartier_analyze->parsed()) {
      em.command = "cartier analyze";
      json mj = load_json_arg(module_arg);
      em.inputs = {mj.dump()};
      CartierModule m = cartier_from_json(mj);
      auto val = validate_cartier(m);
      em.check("valid", val.ok);
      json out;
      out["valid"] = val.ok;
      if (!val.ok) {
        out["violation"] = val.violation;
        out["block"] = val.block;
        return em.emit(std::move(out));
      }
      auto nil = is_nilpotent(m);
      out["nilpotent"] = nil.nilpotent;
      out["v"] = nil.nilpotent ? json(nil.v) : json(nullptr);
      out["stableDim"] = nil.nilpotent ? json(nullptr) : json(nil.stable_dim);
      auto mm = minimal_cartier_submodule(m);
      out["minimalDim"] = static_cast<i64>(mm.total_dim());
      bool reduced = true;
      for (const auto& b : m.blocks)
        if (b.scalars->kind() == RingKind::quotient) reduced = false;
      if (reduced) {
        json simples = json::array();
        for (const auto& f : simple_factors(m)) simples.push_back(simple_factor_to_json(f));
        out["simples"] = std::move(simples);
      } else {
        out["simples"] = nullptr;
      }
      return em.emit(std::move(out));
    }

    if (cartier_delta->parsed()) {
      em.command = "cartier delta";
      apply_points_spec(npoints, prime, base_exp);
      em.inputs = {std::to_string(npoints), std::to_string(point_x), std::to_string(prime),
                   std::to_string(base_exp)};
      CartierModule d = delta_crystal(npoints, point_x, prime, base_exp);
      return em.emit(cartier_to_json(d));
    }

    if (k0_class_cmd->parsed() || k0_trace->parsed()) {
      json mj = load_json_arg(module_arg);
      em.inputs = {mj.dump()};
      CartierModule m = cartier_from_json(mj);
      auto val = validate_cartier(m);
      require(val.ok, errc::invalid_params,
              "module violates the Cartier law: " + val.violation);
      if (k0_class_cmd->parsed()) {
        em.command = "k0 class";
        return em.emit(json{{"class", k0_class_to_json(k0_class(m))}});
      }
      em.command = "k0 trace";
      return em.emit(trace_to_json(taelman_trace(m)));
    }

    if (k0_ses->parsed()) {
      em.command = "k0 ses";
      apply_points_spec(npoints, prime, base_exp);
      em.inputs = {std::to_string(npoints), std::to_string(prime), std::to_string(base_exp),
                   std::to_string(samples), std::to_string(seed)};
      auto rep = verify_taelman_ses(npoints, prime, base_exp, samples, seed);
      em.check("ok", rep.ok());
      return em.emit(taelman_to_json(rep));
    }

    if (k0_qdrank->parsed()) {
      em.command = "k0 qdrank";
      json pj = load_json_arg(pres_arg);
      em.inputs = {pj.dump()};
      auto pres = presentation_from_json(pj);
      return em.emit(json{{"rank", qd_rank(pres)}});
    }

    if (k0_chow->parsed()) {
      em.command = "k0 chow";
      em.inputs = {std::to_string(chow_n), std::to_string(chow_q)};
      auto d = chow_frobenius_demo(chow_n, chow_q);
      return em.emit(json{{"ker", d.kernel_dim}, {"coker", d.cokernel_dim}, {"diag", d.diagonal}});
    }

    fail(errc::invalid_params, "no subcommand matched");
  } catch (const Error& e) {
    json err{{"error", errc_name(e.code())}, {"detail", e.detail()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err{{"error", "InternalError"}, {"detail", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}
