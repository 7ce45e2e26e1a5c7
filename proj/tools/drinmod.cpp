// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver: parse a module description, run pipeline stages,
// emit structured results, and sweep prime ranges with restart-safe
// persistence.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "drinmod/gorenstein.hpp"
#include "drinmod/io.hpp"

using json = nlohmann::ordered_json;
using namespace drinmod;

namespace {

constexpr const char* kVersion = "0.1.0";

struct JobConfig {
  std::int64_t p = 0;
  std::string fq_modulus;  // optional, poly in w over F_p
  std::string prime;       // poly in T over F_q
  int ext_degree = 1;
  std::string k_modulus;   // optional, poly in u over F_p-level (m > 1)
  std::vector<std::string> phi;  // g_1..g_r
  std::uint64_t seed = 0;
  std::string out;         // output path ("" = stdout)
  bool machine = false;
};

struct Pipeline {
  FieldPtr fq;
  Poly prime;
  DrinfeldModule phi;
  CharPoly P;
};

FieldPtr make_fq(const JobConfig& cfg) {
  FieldPtr fp = Field::prime(cfg.p);
  if (cfg.fq_modulus.empty()) return fp;
  Poly mod = parse_poly(fp, cfg.fq_modulus, "w");
  return Field::extend(fp, mod.coeffs(), "w");
}

DrinfeldModule make_module(const JobConfig& cfg, const FieldPtr& fq,
                           const Poly& prime) {
  std::optional<Poly> kmod;
  FieldPtr fp_level = Field::extend(fq, prime.coeffs(), "t");
  if (!cfg.k_modulus.empty())
    kmod = parse_poly(fp_level, cfg.k_modulus, "u");
  FieldPtr k = DrinfeldModule::build_field(fq, prime, cfg.ext_degree, kmod);
  // walk to the residue-field level to alias T -> t for coefficient parsing
  FieldPtr fp = k;
  while (fp->base().get() != fq.get()) fp = fp->base();
  std::map<std::string, FieldElem> aliases{{"T", fp->gen()}};
  std::vector<FieldElem> g;
  for (const auto& s : cfg.phi) g.push_back(parse_element(k, s, aliases));
  return DrinfeldModule(fq, prime, cfg.ext_degree, k, std::move(g));
}

Pipeline make_pipeline(const JobConfig& cfg) {
  FieldPtr fq = make_fq(cfg);
  Poly prime = parse_poly(fq, cfg.prime, "T");
  DrinfeldModule phi = make_module(cfg, fq, prime);
  CharPoly P = min_poly_frobenius(phi);
  return Pipeline{fq, prime, std::move(phi), std::move(P)};
}

json config_json(const JobConfig& cfg) {
  json j;
  j["p"] = cfg.p;
  if (!cfg.fq_modulus.empty()) j["fq_modulus"] = cfg.fq_modulus;
  j["prime"] = cfg.prime;
  j["ext_degree"] = cfg.ext_degree;
  if (!cfg.k_modulus.empty()) j["k_modulus"] = cfg.k_modulus;
  j["phi"] = cfg.phi;
  j["seed"] = cfg.seed;
  return j;
}

json charpoly_json(const CharPoly& P) {
  json j;
  std::vector<std::string> coeffs;
  for (int i = 0; i < P.rank; ++i) coeffs.push_back(to_string(P.coeff(i)));
  j["charpoly"] = coeffs;  // ordered [c_0, ..., c_{r-1}]
  j["charpoly_str"] = to_string(P.P);
  j["c0_unit"] = to_string(P.c0_unit);
  return j;
}

json disc_json(const CharPoly& P, std::uint64_t seed) {
  json j;
  Poly disc = disc_order(P);
  FieldElem unit;
  Poly monic = disc.monic(&unit);
  j["disc"] = to_string(disc);
  j["disc_monic"] = to_string(monic);
  j["disc_unit"] = to_string(unit);
  json fac = json::array();
  for (const auto& [f, m] : factor(monic, seed).factors)
    fac.push_back(json{{"poly", to_string(f)}, {"mult", m}});
  j["disc_factored"] = fac;
  return j;
}

json index_json(const EndoBasis& basis) {
  json j;
  std::vector<std::string> idx;
  for (const auto& b : basis.index.b) idx.push_back(to_string(b));
  j["index"] = idx;
  json fs = json::array();
  for (const auto& f : basis.f) {
    std::vector<std::string> c;
    for (int i = 0; i <= f.degree(); ++i) c.push_back(to_string(f.coeff(i)));
    fs.push_back(c);
  }
  j["f"] = fs;
  json es = json::array();
  for (const auto& e : basis.e) {
    std::vector<std::string> c;
    for (int i = 0; i <= e.degree(); ++i) c.push_back(to_string(e.coeff(i)));
    es.push_back(c);
  }
  j["e"] = es;
  return j;
}

json matrix_json(const PolyMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json matrix_json(const FieldMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

void emit(const json& j, const JobConfig& cfg) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) throw Error("cannot open output file " + cfg.out);
    os = &file;
  }
  if (cfg.machine) {
    *os << j.dump() << "\n";
    return;
  }
  // human mode: flat key printing
  std::function<void(const json&, std::string)> walk =
      [&](const json& node, std::string prefix) {
        if (node.is_object()) {
          for (auto it = node.begin(); it != node.end(); ++it)
            walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
        } else if (node.is_array() &&
                   !node.empty() && node[0].is_array()) {
          *os << prefix << ":\n";
          for (const auto& row : node) *os << "  " << row.dump() << "\n";
        } else {
          *os << prefix << ": " << (node.is_string() ? node.get<std::string>()
                                                     : node.dump())
              << "\n";
        }
      };
  walk(j, "");
}

// l != prime guard shared by the torsion commands.
Poly parse_l(const Pipeline& pl, const std::string& s) {
  Poly l = parse_poly(pl.fq, s, "T").monic();
  if (!is_irreducible(l)) throw ParseError("--l must be monic irreducible");
  if (l == pl.prime)
    throw PrimeDividesModulus("--l must differ from the characteristic prime");
  return l;
}

int run_command(const std::string& cmd, const JobConfig& cfg,
                const std::string& larg, const std::string& narg,
                int max_deg) {
  auto start = std::chrono::steady_clock::now();
  json out;
  out["version"] = kVersion;
  out["command"] = cmd;
  out["config"] = config_json(cfg);

  if (cmd == "scan") {
    FieldPtr fq = make_fq(cfg);
    GlobalDrinfeld Phi;
    for (const auto& s : cfg.phi) Phi.g.push_back(parse_poly(fq, s, "T"));
    if (Phi.g.empty() || Phi.g.back().is_zero())
      throw ParseError("scan: --phi must give g_1..g_r with g_r != 0");
    if (cfg.out.empty()) throw ParseError("scan: --out is required");
    std::set<std::string> seen;
    {
      std::ifstream in(cfg.out);
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto rec = json::parse(line, nullptr, false);
        if (!rec.is_discarded() && rec.contains("prime"))
          seen.insert(rec["prime"].get<std::string>());
      }
    }
    std::ofstream app(cfg.out, std::ios::app);
    if (!app) throw Error("cannot open output file " + cfg.out);
    int scanned = 0, skipped = 0;
    std::int64_t p = fq->characteristic();
    for (int d = 1; d <= max_deg; ++d) {
      // monic polynomials of degree d in odometer order
      int digits = fq->abs_degree() * d;
      std::vector<std::int64_t> odo(digits, 0);
      for (;;) {
        std::vector<FieldElem> c;
        for (int i = 0; i < d; ++i)
          c.push_back(unflatten_prime(
              fq, std::span<const std::int64_t>(odo).subspan(
                      static_cast<std::size_t>(i) * fq->abs_degree(),
                      fq->abs_degree())));
        c.push_back(fq->one());
        Poly cand = Poly::from_coeffs(fq, std::move(c));
        if (is_irreducible(cand) && !(Phi.g.back() % cand).is_zero()) {
          std::string pstr = to_string(cand);
          if (seen.count(pstr)) {
            ++skipped;
          } else {
            DrinfeldModule phi = reduce_at(Phi, cand, 1);
            CharPoly P = min_poly_frobenius(phi);
            EndoBasis basis = frobenius_index(phi, P, cfg.seed);
            verify_basis(phi, P, basis);
            FrobMatrix F = frobenius_matrix(P, basis);
            json rec;
            rec["prime"] = pstr;
            rec["version"] = kVersion;
            rec.update(charpoly_json(P));
            rec.update(disc_json(P, cfg.seed));
            rec.update(index_json(basis));
            rec["frobmatrix"] = matrix_json(F.mat);
            app << rec.dump() << "\n";
            app.flush();
            ++scanned;
          }
        }
        std::size_t pos = 0;
        while (pos < odo.size() && ++odo[pos] == p) odo[pos++] = 0;
        if (pos == odo.size()) break;
      }
    }
    json sum;
    sum["version"] = kVersion;
    sum["command"] = "scan";
    sum["scanned"] = scanned;
    sum["skipped"] = skipped;
    sum["out"] = cfg.out;
    std::cout << (cfg.machine ? sum.dump() : sum.dump(2)) << "\n";
    return 0;
  }

  Pipeline pl = make_pipeline(cfg);
  if (cmd == "charpoly") {
    out.update(charpoly_json(pl.P));
  } else if (cmd == "disc") {
    out.update(charpoly_json(pl.P));
    out.update(disc_json(pl.P, cfg.seed));
  } else if (cmd == "index" || cmd == "basis") {
    EndoBasis basis = frobenius_index(pl.phi, pl.P, cfg.seed);
    out.update(charpoly_json(pl.P));
    out.update(index_json(basis));
    if (cmd == "basis") {
      auto rep = verify_basis(pl.phi, pl.P, basis);
      json v;
      v["disc_order"] = to_string(rep.disc_order_exact);
      v["disc_endo"] = to_string(rep.disc_endo);
      std::vector<std::string> snf;
      for (const auto& f : rep.snf_factors) snf.push_back(to_string(f));
      v["snf"] = snf;
      v["checks"] = rep.checks;
      out["verification"] = v;
    }
  } else if (cmd == "frobmatrix") {
    EndoBasis basis = frobenius_index(pl.phi, pl.P, cfg.seed);
    verify_basis(pl.phi, pl.P, basis);
    FrobMatrix F = frobenius_matrix(pl.P, basis);
    out.update(index_json(basis));
    out["frobmatrix"] = matrix_json(F.mat);
  } else if (cmd == "structure") {
    EndoBasis basis = frobenius_index(pl.phi, pl.P, cfg.seed);
    StructureConstants sc = structure_constants(pl.P, basis);
    out.update(index_json(basis));
    json table = json::array();
    for (int i = 0; i < sc.r; ++i) {
      json row = json::array();
      for (int j = 0; j < sc.r; ++j) {
        std::vector<std::string> v;
        for (const auto& s : sc.table[i][j]) v.push_back(to_string(s));
        row.push_back(v);
      }
      table.push_back(row);
    }
    out["structure"] = table;
  } else if (cmd == "gorenstein" || cmd == "tatefree") {
    Poly l = parse_l(pl, larg);
    EndoBasis basis = frobenius_index(pl.phi, pl.P, cfg.seed);
    out["l"] = to_string(l);
    TateFreeResult tf = is_tate_free(pl.phi, l, basis);
    if (cmd == "gorenstein") {
      StructureConstants sc = structure_constants(pl.P, basis);
      GorensteinReport rep = gorenstein_report(sc, l, basis.index, pl.phi.rank());
      json factors = json::array();
      for (const auto& f : rep.factors)
        factors.push_back(json{{"dim", f.dim},
                               {"residue_degree", f.residue_degree},
                               {"socle_dim", f.socle_dim},
                               {"gorenstein", f.gorenstein}});
      out["factors"] = factors;
      out["gorenstein"] = rep.gorenstein;
      if (rep.shortcut) out["shortcut"] = *rep.shortcut;
      if (rep.gorenstein && !tf.free_rank_one)
        throw InternalInconsistency(
            "Gorenstein holds but the torsion is not free");
    }
    out["tate_free"] = tf.free_rank_one;
    out["pi_matrix"] = matrix_json(tf.pibar);
    // conjugacy of the pi action with F(p) mod l
    FrobMatrix F = frobenius_matrix(pl.P, basis);
    PolyMat red = reduce_mod(F, l, pl.prime);
    FieldMat redf(red.rows(), red.cols(), tf.fl->zero());
    for (int i = 0; i < red.rows(); ++i)
      for (int j = 0; j < red.cols(); ++j)
        redf.at(i, j) = red.at(i, j).eval(tf.fl->gen());
    out["conjugate_to_F"] = conjugacy_test(tf.pibar, redf);
    if (cmd == "tatefree") {
      json ebar = json::array();
      for (const auto& m : tf.ebar) ebar.push_back(matrix_json(m));
      out["ebar"] = ebar;
      if (tf.cyclic) {
        std::vector<std::string> v;
        for (const auto& c : *tf.cyclic) v.push_back(to_string(c));
        out["cyclic"] = v;
      } else {
        out["cyclic"] = nullptr;
      }
    }
  } else if (cmd == "splits" || cmd == "reciprocity") {
    Poly n = parse_poly(pl.fq, narg, "T").monic();
    if (n.is_zero()) throw ParseError("--n must be nonzero");
    out["n"] = to_string(n);
    EndoBasis basis = frobenius_index(pl.phi, pl.P, cfg.seed);
    if (cmd == "splits") {
      FrobMatrix F = frobenius_matrix(pl.P, basis);
      out["splits"] = splits_completely(F, n, pl.prime);
    } else {
      out["reciprocity"] = reciprocity_check(basis.index, pl.P, n);
    }
  } else {
    throw ParseError("unknown command " + cmd);
  }

  auto stop = std::chrono::steady_clock::now();
  out["timings"] = {
      {"total_s", std::chrono::duration<double>(stop - start).count()}};
  emit(out, cfg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drinfeld F_q[T]-module calculator: Frobenius characteristic "
               "polynomial, endomorphism ring basis and Frobenius index, the "
               "integral Frobenius matrix, and Gorenstein/Tate-freeness "
               "diagnostics"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "Config file (INI: key=value)");
  app.fallthrough();  // shared options may follow the subcommand name

  JobConfig cfg;
  app.add_option("--p", cfg.p, "Field characteristic (prime)");
  app.add_option("--fq-modulus", cfg.fq_modulus,
                 "Modulus of F_q over F_p in w (optional)");
  app.add_option("--prime", cfg.prime, "Characteristic prime of A in T");
  app.add_option("--ext-degree", cfg.ext_degree, "m = [k : F_p] (default 1)");
  app.add_option("--k-modulus", cfg.k_modulus,
                 "Modulus of k over F_p in u (optional, m > 1)");
  app.add_option("--phi", cfg.phi,
                 "Coefficients g_1,...,g_r of phi_T")->delimiter(',');
  app.add_option("--seed", cfg.seed, "PRNG seed (default 0)");
  app.add_option("--out", cfg.out, "Output path (default stdout)");
  app.add_flag("--machine", cfg.machine, "One JSON record per line");

  std::string larg, narg;
  int max_deg = 1;
  std::vector<std::pair<std::string, CLI::App*>> cmds;
  for (const char* name :
       {"charpoly", "disc", "index", "basis", "frobmatrix", "structure"})
    cmds.emplace_back(name, app.add_subcommand(name));
  for (const char* name : {"gorenstein", "tatefree"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--l", larg, "Monic irreducible l != prime")->required();
    cmds.emplace_back(name, sub);
  }
  for (const char* name : {"splits", "reciprocity"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--n", narg, "Modulus n of the division field")->required();
    cmds.emplace_back(name, sub);
  }
  {
    CLI::App* sub = app.add_subcommand("scan");
    sub->add_option("--max-deg", max_deg, "Largest prime degree")->required();
    cmds.emplace_back("scan", sub);
  }
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }
  try {
    for (const auto& [name, sub] : cmds)
      if (sub->parsed()) return run_command(name, cfg, larg, narg, max_deg);
    return 3;
  } catch (const AssumptionViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const BadReduction& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const VerificationFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const InternalInconsistency& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const NonIntegralEntry& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
