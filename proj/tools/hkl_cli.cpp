#include <hkl/hkl.h>

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

struct Options {
  std::string format = "tsv";
  std::string data_dir = "./data";
  std::uint64_t seed = 1;
};

hkl_format fmt(const Options& o) { return o.format == "json" ? HKL_FORMAT_JSON : HKL_FORMAT_TSV; }

int status_exit(hkl_status s) {
  if (s == HKL_OK) return 0;
  std::cerr << "error: " << hkl_last_error() << "\n";
  return (s == HKL_ERR_INVALID_ARGUMENT || s == HKL_ERR_PARSE) ? 2 : 1;
}

// Print a library-owned string and release it.
int print(hkl_status s, char*& text) {
  if (s != HKL_OK) return status_exit(s);
  std::string out(text);
  hkl_string_free(text);
  std::cout << out;
  if (!out.empty() && out.back() != '\n') std::cout << '\n';
  return 0;
}

// Tables of checks come back as "name\tPASS|FAIL\tdetail".
int checks_exit(int code, const std::string& text) {
  if (code) return code;
  return text.find("\tFAIL\t") != std::string::npos || text.find("\"FAIL\"") != std::string::npos ? 1 : 0;
}

int print_checks(hkl_status s, char*& text) {
  if (s != HKL_OK) return status_exit(s);
  std::string out(text);
  int code = print(s, text);
  return checks_exit(code, out);
}

struct Context {
  hkl_context* ctx = nullptr;
  ~Context() { hkl_context_free(ctx); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for the quartic K3 flip schedule"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--data-dir", opt.data_dir, "directory holding niemeier.json");
  app.add_option("--seed", opt.seed, "seed for sampled ranks and fan checks");

  std::function<int()> action;
  Context c;
  auto ctx = [&] {
    if (!c.ctx && hkl_context_new(opt.data_dir.c_str(), opt.seed, &c.ctx) != HKL_OK) c.ctx = nullptr;
    return c.ctx;
  };
  char* out = nullptr;

  // lattice
  auto* lat = app.add_subcommand("lattice", "integral lattices")->require_subcommand(1);
  std::string spec, spec2;
  bool extended = false;
  auto* inv = lat->add_subcommand("invariants", "rank, signature, determinant, parity, discriminant group");
  inv->add_option("spec", spec, "e.g. E8+U^2+A1")->required();
  inv->callback([&] { action = [&] { return print(hkl_lattice_invariants(spec.c_str(), fmt(opt), &out), out); }; });
  auto* roots = lat->add_subcommand("roots", "root sublattice of a negative-definite lattice");
  roots->add_option("spec", spec)->required();
  roots->add_flag("--extended", extended, "append D1 for orthogonal norm -4 vectors");
  roots->callback([&] { action = [&] { return print(hkl_lattice_roots(spec.c_str(), extended, fmt(opt), &out), out); }; });
  auto* match = lat->add_subcommand("match", "compare invariants of two lattices");
  match->add_option("a", spec)->required();
  match->add_option("b", spec2)->required();
  match->callback([&] {
    action = [&] {
      hkl_lattice *a = nullptr, *b = nullptr;
      hkl_status s = hkl_lattice_parse(spec.c_str(), &a);
      if (s == HKL_OK) s = hkl_lattice_parse(spec2.c_str(), &b);
      int same = 0;
      if (s == HKL_OK) s = hkl_lattice_invariants_match(a, b, &same);
      hkl_lattice_free(a);
      hkl_lattice_free(b);
      if (s != HKL_OK) return status_exit(s);
      if (opt.format == "json")
        std::cout << "{\"match\":" << (same ? "true" : "false") << "}\n";
      else
        std::cout << (same ? "true" : "false") << "\n";
      return 0;
    };
  });

  // niemeier
  auto* nie = app.add_subcommand("niemeier", "Niemeier lattices and the Type II boundary")->require_subcommand(1);
  std::string nname;
  auto* ncat = nie->add_subcommand("catalog", "the 24 Niemeier lattices, or one by name");
  ncat->add_option("name", nname, "e.g. A11+D7+E6");
  ncat->callback([&] {
    action = [&] {
      return ctx() ? print(hkl_niemeier_catalog(c.ctx, nname.c_str(), fmt(opt), &out), out) : status_exit(HKL_ERR_INTERNAL);
    };
  });
  nie->add_subcommand("labels", "D7 embeddings and complement labels")->callback([&] {
    action = [&] { return ctx() ? print(hkl_niemeier_labels(c.ctx, fmt(opt), &out), out) : status_exit(HKL_ERR_INTERNAL); };
  });
  nie->add_subcommand("dimensions", "boundary stratum dimensions with the chain rule")->callback([&] {
    action = [&] { return ctx() ? print(hkl_niemeier_dimensions(c.ctx, fmt(opt), &out), out) : status_exit(HKL_ERR_INTERNAL); };
  });
  nie->add_subcommand("match", "Type II GIT strata against boundary labels")->callback([&] {
    action = [&] { return ctx() ? print(hkl_niemeier_match(c.ctx, fmt(opt), &out), out) : status_exit(HKL_ERR_INTERNAL); };
  });

  // git
  auto* git = app.add_subcommand("git", "GIT of quartic surfaces")->require_subcommand(1);
  git->add_subcommand("zero-weight", "zero-weight quartic monomials per 1-PS")->callback([&] {
    action = [&] { return print(hkl_git_zero_weight(fmt(opt), &out), out); };
  });
  git->add_subcommand("sigma-dims", "dimensions of the GIT boundary components")->callback([&] {
    action = [&] { return ctx() ? print(hkl_git_sigma_dims(c.ctx, fmt(opt), &out), out) : status_exit(HKL_ERR_INTERNAL); };
  });
  std::string quartic;
  std::vector<long> weights;
  auto* mu = git->add_subcommand("mu", "Hilbert-Mumford weight of a quartic");
  mu->add_option("quartic", quartic, "polynomial in x0..x3")->required();
  mu->add_option("weights", weights, "four integers summing to zero")->expected(4)->required();
  mu->callback([&] {
    action = [&] {
      long m = 0;
      hkl_status s = hkl_git_mu(quartic.c_str(), weights.data(), &m);
      if (s != HKL_OK) return status_exit(s);
      if (opt.format == "json")
        std::cout << "{\"mu\":" << m << "}\n";
      else
        std::cout << m << "\n";
      return 0;
    };
  });
  long box = 3;
  auto* worst = git->add_subcommand("worst", "diagonal 1-PS maximizing mu in a box (fixed frame only)");
  worst->add_option("quartic", quartic)->required();
  worst->add_option("--box", box, "entries range over [-box, box]")->check(CLI::PositiveNumber);
  worst->callback([&] {
    action = [&] {
      long w[4] = {0, 0, 0, 0}, m = 0;
      hkl_status s = hkl_git_worst_case(quartic.c_str(), box, w, &m);
      if (s != HKL_OK) return status_exit(s);
      std::string ps = "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
                       std::to_string(w[3]) + ")";
      if (opt.format == "json")
        std::cout << "{\"box\":" << box << ",\"mu\":" << m << ",\"ps\":\"" << ps << "\",\"unstable\":"
                  << (m > 0 ? "true" : "false") << "}\n";
      else
        std::cout << "box\tmu\tps\tunstable\n" << box << "\t" << m << "\t" << ps << "\t" << (m > 0 ? "true" : "false") << "\n";
      return 0;
    };
  });
  git->add_subcommand("limits", "1-PS limit and branch discriminant identities")->callback([&] {
    action = [&] { return print_checks(hkl_git_limits(fmt(opt), &out), out); };
  });
  git->add_subcommand("e12", "the quartic with an E12 point")->callback([&] {
    action = [&] { return print_checks(hkl_git_e12_example(fmt(opt), &out), out); };
  });

  // rep
  auto* rep = app.add_subcommand("rep", "SL2 representations")->require_subcommand(1);
  std::vector<int> rweights;
  auto* dec = rep->add_subcommand("decompose", "irreducible decomposition of a weight multiset");
  dec->add_option("weights", rweights)->required();
  dec->callback([&] {
    action = [&] {
      hkl_status s = hkl_rep_decompose(rweights.data(), rweights.size(), &out);
      if (s != HKL_OK) return status_exit(s);
      std::string d(out);
      hkl_string_free(out);
      if (opt.format == "json")
        std::cout << "{\"decomposition\":\"" << d << "\"}\n";
      else
        std::cout << d << "\n";
      return 0;
    };
  });
  rep->add_subcommand("table", "quartics by powers of x3")->callback([&] {
    action = [&] { return print(hkl_rep_table(fmt(opt), &out), out); };
  });
  std::string ra, rb;
  auto* tan = rep->add_subcommand("tangent", "orbit tangent space at f_{a,b}");
  tan->add_option("a", ra)->required();
  tan->add_option("b", rb)->required();
  tan->callback([&] { action = [&] { return print(hkl_rep_tangent(ra.c_str(), rb.c_str(), fmt(opt), &out), out); }; });
  rep->add_subcommand("slices", "transversality of the slices")->callback([&] {
    action = [&] { return print_checks(hkl_rep_slices(fmt(opt), &out), out); };
  });

  // dolgachev
  auto* dol = app.add_subcommand("dolgachev", "triangle singularities E12, E13, E14")->require_subcommand(1);
  dol->add_subcommand("table", "equations, weights and Milnor numbers")->callback([&] {
    action = [&] { return print(hkl_dolgachev_table(fmt(opt), &out), out); };
  });
  dol->add_subcommand("checks", "quasi-homogeneity, lattices and Z-loci")->callback([&] {
    action = [&] { return print_checks(hkl_dolgachev_checks(fmt(opt), &out), out); };
  });

  // blowup
  auto* blow = app.add_subcommand("blowup", "weighted blow-ups")->require_subcommand(1);
  std::string bw, px, py;
  auto* fan = blow->add_subcommand("fan", "cones of the weighted blow-up");
  fan->add_option("weights", bw, "e.g. 2,3 or 4^9,6^13")->required();
  fan->callback([&] {
    action = [&] {
      if (!ctx()) return status_exit(HKL_ERR_INTERNAL);
      if (opt.format == "json") return print(hkl_blowup_fan_json(c.ctx, bw.c_str(), &out), out);
      return print(hkl_blowup_fan(c.ctx, bw.c_str(), fmt(opt), &out), out);
    };
  });
  auto* eq = blow->add_subcommand("equiv", "equality of two points of a weighted projective space");
  eq->add_option("weights", bw)->required();
  eq->add_option("x", px, "e.g. 1,1")->required();
  eq->add_option("y", py)->required();
  eq->callback([&] {
    action = [&] {
      int same = 0;
      hkl_status s = hkl_blowup_wp_equiv(bw.c_str(), px.c_str(), py.c_str(), &same);
      if (s != HKL_OK) return status_exit(s);
      if (opt.format == "json")
        std::cout << "{\"equivalent\":" << (same ? "true" : "false") << "}\n";
      else
        std::cout << (same ? "true" : "false") << "\n";
      return 0;
    };
  });

  // schedule
  auto* sch = app.add_subcommand("schedule", "critical values, towers and strata")->require_subcommand(1);
  sch->add_subcommand("table1", "beta, Z-stratum and W-stratum per flip")->callback([&] {
    action = [&] { return print(hkl_schedule_table1(fmt(opt), &out), out); };
  });
  sch->add_subcommand("betas", "critical values of beta")->callback([&] {
    action = [&] { return print(hkl_schedule_betas(fmt(opt), &out), out); };
  });
  std::string beta;
  auto* flip = sch->add_subcommand("flip", "flip center at a critical beta");
  flip->add_option("beta", beta, "e.g. 1/5")->required();
  flip->callback([&] { action = [&] { return print(hkl_schedule_flip(beta.c_str(), fmt(opt), &out), out); }; });
  std::string stype;
  auto* strata = sch->add_subcommand("strata", "stratum catalog");
  strata->add_option("filter", stype, "I, II, III, IV or a stratum id such as IV(0a)");
  strata->callback([&] { action = [&] { return print(hkl_schedule_strata(stype.c_str(), fmt(opt), &out), out); }; });
  sch->add_subcommand("towers", "Z- and W-towers")->callback([&] {
    action = [&] { return print(hkl_schedule_towers(fmt(opt), &out), out); };
  });
  sch->add_subcommand("checks", "structural checks and notes")->callback([&] {
    action = [&] { return ctx() ? print_checks(hkl_schedule_checks(c.ctx, fmt(opt), &out), out) : status_exit(HKL_ERR_INTERNAL); };
  });

  app.add_subcommand("report", "Table 1, Table 2 and the boundary dimension table")->callback([&] {
    action = [&] { return ctx() ? print(hkl_report(c.ctx, fmt(opt), &out), out) : status_exit(HKL_ERR_INTERNAL); };
  });
  app.add_subcommand("verify", "run the acceptance checks")->callback([&] {
    action = [&] {
      if (!ctx()) return status_exit(HKL_ERR_INTERNAL);
      int failures = 0;
      hkl_status s = hkl_verify(c.ctx, fmt(opt), &out, &failures);
      int code = print(s, out);
      return code ? code : (failures ? 1 : 0);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return action ? action() : 2;
}
