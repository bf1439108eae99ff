// mcgstab: command-line front end for the verification suites.

#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "mcgstab/destab.hpp"
#include "mcgstab/groupoid.hpp"
#include "mcgstab/mapclass.hpp"
#include "mcgstab/ranges.hpp"
#include "mcgstab/report.hpp"
#include "mcgstab/suite.hpp"
#include "mcgstab/surface.hpp"

namespace {

enum class LogLevel { quiet, info, debug };

LogLevel log_level() {
  const char* v = std::getenv("MCGSTAB_LOG");
  if (v == nullptr) return LogLevel::quiet;
  const std::string s(v);
  if (s == "debug" || s == "trace") return LogLevel::debug;
  if (s == "info") return LogLevel::info;
  return LogLevel::quiet;
}

int emit(const mcgstab::Report& r, bool as_json) {
  if (as_json) {
    std::cout << mcgstab::to_json(r).dump(2) << '\n';
  } else {
    std::cout << mcgstab::render_text(r);
  }
  const LogLevel lvl = log_level();
  if (lvl != LogLevel::quiet) {
    double total = 0;
    for (const auto& c : r.checks) {
      total += c.elapsed_ms;
      if (lvl == LogLevel::debug) std::cerr << "[debug] " << c.name << ": " << c.elapsed_ms << " ms\n";
    }
    std::cerr << "[info] " << r.command << ": " << r.checks.size() << " checks, " << total << " ms\n";
  }
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for mapping class groups of bidecorated surfaces"};
  app.require_subcommand(1);
  bool as_json = false;
  std::uint64_t seed = 1;
  app.add_flag("--json", as_json, "machine-readable JSON output");
  app.add_option("--seed", seed, "seed for randomized sweeps");

  int surface_m = 1;
  auto* surface = app.add_subcommand("surface", "surface type of X_m");
  surface->add_option("--m", surface_m)->required()->check(CLI::Range(1, 100000));

  int cut_g = 0, cut_r = 1, cut_nu = 1, cut_p = 0;
  auto* cut = app.add_subcommand("cut", "cut a standard simplex out of S_{g,r}");
  cut->add_option("--g", cut_g)->required();
  cut->add_option("--r", cut_r)->required();
  cut->add_option("--nu", cut_nu)->required();
  cut->add_option("--p", cut_p)->required();

  auto* verify = app.add_subcommand("verify", "relation checks");
  verify->require_subcommand(1);
  int braid_m = 8, block_max = 6;
  auto* vbraid = verify->add_subcommand("braid", "braid relations among T_i");
  vbraid->add_option("--m", braid_m)->check(CLI::Range(2, 64));
  auto* vyb = verify->add_subcommand("yb", "Yang-Baxter equation");
  auto* vblock = verify->add_subcommand("block", "block braid conjugation");
  vblock->add_option("--max", block_max)->check(CLI::Range(2, 12));

  int refute_k = 3;
  auto* refute = app.add_subcommand("refute-braiding", "refute braidings T_1^k");
  refute->add_option("--k", refute_k)->check(CLI::Range(1, 20));

  int search_m = 3, search_len = 8;
  auto* search = app.add_subcommand("search-curve", "search for an iota-asymmetric curve");
  search->add_option("--m", search_m)->check(CLI::Range(1, 12));
  search->add_option("--len", search_len)->check(CLI::Range(0, 16));

  mcgstab::DestabRequest dreq;
  int pmax = -1;
  bool with_homology = false;
  auto add_destab_options = [&](CLI::App* sub) {
    sub->add_option("--family", dreq.family, "sym, sym-id, cyclic, trivial");
    sub->add_option("--family-file", dreq.family_file, "family description file");
    sub->add_option("--n", dreq.n)->check(CLI::Range(1, 64));
    sub->add_option("--a", dreq.a)->check(CLI::Range(0, 64));
    sub->add_option("--pmax", pmax);
  };
  auto* destab = app.add_subcommand("destab", "destabilization complex");
  add_destab_options(destab);
  destab->add_flag("--homology", with_homology);
  auto* hom = app.add_subcommand("homology", "reduced homology of the destabilization complex");
  add_destab_options(hom);

  int coeff_k = 1, coeff_n = 3, coeff_depth = 4;
  bool coeff_all = false;
  auto* coeff = app.add_subcommand("coeff", "H_1 coefficient systems");
  coeff->add_option("--k", coeff_k)->check(CLI::Range(0, 4));
  coeff->add_option("--n", coeff_n)->check(CLI::Range(2, 12));
  coeff->add_option("--maxdepth", coeff_depth)->check(CLI::Range(0, 8));
  coeff->add_flag("--check-all", coeff_all);

  mcgstab::RangesRequest rreq;
  auto* ranges = app.add_subcommand("ranges", "stability ranges");
  ranges->add_option("--theorem", rreq.theorem, "A, B, stab, connectivity");
  ranges->add_option("--g", rreq.g);
  ranges->add_option("--k", rreq.k);
  ranges->add_option("--n", rreq.n);
  ranges->add_option("--N", rreq.N);
  ranges->add_option("--nu", rreq.nu);
  ranges->add_option("--kind", rreq.kind);
  ranges->add_flag("--split", rreq.split);

  std::string golden_dir;
  auto* all = app.add_subcommand("all", "full acceptance suite");
  all->add_option("--golden-dir", golden_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (pmax >= 0) dreq.pmax = pmax;
  try {
    mcgstab::Report r;
    if (*surface) {
      r = mcgstab::run_surface(surface_m);
    } else if (*cut) {
      r = mcgstab::run_cut(cut_g, cut_r, cut_nu, cut_p);
    } else if (*vbraid) {
      r = mcgstab::run_verify_braid(braid_m);
    } else if (*vyb) {
      r = mcgstab::run_verify_yb();
    } else if (*vblock) {
      r = mcgstab::run_verify_block(block_max);
    } else if (*refute) {
      r = mcgstab::run_refute_braiding(refute_k);
    } else if (*search) {
      r = mcgstab::run_search_curve(search_m, search_len);
    } else if (*destab) {
      dreq.homology = with_homology;
      r = mcgstab::run_destab(dreq);
    } else if (*hom) {
      r = mcgstab::run_homology(dreq);
    } else if (*coeff) {
      r = mcgstab::run_coeff(coeff_k, coeff_n, coeff_all, coeff_depth);
    } else if (*ranges) {
      r = mcgstab::run_ranges(rreq);
    } else if (*all) {
      r = mcgstab::run_all({seed, golden_dir});
    }
    return emit(r, as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const mcgstab::IndexError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const mcgstab::ValidationError& e) {
    std::cerr << "invalid family: " << e.what() << '\n';
    return 2;
  } catch (const mcgstab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const mcgstab::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const mcgstab::IdentityViolation& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
