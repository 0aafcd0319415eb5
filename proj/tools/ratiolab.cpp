// Command-line front end: construct / verify / analyze / bounds / search /
// blokhuis / primes / match / sweep over the family JSON interchange schema.
// Exit status: 0 success, 1 verification failure, 2 parameter or usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ratiolab/analysis.hpp"
#include "ratiolab/constructions.hpp"
#include "ratiolab/json_io.hpp"
#include "ratiolab/projective.hpp"
#include "ratiolab/search.hpp"
#include "ratiolab/verify.hpp"

namespace {

using ratiolab::Errc;
using ratiolab::Error;
using ratiolab::Family;
using ratiolab::Json;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) ratiolab::fail(Errc::BadParameters, "cannot open " + out_path + " for writing");
  out << text << "\n";
}

// Failures that describe the input family or the searched window rather than
// a malformed invocation.
int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::NotMaximal:
    case Errc::NotIntersecting:
    case Errc::NoPrimeInWindow:
    case Errc::NoFamilies:
      return kVerificationFailure;
    default:
      return kUsageError;
  }
}

struct ConstructArgs {
  std::string family;
  int n = 0, r = 0, p = 0, k = 0, s = 0;
  bool has_n = false, has_r = false, has_p = false, has_k = false;
  std::string out;
};

Family run_construct(const ConstructArgs& a) {
  const auto need = [&](bool present, const char* flag) {
    if (!present)
      ratiolab::fail(Errc::BadParameters,
                     std::string(flag) + " is required for --family " + a.family);
  };
  if (a.family == "star") {
    need(a.has_n, "--n");
    need(a.has_r, "--r");
    return ratiolab::star_family(a.n, a.r);
  }
  if (a.family == "thm1ii") {
    need(a.has_n, "--n");
    need(a.has_r, "--r");
    return ratiolab::thm1ii_family(a.n, a.r);
  }
  if (a.family == "plane") {
    need(a.has_n, "--n");
    need(a.has_r, "--r");
    need(a.has_p, "--p");
    return ratiolab::plane_family(a.n, a.r, a.p);
  }
  if (a.family == "multiplane") {
    need(a.has_k, "--k");
    need(a.has_p, "--p");
    const ratiolab::MultiPlaneParams params{a.k, a.p, a.s};
    params.validate();
    if (a.has_n && a.n != params.universe())
      ratiolab::fail(Errc::BadParameters, "--n disagrees with k(p^2+p+1) = " +
                                              std::to_string(params.universe()));
    if (a.has_r && a.r != params.rank())
      ratiolab::fail(Errc::BadParameters,
                     "--r disagrees with (k+1)/2*(p+1)+s = " + std::to_string(params.rank()));
    return ratiolab::multi_plane_family(params);
  }
  if (a.family == "halving") {
    need(a.has_r, "--r");
    if (a.has_n && a.n != 2 * a.r)
      ratiolab::fail(Errc::BadParameters, "--n must equal 2r for the halving family");
    return ratiolab::halving_family(a.r);
  }
  ratiolab::fail(Errc::BadParameters, "unknown family " + a.family);
}

int run_verify(const std::string& file, int jobs) {
  const Family f = ratiolab::load_family(file);
  Json out;
  const auto disjoint = ratiolab::find_disjoint_pair(f);
  out["intersecting"] = !disjoint.has_value();
  if (disjoint) {
    out["disjoint_pair"] = Json::array({disjoint->first.elements(), disjoint->second.elements()});
    out["maximal"] = false;
  } else {
    const ratiolab::MaximalityCheck check = ratiolab::check_maximal_intersecting(f, jobs);
    out["maximal"] = check.maximal;
    if (check.addable) out["addable"] = check.addable->elements();
  }
  const bool covers = ratiolab::covers_universe(f);
  out["covers"] = covers;
  if (!covers) {
    ratiolab::VertexSet seen;
    for (const auto& s : f.sets) seen |= s;
    out["uncovered"] = (ratiolab::VertexSet::full(f.n) - seen).elements();
  }
  std::cout << out.dump() << "\n";
  const bool all = out["intersecting"].get<bool>() && out["maximal"].get<bool>() && covers;
  return all ? kOk : kVerificationFailure;
}

int run_analyze(const std::string& file, bool with_tau, bool with_partition, bool with_fmap,
                int jobs, const std::string& out_path) {
  const Family f = ratiolab::load_family(file);
  Json out;
  out["n"] = f.n;
  out["r"] = f.r;
  out["size"] = f.size();
  out["profile"] = ratiolab::to_json(ratiolab::degree_profile(f));
  if (with_tau) out["tau"] = ratiolab::covering_number(f);
  if (with_partition) out["partition"] = ratiolab::to_json(ratiolab::classify_f1_f2(f, jobs));
  if (with_fmap) {
    try {
      out["fmap"] = ratiolab::to_json(ratiolab::f_map_check(f, jobs));
    } catch (const Error& e) {
      if (e.code() != Errc::TauEqualsR) throw;  // the tau = r case split is a result, not a failure
      out["fmap"] = Json{{"error", e.code_name()}, {"message", e.what()}};
    }
  }
  emit(out.dump(), out_path);
  return kOk;
}

int run_sweep(const std::string& family, int n_min, int n_max, int r_min, int r_max, int p,
              const std::string& out_path) {
  if (family != "star" && family != "thm1ii" && family != "plane" && family != "halving")
    ratiolab::fail(Errc::BadParameters, "unknown sweep family " + family);
  std::string csv = "n,r,construction,|F|,delta_max,delta_min,ratio,m_lower,M_lower_thm1ii,M_upper\n";
  for (int n = n_min; n <= n_max; ++n)
    for (int r = r_min; r <= r_max; ++r) {
      std::optional<Family> f;
      try {
        if (family == "star") f = ratiolab::star_family(n, r);
        else if (family == "thm1ii") f = ratiolab::thm1ii_family(n, r);
        else if (family == "plane") f = ratiolab::plane_family(n, r, p);
        else if (n == 2 * r) f = ratiolab::halving_family(r);
      } catch (const Error&) {
        continue;  // outside this construction's parameter window
      }
      if (!f) continue;
      const ratiolab::DegreeProfile prof = ratiolab::degree_profile(*f);
      const ratiolab::BoundsReport b = ratiolab::bounds(n, r);
      csv += std::to_string(n) + "," + std::to_string(r) + "," + family + "," +
             std::to_string(f->size()) + "," + std::to_string(prof.delta_max) + "," +
             std::to_string(prof.delta_min) + "," +
             (prof.ratio ? prof.ratio->to_string() : "") + "," + b.m_lower.to_string() + "," +
             (b.M_lower_thm1ii ? b.M_lower_thm1ii->to_string() : "") + "," +
             b.M_upper.to_string() + "\n";
    }
  if (out_path.empty())
    std::cout << csv;
  else {
    std::ofstream out(out_path);
    if (!out) ratiolab::fail(Errc::BadParameters, "cannot open " + out_path + " for writing");
    out << csv;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructions, verifiers and search for maximal intersecting set families"};
  app.require_subcommand(1);

  ConstructArgs cons;
  CLI::App* construct = app.add_subcommand("construct", "build a named family as JSON");
  construct->add_option("--family", cons.family, "star|thm1ii|plane|multiplane|halving")
      ->required()
      ->check(CLI::IsMember({"star", "thm1ii", "plane", "multiplane", "halving"}));
  construct->add_option("--n", cons.n, "universe size")->each([&](const std::string&) { cons.has_n = true; });
  construct->add_option("--r", cons.r, "member size")->each([&](const std::string&) { cons.has_r = true; });
  construct->add_option("--p", cons.p, "plane order (prime)")->each([&](const std::string&) { cons.has_p = true; });
  construct->add_option("--k", cons.k, "number of planes (odd)")->each([&](const std::string&) { cons.has_k = true; });
  construct->add_option("--s", cons.s, "free vertices per member (0 <= 2s <= p)");
  construct->add_option("--out", cons.out, "output file (default: stdout)");

  std::string verify_file;
  int verify_jobs = 1;
  CLI::App* verify = app.add_subcommand("verify", "check intersecting/maximal/cover for a family file");
  verify->add_option("file", verify_file, "family JSON file")->required();
  verify->add_option("--jobs", verify_jobs, "worker threads")->envname("RATIO_LAB_JOBS");

  std::string analyze_file, analyze_out;
  bool analyze_tau = false, analyze_partition = false, analyze_fmap = false;
  int analyze_jobs = 1;
  CLI::App* analyze = app.add_subcommand("analyze", "degree profile and proof gadgets for a family file");
  analyze->add_option("file", analyze_file, "family JSON file")->required();
  analyze->add_flag("--tau", analyze_tau, "include the covering number");
  analyze->add_flag("--partition", analyze_partition, "include the removable/rigid partition");
  analyze->add_flag("--fmap", analyze_fmap, "include the minimum-degree remap check");
  analyze->add_option("--jobs", analyze_jobs, "worker threads")->envname("RATIO_LAB_JOBS");
  analyze->add_option("--out", analyze_out, "output file (default: stdout)");

  int bounds_n = 0, bounds_r = 0;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "closed-form ratio bounds for (n, r)");
  bounds_cmd->add_option("--n", bounds_n)->required();
  bounds_cmd->add_option("--r", bounds_r)->required();

  int search_n = 0, search_r = 0, search_jobs = 1;
  bool search_no_cover = false;
  std::string search_emit;
  CLI::App* search = app.add_subcommand("search", "enumerate all maximal families and report extremal ratios");
  search->add_option("--n", search_n)->required();
  search->add_option("--r", search_r)->required();
  search->add_flag("--no-cover", search_no_cover, "keep families that do not cover [n]");
  search->add_option("--jobs", search_jobs, "worker threads")->envname("RATIO_LAB_JOBS");
  search->add_option("--emit-families", search_emit, "also write every family to this file");

  int blok_p = 0, blok_jobs = 1;
  CLI::App* blokhuis = app.add_subcommand("blokhuis", "exhaustive small-blocking-set scan of the order-p plane");
  blokhuis->add_option("--p", blok_p, "prime plane order")->required();
  blokhuis->add_option("--jobs", blok_jobs, "worker threads")->envname("RATIO_LAB_JOBS");

  int primes_r = 0;
  CLI::App* primes = app.add_subcommand("primes", "smallest prime in (2r/3, 4r/5)");
  primes->add_option("--r", primes_r)->required();

  int match_n = 0, match_r = 0;
  bool match_no_cap = false;
  CLI::App* match = app.add_subcommand("match", "closest regular multi-plane parameters for (n, r)");
  match->add_option("--n", match_n)->required();
  match->add_option("--r", match_r)->required();
  match->add_flag("--no-cap", match_no_cap, "report-only: ignore the 128-vertex cap");

  std::string sweep_family, sweep_out;
  int sweep_n_min = 0, sweep_n_max = 0, sweep_r_min = 0, sweep_r_max = 0, sweep_p = 0;
  CLI::App* sweep = app.add_subcommand("sweep", "CSV table of construction ratios and bounds over an (n, r) grid");
  sweep->add_option("--family", sweep_family, "star|thm1ii|plane|halving")
      ->required()
      ->check(CLI::IsMember({"star", "thm1ii", "plane", "halving"}));
  sweep->add_option("--n-min", sweep_n_min)->required();
  sweep->add_option("--n-max", sweep_n_max)->required();
  sweep->add_option("--r-min", sweep_r_min)->required();
  sweep->add_option("--r-max", sweep_r_max)->required();
  sweep->add_option("--p", sweep_p, "plane order for --family plane");
  sweep->add_option("--out", sweep_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << Json{{"error", "Usage"}, {"message", e.what()}}.dump() << "\n";
    return kUsageError;
  }

  try {
    if (construct->parsed()) {
      const Family f = run_construct(cons);
      emit(ratiolab::family_to_json(f).dump(2), cons.out);
      return kOk;
    }
    if (verify->parsed()) return run_verify(verify_file, verify_jobs);
    if (analyze->parsed())
      return run_analyze(analyze_file, analyze_tau, analyze_partition, analyze_fmap,
                         analyze_jobs, analyze_out);
    if (bounds_cmd->parsed()) {
      std::cout << ratiolab::to_json(ratiolab::bounds(bounds_n, bounds_r)).dump() << "\n";
      return kOk;
    }
    if (search->parsed()) {
      if (!search_emit.empty()) {
        const auto families =
            ratiolab::enumerate_maximal_families(search_n, search_r, !search_no_cover, search_jobs);
        Json all = Json::array();
        for (const Family& f : families) all.push_back(ratiolab::family_to_json(f));
        std::ofstream out(search_emit);
        if (!out) ratiolab::fail(Errc::BadParameters, "cannot open " + search_emit + " for writing");
        out << all.dump(2) << "\n";
      }
      const ratiolab::ExtremalReport rep =
          ratiolab::extremal_ratios(search_n, search_r, !search_no_cover, search_jobs);
      std::cout << ratiolab::to_json(rep).dump() << "\n";
      return kOk;
    }
    if (blokhuis->parsed()) {
      const auto report = ratiolab::verify_blokhuis(ratiolab::build_plane(blok_p, 1), blok_jobs);
      std::cout << ratiolab::to_json(report).dump() << "\n";
      return report.violations.empty() ? kOk : kVerificationFailure;
    }
    if (primes->parsed()) {
      const int p = ratiolab::prime_pick(primes_r);
      std::cout << Json{{"r", primes_r},
                        {"p", p},
                        {"window_low", ratiolab::Rational(2 * static_cast<std::uint64_t>(primes_r), 3).to_string()},
                        {"window_high", ratiolab::Rational(4 * static_cast<std::uint64_t>(primes_r), 5).to_string()}}
                       .dump()
                << "\n";
      return kOk;
    }
    if (match->parsed()) {
      std::cout << ratiolab::to_json(ratiolab::match_regular_params(match_n, match_r, !match_no_cap)).dump()
                << "\n";
      return kOk;
    }
    if (sweep->parsed())
      return run_sweep(sweep_family, sweep_n_min, sweep_n_max, sweep_r_min, sweep_r_max, sweep_p,
                       sweep_out);
  } catch (const Error& e) {
    std::cerr << Json{{"error", e.code_name()}, {"message", e.what()}}.dump() << "\n";
    return exit_code_for(e);
  }
  return kUsageError;
}
