#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hplus/dims.hpp"
#include "hplus/error.hpp"
#include "hplus/fusion.hpp"
#include "hplus/json_io.hpp"
#include "hplus/linmaps.hpp"
#include "hplus/ncpart.hpp"
#include "hplus/parallel.hpp"
#include "hplus/verify.hpp"

namespace {

using namespace hplus;

enum ExitCode { kOk = 0, kSuiteFailure = 1, kUsage = 2, kCap = 3 };

struct Globals {
  std::string group = "trivial";
  std::string format = "json";
  unsigned jobs = 0;  // 0: per-command default
  std::uint64_t seed = 1;
  std::string out;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open --out path '" + g.out + "' for writing");
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<GroupElement> parse_tuple(const Group& group, const std::string& text) {
  return parse_word(group, text).letters;
}

void warn_small_N(std::uint64_t N, const std::string& what) {
  if (N < 4) std::cerr << "note: N = " << N << " < 4; " << what << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  CLI::App app{"hplus: fusion rules, partition counts and dimensions for free wreath products H_N^+(Γ)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--group", g.group, "trivial | integers | cyclic:<s> | free:<n> | table:<path>")
      ->capture_default_str();
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads (default: all cores for verify/export, 1 elsewhere)");
  app.add_option("--seed", g.seed, "seed for randomized cases")->capture_default_str();
  app.add_option("--out", g.out, "write output to this path instead of stdout");

  // fuse
  std::string fx, fy, via = "words";
  auto* fuse = app.add_subcommand("fuse", "Decompose ω(x) ⊗ ω(y) into irreducibles ω(w) with multiplicities");
  fuse->add_option("--x", fx, "first word, e.g. \"[1,0]\"")->required();
  fuse->add_option("--y", fy, "second word")->required();
  fuse->add_option("--via", via, "words: splitting rule on words; mprime: a/z calculus")
      ->check(CLI::IsMember({"words", "mprime"}))
      ->capture_default_str();

  // dim
  std::string dword;
  std::uint64_t dN = 0;
  auto* dim = app.add_subcommand("dim", "Dimension ∏ A_{l_i}(√N) of the irreducible labelled by a word");
  dim->add_option("--word", dword, "word, e.g. \"[e,1]\"")->required();
  dim->add_option("--N", dN, "matrix size N >= 1")->required()->check(CLI::PositiveNumber);

  // homdim
  std::string hup, hlo;
  std::uint64_t hN = 0;
  auto* homdim = app.add_subcommand(
      "homdim", "Count of NC_Γ(upper; lower) and the exact rank of the span of its T_p maps at N");
  homdim->add_option("--upper", hup, "upper decoration, e.g. \"[1]\"")->required();
  homdim->add_option("--lower", hlo, "lower decoration")->required();
  homdim->add_option("--N", hN, "matrix size N >= 1")->required()->check(CLI::PositiveNumber);

  // count
  std::string cup, clo, flavor = "nc_gamma";
  bool list = false;
  auto* count = app.add_subcommand("count", "Number of admissible decorated non-crossing partitions");
  count->add_option("--upper", cup, "upper decoration")->required();
  count->add_option("--lower", clo, "lower decoration")->required();
  count->add_option("--flavor", flavor, "nc_gamma | nc_gamma_prime | nc_star | nc_s:<s>")->capture_default_str();
  count->add_flag("--list", list, "also print the partitions");

  // gram
  std::size_t gk = 0, gupper = 0;
  std::uint64_t gN = 0;
  std::string backend = "combinatorial";
  auto* gram = app.add_subcommand("gram", "Gram matrix ⟨T_p, T_q⟩ over NC(upper, k) and its exact rank");
  gram->add_option("--k", gk, "number of lower points")->required();
  gram->add_option("--upper", gupper, "number of upper points")->capture_default_str();
  gram->add_option("--N", gN, "matrix size N >= 1")->required()->check(CLI::PositiveNumber);
  gram->add_option("--backend", backend, "direct | combinatorial")
      ->check(CLI::IsMember({"direct", "combinatorial"}))
      ->capture_default_str();

  // multiplier
  double mx = 0;
  std::uint64_t mN = 0, mR = 12;
  std::string mword;
  auto* multiplier = app.add_subcommand(
      "multiplier", "Multiplier eigenvalue c_x of a word, or the per-shell maxima of |c_x| up to R-max");
  multiplier->add_option("--x", mx, "point of I_N")->required();
  multiplier->add_option("--N", mN, "matrix size N >= 4")->required();
  multiplier->add_option("--R-max", mR, "largest L-radius of the decay profile")->capture_default_str();
  multiplier->add_option("--word", mword, "evaluate a single word instead of the profile");

  // verify
  SuiteConfig cfg;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite; exit 1 on any failure");
  std::string suite_help = "suite name or 'all':";
  for (const auto& n : suite_names()) suite_help += "\n  " + n + ": " + suite_description(n);
  verify->add_option("--suite", suite, suite_help)->required();
  verify->add_option("--max-len", cfg.max_len, "word and tuple length bound")->capture_default_str();
  verify->add_option("--max-points", cfg.max_points, "k + l bound for decorated shapes")->capture_default_str();
  verify->add_option("--max-partition", cfg.max_partition, "partition enumeration limit")->capture_default_str();
  verify->add_option("--N", cfg.Ns, "N values (default depends on the suite)");
  verify->add_option("--samples", cfg.samples, "randomized cases per check")->capture_default_str();
  verify->add_option("--x", cfg.x, "multiplier point for the decay suite")->capture_default_str();

  // export
  std::string what;
  std::size_t ek = 4, el = 0, elen = 3;
  std::uint64_t eN = 5, eR = 40;
  double ex = 4.0;
  auto* exp = app.add_subcommand("export", "Write a table: dims (word,L,dim), decay (R,shell_size,max_abs_c), "
                                           "partitions (NC(k,l)) or gram");
  exp->add_option("what", what, "dims | decay | partitions | gram")
      ->required()
      ->check(CLI::IsMember({"dims", "decay", "partitions", "gram"}));
  exp->add_option("--N", eN, "matrix size")->capture_default_str();
  exp->add_option("--max-len", elen, "word length bound for dims")->capture_default_str();
  exp->add_option("--R-max", eR, "radius bound for decay")->capture_default_str();
  exp->add_option("--x", ex, "multiplier point for decay")->capture_default_str();
  exp->add_option("--k", ek, "lower points for partitions / gram")->capture_default_str();
  exp->add_option("--upper", el, "upper points for partitions / gram")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const bool csv = g.format == "csv";
  try {
    if (*fuse) {
      const Group group = parse_group_spec(g.group);
      const Word x = parse_word(group, fx), y = parse_word(group, fy);
      const auto r = via == "mprime" ? fuse_mprime(group, to_mprime(group, x), to_mprime(group, y))
                                     : fuse_basis(group, x, y);
      emit(g, csv ? fusion_to_csv(group, r) : dump(fusion_to_json(group, r)));
    } else if (*dim) {
      const Group group = parse_group_spec(g.group);
      const Word w = parse_word(group, dword);
      warn_small_N(dN, "values need not be dimensions of actual corepresentations");
      if (csv) {
        emit(g, dimension_table_csv(group, {w}, dN));
      } else {
        emit(g, dump(json{{"word", word_to_json(group, w)["letters"]},
                          {"N", dN},
                          {"L", L_length(group, w)},
                          {"dim", dimension(group, w, dN).get_str()}}));
      }
    } else if (*homdim) {
      const Group group = parse_group_spec(g.group);
      const auto h = hom_dimension(parse_tuple(group, hup), parse_tuple(group, hlo), group, hN);
      warn_small_N(hN, "the maps T_p can be dependent, so rank may be below count");
      if (csv) {
        emit(g, "count,rank\n" + std::to_string(h.count) + "," + std::to_string(h.rank) + "\n");
      } else {
        emit(g, dump(json{{"N", hN}, {"count", std::to_string(h.count)}, {"rank", std::to_string(h.rank)}}));
      }
    } else if (*count) {
      const Group group = parse_group_spec(g.group);
      const auto up = parse_tuple(group, cup), lo = parse_tuple(group, clo);
      const Flavor f = parse_flavor(flavor);
      const auto ps = admissible_partitions(up, lo, f, group);
      if (csv) {
        std::string s = "count\n" + std::to_string(ps.size()) + "\n";
        emit(g, s);
      } else {
        json out{{"flavor", flavor}, {"count", std::to_string(ps.size())}};
        if (list) {
          json arr = json::array();
          for (const auto& p : ps) arr.push_back(partition_to_json(p));
          out["partitions"] = arr;
        }
        emit(g, dump(out));
      }
    } else if (*gram) {
      const auto ps = enumerate_nc(gupper, gk);
      const auto m = gram_matrix(ps, gN, parse_gram_backend(backend), g.jobs ? g.jobs : 1);
      const auto rank = exact_rank(m.entries);
      warn_small_N(gN, "the Gram matrix may be singular");
      if (csv) {
        emit(g, gram_to_csv(m));
      } else {
        json out = gram_to_json(m);
        out["rank"] = std::to_string(rank);
        json parts = json::array();
        for (const auto& p : ps) parts.push_back(partition_to_json(p));
        out["partitions"] = parts;
        emit(g, dump(out));
      }
    } else if (*multiplier) {
      const Group group = parse_group_spec(g.group);
      if (!mword.empty()) {
        const Word w = parse_word(group, mword);
        const double c = multiplier_eigenvalue(group, w, mx, mN);
        emit(g, csv ? "word,c\n" + format_word(group, w) + "," + format_double(c) + "\n"
                    : dump(json{{"word", word_to_json(group, w)["letters"]}, {"x", mx}, {"N", mN}, {"c", c}}));
      } else {
        const auto rows = decay_profile(group, mx, mN, mR);
        emit(g, csv ? decay_to_csv(rows) : dump(json{{"x", mx}, {"N", mN}, {"profile", decay_to_json(rows)}}));
      }
    } else if (*verify) {
      cfg.group = g.group;
      cfg.seed = g.seed;
      cfg.jobs = g.jobs ? g.jobs : default_jobs();
      const std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      json reports = json::array();
      bool ok = true;
      for (const auto& n : names) {
        const auto r = run_suite(n, cfg);
        ok = ok && r.ok();
        reports.push_back(report_to_json(r));
        std::cerr << n << ": " << (r.applicable ? (r.ok() ? "pass" : "FAIL") : "not applicable") << " ("
                  << r.cases << " checks, " << r.failure_count << " failures, " << r.wall_seconds << " s)\n";
      }
      emit(g, dump(names.size() == 1 ? reports.front() : json{{"reports", reports}}));
      return ok ? kOk : kSuiteFailure;
    } else if (*exp) {
      if (what == "dims") {
        const Group group = parse_group_spec(g.group);
        const auto words = words_up_to(group.sample_alphabet(), elen);
        emit(g, csv ? dimension_table_csv(group, words, eN) : dump(dimension_table_json(group, words, eN)));
      } else if (what == "decay") {
        const Group group = parse_group_spec(g.group);
        const auto rows = decay_profile(group, ex, eN, eR);
        emit(g, csv ? decay_to_csv(rows) : dump(decay_to_json(rows)));
      } else if (what == "partitions") {
        const auto ps = enumerate_nc(el, ek);
        if (csv) {
          std::string s = "index,blocks\n";
          for (std::size_t i = 0; i < ps.size(); ++i) {
            std::string b;
            for (const auto& blk : ps[i].blocks()) {
              b += "{";
              for (std::size_t j = 0; j < blk.size(); ++j) b += (j ? " " : "") + ps[i].point_name(blk[j]);
              b += "}";
            }
            s += std::to_string(i) + "," + b + "\n";
          }
          emit(g, s);
        } else {
          json arr = json::array();
          for (const auto& p : ps) arr.push_back(partition_to_json(p));
          emit(g, dump(arr));
        }
      } else {
        const auto m = gram_matrix(enumerate_nc(el, ek), eN, GramBackend::combinatorial,
                                   g.jobs ? g.jobs : default_jobs());
        emit(g, csv ? gram_to_csv(m) : dump(gram_to_json(m)));
      }
    }
  } catch (const ResourceCap& e) {
    std::cerr << "error: resource cap: " << e.what() << "\n";
    return kCap;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kSuiteFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
