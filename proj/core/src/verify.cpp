#include "hplus/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "hplus/dims.hpp"
#include "hplus/error.hpp"
#include "hplus/fusion.hpp"
#include "hplus/linmaps.hpp"
#include "hplus/ncpart.hpp"
#include "hplus/parallel.hpp"
#include "hplus/words.hpp"

namespace hplus {

namespace {

// Per-case collector; merged in case order so reports do not depend on threads.
struct Sink {
  std::uint64_t checks = 0;
  std::uint64_t failed = 0;
  std::vector<Failure> failures;

  template <class Make>
  void expect(bool ok, Make&& make) {
    ++checks;
    if (ok) return;
    ++failed;
    if (failures.size() < kMaxStoredFailures) failures.push_back(make());
  }
};

template <class Fn>
void run_cases(SuiteReport& report, std::size_t n, unsigned jobs, Fn&& fn) {
  std::vector<Sink> sinks(n);
  parallel_for(n, jobs, [&](std::size_t i) { fn(i, sinks[i]); });
  for (auto& s : sinks) {
    report.cases += s.checks;
    report.failure_count += s.failed;
    for (auto& f : s.failures) {
      if (report.failures.size() < kMaxStoredFailures) report.failures.push_back(std::move(f));
    }
  }
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string fmt(const Group& g, const Word& w) { return format_word(g, w); }
std::string fmt(const Group& g, const std::vector<GroupElement>& v) { return format_word(g, Word(v)); }

std::string fmt_terms(const Group& g, const FusionElement& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    os << (first ? "" : " + ") << c.get_str() << "*" << fmt(g, w);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string suite_cli(const std::string& name, const SuiteConfig& cfg) {
  std::ostringstream os;
  os << "hplus verify --suite " << name << " --group " << cfg.group << " --max-len " << cfg.max_len
     << " --max-points " << cfg.max_points << " --samples " << cfg.samples << " --seed " << cfg.seed;
  return os.str();
}

SuiteReport start(const std::string& name, const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = name;
  r.group = cfg.group;
  return r;
}

std::vector<std::uint64_t> Ns_or(const SuiteConfig& cfg, std::vector<std::uint64_t> fallback) {
  return cfg.Ns.empty() ? fallback : cfg.Ns;
}

std::string join_numbers(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Word random_word(std::mt19937_64& rng, const std::vector<GroupElement>& alphabet, std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> len(lo, hi);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  Word w;
  for (std::size_t n = len(rng); n > 0; --n) w.letters.push_back(alphabet[pick(rng)]);
  return w;
}

// Every word of length <= max_len when that is at most `limit` words, else
// `samples` seeded random ones. Returns whether the list is exhaustive.
bool bounded_words(const std::vector<GroupElement>& alphabet, std::size_t max_len, std::size_t limit,
                   std::size_t samples, std::mt19937_64& rng, std::vector<Word>& out) {
  double total = 0;
  for (std::size_t k = 0; k <= max_len; ++k) total += std::pow(static_cast<double>(alphabet.size()), k);
  if (total <= static_cast<double>(limit)) {
    out = words_up_to(alphabet, max_len);
    return true;
  }
  out.clear();
  for (std::size_t i = 0; i < samples; ++i) out.push_back(random_word(rng, alphabet, 0, max_len));
  return false;
}

Word repeat(const GroupElement& g, std::size_t n) { return Word(std::vector<GroupElement>(n, g)); }

SupportSet supp(const FusionElement& a) {
  const auto v = a.support();
  return SupportSet(v.begin(), v.end());
}

SupportSet triple_support(const Group& g, const Word& a, const Word& b, const Word& c) {
  return support_product(g, support_product(g, {a}, {b}), {c});
}

// x_j = product of the g_i in the j-th part, over every subset D and every
// split of D into consecutive nonempty parts.
std::set<Word> sigma_words(const Group& group, const std::vector<GroupElement>& gs) {
  std::set<Word> out;
  const std::size_t k = gs.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<GroupElement> d;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) d.push_back(gs[i]);
    }
    if (d.empty()) {
      out.insert(Word{});
      continue;
    }
    for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (d.size() - 1)); ++cuts) {
      Word x;
      GroupElement acc = d[0];
      for (std::size_t i = 1; i < d.size(); ++i) {
        if (cuts >> (i - 1) & 1) {
          x.letters.push_back(acc);
          acc = d[i];
        } else {
          acc = group.mul(acc, d[i]);
        }
      }
      x.letters.push_back(acc);
      out.insert(std::move(x));
    }
  }
  return out;
}

std::vector<GroupElement> non_identity(const Group& group, const std::vector<GroupElement>& alphabet) {
  std::vector<GroupElement> out;
  for (const auto& g : alphabet) {
    if (!group.is_identity(g)) out.push_back(g);
  }
  return out;
}

std::string region_of(const Group& g, const Word& w) { return std::string(region_name(classify_word(g, w))); }

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "one-point-counts", "coefficient-law",     "trivial-multiplicity", "ring",
      "mprime",           "reductions",          "dimension",            "diagrams",
      "gram-rank",        "gram-backends",       "support-conjugation",  "support-separation",
      "decay",            "rotation"};
  return names;
}

std::string suite_description(const std::string& name) {
  static const std::map<std::string, std::string> text{
      {"one-point-counts", "#NC_Γ((g);(h)) is 0, 1 or 2 according to g = h and g = e"},
      {"coefficient-law", "coefficient of b_x in ∏(b_g + δ_{g,e}1) equals #NC'_Γ(x; g)"},
      {"trivial-multiplicity", "#(1 ∈ a(g_1)⊗…⊗a(g_k)) = #NC_Γ(∅; g) = Gram rank at N >= 4"},
      {"ring", "associativity, unit, conjugate anti-multiplicativity, duality, recursion identity"},
      {"mprime", "the a/z calculus reproduces the word fusion rule"},
      {"reductions", "trivial group gives the SO(3) rule, Z_s gives the quantum reflection group rule"},
      {"dimension", "dimension is multiplicative over fusion, invariant under conjugation"},
      {"diagrams", "T_p functor laws and the conjugate (snake) equations"},
      {"gram-rank", "Gram rank of NC(0,k) is Catalan(k) for N >= 4 and 1 at N = 1"},
      {"gram-backends", "direct and combinatorial Gram matrices agree entrywise"},
      {"support-conjugation", "support inclusions for conjugation by (g0, e^t) into G_2"},
      {"support-separation", "support inclusions and disjointness for (g) and e^2, e^4 conjugation"},
      {"decay", "multiplier eigenvalues c_x and decay of their shell maxima"},
      {"rotation", "decorated counts are invariant under bending the first upper leg down"},
  };
  auto it = text.find(name);
  return it == text.end() ? std::string{} : it->second;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  static const std::map<std::string, std::function<SuiteReport(const SuiteConfig&)>> table{
      {"one-point-counts", suite_one_point_counts},
      {"coefficient-law", suite_coefficient_law},
      {"trivial-multiplicity", suite_trivial_multiplicity},
      {"ring", suite_ring},
      {"mprime", suite_mprime},
      {"reductions", suite_reductions},
      {"dimension", suite_dimension},
      {"diagrams", suite_diagrams},
      {"gram-rank", suite_gram_rank},
      {"gram-backends", suite_gram_backends},
      {"support-conjugation", suite_support_conjugation},
      {"support-separation", suite_support_separation},
      {"decay", suite_decay},
      {"rotation", suite_rotation},
  };
  auto it = table.find(name);
  if (it == table.end()) {
    std::string known;
    for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
    throw InvalidArgument("unknown suite '" + name + "'; known suites: " + known);
  }
  if (cfg.jobs == 0) throw InvalidArgument("jobs must be >= 1");
  if (cfg.max_len > 8) throw ResourceCap("max-len " + std::to_string(cfg.max_len) + " exceeds the suite cap 8");
  if (cfg.max_points > cfg.max_partition) {
    throw ResourceCap("max-points " + std::to_string(cfg.max_points) + " exceeds the partition limit " +
                      std::to_string(cfg.max_partition));
  }
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport r = it->second(cfg);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// ---------------------------------------------------------------------------

SuiteReport suite_one_point_counts(const SuiteConfig& cfg) {
  auto r = start("one-point-counts", cfg);
  const Group group = parse_group_spec(cfg.group);
  const auto alphabet = group.sample_alphabet();
  r.bounds = {{"elements", group.is_finite() ? "all" : "sample alphabet"},
              {"pairs", std::to_string(alphabet.size() * alphabet.size())}};
  run_cases(r, alphabet.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    const auto& g = alphabet[i];
    for (const auto& h : alphabet) {
      const std::uint64_t expected = g != h ? 0 : group.is_identity(g) ? 2 : 1;
      const auto got = count_admissible({g}, {h}, Flavor::gamma(), group);
      sink.expect(got == expected, [&] {
        const auto up = fmt(group, std::vector{g}), lo = fmt(group, std::vector{h});
        return Failure{"upper=" + up + " lower=" + lo,
                       "count " + std::to_string(got) + ", expected " + std::to_string(expected),
                       "hplus count --group " + cfg.group + " --upper " + quoted(up) + " --lower " + quoted(lo) +
                           " --flavor nc_gamma"};
      });
    }
  });
  return r;
}

SuiteReport suite_coefficient_law(const SuiteConfig& cfg) {
  auto r = start("coefficient-law", cfg);
  const Group group = parse_group_spec(cfg.group);
  const auto alphabet = group.sample_alphabet();
  std::mt19937_64 rng(cfg.seed);
  std::vector<Word> tuples;
  const bool exhaustive = bounded_words(alphabet, cfg.max_len, cfg.exhaustive_limit, cfg.samples, rng, tuples);
  r.bounds = {{"tuple_length", "<= " + std::to_string(cfg.max_len)},
              {"tuples", exhaustive ? "all (" + std::to_string(tuples.size()) + ")"
                                    : std::to_string(tuples.size()) + " seeded random"},
              {"candidates", "sigma-words, support of P_k, all words of length <= k over the alphabet"}};

  run_cases(r, tuples.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    const auto& gs = tuples[i].letters;
    const auto P = decompose_generator_product(group, gs, GeneratorMode::a_rep);
    std::set<Word> candidates = sigma_words(group, gs);
    for (const auto& w : P.support()) candidates.insert(w);
    for (auto& w : words_up_to(alphabet, gs.size())) candidates.insert(std::move(w));
    for (const auto& x : candidates) {
      const BigInt coeff = P.coefficient(x);
      const auto count = count_admissible(x.letters, gs, Flavor::gamma_prime(), group, cfg.max_partition);
      sink.expect(coeff == static_cast<unsigned long>(count), [&] {
        const auto gx = fmt(group, x), gg = fmt(group, gs);
        return Failure{"g=" + gg + " x=" + gx,
                       "coefficient " + coeff.get_str() + " but #NC' = " + std::to_string(count),
                       "hplus count --group " + cfg.group + " --upper " + quoted(gx) + " --lower " + quoted(gg) +
                           " --flavor nc_gamma_prime"};
      });
    }
  });
  return r;
}

SuiteReport suite_trivial_multiplicity(const SuiteConfig& cfg) {
  auto r = start("trivial-multiplicity", cfg);
  const Group group = parse_group_spec(cfg.group);
  const auto alphabet = group.sample_alphabet();
  const auto Ns = Ns_or(cfg, {5});
  std::mt19937_64 rng(cfg.seed);
  std::vector<Word> tuples;
  const bool exhaustive = bounded_words(alphabet, cfg.max_len, cfg.exhaustive_limit, cfg.samples, rng, tuples);
  r.bounds = {{"tuple_length", "<= " + std::to_string(cfg.max_len)},
              {"tuples", exhaustive ? "all (" + std::to_string(tuples.size()) + ")"
                                    : std::to_string(tuples.size()) + " seeded random"},
              {"N", join_numbers(Ns)}};

  run_cases(r, tuples.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    const auto& gs = tuples[i].letters;
    const BigInt fusion = decompose_generator_product(group, gs, GeneratorMode::a_rep).trivial_multiplicity();
    const BigInt omega = decompose_generator_product(group, gs, GeneratorMode::omega).trivial_multiplicity();
    const auto count = count_admissible({}, gs, Flavor::gamma(), group, cfg.max_partition);
    const auto gg = fmt(group, gs);
    sink.expect(fusion == static_cast<unsigned long>(count), [&] {
      return Failure{"g=" + gg, "#(1 in a-product) = " + fusion.get_str() + ", #NC = " + std::to_string(count),
                     "hplus count --group " + cfg.group + " --upper \"[]\" --lower " + quoted(gg) +
                         " --flavor nc_gamma"};
    });
    // ω(g) = a(g) - δ_{g,e} 1, so expanding over the identity letters gives an
    // alternating sum of partition counts.
    std::vector<std::size_t> e_pos;
    for (std::size_t j = 0; j < gs.size(); ++j) {
      if (group.is_identity(gs[j])) e_pos.push_back(j);
    }
    BigInt alternating = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e_pos.size()); ++mask) {
      std::vector<GroupElement> kept;
      std::size_t dropped = 0;
      for (std::size_t j = 0, p = 0; j < gs.size(); ++j) {
        if (p < e_pos.size() && e_pos[p] == j) {
          if (mask >> p++ & 1) {
            ++dropped;
            continue;
          }
        }
        kept.push_back(gs[j]);
      }
      const BigInt c = static_cast<unsigned long>(count_admissible({}, kept, Flavor::gamma(), group, cfg.max_partition));
      alternating += dropped % 2 ? BigInt(-c) : c;
    }
    sink.expect(omega == alternating, [&] {
      return Failure{"g=" + gg, "#(1 in ω-product) = " + omega.get_str() + ", alternating NC sum " +
                                    alternating.get_str(),
                     suite_cli("trivial-multiplicity", cfg)};
    });
    for (auto N : Ns) {
      const auto h = hom_dimension({}, gs, group, N, cfg.max_partition);
      const bool ok = N >= 4 ? h.rank == count : h.rank <= count;
      sink.expect(ok, [&] {
        return Failure{"g=" + gg + " N=" + std::to_string(N),
                       "rank " + std::to_string(h.rank) + ", count " + std::to_string(count),
                       "hplus homdim --group " + cfg.group + " --upper \"[]\" --lower " + quoted(gg) + " --N " +
                           std::to_string(N)};
      });
    }
  });
  return r;
}

SuiteReport suite_ring(const SuiteConfig& cfg) {
  auto r = start("ring", cfg);
  const Group group = parse_group_spec(cfg.group);
  const auto alphabet = group.sample_alphabet();
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::array<Word, 3>> triples(cfg.samples);
  for (auto& t : triples) {
    for (auto& w : t) w = random_word(rng, alphabet, 0, cfg.max_len);
  }
  std::vector<Word> rec;
  const std::size_t rec_len = 4;
  const bool rec_exhaustive = bounded_words(alphabet, rec_len, cfg.exhaustive_limit, cfg.samples, rng, rec);
  r.bounds = {{"random_triples", std::to_string(triples.size())},
              {"random_pairs", std::to_string(triples.size())},
              {"word_length", "<= " + std::to_string(cfg.max_len)},
              {"recursion", std::string(rec_exhaustive ? "all" : "sampled") + " words of length 2.." +
                                std::to_string(rec_len)}};

  run_cases(r, triples.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    const auto& [x, y, z] = triples[i];
    const auto bx = FusionElement::basis(x), by = FusionElement::basis(y), bz = FusionElement::basis(z);
    const auto input = "x=" + fmt(group, x) + " y=" + fmt(group, y) + " z=" + fmt(group, z);
    const auto left = product(group, product(group, bx, by), bz);
    const auto right = product(group, bx, product(group, by, bz));
    sink.expect(left == right, [&] {
      return Failure{input, "(xy)z = " + fmt_terms(group, left) + " but x(yz) = " + fmt_terms(group, right),
                     suite_cli("ring", cfg)};
    });
    const auto unit = FusionElement::unit();
    sink.expect(product(group, unit, bx) == bx && product(group, bx, unit) == bx,
                [&] { return Failure{input, "b_∅ is not a two-sided unit for x", suite_cli("ring", cfg)}; });

    const auto xy = fuse_basis(group, x, y);
    const auto anti = fuse_basis(group, involute(group, y), involute(group, x));
    sink.expect(conjugate(group, xy) == anti, [&] {
      return Failure{input, "conj(x⊗y) = " + fmt_terms(group, conjugate(group, xy)) + " but ȳ⊗x̄ = " +
                                fmt_terms(group, anti),
                     suite_cli("ring", cfg)};
    });
    const bool dual = y == involute(group, x);
    sink.expect(xy.trivial_multiplicity() == (dual ? 1 : 0), [&] {
      return Failure{input, "#(1 in x⊗y) = " + xy.trivial_multiplicity().get_str(),
                     "hplus fuse --group " + cfg.group + " --x " + quoted(fmt(group, x)) + " --y " +
                         quoted(fmt(group, y))};
    });
    bool nonneg = true;
    for (const auto& [w, c] : xy.terms()) nonneg = nonneg && c > 0;
    sink.expect(nonneg, [&] { return Failure{input, "negative structure constant", suite_cli("ring", cfg)}; });
  });

  SuiteReport tail = r;
  tail.cases = 0;
  tail.failure_count = 0;
  tail.failures.clear();
  run_cases(tail, rec.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    const auto& g = rec[i].letters;
    const std::size_t k = g.size();
    if (k < 2) return;
    const Word head(std::vector<GroupElement>(g.begin(), g.end() - 1));
    std::vector<GroupElement> merged(g.begin(), g.end() - 2);
    merged.push_back(group.mul(g[k - 2], g[k - 1]));
    auto rhs = fuse_basis(group, head, Word({g[k - 1]})) - FusionElement::basis(Word(merged));
    if (group.is_identity(merged.back())) rhs -= FusionElement::basis(Word(std::vector<GroupElement>(g.begin(), g.end() - 2)));
    sink.expect(rhs == FusionElement::basis(rec[i]), [&] {
      return Failure{"g=" + fmt(group, rec[i]), "recursion gives " + fmt_terms(group, rhs), suite_cli("ring", cfg)};
    });
  });
  r.cases += tail.cases;
  r.failure_count += tail.failure_count;
  for (auto& f : tail.failures) {
    if (r.failures.size() < kMaxStoredFailures) r.failures.push_back(std::move(f));
  }
  return r;
}

SuiteReport suite_mprime(const SuiteConfig& cfg) {
  auto r = start("mprime", cfg);
  const Group group = parse_group_spec(cfg.group);
  const auto alphabet = group.sample_alphabet();
  std::mt19937_64 rng(cfg.seed);
  std::vector<Word> words;
  const bool exhaustive = bounded_words(alphabet, cfg.max_len, cfg.exhaustive_limit, cfg.samples, rng, words);
  std::vector<std::pair<Word, Word>> pairs;
  if (exhaustive && words.size() * words.size() <= cfg.exhaustive_limit) {
    for (const auto& x : words) {
      for (const auto& y : words) pairs.emplace_back(x, y);
    }
  } else {
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      pairs.emplace_back(random_word(rng, alphabet, 0, cfg.max_len), random_word(rng, alphabet, 0, cfg.max_len));
    }
  }
  const std::size_t exhaustive_pairs = pairs.size();
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    pairs.emplace_back(random_word(rng, alphabet, cfg.max_len + 1, cfg.max_len + 3),
                       random_word(rng, alphabet, cfg.max_len + 1, cfg.max_len + 3));
  }
  r.bounds = {{"short_pairs", std::to_string(exhaustive_pairs) + " with lengths <= " + std::to_string(cfg.max_len) +
                                  (exhaustive_pairs == words.size() * words.size() && exhaustive ? " (all)" : "")},
              {"long_pairs", std::to_string(cfg.samples) + " seeded random, lengths " +
                                 std::to_string(cfg.max_len + 1) + ".." + std::to_string(cfg.max_len + 3)}};

  run_cases(r, pairs.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    const auto& [x, y] = pairs[i];
    const auto input = "x=" + fmt(group, x) + " y=" + fmt(group, y);
    const auto mx = to_mprime(group, x), my = to_mprime(group, y);
    sink.expect(in_block_submonoid(group, mx) && from_mprime(group, mx) == x && L_length(group, x) == 2 * x.size(),
                [&] { return Failure{input, "to_mprime/from_mprime round trip failed for x", suite_cli("mprime", cfg)}; });
    const auto a = fuse_mprime(group, mx, my);
    const auto b = fuse_basis(group, x, y);
    sink.expect(a == b, [&] {
      return Failure{input, "a/z calculus gives " + fmt_terms(group, a) + ", word rule gives " + fmt_terms(group, b),
                     "hplus fuse --group " + cfg.group + " --x " + quoted(fmt(group, x)) + " --y " +
                         quoted(fmt(group, y))};
    });
  });
  return r;
}

SuiteReport suite_reductions(const SuiteConfig& cfg) {
  auto r = start("reductions", cfg);
  const std::size_t so3_max = 5;
  const std::vector<std::int64_t> moduli{2, 3, 4};
  r.bounds = {{"so3", "s, t <= " + std::to_string(so3_max)},
              {"cyclic", "s in {2,3,4}, |x|, |y| <= " + std::to_string(cfg.max_len)},
              {"integers", "letters in {e,±1,±2}, |x|, |y| <= 2"},
              {"trivial_as_Z1", "a, b <= " + std::to_string(so3_max)}};

  const Group trivial = Group::trivial();
  const auto e = trivial.identity();
  run_cases(r, (so3_max + 1) * (so3_max + 1), cfg.jobs, [&](std::size_t i, Sink& sink) {
    const std::size_t s = i / (so3_max + 1), t = i % (so3_max + 1);
    const auto got = fuse_basis(trivial, repeat(e, s), repeat(e, t));
    FusionElement want;
    for (auto label : snplus_fuse(s, t)) want.add(repeat(e, label), 1);
    sink.expect(got == want, [&] {
      return Failure{"s=" + std::to_string(s) + " t=" + std::to_string(t),
                     "trivial-group fusion " + fmt_terms(trivial, got) + " vs SO(3) " + fmt_terms(trivial, want),
                     "hplus fuse --group trivial --x " + quoted(fmt(trivial, repeat(e, s))) + " --y " +
                         quoted(fmt(trivial, repeat(e, t)))};
    });
    // The same pair through the Z_1 reflection-group rule on raw residues.
    const auto raw = hsn_fuse(ResidueWord(s, 0), ResidueWord(t, 0), 1);
    FusionElement via;
    for (const auto& [w, c] : raw) via.add(repeat(e, w.size()), c);
    sink.expect(via == want, [&] {
      return Failure{"s=" + std::to_string(s) + " t=" + std::to_string(t), "Z_1 rule disagrees with SO(3)",
                     suite_cli("reductions", cfg)};
    });
  });

  struct Job {
    Group group;
    Word x, y;
  };
  std::vector<Job> jobs;
  for (auto s : moduli) {
    const Group g = Group::cyclic(s);
    const auto words = words_up_to(g.enumerate(), cfg.max_len);
    for (const auto& x : words) {
      for (const auto& y : words) jobs.push_back({g, x, y});
    }
  }
  {
    const Group z = Group::integers();
    const auto words = words_up_to(z.sample_alphabet(), 2);
    for (const auto& x : words) {
      for (const auto& y : words) jobs.push_back({z, x, y});
    }
  }
  run_cases(r, jobs.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    const auto& j = jobs[i];
    const auto a = fuse_basis(j.group, j.x, j.y);
    const auto b = hsn_fuse(j.group, j.x, j.y);
    sink.expect(a == b, [&] {
      return Failure{j.group.spec() + " x=" + fmt(j.group, j.x) + " y=" + fmt(j.group, j.y),
                     "word rule " + fmt_terms(j.group, a) + " vs reflection-group rule " + fmt_terms(j.group, b),
                     "hplus fuse --group " + j.group.spec() + " --x " + quoted(fmt(j.group, j.x)) + " --y " +
                         quoted(fmt(j.group, j.y))};
    });
  });
  return r;
}

SuiteReport suite_dimension(const SuiteConfig& cfg) {
  auto r = start("dimension", cfg);
  const Group group = parse_group_spec(cfg.group);
  const auto alphabet = group.sample_alphabet();
  const auto Ns = Ns_or(cfg, {4, 5, 7, 10});
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::pair<Word, Word>> pairs(cfg.samples);
  for (auto& [x, y] : pairs) {
    x = random_word(rng, alphabet, 0, cfg.max_len);
    y = random_word(rng, alphabet, 0, cfg.max_len);
  }
  r.bounds = {{"random_pairs", std::to_string(pairs.size())},
              {"word_length", "<= " + std::to_string(cfg.max_len)},
              {"N", join_numbers(Ns)}};

  run_cases(r, pairs.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    const auto& [x, y] = pairs[i];
    const auto input = "x=" + fmt(group, x) + " y=" + fmt(group, y);
    const auto xy = fuse_basis(group, x, y);
    for (auto N : Ns) {
      const BigInt lhs = dimension(group, x, N) * dimension(group, y, N);
      BigInt rhs = 0;
      for (const auto& [w, c] : xy.terms()) rhs += c * dimension(group, w, N);
      sink.expect(lhs == rhs, [&] {
        return Failure{input + " N=" + std::to_string(N),
                       "dim(x)dim(y) = " + lhs.get_str() + " but the decomposition sums to " + rhs.get_str(),
                       "hplus fuse --group " + cfg.group + " --x " + quoted(fmt(group, x)) + " --y " +
                           quoted(fmt(group, y))};
      });
      const auto dx = dimension(group, x, N);
      sink.expect(dimension(group, involute(group, x), N) == dx && (N < 4 || dx > 0), [&] {
        return Failure{input + " N=" + std::to_string(N), "dimension not conjugation invariant or not positive",
                       "hplus dim --group " + cfg.group + " --word " + quoted(fmt(group, x)) + " --N " +
                           std::to_string(N)};
      });
    }
    auto ex = to_mprime(group, x).exponents, ey = to_mprime(group, involute(group, x)).exponents;
    std::reverse(ey.begin(), ey.end());
    sink.expect(ex == ey, [&] {
      return Failure{input, "exponents of x̄ are not those of x reversed", suite_cli("dimension", cfg)};
    });
  });
  return r;
}

SuiteReport suite_diagrams(const SuiteConfig& cfg) {
  auto r = start("diagrams", cfg);
  const std::size_t max_points = 4;
  const std::vector<std::uint64_t> Ns{2, 3, 4};
  r.bounds = {{"points_per_diagram", "<= " + std::to_string(max_points)},
              {"tensor_pairs", "combined points <= " + std::to_string(max_points)},
              {"N", join_numbers(Ns)},
              {"snake", "k <= 2, N <= 5"}};

  std::vector<NCPartition> all;
  for (std::size_t n = 0; n <= max_points; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      auto ps = enumerate_nc(k, n - k);
      all.insert(all.end(), ps.begin(), ps.end());
    }
  }
  const auto show = [](const NCPartition& p) {
    std::string s = "NC(" + std::to_string(p.upper()) + "," + std::to_string(p.lower()) + "){";
    for (const auto& b : p.blocks()) {
      s += "{";
      for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + p.point_name(b[i]);
      s += "}";
    }
    return s + "}";
  };

  run_cases(r, Ns.size() * all.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    const auto N = Ns[i / all.size()];
    const auto& p = all[i % all.size()];
    const auto inv = check_involution_law(p, N);
    sink.expect(inv.ok, [&] {
      return Failure{show(p) + " N=" + std::to_string(N), inv.law + ": " + inv.detail, suite_cli("diagrams", cfg)};
    });
    for (const auto& q : all) {
      if (p.points() + q.points() <= max_points) {
        const auto t = check_tensor_law(p, q, N);
        sink.expect(t.ok, [&] {
          return Failure{"p=" + show(p) + " q=" + show(q) + " N=" + std::to_string(N), t.law + ": " + t.detail,
                         suite_cli("diagrams", cfg)};
        });
      }
      if (q.lower() == p.upper()) {
        const auto c = check_composition_law(p, q, N);
        sink.expect(c.ok, [&] {
          return Failure{"p=" + show(p) + " q=" + show(q) + " N=" + std::to_string(N), c.law + ": " + c.detail,
                         suite_cli("diagrams", cfg)};
        });
      }
    }
  });
  run_cases(r, 10, cfg.jobs, [&](std::size_t i, Sink& sink) {
    const std::size_t k = 1 + i / 5;
    const std::uint64_t N = 1 + i % 5;
    sink.expect(conjugate_equations_check(k, N), [&] {
      return Failure{"k=" + std::to_string(k) + " N=" + std::to_string(N), "snake identity fails",
                     suite_cli("diagrams", cfg)};
    });
  });
  return r;
}

namespace {

SuiteReport gram_cases(const std::string& name, const SuiteConfig& cfg, bool rank_cases) {
  auto r = start(name, cfg);
  const std::size_t max_k = 5, max_shape = 5;
  const std::uint64_t N_lo = 4, N_hi = 8, N_agree = 4;
  if (rank_cases) {
    r.bounds = {{"independence", "NC(0,k), 1 <= k <= " + std::to_string(max_k) + ", N in 4..8"},
                {"N=1", "NC(0,k), 2 <= k <= " + std::to_string(max_k)}};
  } else {
    r.bounds = {{"shapes", "NC(k,l), k + l <= " + std::to_string(max_shape)}, {"N", "1..4"}};
  }

  struct Case {
    std::size_t k, l;
    std::uint64_t N;
  };
  std::vector<Case> cases;
  if (rank_cases) {
    for (std::size_t l = 1; l <= max_k; ++l) {
      for (auto N = N_lo; N <= N_hi; ++N) cases.push_back({0, l, N});
      if (l >= 2) cases.push_back({0, l, 1});
    }
  } else {
    for (std::size_t n = 0; n <= max_shape; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        for (std::uint64_t N = 1; N <= N_agree; ++N) cases.push_back({k, n - k, N});
      }
    }
  }
  run_cases(r, cases.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    const auto& c = cases[i];
    const auto ps = enumerate_nc(c.k, c.l);
    const auto input = "NC(" + std::to_string(c.k) + "," + std::to_string(c.l) + ") N=" + std::to_string(c.N);
    const auto cli = "hplus gram --upper " + std::to_string(c.k) + " --k " + std::to_string(c.l) + " --N " +
                     std::to_string(c.N);
    const auto comb = gram_matrix(ps, c.N, GramBackend::combinatorial);
    if (!rank_cases) {
      const auto direct = gram_matrix(ps, c.N, GramBackend::direct);
      sink.expect(direct.entries == comb.entries, [&] {
        return Failure{input, "direct and combinatorial Gram matrices differ", cli + " --backend direct"};
      });
      return;
    }
    const auto rank = exact_rank(comb.entries);
    const std::size_t want = c.N >= 4 ? ps.size() : 1;
    sink.expect(rank == want, [&] {
      return Failure{input, "rank " + std::to_string(rank) + ", expected " + std::to_string(want), cli};
    });
  });
  return r;
}

}  // namespace

SuiteReport suite_gram_rank(const SuiteConfig& cfg) { return gram_cases("gram-rank", cfg, true); }
SuiteReport suite_gram_backends(const SuiteConfig& cfg) { return gram_cases("gram-backends", cfg, false); }

SuiteReport suite_support_conjugation(const SuiteConfig& cfg) {
  auto r = start("support-conjugation", cfg);
  const Group group = parse_group_spec(cfg.group);
  if (group.order() == std::uint64_t{1}) {
    r.applicable = false;
    r.note = "needs a group with a non-identity element";
    return r;
  }
  const auto alphabet = group.sample_alphabet();
  const auto gens = non_identity(group, alphabet);
  const auto e = group.identity();
  const auto words = words_up_to(alphabet, cfg.max_len);
  r.bounds = {{"words", "all words of length <= " + std::to_string(cfg.max_len) + " over " +
                            (group.is_finite() ? "the group" : "the sample alphabet")},
              {"g0", "every non-identity element"},
              {"t", "1, 3, 5"}};

  std::vector<Word> G1, G2, E1, S;
  for (const auto& w : words) {
    if (in_G1(group, w)) G1.push_back(w);
    if (classify_word(group, w) == Region::G2) G2.push_back(w);
    if (in_E1(group, w)) E1.push_back(w);
    if (!all_identity(group, w)) S.push_back(w);
  }
  const auto alpha_t = [&](const GroupElement& g0, std::size_t t) {
    Word a({g0});
    for (std::size_t i = 0; i < t; ++i) a.letters.push_back(e);
    return a;
  };
  const std::vector<std::size_t> ts{1, 3, 5};

  // (1) S = E_3 ⊔ G_1 on the bounded words.
  run_cases(r, words.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    const auto& w = words[i];
    const auto reg = classify_word(group, w);
    const bool in_S = !all_identity(group, w);
    const bool ok = (in_E1(group, w) != in_G1(group, w)) && (in_S == (reg != Region::E2)) &&
                    (in_S == (reg == Region::E3 || in_G1(group, w)));
    sink.expect(ok, [&] {
      return Failure{"w=" + fmt(group, w), "region bookkeeping inconsistent: " + region_of(group, w),
                     suite_cli("support-conjugation", cfg)};
    });
  });
  // (1) G_2 ∘ E_1 ∩ E_1 = ∅.
  run_cases(r, G2.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    for (const auto& y : E1) {
      for (const auto& w : supp(fuse_basis(group, G2[i], y))) {
        sink.expect(!in_E1(group, w), [&] {
          return Failure{"x=" + fmt(group, G2[i]) + " y=" + fmt(group, y),
                         "product contains " + fmt(group, w) + " in E_1", suite_cli("support-conjugation", cfg)};
        });
      }
    }
  });
  // (1) {α_t} ∘ G_1 pairwise disjoint.
  run_cases(r, gens.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    std::vector<SupportSet> sets;
    for (auto t : ts) {
      sets.push_back(support_product(group, {alpha_t(gens[i], t)}, SupportSet(G1.begin(), G1.end())));
    }
    for (std::size_t a = 0; a < sets.size(); ++a) {
      for (std::size_t b = a + 1; b < sets.size(); ++b) {
        std::vector<Word> common;
        std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(),
                              std::back_inserter(common));
        sink.expect(common.empty(), [&] {
          return Failure{"g0=" + group.format_element(gens[i]) + " t=" + std::to_string(ts[a]) + "," +
                             std::to_string(ts[b]),
                         "{α_t}∘G_1 sets share " + fmt(group, common.front()), suite_cli("support-conjugation", cfg)};
        });
      }
    }
  });
  // (2) {α_t} ∘ G_2 ∘ {ᾱ_t} ⊂ G_2.
  run_cases(r, gens.size() * ts.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    const auto& g0 = gens[i / ts.size()];
    const auto a = alpha_t(g0, ts[i % ts.size()]);
    const auto abar = involute(group, a);
    for (const auto& y : G2) {
      for (const auto& w : triple_support(group, a, y, abar)) {
        sink.expect(classify_word(group, w) == Region::G2, [&] {
          return Failure{"alpha=" + fmt(group, a) + " y=" + fmt(group, y),
                         "summand " + fmt(group, w) + " lies in " + region_of(group, w),
                         suite_cli("support-conjugation", cfg)};
        });
      }
    }
  });
  // (3) α = (g0, e^m), m the longest length in G = S ∩ bounded words.
  std::size_t m = 0;
  for (const auto& w : S) m = std::max(m, w.size());
  r.results.emplace_back("alpha_e_run", std::to_string(m));
  run_cases(r, gens.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    const auto a = alpha_t(gens[i], m);
    const auto abar = involute(group, a);
    for (const auto& y : S) {
      for (const auto& w : triple_support(group, a, y, abar)) {
        sink.expect(classify_word(group, w) == Region::G2, [&] {
          return Failure{"alpha=" + fmt(group, a) + " gamma=" + fmt(group, y),
                         "summand " + fmt(group, w) + " lies in " + region_of(group, w),
                         suite_cli("support-conjugation", cfg)};
        });
      }
    }
  });
  return r;
}

SuiteReport suite_support_separation(const SuiteConfig& cfg) {
  auto r = start("support-separation", cfg);
  const Group group = parse_group_spec(cfg.group);
  if (group.order() == std::uint64_t{1}) {
    r.applicable = false;
    r.note = "needs a group with a non-identity element";
    return r;
  }
  const auto alphabet = group.sample_alphabet();
  const auto gens = non_identity(group, alphabet);
  const auto e = group.identity();
  const auto words = words_up_to(alphabet, cfg.max_len);
  r.bounds = {{"words", "all words of length <= " + std::to_string(cfg.max_len) + " over " +
                            (group.is_finite() ? "the group" : "the sample alphabet")},
              {"g", "every non-identity element"},
              {"i", "2, 4"}};
  std::vector<Word> E3, G1;
  for (const auto& w : words) {
    if (classify_word(group, w) == Region::E3) E3.push_back(w);
    if (in_G1(group, w)) G1.push_back(w);
  }

  // (1) (g) ∘ β ∘ (g^{-1}) ⊂ G_1 for β ∈ E_3.
  run_cases(r, gens.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    const Word g({gens[i]});
    const auto gbar = involute(group, g);
    for (const auto& b : E3) {
      for (const auto& w : triple_support(group, g, b, gbar)) {
        sink.expect(in_G1(group, w), [&] {
          return Failure{"g=" + fmt(group, g) + " beta=" + fmt(group, b),
                         "summand " + fmt(group, w) + " lies in " + region_of(group, w),
                         suite_cli("support-separation", cfg)};
        });
      }
    }
  });
  // (2), (3)
  std::vector<SupportSet> unions(2);
  run_cases(r, 2, cfg.jobs, [&](std::size_t j, Sink& sink) {
    const auto ei = repeat(e, j == 0 ? 2 : 4);
    for (const auto& a : G1) {
      for (const auto& w : triple_support(group, ei, a, ei)) {
        unions[j].insert(w);
        sink.expect(classify_word(group, w) == Region::E3, [&] {
          return Failure{"e^" + std::to_string(ei.size()) + " alpha=" + fmt(group, a),
                         "summand " + fmt(group, w) + " lies in " + region_of(group, w),
                         suite_cli("support-separation", cfg)};
        });
      }
    }
  });
  run_cases(r, 1, 1, [&](std::size_t, Sink& sink) {
    std::vector<Word> common;
    std::set_intersection(unions[0].begin(), unions[0].end(), unions[1].begin(), unions[1].end(),
                          std::back_inserter(common));
    sink.expect(common.empty(), [&] {
      return Failure{"e^2 vs e^4", "both contain " + fmt(group, common.front()), suite_cli("support-separation", cfg)};
    });
  });
  return r;
}

SuiteReport suite_decay(const SuiteConfig& cfg) {
  auto r = start("decay", cfg);
  const Group group = parse_group_spec(cfg.group);
  if (!group.is_finite()) throw InvalidArgument("decay suite needs a finite group; got " + cfg.group);
  const std::uint64_t N = cfg.Ns.empty() ? 5 : cfg.Ns.front();
  const double x = cfg.x;
  const double tol = 1e-9;
  const std::uint64_t monotone_to = 12, search_to = 4000;
  const double epsilon = 1e-3;
  r.bounds = {{"N", std::to_string(N)},
              {"x", [&] { std::ostringstream os; os << x; return os.str(); }()},
              {"strictly_decreasing", "R = 2.." + std::to_string(monotone_to)},
              {"epsilon", "1e-3"},
              {"brute_force_shells", "R with |Γ|^{R/2} <= 4096"}};
  const auto e = group.identity();
  const auto gens = non_identity(group, group.enumerate());
  const auto repro = "hplus multiplier --group " + cfg.group + " --x " + r.bounds[1].second + " --N " +
                     std::to_string(N) + " --R-max " + std::to_string(monotone_to);

  run_cases(r, 1, 1, [&](std::size_t, Sink& sink) {
    const auto near = [&](double got, double want) { return std::fabs(got - want) <= tol * std::fabs(want); };
    for (const auto& g : gens) {
      const double c = multiplier_eigenvalue(group, Word({g}), x, N);
      sink.expect(near(c, x / static_cast<double>(N)), [&] {
        return Failure{"w=[" + group.format_element(g) + "]", "c_x = " + std::to_string(c), repro};
      });
    }
    const double ce = multiplier_eigenvalue(group, Word({e}), x, N);
    const double want_e = (x - 1.0) / (static_cast<double>(N) - 1.0);
    sink.expect(near(ce, want_e), [&] { return Failure{"w=[e]", "c_x = " + std::to_string(ce), repro}; });
    for (const auto& w : ball(group, 6)) {
      const double c = multiplier_eigenvalue(group, w, static_cast<double>(N), N);
      sink.expect(c == 1.0, [&] { return Failure{"w=" + fmt(group, w), "c_N != 1", repro}; });
    }
  });

  if (!(x < static_cast<double>(N))) {
    r.note = "x = N: no decay to check";
    return r;
  }
  const auto profile = decay_profile(group, x, N, monotone_to);
  run_cases(r, 1, 1, [&](std::size_t, Sink& sink) {
    for (std::size_t i = 2; i < profile.size(); ++i) {
      sink.expect(profile[i].max_abs_c < profile[i - 1].max_abs_c, [&] {
        return Failure{"R=" + std::to_string(profile[i].R),
                       "shell max " + std::to_string(profile[i].max_abs_c) + " not below R=" +
                           std::to_string(profile[i - 1].R),
                       repro};
      });
    }
  });
  for (const auto& row : profile) {
    std::ostringstream os;
    os.precision(12);
    os << row.max_abs_c;
    r.results.emplace_back("shell_max_R" + std::to_string(row.R), os.str());
  }

  // Brute force over the ball as an independent check of the shell maxima.
  const auto order = *group.order();
  std::uint64_t bf_R = 0;
  for (std::uint64_t size = 1; bf_R + 2 <= 2 * monotone_to && size * order <= 4096; size *= order) bf_R += 2;
  const auto words = ball(group, bf_R);
  const auto long_profile = decay_profile(group, x, N, bf_R);
  run_cases(r, 1, 1, [&](std::size_t, Sink& sink) {
    std::map<std::uint64_t, std::pair<std::uint64_t, double>> shells;
    for (const auto& w : words) {
      auto& s = shells[L_length(group, w)];
      s.first += 1;
      s.second = std::max(s.second, std::fabs(multiplier_eigenvalue(group, w, x, N)));
    }
    for (const auto& row : long_profile) {
      const auto& s = shells[row.R];
      sink.expect(row.shell_size == static_cast<unsigned long>(s.first) &&
                      std::fabs(row.max_abs_c - s.second) <= tol * s.second,
                  [&] {
                    return Failure{"R=" + std::to_string(row.R),
                                   "profile " + std::to_string(row.max_abs_c) + " vs brute force " +
                                       std::to_string(s.second),
                                   repro};
                  });
    }
  });

  const auto search = decay_profile(group, x, N, search_to);
  std::uint64_t first_below = 0;
  for (const auto& row : search) {
    if (row.R > 0 && row.max_abs_c < epsilon) {
      first_below = row.R;
      break;
    }
  }
  run_cases(r, 1, 1, [&](std::size_t, Sink& sink) {
    sink.expect(first_below > 0, [&] {
      return Failure{"R <= " + std::to_string(search_to), "shell maxima never drop below 1e-3", repro};
    });
  });
  r.results.emplace_back("first_R_below_epsilon", std::to_string(first_below));
  r.results.emplace_back("brute_force_R_max", std::to_string(bf_R));
  return r;
}

SuiteReport suite_rotation(const SuiteConfig& cfg) {
  auto r = start("rotation", cfg);
  const Group group = parse_group_spec(cfg.group);
  const auto alphabet = group.sample_alphabet();
  std::mt19937_64 rng(cfg.seed);
  struct Case {
    std::size_t k;
    Word labels;
  };
  std::vector<Case> cases;
  bool exhaustive = true;
  for (std::size_t n = 1; n <= cfg.max_points; ++n) {
    std::vector<Word> decorations;
    if (std::pow(static_cast<double>(alphabet.size()), n) <= static_cast<double>(cfg.exhaustive_limit)) {
      decorations = words_of_length(alphabet, n);
    } else {
      exhaustive = false;
      for (std::size_t i = 0; i < cfg.samples; ++i) decorations.push_back(random_word(rng, alphabet, n, n));
    }
    for (std::size_t k = 1; k <= n; ++k) {
      for (const auto& d : decorations) cases.push_back({k, d});
    }
  }
  r.bounds = {{"points", "1 <= k + l <= " + std::to_string(cfg.max_points) + ", k >= 1"},
              {"decorations", exhaustive ? "all" : "all where |alphabet|^(k+l) <= limit, else seeded random"}};

  run_cases(r, cases.size(), cfg.jobs, [&](std::size_t i, Sink& sink) {
    const auto& c = cases[i];
    const std::vector<GroupElement> upper(c.labels.letters.begin(), c.labels.letters.begin() + c.k);
    const std::vector<GroupElement> lower(c.labels.letters.begin() + c.k, c.labels.letters.end());
    std::vector<GroupElement> bent_upper(upper.begin() + 1, upper.end());
    std::vector<GroupElement> bent_lower{group.inv(upper.front())};
    bent_lower.insert(bent_lower.end(), lower.begin(), lower.end());
    const auto a = count_admissible(upper, lower, Flavor::gamma(), group, cfg.max_partition);
    const auto b = count_admissible(bent_upper, bent_lower, Flavor::gamma(), group, cfg.max_partition);
    sink.expect(a == b, [&] {
      return Failure{"upper=" + fmt(group, upper) + " lower=" + fmt(group, lower),
                     "count " + std::to_string(a) + " but bent count " + std::to_string(b),
                     "hplus count --group " + cfg.group + " --upper " + quoted(fmt(group, upper)) + " --lower " +
                         quoted(fmt(group, lower)) + " --flavor nc_gamma"};
    });
  });
  return r;
}

}  // namespace hplus
