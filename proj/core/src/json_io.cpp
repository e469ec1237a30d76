#include "hplus/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hplus/error.hpp"

namespace hplus {

json word_to_json(const Group& group, const Word& w) {
  json letters = json::array();
  for (const auto& g : w.letters) letters.push_back(group.format_element(g));
  return json{{"letters", letters}};
}

Word word_from_json(const Group& group, const json& j) {
  if (!j.is_object() || !j.contains("letters") || !j["letters"].is_array()) {
    throw InvalidArgument("word JSON must be {\"letters\": [...]}");
  }
  Word w;
  for (const auto& t : j["letters"]) {
    if (!t.is_string()) throw InvalidArgument("word JSON letters must be strings");
    w.letters.push_back(group.parse_element(t.get<std::string>()));
  }
  return w;
}

json mprime_to_json(const Group& group, const MPrimeWord& m) {
  json letters = json::array();
  for (const auto& g : m.letters) letters.push_back(group.format_element(g));
  return json{{"exponents", m.exponents}, {"letters", letters}};
}

namespace {

std::vector<std::pair<Word, BigInt>> lex_terms(const FusionElement& a) {
  std::vector<std::pair<Word, BigInt>> terms(a.terms().begin(), a.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.first.letters.begin(), x.first.letters.end(), y.first.letters.begin(),
                                        y.first.letters.end());
  });
  return terms;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json fusion_to_json(const Group& group, const FusionElement& a) {
  json terms = json::array();
  for (const auto& [w, c] : lex_terms(a)) {
    terms.push_back(json{{"word", word_to_json(group, w)["letters"]}, {"mult", c.get_str()}});
  }
  return json{{"terms", terms}};
}

std::string fusion_to_csv(const Group& group, const FusionElement& a) {
  std::string out = "word,mult\n";
  for (const auto& [w, c] : lex_terms(a)) out += csv_field(format_word(group, w)) + "," + c.get_str() + "\n";
  return out;
}

json partition_to_json(const NCPartition& p) {
  json blocks = json::array();
  for (const auto& b : p.blocks()) {
    json names = json::array();
    for (auto x : b) names.push_back(p.point_name(x));
    blocks.push_back(names);
  }
  return json{{"k", p.upper()}, {"l", p.lower()}, {"blocks", blocks}};
}

NCPartition partition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("l") || !j.contains("blocks")) {
    throw InvalidArgument("partition JSON needs k, l and blocks");
  }
  const auto k = j["k"].get<std::size_t>();
  const auto l = j["l"].get<std::size_t>();
  std::vector<NCPartition::Block> blocks;
  for (const auto& b : j["blocks"]) {
    NCPartition::Block block;
    for (const auto& t : b) {
      const auto name = t.get<std::string>();
      std::size_t idx = 0;
      const char* first = name.data() + 1;
      const char* last = name.data() + name.size();
      auto [ptr, ec] = std::from_chars(first, last, idx);
      if (name.size() < 2 || ec != std::errc{} || ptr != last || idx == 0 || (name[0] != 'U' && name[0] != 'L')) {
        throw InvalidArgument("bad point token '" + name + "': expected U<i> or L<j>");
      }
      if (name[0] == 'U') {
        if (idx > k) throw InvalidArgument("point " + name + " beyond k = " + std::to_string(k));
        block.push_back(idx - 1);
      } else {
        if (idx > l) throw InvalidArgument("point " + name + " beyond l = " + std::to_string(l));
        block.push_back(k + idx - 1);
      }
    }
    blocks.push_back(std::move(block));
  }
  return NCPartition(k, l, std::move(blocks));
}

json gram_to_json(const GramMatrix& g) {
  json rows = json::array();
  for (const auto& row : g.entries) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    rows.push_back(r);
  }
  return json{{"n", g.size()}, {"N", g.N}, {"rows", rows}};
}

std::string gram_to_csv(const GramMatrix& g) {
  std::string out;
  for (const auto& row : g.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "," : "") + row[j].get_str();
    out += "\n";
  }
  return out;
}

json sparse_to_json(const SparseExactMatrix& m) {
  json entries = json::array();
  for (const auto& [ij, v] : m.entries()) entries.push_back(json::array({ij.first, ij.second, v.get_str()}));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json report_to_json(const SuiteReport& r) {
  const auto fields = [](const SuiteReport::Fields& f) {
    json o = json::array();
    for (const auto& [k, v] : f) o.push_back(json::array({k, v}));
    return o;
  };
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back(json{{"input", f.input}, {"detail", f.detail}, {"repro", f.repro}});
  }
  json out{{"suite", r.suite},
           {"group", r.group},
           {"applicable", r.applicable},
           {"bounds", fields(r.bounds)},
           {"results", fields(r.results)},
           {"cases", r.cases},
           {"failure_count", r.failure_count},
           {"failures", failures},
           {"ok", r.ok()}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string decay_to_csv(const std::vector<DecayRow>& rows) {
  std::string out = "R,shell_size,max_abs_c\n";
  for (const auto& r : rows) {
    out += std::to_string(r.R) + "," + r.shell_size.get_str() + "," + format_double(r.max_abs_c) + "\n";
  }
  return out;
}

json decay_to_json(const std::vector<DecayRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back(json{{"R", r.R}, {"shell_size", r.shell_size.get_str()}, {"max_abs_c", r.max_abs_c}});
  }
  return out;
}

std::string dimension_table_csv(const Group& group, const std::vector<Word>& words, std::uint64_t N) {
  std::string out = "word,L,dim\n";
  for (const auto& w : words) {
    out += csv_field(format_word(group, w)) + "," + std::to_string(L_length(group, w)) + "," +
           dimension(group, w, N).get_str() + "\n";
  }
  return out;
}

json dimension_table_json(const Group& group, const std::vector<Word>& words, std::uint64_t N) {
  json out = json::array();
  for (const auto& w : words) {
    out.push_back(json{{"word", word_to_json(group, w)["letters"]},
                       {"L", L_length(group, w)},
                       {"dim", dimension(group, w, N).get_str()}});
  }
  return out;
}

}  // namespace hplus
