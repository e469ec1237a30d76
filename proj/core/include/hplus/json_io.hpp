#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hplus/dims.hpp"
#include "hplus/fusion.hpp"
#include "hplus/linmaps.hpp"
#include "hplus/ncpart.hpp"
#include "hplus/verify.hpp"
#include "hplus/words.hpp"

namespace hplus {

using nlohmann::json;

json word_to_json(const Group& group, const Word& w);  // {"letters": [...]}
Word word_from_json(const Group& group, const json& j);

json mprime_to_json(const Group& group, const MPrimeWord& m);  // {"exponents": [...], "letters": [...]}

/// {"terms": [{"word": [...], "mult": "<decimal>"}]}, terms in lexicographic
/// order of their letter sequences.
json fusion_to_json(const Group& group, const FusionElement& a);
std::string fusion_to_csv(const Group& group, const FusionElement& a);

/// {"k": k, "l": l, "blocks": [["U1", "L2"], ...]}
json partition_to_json(const NCPartition& p);
NCPartition partition_from_json(const json& j);

/// {"n": n, "N": N, "rows": [["<decimal>", ...], ...]}
json gram_to_json(const GramMatrix& g);
std::string gram_to_csv(const GramMatrix& g);

/// {"rows": r, "cols": c, "entries": [[row, col, "<rational>"], ...]}
json sparse_to_json(const SparseExactMatrix& m);

/// Wall time is left out on purpose: identical runs give identical bytes.
json report_to_json(const SuiteReport& r);

/// "R,shell_size,max_abs_c" rows.
std::string decay_to_csv(const std::vector<DecayRow>& rows);
json decay_to_json(const std::vector<DecayRow>& rows);

/// "word,L,dim" rows for the given words.
std::string dimension_table_csv(const Group& group, const std::vector<Word>& words, std::uint64_t N);
json dimension_table_json(const Group& group, const std::vector<Word>& words, std::uint64_t N);

/// Shortest decimal form that round-trips the double.
std::string format_double(double v);

}  // namespace hplus
