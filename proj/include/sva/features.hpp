#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sva::features {

// Code-aware tokenization: identifiers/keywords, numeric literals, string
// literals (single tokens), and maximal operator runs. Comments and
// whitespace are discarded.
std::vector<std::string> tokenize(std::string_view code);

// All contiguous character n-grams of the token with length in
// [min_len, max_len]. Operator/punctuation tokens pass through whole.
std::vector<std::string> subtokens(std::string_view token, std::size_t min_len = 2,
                                   std::size_t max_len = 6);

enum class VocabSource { tokens, subtokens };

struct Vocabulary {
  std::unordered_map<std::string, std::size_t> entries;
  std::vector<std::string> ordered;  // column index -> token
  std::size_t min_document_frequency = 2;
  VocabSource source = VocabSource::tokens;

  std::size_t size() const { return ordered.size(); }
  std::optional<std::size_t> index_of(const std::string& token) const;
};

// Entries are the tokens appearing in at least min_df distinct documents,
// indexed in first-appearance order over the document stream. Train-fold
// documents only; the vocabulary is immutable afterwards.
Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& training_docs,
                            std::size_t min_df = 2,
                            VocabSource source = VocabSource::tokens);

// Sparse vector; indices ascending, values nonzero.
struct FeatureVector {
  std::size_t dimension = 0;
  std::vector<std::pair<std::size_t, double>> nonzeros;

  double at(std::size_t index) const;
};

// Raw in-vocabulary counts; out-of-vocabulary tokens are ignored.
FeatureVector bag_features(const std::vector<std::string>& doc, const Vocabulary& vocab);

struct EmbeddingTable {
  std::size_t dimension = 0;
  std::unordered_map<std::string, std::vector<double>> vectors;
};

// Text format: one line per token, token then `dimension` reals, whitespace
// separated. Throws ValidationError on inconsistent dimensions.
EmbeddingTable load_embedding_table(const std::string& path);

// Arithmetic mean of the vectors of tokens present in the table; absent
// tokens are skipped; no in-table tokens yields the zero vector.
FeatureVector embedding_average(const std::vector<std::string>& tokens,
                                const EmbeddingTable& table);

// Block concatenation: dimension = dim(a) + dim(b), b's indices shifted.
// When expected_part_dim is given, both parts must match it.
FeatureVector concat_features(const FeatureVector& a, const FeatureVector& b,
                              std::optional<std::size_t> expected_part_dim = std::nullopt);

// Tokenize and, for the subtokens source, expand each token into its n-grams.
std::vector<std::string> doc_tokens(std::string_view text, VocabSource source);

// (row, col, value) triplet text for audit.
std::string triplets_text(const std::vector<FeatureVector>& rows);

}  // namespace sva::features
