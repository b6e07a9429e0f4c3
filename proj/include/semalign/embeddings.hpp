#pragma once

#include <string>
#include <vector>

#include "semalign/matrix.hpp"

namespace semalign {

// Named class-name embedding vectors, one unit-norm row per class.
struct ClassEmbeddingTable {
    std::vector<std::string> names;
    Matrix vectors;  // C x D

    std::size_t num_classes() const { return vectors.rows(); }
    std::size_t dim() const { return vectors.cols(); }
};

// Validates names (unique, non-empty, C >= 2) and row norms; L2-normalizes
// rows when `normalize` is set, otherwise requires rows already unit within
// 1e-9.
ClassEmbeddingTable make_table(std::vector<std::string> names, Matrix vectors,
                               bool normalize = true);

// Text format: header "C D", then C lines "name v1 ... vD", single-space
// separated, LF endings. Parse failures report the offending line number.
ClassEmbeddingTable load_embeddings(const std::string& path, bool normalize = true);

// Inverse of load_embeddings; values printed with 17 significant digits so
// a reload reproduces identical doubles.
void save_embeddings(const ClassEmbeddingTable& table, const std::string& path);
std::string embeddings_text(const ClassEmbeddingTable& table);

// S = T*T^T for a normalized table: symmetric, unit diagonal.
Matrix similarity_matrix(const ClassEmbeddingTable& table);

// Ids of the k classes most similar to class_id, self excluded, ties broken
// by ascending index. Returns fewer than k when C-1 < k.
std::vector<std::size_t> topk_similar(const Matrix& sim, std::size_t class_id, std::size_t k);

// Adaptive margins: m_ij = cos(t_i,t_j) iff j is in the top-k similar set of
// i and cos(t_i,t_j) > gamma, else 0. Not necessarily symmetric.
struct MarginMatrix {
    Matrix values;  // C x C, diagonal 0
    double gamma = 0.5;
    std::size_t k = 3;
};

MarginMatrix margin_matrix(const ClassEmbeddingTable& table, double gamma, std::size_t k);

struct ClassPartition {
    std::vector<std::size_t> base_ids;
    std::vector<std::size_t> novel_ids;

    bool is_novel(std::size_t id) const;
    std::size_t num_classes() const { return base_ids.size() + novel_ids.size(); }
};

// Splits `names` into novel (listed) and base (remainder), preserving order.
// Every novel name must occur in `names`; base must end up non-empty.
ClassPartition partition_classes(const std::vector<std::string>& names,
                                 const std::vector<std::string>& novel_names);

enum class MarginMask {
    all,         // margins between every class pair (default)
    novel_base,  // keep only rows of novel classes, columns of base classes
};

void apply_margin_mask(MarginMatrix& margins, const ClassPartition& partition, MarginMask mask);

}  // namespace semalign
