#include "semalign/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace semalign {

namespace {

constexpr double kNormTolerance = 1e-9;

void normalize_rows(Matrix& m, bool strict_nonzero) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        double sq = 0.0;
        for (std::size_t c = 0; c < m.cols(); ++c) sq += m(r, c) * m(r, c);
        const double norm = std::sqrt(sq);
        if (norm < 1e-12) {
            if (strict_nonzero)
                throw ParseError("zero-norm vector for class '" + std::to_string(r) + "'");
            continue;
        }
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) /= norm;
    }
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ClassEmbeddingTable make_table(std::vector<std::string> names, Matrix vectors, bool normalize) {
    if (names.size() != vectors.rows())
        throw ShapeError("make_table: " + std::to_string(names.size()) + " names for " +
                         vectors.shape_str() + " vectors");
    if (vectors.rows() < 2) throw ContractError("make_table: need at least 2 classes");
    if (vectors.cols() < 1) throw ContractError("make_table: need at least 1 dimension");
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw ContractError("make_table: empty class name");
        if (!seen.insert(n).second) throw ContractError("make_table: duplicate name '" + n + "'");
    }
    require_finite(vectors, "make_table");
    if (normalize) {
        for (std::size_t r = 0; r < vectors.rows(); ++r) {
            double sq = 0.0;
            for (std::size_t c = 0; c < vectors.cols(); ++c) sq += vectors(r, c) * vectors(r, c);
            if (std::sqrt(sq) < 1e-12)
                throw ContractError("make_table: zero-norm vector for '" + names[r] + "'");
        }
        normalize_rows(vectors, true);
    }
    return ClassEmbeddingTable{std::move(names), std::move(vectors)};
}

ClassEmbeddingTable load_embeddings(const std::string& path, bool normalize) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open embedding file '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty file", 1);
    std::istringstream header(line);
    long long c_count = 0, dim = 0;
    if (!(header >> c_count >> dim) || c_count < 1 || dim < 1) {
        std::string extra;
        throw ParseError("malformed header, expected 'C D': '" + line + "'", 1);
    }
    {
        std::string extra;
        if (header >> extra) throw ParseError("malformed header, trailing token '" + extra + "'", 1);
    }
    if (c_count < 2) throw ParseError("need at least 2 classes", 1);

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(c_count));
    Matrix vectors(static_cast<std::size_t>(c_count), static_cast<std::size_t>(dim));
    std::unordered_set<std::string> seen;

    for (long long r = 0; r < c_count; ++r) {
        const int line_no = static_cast<int>(r) + 2;
        if (!std::getline(in, line))
            throw ParseError("expected " + std::to_string(c_count) + " rows, file ends after " +
                                 std::to_string(r),
                             line_no);
        std::istringstream row(line);
        std::string name;
        if (!(row >> name)) throw ParseError("missing class name", line_no);
        if (!seen.insert(name).second)
            throw ParseError("duplicate name '" + name + "'", line_no);
        names.push_back(name);
        for (long long c = 0; c < dim; ++c) {
            double v = 0.0;
            if (!(row >> v))
                throw ParseError("expected " + std::to_string(dim) + " values for '" + name +
                                     "', got " + std::to_string(c),
                                 line_no);
            if (!std::isfinite(v))
                throw ParseError("non-finite value for '" + name + "'", line_no);
            vectors(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = v;
        }
        std::string extra;
        if (row >> extra)
            throw ParseError("dimension mismatch for '" + name + "': more than " +
                                 std::to_string(dim) + " values",
                             line_no);
        if (normalize) {
            double sq = 0.0;
            for (long long c = 0; c < dim; ++c) {
                const double v = vectors(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
                sq += v * v;
            }
            if (std::sqrt(sq) < 1e-12)
                throw ParseError("zero-norm vector for '" + name + "'", line_no);
        }
    }
    if (normalize) normalize_rows(vectors, true);
    return make_table(std::move(names), std::move(vectors), /*normalize=*/false);
}

std::string embeddings_text(const ClassEmbeddingTable& table) {
    std::string out = std::to_string(table.num_classes()) + " " + std::to_string(table.dim()) + "\n";
    for (std::size_t r = 0; r < table.num_classes(); ++r) {
        out += table.names[r];
        for (std::size_t c = 0; c < table.dim(); ++c) {
            out += ' ';
            out += format_double(table.vectors(r, c));
        }
        out += '\n';
    }
    return out;
}

void save_embeddings(const ClassEmbeddingTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write embedding file '" + path + "'");
    out << embeddings_text(table);
}

Matrix similarity_matrix(const ClassEmbeddingTable& table) {
    for (std::size_t r = 0; r < table.num_classes(); ++r) {
        double sq = 0.0;
        for (std::size_t c = 0; c < table.dim(); ++c) sq += table.vectors(r, c) * table.vectors(r, c);
        if (std::abs(std::sqrt(sq) - 1.0) > kNormTolerance)
            throw ContractError("similarity_matrix: table row " + std::to_string(r) +
                                " is not unit norm");
    }
    return matmul(table.vectors, transpose(table.vectors));
}

std::vector<std::size_t> topk_similar(const Matrix& sim, std::size_t class_id, std::size_t k) {
    if (sim.rows() != sim.cols()) throw ShapeError("topk_similar: similarity must be square");
    if (class_id >= sim.rows())
        throw ContractError("topk_similar: class_id " + std::to_string(class_id) +
                            " out of range for C=" + std::to_string(sim.rows()));
    std::vector<std::size_t> ids;
    ids.reserve(sim.rows() - 1);
    for (std::size_t j = 0; j < sim.rows(); ++j)
        if (j != class_id) ids.push_back(j);
    // Higher similarity first; equal similarities keep ascending index order.
    std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
        return sim(class_id, a) > sim(class_id, b);
    });
    if (ids.size() > k) ids.resize(k);
    return ids;
}

MarginMatrix margin_matrix(const ClassEmbeddingTable& table, double gamma, std::size_t k) {
    if (gamma < 0.0 || gamma >= 1.0)
        throw ConfigError("margin_matrix: gamma must be in [0,1), got " + std::to_string(gamma));
    const Matrix sim = similarity_matrix(table);
    const std::size_t c = table.num_classes();
    MarginMatrix out{Matrix(c, c), gamma, k};
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j : topk_similar(sim, i, k)) {
            const double cos_ij = sim(i, j);
            if (cos_ij - gamma > 0.0) out.values(i, j) = cos_ij;
        }
    }
    return out;
}

bool ClassPartition::is_novel(std::size_t id) const {
    return std::find(novel_ids.begin(), novel_ids.end(), id) != novel_ids.end();
}

ClassPartition partition_classes(const std::vector<std::string>& names,
                                 const std::vector<std::string>& novel_names) {
    std::unordered_set<std::string> novel_set;
    for (const auto& n : novel_names) {
        if (std::find(names.begin(), names.end(), n) == names.end())
            throw ConfigError("partition_classes: unknown novel class '" + n + "'");
        novel_set.insert(n);
    }
    ClassPartition out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (novel_set.count(names[i]))
            out.novel_ids.push_back(i);
        else
            out.base_ids.push_back(i);
    }
    if (out.base_ids.empty())
        throw ConfigError("partition_classes: base set is empty; base stage needs >= 1 class");
    return out;
}

void apply_margin_mask(MarginMatrix& margins, const ClassPartition& partition, MarginMask mask) {
    if (mask == MarginMask::all) return;
    const std::size_t c = margins.values.rows();
    if (partition.num_classes() != c)
        throw ShapeError("apply_margin_mask: partition covers " +
                         std::to_string(partition.num_classes()) + " classes, margins are " +
                         margins.values.shape_str());
    std::vector<bool> novel(c, false);
    for (std::size_t id : partition.novel_ids) novel[id] = true;
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (!(novel[i] && !novel[j])) margins.values(i, j) = 0.0;
}

}  // namespace semalign
