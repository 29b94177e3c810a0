// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "techlens/article.hpp"
#include "techlens/extract.hpp"

namespace techlens {

/// Labeled count matrix of document-level co-occurrences. Row-major storage.
/// When symmetric, row and column labels coincide and the diagonal holds the
/// document frequency of each item.
class CoocMatrix {
public:
    CoocMatrix() = default;

    CoocMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
               bool symmetric)
        : rows_(std::move(row_labels)),
          cols_(std::move(col_labels)),
          counts_(rows_.size() * cols_.size(), 0),
          symmetric_(symmetric) {}

    const std::vector<std::string>& row_labels() const noexcept { return rows_; }
    const std::vector<std::string>& col_labels() const noexcept { return cols_; }
    bool symmetric() const noexcept { return symmetric_; }
    bool empty() const noexcept { return rows_.empty() || cols_.empty(); }

    std::size_t row_count() const noexcept { return rows_.size(); }
    std::size_t col_count() const noexcept { return cols_.size(); }

    std::int64_t at(std::size_t i, std::size_t j) const { return counts_[i * cols_.size() + j]; }
    std::int64_t& cell(std::size_t i, std::size_t j) { return counts_[i * cols_.size() + j]; }

    friend bool operator==(const CoocMatrix&, const CoocMatrix&) = default;

private:
    std::vector<std::string> rows_;
    std::vector<std::string> cols_;
    std::vector<std::int64_t> counts_;
    bool symmetric_ = false;
};

/// Pure per-document item-set function. Results are treated as sets.
using ItemSetFn = std::function<std::vector<std::string>(const Article&)>;

namespace detail {

inline std::vector<std::string> unique_sorted(std::vector<std::string> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

inline CoocMatrix count_cooccurrence(const Corpus& corpus, const ItemSetFn& row_items,
                                     const ItemSetFn& col_items, bool symmetric) {
    std::vector<std::vector<std::string>> row_sets, col_sets;
    row_sets.reserve(corpus.size());
    col_sets.reserve(corpus.size());
    std::set<std::string> row_vocab, col_vocab;
    for (const auto& article : corpus) {
        auto rs = unique_sorted(row_items(article));
        auto cs = symmetric ? rs : unique_sorted(col_items(article));
        row_vocab.insert(rs.begin(), rs.end());
        col_vocab.insert(cs.begin(), cs.end());
        row_sets.push_back(std::move(rs));
        col_sets.push_back(std::move(cs));
    }
    CoocMatrix m({row_vocab.begin(), row_vocab.end()}, {col_vocab.begin(), col_vocab.end()},
                 symmetric);
    std::map<std::string, std::size_t> row_index, col_index;
    for (std::size_t i = 0; i < m.row_labels().size(); ++i) row_index[m.row_labels()[i]] = i;
    for (std::size_t j = 0; j < m.col_labels().size(); ++j) col_index[m.col_labels()[j]] = j;
    for (std::size_t d = 0; d < row_sets.size(); ++d)
        for (const auto& r : row_sets[d])
            for (const auto& c : col_sets[d]) ++m.cell(row_index[r], col_index[c]);
    return m;
}

}  // namespace detail

/// Symmetric document-level co-occurrence: counts[i][j] = number of documents
/// whose item set contains both i and j. Labels sorted lexicographically.
inline CoocMatrix build_cooccurrence(const Corpus& corpus, const ItemSetFn& items) {
    return detail::count_cooccurrence(corpus, items, items, true);
}

/// Bipartite variant over two different per-document item-set functions.
inline CoocMatrix build_cooccurrence(const Corpus& corpus, const ItemSetFn& row_items,
                                     const ItemSetFn& col_items) {
    return detail::count_cooccurrence(corpus, row_items, col_items, false);
}

/// Technologies x Other-tags matrix: rows are canonical terms present per
/// document (any field), columns are tags that do not classify as Tech,
/// minus the stoplist. All-zero rows and columns are dropped.
inline CoocMatrix tech_other_matrix(const Corpus& corpus, const TechDictionary& dict,
                                    const std::set<std::string>& stoplist) {
    ItemSetFn techs = [&dict](const Article& a) { return document_tech_set(a, dict); };
    ItemSetFn others = [&dict, &stoplist](const Article& a) {
        std::vector<std::string> out;
        for (const auto& tag : a.tags)
            if (!dict.classify(tag) && !stoplist.count(tag)) out.push_back(tag);
        return out;
    };
    CoocMatrix full = build_cooccurrence(corpus, techs, others);

    std::vector<std::size_t> keep_rows, keep_cols;
    for (std::size_t i = 0; i < full.row_count(); ++i)
        for (std::size_t j = 0; j < full.col_count(); ++j)
            if (full.at(i, j) > 0) {
                keep_rows.push_back(i);
                break;
            }
    for (std::size_t j = 0; j < full.col_count(); ++j)
        for (std::size_t i = 0; i < full.row_count(); ++i)
            if (full.at(i, j) > 0) {
                keep_cols.push_back(j);
                break;
            }
    std::vector<std::string> row_labels, col_labels;
    for (auto i : keep_rows) row_labels.push_back(full.row_labels()[i]);
    for (auto j : keep_cols) col_labels.push_back(full.col_labels()[j]);
    CoocMatrix m(std::move(row_labels), std::move(col_labels), false);
    for (std::size_t a = 0; a < keep_rows.size(); ++a)
        for (std::size_t b = 0; b < keep_cols.size(); ++b)
            m.cell(a, b) = full.at(keep_rows[a], keep_cols[b]);
    return m;
}

enum class Axis { row, col };

/// Min-max rescaled matrix. `group_axis` names the axis whose groups were
/// rescaled independently (col: each column spans [0,1] on its own).
struct NormalizedMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<double> values;  // row-major
    Axis group_axis = Axis::col;

    double at(std::size_t i, std::size_t j) const { return values[i * col_labels.size() + j]; }
};

/// Grouped min-max normalization: within each group, v' = (v-min)/(max-min).
/// Degenerate groups (max == min) map to 0.0 when all-zero, else to 1.0 so a
/// sole nonzero value still reads as the group maximum.
inline NormalizedMatrix minmax_normalize_by_group(const CoocMatrix& matrix, Axis group_axis) {
    if (matrix.empty()) throw DomainError("cannot normalize an empty matrix");
    NormalizedMatrix out{matrix.row_labels(), matrix.col_labels(),
                         std::vector<double>(matrix.row_count() * matrix.col_count(), 0.0),
                         group_axis};
    std::size_t groups = group_axis == Axis::col ? matrix.col_count() : matrix.row_count();
    std::size_t members = group_axis == Axis::col ? matrix.row_count() : matrix.col_count();
    for (std::size_t g = 0; g < groups; ++g) {
        std::int64_t lo = 0, hi = 0;
        for (std::size_t k = 0; k < members; ++k) {
            std::int64_t v = group_axis == Axis::col ? matrix.at(k, g) : matrix.at(g, k);
            if (k == 0) {
                lo = hi = v;
            } else {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
        for (std::size_t k = 0; k < members; ++k) {
            std::int64_t v = group_axis == Axis::col ? matrix.at(k, g) : matrix.at(g, k);
            double norm;
            if (hi == lo) {
                norm = hi == 0 ? 0.0 : 1.0;
            } else {
                norm = static_cast<double>(v - lo) / static_cast<double>(hi - lo);
            }
            std::size_t i = group_axis == Axis::col ? k : g;
            std::size_t j = group_axis == Axis::col ? g : k;
            out.values[i * matrix.col_count() + j] = norm;
        }
    }
    return out;
}

/// Document frequency of every item produced by `items` over the corpus.
inline std::map<std::string, std::int64_t> document_frequencies(const Corpus& corpus,
                                                                const ItemSetFn& items) {
    std::map<std::string, std::int64_t> freq;
    for (const auto& article : corpus)
        for (const auto& item : detail::unique_sorted(items(article))) ++freq[item];
    return freq;
}

}  // namespace techlens
