#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "zinbiel/element.hpp"
#include "zinbiel/errors.hpp"

namespace zinbiel {

using ColIndex = std::uint32_t;
// Sorted by column, no zero entries.
using SparseRow = std::vector<std::pair<ColIndex, Scalar>>;

// a + c*b for sparse rows.
SparseRow row_axpy(const SparseRow& a, const Scalar& c, const SparseRow& b);

// Maps the canonical basis of one graded component to column indices. Keys are
// stored sorted by their operator<, which is the canonical term order.
template <typename Key>
class Coordinateizer {
public:
    explicit Coordinateizer(std::vector<Key> keys) : keys_(std::move(keys)) {
        std::sort(keys_.begin(), keys_.end());
        for (std::size_t i = 0; i + 1 < keys_.size(); ++i)
            if (!(keys_[i] < keys_[i + 1]))
                throw ZinError("coordinateizer keys are not distinct");
    }

    std::size_t dimension() const { return keys_.size(); }
    const Key& key(ColIndex i) const { return keys_[i]; }

    ColIndex index_of(const Key& k) const {
        auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
        if (it == keys_.end() || !(*it == k)) throw UnindexedKey("key not in coordinateizer");
        return static_cast<ColIndex>(it - keys_.begin());
    }

    // Terms must be sorted by key with no duplicates (the element invariant),
    // so columns come out ascending.
    SparseRow row(const std::vector<std::pair<Key, Scalar>>& terms) const {
        SparseRow r;
        r.reserve(terms.size());
        for (const auto& [k, c] : terms) r.emplace_back(index_of(k), c);
        return r;
    }

    bool operator==(const Coordinateizer&) const = default;

private:
    std::vector<Key> keys_;
};

SparseRow to_vector(const ZinElement& e, const Coordinateizer<Word>& c);
ZinElement element_from_row(const SparseRow& r, const Coordinateizer<Word>& c);

// Reduced row echelon form over the rationals, one row per pivot column.
// Inserting a vector already in the span leaves the rows unchanged.
class Span {
public:
    explicit Span(std::size_t dimension) : dim_(dimension) {}

    std::size_t dimension() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    // Returns true when the vector enlarged the span.
    bool insert(SparseRow v);
    bool contains(const SparseRow& v) const { return reduce(v).empty(); }
    // Residual of v after elimination by all pivot rows.
    SparseRow reduce(SparseRow v) const;

    // pivot column -> row; RREF is unique, so equality is map equality.
    const std::map<ColIndex, SparseRow>& rows() const { return rows_; }
    bool operator==(const Span&) const = default;

private:
    std::size_t dim_;
    std::map<ColIndex, SparseRow> rows_;
};

// Exact coefficients expressing target over the given vectors, or nullopt.
std::optional<std::vector<Scalar>> solve_in_terms_of(const std::vector<SparseRow>& vectors,
                                                     const SparseRow& target, std::size_t dim);

// Basis of {c : sum_i c_i v_i = 0}, as dense coefficient vectors.
std::vector<std::vector<Scalar>> kernel_of(const std::vector<SparseRow>& vectors,
                                           std::size_t dim);

// Subspace intersection via elimination of the stacked basis [a|a], [b|0].
Span intersect(const Span& a, const Span& b);
Span span_sum(const Span& a, const Span& b);

// One-shot Gaussian elimination on dense rows; the serial version is the
// reference the incremental Span is checked against.
std::size_t dense_rank_serial(std::vector<std::vector<Scalar>> rows);
// Same elimination with the row-update loop parallelized; results identical.
std::size_t dense_rank(std::vector<std::vector<Scalar>> rows);

std::vector<std::vector<Scalar>> densify(const std::vector<SparseRow>& rows, std::size_t dim);

}  // namespace zinbiel
