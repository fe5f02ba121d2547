#include "zinbiel/linalg.hpp"

namespace zinbiel {

SparseRow row_axpy(const SparseRow& a, const Scalar& c, const SparseRow& b) {
    if (c == 0) return a;
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            Scalar v = a[i].second + c * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseRow to_vector(const ZinElement& e, const Coordinateizer<Word>& c) {
    return c.row(e.terms());
}

ZinElement element_from_row(const SparseRow& r, const Coordinateizer<Word>& c) {
    std::vector<ZinElement::Term> raw;
    raw.reserve(r.size());
    for (const auto& [col, v] : r) raw.emplace_back(c.key(col), v);
    return ZinElement::from_terms(std::move(raw));
}

SparseRow Span::reduce(SparseRow v) const {
    // Entries are scanned left to right; eliminating a pivot can only change
    // columns to its right, so one pass suffices.
    std::size_t i = 0;
    while (i < v.size()) {
        auto it = rows_.find(v[i].first);
        if (it == rows_.end()) {
            ++i;
            continue;
        }
        v = row_axpy(v, -v[i].second, it->second);
    }
    return v;
}

bool Span::insert(SparseRow v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const Scalar lead = v.front().second;
    if (lead != 1)
        for (auto& [col, c] : v) c /= lead;
    const ColIndex pivot = v.front().first;
    for (auto& [pc, row] : rows_) {
        auto it = std::lower_bound(row.begin(), row.end(), pivot,
                                   [](const auto& e, ColIndex c) { return e.first < c; });
        if (it != row.end() && it->first == pivot) row = row_axpy(row, -it->second, v);
    }
    rows_.emplace(pivot, std::move(v));
    return true;
}

namespace {

// Shared scaffolding for the extended eliminations: rows [v_i | e_i] over
// dim + k columns; pivots landing right of dim mark kernel combinations.
Span extended_span(const std::vector<SparseRow>& vectors, std::size_t dim) {
    Span ext(dim + vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        SparseRow r = vectors[i];
        r.emplace_back(static_cast<ColIndex>(dim + i), Scalar(1));
        ext.insert(std::move(r));
    }
    return ext;
}

}  // namespace

std::optional<std::vector<Scalar>> solve_in_terms_of(const std::vector<SparseRow>& vectors,
                                                     const SparseRow& target, std::size_t dim) {
    Span ext = extended_span(vectors, dim);
    SparseRow res = ext.reduce(target);
    std::vector<Scalar> coeffs(vectors.size(), Scalar(0));
    for (const auto& [col, c] : res) {
        if (col < dim) return std::nullopt;  // cannot be eliminated: not in the span
        coeffs[col - dim] = -c;
    }
    return coeffs;
}

std::vector<std::vector<Scalar>> kernel_of(const std::vector<SparseRow>& vectors,
                                           std::size_t dim) {
    Span ext = extended_span(vectors, dim);
    std::vector<std::vector<Scalar>> basis;
    for (const auto& [pivot, row] : ext.rows()) {
        if (pivot < dim) continue;
        std::vector<Scalar> combo(vectors.size(), Scalar(0));
        for (const auto& [col, c] : row) combo[col - dim] = c;
        basis.push_back(std::move(combo));
    }
    return basis;
}

Span intersect(const Span& a, const Span& b) {
    if (a.dimension() != b.dimension())
        throw CoordinateizerMismatch("intersect needs spans over one coordinateizer");
    const std::size_t d = a.dimension();
    Span stacked(2 * d);
    for (const auto& [pivot, row] : a.rows()) {
        SparseRow doubled = row;
        for (const auto& [col, c] : row) doubled.emplace_back(static_cast<ColIndex>(col + d), c);
        stacked.insert(std::move(doubled));
    }
    for (const auto& [pivot, row] : b.rows()) stacked.insert(row);
    Span out(d);
    for (const auto& [pivot, row] : stacked.rows()) {
        if (pivot < d) continue;
        SparseRow shifted;
        shifted.reserve(row.size());
        for (const auto& [col, c] : row) shifted.emplace_back(static_cast<ColIndex>(col - d), c);
        out.insert(std::move(shifted));
    }
    return out;
}

Span span_sum(const Span& a, const Span& b) {
    if (a.dimension() != b.dimension())
        throw CoordinateizerMismatch("span_sum needs spans over one coordinateizer");
    Span out = a;
    for (const auto& [pivot, row] : b.rows()) out.insert(row);
    return out;
}

std::size_t dense_rank_serial(std::vector<std::vector<Scalar>> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const Scalar factor = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        ++r;
    }
    return r;
}

std::size_t dense_rank(std::vector<std::vector<Scalar>> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        // Row updates are independent of one another, so scheduling cannot
        // change the result.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const Scalar factor = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<Scalar>> densify(const std::vector<SparseRow>& rows, std::size_t dim) {
    std::vector<std::vector<Scalar>> out(rows.size(), std::vector<Scalar>(dim, Scalar(0)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [col, c] : rows[i]) out[i][col] = c;
    return out;
}

}  // namespace zinbiel
