#include "cohiggs/subspace.hpp"

#include "cohiggs/errors.hpp"

namespace cohiggs {

Subspace Subspace::span(std::size_t ambientDim, const Mat& spanningRows) {
    if (spanningRows.rows() > 0 && spanningRows.cols() != ambientDim)
        throw Error("spanning rows have wrong ambient dimension");
    Subspace s;
    s.ambient_ = ambientDim;
    s.basis_ = spanningRows.rows() ? rref(spanningRows) : Mat(0, ambientDim);
    if (s.basis_.cols() != ambientDim) s.basis_ = Mat(0, ambientDim);
    return s;
}

Subspace Subspace::zero(std::size_t ambientDim) {
    Subspace s;
    s.ambient_ = ambientDim;
    s.basis_ = Mat(0, ambientDim);
    return s;
}

Subspace Subspace::full(std::size_t ambientDim) {
    Subspace s;
    s.ambient_ = ambientDim;
    s.basis_ = Mat::identity(ambientDim);
    return s;
}

Subspace Subspace::kernel(const Mat& m) {
    std::vector<std::size_t> pivots;
    Mat r = rref(m, pivots);
    std::size_t n = m.cols();
    std::vector<bool> isPivot(n, false);
    for (auto p : pivots) isPivot[p] = true;

    Mat rows(0, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (isPivot[j]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[j] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, j);
        rows.appendRow(v);
    }
    return span(n, rows);
}

bool Subspace::contains(const std::vector<Rat>& v) const {
    return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw Error("ambient dimension mismatch");
    for (std::size_t i = 0; i < o.dim(); ++i)
        if (!contains(o.basis_.row(i))) return false;
    return true;
}

std::optional<std::vector<Rat>> Subspace::coordinates(const std::vector<Rat>& v) const {
    if (v.size() != ambient_) throw Error("vector has wrong ambient dimension");
    // Reduce v against the RREF basis; reading coefficients off at pivots.
    std::vector<Rat> rem = v;
    std::vector<Rat> coeffs(dim(), Rat(0));
    for (std::size_t i = 0; i < dim(); ++i) {
        std::size_t p = 0;
        while (p < ambient_ && basis_.at(i, p).isZero()) ++p;
        if (p == ambient_) continue;
        Rat c = rem[p];  // pivot entry is 1
        if (c.isZero()) continue;
        coeffs[i] = c;
        for (std::size_t j = p; j < ambient_; ++j) rem[j] -= c * basis_.at(i, j);
    }
    for (const auto& x : rem)
        if (!x.isZero()) return std::nullopt;
    return coeffs;
}

Subspace Subspace::complement() const {
    if (dim() == 0) return full(ambient_);
    return kernel(basis_);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambientDim() != b.ambientDim()) throw Error("intersect: ambient dimension mismatch");
    // a cap b = (a_perp + b_perp)_perp over Q with the standard bilinear form.
    return sum(a.complement(), b.complement()).complement();
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambientDim() != b.ambientDim()) throw Error("sum: ambient dimension mismatch");
    Mat rows(0, a.ambientDim());
    for (std::size_t i = 0; i < a.dim(); ++i) rows.appendRow(a.basis().row(i));
    for (std::size_t i = 0; i < b.dim(); ++i) rows.appendRow(b.basis().row(i));
    return Subspace::span(a.ambientDim(), rows);
}

}  // namespace cohiggs
