#pragma once

#include <vector>

#include "cohiggs/matrix.hpp"

namespace cohiggs {

/// Linear subspace of Q^n stored canonically as an RREF basis (no zero rows).
/// Two Subspace values are equal iff they are the same subspace.
class Subspace {
public:
    Subspace() : ambient_(0) {}

    /// Canonicalizes an arbitrary spanning set.
    static Subspace span(std::size_t ambientDim, const Mat& spanningRows);
    static Subspace zero(std::size_t ambientDim);
    static Subspace full(std::size_t ambientDim);
    /// {v : m v = 0}.
    static Subspace kernel(const Mat& m);

    std::size_t ambientDim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    bool isZero() const { return dim() == 0; }
    bool isFull() const { return dim() == ambient_; }

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const Subspace& other) const;

    /// Coordinates of v in the RREF basis; nothing if v is outside.
    std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const;

    /// Rows spanning the orthogonal complement w.r.t. the standard form.
    Subspace complement() const;

    bool operator==(const Subspace& o) const = default;

private:
    std::size_t ambient_;
    Mat basis_;  // RREF, rows = dim
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

}  // namespace cohiggs
