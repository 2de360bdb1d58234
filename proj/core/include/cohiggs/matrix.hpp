#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cohiggs/rational.hpp"

namespace cohiggs {

/// Dense matrix over the rationals, row-major.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<Rat>> rows);

    static Mat identity(std::size_t n);
    static Mat fromRows(const std::vector<std::vector<Rat>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Rat> row(std::size_t i) const;
    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Rat& c) const;
    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    bool operator==(const Mat& o) const = default;
    bool isZero() const;

    void appendRow(const std::vector<Rat>& r);

private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

/// Unique reduced row echelon form with zero rows removed.
Mat rref(const Mat& m);

/// Like rref but also reports the pivot column of each returned row.
Mat rref(const Mat& m, std::vector<std::size_t>& pivots);

std::size_t rank(const Mat& m);

/// Trace of a square matrix.
Rat trace(const Mat& m);

Rat det2x2(const Mat& m);

std::vector<Rat> addVec(const std::vector<Rat>& a, const std::vector<Rat>& b);
std::vector<Rat> scaleVec(const std::vector<Rat>& v, const Rat& c);

}  // namespace cohiggs
