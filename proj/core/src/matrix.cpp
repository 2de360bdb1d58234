#include "cohiggs/matrix.hpp"

#include "cohiggs/errors.hpp"

namespace cohiggs {

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) : rows_(rows.size()), cols_(0) {
    for (const auto& r : rows) cols_ = std::max(cols_, r.size());
    e_.assign(rows_ * cols_, Rat(0));
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (const auto& v : r) at(i, j++) = v;
        ++i;
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::fromRows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw Error("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rat> Mat::row(std::size_t i) const {
    return std::vector<Rat>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
    Mat p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a.isZero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += a * o.at(k, j);
        }
    return p;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum dimension mismatch");
    Mat s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + o.e_[i];
    return s;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference dimension mismatch");
    Mat s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] - o.e_[i];
    return s;
}

Mat Mat::operator*(const Rat& c) const {
    Mat s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] * c;
    return s;
}

std::vector<Rat> Mat::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw Error("matrix apply dimension mismatch");
    std::vector<Rat> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).isZero()) out[i] += at(i, j) * v[j];
    return out;
}

bool Mat::isZero() const {
    for (const auto& v : e_)
        if (!v.isZero()) return false;
    return true;
}

void Mat::appendRow(const std::vector<Rat>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw Error("appendRow width mismatch");
    e_.insert(e_.end(), r.begin(), r.end());
    ++rows_;
}

Mat rref(const Mat& m, std::vector<std::size_t>& pivots) {
    Mat a = m;
    pivots.clear();
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t sel = r;
        while (sel < a.rows() && a.at(sel, c).isZero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(r, j));
        Rat inv = a.at(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).isZero()) continue;
            Rat f = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Mat out(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    return out;
}

Mat rref(const Mat& m) {
    std::vector<std::size_t> pivots;
    return rref(m, pivots);
}

std::size_t rank(const Mat& m) { return rref(m).rows(); }

Rat trace(const Mat& m) {
    if (m.rows() != m.cols()) throw Error("trace of non-square matrix");
    Rat t;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

Rat det2x2(const Mat& m) {
    if (m.rows() != 2 || m.cols() != 2) throw Error("det2x2 expects a 2x2 matrix");
    return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
}

std::vector<Rat> addVec(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw Error("vector sum dimension mismatch");
    std::vector<Rat> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

std::vector<Rat> scaleVec(const std::vector<Rat>& v, const Rat& c) {
    std::vector<Rat> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
    return out;
}

}  // namespace cohiggs
