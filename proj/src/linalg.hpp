#ifndef ADEND_LINALG_HPP
#define ADEND_LINALG_HPP

#include "rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace adend {

using Vec = std::vector<Rational>;

// Dense matrix over the rationals.  Columns of a linear map are the images
// of the domain basis vectors.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Rational> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    bool is_zero() const {
        for (const auto& x : a)
            if (x != 0) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }
};

inline Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw Error("matrix shape mismatch in +");
    Mat z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

inline Mat operator-(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw Error("matrix shape mismatch in -");
    Mat z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

inline Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw Error("matrix shape mismatch in *");
    Mat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Rational& xik = x.at(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

inline Mat operator*(const Rational& s, const Mat& x) {
    Mat z = x;
    for (auto& v : z.a) v *= s;
    return z;
}

inline Vec operator*(const Mat& m, const Vec& v) {
    if (m.cols != v.size()) throw Error("matrix/vector shape mismatch");
    Vec w(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) w[i] += m.at(i, j) * v[j];
    return w;
}

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Row echelon rank, destructive on a copy.
inline std::size_t rank(Mat m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m.at(p, c) == 0) ++p;
        if (p == m.rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

inline Rational det(Mat m) {
    if (m.rows != m.cols) throw Error("determinant of non-square matrix");
    Rational d = 1;
    for (std::size_t c = 0; c < m.cols; ++c) {
        std::size_t p = c;
        while (p < m.rows && m.at(p, c) == 0) ++p;
        if (p == m.rows) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Rational inv = Rational(1) / m.at(c, c);
        for (std::size_t i = c + 1; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            Rational f = m.at(i, c) * inv;
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

inline std::optional<Mat> inverse(const Mat& m) {
    if (m.rows != m.cols) throw Error("inverse of non-square matrix");
    std::size_t n = m.rows;
    Mat w = m, inv = Mat::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w.at(p, c) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w.at(p, j), w.at(c, j));
                std::swap(inv.at(p, j), inv.at(c, j));
            }
        Rational f = Rational(1) / w.at(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            w.at(c, j) *= f;
            inv.at(c, j) *= f;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w.at(i, c) == 0) continue;
            Rational g = w.at(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                w.at(i, j) -= g * w.at(c, j);
                inv.at(i, j) -= g * inv.at(c, j);
            }
        }
    }
    return inv;
}

// Solves A x = b for invertible A.
inline std::optional<Vec> solve(const Mat& A, const Vec& b) {
    auto inv = inverse(A);
    if (!inv) return std::nullopt;
    return *inv * b;
}

} // namespace adend

#endif
