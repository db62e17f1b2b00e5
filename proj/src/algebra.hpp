#ifndef ADEND_ALGEBRA_HPP
#define ADEND_ALGEBRA_HPP

#include "linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace adend {

// Structure-constant tensor: e_i op e_j = sum_k c[i][j][k] e_k.
template <class T>
struct Tensor3T {
    std::size_t dim = 0;
    std::vector<T> c;

    Tensor3T() = default;
    explicit Tensor3T(std::size_t d) : dim(d), c(d * d * d) {}

    T& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * dim + j) * dim + k]; }
    const T& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * dim + j) * dim + k]; }

    bool operator==(const Tensor3T& o) const { return dim == o.dim && c == o.c; }
};

using Tensor3 = Tensor3T<Rational>;

// Finite-dimensional based space over Q with named bilinear operations and
// optional bilinear forms (Gram matrices).
struct AlgebraSpace {
    std::size_t dim = 0;
    std::vector<std::string> basis;           // distinct names, length dim
    std::map<std::string, Tensor3> ops;       // each dim x dim x dim
    std::map<std::string, Mat> forms;         // each dim x dim

    const Tensor3& op(const std::string& name) const;
    bool has_op(const std::string& name) const { return ops.count(name) != 0; }
    const Mat& form(const std::string& name) const;

    void add_op(const std::string& name, Tensor3 t);
    void validate() const; // shapes, unique names
};

enum class Side { Left, Right };

// Bilinear extension of a structure tensor to coordinate vectors.
template <class T>
std::vector<T> eval_tensor(const Tensor3T<T>& t, const std::vector<T>& u, const std::vector<T>& v) {
    if (u.size() != t.dim || v.size() != t.dim) throw Error("vector dimension mismatch");
    std::vector<T> w(t.dim);
    for (std::size_t i = 0; i < t.dim; ++i) {
        if (u[i] == T()) continue;
        for (std::size_t j = 0; j < t.dim; ++j) {
            if (v[j] == T()) continue;
            T uv = u[i] * v[j];
            for (std::size_t k = 0; k < t.dim; ++k) {
                const T& ct = t.at(i, j, k);
                if (!(ct == T())) w[k] += uv * ct;
            }
        }
    }
    return w;
}

Vec eval_op(const AlgebraSpace& alg, const std::string& op, const Vec& u, const Vec& v);

// Matrix of L_op(x) (y -> x op y) or R_op(x) (y -> y op x) in the basis.
Mat mult_operator(const AlgebraSpace& alg, const std::string& op, Side side, const Vec& x);

struct AnnihilatorDims {
    std::size_t left = 0, right = 0, product_span = 0;
    bool operator==(const AnnihilatorDims&) const = default;
};

// Exact kernel/image dimensions: Ann^L, Ann^R and dim(A op A).
AnnihilatorDims annihilator_dims(const AlgebraSpace& alg, const std::string& op);

Vec basis_vector(std::size_t dim, std::size_t i);

} // namespace adend

#endif
