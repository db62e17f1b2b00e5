#include "algebra.hpp"

#include <set>

namespace adend {

const Tensor3& AlgebraSpace::op(const std::string& name) const {
    auto it = ops.find(name);
    if (it == ops.end()) throw Error("unknown operation '" + name + "'");
    return it->second;
}

const Mat& AlgebraSpace::form(const std::string& name) const {
    auto it = forms.find(name);
    if (it == forms.end()) throw Error("unknown form '" + name + "'");
    return it->second;
}

void AlgebraSpace::add_op(const std::string& name, Tensor3 t) {
    if (t.dim != dim) throw Error("tensor shape does not match algebra dimension");
    if (ops.count(name)) throw Error("operation '" + name + "' already exists");
    ops.emplace(name, std::move(t));
}

void AlgebraSpace::validate() const {
    if (basis.size() != dim) throw Error("basis length does not match dim");
    std::set<std::string> seen(basis.begin(), basis.end());
    if (seen.size() != dim) throw Error("basis names are not unique");
    for (const auto& [name, t] : ops)
        if (t.dim != dim || t.c.size() != dim * dim * dim)
            throw Error("op '" + name + "' has wrong tensor shape");
    for (const auto& [name, g] : forms)
        if (g.rows != dim || g.cols != dim)
            throw Error("form '" + name + "' has wrong Gram shape");
}

Vec basis_vector(std::size_t dim, std::size_t i) {
    Vec v(dim);
    v[i] = 1;
    return v;
}

Vec eval_op(const AlgebraSpace& alg, const std::string& op, const Vec& u, const Vec& v) {
    return eval_tensor(alg.op(op), u, v);
}

Mat mult_operator(const AlgebraSpace& alg, const std::string& op, Side side, const Vec& x) {
    if (x.size() != alg.dim) throw Error("vector dimension mismatch");
    const Tensor3& t = alg.op(op);
    Mat m(alg.dim, alg.dim);
    for (std::size_t j = 0; j < alg.dim; ++j) {
        Vec ej = basis_vector(alg.dim, j);
        Vec img = side == Side::Left ? eval_tensor(t, x, ej) : eval_tensor(t, ej, x);
        for (std::size_t i = 0; i < alg.dim; ++i) m.at(i, j) = img[i];
    }
    return m;
}

AnnihilatorDims annihilator_dims(const AlgebraSpace& alg, const std::string& op) {
    const Tensor3& t = alg.op(op);
    std::size_t n = alg.dim;
    AnnihilatorDims out;
    if (n == 0) return out;

    // columns of M are vec(L(e_j)) resp. vec(R(e_j)); kernel = annihilator
    Mat left(n * n, n), right(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t k = 0; k < n; ++k) {
                left.at(p * n + k, j) = t.at(j, p, k);
                right.at(p * n + k, j) = t.at(p, j, k);
            }
    out.left = n - rank(left);
    out.right = n - rank(right);

    Mat prod(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                prod.at(k, i * n + j) = t.at(i, j, k);
    out.product_span = rank(prod);
    return out;
}

} // namespace adend
