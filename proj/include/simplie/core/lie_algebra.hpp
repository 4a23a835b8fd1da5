#pragma once

#include <string>
#include <vector>

#include "simplie/core/matrix.hpp"
#include "simplie/core/report.hpp"

namespace simplie {

// Finite-dimensional Lie algebra over Q given by structure constants:
// [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlgebra {
public:
    LieAlgebra() : dim_(0) {}

    // Validates antisymmetry and the Jacobi identity; throws ValidationError
    // with per-triple witnesses if either fails.
    LieAlgebra(size_t dim, Vec structure_constants) : dim_(dim), c_(std::move(structure_constants)) {
        if (c_.size() != dim_ * dim_ * dim_)
            throw InputError("structure constant array has wrong size");
        Report r = validate();
        if (!r.ok()) throw ValidationError(std::move(r));
    }

    static LieAlgebra abelian(size_t dim) { return LieAlgebra(dim, Vec(dim * dim * dim, Rat(0))); }

    size_t dim() const { return dim_; }

    const Rat& c(size_t i, size_t j, size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
    const Vec& structure_constants() const { return c_; }

    Vec bracket_basis(size_t i, size_t j) const {
        Vec r(dim_, Rat(0));
        for (size_t k = 0; k < dim_; ++k) r[k] = c(i, j, k);
        return r;
    }

    Vec bracket(const Vec& x, const Vec& y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw std::invalid_argument("LieAlgebra::bracket: dimension mismatch");
        Vec r(dim_, Rat(0));
        for (size_t i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < dim_; ++j) {
                if (y[j] == 0) continue;
                Rat f = x[i] * y[j];
                for (size_t k = 0; k < dim_; ++k)
                    if (c(i, j, k) != 0) r[k] += f * c(i, j, k);
            }
        }
        return r;
    }

    Mat ad(const Vec& x) const {
        Mat m(dim_, dim_);
        for (size_t j = 0; j < dim_; ++j) {
            Vec e(dim_, Rat(0));
            e[j] = 1;
            Vec b = bracket(x, e);
            for (size_t k = 0; k < dim_; ++k) m(k, j) = b[k];
        }
        return m;
    }

    Report validate() const {
        Report rep;
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = i; j < dim_; ++j)
                for (size_t k = 0; k < dim_; ++k)
                    if (c(i, j, k) + c(j, i, k) != 0)
                        rep.add("antisymmetry", {(long)i, (long)j, (long)k},
                                "c(i,j,k) + c(j,i,k) = " + rational_to_string(c(i, j, k) + c(j, i, k)));
        if (!rep.ok()) return rep;  // Jacobi symmetry reduction below needs antisymmetry
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = i + 1; j < dim_; ++j)
                for (size_t k = j + 1; k < dim_; ++k) {
                    Vec jac = bracket_of_basis_with(i, bracket_basis(j, k));
                    jac = vec_add(jac, bracket_of_basis_with(j, bracket_basis(k, i)));
                    jac = vec_add(jac, bracket_of_basis_with(k, bracket_basis(i, j)));
                    if (!vec_is_zero(jac))
                        rep.add("jacobi", {(long)i, (long)j, (long)k});
                }
        return rep;
    }

private:
    Vec bracket_of_basis_with(size_t i, const Vec& v) const {
        Vec r(dim_, Rat(0));
        for (size_t j = 0; j < dim_; ++j) {
            if (v[j] == 0) continue;
            for (size_t k = 0; k < dim_; ++k)
                if (c(i, j, k) != 0) r[k] += v[j] * c(i, j, k);
        }
        return r;
    }

    size_t dim_;
    Vec c_;  // (i*dim + j)*dim + k
};

// Does the linear map f (matrix, codomain-dim x domain-dim) satisfy
// f([x,y]_dom) = [f x, f y]_cod on all basis pairs?
inline Report check_lie_morphism(const Mat& f, const LieAlgebra& dom, const LieAlgebra& cod,
                                 const std::string& label = "morphism") {
    Report rep;
    if (f.cols() != dom.dim() || f.rows() != cod.dim()) {
        rep.add(label, {}, "matrix shape does not match domain/codomain dimensions");
        return rep;
    }
    for (size_t i = 0; i < dom.dim(); ++i)
        for (size_t j = i + 1; j < dom.dim(); ++j) {
            Vec lhs = f.apply(dom.bracket_basis(i, j));
            Vec rhs = cod.bracket(f.col(i), f.col(j));
            if (lhs != rhs) rep.add(label, {(long)i, (long)j}, "f[e_i,e_j] != [f e_i, f e_j]");
        }
    return rep;
}

inline bool is_lie_morphism(const Mat& f, const LieAlgebra& dom, const LieAlgebra& cod) {
    return check_lie_morphism(f, dom, cod).ok();
}

}  // namespace simplie
