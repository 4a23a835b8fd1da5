#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "simplie/core/matrix.hpp"

namespace simplie {

// Polynomial in a fixed alphabet of formal variables v_0 < v_1 < ... with
// vector coefficients. Variable v has parity par[v] (1 = anticommuting,
// 0 = central). A term is (coefficient) * (product of the mask's variables
// in ascending index order); coefficients are ordinary (even) vectors, so
// all signs come from reordering odd variables.
class GrassmannPoly {
public:
    GrassmannPoly(std::vector<int> parities, size_t coeff_dim)
        : par_(std::move(parities)), dim_(coeff_dim) {
        if (par_.size() > 31) throw std::logic_error("grassmann: alphabet too large");
        for (int p : par_)
            if (p != 0 && p != 1) throw std::logic_error("grassmann: parity must be 0 or 1");
    }

    int n_vars() const { return (int)par_.size(); }
    size_t coeff_dim() const { return dim_; }
    const std::vector<int>& parities() const { return par_; }
    const std::map<unsigned, Vec>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(unsigned mask, const Vec& c) {
        if (c.size() != dim_) throw std::logic_error("grassmann: coefficient dimension mismatch");
        if (mask >= (1u << n_vars())) throw std::logic_error("grassmann: mask out of range");
        auto it = terms_.find(mask);
        if (it == terms_.end()) {
            if (!vec_is_zero(c)) terms_.emplace(mask, c);
            return;
        }
        it->second = vec_add(it->second, c);
        if (vec_is_zero(it->second)) terms_.erase(it);
    }

    Vec coefficient(unsigned mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? Vec(dim_, Rat(0)) : it->second;
    }

    GrassmannPoly& operator+=(const GrassmannPoly& o) {
        require_same_alphabet(o);
        if (o.dim_ != dim_) throw std::logic_error("grassmann: coefficient dimension mismatch");
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    GrassmannPoly scaled(const Rat& s) const {
        GrassmannPoly r(par_, dim_);
        if (s == 0) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, vec_scale(s, c));
        return r;
    }

    GrassmannPoly negated() const { return scaled(Rat(-1)); }

    // Right multiplication by a single odd variable j: each term's word gains
    // v_j at its end, then v_j moves left past the odd variables of the mask
    // that are greater than j.
    GrassmannPoly mul_var_right(int j) const {
        require_odd(j);
        GrassmannPoly r(par_, dim_);
        for (const auto& [m, c] : terms_) {
            if (m & (1u << j)) continue;
            int crossings = count_odd(m, j + 1, n_vars());
            r.add_term(m | (1u << j), (crossings % 2 == 0) ? c : vec_scale(Rat(-1), c));
        }
        return r;
    }

    // Left derivative with respect to the odd variable i: v_i moves to the
    // front of the word past the odd variables of the mask below i, then is
    // struck; terms without v_i vanish.
    GrassmannPoly derive_left(int i) const {
        require_odd(i);
        GrassmannPoly r(par_, dim_);
        for (const auto& [m, c] : terms_) {
            if (!(m & (1u << i))) continue;
            int crossings = count_odd(m, 0, i);
            r.add_term(m & ~(1u << i), (crossings % 2 == 0) ? c : vec_scale(Rat(-1), c));
        }
        return r;
    }

    // Set variable i to zero: drop every term containing it.
    GrassmannPoly substitute_zero(int i) const {
        GrassmannPoly r(par_, dim_);
        for (const auto& [m, c] : terms_)
            if (!(m & (1u << i))) r.add_term(m, c);
        return r;
    }

    // Relabel variables by a strictly increasing partial map (to[v] = new
    // index, or -1 for variables that must not occur). Order-preserving, so
    // no signs; parities must be carried along by the caller's new alphabet.
    GrassmannPoly rename_vars(const std::vector<int>& to, std::vector<int> new_parities) const {
        if (to.size() != par_.size()) throw std::logic_error("grassmann: rename map size mismatch");
        GrassmannPoly r(std::move(new_parities), dim_);
        for (int v = 0; v < n_vars(); ++v)
            if (to[v] >= 0 && par_[v] != r.par_[(size_t)to[v]])
                throw std::logic_error("grassmann: rename changes parity");
        for (int v = 0; v + 1 < n_vars(); ++v)
            for (int w = v + 1; w < n_vars(); ++w)
                if (to[v] >= 0 && to[w] >= 0 && to[v] >= to[w])
                    throw std::logic_error("grassmann: rename map not increasing");
        for (const auto& [m, c] : terms_) {
            unsigned nm = 0;
            for (int v = 0; v < n_vars(); ++v) {
                if (!(m & (1u << v))) continue;
                if (to[v] < 0) throw std::logic_error("grassmann: rename drops an occurring variable");
                nm |= 1u << to[v];
            }
            r.add_term(nm, c);
        }
        return r;
    }

    // Substitute v_from := v_to (same parity). In-word replacement; the sign
    // counts the odd variables of the mask strictly between the two indices.
    // Terms already containing v_to die when the variables are odd.
    GrassmannPoly identify_vars(int from, int to) const {
        if (from == to) return *this;
        if (par_[(size_t)from] != par_[(size_t)to])
            throw std::logic_error("grassmann: identified variables differ in parity");
        GrassmannPoly r(par_, dim_);
        int lo = std::min(from, to), hi = std::max(from, to);
        for (const auto& [m, c] : terms_) {
            if (!(m & (1u << from))) {
                r.add_term(m, c);
                continue;
            }
            if (m & (1u << to)) {
                if (par_[(size_t)to] == 1) continue;
                throw std::logic_error("grassmann: squared even variable is not representable");
            }
            int crossings = par_[(size_t)from] == 1 ? count_odd(m, lo + 1, hi) : 0;
            unsigned nm = (m & ~(1u << from)) | (1u << to);
            r.add_term(nm, (crossings % 2 == 0) ? c : vec_scale(Rat(-1), c));
        }
        return r;
    }

    GrassmannPoly apply_matrix(const Mat& f) const {
        if (f.cols() != dim_) throw std::logic_error("grassmann: matrix/coefficient mismatch");
        GrassmannPoly r(par_, f.rows());
        for (const auto& [m, c] : terms_) r.add_term(m, f.apply(c));
        return r;
    }

    void require_same_alphabet(const GrassmannPoly& o) const {
        if (o.par_ != par_) throw std::logic_error("grassmann: alphabet mismatch");
    }

    // Odd variables of mask with index in [lo, hi).
    int count_odd(unsigned mask, int lo, int hi) const {
        int k = 0;
        for (int v = lo; v < hi; ++v)
            if ((mask & (1u << v)) && par_[(size_t)v] == 1) ++k;
        return k;
    }

private:
    void require_odd(int v) const {
        if (v < 0 || v >= n_vars()) throw std::logic_error("grassmann: variable out of range");
        if (par_[(size_t)v] != 1) throw std::logic_error("grassmann: variable must be odd");
    }

    std::vector<int> par_;
    size_t dim_;
    std::map<unsigned, Vec> terms_;
};

inline GrassmannPoly operator+(GrassmannPoly a, const GrassmannPoly& b) {
    a += b;
    return a;
}

// Apply a bilinear map to all coefficient pairs of two polynomials over the
// same alphabet, with the Koszul sign of merging the two words: each pair of
// odd variables (u in A's mask, w in B's mask) with u > w contributes -1.
// Masks sharing a variable are dropped: for odd variables the product is
// zero, and terms quadratic in one central marker are never extracted.
inline GrassmannPoly grassmann_combine(const GrassmannPoly& a, const GrassmannPoly& b,
                                       const std::function<Vec(const Vec&, const Vec&)>& bilinear,
                                       size_t out_dim) {
    a.require_same_alphabet(b);
    GrassmannPoly r(a.parities(), out_dim);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            Vec v = bilinear(ca, cb);
            if (v.size() != out_dim) throw std::logic_error("grassmann: bilinear output dimension mismatch");
            if (vec_is_zero(v)) continue;
            int inv = 0;
            for (int u = 0; u < a.n_vars(); ++u) {
                if (!(ma & (1u << u)) || a.parities()[(size_t)u] != 1) continue;
                inv += r.count_odd(mb, 0, u);
            }
            r.add_term(ma | mb, (inv % 2 == 0) ? v : vec_scale(Rat(-1), v));
        }
    }
    return r;
}

}  // namespace simplie
