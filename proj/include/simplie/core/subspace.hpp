#pragma once

#include <vector>

#include "simplie/core/matrix.hpp"

namespace simplie {

// Subspace of Q^ambient, stored as the unique reduced-row-echelon basis.
// Two Subspace values are equal iff they are the same subspace.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(size_t ambient) : ambient_(ambient) {}

    static Subspace from_spanning(size_t ambient, const std::vector<Vec>& vectors) {
        Subspace s(ambient);
        if (vectors.empty()) return s;
        Mat m = Mat::from_rows(vectors, ambient);
        m.rref();
        for (size_t i = 0; i < m.rows(); ++i) {
            Vec r = m.row(i);
            if (!vec_is_zero(r)) s.basis_.push_back(std::move(r));
        }
        return s;
    }

    static Subspace full(size_t ambient) {
        std::vector<Vec> rows;
        for (size_t i = 0; i < ambient; ++i) {
            Vec e(ambient, Rat(0));
            e[i] = 1;
            rows.push_back(std::move(e));
        }
        return from_spanning(ambient, rows);
    }

    static Subspace kernel_of(const Mat& m) { return from_spanning(m.cols(), m.kernel_basis()); }

    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const Vec& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
        Vec c;
        return coordinates_of(v, c);
    }

    bool contains(const Subspace& o) const {
        for (const Vec& v : o.basis_)
            if (!contains(v)) return false;
        return true;
    }

    // Coordinates of v in this subspace's basis; false if v is outside.
    bool coordinates_of(const Vec& v, Vec& coords) const {
        if (basis_.empty()) {
            coords.clear();
            return vec_is_zero(v);
        }
        Mat cols = Mat::from_rows(basis_, ambient_).transposed();
        return cols.solve(v, coords);
    }

    Vec from_coordinates(const Vec& coords) const {
        if (coords.size() != basis_.size())
            throw std::invalid_argument("Subspace::from_coordinates: size mismatch");
        Vec v(ambient_, Rat(0));
        for (size_t i = 0; i < coords.size(); ++i)
            if (coords[i] != 0) v = vec_add(v, vec_scale(coords[i], basis_[i]));
        return v;
    }

    Subspace sum(const Subspace& o) const {
        require_same_ambient(o);
        std::vector<Vec> all = basis_;
        all.insert(all.end(), o.basis_.begin(), o.basis_.end());
        return from_spanning(ambient_, all);
    }

    // Zassenhaus-free intersection: v in both spans <=> v = A x = B y; solve
    // [A^T | -B^T] z = 0 and read off the A-part.
    Subspace intersect(const Subspace& o) const {
        require_same_ambient(o);
        if (basis_.empty() || o.basis_.empty()) return Subspace(ambient_);
        size_t da = basis_.size(), db = o.basis_.size();
        Mat m(ambient_, da + db);
        for (size_t j = 0; j < da; ++j)
            for (size_t i = 0; i < ambient_; ++i) m(i, j) = basis_[j][i];
        for (size_t j = 0; j < db; ++j)
            for (size_t i = 0; i < ambient_; ++i) m(i, da + j) = -o.basis_[j][i];
        std::vector<Vec> gens;
        for (const Vec& z : m.kernel_basis()) {
            Vec v(ambient_, Rat(0));
            for (size_t j = 0; j < da; ++j)
                if (z[j] != 0) v = vec_add(v, vec_scale(z[j], basis_[j]));
            gens.push_back(std::move(v));
        }
        return from_spanning(ambient_, gens);
    }

private:
    void require_same_ambient(const Subspace& o) const {
        if (ambient_ != o.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    }

    size_t ambient_;
    std::vector<Vec> basis_;  // RREF rows, zero rows dropped
};

}  // namespace simplie
