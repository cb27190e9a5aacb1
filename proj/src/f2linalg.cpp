#include "mwext/f2linalg.hpp"

#include <algorithm>

namespace mwext {
namespace f2 {

Matrix Matrix::from_triplets(std::size_t rows, std::size_t cols,
                             const std::vector<std::pair<std::size_t, std::size_t>>& entries) {
    Matrix m(rows, cols);
    for (auto [i, j] : entries) {
        if (i >= rows || j >= cols)
            throw std::invalid_argument("f2::Matrix::from_triplets: entry out of range");
        if (m.get(i, j))
            throw std::invalid_argument("f2::Matrix::from_triplets: duplicate entry");
        m.set(i, j, true);
    }
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const Vec& r = row_[i];
        for (std::size_t j : r.support())
            t.set(j, i, true);
    }
    return t;
}

namespace {

/* In-place reduced echelon form of a list of vectors; drops zero vectors and
 * sorts by pivot.  The result is the unique canonical basis of the span. */
void rref(std::vector<Vec>& v) {
    std::size_t r = 0;
    /* forward elimination, choosing the smallest available pivot each round */
    for (;;) {
        long best_pivot = -1;
        std::size_t best_row = 0;
        for (std::size_t i = r; i < v.size(); ++i) {
            long p = v[i].leading();
            if (p >= 0 && (best_pivot < 0 || p < best_pivot)) {
                best_pivot = p;
                best_row = i;
            }
        }
        if (best_pivot < 0) break;
        std::swap(v[r], v[best_row]);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (i != r && v[i].get(std::size_t(best_pivot))) v[i] ^= v[r];
        ++r;
    }
    v.resize(r);
}

}  // namespace

Subspace span_of(std::size_t ambient, std::vector<Vec> gens) {
    rref(gens);
    return Subspace{ambient, std::move(gens)};
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient)
        throw std::invalid_argument("f2::sum: ambient mismatch");
    std::vector<Vec> gens = a.basis;
    gens.insert(gens.end(), b.basis.begin(), b.basis.end());
    return span_of(a.ambient, std::move(gens));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient)
        throw std::invalid_argument("f2::intersect: ambient mismatch");
    /* Zassenhaus: row-reduce [A|A; B|0], intersection appears in the right
     * block of rows whose left block is zero. */
    std::size_t n = a.ambient;
    std::vector<Vec> rows;
    rows.reserve(a.dim() + b.dim());
    for (const Vec& v : a.basis) {
        Vec r(2 * n);
        for (std::size_t i : v.support()) { r.set(i, true); r.set(n + i, true); }
        rows.push_back(std::move(r));
    }
    for (const Vec& v : b.basis) {
        Vec r(2 * n);
        for (std::size_t i : v.support()) r.set(i, true);
        rows.push_back(std::move(r));
    }
    rref(rows);
    std::vector<Vec> inter;
    for (const Vec& r : rows) {
        long p = r.leading();
        if (p >= 0 && std::size_t(p) >= n) {
            Vec v(n);
            for (std::size_t i : r.support()) v.set(i - n, true);
            inter.push_back(std::move(v));
        }
    }
    return span_of(n, std::move(inter));
}

RankKernelImage rank_kernel_image(const Matrix& m) {
    RankKernelImage out;
    const std::size_t rows = m.rows(), cols = m.cols();

    /* eliminate on the transpose so columns of m become packed rows */
    Matrix t = m.transposed();  /* cols x rows; row j = column j of m */
    /* track combinations: aug[j] records which original columns sum to t.row(j) */
    std::vector<Vec> work(cols), aug(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        work[j] = t.row(j);
        aug[j] = Vec(cols);
        aug[j].set(j, true);
    }
    std::size_t r = 0;
    for (;;) {
        long best_pivot = -1;
        std::size_t best_row = 0;
        for (std::size_t i = r; i < cols; ++i) {
            long p = work[i].leading();
            if (p >= 0 && (best_pivot < 0 || p < best_pivot)) {
                best_pivot = p;
                best_row = i;
            }
        }
        if (best_pivot < 0) break;
        std::swap(work[r], work[best_row]);
        std::swap(aug[r], aug[best_row]);
        for (std::size_t i = 0; i < cols; ++i) {
            if (i != r && work[i].get(std::size_t(best_pivot))) {
                work[i] ^= work[r];
                aug[i] ^= aug[r];
            }
        }
        ++r;
    }
    out.rank = r;

    std::vector<Vec> img(work.begin(), work.begin() + r);
    out.image = Subspace{rows, std::move(img)};  /* already canonical */

    std::vector<Vec> ker;
    for (std::size_t i = r; i < cols; ++i)
        ker.push_back(aug[i]);
    rref(ker);
    out.kernel = Subspace{cols, std::move(ker)};
    return out;
}

std::size_t rank_of(const Matrix& m) { return rank_kernel_image(m).rank; }
Subspace kernel_of(const Matrix& m) { return rank_kernel_image(m).kernel; }
Subspace image_of(const Matrix& m) { return rank_kernel_image(m).image; }

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("f2::solve: length mismatch");
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix t = m.transposed();
    std::vector<Vec> work(cols), aug(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        work[j] = t.row(j);
        aug[j] = Vec(cols);
        aug[j].set(j, true);
    }
    Vec rhs = b;
    Vec comb(cols);
    std::size_t r = 0;
    for (;;) {
        long best_pivot = -1;
        std::size_t best_row = 0;
        for (std::size_t i = r; i < cols; ++i) {
            long p = work[i].leading();
            if (p >= 0 && (best_pivot < 0 || p < best_pivot)) {
                best_pivot = p;
                best_row = i;
            }
        }
        if (best_pivot < 0) break;
        std::swap(work[r], work[best_row]);
        std::swap(aug[r], aug[best_row]);
        for (std::size_t i = 0; i < cols; ++i) {
            if (i != r && work[i].get(std::size_t(best_pivot))) {
                work[i] ^= work[r];
                aug[i] ^= aug[r];
            }
        }
        if (rhs.get(std::size_t(best_pivot))) {
            rhs ^= work[r];
            comb ^= aug[r];
        }
        ++r;
    }
    (void)rows;
    if (!rhs.is_zero()) return std::nullopt;
    return comb;
}

std::vector<Vec> quotient_basis(const Subspace& z, const Subspace& b) {
    if (z.ambient != b.ambient)
        throw std::invalid_argument("f2::quotient_basis: ambient mismatch");
    if (!z.contains_subspace(b))
        throw std::invalid_argument("f2::quotient_basis: boundaries not contained in cycles");
    std::vector<Vec> reduced;
    reduced.reserve(z.dim());
    for (const Vec& v : z.basis) {
        Vec r = b.reduce(v);
        if (!r.is_zero()) reduced.push_back(std::move(r));
    }
    rref(reduced);
    /* rref may reintroduce nothing at b's pivot columns: reduced vectors all
     * vanish there and xor preserves that, so these stay canonical reps */
    if (reduced.size() != z.dim() - b.dim())
        throw std::logic_error("f2::quotient_basis: dimension accounting failed");
    return reduced;
}

}  // namespace f2
}  // namespace mwext
