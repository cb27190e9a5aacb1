#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mwext {
namespace f2 {

/* Bit-packed vectors and matrices over the field with two elements.
 * Rows are packed into 64-bit words; construction may go through sparse
 * triplets but all elimination runs on packed rows. */

using Word = std::uint64_t;
constexpr std::size_t kWordBits = 64;

class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n) : n_(n), w_((n + kWordBits - 1) / kWordBits, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    void set(std::size_t i, bool v) {
        Word mask = Word(1) << (i % kWordBits);
        if (v)
            w_[i / kWordBits] |= mask;
        else
            w_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) { w_[i / kWordBits] ^= Word(1) << (i % kWordBits); }

    Vec& operator^=(const Vec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k)
            w_[k] ^= o.w_[k];
        return *this;
    }
    friend Vec operator^(Vec a, const Vec& b) { a ^= b; return a; }

    bool is_zero() const {
        for (Word w : w_)
            if (w) return false;
        return true;
    }

    /* index of the first set bit, or -1 */
    long leading() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return long(k * kWordBits + std::size_t(__builtin_ctzll(w_[k])));
        return -1;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (Word w : w_) c += std::size_t(__builtin_popcountll(w));
        return c;
    }

    bool dot(const Vec& o) const {
        Word acc = 0;
        for (std::size_t k = 0; k < w_.size(); ++k)
            acc ^= w_[k] & o.w_[k];
        return __builtin_popcountll(acc) & 1;
    }

    bool operator==(const Vec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator<(const Vec& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return w_ < o.w_;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i)) s.push_back(i);
        return s;
    }

private:
    std::size_t n_ = 0;
    std::vector<Word> w_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, Vec(cols)) {}

    static Matrix from_triplets(std::size_t rows, std::size_t cols,
                                const std::vector<std::pair<std::size_t, std::size_t>>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Vec& row(std::size_t i) const { return row_[i]; }
    Vec& row(std::size_t i) { return row_[i]; }

    bool get(std::size_t i, std::size_t j) const { return row_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { row_[i].set(j, v); }

    /* y = M x, x of length cols */
    Vec apply(const Vec& x) const {
        Vec y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            if (row_[i].dot(x)) y.set(i, true);
        return y;
    }

    /* column j as a vector of length rows */
    Vec col(std::size_t j) const {
        Vec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            if (row_[i].get(j)) c.set(i, true);
        return c;
    }

    Matrix transposed() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Vec> row_;
};

/* A subspace of F2^n held as a canonical reduced-echelon basis (unique
 * representation: pivots strictly increasing, each pivot column zero in
 * every other basis vector). */
struct Subspace {
    std::size_t ambient = 0;
    std::vector<Vec> basis;

    std::size_t dim() const { return basis.size(); }

    /* canonical coset representative: v reduced by all basis pivots */
    Vec reduce(Vec v) const {
        for (const Vec& b : basis) {
            long p = b.leading();
            if (p >= 0 && v.get(std::size_t(p))) v ^= b;
        }
        return v;
    }
    bool contains(const Vec& v) const { return reduce(v).is_zero(); }
    bool contains_subspace(const Subspace& o) const {
        for (const Vec& b : o.basis)
            if (!contains(b)) return false;
        return true;
    }
};

/* reduced echelon closure of arbitrary spanning vectors */
Subspace span_of(std::size_t ambient, std::vector<Vec> gens);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

struct RankKernelImage {
    std::size_t rank = 0;
    Subspace kernel;  /* subspace of F2^cols */
    Subspace image;   /* subspace of F2^rows */
};

RankKernelImage rank_kernel_image(const Matrix& m);
std::size_t rank_of(const Matrix& m);
Subspace kernel_of(const Matrix& m);
Subspace image_of(const Matrix& m);

/* Mx = b; canonical solution with free variables zero, or nullopt when b is
 * not in the image (signals "not a coboundary"). */
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/* Coset representatives of z/b.  Throws std::invalid_argument when b is not
 * contained in z (a broken differential upstream). Representatives are the
 * canonical (pivot-reduced) elements, deterministic in the inputs' span. */
std::vector<Vec> quotient_basis(const Subspace& z, const Subspace& b);

}  // namespace f2
}  // namespace mwext
