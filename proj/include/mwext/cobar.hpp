#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "mwext/f2linalg.hpp"
#include "mwext/steenrod.hpp"

namespace mwext {

/* A left-normalized cobar word c . [x_1 | ... | x_f]: the coefficient c is a
 * coefficient-ring monomial, every slot is a canonical coefficient-free
 * monomial, and in the normalized complex no slot equals 1. */
struct CobarWord {
    Monomial coeff;               /* algebra_free() */
    std::vector<Monomial> slots;  /* coefficient_free() */

    int filtration_rho() const { return coeff.rho_exp; }
    int filtration_x() const {
        int t = 0;
        for (const Monomial& s : slots) t += s.xi.empty() ? 0 : s.xi[0];
        return t;
    }

    bool operator==(const CobarWord& o) const { return coeff == o.coeff && slots == o.slots; }
    bool operator<(const CobarWord& o) const {
        if (slots.size() != o.slots.size()) return slots.size() < o.slots.size();
        if (!(coeff == o.coeff)) return coeff < o.coeff;
        return slots < o.slots;
    }
    std::string str(PresKind kind) const;
};

/* homogeneous F2 sum of cobar words */
struct Cochain {
    std::vector<CobarWord> words;  /* sorted, no duplicates */

    bool is_zero() const { return words.empty(); }
    void add(CobarWord w);
    void add(const Cochain& o);
    bool operator==(const Cochain& o) const { return words == o.words; }
    std::string str(PresKind kind) const;
};

struct Window {
    int s_min = -4;
    int s_max = 14;
    int f_max = 12;
    int mw_min = 0;
    int mw_max = 5;

    bool contains(const TriDegree& d) const {
        return d.s >= s_min && d.s <= s_max && d.f >= 0 && d.f <= f_max && d.mw() >= mw_min &&
               d.mw() <= mw_max;
    }
};

/* The cobar complex of one presentation over a degree window, with cached
 * per-tridegree bases and differentials.  Pure lookups after warm-up; the
 * explicit warm-up step keeps parallel chart construction deterministic. */
class CobarComplex {
public:
    CobarComplex(PresKind kind, Window win);

    const Presentation& pres() const { return pres_; }
    const Window& window() const { return win_; }

    /* left-normalize a raw word: slots may carry coefficient content and
     * units; returns the canonical sum (normalized complex drops unit slots,
     * the unreduced complex keeps them) */
    Cochain normalize(const Monomial& coeff, const std::vector<Monomial>& raw_slots,
                      bool normalized = true) const;

    Cochain differential(const CobarWord& w, bool normalized = true) const;
    Cochain differential(const Cochain& c, bool normalized = true) const;

    /* concatenation product of the differential graded algebra */
    Cochain product(const CobarWord& a, const CobarWord& b, bool normalized = true) const;
    Cochain product(const Cochain& a, const Cochain& b, bool normalized = true) const;

    TriDegree degree_of(const CobarWord& w) const;

    /* complete deterministic basis of the degree piece */
    const std::vector<CobarWord>& basis(const TriDegree& d, bool normalized = true) const;

    /* basis index, or -1 when absent (validates degree in debug paths) */
    long index_of(const TriDegree& d, const CobarWord& w, bool normalized = true) const;

    f2::Vec to_vec(const TriDegree& d, const Cochain& c, bool normalized = true) const;
    Cochain from_vec(const TriDegree& d, const f2::Vec& v, bool normalized = true) const;

    /* matrix of the differential out of degree d: rows indexed by the basis
     * at (s-1, f+1, w), columns by the basis at d */
    const f2::Matrix& differential_matrix(const TriDegree& d, bool normalized = true) const;

    /* same matrix without touching the cache (large one-shot consumers) */
    f2::Matrix build_differential_matrix(const TriDegree& d, bool normalized = true) const;

    static TriDegree differential_target(const TriDegree& d) { return {d.s - 1, d.f + 1, d.w}; }
    static TriDegree differential_source(const TriDegree& d) { return {d.s + 1, d.f - 1, d.w}; }

    /* filtration of a basis word: rho-exponent of the coefficient for the
     * rho-Bockstein, total x-exponent for the toy pair's x-adic filtration */
    int filtration(const CobarWord& w) const;

private:
    std::vector<CobarWord> enumerate_basis(const TriDegree& d, bool normalized) const;

    Presentation pres_;
    Window win_;
    mutable std::mutex mtx_;
    mutable std::map<std::pair<TriDegree, bool>, std::vector<CobarWord>> basis_cache_;
    mutable std::map<std::pair<TriDegree, bool>, f2::Matrix> dmat_cache_;
};

}  // namespace mwext
