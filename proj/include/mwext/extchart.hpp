#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mwext/cobar.hpp"

namespace mwext {

/* One cohomology class: a tridegree plus an F2 coordinate vector over the
 * canonical representative basis at that tridegree. */
struct ExtClass {
    TriDegree d;
    f2::Vec v;

    bool is_zero() const { return v.is_zero(); }
    bool operator==(const ExtClass& o) const { return d == o.d && v == o.v; }
};

struct TriPiece {
    TriDegree d;
    int dim = 0;
    std::vector<f2::Vec> reps;      /* canonical cocycle vectors, basis coords */
    f2::Subspace cocycles;          /* in basis coords */
    f2::Subspace boundaries;        /* image of the incoming differential */
    std::size_t basis_size = 0;
};

/* Trigraded Ext of one presentation over a window: dimensions, canonical
 * representatives, multiplications, and named classes. */
class ExtChart {
public:
    ExtChart(PresKind kind, Window win, int threads = 1);

    const CobarComplex& complex() const { return *cx_; }
    const Presentation& pres() const { return cx_->pres(); }
    const Window& window() const { return win_; }

    bool in_window(const TriDegree& d) const { return win_.contains(d); }

    /* dimension; tridegrees of negative Milnor-Witt degree are zero without
     * computation (every nonunit slot monomial has (t-1)-w >= 0) */
    int dim(const TriDegree& d) const;
    const TriPiece& piece(const TriDegree& d) const;

    /* class of a cocycle cochain */
    ExtClass class_of(const Cochain& c) const;
    ExtClass class_of_vec(const TriDegree& d, const f2::Vec& cocycle) const;
    /* canonical representative cocycle of a class */
    Cochain rep_of(const ExtClass& c) const;
    f2::Vec rep_vec_of(const ExtClass& c) const;

    ExtClass zero_class(const TriDegree& d) const { return {d, f2::Vec(std::size_t(dim(d)))}; }
    ExtClass basis_class(const TriDegree& d, int i) const;

    ExtClass add(const ExtClass& a, const ExtClass& b) const;
    ExtClass multiply(const ExtClass& a, const ExtClass& b) const;
    ExtClass multiply_pow(const ExtClass& a, int e, const ExtClass& b) const; /* a^e * b */

    /* rho-filtration of a class: the largest k with a representative lying
     * in rho^k . C (for the R-motivic pair) */
    int rho_filtration(const ExtClass& c) const;

    /* order of rho-torsion: least k with rho^k x = 0, or nullopt when x
     * survives every rho power representable in the window */
    std::optional<int> rho_torsion_order(const ExtClass& c) const;
    /* same for tau (C-motivic towers) */
    std::optional<int> tau_torsion_order(const ExtClass& c) const;

    ExtClass coefficient_class(int tau_exp, int rho_exp) const; /* tau^a rho^b in degree (.,0,.) */

    /* every tridegree of the window in a fixed deterministic order */
    const std::vector<TriDegree>& tridegrees() const { return degrees_; }

private:
    void compute(int threads);
    TriPiece compute_piece(const TriDegree& d) const;

    std::shared_ptr<CobarComplex> cx_;
    Window win_;
    std::vector<TriDegree> degrees_;
    std::map<TriDegree, TriPiece> pieces_;
};

/* helpers shared by naming and verification */
ExtClass multiply_all(const ExtChart& chart, const std::vector<ExtClass>& factors);

}  // namespace mwext
