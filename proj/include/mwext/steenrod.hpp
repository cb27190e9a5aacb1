#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwext {

/* (stem, filtration, weight).  The Milnor-Witt degree s-w is derived. */
struct TriDegree {
    int s = 0;
    int f = 0;
    int w = 0;

    int mw() const { return s - w; }
    auto operator<=>(const TriDegree&) const = default;

    TriDegree operator+(const TriDegree& o) const { return {s + o.s, f + o.f, w + o.w}; }
    std::string str() const;
};

/* Internal homological bidegree (t, w): topological degree and weight. */
struct Bidegree {
    int t = 0;
    int w = 0;
    auto operator<=>(const Bidegree&) const = default;
    Bidegree operator+(const Bidegree& o) const { return {t + o.t, w + o.w}; }
};

struct WindowOverflow : std::runtime_error {
    explicit WindowOverflow(const std::string& what) : std::runtime_error(what) {}
};

enum class PresKind { RMotivic, CMotivic, Classical, ToyB };

PresKind pres_kind_from_name(const std::string& name);  /* "R","C","classical","toy" */
std::string pres_kind_name(PresKind k);

/* A canonical-form monomial in the dual algebra.
 *
 * Coefficient part: tau_exp, rho_exp (the coefficient-ring content; for the
 * toy pair tau_exp is the exponent of t and rho is unused; for the classical
 * pair both are unused).  Algebra part: tau_mask holds the tau_i with
 * exponent one (bit i), xi[i] is the exponent of xi_{i+1} (x for the toy
 * pair, stored in xi[0]). */
struct Monomial {
    int tau_exp = 0;
    int rho_exp = 0;
    std::uint32_t tau_mask = 0;
    std::vector<std::uint16_t> xi;

    void trim() {
        while (!xi.empty() && xi.back() == 0) xi.pop_back();
    }
    bool is_one() const { return tau_exp == 0 && rho_exp == 0 && tau_mask == 0 && xi.empty(); }
    bool coefficient_free() const { return tau_exp == 0 && rho_exp == 0; }
    bool algebra_free() const { return tau_mask == 0 && xi.empty(); }

    Monomial coefficient_part() const {
        Monomial m;
        m.tau_exp = tau_exp;
        m.rho_exp = rho_exp;
        return m;
    }
    Monomial slot_part() const {
        Monomial m = *this;
        m.tau_exp = 0;
        m.rho_exp = 0;
        return m;
    }

    int tau_factor_count() const { return __builtin_popcount(tau_mask); }

    bool operator==(const Monomial& o) const {
        return tau_exp == o.tau_exp && rho_exp == o.rho_exp && tau_mask == o.tau_mask && xi == o.xi;
    }
    /* fixed total order: (rho, tau, tau_i-exponents, xi-exponents) */
    bool operator<(const Monomial& o) const {
        if (rho_exp != o.rho_exp) return rho_exp < o.rho_exp;
        if (tau_exp != o.tau_exp) return tau_exp < o.tau_exp;
        if (tau_mask != o.tau_mask) return tau_mask < o.tau_mask;
        return xi < o.xi;
    }

    std::string str(PresKind kind) const;
};

/* A sum of distinct monomials; coefficients in F2 are implicit. */
struct AlgebraElement {
    std::vector<Monomial> terms;  /* sorted, no duplicates */

    static AlgebraElement zero() { return {}; }
    static AlgebraElement from(Monomial m) { return AlgebraElement{{std::move(m)}}; }

    bool is_zero() const { return terms.empty(); }
    void add(Monomial m);              /* xor one monomial */
    void add(const AlgebraElement& o); /* xor a sum */
    bool operator==(const AlgebraElement& o) const { return terms == o.terms; }
    std::string str(PresKind kind) const;
};

using TensorPair = std::pair<Monomial, Monomial>;

/* Sum of elementary tensors a (x) b; raw form, no crossing normalization. */
struct TensorElement {
    std::vector<TensorPair> terms;  /* sorted, no duplicates */

    bool is_zero() const { return terms.empty(); }
    void add(TensorPair p);
    void add(const TensorElement& o);
    bool operator==(const TensorElement& o) const { return terms == o.terms; }
};

/* One of the four coefficient-ring / dual-algebra pairs.
 *
 * R-motivic:  M2 = F2[tau,rho],
 *             A  = M2[tau_0,tau_1,...,xi_1,...]/(tau_k^2 = tau xi_{k+1}
 *                  + rho tau_{k+1} + rho tau_0 xi_{k+1}),
 *             eta_R(tau) = tau + rho tau_0.
 * C-motivic:  rho = 0 throughout.
 * classical:  F2 and F2[xi_1, xi_2, ...], weight identically zero.
 * toy-B:      F2[t] and F2[t][x], eta_R(t) = t + x, x primitive.
 */
class Presentation {
public:
    /* weight_budget bounds the generator range needed for the degree window
     * (generator indices are derived, not user-set). */
    static Presentation make(PresKind kind, int weight_budget);

    PresKind kind() const { return kind_; }
    bool has_rho() const { return kind_ == PresKind::RMotivic; }
    bool has_tau_coefficient() const {
        return kind_ == PresKind::RMotivic || kind_ == PresKind::CMotivic || kind_ == PresKind::ToyB;
    }
    int max_tau_index() const { return max_tau_index_; }
    int max_xi_index() const { return max_xi_index_; }

    Bidegree tau_gen_degree(int i) const;  /* tau_i */
    Bidegree xi_gen_degree(int i) const;   /* xi_i, i >= 1 */
    Bidegree coeff_tau_degree() const;     /* tau (or t) */
    Bidegree coeff_rho_degree() const;     /* rho */
    Bidegree degree(const Monomial& m) const;

    /* canonical form of a possibly non-canonical exponent pattern */
    AlgebraElement reduce(const Monomial& m) const;
    AlgebraElement multiply(const Monomial& a, const Monomial& b) const;
    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

    /* right unit on a coefficient monomial tau^a rho^b, canonical form */
    AlgebraElement eta_right_coeff(int tau_exp, int rho_exp) const;
    AlgebraElement eta_right(const AlgebraElement& coeff) const;

    /* coproduct as a ring map, raw tensor form */
    TensorElement coproduct(const Monomial& m) const;
    TensorElement coproduct(const AlgebraElement& a) const;
    TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) const;

    /* complete list of canonical coefficient-free monomials of one (t,w);
     * throws WindowOverflow when the degree needs generators out of range */
    std::vector<Monomial> monomial_basis(Bidegree tw) const;

    /* all canonical coefficient-free monomials m != 1 with slot_cost(m) <= max_cost */
    const std::vector<Monomial>& slot_monomials(int max_cost) const;

    /* enumeration cost of a slot monomial: weight + number of tau_i factors
     * for the motivic pairs, topological degree for the classical pair, the
     * x-exponent for the toy pair.  Always >= 1 on nonunit monomials. */
    int slot_cost(const Monomial& m) const;

    /* drop all terms containing rho (cross-check of the C-motivic maps) */
    static AlgebraElement set_rho_zero(const AlgebraElement& a);
    static TensorElement set_rho_zero(const TensorElement& a);

private:
    Presentation(PresKind kind, int budget);

    void check_monomial_range(const Monomial& m) const;

    PresKind kind_;
    int weight_budget_ = 0;
    int max_tau_index_ = -1; /* largest valid tau index, -1 = none */
    int max_xi_index_ = 0;   /* largest valid xi index, 0 = none */
    mutable std::shared_ptr<std::mutex> mtx_ = std::make_shared<std::mutex>();
    mutable std::map<int, std::vector<Monomial>> slot_cache_;
};

}  // namespace mwext
