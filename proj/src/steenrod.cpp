#include "mwext/steenrod.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mwext {

std::string TriDegree::str() const {
    std::ostringstream os;
    os << "(" << s << "," << f << "," << w << ")";
    return os.str();
}

PresKind pres_kind_from_name(const std::string& name) {
    if (name == "R") return PresKind::RMotivic;
    if (name == "C") return PresKind::CMotivic;
    if (name == "classical") return PresKind::Classical;
    if (name == "toy") return PresKind::ToyB;
    throw std::invalid_argument("unknown presentation name: " + name);
}

std::string pres_kind_name(PresKind k) {
    switch (k) {
        case PresKind::RMotivic: return "R";
        case PresKind::CMotivic: return "C";
        case PresKind::Classical: return "classical";
        case PresKind::ToyB: return "toy";
    }
    return "?";
}

std::string Monomial::str(PresKind kind) const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& g, int e) {
        if (e == 0) return;
        if (!first) os << " ";
        first = false;
        os << g;
        if (e != 1) os << "^" << e;
    };
    bool toy = kind == PresKind::ToyB;
    emit(toy ? "t" : "tau", tau_exp);
    emit("rho", rho_exp);
    for (int i = 0; i < 32; ++i)
        if (tau_mask & (1u << i)) emit("tau" + std::to_string(i), 1);
    for (std::size_t i = 0; i < xi.size(); ++i)
        emit(toy ? "x" : "xi" + std::to_string(i + 1), xi[i]);
    return os.str();
}

void AlgebraElement::add(Monomial m) {
    auto it = std::lower_bound(terms.begin(), terms.end(), m);
    if (it != terms.end() && *it == m)
        terms.erase(it);
    else
        terms.insert(it, std::move(m));
}

void AlgebraElement::add(const AlgebraElement& o) {
    for (const Monomial& m : o.terms) add(m);
}

std::string AlgebraElement::str(PresKind kind) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << " + ";
        os << terms[i].str(kind);
    }
    return os.str();
}

void TensorElement::add(TensorPair p) {
    auto it = std::lower_bound(terms.begin(), terms.end(), p);
    if (it != terms.end() && *it == p)
        terms.erase(it);
    else
        terms.insert(it, std::move(p));
}

void TensorElement::add(const TensorElement& o) {
    for (const TensorPair& p : o.terms) add(p);
}

Presentation Presentation::make(PresKind kind, int weight_budget) {
    return Presentation(kind, weight_budget);
}

Presentation::Presentation(PresKind kind, int budget) : kind_(kind), weight_budget_(budget) {
    switch (kind_) {
        case PresKind::RMotivic:
        case PresKind::CMotivic: {
            /* tau_i has weight 2^i - 1, xi_i weight 2^i - 1; keep every
             * generator whose weight fits in the budget (tau_0 has weight 0
             * and is always present). */
            int i = 0;
            while ((1 << i) - 1 <= budget && i < 30) ++i;
            max_tau_index_ = i - 1;
            max_xi_index_ = i - 1;
            if (max_xi_index_ < 1) max_xi_index_ = 1;
            break;
        }
        case PresKind::Classical: {
            /* xi_i has topological degree 2^i - 1 */
            int i = 1;
            while ((1 << i) - 1 <= budget && i < 30) ++i;
            max_xi_index_ = i - 1;
            if (max_xi_index_ < 1) max_xi_index_ = 1;
            break;
        }
        case PresKind::ToyB:
            max_xi_index_ = 1; /* the single generator x */
            break;
    }
}

Bidegree Presentation::tau_gen_degree(int i) const {
    if (kind_ == PresKind::Classical || kind_ == PresKind::ToyB)
        throw std::logic_error("presentation has no tau_i generators");
    return {(1 << (i + 1)) - 1, (1 << i) - 1};
}

Bidegree Presentation::xi_gen_degree(int i) const {
    switch (kind_) {
        case PresKind::RMotivic:
        case PresKind::CMotivic:
            return {(1 << (i + 1)) - 2, (1 << i) - 1};
        case PresKind::Classical:
            return {(1 << i) - 1, 0};
        case PresKind::ToyB:
            if (i != 1) throw std::logic_error("toy pair has only x");
            return {0, -1};
    }
    return {};
}

Bidegree Presentation::coeff_tau_degree() const {
    switch (kind_) {
        case PresKind::RMotivic:
        case PresKind::CMotivic:
            return {0, -1};
        case PresKind::ToyB:
            return {0, -1};
        case PresKind::Classical:
            throw std::logic_error("classical pair has trivial coefficients");
    }
    return {};
}

Bidegree Presentation::coeff_rho_degree() const {
    if (kind_ != PresKind::RMotivic)
        throw std::logic_error("presentation has no rho");
    return {-1, -1};
}

Bidegree Presentation::degree(const Monomial& m) const {
    Bidegree d{0, 0};
    if (m.tau_exp) {
        Bidegree t = coeff_tau_degree();
        d.t += m.tau_exp * t.t;
        d.w += m.tau_exp * t.w;
    }
    if (m.rho_exp) {
        Bidegree r = coeff_rho_degree();
        d.t += m.rho_exp * r.t;
        d.w += m.rho_exp * r.w;
    }
    for (int i = 0; i < 32; ++i) {
        if (m.tau_mask & (1u << i)) {
            Bidegree g = tau_gen_degree(i);
            d.t += g.t;
            d.w += g.w;
        }
    }
    for (std::size_t i = 0; i < m.xi.size(); ++i) {
        if (m.xi[i]) {
            Bidegree g = xi_gen_degree(int(i) + 1);
            d.t += int(m.xi[i]) * g.t;
            d.w += int(m.xi[i]) * g.w;
        }
    }
    return d;
}

void Presentation::check_monomial_range(const Monomial& m) const {
    if (m.tau_mask >> (max_tau_index_ + 1))
        throw WindowOverflow("tau generator outside derived range");
    if (int(m.xi.size()) > max_xi_index_)
        throw WindowOverflow("xi generator outside derived range");
}

namespace {

/* raw exponent pattern before canonical reduction */
struct RawMono {
    int tau_exp = 0, rho_exp = 0;
    std::vector<int> tau;  /* tau[i] = exponent of tau_i, may exceed 1 */
    std::vector<int> xi;   /* xi[i] = exponent of xi_{i+1} */
};

RawMono raw_from(const Monomial& m) {
    RawMono r;
    r.tau_exp = m.tau_exp;
    r.rho_exp = m.rho_exp;
    for (int i = 0; i < 32; ++i)
        if (m.tau_mask & (1u << i)) {
            if (int(r.tau.size()) <= i) r.tau.resize(i + 1, 0);
            r.tau[i] = 1;
        }
    r.xi.assign(m.xi.begin(), m.xi.end());
    return r;
}

}  // namespace

AlgebraElement Presentation::reduce(const Monomial& m) const {
    check_monomial_range(m);
    Monomial c = m;
    c.trim();
    return AlgebraElement::from(std::move(c));
}

AlgebraElement Presentation::multiply(const Monomial& a, const Monomial& b) const {
    /* multiply exponent patterns, then rewrite tau_i^2 to canonical form;
     * each rewrite strictly lowers the total tau_i-exponent, so this
     * terminates */
    RawMono start = raw_from(a);
    {
        RawMono rb = raw_from(b);
        start.tau_exp += rb.tau_exp;
        start.rho_exp += rb.rho_exp;
        if (start.tau.size() < rb.tau.size()) start.tau.resize(rb.tau.size(), 0);
        for (std::size_t i = 0; i < rb.tau.size(); ++i) start.tau[i] += rb.tau[i];
        if (start.xi.size() < rb.xi.size()) start.xi.resize(rb.xi.size(), 0);
        for (std::size_t i = 0; i < rb.xi.size(); ++i) start.xi[i] += rb.xi[i];
    }

    AlgebraElement out;
    std::vector<RawMono> stack{std::move(start)};
    while (!stack.empty()) {
        RawMono cur = std::move(stack.back());
        stack.pop_back();
        int k = -1;
        for (std::size_t i = 0; i < cur.tau.size(); ++i)
            if (cur.tau[i] >= 2) { k = int(i); break; }
        if (k < 0) {
            Monomial mono;
            mono.tau_exp = cur.tau_exp;
            mono.rho_exp = cur.rho_exp;
            for (std::size_t i = 0; i < cur.tau.size(); ++i)
                if (cur.tau[i]) mono.tau_mask |= 1u << i;
            mono.xi.assign(cur.xi.begin(), cur.xi.end());
            while (!mono.xi.empty() && mono.xi.back() == 0) mono.xi.pop_back();
            check_monomial_range(mono);
            out.add(std::move(mono));
            continue;
        }
        if (kind_ == PresKind::Classical || kind_ == PresKind::ToyB)
            throw std::logic_error("tau_i in a presentation without them");
        /* tau_k^2 = tau xi_{k+1} (+ rho tau_{k+1} + rho tau_0 xi_{k+1} over R) */
        if (std::size_t(k + 1) >= cur.xi.size() + 1 && k + 1 > max_xi_index_)
            throw WindowOverflow("rewriting needs xi outside derived range");
        RawMono t1 = cur;
        t1.tau[k] -= 2;
        t1.tau_exp += 1;
        if (int(t1.xi.size()) < k + 1) t1.xi.resize(k + 1, 0);
        t1.xi[k] += 1; /* xi_{k+1} is stored at index k */
        stack.push_back(std::move(t1));
        if (kind_ == PresKind::RMotivic) {
            if (k + 1 > max_tau_index_)
                throw WindowOverflow("rewriting needs tau outside derived range");
            RawMono t2 = cur;
            t2.tau[k] -= 2;
            t2.rho_exp += 1;
            if (int(t2.tau.size()) < k + 2) t2.tau.resize(k + 2, 0);
            t2.tau[k + 1] += 1;
            stack.push_back(std::move(t2));
            RawMono t3 = cur;
            t3.tau[k] -= 2;
            t3.rho_exp += 1;
            if (t3.tau.empty()) t3.tau.resize(1, 0);
            t3.tau[0] += 1;
            if (int(t3.xi.size()) < k + 1) t3.xi.resize(k + 1, 0);
            t3.xi[k] += 1;
            stack.push_back(std::move(t3));
        }
    }
    return out;
}

AlgebraElement Presentation::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement out;
    for (const Monomial& ma : a.terms)
        for (const Monomial& mb : b.terms)
            out.add(multiply(ma, mb));
    return out;
}

AlgebraElement Presentation::eta_right_coeff(int tau_exp, int rho_exp) const {
    /* eta_R(rho) = rho; eta_R(tau) = tau + rho tau_0 (R), tau (C);
     * eta_R(t) = t + x (toy) */
    AlgebraElement acc;
    {
        Monomial one;
        one.rho_exp = (kind_ == PresKind::RMotivic) ? rho_exp : 0;
        acc.add(one);
    }
    if (kind_ == PresKind::CMotivic || kind_ == PresKind::Classical) {
        Monomial m;
        m.tau_exp = (kind_ == PresKind::CMotivic) ? tau_exp : 0;
        AlgebraElement out;
        out.add(std::move(m));
        return out;
    }
    AlgebraElement image_of_tau;
    if (kind_ == PresKind::RMotivic) {
        Monomial t;
        t.tau_exp = 1;
        image_of_tau.add(t);
        Monomial rt0;
        rt0.rho_exp = 1;
        rt0.tau_mask = 1u;
        image_of_tau.add(rt0);
    } else { /* toy: t + x */
        Monomial t;
        t.tau_exp = 1;
        image_of_tau.add(t);
        Monomial x;
        x.xi = {1};
        image_of_tau.add(x);
    }
    /* acc *= image_of_tau^tau_exp by binary powering */
    AlgebraElement pw = image_of_tau;
    int e = tau_exp;
    while (e > 0) {
        if (e & 1) acc = multiply(acc, pw);
        e >>= 1;
        if (e) pw = multiply(pw, pw);
    }
    return acc;
}

AlgebraElement Presentation::eta_right(const AlgebraElement& coeff) const {
    AlgebraElement out;
    for (const Monomial& m : coeff.terms) {
        if (!m.algebra_free())
            throw std::invalid_argument("eta_right: not a coefficient element");
        out.add(eta_right_coeff(m.tau_exp, m.rho_exp));
    }
    return out;
}

TensorElement Presentation::tensor_multiply(const TensorElement& a, const TensorElement& b) const {
    TensorElement out;
    for (const TensorPair& pa : a.terms)
        for (const TensorPair& pb : b.terms) {
            AlgebraElement left = multiply(pa.first, pb.first);
            AlgebraElement right = multiply(pa.second, pb.second);
            for (const Monomial& l : left.terms)
                for (const Monomial& r : right.terms)
                    out.add({l, r});
        }
    return out;
}

TensorElement Presentation::coproduct(const Monomial& m) const {
    check_monomial_range(m);
    /* ring map: product of the generator coproducts */
    TensorElement acc;
    {
        Monomial one;
        acc.add({one, one});
    }
    auto mul_into = [&](const TensorElement& t) { acc = tensor_multiply(acc, t); };
    auto power = [&](TensorElement base, int e) {
        /* char 2: squaring has no cross terms */
        while (e > 0) {
            if (e & 1) mul_into(base);
            e >>= 1;
            if (e) base = tensor_multiply(base, base);
        }
    };

    if (m.tau_exp) { /* Delta(tau) = tau (x) 1 */
        Monomial t;
        t.tau_exp = m.tau_exp;
        TensorElement e;
        Monomial one;
        e.add({t, one});
        mul_into(e);
    }
    if (m.rho_exp) { /* Delta(rho) = rho (x) 1 */
        Monomial r;
        r.rho_exp = m.rho_exp;
        TensorElement e;
        Monomial one;
        e.add({r, one});
        mul_into(e);
    }
    for (int k = 0; k < 32; ++k) {
        if (!(m.tau_mask & (1u << k))) continue;
        /* Delta(tau_k) = tau_k (x) 1 + sum_i xi_{k-i}^{2^i} (x) tau_i */
        TensorElement e;
        Monomial one;
        Monomial tk;
        tk.tau_mask = 1u << k;
        e.add({tk, one});
        for (int i = 0; i <= k; ++i) {
            Monomial left;
            if (k - i > 0) {
                left.xi.resize(k - i, 0);
                left.xi[k - i - 1] = std::uint16_t(1 << i);
            }
            Monomial right;
            right.tau_mask = 1u << i;
            e.add({left, right});
        }
        mul_into(e);
    }
    for (std::size_t idx = 0; idx < m.xi.size(); ++idx) {
        if (!m.xi[idx]) continue;
        int k = int(idx) + 1;
        TensorElement e;
        if (kind_ == PresKind::ToyB) { /* Delta(x) = x (x) 1 + 1 (x) x */
            Monomial x;
            x.xi = {1};
            Monomial one;
            e.add({x, one});
            e.add({one, x});
        } else {
            /* Delta(xi_k) = sum_{i=0..k} xi_{k-i}^{2^i} (x) xi_i */
            for (int i = 0; i <= k; ++i) {
                Monomial left;
                if (k - i > 0) {
                    left.xi.resize(k - i, 0);
                    left.xi[k - i - 1] = std::uint16_t(1 << i);
                }
                Monomial right;
                if (i > 0) {
                    right.xi.resize(i, 0);
                    right.xi[i - 1] = 1;
                }
                e.add({left, right});
            }
        }
        power(std::move(e), m.xi[idx]);
    }
    return acc;
}

TensorElement Presentation::coproduct(const AlgebraElement& a) const {
    TensorElement out;
    for (const Monomial& m : a.terms) out.add(coproduct(m));
    return out;
}

int Presentation::slot_cost(const Monomial& m) const {
    switch (kind_) {
        case PresKind::RMotivic:
        case PresKind::CMotivic:
            return degree(m).w + m.tau_factor_count();
        case PresKind::Classical:
            return degree(m).t;
        case PresKind::ToyB:
            return m.xi.empty() ? 0 : int(m.xi[0]);
    }
    return 0;
}

const std::vector<Monomial>& Presentation::slot_monomials(int max_cost) const {
    {
        std::lock_guard<std::mutex> lk(*mtx_);
        auto it = slot_cache_.find(max_cost);
        if (it != slot_cache_.end()) return it->second;
    }

    std::vector<Monomial> out;
    if (kind_ == PresKind::ToyB) {
        for (int k = 1; k <= max_cost; ++k) {
            Monomial m;
            m.xi = {std::uint16_t(k)};
            out.push_back(std::move(m));
        }
    } else {
        /* enumerate exponent patterns generator by generator */
        std::vector<std::pair<Bidegree, int>> gens;  /* (degree, id); id<32 tau_i, else xi_{id-32} */
        if (kind_ != PresKind::Classical)
            for (int i = 0; i <= max_tau_index_; ++i) gens.push_back({tau_gen_degree(i), i});
        for (int i = 1; i <= max_xi_index_; ++i) gens.push_back({xi_gen_degree(i), 32 + i});

        Monomial cur;
        std::function<void(std::size_t, int)> rec = [&](std::size_t gi, int cost_left) {
            if (gi == gens.size()) {
                if (!cur.is_one()) {
                    Monomial m = cur;
                    m.trim();
                    out.push_back(std::move(m));
                }
                return;
            }
            auto [deg, id] = gens[gi];
            int unit_cost = (id < 32) ? deg.w + 1 : deg.w;  /* tau_i cost = w+1, xi_i cost = w */
            if (kind_ == PresKind::Classical) unit_cost = deg.t;
            rec(gi + 1, cost_left);
            if (id < 32) {
                if (unit_cost <= cost_left) {
                    cur.tau_mask |= 1u << id;
                    rec(gi + 1, cost_left - unit_cost);
                    cur.tau_mask &= ~(1u << id);
                }
            } else {
                int i = id - 32;
                if (int(cur.xi.size()) < i) cur.xi.resize(i, 0);
                int e = 1;
                while (e * unit_cost <= cost_left) {
                    cur.xi[i - 1] = std::uint16_t(e);
                    rec(gi + 1, cost_left - e * unit_cost);
                    ++e;
                }
                cur.xi[i - 1] = 0;
            }
        };
        rec(0, max_cost);
    }
    std::sort(out.begin(), out.end());
    std::lock_guard<std::mutex> lk(*mtx_);
    return slot_cache_.emplace(max_cost, std::move(out)).first->second;
}

std::vector<Monomial> Presentation::monomial_basis(Bidegree tw) const {
    /* coefficient-free canonical monomials of the exact degree */
    int budget = 0;
    switch (kind_) {
        case PresKind::RMotivic:
        case PresKind::CMotivic:
            /* t = 2w + #tau factors, so cost w + u = w + t - 2w = t - w */
            budget = tw.t - tw.w;
            if (budget < 0) return {};
            if (tw.w > weight_budget_)
                throw WindowOverflow("monomial_basis: weight beyond derived generator range");
            break;
        case PresKind::Classical:
            if (tw.w != 0) return {};
            budget = tw.t;
            if (tw.t > weight_budget_)
                throw WindowOverflow("monomial_basis: degree beyond derived generator range");
            break;
        case PresKind::ToyB:
            budget = -tw.w;
            if (tw.t != 0 || budget < 0) return {};
            break;
    }
    std::vector<Monomial> out;
    if (tw.t == 0 && tw.w == 0) {
        out.push_back(Monomial{});
        return out;
    }
    for (const Monomial& m : slot_monomials(budget)) {
        if (degree(m) == tw) out.push_back(m);
    }
    return out;
}

AlgebraElement Presentation::set_rho_zero(const AlgebraElement& a) {
    AlgebraElement out;
    for (const Monomial& m : a.terms)
        if (m.rho_exp == 0) out.add(m);
    return out;
}

TensorElement Presentation::set_rho_zero(const TensorElement& a) {
    TensorElement out;
    for (const TensorPair& p : a.terms)
        if (p.first.rho_exp == 0 && p.second.rho_exp == 0) out.add(p);
    return out;
}

}  // namespace mwext
