#include "mwext/cobar.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mwext {

std::string CobarWord::str(PresKind kind) const {
    std::ostringstream os;
    if (!coeff.is_one()) os << coeff.str(kind) << " ";
    os << "[";
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i) os << "|";
        os << slots[i].str(kind);
    }
    os << "]";
    return os.str();
}

void Cochain::add(CobarWord w) {
    auto it = std::lower_bound(words.begin(), words.end(), w);
    if (it != words.end() && *it == w)
        words.erase(it);
    else
        words.insert(it, std::move(w));
}

void Cochain::add(const Cochain& o) {
    for (const CobarWord& w : o.words) add(w);
}

std::string Cochain::str(PresKind kind) const {
    if (words.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) os << " + ";
        os << words[i].str(kind);
    }
    return os.str();
}

CobarComplex::CobarComplex(PresKind kind, Window win)
    : pres_(Presentation::make(kind, win.f_max + std::max(win.mw_max, 1) + 4)), win_(win) {}

Cochain CobarComplex::normalize(const Monomial& coeff, const std::vector<Monomial>& raw_slots,
                                bool normalized) const {
    /* Pull coefficient content leftward, slot by slot.  Crossing a tensor
     * sign turns tau^a rho^b into eta_R(tau^a rho^b) multiplied into the
     * next slot to the left; extraction out of slot 0 is the left unit and
     * is free. */
    struct Branch {
        Monomial coeff;
        std::vector<Monomial> slots;
    };
    std::vector<Branch> branches{{coeff, raw_slots}};
    const int f = int(raw_slots.size());
    for (int i = f - 1; i >= 0; --i) {
        std::vector<Branch> next;
        for (Branch& br : branches) {
            Monomial c = br.slots[i].coefficient_part();
            if (c.is_one()) {
                next.push_back(std::move(br));
                continue;
            }
            Monomial bare = br.slots[i].slot_part();
            if (i == 0) {
                Branch nb = br;
                nb.coeff.tau_exp += c.tau_exp;
                nb.coeff.rho_exp += c.rho_exp;
                nb.slots[0] = bare;
                next.push_back(std::move(nb));
            } else {
                AlgebraElement crossed = pres_.eta_right_coeff(c.tau_exp, c.rho_exp);
                AlgebraElement merged = pres_.multiply(crossed, AlgebraElement::from(br.slots[i - 1]));
                for (const Monomial& t : merged.terms) {
                    Branch nb = br;
                    nb.slots[i - 1] = t;
                    nb.slots[i] = bare;
                    next.push_back(std::move(nb));
                }
            }
        }
        branches = std::move(next);
    }
    Cochain out;
    for (Branch& br : branches) {
        if (normalized) {
            bool degenerate = false;
            for (const Monomial& s : br.slots)
                if (s.is_one()) { degenerate = true; break; }
            if (degenerate) continue;
        }
        CobarWord w;
        w.coeff = br.coeff;
        w.coeff.tau_mask = 0;
        w.coeff.xi.clear();
        w.slots = std::move(br.slots);
        out.add(std::move(w));
    }
    return out;
}

Cochain CobarComplex::differential(const CobarWord& word, bool normalized) const {
    Cochain out;
    const int f = int(word.slots.size());
    if (f == 0) {
        /* d = eta_R + eta_L on the coefficient ring */
        AlgebraElement er = pres_.eta_right_coeff(word.coeff.tau_exp, word.coeff.rho_exp);
        for (const Monomial& t : er.terms)
            out.add(normalize(Monomial{}, {t}, normalized));
        Monomial unit;
        out.add(normalize(word.coeff, {unit}, normalized));
        return out;
    }
    {
        /* front coface: 1 (x) u */
        std::vector<Monomial> raw;
        raw.reserve(f + 1);
        Monomial unit;
        raw.push_back(unit);
        Monomial first = word.slots[0];
        first.tau_exp += word.coeff.tau_exp;
        first.rho_exp += word.coeff.rho_exp;
        raw.push_back(first);
        for (int i = 1; i < f; ++i) raw.push_back(word.slots[i]);
        out.add(normalize(Monomial{}, raw, normalized));
    }
    for (int i = 0; i < f; ++i) {
        /* inner cofaces: coproduct on slot i */
        TensorElement delta = pres_.coproduct(word.slots[i]);
        for (const TensorPair& p : delta.terms) {
            std::vector<Monomial> raw;
            raw.reserve(f + 1);
            for (int j = 0; j < i; ++j) raw.push_back(word.slots[j]);
            raw.push_back(p.first);
            raw.push_back(p.second);
            for (int j = i + 1; j < f; ++j) raw.push_back(word.slots[j]);
            out.add(normalize(word.coeff, raw, normalized));
        }
    }
    {
        /* back coface: u (x) 1 */
        std::vector<Monomial> raw = word.slots;
        raw.push_back(Monomial{});
        out.add(normalize(word.coeff, raw, normalized));
    }
    return out;
}

Cochain CobarComplex::differential(const Cochain& c, bool normalized) const {
    Cochain out;
    for (const CobarWord& w : c.words) out.add(differential(w, normalized));
    return out;
}

Cochain CobarComplex::product(const CobarWord& a, const CobarWord& b, bool normalized) const {
    if (a.slots.empty() && b.slots.empty()) {
        CobarWord w;
        w.coeff.tau_exp = a.coeff.tau_exp + b.coeff.tau_exp;
        w.coeff.rho_exp = a.coeff.rho_exp + b.coeff.rho_exp;
        Cochain out;
        out.add(std::move(w));
        return out;
    }
    if (a.slots.empty()) {
        CobarWord w = b;
        w.coeff.tau_exp += a.coeff.tau_exp;
        w.coeff.rho_exp += a.coeff.rho_exp;
        Cochain out;
        out.add(std::move(w));
        return out;
    }
    std::vector<Monomial> raw = a.slots;
    if (b.slots.empty()) {
        /* right module structure: the coefficient enters through the last slot */
        raw.back().tau_exp += b.coeff.tau_exp;
        raw.back().rho_exp += b.coeff.rho_exp;
    } else {
        Monomial first = b.slots[0];
        first.tau_exp += b.coeff.tau_exp;
        first.rho_exp += b.coeff.rho_exp;
        raw.push_back(first);
        for (std::size_t i = 1; i < b.slots.size(); ++i) raw.push_back(b.slots[i]);
    }
    return normalize(a.coeff, raw, normalized);
}

Cochain CobarComplex::product(const Cochain& a, const Cochain& b, bool normalized) const {
    Cochain out;
    for (const CobarWord& wa : a.words)
        for (const CobarWord& wb : b.words) out.add(product(wa, wb, normalized));
    return out;
}

TriDegree CobarComplex::degree_of(const CobarWord& w) const {
    Bidegree d = pres_.degree(w.coeff);
    for (const Monomial& s : w.slots) {
        Bidegree sd = pres_.degree(s);
        d.t += sd.t;
        d.w += sd.w;
    }
    int f = int(w.slots.size());
    return {d.t - f, f, d.w};
}

int CobarComplex::filtration(const CobarWord& w) const {
    return pres_.kind() == PresKind::ToyB ? w.filtration_x() : w.filtration_rho();
}

std::vector<CobarWord> CobarComplex::enumerate_basis(const TriDegree& d, bool normalized) const {
    std::vector<CobarWord> out;
    const int f = d.f;
    if (f < 0) return out;
    const PresKind kind = pres_.kind();

    if (f == 0) {
        /* coefficient-ring piece */
        switch (kind) {
            case PresKind::RMotivic: {
                int b = -d.s;
                int a = -d.w - b;
                if (b >= 0 && a >= 0) {
                    CobarWord w;
                    w.coeff.tau_exp = a;
                    w.coeff.rho_exp = b;
                    out.push_back(std::move(w));
                }
                break;
            }
            case PresKind::CMotivic:
            case PresKind::ToyB: {
                if (d.s == 0 && d.w <= 0) {
                    CobarWord w;
                    w.coeff.tau_exp = -d.w;
                    out.push_back(std::move(w));
                }
                break;
            }
            case PresKind::Classical:
                if (d.s == 0 && d.w == 0) out.push_back(CobarWord{});
                break;
        }
        return out;
    }

    /* slot enumeration with a per-presentation cost budget; unit slots are
     * admitted only in the unreduced complex */
    int budget = 0;
    switch (kind) {
        case PresKind::RMotivic:
            budget = d.f + d.mw();
            break;
        case PresKind::CMotivic:
            budget = d.f + d.mw();
            break;
        case PresKind::Classical:
            budget = d.s + d.f; /* total topological degree */
            break;
        case PresKind::ToyB:
            budget = -d.w;
            break;
    }
    if (budget < 0) return out;
    if (kind == PresKind::ToyB && d.s + d.f != 0) return out;

    const std::vector<Monomial>& pool = pres_.slot_monomials(budget);
    std::vector<std::pair<int, Bidegree>> cost_deg;
    cost_deg.reserve(pool.size());
    for (const Monomial& m : pool) cost_deg.push_back({pres_.slot_cost(m), pres_.degree(m)});

    std::vector<Monomial> cur;
    cur.resize(std::size_t(f));
    std::function<void(int, int, Bidegree)> rec = [&](int slot, int cost_left, Bidegree acc) {
        if (slot == f) {
            Bidegree total = acc;
            int a = 0, b = 0;
            switch (kind) {
                case PresKind::RMotivic:
                    b = total.t - (d.s + d.f);
                    a = total.w - b - d.w;
                    break;
                case PresKind::CMotivic:
                    if (total.t != d.s + d.f) return;
                    a = total.w - d.w;
                    break;
                case PresKind::Classical:
                    if (total.t != d.s + d.f || total.w != 0 || d.w != 0) return;
                    break;
                case PresKind::ToyB:
                    a = -d.w - (-total.w);
                    break;
            }
            if (a < 0 || b < 0) return;
            CobarWord w;
            w.coeff.tau_exp = a;
            w.coeff.rho_exp = b;
            w.slots = cur;
            out.push_back(std::move(w));
            return;
        }
        int remaining = f - slot - 1;
        int min_later = normalized ? remaining : 0;
        if (!normalized) {
            /* unreduced: unit slots allowed */
            cur[std::size_t(slot)] = Monomial{};
            rec(slot + 1, cost_left, acc);
        }
        for (std::size_t i = 0; i < pool.size(); ++i) {
            int c = cost_deg[i].first;
            if (c > cost_left - min_later) continue;
            cur[std::size_t(slot)] = pool[i];
            Bidegree nd = acc + cost_deg[i].second;
            rec(slot + 1, cost_left - c, nd);
        }
    };
    rec(0, budget, Bidegree{0, 0});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const std::vector<CobarWord>& CobarComplex::basis(const TriDegree& d, bool normalized) const {
    auto key = std::make_pair(d, normalized);
    {
        std::lock_guard<std::mutex> lk(mtx_);
        auto it = basis_cache_.find(key);
        if (it != basis_cache_.end()) return it->second;
    }
    std::vector<CobarWord> b = enumerate_basis(d, normalized);
    std::lock_guard<std::mutex> lk(mtx_);
    return basis_cache_.emplace(key, std::move(b)).first->second;
}

long CobarComplex::index_of(const TriDegree& d, const CobarWord& w, bool normalized) const {
    const std::vector<CobarWord>& b = basis(d, normalized);
    auto it = std::lower_bound(b.begin(), b.end(), w);
    if (it == b.end() || !(*it == w)) return -1;
    return it - b.begin();
}

f2::Vec CobarComplex::to_vec(const TriDegree& d, const Cochain& c, bool normalized) const {
    const std::vector<CobarWord>& b = basis(d, normalized);
    f2::Vec v(b.size());
    for (const CobarWord& w : c.words) {
        long i = index_of(d, w, normalized);
        if (i < 0)
            throw std::logic_error("cochain word missing from basis at " + d.str() + ": " +
                                   w.str(pres_.kind()));
        v.flip(std::size_t(i));
    }
    return v;
}

Cochain CobarComplex::from_vec(const TriDegree& d, const f2::Vec& v, bool normalized) const {
    const std::vector<CobarWord>& b = basis(d, normalized);
    Cochain c;
    for (std::size_t i : v.support()) c.add(b[i]);
    return c;
}

f2::Matrix CobarComplex::build_differential_matrix(const TriDegree& d, bool normalized) const {
    const std::vector<CobarWord>& src = basis(d, normalized);
    TriDegree td = differential_target(d);
    const std::vector<CobarWord>& dst = basis(td, normalized);
    f2::Matrix m(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        Cochain dj = differential(src[j], normalized);
        for (const CobarWord& w : dj.words) {
            long i = index_of(td, w, normalized);
            if (i < 0)
                throw std::logic_error("differential leaves enumerated basis at " + td.str() +
                                       ": " + w.str(pres_.kind()));
            m.set(std::size_t(i), j, true);
        }
    }
    return m;
}

const f2::Matrix& CobarComplex::differential_matrix(const TriDegree& d, bool normalized) const {
    auto key = std::make_pair(d, normalized);
    {
        std::lock_guard<std::mutex> lk(mtx_);
        auto it = dmat_cache_.find(key);
        if (it != dmat_cache_.end()) return it->second;
    }
    f2::Matrix m = build_differential_matrix(d, normalized);
    std::lock_guard<std::mutex> lk(mtx_);
    return dmat_cache_.emplace(key, std::move(m)).first->second;
}

}  // namespace mwext
