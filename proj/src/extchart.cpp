#include "mwext/extchart.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace mwext {

ExtChart::ExtChart(PresKind kind, Window win, int threads)
    : cx_(std::make_shared<CobarComplex>(kind, win)), win_(win) {
    for (int mw = std::max(win.mw_min, 0); mw <= win.mw_max; ++mw)
        for (int s = win.s_min; s <= win.s_max; ++s)
            for (int f = 0; f <= win.f_max; ++f) {
                TriDegree d{s, f, s - mw};
                if (pres().kind() == PresKind::Classical && d.w != 0) continue;
                degrees_.push_back(d);
            }
    std::sort(degrees_.begin(), degrees_.end());
    degrees_.erase(std::unique(degrees_.begin(), degrees_.end()), degrees_.end());
    compute(threads);
}

TriPiece ExtChart::compute_piece(const TriDegree& d) const {
    TriPiece p;
    p.d = d;
    const auto& bs = cx_->basis(d);
    p.basis_size = bs.size();
    if (bs.empty()) {
        p.cocycles.ambient = 0;
        p.boundaries.ambient = 0;
        return p;
    }
    f2::Matrix out = cx_->build_differential_matrix(d);
    p.cocycles = f2::kernel_of(out);

    TriDegree src = CobarComplex::differential_source(d);
    if (src.f >= 0 && !cx_->basis(src).empty()) {
        f2::Matrix in = cx_->build_differential_matrix(src);
        p.boundaries = f2::image_of(in);
    } else {
        p.boundaries.ambient = bs.size();
    }
    p.reps = f2::quotient_basis(p.cocycles, p.boundaries);
    p.dim = int(p.reps.size());
    return p;
}

void ExtChart::compute(int threads) {
    std::vector<TriPiece> result(degrees_.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < degrees_.size(); ++i) result[i] = compute_piece(degrees_[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= degrees_.size()) return;
                result[i] = compute_piece(degrees_[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < degrees_.size(); ++i)
        pieces_.emplace(degrees_[i], std::move(result[i]));
}

int ExtChart::dim(const TriDegree& d) const {
    if (d.mw() < 0) return 0;
    if (d.f < 0) return 0;
    return piece(d).dim;
}

const TriPiece& ExtChart::piece(const TriDegree& d) const {
    auto it = pieces_.find(d);
    if (it == pieces_.end())
        throw WindowOverflow("tridegree outside computed window: " + d.str());
    return it->second;
}

ExtClass ExtChart::class_of(const Cochain& c) const {
    if (c.is_zero()) throw std::invalid_argument("class_of: zero cochain has no tridegree");
    TriDegree d = cx_->degree_of(c.words.front());
    return class_of_vec(d, cx_->to_vec(d, c));
}

ExtClass ExtChart::class_of_vec(const TriDegree& d, const f2::Vec& cocycle) const {
    const TriPiece& p = piece(d);
    f2::Vec r = p.boundaries.reduce(cocycle);
    /* reps are boundary-reduced and independent; peel them off greedily */
    f2::Vec coords(p.reps.size());
    for (std::size_t i = 0; i < p.reps.size(); ++i) {
        long lead = p.reps[i].leading();
        if (lead >= 0 && r.get(std::size_t(lead))) {
            r ^= p.reps[i];
            coords.set(i, true);
        }
    }
    if (!r.is_zero())
        throw std::invalid_argument("class_of_vec: not a cocycle at " + d.str());
    return {d, coords};
}

Cochain ExtChart::rep_of(const ExtClass& c) const {
    return cx_->from_vec(c.d, rep_vec_of(c));
}

f2::Vec ExtChart::rep_vec_of(const ExtClass& c) const {
    const TriPiece& p = piece(c.d);
    f2::Vec v(p.basis_size);
    for (std::size_t i : c.v.support()) v ^= p.reps[i];
    return v;
}

ExtClass ExtChart::basis_class(const TriDegree& d, int i) const {
    const TriPiece& p = piece(d);
    if (i < 0 || i >= p.dim) throw std::out_of_range("basis_class index");
    f2::Vec v(std::size_t(p.dim));
    v.set(std::size_t(i), true);
    return {d, v};
}

ExtClass ExtChart::add(const ExtClass& a, const ExtClass& b) const {
    if (!(a.d == b.d)) throw std::invalid_argument("add: tridegree mismatch");
    ExtClass c = a;
    c.v ^= b.v;
    return c;
}

ExtClass ExtChart::multiply(const ExtClass& a, const ExtClass& b) const {
    TriDegree d = a.d + b.d;
    if (a.is_zero() || b.is_zero()) return zero_class(d);
    Cochain prod = cx_->product(rep_of(a), rep_of(b));
    if (prod.is_zero()) return zero_class(d);
    return class_of_vec(d, cx_->to_vec(d, prod));
}

ExtClass ExtChart::multiply_pow(const ExtClass& a, int e, const ExtClass& b) const {
    ExtClass acc = b;
    for (int i = 0; i < e; ++i) acc = multiply(a, acc);
    return acc;
}

ExtClass ExtChart::coefficient_class(int tau_exp, int rho_exp) const {
    CobarWord w;
    w.coeff.tau_exp = tau_exp;
    w.coeff.rho_exp = rho_exp;
    Cochain c;
    c.add(w);
    return class_of(c);
}

int ExtChart::rho_filtration(const ExtClass& c) const {
    if (pres().kind() != PresKind::RMotivic)
        throw std::logic_error("rho_filtration: needs the R-motivic pair");
    if (c.is_zero()) return -1; /* the zero class lies in every filtration */
    const TriPiece& p = piece(c.d);
    const auto& bs = cx_->basis(c.d);
    f2::Vec v = rep_vec_of(c);
    int k = 0;
    for (;;) {
        /* does v + boundaries meet the span of words with filtration >= k+1? */
        std::vector<f2::Vec> deep;
        for (std::size_t i = 0; i < bs.size(); ++i) {
            if (cx_->filtration(bs[i]) >= k + 1) {
                f2::Vec e(bs.size());
                e.set(i, true);
                deep.push_back(std::move(e));
            }
        }
        f2::Subspace allowed = f2::sum(p.boundaries, f2::span_of(bs.size(), std::move(deep)));
        if (!allowed.contains(v)) return k;
        ++k;
    }
}

std::optional<int> ExtChart::rho_torsion_order(const ExtClass& c) const {
    ExtClass rho = coefficient_class(0, 1);
    ExtClass cur = c;
    for (int k = 1;; ++k) {
        TriDegree nd = cur.d + rho.d;
        if (!in_window(nd)) return std::nullopt; /* survives to the window edge */
        cur = multiply(rho, cur);
        if (cur.is_zero()) return k;
    }
}

std::optional<int> ExtChart::tau_torsion_order(const ExtClass& c) const {
    ExtClass tau = coefficient_class(1, 0);
    ExtClass cur = c;
    for (int k = 1;; ++k) {
        TriDegree nd = cur.d + tau.d;
        if (!in_window(nd)) return std::nullopt;
        cur = multiply(tau, cur);
        if (cur.is_zero()) return k;
    }
}

ExtClass multiply_all(const ExtChart& chart, const std::vector<ExtClass>& factors) {
    if (factors.empty()) throw std::invalid_argument("multiply_all: empty product");
    ExtClass acc = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) acc = chart.multiply(acc, factors[i]);
    return acc;
}

}  // namespace mwext
