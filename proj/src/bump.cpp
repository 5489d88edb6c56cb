#include "hadex/bump.hpp"

#include <mutex>

namespace hadex {
namespace detail {

namespace {

std::vector<kernel_term> differentiate(const std::vector<kernel_term>& in) {
    // sparse accumulation keyed by (tpow, upow)
    std::map<std::pair<int, int>, bigint> acc;
    for (const auto& term : in) {
        if (term.tpow > 0) {
            acc[{term.tpow - 1, term.upow}] += term.coeff * term.tpow;
        }
        if (term.upow > 0) {
            acc[{term.tpow + 1, term.upow + 1}] += term.coeff * 2 * term.upow;
        }
        acc[{term.tpow + 1, term.upow + 2}] += term.coeff * -2;
    }
    std::vector<kernel_term> out;
    out.reserve(acc.size());
    for (auto& [key, c] : acc) {
        if (c != 0) out.push_back({key.first, key.second, std::move(c)});
    }
    return out;
}

} // namespace

const std::vector<kernel_term>& kernel_table(bump_kernel k, int order) {
    if (order < 0) throw std::invalid_argument("kernel_table: negative order");
    static std::mutex mtx;
    static std::vector<std::vector<kernel_term>> tables[2];
    std::lock_guard lock(mtx);
    auto& tab = tables[k == bump_kernel::odd ? 1 : 0];
    if (tab.empty()) {
        tab.push_back({{k == bump_kernel::odd ? 1 : 0, 0, bigint(1)}});
    }
    while (static_cast<int>(tab.size()) <= order) {
        tab.push_back(differentiate(tab.back()));
    }
    return tab[order];
}

} // namespace detail

bump_function::bump_function(std::vector<atom> atoms, parity p)
    : atoms_(std::move(atoms)), parity_(p) {
    merge_and_hull();
}

void bump_function::merge_and_hull() {
    for (const auto& a : atoms_) {
        if (a.halfwidth <= 0) throw std::invalid_argument("bump_function: halfwidth must be > 0");
    }
    std::vector<atom> merged;
    for (const auto& a : atoms_) {
        bool found = false;
        for (auto& m : merged) {
            if (m.kernel == a.kernel && m.center == a.center && m.halfwidth == a.halfwidth) {
                m.weight += a.weight;
                found = true;
                break;
            }
        }
        if (!found) merged.push_back(a);
    }
    std::erase_if(merged, [](const atom& a) { return a.weight == 0.0; });
    atoms_ = std::move(merged);
    if (atoms_.empty()) {
        lo_ = hi_ = 0;
        return;
    }
    lo_ = atoms_[0].center - atoms_[0].halfwidth;
    hi_ = atoms_[0].center + atoms_[0].halfwidth;
    for (const auto& a : atoms_) {
        lo_ = std::min(lo_, a.center - a.halfwidth);
        hi_ = std::max(hi_, a.center + a.halfwidth);
    }
}

bump_function bump_function::canonical_odd() {
    return bump_function({{bump_kernel::odd, 0.0, 1.0, 1.0}}, parity::odd);
}

bump_function bump_function::plain_even() {
    return bump_function({{bump_kernel::even, 0.0, 1.0, 1.0}}, parity::even);
}

bump_function bump_function::atom_bump(bump_kernel k, double center, double halfwidth,
                                       double weight) {
    parity p = parity::none;
    if (center == 0.0) p = (k == bump_kernel::odd) ? parity::odd : parity::even;
    return bump_function({{k, center, halfwidth, weight}}, p);
}

bump_function bump_function::scaled(double s) const {
    if (s <= 0) throw std::invalid_argument("bump_function::scaled: s must be > 0");
    std::vector<atom> out = atoms_;
    for (auto& a : out) {
        a.center *= s;
        a.halfwidth *= s;
    }
    return bump_function(std::move(out), parity_);
}

bump_function bump_function::reflected() const {
    std::vector<atom> out;
    out.reserve(atoms_.size());
    for (const auto& a : atoms_) {
        double w = (a.kernel == bump_kernel::odd) ? -a.weight : a.weight;
        out.push_back({a.kernel, -a.center, a.halfwidth, w});
    }
    parity p = parity_;
    return bump_function(std::move(out), p);
}

bump_function bump_function::odd_part() const {
    std::vector<atom> out;
    for (const auto& a : atoms_) {
        out.push_back({a.kernel, a.center, a.halfwidth, 0.5 * a.weight});
    }
    bump_function refl = reflected();
    for (const auto& a : refl.atoms()) {
        out.push_back({a.kernel, a.center, a.halfwidth, -0.5 * a.weight});
    }
    return bump_function(std::move(out), parity::odd);
}

bump_function bump_function::even_part() const {
    std::vector<atom> out;
    for (const auto& a : atoms_) {
        out.push_back({a.kernel, a.center, a.halfwidth, 0.5 * a.weight});
    }
    bump_function refl = reflected();
    for (const auto& a : refl.atoms()) {
        out.push_back({a.kernel, a.center, a.halfwidth, 0.5 * a.weight});
    }
    return bump_function(std::move(out), parity::even);
}

double eval_bump(const bump_function& f, double t, int order) {
    return f.eval<double>(t, order);
}

double smoothstep(double x) {
    if (x <= 0) return 0;
    if (x >= 1) return 1;
    double a = std::exp(-1.0 / x);
    double b = std::exp(-1.0 / (1.0 - x));
    return a / (a + b);
}

} // namespace hadex
