#include "twistorfill/calculus.hpp"

#include <stdexcept>

namespace twf::calc {

namespace {
const CQ kI = CQ::i();

void require_fiber(const EquivariantTensor& t, Fiber f, const char* op) {
    if (t.fiber() != f)
        throw std::invalid_argument(std::string(op) + ": unexpected fiber " + t.spec().name);
}
}  // namespace

EquivariantTensor dbar_h(const EquivariantTensor& phi) {
    require_fiber(phi, Fiber::CRDeform, "dbar_h");
    phi.check();
    EquivariantTensor out(Fiber::TwoForm);
    for (const auto& [key, v] : phi.entries()) {
        rep::ProductRep r(key.K, key.L);
        // phi^j_{2b}(k,l) feeds (k+2,l); phi^j_{1b}(k,l) feeds (k,l+2) with a minus
        int j = (key.basis == kE1bE1 || key.basis == kE2bE1) ? 0 : 1;  // target e12b_e{j+1}
        if (key.basis == kE2bE1 || key.basis == kE2bE2) {
            if (r.valid(key.k + 2, key.l))
                out.add({key.K, key.L, key.k + 2, key.l, j}, v);
        } else {
            if (r.valid(key.k, key.l + 2))
                out.add({key.K, key.L, key.k, key.l + 2, j}, -v);
        }
    }
    return out;
}

EquivariantTensor sharp(const EquivariantTensor& alpha) {
    require_fiber(alpha, Fiber::Omega01, "sharp");
    EquivariantTensor out(Fiber::T10);
    for (const auto& [key, v] : alpha.entries()) {
        CQ c = (key.basis == 0) ? -kI * v : kI * v;
        out.add({key.K, key.L, key.k, key.l, key.basis}, c);
    }
    return out;
}

EquivariantTensor sharp_inverse(const EquivariantTensor& v) {
    require_fiber(v, Fiber::T10, "sharp_inverse");
    EquivariantTensor out(Fiber::Omega01);
    for (const auto& [key, c] : v.entries()) {
        CQ a = (key.basis == 0) ? kI * c : -kI * c;
        out.add({key.K, key.L, key.k, key.l, key.basis}, a);
    }
    return out;
}

EquivariantTensor dbar_function(const EquivariantTensor& f) {
    require_fiber(f, Fiber::Functions, "dbar_function");
    EquivariantTensor out(Fiber::Omega01);
    for (const auto& [key, v] : f.entries()) {
        rep::ProductRep r(key.K, key.L);
        if (r.valid(key.k + 2, key.l)) out.add({key.K, key.L, key.k + 2, key.l, 0}, v);
        if (r.valid(key.k, key.l + 2)) out.add({key.K, key.L, key.k, key.l + 2, 1}, v);
    }
    return out;
}

EquivariantTensor dbar_field(const EquivariantTensor& v) {
    require_fiber(v, Fiber::T10, "dbar_field");
    EquivariantTensor out(Fiber::CRDeform);
    for (const auto& [key, c] : v.entries()) {
        rep::ProductRep r(key.K, key.L);
        // (dbar V)^j_{ib}(k,l) = V^j o Y_i
        int j = key.basis;  // 0 -> e_1, 1 -> e_2
        if (r.valid(key.k + 2, key.l))
            out.add({key.K, key.L, key.k + 2, key.l, j == 0 ? kE1bE1 : kE1bE2}, c);
        if (r.valid(key.k, key.l + 2))
            out.add({key.K, key.L, key.k, key.l + 2, j == 0 ? kE2bE1 : kE2bE2}, c);
    }
    return out;
}

EquivariantTensor complex_hessian(const EquivariantTensor& f) {
    require_fiber(f, Fiber::Functions, "complex_hessian");
    f.check();
    for (const auto& [key, v] : f.entries())
        if (key.k + key.l != 0)
            throw std::invalid_argument("complex_hessian: input off the k+l=0 lines");
    EquivariantTensor out(Fiber::CRDeform);
    for (const auto& [key, v] : f.entries()) {
        rep::ProductRep r(key.K, key.L);
        int k = key.k, l = key.l;
        if (r.valid(k + 4, l)) out.add({key.K, key.L, k + 4, l, kE1bE1}, -kI * v);
        if (r.valid(k + 2, l + 2)) {
            out.add({key.K, key.L, k + 2, l + 2, kE1bE2}, kI * v);
            out.add({key.K, key.L, k + 2, l + 2, kE2bE1}, -kI * v);
        }
        if (r.valid(k, l + 4)) out.add({key.K, key.L, k, l + 4, kE2bE2}, kI * v);
    }
    return out;
}

EquivariantTensor levi_contract(const EquivariantTensor& phi) {
    require_fiber(phi, Fiber::CRDeform, "levi_contract");
    EquivariantTensor out(Fiber::Omega02);
    for (const auto& [key, v] : phi.entries()) {
        if (key.basis == kE2bE1 || key.basis == kE1bE2)
            out.add({key.K, key.L, key.k, key.l, 0}, v);
    }
    return out;
}

EquivariantTensor p1_project(const EquivariantTensor& phi) {
    require_fiber(phi, Fiber::CRDeform, "p1_project");
    EquivariantTensor out(Fiber::P1Out);
    for (const auto& [key, v] : phi.entries()) {
        CQ s = (key.basis == kE1bE1 || key.basis == kE2bE1) ? v : -v;
        out.add({key.K, key.L, key.k, key.l, 0}, s);
    }
    return out;
}

Rat tau_phi_mu(const rep::ProductRep& rep, int k, int l) {
    // coefficient of rho(g0^{-1}) tau_rho on v_{k,l}: both factors flip
    // (k,l) -> (-k,-l), so the composite is diagonal with value +-1
    return rep::real_structure_coeff(rep, k, l) * rep::g0_coeff(rep, -k, -l);
}

EquivariantTensor tau_pullback(const EquivariantTensor& t, TauKind kind) {
    for (const auto& [key, v] : t.entries())
        if ((key.K + key.L) % 2 != 0)
            throw std::invalid_argument("tau_pullback: K+L must be even");
    if (kind == TauKind::Function) {
        require_fiber(t, Fiber::Functions, "tau_pullback");
        EquivariantTensor out(Fiber::Functions);
        for (const auto& [key, v] : t.entries()) {
            rep::ProductRep r(key.K, key.L);
            // (tau^* f)(k,l) = g0_coeff(k,l) w(-k,-l)
            out.add({key.K, key.L, -key.k, -key.l, 0}, CQ(rep::g0_coeff(r, -key.k, -key.l)) * v);
        }
        return out;
    }
    require_fiber(t, Fiber::CRDeform, "tau_pullback");
    EquivariantTensor out(Fiber::CRDeform);
    for (const auto& [key, v] : t.entries()) {
        rep::ProductRep r(key.K, key.L);
        out.add(key, CQ(tau_phi_mu(r, key.k, key.l)) * v.conj());
    }
    return out;
}

bool is_real_function(const EquivariantTensor& f) {
    if (f.fiber() != Fiber::Functions) return false;
    for (const auto& [key, v] : f.entries()) {
        rep::ProductRep r(key.K, key.L);
        CQ rhs = CQ(rep::real_structure_coeff(r, key.k, key.l)) *
                 f.at({key.K, key.L, -key.k, -key.l, 0});
        if (v.conj() != rhs) return false;
    }
    return true;
}

bool is_tau_anti_invariant(const EquivariantTensor& f) {
    EquivariantTensor t = tau_pullback(f, TauKind::Function);
    t *= CQ(-1);
    return t == f;
}

bool is_tau_compatible(const EquivariantTensor& phi) {
    return tau_pullback(phi, TauKind::CRDeformation) == phi;
}

EquivariantTensor realify(const EquivariantTensor& f) {
    require_fiber(f, Fiber::Functions, "realify");
    // (Rw)(k,l) = s(k,l) conj(w(-k,-l)); R^2 = id, fixed points are real
    EquivariantTensor rw(Fiber::Functions);
    for (const auto& [key, v] : f.entries()) {
        rep::ProductRep r(key.K, key.L);
        Key flip{key.K, key.L, -key.k, -key.l, 0};
        rw.add(flip, CQ(rep::real_structure_coeff(r, -key.k, -key.l)) * v.conj());
    }
    rw += f;
    rw *= CQ(Rat(1, 2));
    return rw;
}

EquivariantTensor negative_part(const EquivariantTensor& t) {
    EquivariantTensor out(t.fiber());
    for (const auto& [key, v] : t.entries()) {
        auto w = s1_weight(t, key);
        if (w && *w < 0) out.add(key, v);
    }
    return out;
}

EquivariantTensor nonpositive_part(const EquivariantTensor& t) {
    EquivariantTensor out(t.fiber());
    for (const auto& [key, v] : t.entries()) {
        auto w = s1_weight(t, key);
        if (w && *w <= 0) out.add(key, v);
    }
    return out;
}

}  // namespace twf::calc
