#pragma once

#include "twistorfill/tensor.hpp"

namespace twf::calc {

// The Levi form of the circle bundle, F = -(e^1 ^ e^{1b} - e^2 ^ e^{2b}):
// F_{1b 1} = +orientation, F_{2b 2} = -orientation, off-diagonal zero.
struct LeviData {
    int orientation = 1;
    CQ entry(int ibar, int j) const {
        if (ibar == 1 && j == 1) return CQ(orientation);
        if (ibar == 2 && j == 2) return CQ(-orientation);
        return CQ{};
    }
};

// dbar_H on CR deformations: (dbar phi)^j(k,l) = phi^j_{2b}(k-2,l) - phi^j_{1b}(k,l-2).
EquivariantTensor dbar_h(const EquivariantTensor& phi);

// # on (0,1)-forms: #e^{1b} = -i e_1, #e^{2b} = i e_2 (an isomorphism).
EquivariantTensor sharp(const EquivariantTensor& alpha);
EquivariantTensor sharp_inverse(const EquivariantTensor& v);

// dbar on functions ((dbar f)_{ib} = f o Y_i) and on T^{1,0}-valued fields.
EquivariantTensor dbar_function(const EquivariantTensor& f);
EquivariantTensor dbar_field(const EquivariantTensor& v);

// Complex Hessian dbar_H # dbar on functions supported on the k+l=0 lines:
//   phi^1_{1b} = -i w Y1^2, phi^2_{1b} = i w Y2 Y1,
//   phi^1_{2b} = -i w Y1 Y2, phi^2_{2b} = i w Y2^2.
EquivariantTensor complex_hessian(const EquivariantTensor& f);

// phi -| F = (phi^1_{2b} + phi^2_{1b}) e^{1b}^e^{2b}; zero iff F stays (1,1).
EquivariantTensor levi_contract(const EquivariantTensor& phi);

// phi^1_{1b} + phi^1_{2b} - phi^2_{1b} - phi^2_{2b}; zero iff the real P^1
// family is infinitesimally preserved.  Mixes S^1 weights.
EquivariantTensor p1_project(const EquivariantTensor& phi);

enum class TauKind { Function, CRDeformation };

// Real-structure pullback.  Functions: w -> w o rho(g0^{-1}); this flips
// (k,l) -> (-k,-l) with a rational coefficient.  CR deformations: w ->
// tau' w o rho(g0^{-1}) o tau_rho, which is diagonal: entrywise conjugation
// times a sign mu(k,l) = +-1.  Both are involutions exactly.
EquivariantTensor tau_pullback(const EquivariantTensor& t, TauKind kind);

// mu(k,l) for the CR-deformation pullback (the +-1 diagonal factor)
Rat tau_phi_mu(const rep::ProductRep& rep, int k, int l);

// f real: conj(w(k,l)) = s(k,l) w(-k,-l) with s the tau_rho coefficient.
bool is_real_function(const EquivariantTensor& f);
// tau^* f = -f
bool is_tau_anti_invariant(const EquivariantTensor& f);
// tau^* conj(phi) = phi
bool is_tau_compatible(const EquivariantTensor& phi);

// project a function onto the real (resp. tau-anti-invariant) part
EquivariantTensor realify(const EquivariantTensor& f);

// entries with strictly negative (resp. nonpositive) S^1 weight
EquivariantTensor negative_part(const EquivariantTensor& t);
EquivariantTensor nonpositive_part(const EquivariantTensor& t);

}  // namespace twf::calc
