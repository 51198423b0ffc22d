#pragma once

#include <string>
#include <vector>

#include "twistorfill/linalg_exact.hpp"
#include "twistorfill/tensor.hpp"

namespace twf::fill {

// Column/row labels of the per-representation P system.  "phi" columns come in
// the full 4-component layout; the Levi constraint phi -| F = 0 and the
// normalization xi|_{T^{1,0}P^1_2} = 0 are carried as separate constraint rows.
struct SysVar {
    std::string block;  // "phi", "alpha", "xi0", "xi1", "xi2", "psi", "beta", "zeta"
    int basis;          // basis index within the block's fiber
    int k, l;
};

// Linearized deformation operator of the pair (CR structure, holomorphic
// contact form), restricted to one representation V^{K,L}:
//   psi  = dbar_H phi
//   beta = dbar alpha + phi -| F^L
//   zeta = dbar xi - d'(phi -| eta^c) + phi -| d eta^c + alpha eta^c
// together with the compatibility operator of the image,
//   C(psi,beta,zeta) = dbar zeta - (d' psi) -| eta^c - beta ^ eta^c,
// assembled so that C o P = 0 holds exactly on the constrained domain.
struct PSystem {
    int K = 0, L = 0;

    std::vector<SysVar> domain;       // phi (4 per line-4 point), alpha, xi0, xi1 [, xi2]
    std::vector<SysVar> target;       // psi, beta, zeta
    std::vector<SysVar> compat_rows;  // eta / e^1 / e^2 rows of C

    lin::MatQ P;            // target x domain
    lin::MatQ constraints;  // Levi rows over the domain (phi -| F = 0)
    lin::MatQ compat;       // compat_rows x target

    bool with_xi2 = false;  // include the e^2 (x) sigma column block (unnormalized xi)

    int domain_index(const std::string& block, int basis, int k, int l) const;
    int target_index(const std::string& block, int basis, int k, int l) const;
};

PSystem build_p_system(int K, int L, bool with_xi2 = false);

// Exact rank + SVD certificate for Im P = ker C on V^{K,L}.
struct RankCertificate {
    int K = 0, L = 0;
    int dim_domain = 0;       // constrained domain dimension
    int dim_target = 0;
    int rank_p = 0;           // exact
    int dim_ker_compat = 0;   // exact
    double svd_gap_p = 0;     // smallest kept / largest dropped singular value
    double svd_gap_compat = 0;
    bool surjective_onto_compatible = false;
    bool cp_identity = false;  // C o P == 0 on the constrained domain (exact)
};
RankCertificate verify_p_surjectivity(int K, int L);

// Kernel dimension of the system phi -| F = 0, dbar_H phi = 0, pi_{P^1} phi = 0.
int phi_b_kernel_dim(int K, int L);

// Weight-graded first cohomology of the equivariant dbar complexes of L,
// Omega^1_{P^1_1} (x) L and Omega^1_{P^1_2} (x) L on one representation,
// restricted to S^1 weights >= 0.
struct CohPiece {
    int weight;
    int dim;
};
std::vector<CohPiece> h1_nonneg_L(int K, int L);
std::vector<CohPiece> h1_nonneg_omega1_L(int K, int L, int which_p1);  // 1 or 2

// dbar kernel of Omega' (x) L (full three-component xi) on V^{K,L}, graded by
// S^1 weight; used for the lem-31 style checks.
std::vector<CohPiece> omega_prime_L_kernel(int K, int L);

}  // namespace twf::fill
