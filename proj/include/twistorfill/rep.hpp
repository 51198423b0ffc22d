#pragma once

#include <utility>
#include <vector>

#include "twistorfill/rational.hpp"

namespace twf::rep {

// Irreducible Sp(1) representation sigma^K = Sym^K C^2, weights K, K-2, ..., -K.
struct Irrep {
    int K = 0;
    int dim() const { return K + 1; }
    std::vector<int> weights() const;  // descending
};

// V^{K,L} = sigma^K (x) sigma^L.  Descends to Sp1Sp1 when K+L is even; odd sums
// are allowed as intermediates when allow_odd is set.
struct ProductRep {
    int K = 0;
    int L = 0;
    bool allow_odd = false;

    ProductRep() = default;
    ProductRep(int K_, int L_, bool odd = false);

    int dim() const { return (K + 1) * (L + 1); }
    bool valid(int k, int l) const {
        return k >= -K && k <= K && l >= -L && l <= L && (k - K) % 2 == 0 && (l - L) % 2 == 0;
    }
    // lexicographic descending in (k,l)
    std::vector<std::pair<int, int>> weight_basis() const;
    // positions on the line k+l = c, descending in k
    std::vector<std::pair<int, int>> line(int c) const;
    int index_of(int k, int l) const;  // position within weight_basis(), -1 if invalid
};

enum class Gen { H1, H2, X1, X2, Y1, Y2 };

// Basis normalization (fixed once for the whole library):
//   Y v_m = v_{m-2},  v_{-K-2} = 0,  X v_m = c_m v_{m+2},
//   c_m = ((K-m)/2) ((K+m)/2 + 1), forced by [X,Y] = H.
// In this basis every ladder matrix is integer-valued.
long long x_coeff(int K, int m);

// Image of a generator on the weight line (k,l): target position and integer
// coefficient; coeff 0 means annihilated (or target outside the lattice).
struct LadderImage {
    int k = 0;
    int l = 0;
    long long coeff = 0;
};
LadderImage apply_gen(const ProductRep& rep, Gen g, int k, int l);

// Sparse matrix of a generator in weight_basis() order.
struct SparseMatQ {
    int rows = 0;
    int cols = 0;
    struct Triplet {
        int r, c;
        Rat v;
    };
    std::vector<Triplet> triplets;

    std::vector<std::vector<Rat>> dense() const;
};
SparseMatQ ladder_matrix(const ProductRep& rep, Gen g);

// Commutator of two sparse matrices (dense intermediate; reps here are small).
std::vector<std::vector<Rat>> commutator(const SparseMatQ& a, const SparseMatQ& b);

// Diagonal SO(3) decomposition sigma^K (x) sigma^L = sigma^{K+L} + ... + sigma^{|K-L|}.
std::vector<int> clebsch_gordan(int K, int L);

// Multiplicity of sigma^J in the diagonal decomposition of V^{K,L}.
int hom_so3_multiplicity(int K, int L, int J);

// Real structure tau_rho on V^{K,L} (K+L even): antilinear, tau(v_{k,l}) =
// s(k,l) v_{-k,-l} with the rational coefficient below; tau^2 = id exactly.
Rat real_structure_coeff(const ProductRep& rep, int k, int l);

struct RealStructure {
    ProductRep rep;
    // matrix of tau in weight_basis() order: tau(v_j) = M[i][j] v_i with a
    // conjugation on coordinates understood (antilinear map)
    std::vector<std::vector<Rat>> matrix;
};
RealStructure real_structure(const ProductRep& rep);

// rho(g0) with g0 = antidiagonal (0,i;i,0) in the diagonal Sp1:
// rho(g0) v_{k,l} = g0_coeff(k,l) v_{-k,-l}; g0^2 = id on V^{K,L}, K+L even.
Rat g0_coeff(const ProductRep& rep, int k, int l);

}  // namespace twf::rep
