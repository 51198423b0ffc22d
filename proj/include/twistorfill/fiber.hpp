#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace twf::calc {

// Homogeneous bundle fibers over T = Sp1Sp1/U1.  Each basis element carries
// its isotropy (U1) weight -- equivariant coefficients live on the lattice
// lines k+l = u1 -- and its S^1 weight offset, so that the total Fourier
// weight of an entry at (k,l) is k + s1_offset.  p1_out mixes S^1 weights
// (the P^1 projection does not commute with the circle action), hence the
// optional offset.
enum class Fiber {
    Functions,     // C
    Omega01,       // e^{1b}, e^{2b}
    T10,           // e_1, e_2
    CRDeform,      // Omega^{0,1} (x) T^{1,0}
    TwoForm,       // Omega^{0,2} (x) T^{1,0}
    Omega02,       // Omega^{0,2} scalar (Levi contraction, beta block)
    P1Out,         // scalar output of the P^1 projection
    LSections,     // L = O(0,2): sigma
    OmegaPrimeL,   // Omega' (x) L: eta.s, e^1.s, e^2.s
    Omega01L,      // Omega^{0,1} (x) L (phi -| eta^c lives here)
    Zeta,          // Omega^{0,1} (x) Omega' (x) L, 6 components
    Compat,        // Omega' (x) Omega^{0,2} (x) L, 3 components
};

struct BasisInfo {
    const char* label;
    int u1_weight;
    std::optional<int> s1_offset;
};

struct FiberSpec {
    Fiber id;
    const char* name;
    std::vector<BasisInfo> basis;

    int size() const { return static_cast<int>(basis.size()); }
    // common isotropy weight when all basis elements share one
    std::optional<int> uniform_u1() const;
};

const FiberSpec& fiber_spec(Fiber f);
const FiberSpec* fiber_by_name(std::string_view name);
int basis_index(Fiber f, std::string_view label);  // -1 when unknown

// CRDeform basis indices, fixed order {e^{1b}e_1, e^{1b}e_2, e^{2b}e_1, e^{2b}e_2}
inline constexpr int kE1bE1 = 0;  // phi^1_{1b}
inline constexpr int kE1bE2 = 1;  // phi^2_{1b}
inline constexpr int kE2bE1 = 2;  // phi^1_{2b}
inline constexpr int kE2bE2 = 3;  // phi^2_{2b}

}  // namespace twf::calc
