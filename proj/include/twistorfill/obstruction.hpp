#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "twistorfill/calculus.hpp"

namespace twf::fill {

using calc::EquivariantTensor;

struct ConstraintViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RepCase { KGeL, KEqLm2, KLeLm4 };
const char* rep_case_name(RepCase c);
RepCase classify_rep(int K, int L);

struct BlockingCoefficient {
    int K, L, k, l;
    int basis;  // CRDeform basis index
    CQ value;
    double abs() const { return std::sqrt(value.abs2_double()); }
};

struct RepVerdict {
    int K, L;
    RepCase rep_case;
    std::vector<BlockingCoefficient> blocking;  // nonzero obstruction values
    bool solvable() const { return blocking.empty(); }
};

struct ObstructionReport {
    std::vector<RepVerdict> reps;
    bool solvable = true;
};

// Positions of the vanishing conditions cutting out T_0 C_+ in the given
// representation: none when K >= L, w^1_{1b}(-K+2,K+2) when K = L-2, and the
// three coefficients at (-K,K+4) when K <= L-4.  Only positions inside the
// weight lattice are returned.
struct TangentCondition {
    int k, l;
    int basis;
};
std::vector<TangentCondition> tangent_c_plus(int K, int L);

struct Tolerance {
    bool exact = true;      // exact path: a coefficient blocks iff it is nonzero
    double eps = 1e-10;     // floating path threshold on |value|
    bool blocks(const CQ& v) const {
        if (exact) return !v.is_zero();
        return v.abs2_double() > eps * eps;
    }
};

// Recursive solver of the negative-weight Hessian problem: finds f with
//   (dbar_H # dbar f)_- = phi_-, f real, S^1-invariant part zero,
// sweeping the k+l=4 line.  Preconditions phi -| F = 0 and dbar_H phi = 0 are
// checked and raise ConstraintViolation.  Blocking coefficients (th-im-dd
// conditions) are collected in the report; f solves the problem iff
// report.solvable.  When tau^* conj(phi) = phi the returned f satisfies
// tau^* f = -f.
struct HessianSolve {
    EquivariantTensor f{calc::Fiber::Functions};
    ObstructionReport report;
};
HessianSolve solve_hessian_negative(const EquivariantTensor& phi, const Tolerance& tol = {});

// Coulomb slice at the linearized level: phi = complex_hessian(f) + phi_W with
// phi_W orthogonal to Im(hessian o pi_{<=0}), least squares per representation.
struct CoulombSplit {
    EquivariantTensor f{calc::Fiber::Functions};
    EquivariantTensor phi_w{calc::Fiber::CRDeform};
    double residual = 0;       // || phi - hess f - phi_W ||
    double orthogonality = 0;  // max | <phi_W, column of hessian_{<=0}> |
};
CoulombSplit coulomb_decompose(const EquivariantTensor& phi, const Tolerance& tol = {});

// Tangent spaces of fillable boundary data, per representation, as lists of
// contributing (K,L) with hom_{SO3} multiplicity and real dimension.
enum class Family { BPlus, BMinus, MPlus, MMinus };
Family family_from_string(const std::string& s);  // throws on unknown flag
const char* family_name(Family f);

struct TangentComponent {
    std::string part;  // "gdot" or "Qdot"
    int K, L;
    int multiplicity;
    long long dim;  // (K+1)(L+1) per multiplicity
};
struct TangentSpaceDescription {
    Family family;
    int cutoff;
    std::vector<TangentComponent> components;
    long long total_dim() const;
};
TangentSpaceDescription tangent_bg_dims(Family fam, int cutoff);

// Infinitesimal contact field X_f = f R - # d_H f.  cr_action composes
// dbar o # o dbar and must agree with complex_hessian(f) identically.
struct ContactField {
    EquivariantTensor reeb_coefficient{calc::Fiber::Functions};
    EquivariantTensor horizontal{calc::Fiber::T10};  // -# dbar f (the (1,0) half)
};
ContactField contact_vector_field(const EquivariantTensor& f);
EquivariantTensor cr_action(const EquivariantTensor& f);

}  // namespace twf::fill
