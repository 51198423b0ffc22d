#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace twf::disk {

using Cx = std::complex<double>;

struct NegativeFourierContent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularLevi : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncationOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated Fourier series on the circle, a_k for |k| <= band.
struct FourierSeries {
    std::map<int, Cx> a;
    int band = 0;
    bool aliasing_warning = false;
    double alias_energy = 0;

    Cx coeff(int k) const {
        auto it = a.find(k);
        return it == a.end() ? Cx{} : it->second;
    }
    bool is_real(double tol = 1e-12) const;  // a_{-k} = conj(a_k)
};

// in-place radix-2 FFT (forward: e^{-ik theta} convention)
void fft(std::vector<Cx>& v, bool inverse);

// a_k = (1/M) sum_m samples[m] e^{-ik theta_m}; sample count must be a power
// of two >= 2 band + 2.  Energy above the band raises the aliasing flag.
FourierSeries fourier_decompose(std::span<const Cx> samples, int band, double tol = 1e-12);

std::vector<Cx> synthesize(const FourierSeries& s, int sample_count);

enum class PositivityMode { Strict, NonNegative };
struct PositivityResult {
    bool pass = true;
    std::vector<std::pair<int, double>> offending;  // mode -> magnitude
};
PositivityResult positivity_filter(const FourierSeries& s, PositivityMode mode,
                                   double tol = 1e-12);

// Polynomial in (zeta, conj(zeta)); the mixed Taylor data used by the
// Riemann-Hilbert solver.  Purely holomorphic functions have q = 0 only.
class DiskFunction {
public:
    DiskFunction() = default;

    void add(int p, int q, Cx c);
    Cx coeff(int p, int q) const;
    const std::map<std::pair<int, int>, Cx>& terms() const { return terms_; }
    bool holomorphic(double tol = 0) const;

    Cx eval(Cx z) const;
    // boundary trace Fourier mode: sum over terms with p - q = k
    Cx boundary_mode(int k) const;
    std::map<int, Cx> boundary_modes() const;
    int max_degree() const;

    DiskFunction dbar() const;    // d/d conj(zeta)
    DiskFunction dz() const;      // d/d zeta
    DiskFunction conjugate() const;
    DiskFunction times_zeta() const;

    DiskFunction& operator+=(const DiskFunction& o);
    DiskFunction& operator*=(Cx c);
    friend DiskFunction operator+(DiskFunction a, const DiskFunction& b) {
        a += b;
        return a;
    }
    friend DiskFunction operator-(DiskFunction a, const DiskFunction& b) {
        DiskFunction nb = b;
        nb *= Cx(-1);
        a += nb;
        return a;
    }

    double max_abs() const;

private:
    std::map<std::pair<int, int>, Cx> terms_;
};

// Holomorphic extension of a nonnegative-frequency boundary series:
// f(zeta) = sum_{k>=0} a_k zeta^k.  Raises NegativeFourierContent when any
// mode k < 0 exceeds the tolerance.  sup_bound = sum |a_k|.
struct DiskExtension {
    DiskFunction f;
    double sup_bound = 0;
};
DiskExtension extend_disk(const FourierSeries& s, double tol = 1e-12);

// Particular solution of df/d conj(zeta) = g with zero holomorphic part; each
// angular mode is the exact radial integral of its monomials.
DiskFunction dbar_particular(const DiskFunction& g);

// Particular solution normalized so the boundary trace carries only strictly
// negative Fourier modes.
DiskFunction dbar_disk_solve(const DiskFunction& g, int band = 1 << 16);

// Linearized extremal-disk problem (one representation of the boundary data):
//   d f^i / d conj(zeta) = g^i            (i = 0..n)
//   d varpi_i / d conj(zeta) - zeta d conj(f^j)/d conj(zeta) F_{jb i} = rho_i
// with boundary conditions Re(f^0/zeta)|_{S^1} = 0, f^0(0) = 0, f^i(1) = 0,
// varpi_i|_{S^1} = 0, varpi_i(0) = 0.
struct RHProblem {
    int n = 0;
    Eigen::MatrixXcd F;  // Levi matrix F_{ib j}, must be invertible
    DiskFunction g0;
    std::vector<DiskFunction> g;    // size n
    std::vector<DiskFunction> rho;  // size n
    int band = 128;
};

struct RHSolution {
    DiskFunction f0;
    std::vector<DiskFunction> f;
    std::vector<DiskFunction> varpi;
    double pde_residual = 0;      // max PDE defect over all equations
    double boundary_defect = 0;   // max over the five boundary conditions
    double levi_condition = 0;    // condition number of F
    double sigma_min = 0;         // smallest singular value of the assembled system
};
RHSolution solve_rh(const RHProblem& p, int radial_resolution = 256);

// Homogeneous boundary system on holomorphic coefficient vectors (f^0, f^i of
// degree <= band); injectivity of the linearized problem is its smallest
// singular value staying away from zero.
Eigen::MatrixXcd rh_homogeneous_system(int n, const Eigen::MatrixXcd& F, int band);
double rh_sigma_min(int n, const Eigen::MatrixXcd& F, int band);

}  // namespace twf::disk
