#include "twistorfill/disk.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace twf::disk {

bool FourierSeries::is_real(double tol) const {
    for (const auto& [k, v] : a)
        if (std::abs(v - std::conj(coeff(-k))) > tol) return false;
    return true;
}

void fft(std::vector<Cx>& v, bool inverse) {
    const std::size_t n = v.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[i], v[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = 2 * std::numbers::pi / double(len) * (inverse ? 1 : -1);
        Cx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            Cx w(1);
            for (std::size_t j = 0; j < len / 2; ++j) {
                Cx u = v[i + j], t = v[i + j + len / 2] * w;
                v[i + j] = u + t;
                v[i + j + len / 2] = u - t;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& x : v) x /= double(n);
}

FourierSeries fourier_decompose(std::span<const Cx> samples, int band, double tol) {
    const std::size_t m = samples.size();
    if (m == 0 || (m & (m - 1)) != 0 || int(m) < 2 * band + 2)
        throw std::invalid_argument(
            "fourier_decompose: sample count must be a power of two >= 2 band + 2");
    std::vector<Cx> v(samples.begin(), samples.end());
    fft(v, false);
    FourierSeries out;
    out.band = band;
    for (int k = -band; k <= band; ++k) {
        std::size_t bin = std::size_t((k + int(m)) % int(m));
        Cx c = v[bin] / double(m);
        if (std::abs(c) > 0) out.a[k] = c;
    }
    for (std::size_t bin = 0; bin < m; ++bin) {
        int k = int(bin) <= int(m) / 2 ? int(bin) : int(bin) - int(m);
        if (std::abs(k) > band) out.alias_energy += std::norm(v[bin] / double(m));
    }
    out.alias_energy = std::sqrt(out.alias_energy);
    out.aliasing_warning = out.alias_energy > tol;
    return out;
}

std::vector<Cx> synthesize(const FourierSeries& s, int sample_count) {
    std::vector<Cx> out(std::size_t(sample_count));
    for (int j = 0; j < sample_count; ++j) {
        double th = 2 * std::numbers::pi * j / sample_count;
        Cx acc = 0;
        for (const auto& [k, v] : s.a) acc += v * std::polar(1.0, k * th);
        out[std::size_t(j)] = acc;
    }
    return out;
}

PositivityResult positivity_filter(const FourierSeries& s, PositivityMode mode, double tol) {
    PositivityResult r;
    for (const auto& [k, v] : s.a) {
        bool banned = (mode == PositivityMode::Strict) ? k <= 0 : k < 0;
        if (banned && std::abs(v) > tol) {
            r.pass = false;
            r.offending.emplace_back(k, std::abs(v));
        }
    }
    std::sort(r.offending.begin(), r.offending.end());
    return r;
}

void DiskFunction::add(int p, int q, Cx c) {
    if (p < 0 || q < 0) throw std::invalid_argument("DiskFunction: negative exponent");
    if (c == Cx{}) return;
    auto key = std::make_pair(p, q);
    auto it = terms_.find(key);
    if (it == terms_.end())
        terms_[key] = c;
    else {
        it->second += c;
        if (it->second == Cx{}) terms_.erase(it);
    }
}

Cx DiskFunction::coeff(int p, int q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? Cx{} : it->second;
}

bool DiskFunction::holomorphic(double tol) const {
    for (const auto& [pq, c] : terms_)
        if (pq.second > 0 && std::abs(c) > tol) return false;
    return true;
}

Cx DiskFunction::eval(Cx z) const {
    Cx zb = std::conj(z);
    Cx acc = 0;
    for (const auto& [pq, c] : terms_)
        acc += c * std::pow(z, pq.first) * std::pow(zb, pq.second);
    return acc;
}

Cx DiskFunction::boundary_mode(int k) const {
    Cx acc = 0;
    for (const auto& [pq, c] : terms_)
        if (pq.first - pq.second == k) acc += c;
    return acc;
}

std::map<int, Cx> DiskFunction::boundary_modes() const {
    std::map<int, Cx> out;
    for (const auto& [pq, c] : terms_) out[pq.first - pq.second] += c;
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == Cx{}) ? out.erase(it) : std::next(it);
    return out;
}

int DiskFunction::max_degree() const {
    int d = 0;
    for (const auto& [pq, c] : terms_) d = std::max(d, pq.first + pq.second);
    return d;
}

DiskFunction DiskFunction::dbar() const {
    DiskFunction out;
    for (const auto& [pq, c] : terms_)
        if (pq.second > 0) out.add(pq.first, pq.second - 1, c * double(pq.second));
    return out;
}

DiskFunction DiskFunction::dz() const {
    DiskFunction out;
    for (const auto& [pq, c] : terms_)
        if (pq.first > 0) out.add(pq.first - 1, pq.second, c * double(pq.first));
    return out;
}

DiskFunction DiskFunction::conjugate() const {
    DiskFunction out;
    for (const auto& [pq, c] : terms_) out.add(pq.second, pq.first, std::conj(c));
    return out;
}

DiskFunction DiskFunction::times_zeta() const {
    DiskFunction out;
    for (const auto& [pq, c] : terms_) out.add(pq.first + 1, pq.second, c);
    return out;
}

DiskFunction& DiskFunction::operator+=(const DiskFunction& o) {
    for (const auto& [pq, c] : o.terms_) add(pq.first, pq.second, c);
    return *this;
}

DiskFunction& DiskFunction::operator*=(Cx c) {
    if (c == Cx{}) {
        terms_.clear();
        return *this;
    }
    for (auto& [pq, v] : terms_) v *= c;
    return *this;
}

double DiskFunction::max_abs() const {
    double m = 0;
    for (const auto& [pq, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

DiskExtension extend_disk(const FourierSeries& s, double tol) {
    auto pf = positivity_filter(s, PositivityMode::NonNegative, tol);
    if (!pf.pass) {
        std::string msg = "extend_disk: negative Fourier content at modes";
        for (auto& [k, mag] : pf.offending) msg += " " + std::to_string(k);
        throw NegativeFourierContent(msg);
    }
    DiskExtension out;
    for (const auto& [k, v] : s.a) {
        if (k < 0) continue;  // below tolerance by the filter
        out.f.add(k, 0, v);
        out.sup_bound += std::abs(v);
    }
    return out;
}

DiskFunction dbar_particular(const DiskFunction& g) {
    DiskFunction out;
    for (const auto& [pq, c] : g.terms())
        out.add(pq.first, pq.second + 1, c / double(pq.second + 1));
    return out;
}

DiskFunction dbar_disk_solve(const DiskFunction& g, int band) {
    if (g.max_degree() + 1 > band)
        throw TruncationOverflow("dbar_disk_solve: solution exceeds the configured band");
    DiskFunction f = dbar_particular(g);
    for (const auto& [k, v] : f.boundary_modes())
        if (k >= 0) f.add(k, 0, -v);
    return f;
}

namespace {
void check_levi(const Eigen::MatrixXcd& F, double* cond) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(F);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(sv.size() - 1) < 1e-12 * sv(0))
        throw SingularLevi("solve_rh: Levi matrix is not invertible");
    *cond = sv(0) / sv(sv.size() - 1);
}
}  // namespace

RHSolution solve_rh(const RHProblem& p, int radial_resolution) {
    if (p.n < 0 || int(p.g.size()) != p.n || int(p.rho.size()) != p.n ||
        p.F.rows() != p.n || p.F.cols() != p.n)
        throw std::invalid_argument("solve_rh: inconsistent problem sizes");
    RHSolution sol;
    if (p.n > 0) check_levi(p.F, &sol.levi_condition);

    // (1)-(3): f^0 from its own scalar problem
    DiskFunction phi1 = dbar_disk_solve(p.g0, p.band);
    DiskFunction f0 = phi1;
    for (const auto& [k, a] : phi1.boundary_modes()) {
        // phi^0_2 = -sum_{k>2} conj(a_{-k+2}) zeta^k restores Re(f^0/zeta)=0
        if (k < 0 && 2 - k > 2) f0.add(2 - k, 0, -std::conj(a));
    }
    Cx a0 = -f0.eval(0);
    f0.add(0, 0, a0);
    f0.add(2, 0, -std::conj(a0));
    Cx a1 = -f0.eval(1);  // purely imaginary by construction
    f0.add(1, 0, a1);
    sol.f0 = f0;

    // (4): particular f^i with strictly negative boundary trace
    sol.f.resize(std::size_t(p.n));
    for (int i = 0; i < p.n; ++i) sol.f[std::size_t(i)] = dbar_disk_solve(p.g[std::size_t(i)], p.band);

    // (5): varpi_i from its dbar problem, then the three correction steps
    auto varpi_rhs = [&](int i) {
        DiskFunction rhs = p.rho[std::size_t(i)];
        for (int j = 0; j < p.n; ++j) {
            DiskFunction t = sol.f[std::size_t(j)].dz().conjugate().times_zeta();
            t *= p.F(j, i);
            rhs += t;
        }
        return rhs;
    };
    sol.varpi.resize(std::size_t(p.n));
    for (int i = 0; i < p.n; ++i) sol.varpi[std::size_t(i)] = dbar_disk_solve(varpi_rhs(i), p.band);

    if (p.n > 0) {
        Eigen::MatrixXcd Ft = p.F.transpose();
        // boundary fix: holomorphic phi^j_1 (modes >= 2) cancel the strictly
        // negative varpi boundary modes through zeta conj(phi^j_1) F_{jb i}
        std::map<int, Eigen::VectorXcd> wmodes;
        for (int i = 0; i < p.n; ++i)
            for (const auto& [m, v] : sol.varpi[std::size_t(i)].boundary_modes()) {
                if (m >= 0) continue;
                auto it = wmodes.find(m);
                if (it == wmodes.end()) {
                    wmodes[m] = Eigen::VectorXcd::Zero(p.n);
                }
                wmodes[m](i) += v;
            }
        for (const auto& [m, w] : wmodes) {
            if (1 - m > p.band) throw TruncationOverflow("solve_rh: correction exceeds band");
            Eigen::VectorXcd x = Ft.colPivHouseholderQr().solve(-w.eval());
            for (int j = 0; j < p.n; ++j) {
                Cx cjk = std::conj(x(j));  // coefficient of zeta^{1-m} in phi^j_1
                if (cjk == Cx{}) continue;
                sol.f[std::size_t(j)].add(1 - m, 0, cjk);
                // varpi_i += zeta conj(phi^j_1) F(j,i): term (1, 1-m)
                for (int i = 0; i < p.n; ++i)
                    sol.varpi[std::size_t(i)].add(1, 1 - m, x(j) * p.F(j, i));
            }
        }
        // varpi_i(0) = 0 via a_1^j; the correction (|zeta|^2 - 1) conj(a1^j) F
        // vanishes on the boundary
        Eigen::VectorXcd v0(p.n);
        for (int i = 0; i < p.n; ++i) v0(i) = sol.varpi[std::size_t(i)].eval(0);
        Eigen::VectorXcd y = Ft.colPivHouseholderQr().solve(v0);
        for (int j = 0; j < p.n; ++j) {
            if (y(j) == Cx{}) continue;
            sol.f[std::size_t(j)].add(1, 0, std::conj(y(j)));
            for (int i = 0; i < p.n; ++i) {
                sol.varpi[std::size_t(i)].add(1, 1, y(j) * p.F(j, i));
                sol.varpi[std::size_t(i)].add(0, 0, -y(j) * p.F(j, i));
            }
        }
        // f^i(1) = 0 via the remaining constants
        for (int j = 0; j < p.n; ++j) {
            Cx c = -sol.f[std::size_t(j)].eval(1);
            sol.f[std::size_t(j)].add(0, 0, c);
        }
    }

    // residuals
    double pde = (sol.f0.dbar() - p.g0).max_abs();
    for (int i = 0; i < p.n; ++i) {
        pde = std::max(pde, (sol.f[std::size_t(i)].dbar() - p.g[std::size_t(i)]).max_abs());
        DiskFunction lhs = sol.varpi[std::size_t(i)].dbar();
        for (int j = 0; j < p.n; ++j) {
            DiskFunction t = sol.f[std::size_t(j)].dz().conjugate().times_zeta();
            t *= p.F(j, i);
            lhs = lhs - t;
        }
        pde = std::max(pde, (lhs - p.rho[std::size_t(i)]).max_abs());
    }
    sol.pde_residual = pde;

    int samples = 8;
    while (samples < 2 * (sol.f0.max_degree() + 2) || samples < radial_resolution) samples *= 2;
    double bdef = std::max(std::abs(sol.f0.eval(0)), std::abs(sol.f0.eval(1)));
    for (int j = 0; j < samples; ++j) {
        Cx z = std::polar(1.0, 2 * std::numbers::pi * j / samples);
        bdef = std::max(bdef, std::abs(std::real(sol.f0.eval(z) / z)));
        for (int i = 0; i < p.n; ++i)
            bdef = std::max(bdef, std::abs(sol.varpi[std::size_t(i)].eval(z)));
    }
    for (int i = 0; i < p.n; ++i) {
        bdef = std::max(bdef, std::abs(sol.f[std::size_t(i)].eval(1)));
        bdef = std::max(bdef, std::abs(sol.varpi[std::size_t(i)].eval(0)));
    }
    sol.boundary_defect = bdef;
    sol.sigma_min = rh_sigma_min(p.n, p.F, std::min(p.band, 64));
    return sol;
}

Eigen::MatrixXcd rh_homogeneous_system(int n, const Eigen::MatrixXcd& F, int band) {
    // Unknowns: holomorphic coefficients c^0_0..band, c^1_0..band, ...,
    // c^n_0..band.  The varpi components are eliminated exactly:
    //   varpi_i = zeta conj(f^j) F_{jb i} + h_i(zeta),  h_i(0) = 0,
    // and the boundary conditions become linear relations on the c's.  The
    // conjugations make the system real-linear, so rows come in pairs acting
    // on (c, conj(c)); we assemble the realified matrix directly.
    const int nc = (n + 1) * (band + 1);
    std::vector<Eigen::RowVectorXcd> rows_c;  // pairs (A, B): A c + B conj(c) = 0
    std::vector<Eigen::RowVectorXcd> rows_cb;
    auto idx = [&](int fn, int k) { return fn * (band + 1) + k; };
    auto push = [&](const Eigen::RowVectorXcd& A, const Eigen::RowVectorXcd& B) {
        rows_c.push_back(A);
        rows_cb.push_back(B);
    };
    Eigen::RowVectorXcd Z = Eigen::RowVectorXcd::Zero(nc);

    // f^0: Re(f^0/zeta)|_{S^1} = 0 -> c^0_{m+1} + conj(c^0_{1-m}) = 0 for all m
    for (int m = 0; m + 1 <= band; ++m) {
        Eigen::RowVectorXcd A = Z, B = Z;
        A(idx(0, m + 1)) = 1;
        if (1 - m >= 0) B(idx(0, 1 - m)) = 1;
        push(A, B);
    }
    {
        Eigen::RowVectorXcd A = Z, B = Z;  // f^0(0) = 0
        A(idx(0, 0)) = 1;
        push(A, B);
        A = Z;
        for (int k = 0; k <= band; ++k) A(idx(0, k)) = 1;  // f^0(1) = 0
        push(A, Z);
    }
    // f^i blocks: boundary modes of zeta conj(f^j) F must vanish for m <= 0
    for (int k = 1; k <= band; ++k) {
        for (int i = 0; i < n; ++i) {
            Eigen::RowVectorXcd B = Z;
            for (int j = 0; j < n; ++j) B(idx(j + 1, k)) = F(j, i);
            push(Z, B);
        }
    }
    for (int i = 0; i < n; ++i) {  // f^i(1) = 0
        Eigen::RowVectorXcd A = Z;
        for (int k = 0; k <= band; ++k) A(idx(i + 1, k)) = 1;
        push(A, Z);
    }

    // realify: unknowns (Re c, Im c); each complex row gives two real rows
    Eigen::MatrixXcd M(2 * int(rows_c.size()), 2 * nc);
    M.setZero();
    for (std::size_t r = 0; r < rows_c.size(); ++r) {
        for (int j = 0; j < nc; ++j) {
            Cx A = rows_c[r](j), B = rows_cb[r](j);
            // (A c + B conj c) as 2x2 real block on (Re c, Im c)
            M(2 * long(r), 2 * j) = A.real() + B.real();
            M(2 * long(r), 2 * j + 1) = -A.imag() + B.imag();
            M(2 * long(r) + 1, 2 * j) = A.imag() + B.imag();
            M(2 * long(r) + 1, 2 * j + 1) = A.real() - B.real();
        }
    }
    return M;
}

double rh_sigma_min(int n, const Eigen::MatrixXcd& F, int band) {
    Eigen::MatrixXcd M = rh_homogeneous_system(n, F, band);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(M);
    const auto& sv = svd.singularValues();
    return sv.size() ? sv(sv.size() - 1) : 0.0;
}

}  // namespace twf::disk
