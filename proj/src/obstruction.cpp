#include "twistorfill/obstruction.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <set>

namespace twf::fill {

using calc::EquivariantTensor;
using calc::Fiber;
using calc::Key;
using rep::ProductRep;

const char* rep_case_name(RepCase c) {
    switch (c) {
        case RepCase::KGeL: return "K>=L";
        case RepCase::KEqLm2: return "K==L-2";
        case RepCase::KLeLm4: return "K<=L-4";
    }
    return "?";
}

RepCase classify_rep(int K, int L) {
    if (K >= L) return RepCase::KGeL;
    if (K == L - 2) return RepCase::KEqLm2;
    return RepCase::KLeLm4;
}

std::vector<TangentCondition> tangent_c_plus(int K, int L) {
    if ((K + L) % 2 != 0) throw std::invalid_argument("tangent_c_plus: K+L must be even");
    ProductRep r(K, L);
    std::vector<TangentCondition> out;
    switch (classify_rep(K, L)) {
        case RepCase::KGeL:
            break;
        case RepCase::KEqLm2:
            if (r.valid(-K + 2, K + 2)) out.push_back({-K + 2, K + 2, calc::kE1bE1});
            break;
        case RepCase::KLeLm4:
            if (r.valid(-K, K + 4)) {
                out.push_back({-K, K + 4, calc::kE1bE1});
                out.push_back({-K, K + 4, calc::kE1bE2});
                out.push_back({-K, K + 4, calc::kE2bE1});
            }
            break;
    }
    return out;
}

namespace {

struct SweepEq {
    // coeff * w'(src) = value, from the phi entry at (basis,k,l)
    int src_k, src_l;
    bool src_valid;
    CQ coeff;
};

// hessian stencil: basis -> (source shift, coefficient)
struct Stencil {
    int basis;
    int dk, dl;
    CQ coeff;
};
const std::array<Stencil, 4> kHessStencil = {{
    {calc::kE1bE1, -4, 0, CQ(0, -1)},
    {calc::kE1bE2, -2, -2, CQ(0, 1)},
    {calc::kE2bE1, -2, -2, CQ(0, -1)},
    {calc::kE2bE2, 0, -4, CQ(0, 1)},
}};

}  // namespace

HessianSolve solve_hessian_negative(const EquivariantTensor& phi, const Tolerance& tol) {
    if (phi.fiber() != Fiber::CRDeform)
        throw ConstraintViolation("solve_hessian_negative: input is not a CR deformation");
    phi.check();
    // preconditions
    {
        EquivariantTensor lc = calc::levi_contract(phi);
        EquivariantTensor db = calc::dbar_h(phi);
        double worst = std::max(lc.max_abs(), db.max_abs());
        bool bad = tol.exact ? (!lc.empty() || !db.empty()) : worst > tol.eps;
        if (bad)
            throw ConstraintViolation(
                "solve_hessian_negative: phi -| F = 0 / dbar_H phi = 0 violated (|.| = " +
                std::to_string(worst) + ")");
    }

    HessianSolve out;
    out.f = EquivariantTensor(Fiber::Functions);
    const bool compatible = calc::is_tau_compatible(phi);

    for (auto [K, L] : phi.reps()) {
        ProductRep r(K, L);
        RepVerdict verdict{K, L, classify_rep(K, L), {}};
        for (const auto& cond : tangent_c_plus(K, L)) {
            CQ v = phi.at({K, L, cond.k, cond.l, cond.basis});
            if (tol.blocks(v)) verdict.blocking.push_back({K, L, cond.k, cond.l, cond.basis, v});
        }

        // staircase sweep along k+l = 4: every negative-weight equation has at
        // most one unknown (the f coefficient at its stencil source)
        std::map<std::pair<int, int>, CQ> fneg;
        std::set<std::pair<int, int>> seen;
        for (auto [k, l] : r.line(4)) {
            for (const auto& st : kHessStencil) {
                auto w = calc::s1_weight(Fiber::CRDeform, st.basis, k);
                if (!w || *w >= 0) continue;
                CQ value = phi.at({K, L, k, l, st.basis});
                int sk = k + st.dk, sl = l + st.dl;
                if (!r.valid(sk, sl)) continue;  // obstruction row; canonical check above
                CQ cand = value / st.coeff;
                auto key = std::make_pair(sk, sl);
                if (seen.count(key)) {
                    if (fneg[key] != cand)
                        throw ConstraintViolation(
                            "solve_hessian_negative: inconsistent staircase (preconditions "
                            "violated numerically)");
                } else {
                    seen.insert(key);
                    fneg[key] = cand;
                }
            }
        }
        // assemble f: negative part from the sweep, positive by reality,
        // invariant part zero
        for (const auto& [pos, v] : fneg) {
            out.f.add({K, L, pos.first, pos.second, 0}, v);
            // reality: w(k,l) = s(k,l) conj(w(-k,-l))
            CQ mirror = CQ(rep::real_structure_coeff(r, -pos.first, -pos.second)) * v.conj();
            out.f.add({K, L, -pos.first, -pos.second, 0}, mirror);
        }
        out.report.reps.push_back(std::move(verdict));
    }
    out.report.solvable = std::all_of(out.report.reps.begin(), out.report.reps.end(),
                                      [](const RepVerdict& v) { return v.solvable(); });
    if (out.report.solvable && compatible && !calc::is_tau_anti_invariant(out.f))
        throw std::logic_error("solve_hessian_negative: tau-compatibility propagation failed");
    return out;
}

CoulombSplit coulomb_decompose(const EquivariantTensor& phi, const Tolerance& tol) {
    if (phi.fiber() != Fiber::CRDeform)
        throw ConstraintViolation("coulomb_decompose: input is not a CR deformation");
    phi.check();
    {
        EquivariantTensor lc = calc::levi_contract(phi);
        EquivariantTensor db = calc::dbar_h(phi);
        double worst = std::max(lc.max_abs(), db.max_abs());
        bool bad = tol.exact ? (!lc.empty() || !db.empty()) : worst > tol.eps;
        if (bad) throw ConstraintViolation("coulomb_decompose: constrained-space precondition");
    }

    CoulombSplit out;
    out.phi_w = EquivariantTensor(Fiber::CRDeform);
    for (auto [K, L] : phi.reps()) {
        ProductRep r(K, L);
        // columns: f coefficients with S^1 weight (= k) <= 0
        std::vector<std::pair<int, int>> cols;
        for (auto [k, l] : r.line(0))
            if (k <= 0) cols.emplace_back(k, l);
        std::vector<std::tuple<int, int, int>> rows;  // basis, k, l
        for (auto [k, l] : r.line(4))
            for (int b = 0; b < 4; ++b) rows.emplace_back(b, k, l);

        Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(long(rows.size()), long(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            auto [sk, sl] = cols[j];
            for (const auto& st : kHessStencil) {
                int k = sk - st.dk, l = sl - st.dl;
                if (!r.valid(k, l)) continue;
                auto it = std::find(rows.begin(), rows.end(), std::make_tuple(st.basis, k, l));
                A(it - rows.begin(), long(j)) = st.coeff.to_complex();
            }
        }
        Eigen::VectorXcd b(long(rows.size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto [bs, k, l] = rows[i];
            b(long(i)) = phi.at({K, L, k, l, bs}).to_complex();
        }
        Eigen::VectorXcd g = cols.empty()
                                 ? Eigen::VectorXcd()
                                 : A.completeOrthogonalDecomposition().solve(b).eval();
        Eigen::VectorXcd res = cols.empty() ? b : (b - A * g).eval();
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.f.add({K, L, cols[j].first, cols[j].second, 0}, from_complex(g(long(j))));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto [bs, k, l] = rows[i];
            if (std::abs(res(long(i))) > 0) out.phi_w.add({K, L, k, l, bs}, from_complex(res(long(i))));
        }
        if (cols.size()) {
            Eigen::VectorXcd orth = A.adjoint() * res;
            out.orthogonality = std::max(out.orthogonality, orth.cwiseAbs().maxCoeff());
        }
    }
    // residual of the split (exact by construction up to double rounding)
    EquivariantTensor recon = calc::complex_hessian(out.f);
    recon += out.phi_w;
    recon *= CQ(-1);
    recon += phi;
    out.residual = recon.max_abs();
    return out;
}

Family family_from_string(const std::string& s) {
    if (s == "B+" || s == "b+" || s == "Bplus") return Family::BPlus;
    if (s == "B-" || s == "b-" || s == "Bminus") return Family::BMinus;
    if (s == "M+" || s == "m+" || s == "Mplus") return Family::MPlus;
    if (s == "M-" || s == "m-" || s == "Mminus") return Family::MMinus;
    throw std::invalid_argument("unknown family flag '" + s + "' (expected B+, B-, M+, M-)");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::BPlus: return "B+";
        case Family::BMinus: return "B-";
        case Family::MPlus: return "M+";
        case Family::MMinus: return "M-";
    }
    return "?";
}

long long TangentSpaceDescription::total_dim() const {
    long long t = 0;
    for (const auto& c : components) t += c.dim * c.multiplicity;
    return t;
}

TangentSpaceDescription tangent_bg_dims(Family fam, int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("tangent_bg_dims: cutoff must be nonnegative");
    TangentSpaceDescription out{fam, cutoff, {}};
    const bool plus = (fam == Family::BPlus || fam == Family::MPlus);
    const bool metric_only = (fam == Family::MPlus || fam == Family::MMinus);
    auto push = [&](const char* part, int K, int L) {
        int mult = rep::hom_so3_multiplicity(K, L, 4);
        if (mult == 0) return;
        out.components.push_back(
            {part, K, L, mult, static_cast<long long>(K + 1) * (L + 1)});
    };
    for (int t = 0; t <= cutoff; ++t) {
        // gdot on V^{t+4,t} (self-dual side), mirrored for the anti-self-dual one
        int K = plus ? t + 4 : t;
        int L = plus ? t : t + 4;
        push("gdot", K, L);
    }
    if (!metric_only) {
        for (int t = 0; t <= cutoff; ++t)
            for (int d = 0; d <= 4; d += 2) {
                int K = plus ? t + d : t;
                int L = plus ? t : t + d;
                push("Qdot", K, L);
            }
    }
    return out;
}

ContactField contact_vector_field(const EquivariantTensor& f) {
    ContactField out;
    out.reeb_coefficient = f;
    out.horizontal = calc::sharp(calc::dbar_function(f));
    out.horizontal *= CQ(-1);
    return out;
}

EquivariantTensor cr_action(const EquivariantTensor& f) {
    return calc::dbar_field(calc::sharp(calc::dbar_function(f)));
}

}  // namespace twf::fill
