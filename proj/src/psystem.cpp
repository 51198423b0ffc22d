#include "twistorfill/psystem.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <map>

#include "twistorfill/rep.hpp"

namespace twf::fill {

using rep::ProductRep;

namespace {
const CQ kI = CQ::i();

struct Indexer {
    std::vector<SysVar>* vars;
    std::map<std::tuple<std::string, int, int, int>, int> map;
    int add(const std::string& block, int basis, int k, int l) {
        int id = static_cast<int>(vars->size());
        vars->push_back({block, basis, k, l});
        map[{block, basis, k, l}] = id;
        return id;
    }
    int get(const std::string& block, int basis, int k, int l) const {
        auto it = map.find({block, basis, k, l});
        return it == map.end() ? -1 : it->second;
    }
};

// X-ladder coefficients acting on the hom side: (w o X1)(k,l) = x1(k) w(k+2,l)
long long x1c(const ProductRep& r, int k) { return rep::x_coeff(r.K, k); }
long long x2c(const ProductRep& r, int l) { return rep::x_coeff(r.L, l); }
}  // namespace

int PSystem::domain_index(const std::string& block, int basis, int k, int l) const {
    for (std::size_t i = 0; i < domain.size(); ++i)
        if (domain[i].block == block && domain[i].basis == basis && domain[i].k == k &&
            domain[i].l == l)
            return static_cast<int>(i);
    return -1;
}

int PSystem::target_index(const std::string& block, int basis, int k, int l) const {
    for (std::size_t i = 0; i < target.size(); ++i)
        if (target[i].block == block && target[i].basis == basis && target[i].k == k &&
            target[i].l == l)
            return static_cast<int>(i);
    return -1;
}

PSystem build_p_system(int K, int L, bool with_xi2) {
    PSystem sys;
    sys.K = K;
    sys.L = L;
    sys.with_xi2 = with_xi2;
    ProductRep r(K, L);

    Indexer dom{&sys.domain};
    for (auto [k, l] : r.line(4))
        for (int b = 0; b < 4; ++b) dom.add("phi", b, k, l);
    for (auto [k, l] : r.line(2))
        for (int b = 0; b < 2; ++b) dom.add("alpha", b, k, l);
    for (auto [k, l] : r.line(2)) dom.add("xi0", 0, k, l);
    for (auto [k, l] : r.line(0)) dom.add("xi1", 0, k, l);
    if (with_xi2)
        for (auto [k, l] : r.line(0)) dom.add("xi2", 0, k, l);

    Indexer tgt{&sys.target};
    for (auto [k, l] : r.line(6))
        for (int b = 0; b < 2; ++b) tgt.add("psi", b, k, l);
    for (auto [k, l] : r.line(4)) tgt.add("beta", 0, k, l);
    // zeta basis indices follow calc::Fiber::Zeta:
    //   0 eta_e1b, 1 eta_e2b, 2 e1_e1b, 3 e1_e2b, 4 e2_e1b, 5 e2_e2b
    for (auto [k, l] : r.line(4))
        for (int b = 0; b < 2; ++b) tgt.add("zeta", b, k, l);
    for (auto [k, l] : r.line(2))
        for (int b = 2; b < 6; ++b) tgt.add("zeta", b, k, l);

    sys.P = lin::MatQ(static_cast<int>(sys.target.size()), static_cast<int>(sys.domain.size()));
    auto addP = [&](int row, int col, const CQ& v) {
        if (row >= 0 && col >= 0) sys.P(row, col) += v;
    };

    // phi component accessor within the domain: a=phi^1_{1b} (0), b=phi^2_{1b}
    // (1), c=phi^1_{2b} (2), d=phi^2_{2b} (3)
    auto phi_col = [&](int basis, int k, int l) { return dom.get("phi", basis, k, l); };
    // gamma_{ib} = phi^1_{ib} - phi^2_{ib}
    auto add_gamma = [&](int row, int ibar, int k, int l, const CQ& coeff) {
        if (row < 0 || !r.valid(k, l)) return;
        int b1 = (ibar == 1) ? 0 : 2;
        int b2 = (ibar == 1) ? 1 : 3;
        addP(row, phi_col(b1, k, l), coeff);
        addP(row, phi_col(b2, k, l), -coeff);
    };

    // psi^j(k,l) = phi^j_{2b}(k-2,l) - phi^j_{1b}(k,l-2)
    for (auto [k, l] : r.line(6))
        for (int j = 0; j < 2; ++j) {
            int row = tgt.get("psi", j, k, l);
            addP(row, phi_col(j == 0 ? 2 : 3, k - 2, l), CQ(1));
            addP(row, phi_col(j == 0 ? 0 : 1, k, l - 2), CQ(-1));
        }

    // beta(k,l) = alpha_{2b}(k-2,l) - alpha_{1b}(k,l-2) + 2 phi^2_{1b}(k,l)
    for (auto [k, l] : r.line(4)) {
        int row = tgt.get("beta", 0, k, l);
        addP(row, dom.get("alpha", 1, k - 2, l), CQ(1));
        addP(row, dom.get("alpha", 0, k, l - 2), CQ(-1));
        addP(row, phi_col(1, k, l), CQ(2));
    }

    // eta rows of zeta (iota_R zeta convention):
    //   z_{ib}(k,l) = -xi0(src Y_i) + i wt(gamma_{ib}) gamma_{ib}(k,l) - 2i phi^1_{ib}(k,l)
    // with wt the S^1 weight of the entry (k - 2 for 1b, k for 2b).
    for (auto [k, l] : r.line(4)) {
        int row1 = tgt.get("zeta", 0, k, l);
        int row2 = tgt.get("zeta", 1, k, l);
        addP(row1, dom.get("xi0", 0, k - 2, l), CQ(-1));
        addP(row2, dom.get("xi0", 0, k, l - 2), CQ(-1));
        add_gamma(row1, 1, k, l, kI * CQ(k - 2));
        add_gamma(row2, 2, k, l, kI * CQ(k));
        addP(row1, phi_col(0, k, l), CQ(0, -2));
        addP(row2, phi_col(2, k, l), CQ(0, -2));
    }

    // horizontal rows:
    //   zeta[e^1,ib](k,l) = -xi1(src Y_i) + i d_{i1} xi0(k,l) - (gamma_{ib} o X1)(k,l) + alpha_{ib}(k,l)
    //   zeta[e^2,ib](k,l) = -xi2(src Y_i) - i d_{i2} xi0(k,l) - (gamma_{ib} o X2)(k,l) - alpha_{ib}(k,l)
    for (auto [k, l] : r.line(2)) {
        for (int ibar = 1; ibar <= 2; ++ibar) {
            int sk = (ibar == 1) ? k - 2 : k;
            int sl = (ibar == 1) ? l : l - 2;
            int alpha_b = ibar - 1;
            int rowE1 = tgt.get("zeta", ibar == 1 ? 2 : 3, k, l);
            addP(rowE1, dom.get("xi1", 0, sk, sl), CQ(-1));
            if (ibar == 1) addP(rowE1, dom.get("xi0", 0, k, l), kI);
            add_gamma(rowE1, ibar, k + 2, l, CQ(-x1c(r, k)));
            addP(rowE1, dom.get("alpha", alpha_b, k, l), CQ(1));

            int rowE2 = tgt.get("zeta", ibar == 1 ? 4 : 5, k, l);
            if (with_xi2) addP(rowE2, dom.get("xi2", 0, sk, sl), CQ(-1));
            if (ibar == 2) addP(rowE2, dom.get("xi0", 0, k, l), -kI);
            add_gamma(rowE2, ibar, k, l + 2, CQ(-x2c(r, l)));
            addP(rowE2, dom.get("alpha", alpha_b, k, l), CQ(-1));
        }
    }

    // Levi constraint rows phi^1_{2b} + phi^2_{1b} = 0 over the domain
    {
        auto positions = r.line(4);
        sys.constraints =
            lin::MatQ(static_cast<int>(positions.size()), static_cast<int>(sys.domain.size()));
        int row = 0;
        for (auto [k, l] : positions) {
            sys.constraints(row, phi_col(2, k, l)) = CQ(1);
            sys.constraints(row, phi_col(1, k, l)) = CQ(1);
            ++row;
        }
    }

    // compatibility operator rows
    Indexer crow{&sys.compat_rows};
    for (auto [k, l] : r.line(6)) crow.add("eta", 0, k, l);
    for (auto [k, l] : r.line(4)) {
        crow.add("e1", 0, k, l);
        crow.add("e2", 0, k, l);
    }
    sys.compat =
        lin::MatQ(static_cast<int>(sys.compat_rows.size()), static_cast<int>(sys.target.size()));
    auto addC = [&](int row, int col, const CQ& v) {
        if (row >= 0 && col >= 0) sys.compat(row, col) += v;
    };
    for (auto [k, l] : r.line(6)) {
        int row = crow.get("eta", 0, k, l);
        addC(row, tgt.get("zeta", 1, k - 2, l), CQ(-1));
        addC(row, tgt.get("zeta", 0, k, l - 2), CQ(1));
        // psi pairing with i times the S^1 weight of each psi entry
        addC(row, tgt.get("psi", 0, k, l), kI * CQ(k - 4));
        addC(row, tgt.get("psi", 1, k, l), -kI * CQ(k - 2));
    }
    for (auto [k, l] : r.line(4)) {
        int row1 = crow.get("e1", 0, k, l);
        addC(row1, tgt.get("zeta", 3, k - 2, l), CQ(-1));
        addC(row1, tgt.get("zeta", 2, k, l - 2), CQ(1));
        addC(row1, tgt.get("zeta", 1, k, l), kI);
        addC(row1, tgt.get("psi", 0, k + 2, l), CQ(-x1c(r, k)));
        addC(row1, tgt.get("psi", 1, k + 2, l), CQ(x1c(r, k)));
        addC(row1, tgt.get("beta", 0, k, l), CQ(1));

        int row2 = crow.get("e2", 0, k, l);
        addC(row2, tgt.get("zeta", 5, k - 2, l), CQ(-1));
        addC(row2, tgt.get("zeta", 4, k, l - 2), CQ(1));
        addC(row2, tgt.get("zeta", 0, k, l), kI);
        addC(row2, tgt.get("psi", 0, k, l + 2), CQ(-x2c(r, l)));
        addC(row2, tgt.get("psi", 1, k, l + 2), CQ(x2c(r, l)));
        addC(row2, tgt.get("beta", 0, k, l), CQ(-1));
    }
    return sys;
}

namespace {
// restrict columns of P to the kernel of the constraint rows
lin::MatQ constrained_p(const PSystem& sys, int* dom_dim) {
    auto basis = lin::kernel_basis(sys.constraints);
    *dom_dim = static_cast<int>(basis.size());
    lin::MatQ M(sys.P.rows(), *dom_dim);
    for (int j = 0; j < *dom_dim; ++j)
        for (int i = 0; i < sys.P.rows(); ++i) {
            CQ acc;
            for (int c = 0; c < sys.P.cols(); ++c)
                if (!basis[std::size_t(j)][std::size_t(c)].is_zero() &&
                    !sys.P(i, c).is_zero())
                    acc += sys.P(i, c) * basis[std::size_t(j)][std::size_t(c)];
            M(i, j) = acc;
        }
    return M;
}

Eigen::MatrixXcd to_eigen(const lin::MatQ& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).to_complex();
    return e;
}

// gap between the smallest singular value counted as nonzero (given the exact
// rank) and the largest one below it
double svd_gap(const Eigen::MatrixXcd& m, int exact_rank) {
    if (m.rows() == 0 || m.cols() == 0) return std::numeric_limits<double>::infinity();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (exact_rank == 0) return std::numeric_limits<double>::infinity();
    double kept = sv(exact_rank - 1);
    if (exact_rank >= sv.size()) return std::numeric_limits<double>::infinity();
    double dropped = sv(exact_rank);
    return dropped == 0 ? std::numeric_limits<double>::infinity() : kept / dropped;
}
}  // namespace

RankCertificate verify_p_surjectivity(int K, int L) {
    PSystem sys = build_p_system(K, L, /*with_xi2=*/false);
    RankCertificate cert;
    cert.K = K;
    cert.L = L;
    cert.dim_target = static_cast<int>(sys.target.size());

    lin::MatQ Pc = constrained_p(sys, &cert.dim_domain);
    cert.rank_p = lin::rank(Pc);
    int rank_c = lin::rank(sys.compat);
    cert.dim_ker_compat = cert.dim_target - rank_c;
    cert.cp_identity = (sys.compat * Pc).is_zero();
    cert.surjective_onto_compatible = cert.cp_identity && cert.rank_p == cert.dim_ker_compat;
    cert.svd_gap_p = svd_gap(to_eigen(Pc), cert.rank_p);
    cert.svd_gap_compat = svd_gap(to_eigen(sys.compat), rank_c);
    return cert;
}

int phi_b_kernel_dim(int K, int L) {
    ProductRep r(K, L);
    auto positions = r.line(4);
    if (positions.empty()) return 0;
    std::map<std::pair<int, std::pair<int, int>>, int> col;
    for (auto p : positions)
        for (int b = 0; b < 4; ++b) col[{b, p}] = static_cast<int>(col.size());
    std::vector<std::vector<std::pair<int, CQ>>> rows;
    // Levi and P^1 projection rows
    for (auto p : positions) {
        rows.push_back({{col[{2, p}], CQ(1)}, {col[{1, p}], CQ(1)}});
        rows.push_back({{col[{0, p}], CQ(1)},
                        {col[{2, p}], CQ(1)},
                        {col[{1, p}], CQ(-1)},
                        {col[{3, p}], CQ(-1)}});
    }
    // dbar rows
    for (auto [k, l] : r.line(6))
        for (int j = 0; j < 2; ++j) {
            std::vector<std::pair<int, CQ>> row;
            if (r.valid(k - 2, l)) row.push_back({col[{j == 0 ? 2 : 3, {k - 2, l}}], CQ(1)});
            if (r.valid(k, l - 2)) row.push_back({col[{j == 0 ? 0 : 1, {k, l - 2}}], CQ(-1)});
            if (!row.empty()) rows.push_back(std::move(row));
        }
    lin::MatQ M(static_cast<int>(rows.size()), static_cast<int>(col.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (auto& [c, v] : rows[i]) M(static_cast<int>(i), c) += v;
    return static_cast<int>(col.size()) - lin::rank(M);
}

namespace {
// weight-graded H^1 of the three-term complex  C0 --d0--> C1 --d1--> C2 with
// plain dbar differentials; positions parameterized by the caller.
struct PlainComplex {
    // columns of C1: (component ib in {1,2}, k, l); C0: (k,l); C2: (k,l)
    std::vector<std::tuple<int, int, int>> c1;
    std::vector<std::pair<int, int>> c0, c2;
    // weight of a C1 column
    std::function<int(int, int)> weight_of;  // (ib, k)
};

std::vector<CohPiece> graded_h1(const ProductRep& r, int u1_c0, int s1_off_c0) {
    // complex: sections of a pull-back line bundle with u1 weight u1_c0 and a
    // single S^1 offset; dbar has no curvature couplings.
    auto pos0 = r.line(u1_c0);
    auto pos1 = r.line(u1_c0 + 2);
    auto pos2 = r.line(u1_c0 + 4);
    std::map<std::pair<int, int>, int> i0, i2;
    for (auto p : pos0) i0[p] = static_cast<int>(i0.size());
    for (auto p : pos2) i2[p] = static_cast<int>(i2.size());
    std::map<std::tuple<int, int, int>, int> i1;
    for (auto p : pos1) i1[{1, p.first, p.second}] = static_cast<int>(i1.size());
    for (auto p : pos1) i1[{2, p.first, p.second}] = static_cast<int>(i1.size());

    std::map<int, std::vector<int>> cols_by_weight;
    for (auto& [key, j] : i1) {
        auto [ib, k, l] = key;
        int w = (ib == 1 ? k - 2 : k) + s1_off_c0;
        cols_by_weight[w].push_back(j);
    }
    // full d1 and d0 as exact matrices
    lin::MatQ d1(static_cast<int>(i2.size()), static_cast<int>(i1.size()));
    for (auto& [p, row] : i2) {
        auto [k, l] = p;
        auto it = i1.find({2, k - 2, l});
        if (it != i1.end()) d1(row, it->second) += CQ(1);
        it = i1.find({1, k, l - 2});
        if (it != i1.end()) d1(row, it->second) -= CQ(1);
    }
    lin::MatQ d0(static_cast<int>(i1.size()), static_cast<int>(i0.size()));
    for (auto& [p, cidx] : i0) {
        auto [k, l] = p;
        auto it = i1.find({1, k + 2, l});
        if (it != i1.end()) d0(it->second, cidx) += CQ(1);
        it = i1.find({2, k, l + 2});
        if (it != i1.end()) d0(it->second, cidx) += CQ(1);
    }
    std::vector<CohPiece> out;
    for (auto& [w, cols] : cols_by_weight) {
        if (w < 0) continue;
        lin::MatQ d1w(d1.rows(), static_cast<int>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (int i = 0; i < d1.rows(); ++i) d1w(i, static_cast<int>(j)) = d1(i, cols[j]);
        int ker = static_cast<int>(cols.size()) - lin::rank(d1w);
        // image of d0 restricted to matching-weight sources (weight = k + off)
        std::vector<int> cols0;
        for (auto& [p, cidx] : i0)
            if (p.first + s1_off_c0 == w) cols0.push_back(cidx);
        lin::MatQ d0w(static_cast<int>(cols.size()), static_cast<int>(cols0.size()));
        for (std::size_t j = 0; j < cols0.size(); ++j)
            for (std::size_t i = 0; i < cols.size(); ++i)
                d0w(static_cast<int>(i), static_cast<int>(j)) = d0(cols[i], cols0[j]);
        int im = lin::rank(d0w);
        if (ker - im > 0) out.push_back({w, ker - im});
    }
    return out;
}
}  // namespace

std::vector<CohPiece> h1_nonneg_L(int K, int L) {
    ProductRep r(K, L);
    return graded_h1(r, 2, 0);  // sigma: u1 weight 2, S1 offset 0
}

std::vector<CohPiece> h1_nonneg_omega1_L(int K, int L, int which_p1) {
    ProductRep r(K, L);
    // e^1 sigma: u1 0, offset +2; e^2 sigma: u1 0, offset 0
    return which_p1 == 1 ? graded_h1(r, 0, 2) : graded_h1(r, 0, 0);
}

std::vector<CohPiece> omega_prime_L_kernel(int K, int L) {
    PSystem sys = build_p_system(K, L, /*with_xi2=*/true);
    ProductRep r(K, L);
    // xi columns only, graded by S^1 weight (xi0: k, xi1: k+2, xi2: k)
    std::map<int, std::vector<int>> cols_by_weight;
    for (std::size_t j = 0; j < sys.domain.size(); ++j) {
        const auto& v = sys.domain[j];
        if (v.block == "xi0" || v.block == "xi2")
            cols_by_weight[v.k].push_back(static_cast<int>(j));
        else if (v.block == "xi1")
            cols_by_weight[v.k + 2].push_back(static_cast<int>(j));
    }
    std::vector<CohPiece> out;
    for (auto& [w, cols] : cols_by_weight) {
        lin::MatQ M(sys.P.rows(), static_cast<int>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (int i = 0; i < sys.P.rows(); ++i) M(i, static_cast<int>(j)) = sys.P(i, cols[j]);
        int ker = static_cast<int>(cols.size()) - lin::rank(M);
        if (ker > 0) out.push_back({w, ker});
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.weight < b.weight; });
    return out;
}

}  // namespace twf::fill
