#include "twistorfill/rep.hpp"

#include <stdexcept>

namespace twf::rep {

std::vector<int> Irrep::weights() const {
    std::vector<int> w;
    w.reserve(K + 1);
    for (int m = K; m >= -K; m -= 2) w.push_back(m);
    return w;
}

ProductRep::ProductRep(int K_, int L_, bool odd) : K(K_), L(L_), allow_odd(odd) {
    if (K < 0 || L < 0) throw std::invalid_argument("ProductRep: K,L must be nonnegative");
    if (!allow_odd && (K + L) % 2 != 0)
        throw std::invalid_argument("ProductRep: K+L must be even for an Sp1Sp1 representation");
}

std::vector<std::pair<int, int>> ProductRep::weight_basis() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(dim());
    for (int k = K; k >= -K; k -= 2)
        for (int l = L; l >= -L; l -= 2) out.emplace_back(k, l);
    return out;
}

std::vector<std::pair<int, int>> ProductRep::line(int c) const {
    std::vector<std::pair<int, int>> out;
    for (int k = K; k >= -K; k -= 2) {
        int l = c - k;
        if (l >= -L && l <= L && (l - L) % 2 == 0) out.emplace_back(k, l);
    }
    return out;
}

int ProductRep::index_of(int k, int l) const {
    if (!valid(k, l)) return -1;
    int ik = (K - k) / 2;
    int il = (L - l) / 2;
    return ik * (L + 1) + il;
}

long long x_coeff(int K, int m) {
    return static_cast<long long>((K - m) / 2) * ((K + m) / 2 + 1);
}

LadderImage apply_gen(const ProductRep& rep, Gen g, int k, int l) {
    switch (g) {
        case Gen::H1: return {k, l, k};
        case Gen::H2: return {k, l, l};
        case Gen::Y1: return rep.valid(k - 2, l) ? LadderImage{k - 2, l, 1} : LadderImage{};
        case Gen::Y2: return rep.valid(k, l - 2) ? LadderImage{k, l - 2, 1} : LadderImage{};
        case Gen::X1:
            return rep.valid(k + 2, l) ? LadderImage{k + 2, l, x_coeff(rep.K, k)} : LadderImage{};
        case Gen::X2:
            return rep.valid(k, l + 2) ? LadderImage{k, l + 2, x_coeff(rep.L, l)} : LadderImage{};
    }
    return {};
}

SparseMatQ ladder_matrix(const ProductRep& rep, Gen g) {
    SparseMatQ m;
    m.rows = m.cols = rep.dim();
    for (auto [k, l] : rep.weight_basis()) {
        LadderImage im = apply_gen(rep, g, k, l);
        if (im.coeff == 0) continue;
        m.triplets.push_back({rep.index_of(im.k, im.l), rep.index_of(k, l), Rat(im.coeff)});
    }
    return m;
}

std::vector<std::vector<Rat>> SparseMatQ::dense() const {
    std::vector<std::vector<Rat>> d(rows, std::vector<Rat>(cols, Rat(0)));
    for (const auto& t : triplets) d[t.r][t.c] += t.v;
    return d;
}

std::vector<std::vector<Rat>> commutator(const SparseMatQ& a, const SparseMatQ& b) {
    auto da = a.dense();
    auto db = b.dense();
    int n = a.rows;
    std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat acc(0);
            for (int m = 0; m < n; ++m) acc += da[i][m] * db[m][j] - db[i][m] * da[m][j];
            out[i][j] = acc;
        }
    return out;
}

std::vector<int> clebsch_gordan(int K, int L) {
    if (K < 0 || L < 0) throw std::invalid_argument("clebsch_gordan: negative highest weight");
    std::vector<int> js;
    for (int J = K + L; J >= std::abs(K - L); J -= 2) js.push_back(J);
    return js;
}

int hom_so3_multiplicity(int K, int L, int J) {
    if ((K + L) % 2 != 0) throw std::invalid_argument("hom_so3_multiplicity: K+L must be even");
    if (J < 0) return 0;
    if ((J - (K + L)) % 2 != 0) return 0;
    return (J >= std::abs(K - L) && J <= K + L) ? 1 : 0;
}

namespace {
Rat factorial_ratio(int num, int den) {
    // num! / den!
    Rat r(1);
    for (int t = den + 1; t <= num; ++t) r *= t;
    for (int t = num + 1; t <= den; ++t) r /= t;
    return r;
}

// per-factor tau on sigma^K with v_m = e1^a e2^b / a!:  tau(v_m) = (-1)^b (b!/a!) v_{-m}
Rat tau_factor(int K, int m) {
    int a = (K + m) / 2;
    int b = (K - m) / 2;
    Rat r = factorial_ratio(b, a);
    return (b % 2 == 0) ? r : -r;
}
}  // namespace

Rat real_structure_coeff(const ProductRep& rep, int k, int l) {
    if ((rep.K + rep.L) % 2 != 0)
        throw std::invalid_argument("real_structure: requires K+L even");
    if (!rep.valid(k, l)) throw std::out_of_range("real_structure_coeff: invalid weight");
    return tau_factor(rep.K, k) * tau_factor(rep.L, l);
}

RealStructure real_structure(const ProductRep& rep) {
    RealStructure rs;
    rs.rep = rep;
    int n = rep.dim();
    rs.matrix.assign(n, std::vector<Rat>(n, Rat(0)));
    for (auto [k, l] : rep.weight_basis()) {
        int j = rep.index_of(k, l);
        int i = rep.index_of(-k, -l);
        rs.matrix[i][j] = real_structure_coeff(rep, k, l);
    }
    return rs;
}

Rat g0_coeff(const ProductRep& rep, int k, int l) {
    if ((rep.K + rep.L) % 2 != 0) throw std::invalid_argument("g0_coeff: requires K+L even");
    if (!rep.valid(k, l)) throw std::out_of_range("g0_coeff: invalid weight");
    // g0 e1 = i e2, g0 e2 = i e1 on each factor:
    // rho_K(g0) v_m = i^K (b!/a!) v_{-m}; the product of the i^K factors is
    // i^{K+L} = (-1)^{(K+L)/2}, real since K+L is even.
    int a1 = (rep.K + k) / 2, b1 = (rep.K - k) / 2;
    int a2 = (rep.L + l) / 2, b2 = (rep.L - l) / 2;
    Rat r = factorial_ratio(b1, a1) * factorial_ratio(b2, a2);
    return (((rep.K + rep.L) / 2) % 2 == 0) ? r : -r;
}

}  // namespace twf::rep
