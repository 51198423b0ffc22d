#include <doctest.h>

#include <random>

#include "twistorfill/rep.hpp"

using namespace twf;
using namespace twf::rep;

namespace {
std::vector<std::vector<Rat>> dense_product(const std::vector<std::vector<Rat>>& a,
                                            const std::vector<std::vector<Rat>>& b) {
    std::size_t n = a.size();
    std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat acc(0);
            for (std::size_t m = 0; m < n; ++m) acc += a[i][m] * b[m][j];
            out[i][j] = acc;
        }
    return out;
}
}  // namespace

TEST_CASE("weight basis enumeration") {
    ProductRep v11(1, 1);
    CHECK(v11.weight_basis() ==
          std::vector<std::pair<int, int>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    ProductRep v00(0, 0);
    CHECK(v00.weight_basis() == std::vector<std::pair<int, int>>{{0, 0}});
    ProductRep v40(4, 0);
    CHECK(v40.weight_basis() ==
          std::vector<std::pair<int, int>>{{4, 0}, {2, 0}, {0, 0}, {-2, 0}, {-4, 0}});
    // dimension consistency over a sweep
    for (int K = 0; K <= 12; ++K)
        for (int L = K % 2; L <= 12; L += 2) {
            ProductRep r(K, L);
            CHECK(int(r.weight_basis().size()) == r.dim());
        }
}

TEST_CASE("ladder matrices: eigenvalues and annihilation") {
    ProductRep r(2, 0);
    // H1 eigenvalue at (2,0)
    auto im = apply_gen(r, Gen::H1, 2, 0);
    CHECK(im.coeff == 2);
    CHECK(im.k == 2);
    // lowest weight annihilated by Y1
    CHECK(apply_gen(r, Gen::Y1, -2, 0).coeff == 0);
}

TEST_CASE("bracket relations hold exactly") {
    // [X_i,Y_i] = H_i, [H_i,X_i] = 2X_i, [H_i,Y_i] = -2Y_i; factors commute.
    for (auto [K, L] : {std::pair{2, 0}, {3, 1}, {4, 4}, {6, 2}, {5, 5}}) {
        ProductRep r(K, L);
        auto H1 = ladder_matrix(r, Gen::H1), H2 = ladder_matrix(r, Gen::H2);
        auto X1 = ladder_matrix(r, Gen::X1), X2 = ladder_matrix(r, Gen::X2);
        auto Y1 = ladder_matrix(r, Gen::Y1), Y2 = ladder_matrix(r, Gen::Y2);
        CHECK(commutator(X1, Y1) == H1.dense());
        CHECK(commutator(X2, Y2) == H2.dense());
        {
            auto lhs = commutator(H1, X1);
            auto rhs = X1.dense();
            for (auto& row : rhs)
                for (auto& v : row) v *= 2;
            CHECK(lhs == rhs);
        }
        {
            auto lhs = commutator(H1, Y1);
            auto rhs = Y1.dense();
            for (auto& row : rhs)
                for (auto& v : row) v *= -2;
            CHECK(lhs == rhs);
        }
        // cross-factor operators commute
        auto zero = std::vector<std::vector<Rat>>(std::size_t(r.dim()),
                                                  std::vector<Rat>(std::size_t(r.dim()), Rat(0)));
        CHECK(commutator(X1, Y2) == zero);
        CHECK(commutator(X1, X2) == zero);
    }
}

TEST_CASE("[X2,Y2] acts as l on each weight line") {
    // derived oracle: assemble the matrices and compare against diagonal H2
    ProductRep r(4, 6);
    auto c = commutator(ladder_matrix(r, Gen::X2), ladder_matrix(r, Gen::Y2));
    for (auto [k, l] : r.weight_basis()) {
        int i = r.index_of(k, l);
        CHECK(c[std::size_t(i)][std::size_t(i)] == Rat(l));
    }
}

TEST_CASE("clebsch_gordan") {
    CHECK(clebsch_gordan(2, 2) == std::vector<int>{4, 2, 0});  // dims 5+3+1 = 9
    CHECK(clebsch_gordan(7, 0) == std::vector<int>{7});
    CHECK(clebsch_gordan(5, 1) == std::vector<int>{6, 4});  // dims 7+5 = 12

    // dimension identity for all K,L <= 12, against a brute-force weight count
    for (int K = 0; K <= 12; ++K)
        for (int L = 0; L <= 12; ++L) {
            auto js = clebsch_gordan(K, L);
            long long total = 0;
            for (int J : js) total += J + 1;
            CHECK(total == (K + 1) * (L + 1));
            // oracle: multiplicity of diagonal weight m is the number of
            // (k,l) pairs with k+l = m; peeling off one sigma^J per step
            std::map<int, int> mult;
            for (int k = -K; k <= K; k += 2)
                for (int l = -L; l <= L; l += 2) mult[k + l]++;
            std::vector<int> brute;
            for (int m = K + L; m >= 0; m -= 2) {
                while (mult[m] > 0) {
                    brute.push_back(m);
                    for (int t = m; t >= -m; t -= 2) mult[t]--;
                }
            }
            CHECK(js == brute);
        }
}

TEST_CASE("hom_so3_multiplicity") {
    CHECK(hom_so3_multiplicity(3, 1, 4) == 1);
    CHECK(hom_so3_multiplicity(6, 0, 4) == 0);
    CHECK(hom_so3_multiplicity(4, 4, 2) == 1);  // brute force via clebsch_gordan below
    CHECK(hom_so3_multiplicity(0, 0, 4) == 0);  // J above K+L
    for (int K = 0; K <= 8; ++K)
        for (int L = K % 2; L <= 8; L += 2)
            for (int J = 0; J <= 16; ++J) {
                auto js = clebsch_gordan(K, L);
                int brute = int(std::count(js.begin(), js.end(), J));
                CHECK(hom_so3_multiplicity(K, L, J) == brute);
            }
}

TEST_CASE("real structure") {
    // V^{0,0}: the fixed vector is real
    ProductRep triv(0, 0);
    CHECK(real_structure_coeff(triv, 0, 0) == Rat(1));

    // V^{2,0}: tau maps V(2,0) into V(-2,0)
    ProductRep v20(2, 0);
    auto rs = real_structure(v20);
    int j = v20.index_of(2, 0);
    int i = v20.index_of(-2, 0);
    CHECK(rs.matrix[std::size_t(i)][std::size_t(j)] != Rat(0));
    for (int row = 0; row < v20.dim(); ++row)
        if (row != i) CHECK(rs.matrix[std::size_t(row)][std::size_t(j)] == Rat(0));

    // involution on all weight lines of V^{1,1} (and a few larger reps):
    // tau antilinear means tau^2(v) = s(k,l) s(-k,-l) v
    for (auto [K, L] : {std::pair{1, 1}, {4, 2}, {5, 3}, {6, 6}}) {
        ProductRep r(K, L);
        for (auto [k, l] : r.weight_basis())
            CHECK(real_structure_coeff(r, k, l) * real_structure_coeff(r, -k, -l) == Rat(1));
    }

    CHECK_THROWS_AS(real_structure(ProductRep(2, 1, true)), std::invalid_argument);
}

TEST_CASE("real structure commutes with the compact diagonal generators") {
    // tau o rho(g) = rho(g) o tau for g in the compact real form: with the
    // antilinearity written out this reads, for the complexified generators,
    // tau (iH) = (iH) tau, tau (X-Y) = (X-Y) tau, tau i(X+Y) = i(X+Y) tau.
    // Over the rationals this is equivalent to  s(k,l) matrix identities:
    // (X-Y) route: s * (X-Y)-coefficients agree after the (k,l) -> (-k,-l) flip.
    for (auto [K, L] : {std::pair{2, 2}, {3, 1}, {4, 0}}) {
        ProductRep r(K, L);
        for (auto [k, l] : r.weight_basis()) {
            // diagonal generator (X1+X2) - (Y1+Y2): compare coefficient of
            // tau((X-Y)v) with (X-Y)(tau v) on each target line
            auto sx1 = apply_gen(r, Gen::X1, k, l);
            auto sy1 = apply_gen(r, Gen::Y1, k, l);
            Rat skl = real_structure_coeff(r, k, l);
            // X1 part of tau((X-Y)v): target (k+2,l) -> flipped (-k-2,-l);
            // matching term of (X-Y)(tau v): -Y1 on (-k,-l)
            if (sx1.coeff != 0) {
                Rat lhs = skl * 0 + real_structure_coeff(r, k + 2, l) * sx1.coeff;
                auto y_on_flip = apply_gen(r, Gen::Y1, -k, -l);
                Rat rhs = -skl * y_on_flip.coeff;
                CHECK(lhs == rhs);
            }
            if (sy1.coeff != 0) {
                Rat lhs = real_structure_coeff(r, k - 2, l) * (-sy1.coeff);
                auto x_on_flip = apply_gen(r, Gen::X1, -k, -l);
                Rat rhs = skl * x_on_flip.coeff;
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("g0 composition is an involution") {
    for (auto [K, L] : {std::pair{2, 0}, {1, 1}, {4, 2}, {3, 3}}) {
        ProductRep r(K, L);
        for (auto [k, l] : r.weight_basis())
            CHECK(g0_coeff(r, k, l) * g0_coeff(r, -k, -l) == Rat(1));
    }
}
