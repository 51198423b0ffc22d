#include "twistorfill/cohomology.hpp"

#include <stdexcept>

namespace twf::coh {

namespace {
long long binom(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    long long out = 1;
    for (long long t = 1; t <= r; ++t) out = out * (n - r + t) / t;
    return out;
}

// rank of multiplication by the Kaehler class [omega] on one P^1 factor,
// H^q(P^1, O(a)) -> H^{q+1}(P^1, O(a-2)): an isomorphism C -> C exactly when
// q = 0 and a = 0, zero otherwise.
long long omega_mult_rank(int q, int a) { return (q == 0 && a == 0) ? 1 : 0; }
}  // namespace

long long h_dim(int n, int q, int k) {
    if (n < 1 || q < 0 || q > n) throw std::invalid_argument("h_dim: need n >= 1, 0 <= q <= n");
    if (q == 0) return k >= 0 ? binom(n + k, n) : 0;
    if (q == n) return k <= -n - 1 ? binom(-k - 1, n) : 0;
    return 0;
}

long long kunneth_h_dim(const LineBundle& bundle, int q) {
    if (bundle.base.size() != bundle.twist.size() || bundle.base.empty())
        throw std::invalid_argument("kunneth_h_dim: one twist per factor required");
    // fold factors, tracking dimensions per partial degree
    std::vector<long long> acc{1};  // acc[d] = dim of degree-d part so far
    for (std::size_t i = 0; i < bundle.base.size(); ++i) {
        int n = bundle.base[i];
        std::vector<long long> next(acc.size() + std::size_t(n), 0);
        for (std::size_t d = 0; d < acc.size(); ++d) {
            if (acc[d] == 0) continue;
            for (int qi = 0; qi <= n; ++qi)
                next[d + std::size_t(qi)] += acc[d] * h_dim(n, qi, bundle.twist[i]);
        }
        acc = std::move(next);
    }
    return q >= 0 && std::size_t(q) < acc.size() ? acc[std::size_t(q)] : 0;
}

DescentBundle descent_bundle_from_string(const std::string& s) {
    if (s == "O") return DescentBundle::Trivial;
    if (s == "L") return DescentBundle::L;
    if (s == "Omega1_1xL") return DescentBundle::Omega1P11_L;
    if (s == "Omega1_2xL") return DescentBundle::Omega1P12_L;
    if (s == "OmegaPrimexL") return DescentBundle::OmegaPrimeL;
    throw std::invalid_argument("unsupported bundle spec '" + s +
                                "' (O, L, Omega1_1xL, Omega1_2xL, OmegaPrimexL)");
}

namespace {
std::array<long long, 3> h_all(int a, int b) {
    LineBundle lb{{1, 1}, {a, b}};
    return {kunneth_h_dim(lb, 0), kunneth_h_dim(lb, 1), kunneth_h_dim(lb, 2)};
}

// rank of the connecting map delta_q = (omega_1 ., -omega_2 .) from
// H^q(O(k,-k+2)) to H^{q+1}(O(k-2,-k+2)) + H^{q+1}(O(k,-k)).  The two
// components act on different factors and are supported at different weights
// (k = 0 resp. k = 2), so the joint rank is the sum of the component ranks.
long long delta_rank(int q, int k) {
    long long r = 0;
    // omega_1 on the first factor of O(k,-k+2)
    for (int q1 = 0; q1 <= 1; ++q1) {
        int q2 = q - q1;
        if (q2 < 0 || q2 > 1) continue;
        r += omega_mult_rank(q1, k) * h_dim(1, q2, -k + 2);
    }
    // omega_2 on the second factor
    for (int q1 = 0; q1 <= 1; ++q1) {
        int q2 = q - q1;
        if (q2 < 0 || q2 > 1) continue;
        r += h_dim(1, q1, k) * omega_mult_rank(q2, -k + 2);
    }
    return r;
}
}  // namespace

std::vector<WeightEntry> circle_bundle_decomposition(DescentBundle e, int kmin, int kmax) {
    std::vector<WeightEntry> out;
    for (int k = kmin; k <= kmax; ++k) {
        WeightEntry w{k, {0, 0, 0}};
        switch (e) {
            case DescentBundle::Trivial:
                w.h = h_all(k, -k);
                break;
            case DescentBundle::L:
                w.h = h_all(k, -k + 2);
                break;
            case DescentBundle::Omega1P11_L:
                w.h = h_all(k - 2, -k + 2);
                break;
            case DescentBundle::Omega1P12_L:
                w.h = h_all(k, -k);
                break;
            case DescentBundle::OmegaPrimeL: {
                // components s0 in O(k,-k+2), s1 in O(k-2,-k+2), s2 in O(k,-k)
                // with connecting maps (omega_1, -omega_2) out of s0
                auto s0 = h_all(k, -k + 2);
                auto s1 = h_all(k - 2, -k + 2);
                auto s2 = h_all(k, -k);
                for (int q = 0; q <= 2; ++q) {
                    long long ker = s0[std::size_t(q)] - delta_rank(q, k);
                    long long im_prev = (q == 0) ? 0 : delta_rank(q - 1, k);
                    w.h[std::size_t(q)] =
                        s1[std::size_t(q)] + s2[std::size_t(q)] + ker - im_prev;
                }
                break;
            }
        }
        out.push_back(w);
    }
    return out;
}

QuaternionicReport quaternionic_vanishing(int m, int kmax) {
    if (m < 2) throw std::invalid_argument("quaternionic_vanishing: requires m >= 2");
    if (kmax < 1) throw std::invalid_argument("quaternionic_vanishing: requires kmax >= 1");
    QuaternionicReport rep{m, {}, true};
    const int n = 2 * m - 1;
    for (int k = 1; k <= kmax; ++k) {
        QuaternionicEntry e{k, false, false};
        // scalar: H^1(P^n x P^1, O(-k,k)) by Kuenneth
        e.scalar_vanishes = kunneth_h_dim({{n, 1}, {-k, k}}, 1) == 0;
        // tangent: T^{1,0} = T P^n x O + O x T P^1.
        //  P^n piece: need H^1(T P^n (-k)) = 0, via Euler sequence forced by
        //  H^1(O(1-k)^{2m}) = 0 and H^2(O(-k)) = 0 (n >= 3), plus the Kuenneth
        //  partners H^1(P^1,O(k)) = 0 and H^0(T P^n(-k)) (x) H^1(O(k)) = 0.
        bool euler = h_dim(n, 1, 1 - k) == 0 && h_dim(n, 2, -k) == 0;
        bool pn_piece = euler && h_dim(1, 1, k) == 0;
        //  P^1 piece: O(-k) boxtimes O(k+2): both Kuenneth summands vanish
        bool p1_piece = h_dim(n, 0, -k) == 0 && h_dim(n, 1, -k) == 0;
        e.tangent_vanishes = pn_piece && p1_piece;
        rep.all_vanish = rep.all_vanish && e.scalar_vanishes && e.tangent_vanishes;
        rep.entries.push_back(e);
    }
    return rep;
}

}  // namespace twf::coh
