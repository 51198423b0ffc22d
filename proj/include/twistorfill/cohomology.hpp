#pragma once

#include <array>
#include <string>
#include <vector>

namespace twf::coh {

// dim H^q(P^n, O(k)) by the Bott formula: binom(n+k,n) for q=0, k>=0;
// binom(-k-1,n) for q=n, k<=-n-1; zero otherwise.
long long h_dim(int n, int q, int k);

// Line bundle O(a_1,...,a_m) on P^{n_1} x ... x P^{n_m}.
struct LineBundle {
    std::vector<int> base;   // factor dimensions n_i
    std::vector<int> twist;  // one twist per factor
};
long long kunneth_h_dim(const LineBundle& bundle, int q);

// Descent bundles of the circle fibration O(-1,1) -> P^1 x P^1 appearing in
// the obstruction analysis.  The weight-k piece of E is the cohomology of
// E (x) O(k,-k) on the base; Omega' (x) L is the non-split extension with
// connecting maps given by multiplication by the Kaehler classes.
enum class DescentBundle { Trivial, L, Omega1P11_L, Omega1P12_L, OmegaPrimeL };
DescentBundle descent_bundle_from_string(const std::string& s);

struct WeightEntry {
    int k;
    std::array<long long, 3> h;  // h^0, h^1, h^2
};
std::vector<WeightEntry> circle_bundle_decomposition(DescentBundle e, int kmin, int kmax);

// Vanishing checks of the quaternionic case on P^{2m-1} x P^1: for each
// 0 < k <= kmax both H^1(O(-k,k)) = 0 and H^1(T^{1,0} (x) O(-k,k)) = 0, the
// latter via the Euler-sequence chase (H^1(O(1-k)) and H^2(O(-k)) vanish on
// P^{2m-1} for m > 1).
struct QuaternionicEntry {
    int k;
    bool scalar_vanishes;
    bool tangent_vanishes;
};
struct QuaternionicReport {
    int m;
    std::vector<QuaternionicEntry> entries;
    bool all_vanish;
};
QuaternionicReport quaternionic_vanishing(int m, int kmax);

}  // namespace twf::coh
