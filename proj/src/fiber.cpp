#include "twistorfill/fiber.hpp"

#include <array>
#include <cstring>

namespace twf::calc {

namespace {
// S^1 offsets follow the weight table of the circle action on the fiber:
// -2 on e_1, e^{1b} and +2 on e^1, e_{1b}; all 2-indexed and eta, sigma are 0.
const std::array<FiberSpec, 12> kSpecs = {{
    {Fiber::Functions, "functions", {{"f", 0, 0}}},
    {Fiber::Omega01, "omega01", {{"e1b", 2, -2}, {"e2b", 2, 0}}},
    {Fiber::T10, "t10", {{"e1", 2, -2}, {"e2", 2, 0}}},
    {Fiber::CRDeform,
     "cr_deform",
     {{"e1b_e1", 4, -4}, {"e1b_e2", 4, -2}, {"e2b_e1", 4, -2}, {"e2b_e2", 4, 0}}},
    {Fiber::TwoForm, "two_form", {{"e12b_e1", 6, -4}, {"e12b_e2", 6, -2}}},
    {Fiber::Omega02, "omega02", {{"e12b", 4, -2}}},
    {Fiber::P1Out, "p1_out", {{"p1", 4, std::nullopt}}},
    {Fiber::LSections, "l_sections", {{"s", 2, 0}}},
    {Fiber::OmegaPrimeL, "omega_prime_l", {{"eta_s", 2, 0}, {"e1_s", 0, 2}, {"e2_s", 0, 0}}},
    {Fiber::Omega01L, "omega01_l", {{"e1b_s", 4, -2}, {"e2b_s", 4, 0}}},
    {Fiber::Zeta,
     "zeta",
     {{"eta_e1b", 4, -2},
      {"eta_e2b", 4, 0},
      {"e1_e1b", 2, 0},
      {"e1_e2b", 2, 2},
      {"e2_e1b", 2, -2},
      {"e2_e2b", 2, 0}}},
    {Fiber::Compat, "compat", {{"eta_e12b", 6, -2}, {"e1_e12b", 4, 0}, {"e2_e12b", 4, -2}}},
}};
}  // namespace

std::optional<int> FiberSpec::uniform_u1() const {
    int w = basis.front().u1_weight;
    for (const auto& b : basis)
        if (b.u1_weight != w) return std::nullopt;
    return w;
}

const FiberSpec& fiber_spec(Fiber f) {
    for (const auto& s : kSpecs)
        if (s.id == f) return s;
    return kSpecs.front();
}

const FiberSpec* fiber_by_name(std::string_view name) {
    for (const auto& s : kSpecs)
        if (name == s.name) return &s;
    return nullptr;
}

int basis_index(Fiber f, std::string_view label) {
    const auto& s = fiber_spec(f);
    for (int i = 0; i < s.size(); ++i)
        if (label == s.basis[i].label) return i;
    return -1;
}

}  // namespace twf::calc
