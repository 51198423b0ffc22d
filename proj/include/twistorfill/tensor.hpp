#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "twistorfill/fiber.hpp"
#include "twistorfill/rational.hpp"
#include "twistorfill/rep.hpp"

namespace twf::calc {

struct Key {
    int K = 0;
    int L = 0;
    int k = 0;
    int l = 0;
    int basis = 0;
    auto operator<=>(const Key&) const = default;
};

// Finitely supported coefficient map (K,L,k,l,basis) -> C, representing the
// hom_{U1}(V^{K,L}, W)-part of an equivariant section; weight spaces are all
// one-dimensional, so this is the entire section datum per representation.
class EquivariantTensor {
public:
    EquivariantTensor() : fiber_(Fiber::Functions) {}
    explicit EquivariantTensor(Fiber f) : fiber_(f) {}

    Fiber fiber() const { return fiber_; }
    const FiberSpec& spec() const { return fiber_spec(fiber_); }

    void set(const Key& key, CQ v);
    void add(const Key& key, const CQ& v);
    CQ at(const Key& key) const;  // zero when absent
    bool empty() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    const std::map<Key, CQ>& entries() const { return entries_; }

    // lattice membership + line constraint k+l = u1(basis) + K+L parity
    std::optional<std::string> validate() const;
    void check() const;  // throws std::invalid_argument on validation failure

    // representations carrying support
    std::vector<std::pair<int, int>> reps() const;

    EquivariantTensor& operator+=(const EquivariantTensor& o);
    EquivariantTensor& operator*=(const CQ& c);
    friend EquivariantTensor operator+(EquivariantTensor a, const EquivariantTensor& b) {
        a += b;
        return a;
    }
    friend EquivariantTensor operator*(const CQ& c, EquivariantTensor t) {
        t *= c;
        return t;
    }
    friend bool operator==(const EquivariantTensor& a, const EquivariantTensor& b);

    double max_abs() const;  // max entry modulus as double (for tolerance checks)

private:
    Fiber fiber_;
    std::map<Key, CQ> entries_;
};

// total S^1 weight of an entry, when the fiber component has one
std::optional<int> s1_weight(Fiber f, int basis, int k);
std::optional<int> s1_weight(const EquivariantTensor& t, const Key& key);

}  // namespace twf::calc
