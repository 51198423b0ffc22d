#include "twistorfill/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twf::calc {

void EquivariantTensor::set(const Key& key, CQ v) {
    if (v.is_zero())
        entries_.erase(key);
    else
        entries_[key] = std::move(v);
}

void EquivariantTensor::add(const Key& key, const CQ& v) {
    if (v.is_zero()) return;
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
}

CQ EquivariantTensor::at(const Key& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? CQ{} : it->second;
}

std::optional<std::string> EquivariantTensor::validate() const {
    const auto& sp = spec();
    for (const auto& [key, v] : entries_) {
        if (key.basis < 0 || key.basis >= sp.size())
            return "basis index " + std::to_string(key.basis) + " out of range for fiber " +
                   sp.name;
        if (key.K < 0 || key.L < 0) return "negative highest weight";
        if ((key.K + key.L) % 2 != 0)
            return "K+L odd at (" + std::to_string(key.K) + "," + std::to_string(key.L) + ")";
        rep::ProductRep r(key.K, key.L);
        if (!r.valid(key.k, key.l))
            return "weight (" + std::to_string(key.k) + "," + std::to_string(key.l) +
                   ") outside the lattice of V^{" + std::to_string(key.K) + "," +
                   std::to_string(key.L) + "}";
        if (key.k + key.l != sp.basis[key.basis].u1_weight)
            return std::string("entry off the isotropy line k+l=") +
                   std::to_string(sp.basis[key.basis].u1_weight) + " for component " +
                   sp.basis[key.basis].label;
    }
    return std::nullopt;
}

void EquivariantTensor::check() const {
    if (auto err = validate()) throw std::invalid_argument("EquivariantTensor: " + *err);
}

std::vector<std::pair<int, int>> EquivariantTensor::reps() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [key, v] : entries_) {
        std::pair<int, int> p{key.K, key.L};
        if (out.empty() || out.back() != p) {
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

EquivariantTensor& EquivariantTensor::operator+=(const EquivariantTensor& o) {
    if (fiber_ != o.fiber_) throw std::invalid_argument("tensor sum: fiber mismatch");
    for (const auto& [key, v] : o.entries_) add(key, v);
    return *this;
}

EquivariantTensor& EquivariantTensor::operator*=(const CQ& c) {
    if (c.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [key, v] : entries_) v *= c;
    return *this;
}

bool operator==(const EquivariantTensor& a, const EquivariantTensor& b) {
    return a.fiber_ == b.fiber_ && a.entries_ == b.entries_;
}

double EquivariantTensor::max_abs() const {
    double m = 0;
    for (const auto& [key, v] : entries_) m = std::max(m, std::sqrt(v.abs2_double()));
    return m;
}

std::optional<int> s1_weight(Fiber f, int basis, int k) {
    const auto& sp = fiber_spec(f);
    if (basis < 0 || basis >= sp.size()) return std::nullopt;
    auto off = sp.basis[basis].s1_offset;
    if (!off) return std::nullopt;
    return k + *off;
}

std::optional<int> s1_weight(const EquivariantTensor& t, const Key& key) {
    return s1_weight(t.fiber(), key.basis, key.k);
}

}  // namespace twf::calc
