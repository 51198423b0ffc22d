#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <complex>
#include <cstdint>
#include <string>

namespace twf {

// Exact rational scalar. All weight-lattice computations stay in Q(i); doubles
// appear only at API boundaries (JSON, least-squares, SVD).
using Rat = boost::multiprecision::mpq_rational;

// Gaussian rational a + b*i.
struct CQ {
    Rat re{0};
    Rat im{0};

    CQ() = default;
    CQ(Rat r) : re(std::move(r)) {}
    CQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    CQ(long r) : re(r) {}
    CQ(long r, long i) : re(r), im(i) {}

    static CQ i() { return CQ{Rat(0), Rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }

    CQ conj() const { return CQ{re, -im}; }

    friend CQ operator+(const CQ& a, const CQ& b) { return {a.re + b.re, a.im + b.im}; }
    friend CQ operator-(const CQ& a, const CQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend CQ operator-(const CQ& a) { return {-a.re, -a.im}; }
    friend CQ operator*(const CQ& a, const CQ& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CQ operator/(const CQ& a, const CQ& b) {
        Rat n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    CQ& operator+=(const CQ& b) { re += b.re; im += b.im; return *this; }
    CQ& operator-=(const CQ& b) { re -= b.re; im -= b.im; return *this; }
    CQ& operator*=(const CQ& b) { *this = *this * b; return *this; }

    friend bool operator==(const CQ& a, const CQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CQ& a, const CQ& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
    double abs2_double() const {
        return static_cast<double>(re * re + im * im);
    }
    std::string str() const {
        return re.str() + (im >= 0 ? "+" : "") + im.str() + "i";
    }
};

inline CQ from_complex(const std::complex<double>& z) {
    // doubles are dyadic rationals, so this conversion is exact
    return CQ{Rat(z.real()), Rat(z.imag())};
}

}  // namespace twf
