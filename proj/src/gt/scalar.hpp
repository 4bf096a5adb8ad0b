#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Gaussian rational: re + im*i, both exact.
struct GRat {
    Rat re{0};
    Rat im{0};

    GRat() = default;
    GRat(long n) : re(n) {}
    GRat(const Rat& r) : re(r) {}
    GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    static GRat I() { return GRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GRat operator-() const { return GRat(-re, -im); }
    GRat& operator+=(const GRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GRat& operator-=(const GRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GRat operator+(GRat a, const GRat& b) { return a += b; }
    friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
    friend GRat operator*(const GRat& a, const GRat& b) {
        return GRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    GRat& operator*=(const GRat& o) { return *this = *this * o; }
    GRat conj() const { return GRat(re, -im); }
    Rat norm2() const { return re * re + im * im; }
    friend GRat operator/(const GRat& a, const GRat& b) {
        Rat n = b.norm2();
        if (n == 0) throw std::domain_error("GRat: division by zero");
        GRat c = a * b.conj();
        return GRat(c.re / n, c.im / n);
    }
    GRat& operator/=(const GRat& o) { return *this = *this / o; }
    friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }
    friend bool operator<(const GRat& a, const GRat& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

inline std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Canonical text form: "p/q", "p/q i", or "p/q + r/s i".
inline std::string to_string(const GRat& g) {
    if (g.im == 0) return rat_to_string(g.re);
    std::string im = rat_to_string(g.im);
    std::string imtxt = (im == "1") ? "i" : (im == "-1" ? "-i" : im + " i");
    if (g.re == 0) return imtxt;
    if (g.im > 0) return rat_to_string(g.re) + " + " + (im == "1" ? "i" : im + " i");
    Rat mi = -g.im;
    std::string mis = rat_to_string(mi);
    return rat_to_string(g.re) + " - " + (mis == "1" ? "i" : mis + " i");
}

// Parses "p/q", "-p/q i", "p/q + r/s i" (spaces optional around +/-).
GRat parse_grat(const std::string& text);

} // namespace gt
