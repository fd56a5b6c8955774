#pragma once

#include <optional>
#include <string>

#include "swanlab/poly.hpp"

namespace swanlab {

// Element of the residue field l = F_p(b1,...,b_r), stored as a reduced
// fraction: gcd(num, den) = 1 and den is monic in graded lex. Reduced
// forms are unique, so operator== is genuine field equality.
class Residue {
   public:
    Residue() : num_(2), den_(Poly::constant(2, 1)) {}
    explicit Residue(int p) : num_(p), den_(Poly::constant(p, 1)) {}
    Residue(Poly num, Poly den);

    static Residue constant(int p, long long c) {
        return Residue(Poly::constant(p, c), Poly::constant(p, 1));
    }
    static Residue generator(int p, int var) {
        return Residue(Poly::variable(p, var), Poly::constant(p, 1));
    }
    static Residue from_poly(Poly n) {
        int p = n.p();
        return Residue(std::move(n), Poly::constant(p, 1));
    }

    int p() const { return num_.p(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    int constant_value() const { return num_.constant_value(); }
    bool is_polynomial() const { return den_.is_one(); }
    int max_var() const { return std::max(num_.max_var(), den_.max_var()); }
    // largest total degree appearing in the reduced form
    int degree() const { return std::max(num_.total_degree(), den_.total_degree()); }

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue operator/(const Residue& o) const;
    Residue operator-() const;
    Residue inverse() const;
    Residue pow(long long e) const;
    Residue scaled(int c) const;

    Residue pth_power() const;
    // y with y^p = *this, if this lies in l^p. In reduced form that holds
    // exactly when every monomial exponent of num and den is divisible by p.
    std::optional<Residue> pth_root() const;

    // Quotient-rule partial derivative with respect to b_var.
    Residue partial(int var) const;

    std::string to_string(int r) const;

   private:
    Poly num_;
    Poly den_;
};

}  // namespace swanlab
