#include "swanlab/residue.hpp"

namespace swanlab {

Residue::Residue(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("residue element with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.p(), 1);
        return;
    }
    if (!den_.is_one()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *num_.divide_exact(g);
            den_ = *den_.divide_exact(g);
        }
        int lc = den_.leading_coeff();
        if (lc != 1) {
            int inv = fp::inv(lc, num_.p());
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
}

Residue Residue::operator+(const Residue& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one()) return from_poly(num_ + o.num_);
    return Residue(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Residue Residue::operator-() const {
    Residue out = *this;
    out.num_ = -out.num_;
    return out;
}

Residue Residue::operator-(const Residue& o) const { return *this + (-o); }

Residue Residue::operator*(const Residue& o) const {
    if (is_zero() || o.is_zero()) return Residue(p());
    if (is_one()) return o;
    if (o.is_one()) return *this;
    if (den_.is_one() && o.den_.is_one()) return from_poly(num_ * o.num_);
    return Residue(num_ * o.num_, den_ * o.den_);
}

Residue Residue::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero residue element");
    return Residue(den_, num_);
}

Residue Residue::operator/(const Residue& o) const { return *this * o.inverse(); }

Residue Residue::scaled(int c) const {
    Residue out = *this;
    out.num_ = out.num_.scaled(c);
    if (out.num_.is_zero()) out.den_ = Poly::constant(p(), 1);
    return out;
}

Residue Residue::pow(long long e) const {
    if (e == 0) return constant(p(), 1);
    Residue base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? (unsigned long long)(-e) : (unsigned long long)e;
    Residue acc = constant(p(), 1);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Residue Residue::pth_power() const {
    Residue out(p());
    out.num_ = num_.pth_power();
    out.den_ = den_.pth_power();
    return out;  // reduced form is preserved by the exponent map
}

std::optional<Residue> Residue::pth_root() const {
    auto rn = num_.pth_root();
    if (!rn) return std::nullopt;
    auto rd = den_.pth_root();
    if (!rd) return std::nullopt;
    Residue out(p());
    out.num_ = std::move(*rn);
    out.den_ = std::move(*rd);
    return out;
}

Residue Residue::partial(int var) const {
    if (den_.is_one()) return from_poly(num_.derivative(var));
    return Residue(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

std::string Residue::to_string(int r) const {
    if (den_.is_one()) return num_.to_string(r);
    std::string n = num_.to_string(r);
    std::string d = den_.to_string(r);
    // '/' binds like '*' and is left-associative, so the numerator only
    // needs parentheses around sums; the denominator also around products.
    if (n.find('+') != std::string::npos) n = "(" + n + ")";
    if (d.find('+') != std::string::npos || d.find('*') != std::string::npos)
        d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace swanlab
