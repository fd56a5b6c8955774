#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swanlab/errors.hpp"
#include "swanlab/fp.hpp"

namespace swanlab {

// Monomial b1^e1 * b2^e2. Ordered by graded lex (total degree, then e1,
// then e2); the fixed order makes normal forms canonical.
struct Mono {
    uint16_t e1 = 0;
    uint16_t e2 = 0;
    int total() const { return int(e1) + int(e2); }
    friend bool operator==(const Mono&, const Mono&) = default;
};

inline bool mono_less(const Mono& a, const Mono& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    if (a.e1 != b.e1) return a.e1 < b.e1;
    return a.e2 < b.e2;
}

// Polynomial over F_p in the residue-field generators b1, b2 (at most two).
// Terms are sorted descending in graded lex with coefficients in [1, p);
// zero is the empty term list. Equality of term arrays is therefore
// canonical equality.
class Poly {
   public:
    struct Term {
        Mono m;
        int c = 0;
    };

    Poly() = default;
    explicit Poly(int p) : p_(p) {}

    static Poly constant(int p, long long c);
    static Poly variable(int p, int var, int exp = 1);

    int p() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m == Mono{}); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].m == Mono{} && terms_[0].c == 1; }
    bool is_monomial() const { return terms_.size() == 1; }
    int constant_value() const;  // requires is_constant()
    int total_degree() const { return terms_.empty() ? -1 : terms_[0].m.total(); }
    int degree_in(int var) const;
    const Term& leading_term() const { return terms_.front(); }
    const std::vector<Term>& terms() const { return terms_; }
    int max_var() const;  // 0 if constant, else largest generator index used

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.p_ == b.p_ && a.terms_.size() == b.terms_.size() &&
               [&] {
                   for (size_t i = 0; i < a.terms_.size(); ++i)
                       if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c)
                           return false;
                   return true;
               }();
    }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(int c) const;  // multiply by a scalar in F_p

    Poly derivative(int var) const;

    // p-th power: exponents scale by p, coefficients are Frobenius-fixed.
    Poly pth_power() const;
    // Inverse of pth_power when it exists: every exponent divisible by p.
    std::optional<Poly> pth_root() const;

    Poly make_monic() const;  // scale so the graded-lex leading coefficient is 1
    int leading_coeff() const { return terms_.empty() ? 0 : terms_[0].c; }

    // Exact multivariate division; nullopt when d does not divide *this.
    std::optional<Poly> divide_exact(const Poly& d) const;

    std::string to_string(int r) const;  // r selects the variable names

    // Builds from an unsorted term list, merging and dropping zeros.
    static Poly from_terms(int p, std::vector<Term> ts);

   private:
    int p_ = 2;
    std::vector<Term> terms_;
};

// GCD in F_p[b1,b2], normalized monic. gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace swanlab
