#pragma once

#include <map>
#include <string>

#include "swanlab/context.hpp"
#include "swanlab/residue.hpp"

namespace swanlab {

// Extended-integer sentinels. kValInf is the valuation of the exact zero
// series; kPrecExact marks series whose coefficients are known at every
// exponent (finite support, no truncation).
inline constexpr long long kValInf = 1LL << 62;
inline constexpr long long kPrecExact = 1LL << 60;

inline long long prec_add(long long prec, long long shift) {
    return prec >= kPrecExact ? kPrecExact : prec + shift;
}

// Truncated Laurent series over the residue field of the ambient Context:
// coefficients are exact on [low, prec) and unknown at exponents >= prec.
// Exponents below low are known to vanish. A series whose known window is
// entirely zero ("zero to precision") is distinguished from the exact zero,
// so valuation queries fail loudly instead of reporting a fake infinity.
class Series {
   public:
    Series() = default;
    explicit Series(Context ctx) : ctx_(ctx), exact_zero_(true), low_(0), prec_(kPrecExact) {}

    // Builds from raw data; drops zero coefficients, trims the leading
    // window, and rejects coefficients outside [low, prec).
    Series(Context ctx, std::map<long long, Residue> coeffs, long long low, long long prec);

    static Series zero(Context ctx) { return Series(ctx); }
    static Series one(Context ctx) { return monomial(ctx, Residue::constant(ctx.p, 1), 0); }
    static Series monomial(Context ctx, Residue c, long long exp);
    static Series constant(Context ctx, long long c) {
        return monomial(ctx, Residue::constant(ctx.p, c), 0);
    }

    const Context& ctx() const { return ctx_; }
    bool exact_zero() const { return exact_zero_; }
    bool is_exact() const { return prec_ >= kPrecExact; }
    long long low() const { return low_; }
    long long prec() const { return prec_; }
    const std::map<long long, Residue>& coeffs() const { return coeffs_; }
    bool support_empty() const { return coeffs_.empty(); }

    // Smallest exponent with nonzero coefficient; kValInf for exact zero.
    // Throws PrecisionExhausted when the window shows only zeros.
    long long valuation() const;
    // Non-throwing lower bound on the valuation (= prec for zero-to-precision).
    long long valuation_lower_bound() const { return exact_zero_ ? kValInf : low_; }
    bool valuation_known() const { return exact_zero_ || !coeffs_.empty(); }

    Residue coeff(long long exp) const;  // known coefficient at exp (0 if absent)
    Residue leading_coeff() const { return coeff(valuation()); }

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator-() const;
    Series operator*(const Series& o) const;
    Series scaled(const Residue& c) const;
    Series shifted(long long k) const;  // multiply by t^k
    Series inverse() const;
    Series pow(long long e) const;
    Series pth_power() const;
    Series truncated(long long new_prec) const;

    // Image of a series over K = F_p((t)) under t -> f; coefficients of
    // *this must be constants. f must have valuation e >= 1.
    Series substituted(const Series& f) const;

    bool identical(const Series& o) const;  // same support, flags and bounds

    std::string to_string() const;  // known support only, parseable form

   private:
    void normalize();
    void check_degree_cap() const;

    Context ctx_{};
    bool exact_zero_ = true;
    long long low_ = 0;
    long long prec_ = kPrecExact;
    std::map<long long, Residue> coeffs_;
};

}  // namespace swanlab
