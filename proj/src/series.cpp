#include "swanlab/series.hpp"

#include <algorithm>

namespace swanlab {

Series::Series(Context ctx, std::map<long long, Residue> coeffs, long long low, long long prec)
    : ctx_(ctx), exact_zero_(false), low_(low), prec_(prec), coeffs_(std::move(coeffs)) {
    normalize();
}

Series Series::monomial(Context ctx, Residue c, long long exp) {
    std::map<long long, Residue> m;
    if (!c.is_zero()) m.emplace(exp, std::move(c));
    Series out(ctx);
    if (m.empty()) return out;  // exact zero
    out.exact_zero_ = false;
    out.low_ = exp;
    out.prec_ = kPrecExact;
    out.coeffs_ = std::move(m);
    return out;
}

void Series::normalize() {
    if (exact_zero_) return;
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second.is_zero() || it->first >= prec_)
            it = coeffs_.erase(it);
        else
            ++it;
    }
    if (coeffs_.empty()) {
        low_ = prec_;  // zero to precision
    } else {
        if (coeffs_.begin()->first < low_)
            throw Error("series coefficient below the declared lower bound");
        low_ = coeffs_.begin()->first;
    }
    check_degree_cap();
}

void Series::check_degree_cap() const {
    for (const auto& [e, c] : coeffs_)
        if (c.degree() > ctx_.degree_cap)
            throw CapExceeded("residue coefficient degree " + std::to_string(c.degree()) +
                              " exceeds the cap " + std::to_string(ctx_.degree_cap));
}

long long Series::valuation() const {
    if (exact_zero_) return kValInf;
    if (coeffs_.empty())
        throw PrecisionExhausted("series is zero to precision t^" + std::to_string(prec_) +
                                 " but not exactly zero");
    return coeffs_.begin()->first;
}

Residue Series::coeff(long long exp) const {
    auto it = coeffs_.find(exp);
    if (it != coeffs_.end()) return it->second;
    if (!exact_zero_ && exp >= prec_)
        throw PrecisionExhausted("coefficient at t^" + std::to_string(exp) +
                                 " is beyond precision t^" + std::to_string(prec_));
    return Residue(ctx_.p);
}

Series Series::operator+(const Series& o) const {
    if (exact_zero_) return o;
    if (o.exact_zero_) return *this;
    long long prec = std::min(prec_, o.prec_);
    std::map<long long, Residue> m = coeffs_;
    for (const auto& [e, c] : o.coeffs_) {
        auto [it, inserted] = m.emplace(e, c);
        if (!inserted) it->second = it->second + c;
    }
    return Series(ctx_, std::move(m), std::min(low_, o.low_), prec);
}

Series Series::operator-() const {
    if (exact_zero_) return *this;
    Series out = *this;
    for (auto& [e, c] : out.coeffs_) c = -c;
    return out;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
    if (exact_zero_ || o.exact_zero_) return Series(ctx_);
    long long prec = std::min(prec_add(prec_, o.low_), prec_add(o.prec_, low_));
    std::map<long long, Residue> m;
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : o.coeffs_) {
            long long e = ea + eb;
            if (e >= prec) continue;
            Residue prod = ca * cb;
            if (prod.is_zero()) continue;
            auto [it, inserted] = m.emplace(e, prod);
            if (!inserted) it->second = it->second + prod;
        }
    return Series(ctx_, std::move(m), low_ + o.low_, prec);
}

Series Series::scaled(const Residue& c) const {
    if (exact_zero_) return *this;
    if (c.is_zero()) return Series(ctx_);  // scaling by an exact scalar zero
    std::map<long long, Residue> m;
    for (const auto& [e, x] : coeffs_) m.emplace(e, x * c);
    return Series(ctx_, std::move(m), low_, prec_);
}

Series Series::shifted(long long k) const {
    if (exact_zero_ || k == 0) return *this;
    std::map<long long, Residue> m;
    for (const auto& [e, x] : coeffs_) m.emplace(e + k, x);
    return Series(ctx_, std::move(m), low_ + k, prec_add(prec_, k));
}

Series Series::truncated(long long new_prec) const {
    if (exact_zero_) return *this;
    if (new_prec >= prec_) return *this;
    std::map<long long, Residue> m(coeffs_.begin(), coeffs_.lower_bound(new_prec));
    return Series(ctx_, std::move(m), low_, new_prec);
}

Series Series::inverse() const {
    if (exact_zero_) throw DivisionByZero("inverse of the exact zero series");
    long long v = valuation();  // throws PrecisionExhausted for zero-to-precision
    Residue lead = coeffs_.begin()->second;

    if (coeffs_.size() == 1 && is_exact())
        return monomial(ctx_, lead.inverse(), -v);

    // u = x / (lead * t^v) is a unit with constant term 1 and window w;
    // solve u * y = 1 by back substitution, then unshift.
    long long w = is_exact() ? ctx_.window : prec_ - v;
    std::vector<Residue> u(size_t(w), Residue(ctx_.p));
    for (const auto& [e, c] : coeffs_) {
        long long k = e - v;
        if (k < w) u[size_t(k)] = c / lead;
    }
    std::vector<Residue> y(size_t(w), Residue(ctx_.p));
    y[0] = Residue::constant(ctx_.p, 1);
    for (long long n = 1; n < w; ++n) {
        Residue acc(ctx_.p);
        for (long long i = 1; i <= n; ++i)
            if (!u[size_t(i)].is_zero() && !y[size_t(n - i)].is_zero())
                acc = acc + u[size_t(i)] * y[size_t(n - i)];
        y[size_t(n)] = -acc;
    }
    std::map<long long, Residue> m;
    for (long long k = 0; k < w; ++k)
        if (!y[size_t(k)].is_zero()) m.emplace(k - v, y[size_t(k)] / lead);
    long long prec = is_exact() ? ctx_.window - v : prec_ - 2 * v;
    return Series(ctx_, std::move(m), -v, prec);
}

Series Series::pow(long long e) const {
    if (e == 0) return one(ctx_);
    if (exact_zero_) return e > 0 ? *this : throw DivisionByZero("negative power of zero series");
    Series base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? (unsigned long long)(-e) : (unsigned long long)e;
    Series acc = one(ctx_);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

Series Series::pth_power() const {
    if (exact_zero_) return *this;
    int p = ctx_.p;
    std::map<long long, Residue> m;
    for (const auto& [e, c] : coeffs_) m.emplace(e * p, c.pth_power());
    // x^p precision: prec + (p-1) * v, with v >= low
    long long prec = prec_add(prec_, (p - 1) * low_);
    return Series(ctx_, std::move(m), low_ * p, prec);
}

Series Series::substituted(const Series& f) const {
    if (ctx_.p != f.ctx_.p) throw Error("substitution across different characteristics");
    if (f.exact_zero_ || !f.valuation_known())
        throw InvalidEmbedding("image of the uniformizer must have valuation >= 1");
    long long e = f.valuation();
    if (e < 1) throw InvalidEmbedding("image of the uniformizer has valuation " +
                                      std::to_string(e) + " < 1");
    if (exact_zero_) return Series(f.ctx_);

    Series out = Series(f.ctx_);
    long long prec = is_exact() ? kPrecExact : e * prec_;
    Series finv;  // computed on demand
    bool have_finv = false;
    for (const auto& [k, c] : coeffs_) {
        if (!c.is_constant())
            throw Error("substitution requires constant coefficients (perfect residue field)");
        Series term;
        if (k >= 0) {
            term = f.pow(k);
        } else {
            if (!have_finv) {
                finv = f.inverse();
                have_finv = true;
            }
            term = finv.pow(-k);
        }
        out = out + term.scaled(Residue::constant(f.ctx_.p, c.constant_value()));
    }
    if (!out.exact_zero_) prec = std::min(prec, out.prec_);
    return out.truncated(prec);
}

bool Series::identical(const Series& o) const {
    if (exact_zero_ != o.exact_zero_ || low_ != o.low_ || prec_ != o.prec_) return false;
    if (coeffs_.size() != o.coeffs_.size()) return false;
    auto it = o.coeffs_.begin();
    for (const auto& [e, c] : coeffs_) {
        if (e != it->first || !(c == it->second)) return false;
        ++it;
    }
    return true;
}

std::string Series::to_string() const {
    if (exact_zero_ || coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) out += "+";
        first = false;
        std::string cs = c.to_string(ctx_.r);
        bool one_coeff = c.is_one();
        if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
        if (e == 0) {
            out += cs;
        } else {
            std::string tp = e == 1 ? "t" : "t^" + std::to_string(e);
            out += one_coeff ? tp : cs + "*" + tp;
        }
    }
    return out;
}

}  // namespace swanlab
