#pragma once

#include <string>

#include "swanlab/errors.hpp"
#include "swanlab/fp.hpp"

namespace swanlab {

// Hard configuration limits. The defaults keep the universal Witt
// polynomial expansion and residue-field normalization tractable; beyond
// them the library refuses rather than degrading.
struct Limits {
    static constexpr int max_p = 7;
    static constexpr int max_witt_length = 4;
    static constexpr long long max_witt_terms = 4'000'000;
};

// Ambient field description shared by every value of a computation:
// the residue field l = F_p(b_1,...,b_r) of L = l((t)), the default
// precision window used when inverting exactly-known series, and the cap
// on residue-coefficient degrees.
struct Context {
    int p = 2;
    int r = 1;  // size of the p-basis; 0 means a perfect residue field
    long long window = 64;
    long long degree_cap = 64;

    Context() = default;
    Context(int p_, int r_, long long window_ = 64, long long degree_cap_ = 64)
        : p(p_), r(r_), window(window_), degree_cap(degree_cap_) {
        if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
        if (p > Limits::max_p)
            throw CapExceeded("p = " + std::to_string(p) + " exceeds the cap p <= " +
                              std::to_string(Limits::max_p));
        if (r < 0 || r > 2) throw InputError("p-basis size r must be 0, 1 or 2");
        if (window < 8) throw InputError("precision window must be >= 8");
    }

    bool compatible(const Context& o) const { return p == o.p && r == o.r; }
};

}  // namespace swanlab
