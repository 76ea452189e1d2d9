#pragma once

#include <cmath>

#include "seedcast/errors.hpp"
#include "seedcast/rational.hpp"

namespace seedcast {

// Prior rho and per-link loss epsilon. P is double or Rational.
template <class P>
struct ModelParams {
    P rho;
    P epsilon;

    void validate() const {
        if (!(rho > 0 && rho < 1)) throw BadParams("rho must lie strictly inside (0,1)");
        if (!(epsilon > 0 && epsilon < 1)) throw BadParams("epsilon must lie strictly inside (0,1)");
    }
};

// Arithmetic backend for outcome spaces. State masses are kept as weights over
// a shared denominator so exact mode works on integers; probabilities only get
// normalized at the API boundary.
struct FloatBackend {
    using Weight = double;
    using Prob = double;

    static Weight zero() { return 0.0; }
    static Weight one() { return 1.0; }

    // Per-link factors: weight of a delivered outcome, of a lost outcome, and
    // the denominator both are measured against.
    static void link_weights(const Prob& epsilon, Weight& deliver, Weight& lose, Weight& link_den) {
        deliver = 1.0 - epsilon;
        lose = epsilon;
        link_den = 1.0;
    }

    static void prior_weights(const Prob& rho, Weight& good, Weight& bad, Weight& prior_den) {
        good = rho;
        bad = 1.0 - rho;
        prior_den = 1.0;
    }

    static Weight wpow(const Weight& base, unsigned exp) { return std::pow(base, static_cast<int>(exp)); }

    static Prob to_prob(const Weight& w, const Weight& denom) { return w / denom; }

    // num/den >= p with den > 0.
    static bool ratio_ge(const Weight& num, const Weight& den, const Prob& p) { return num >= p * den; }
    static bool ratio_gt(const Weight& num, const Weight& den, const Prob& p) { return num > p * den; }

    static Prob prob_from_double(double v) { return v; }

    // Equality up to the backend's precision: float sums over different
    // structures agree only to rounding error.
    static bool prob_close(const Prob& x, const Prob& y) { return std::abs(x - y) <= 1e-12; }

    // Mixture plumbing. Float weights are plain probabilities, so common
    // denominators are trivial.
    static Weight weight_lcm(const Weight&, const Weight&) { return 1.0; }
    static Weight weight_div(const Weight& a, const Weight& b) { return a / b; }
    static Weight prob_num_as_weight(const Prob& p) { return p; }
    static Weight prob_den_as_weight(const Prob&) { return 1.0; }
};

struct ExactBackend {
    using Weight = BigInt;
    using Prob = Rational;

    static Weight zero() { return 0; }
    static Weight one() { return 1; }

    static void link_weights(const Prob& epsilon, Weight& deliver, Weight& lose, Weight& link_den) {
        lose = numerator(epsilon);
        link_den = denominator(epsilon);
        deliver = link_den - lose;
    }

    static void prior_weights(const Prob& rho, Weight& good, Weight& bad, Weight& prior_den) {
        good = numerator(rho);
        prior_den = denominator(rho);
        bad = prior_den - good;
    }

    static Weight wpow(const Weight& base, unsigned exp) { return bigint_pow(base, exp); }

    static Prob to_prob(const Weight& w, const Weight& denom) { return Prob(w, denom); }

    static bool ratio_ge(const Weight& num, const Weight& den, const Prob& p) {
        return num * denominator(p) >= numerator(p) * den;
    }
    static bool ratio_gt(const Weight& num, const Weight& den, const Prob& p) {
        return num * denominator(p) > numerator(p) * den;
    }

    static Prob prob_from_double(double v);

    static bool prob_close(const Prob& x, const Prob& y) { return x == y; }

    static Weight weight_lcm(const Weight& a, const Weight& b) {
        return a / boost::multiprecision::gcd(a, b) * b;
    }
    static Weight weight_div(const Weight& a, const Weight& b) { return a / b; }
    static Weight prob_num_as_weight(const Prob& p) { return numerator(p); }
    static Weight prob_den_as_weight(const Prob& p) { return denominator(p); }
};

inline Rational ExactBackend::prob_from_double(double v) {
    // Exact binary expansion of the double; used only where a double sneaks
    // into an exact computation (CLI convenience paths).
    Rational r(v);
    return r;
}

}  // namespace seedcast
