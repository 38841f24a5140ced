#include "hypoexp/highprec.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace hypoexp {

namespace {

using bigfloat = boost::multiprecision::mpfr_float;

class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits) : saved_(bigfloat::default_precision()) {
        bigfloat::default_precision(digits);
    }
    ~PrecisionScope() { bigfloat::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

struct RossEvaluation {
    double cdf = 0.0;
    double cancelled_digits = 0.0;  // log10(largest |term| / |result|)
};

RossEvaluation ross_bigfloat_once(const std::vector<double>& rates, double t, int digits) {
    PrecisionScope scope(static_cast<unsigned>(digits));
    bigfloat sum = 0;
    bigfloat peak = 1;
    for (std::size_t i = 0; i < rates.size(); ++i) {
        bigfloat term = exp(bigfloat(-rates[i]) * t);
        for (std::size_t j = 0; j < rates.size(); ++j) {
            if (j == i) continue;
            term *= bigfloat(rates[j]) / (bigfloat(rates[j]) - bigfloat(rates[i]));
        }
        sum += term;
        const bigfloat magnitude = abs(term);
        if (magnitude > peak) peak = magnitude;
    }
    const bigfloat cdf = 1 - sum;
    RossEvaluation out;
    out.cdf = std::clamp(cdf.convert_to<double>(), 0.0, 1.0);
    if (cdf == 0) {
        out.cancelled_digits = static_cast<double>(digits);
    } else {
        const bigfloat lost = log10(bigfloat(peak / abs(cdf)));
        out.cancelled_digits = lost.convert_to<double>();
    }
    return out;
}

// Evaluates at `digits`, then raises the working precision until at least
// ~30 significant digits survive the term cancellation (near-equal rates can
// eat almost any fixed precision).
double ross_bigfloat(const std::vector<double>& rates, double t, int digits) {
    constexpr double kKeepDigits = 30.0;
    constexpr int kMaxDigits = 4000;
    int working = digits;
    for (;;) {
        const RossEvaluation eval = ross_bigfloat_once(rates, t, working);
        if (working - eval.cancelled_digits >= kKeepDigits || working >= kMaxDigits) {
            return eval.cdf;
        }
        working = std::min(kMaxDigits,
                           static_cast<int>(eval.cancelled_digits + kKeepDigits + 10.0));
    }
}

void check_digits(int digits) {
    if (digits < 30) {
        throw std::invalid_argument("extended-precision evaluation needs digits >= 30");
    }
}

}  // namespace

double highprecision_hypoexp_cdf(const Problem& problem, int digits) {
    check_digits(digits);
    if (!problem.rates().pairwise_distinct()) {
        throw Error(errc::duplicate_rates,
                    "closed-form evaluation requires pairwise distinct rates");
    }
    return ross_bigfloat(problem.rates().values(), problem.threshold(), digits);
}

double highprecision_hypoexp_cdf_split(const Problem& problem, int digits) {
    check_digits(digits);
    if (problem.rates().pairwise_distinct()) {
        return ross_bigfloat(problem.rates().values(), problem.threshold(), digits);
    }

    constexpr double kStagger = 1e-7;
    const auto& rates = problem.rates().values();
    auto staggered = [&](double direction) {
        std::map<double, int> seen;
        std::vector<double> out(rates.size());
        for (std::size_t i = 0; i < rates.size(); ++i) {
            const int occurrence = seen[rates[i]]++;
            out[i] = rates[i] * (1.0 + direction * occurrence * kStagger);
        }
        return out;
    };

    const std::vector<double> up = staggered(1.0);
    const std::vector<double> down = staggered(-1.0);
    for (const auto* v : {&up, &down}) {
        if (!RateVector(*v).pairwise_distinct()) {
            throw Error(errc::duplicate_rates,
                        "rate spacing too fine for duplicate staggering");
        }
    }
    const double t = problem.threshold();
    return 0.5 * (ross_bigfloat(up, t, digits) + ross_bigfloat(down, t, digits));
}

}  // namespace hypoexp
