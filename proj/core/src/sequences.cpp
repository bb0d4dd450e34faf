#include "boxcalc/sequences.hpp"

#include <mutex>
#include <stdexcept>

#include "boxcalc/binomial.hpp"
#include "boxcalc/operators.hpp"

namespace boxcalc {

const PiecewisePoly& SequenceCache::element(int n) {
    if (n < 1) throw std::invalid_argument("sequence index starts at 1");
    if (elements_.empty()) elements_.push_back(make_box());
    while (size() < n) {
        const PiecewisePoly& prev = elements_.back();
        if (kind_ == SequenceKind::f) {
            elements_.push_back(window_K(prev));
        } else {
            elements_.push_back(
                linear_combine({{Rational(1), diff_L(prev)}, {Rational(1), window_K(prev)}}));
        }
    }
    return elements_[static_cast<std::size_t>(n) - 1];
}

namespace {

PiecewisePoly cached(SequenceKind kind, int n) {
    static SequenceCache f_cache(SequenceKind::f);
    static SequenceCache g_cache(SequenceKind::g);
    static std::mutex f_mutex;
    static std::mutex g_mutex;
    if (kind == SequenceKind::f) {
        std::lock_guard lock(f_mutex);
        return f_cache.element(n);
    }
    std::lock_guard lock(g_mutex);
    return g_cache.element(n);
}

}  // namespace

PiecewisePoly build_f(int n) { return cached(SequenceKind::f, n); }

PiecewisePoly build_g(int n) { return cached(SequenceKind::g, n); }

PiecewisePoly build_g_via_f(int n) {
    if (n < 1) throw std::invalid_argument("sequence index starts at 1");
    std::vector<std::pair<Rational, PiecewisePoly>> terms;
    terms.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k <= n - 1; ++k)
        terms.emplace_back(Rational(binomial(n - 1, k)),
                           apply_shift_combination(expand_L_power(k), build_f(n - k)));
    return linear_combine(terms);
}

PiecewisePoly population_profile(int t, const Rational& R) {
    if (t < 1) throw std::invalid_argument("population profile needs t >= 1");
    return linear_combine({{pow(R, static_cast<unsigned>(t)), build_f(t)}});
}

}  // namespace boxcalc
