#include "boxcalc/polynomial.hpp"

#include <utility>

namespace boxcalc {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    Polynomial r = *this;
    for (auto& a : r.coeffs_) a *= c;
    return r;
}

Polynomial Polynomial::composed_shift(const Rational& h) const {
    if (h.is_zero() || coeffs_.empty()) return *this;
    // Taylor shift by iterated synthetic (Horner) steps: after pass j the
    // low coefficients 0..j hold the expansion of p about -h.
    Polynomial r = *this;
    const int d = r.degree();
    for (int j = 0; j < d; ++j) {
        for (int i = d - 1; i >= j; --i) {
            r.coeffs_[static_cast<std::size_t>(i)] +=
                h * r.coeffs_[static_cast<std::size_t>(i) + 1];
        }
    }
    r.trim();
    return r;
}

Polynomial Polynomial::reflected() const {
    Polynomial r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * Rational(static_cast<long long>(i));
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
    if (coeffs_.empty()) return {};
    std::vector<Rational> a(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        a[i + 1] = coeffs_[i] / Rational(static_cast<long long>(i) + 1);
    }
    return Polynomial(std::move(a));
}

}  // namespace boxcalc
