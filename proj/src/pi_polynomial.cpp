#include "minkflow/pi_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "minkflow/errors.hpp"

namespace minkflow {

PiPolynomial::PiPolynomial(const Rational& constant) : coeffs_{constant} { trim(); }

PiPolynomial PiPolynomial::monomial(int power, const Rational& coefficient) {
    if (power < 0) throw InputError("PiPolynomial: negative powers of pi are not representable");
    PiPolynomial p;
    p.coeffs_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
    p.coeffs_.back() = coefficient;
    p.trim();
    return p;
}

PiPolynomial PiPolynomial::from_double(double value) {
    if (!std::isfinite(value)) throw InputError("PiPolynomial: non-finite value");
    return PiPolynomial(Rational(value));
}

Rational PiPolynomial::coefficient(int power) const {
    if (power < 0 || power > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(power)];
}

double PiPolynomial::evaluate() const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * std::numbers::pi + it->convert_to<double>();
    }
    return acc;
}

std::string PiPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[k] << ")";
        if (k == 1) os << "*pi";
        if (k > 1) os << "*pi^" << k;
    }
    return os.str();
}

PiPolynomial& PiPolynomial::operator+=(const PiPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

PiPolynomial& PiPolynomial::operator-=(const PiPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

PiPolynomial& PiPolynomial::operator*=(const PiPolynomial& o) {
    if (coeffs_.empty() || o.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

void PiPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace minkflow
