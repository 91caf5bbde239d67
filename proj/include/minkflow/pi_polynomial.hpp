#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace minkflow {

using Rational = boost::multiprecision::cpp_rational;

/// Exact polynomial in pi with rational coefficients, sum_k c_k * pi^k.
/// Closed under +, -, *; enough to expand the Euclidean area/volume
/// polynomials without rounding.
class PiPolynomial {
public:
    PiPolynomial() = default;
    PiPolynomial(const Rational& constant);  // NOLINT: implicit by design of the arithmetic
    PiPolynomial(long long constant) : PiPolynomial(Rational(constant)) {}

    /// coefficient * pi^power
    static PiPolynomial monomial(int power, const Rational& coefficient = Rational(1));
    /// Exact binary value of a double.
    static PiPolynomial from_double(double value);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Rational coefficient(int power) const;

    double evaluate() const;
    std::string to_string() const;

    PiPolynomial& operator+=(const PiPolynomial& o);
    PiPolynomial& operator-=(const PiPolynomial& o);
    PiPolynomial& operator*=(const PiPolynomial& o);
    friend PiPolynomial operator+(PiPolynomial a, const PiPolynomial& b) { return a += b; }
    friend PiPolynomial operator-(PiPolynomial a, const PiPolynomial& b) { return a -= b; }
    friend PiPolynomial operator*(PiPolynomial a, const PiPolynomial& b) { return a *= b; }
    friend PiPolynomial operator-(const PiPolynomial& a) { return PiPolynomial{} - a; }
    friend bool operator==(const PiPolynomial& a, const PiPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace minkflow
