#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mckay/arith.hpp"
#include "mckay/series.hpp"

namespace mckay {

// Dense polynomial in one variable with exact rational coefficients,
// monomial basis, no trailing zeros.
class RationalPolynomial {
public:
    RationalPolynomial() = default;  // the zero polynomial
    explicit RationalPolynomial(std::vector<Rat> coeffs);

    static RationalPolynomial constant(Rat c);
    static RationalPolynomial variable();  // r

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rat coeff(std::size_t k) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rat operator()(const Rat& x) const;

    RationalPolynomial& operator+=(const RationalPolynomial& g);
    RationalPolynomial& operator-=(const RationalPolynomial& g);
    friend RationalPolynomial operator+(RationalPolynomial f, const RationalPolynomial& g);
    friend RationalPolynomial operator-(RationalPolynomial f, const RationalPolynomial& g);
    friend RationalPolynomial operator*(const RationalPolynomial& f,
                                        const RationalPolynomial& g);
    bool operator==(const RationalPolynomial& o) const { return coeffs_ == o.coeffs_; }

    void scale(const Rat& c);

    // Unique polynomial of degree < points.size() through the given
    // (x, y) pairs with pairwise distinct x (Lagrange form).
    static RationalPolynomial interpolate(const std::vector<std::pair<Rat, Rat>>& points);

    std::string to_string() const;

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

// binom(r, k) = r(r-1)...(r-k+1)/k! as a degree-k polynomial in r.
RationalPolynomial binomial_polynomial(unsigned long k);

// f(r;n): the coefficient of q^n in prod_{m>=1} (1-q^m)^r, as a polynomial
// in r of degree exactly n (for n >= 1) whose values at integers are integers.
struct DArcaisPolynomial {
    unsigned long n;
    RationalPolynomial poly;

    Rat eval(const Rat& r) const { return poly(r); }
    // Evaluation at an integer argument; throws std::logic_error if the
    // exact value is not an integer.
    Int eval_int(long r) const;
};

// Default cap for the partition-sum routes (the series route is the route
// of record for large n).
inline constexpr unsigned long kDArcaisGuard = 40;

// Partition-multiplicity route: f(r;n) = sum over partitions of n of
// (-1)^{#parts} * prod over distinct parts of binom(r, multiplicity).
DArcaisPolynomial darcais_poly(unsigned long n, unsigned long guard = kDArcaisGuard);

// Series route: the whole coefficient row f(r;0..N) for a fixed integer r.
TruncatedSeries darcais_series(long r, std::size_t N);

// Series route, single coefficient.
Int darcais_eval_series(long r, unsigned long n);

// Hook-length route: f(r;n) = sum over partitions of n of
// prod over hooks h of (1 - (r+1)/h^2), exact in rationals.
Rat darcais_eval_hook(const Rat& r, unsigned long n,
                      unsigned long guard = kDArcaisGuard);

struct DArcaisDivisibility {
    unsigned long bound;  // j - ord_ell(n)
    bool holds;           // ell^bound divides f(-ell^j; n)
    Int value;            // f(-ell^j; n)
};

// Divisibility of the specialization f(-ell^j; n): requires
// ord_ell(n) < j, else the statement asserts nothing and the call is
// rejected.
DArcaisDivisibility darcais_divisibility(unsigned long ell, unsigned long j,
                                         unsigned long n);

}  // namespace mckay
