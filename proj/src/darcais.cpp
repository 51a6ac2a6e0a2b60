#include "mckay/darcais.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "mckay/partitions.hpp"

namespace mckay {

RationalPolynomial::RationalPolynomial(std::vector<Rat> coeffs)
    : coeffs_(std::move(coeffs)) {
    normalize();
}

RationalPolynomial RationalPolynomial::constant(Rat c) {
    return RationalPolynomial({std::move(c)});
}

RationalPolynomial RationalPolynomial::variable() {
    return RationalPolynomial({Rat(0), Rat(1)});
}

Rat RationalPolynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rat(0);
}

Rat RationalPolynomial::operator()(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& g) {
    if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size());
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
    normalize();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& g) {
    if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size());
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
    normalize();
    return *this;
}

RationalPolynomial operator+(RationalPolynomial f, const RationalPolynomial& g) {
    f += g;
    return f;
}

RationalPolynomial operator-(RationalPolynomial f, const RationalPolynomial& g) {
    f -= g;
    return f;
}

RationalPolynomial operator*(const RationalPolynomial& f, const RationalPolynomial& g) {
    if (f.is_zero() || g.is_zero()) return RationalPolynomial();
    std::vector<Rat> out(f.coeffs_.size() + g.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
            out[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
    }
    return RationalPolynomial(std::move(out));
}

void RationalPolynomial::scale(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return;
    }
    for (Rat& x : coeffs_) x *= c;
}

void RationalPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::interpolate(
    const std::vector<std::pair<Rat, Rat>>& points) {
    RationalPolynomial acc;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RationalPolynomial basis = RationalPolynomial::constant(Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate: repeated abscissa");
            basis = basis * (RationalPolynomial::variable() -
                             RationalPolynomial::constant(points[j].first));
            denom *= points[i].first - points[j].first;
        }
        basis.scale(points[i].second / denom);
        acc += basis;
    }
    return acc;
}

std::string RationalPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].get_str() << "*r^" << i;
        first = false;
    }
    return os.str();
}

RationalPolynomial binomial_polynomial(unsigned long k) {
    RationalPolynomial p = RationalPolynomial::constant(Rat(1));
    Rat kfact(1);
    for (unsigned long i = 0; i < k; ++i) {
        p = p * (RationalPolynomial::variable() -
                 RationalPolynomial::constant(Rat(static_cast<long>(i))));
        kfact *= Rat(static_cast<long>(i) + 1);
    }
    p.scale(1 / kfact);
    return p;
}

Int DArcaisPolynomial::eval_int(long r) const {
    Rat v = poly(Rat(r));
    v.canonicalize();
    if (v.get_den() != 1)
        throw std::logic_error("DArcaisPolynomial: non-integral value at integer argument");
    return v.get_num();
}

DArcaisPolynomial darcais_poly(unsigned long n, unsigned long guard) {
    if (n > guard)
        throw std::invalid_argument("darcais_poly: enumeration guard exceeded");
    // binom(r, k) reappears for every multiplicity k <= n
    std::vector<RationalPolynomial> binom(n + 1);
    for (unsigned long k = 0; k <= n; ++k) binom[k] = binomial_polynomial(k);

    RationalPolynomial acc;
    for_each_partition(n, [&](const std::vector<unsigned>& parts) {
        RationalPolynomial term = RationalPolynomial::constant(
            Rat(parts.size() % 2 == 0 ? 1 : -1));
        std::size_t i = 0;
        while (i < parts.size()) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            term = term * binom[j - i];  // multiplicity of this distinct part
            i = j;
        }
        acc += term;
    });
    return DArcaisPolynomial{n, std::move(acc)};
}

TruncatedSeries darcais_series(long r, std::size_t N) {
    return binom_product_pow(r, N, N);
}

Int darcais_eval_series(long r, unsigned long n) {
    return darcais_series(r, n).coeff(n);
}

Rat darcais_eval_hook(const Rat& r, unsigned long n, unsigned long guard) {
    if (n > guard)
        throw std::invalid_argument("darcais_eval_hook: enumeration guard exceeded");
    // 1 - (r+1)/h^2 depends only on the hook length, so cache per h
    std::vector<Rat> factor(n + 1, Rat(0));
    for (unsigned long h = 1; h <= n; ++h) {
        factor[h] = Rat(1) - (r + 1) / Rat(static_cast<long>(h * h));
    }
    Rat acc(0);
    for_each_partition(n, [&](const std::vector<unsigned>& parts) {
        Rat term(1);
        for (unsigned h : hook_lengths(parts)) term *= factor[h];
        acc += term;
    });
    return acc;
}

DArcaisDivisibility darcais_divisibility(unsigned long ell, unsigned long j,
                                         unsigned long n) {
    if (!is_prime(ell))
        throw std::invalid_argument("darcais_divisibility: ell must be prime");
    if (j == 0 || n == 0)
        throw std::invalid_argument("darcais_divisibility: j and n must be positive");
    const unsigned long b = ord_prime(ell, Int(n));
    if (b >= j)
        throw std::invalid_argument(
            "darcais_divisibility: requires ord_ell(n) < j; the statement "
            "asserts nothing otherwise");
    DArcaisDivisibility out;
    out.bound = j - b;
    const long r = -static_cast<long>(ipow(ell, static_cast<unsigned>(j)));
    out.value = darcais_eval_series(r, n);
    Int modulus(ipow(ell, static_cast<unsigned>(out.bound)));
    out.holds = mpz_divisible_p(out.value.get_mpz_t(), modulus.get_mpz_t()) != 0;
    return out;
}

}  // namespace mckay
