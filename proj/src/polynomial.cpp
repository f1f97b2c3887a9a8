#include "domipoly/polynomial.hpp"

#include <ostream>
#include <sstream>

namespace domipoly {

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(BigInt c) {
    Polynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::monomial(std::size_t deg, BigInt coeff) {
    Polynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(deg + 1, BigInt(0));
        p.coeffs_[deg] = std::move(coeff);
    }
    return p;
}

Polynomial Polynomial::one_plus_x_pow(unsigned long e) {
    Polynomial p;
    p.coeffs_.resize(e + 1);
    for (unsigned long i = 0; i <= e; ++i)
        mpz_bin_uiui(p.coeffs_[i].get_mpz_t(), e, i);
    return p;
}

std::size_t Polynomial::degree() const {
    if (is_zero()) throw UndefinedDegreeError("degree of the zero polynomial is undefined");
    return coeffs_.size() - 1;
}

std::size_t Polynomial::min_degree() const {
    if (is_zero()) throw UndefinedDegreeError("min_degree of the zero polynomial is undefined");
    std::size_t i = 0;
    while (coeffs_[i] == 0) ++i;
    return i;
}

const BigInt& Polynomial::coeff(std::size_t i) const {
    static const BigInt kZero(0);
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

BigInt Polynomial::eval_int(const BigInt& t) const {
    BigInt acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::shifted_down(std::size_t m) const {
    if (is_zero()) throw UndefinedDegreeError("cannot shift the zero polynomial");
    Polynomial q;
    q.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(m), coeffs_.end());
    return q;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
}

Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Polynomial::zero();
    const auto a = lhs.coeffs();
    const auto b = rhs.coeffs();
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return Polynomial(std::move(out));
}

Polynomial pow(const Polynomial& base, unsigned long e) {
    Polynomial acc = Polynomial::one();
    Polynomial sq = base;
    while (e > 0) {
        if (e & 1UL) acc *= sq;
        e >>= 1UL;
        if (e > 0) sq *= sq;
    }
    return acc;
}

std::string Polynomial::to_json() const {
    std::string out = "{\"coeffs\":[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += '"';
        out += coeffs_[i].get_str();
        out += '"';
    }
    out += "]}";
    return out;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = coeffs_.size(); d-- > 0;) {
        const BigInt& c = coeffs_[d];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || d == 0) os << mag.get_str();
        if (d >= 1) {
            os << "x";
            if (d >= 2) os << "^" << d;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace domipoly
