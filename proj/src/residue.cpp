#include "hgm/residue.hpp"

#include <stdexcept>

namespace hgm {

mpq_class frac_bracket(const mpq_class& x) {
    mpz_class fl;
    // floor division of num by den (den > 0 after canonicalization)
    mpq_class q = x;
    q.canonicalize();
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    mpq_class r = q - mpq_class(fl);
    r.canonicalize();
    return r;
}

Residue::Residue(const mpq_class& q) {
    mpq_class r = frac_bracket(q);
    num_ = r.get_num();
    den_ = r.get_den();
}

Residue::Residue(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("residue: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    mpq_class r = frac_bracket(q);
    num_ = r.get_num();
    den_ = r.get_den();
}

Residue Residue::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Residue(mpz_class(s), mpz_class(1));
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        return Residue(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("residue: cannot parse '" + s + "'");
    }
}

Residue Residue::operator+(const Residue& o) const {
    return Residue(rational() + o.rational());
}

Residue Residue::operator-(const Residue& o) const {
    return Residue(rational() - o.rational());
}

Residue Residue::operator-() const {
    return Residue(-rational());
}

Residue Residue::scaled(const mpz_class& k) const {
    return Residue(mpq_class(k) * rational());
}

std::strong_ordering Residue::operator<=>(const Residue& o) const {
    int c = cmp(rational(), o.rational());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Residue::str() const {
    return num_.get_str() + "/" + den_.get_str();
}

PResidue::PResidue(Residue value, mpz_class p) : value_(std::move(value)), p_(std::move(p)) {
    if (p_ < 2) throw std::invalid_argument("presidue: p must be a prime >= 2");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), value_.den().get_mpz_t(), p_.get_mpz_t());
    if (g != 1) throw std::invalid_argument("presidue: denominator not prime to p");
}

PResidue PResidue::times_p() const {
    return PResidue(value_.scaled(p_), p_);
}

PResidue PResidue::div_p() const {
    // p is invertible mod den; x/p = (num * p^{-1} mod den) / den.
    const mpz_class& d = value_.den();
    if (d == 1) return *this;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), p_.get_mpz_t(), d.get_mpz_t()) == 0)
        throw std::logic_error("presidue: p not invertible mod denominator");
    mpz_class n = (value_.num() * inv) % d;
    return PResidue(Residue(n, d), p_);
}

std::pair<std::vector<PResidue>, unsigned> frobenius_orbit(const PResidue& x) {
    std::vector<PResidue> orbit{x};
    PResidue y = x.times_p();
    while (!(y == x)) {
        orbit.push_back(y);
        y = y.times_p();
    }
    return {orbit, static_cast<unsigned>(orbit.size())};
}

mpq_class balanced_bracket(const PResidue& x) {
    auto [orbit, e] = frobenius_orbit(x);
    mpq_class sum(0);
    for (const auto& y : orbit) sum += y.value().rational() - mpq_class(1, 2);
    sum /= mpq_class(e);
    sum.canonicalize();
    return sum;
}

mpq_class balanced_bracket(const Residue& x, const mpz_class& p) {
    return balanced_bracket(PResidue(x, p));
}

} // namespace hgm
