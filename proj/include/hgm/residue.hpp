#pragma once

#include <gmpxx.h>
#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace hgm {

/// Representative of x mod Z in [0,1), exact.
mpq_class frac_bracket(const mpq_class& x);

/// An element of Q/Z stored as a reduced fraction num/den with
/// 0 <= num < den; den = 1 encodes the zero class.
class Residue {
public:
    Residue() : num_(0), den_(1) {}
    explicit Residue(const mpq_class& q);
    Residue(const mpz_class& num, const mpz_class& den);
    Residue(long num, long den) : Residue(mpz_class(num), mpz_class(den)) {}

    // Accepts unreduced "num/den" (and bare integers); canonicalizes.
    static Residue parse(const std::string& s);

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    mpq_class rational() const { return mpq_class(num_, den_); }

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator-() const;
    Residue scaled(const mpz_class& k) const;

    bool operator==(const Residue& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    std::strong_ordering operator<=>(const Residue& o) const;

    std::string str() const;

private:
    mpz_class num_, den_;
};

/// An element of Z_(p)/Z: a residue whose denominator is prime to p.
class PResidue {
public:
    PResidue(Residue value, mpz_class p);

    const Residue& value() const { return value_; }
    const mpz_class& p() const { return p_; }

    PResidue times_p() const;
    // Unique preimage under multiplication by p.
    PResidue div_p() const;

    bool operator==(const PResidue& o) const {
        return value_ == o.value_ && p_ == o.p_;
    }

private:
    Residue value_;
    mpz_class p_;
};

/// Orbit [x, px, ..., p^{e-1}x] with e minimal such that p^e x = x.
std::pair<std::vector<PResidue>, unsigned> frobenius_orbit(const PResidue& x);

/// <<x>> = (1/e) * sum_{i<e} (<p^i x> - 1/2), exact.
mpq_class balanced_bracket(const PResidue& x);
mpq_class balanced_bracket(const Residue& x, const mpz_class& p);

} // namespace hgm
