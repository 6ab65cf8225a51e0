#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace equifront {

// Laurent polynomial with integer coefficients in one variable.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(long long c, int exp = 0);

    static Laurent zero() { return Laurent(); }
    static Laurent one() { return Laurent(1, 0); }
    static Laurent monomial(long long c, int exp) { return Laurent(c, exp); }

    bool is_zero() const { return terms_.empty(); }
    long long coeff(int exp) const;
    int min_exp() const;
    int max_exp() const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }
    bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

    // Substitute the variable by its inverse (exponent negation).
    Laurent invert_variable() const;

    // Exact division; throws std::domain_error if the remainder is nonzero.
    Laurent divide_exact(const Laurent& d) const;

    // Rescale exponents by 1/k; all exponents must be divisible by k.
    Laurent scale_exponents_down(int k) const;

    // Sorted "c*t^k" terms joined by " + "; "0" when empty.
    std::string to_string(const std::string& var = "t") const;
    static Laurent parse(const std::string& text, const std::string& var = "t");

    const std::map<int, long long>& terms() const { return terms_; }

private:
    std::map<int, long long> terms_;  // exponent -> nonzero coefficient
    void set(int exp, long long c);
};

}  // namespace equifront
