#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>

#include <json.hpp>

namespace nullify {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in t^(1/2); keys are doubled exponents.
class LaurentPoly1 {
public:
    LaurentPoly1() = default;
    static LaurentPoly1 constant(const BigInt &c);
    static LaurentPoly1 monomial(const BigInt &c, int doubled_exp);

    const std::map<int, BigInt> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_exp() const;
    int max_exp() const;
    BigInt coeff(int doubled_exp) const;

    LaurentPoly1 &operator+=(const LaurentPoly1 &o);
    LaurentPoly1 &operator-=(const LaurentPoly1 &o);
    LaurentPoly1 operator+(const LaurentPoly1 &o) const;
    LaurentPoly1 operator-(const LaurentPoly1 &o) const;
    LaurentPoly1 operator*(const LaurentPoly1 &o) const;
    LaurentPoly1 operator-() const;
    LaurentPoly1 pow(unsigned n) const;
    LaurentPoly1 shifted(int doubled_exp) const;
    bool operator==(const LaurentPoly1 &o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly1 &o) const { return !(*this == o); }

    // substitute t -> 1/t
    LaurentPoly1 inverted() const;
    // exact quotient; throws if the division leaves a remainder
    LaurentPoly1 divided_exactly(const LaurentPoly1 &divisor) const;

    std::string to_string(const std::string &var = "t") const;
    static LaurentPoly1 parse(const std::string &text);
    nlohmann::json to_json() const;

    void add_term(int doubled_exp, const BigInt &c);

private:
    std::map<int, BigInt> terms_;
};

// Laurent polynomial in (v, z) with integer exponents.
class LaurentPoly2 {
public:
    using Key = std::pair<int, int>;

    LaurentPoly2() = default;
    static LaurentPoly2 constant(const BigInt &c);
    static LaurentPoly2 monomial(const BigInt &c, int v_exp, int z_exp);

    const std::map<Key, BigInt> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly2 &operator+=(const LaurentPoly2 &o);
    LaurentPoly2 &operator-=(const LaurentPoly2 &o);
    LaurentPoly2 operator+(const LaurentPoly2 &o) const;
    LaurentPoly2 operator-(const LaurentPoly2 &o) const;
    LaurentPoly2 operator*(const LaurentPoly2 &o) const;
    LaurentPoly2 operator-() const;
    LaurentPoly2 pow(unsigned n) const;
    bool operator==(const LaurentPoly2 &o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly2 &o) const { return !(*this == o); }

    std::string to_string() const;
    nlohmann::json to_json() const;

    void add_term(int v_exp, int z_exp, const BigInt &c);

private:
    std::map<Key, BigInt> terms_;
};

std::string big_to_string(const BigInt &c);
nlohmann::json big_to_json(const BigInt &c);

} // namespace nullify
