#include "nullify/laurent.hpp"

#include <limits>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace nullify {

std::string big_to_string(const BigInt &c) { return c.str(); }

nlohmann::json big_to_json(const BigInt &c) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return static_cast<long long>(c);
    return c.str();
}

LaurentPoly1 LaurentPoly1::constant(const BigInt &c) { return monomial(c, 0); }

LaurentPoly1 LaurentPoly1::monomial(const BigInt &c, int doubled_exp) {
    LaurentPoly1 p;
    p.add_term(doubled_exp, c);
    return p;
}

void LaurentPoly1::add_term(int e, const BigInt &c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

int LaurentPoly1::min_exp() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no exponent");
    return terms_.begin()->first;
}

int LaurentPoly1::max_exp() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no exponent");
    return terms_.rbegin()->first;
}

BigInt LaurentPoly1::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly1 &LaurentPoly1::operator+=(const LaurentPoly1 &o) {
    for (const auto &[e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly1 &LaurentPoly1::operator-=(const LaurentPoly1 &o) {
    for (const auto &[e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly1 LaurentPoly1::operator+(const LaurentPoly1 &o) const {
    LaurentPoly1 r = *this;
    r += o;
    return r;
}

LaurentPoly1 LaurentPoly1::operator-(const LaurentPoly1 &o) const {
    LaurentPoly1 r = *this;
    r -= o;
    return r;
}

LaurentPoly1 LaurentPoly1::operator*(const LaurentPoly1 &o) const {
    LaurentPoly1 r;
    for (const auto &[e1, c1] : terms_)
        for (const auto &[e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly1 LaurentPoly1::operator-() const {
    LaurentPoly1 r;
    for (const auto &[e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly1 LaurentPoly1::pow(unsigned n) const {
    LaurentPoly1 r = constant(1), b = *this;
    while (n) {
        if (n & 1u) r = r * b;
        b = b * b;
        n >>= 1u;
    }
    return r;
}

LaurentPoly1 LaurentPoly1::shifted(int d) const {
    LaurentPoly1 r;
    for (const auto &[e, c] : terms_) r.terms_.emplace(e + d, c);
    return r;
}

LaurentPoly1 LaurentPoly1::inverted() const {
    LaurentPoly1 r;
    for (const auto &[e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

LaurentPoly1 LaurentPoly1::divided_exactly(const LaurentPoly1 &divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPoly1 rem = *this, q;
    const int dtop = divisor.max_exp();
    const BigInt &dlead = divisor.terms_.rbegin()->second;
    const int dspan = dtop - divisor.min_exp();
    while (!rem.is_zero()) {
        if (rem.max_exp() - rem.min_exp() < dspan) throw std::domain_error("inexact polynomial division");
        const BigInt &rl = rem.terms_.rbegin()->second;
        if (rl % dlead != 0) throw std::domain_error("inexact polynomial division");
        LaurentPoly1 t = monomial(rl / dlead, rem.max_exp() - dtop);
        q += t;
        rem -= t * divisor;
    }
    return q;
}

std::string LaurentPoly1::to_string(const std::string &var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*" << var << "^(" << e << "/2)";
    }
    return os.str();
}

LaurentPoly1 LaurentPoly1::parse(const std::string &text) {
    LaurentPoly1 p;
    static const std::regex term(R"(\s*(-?\d+)\*t\^\((-?\d+)/2\)\s*)");
    std::string s = text;
    if (s.find_first_not_of(" \t") == std::string::npos) return p;
    if (s == "0") return p;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(" + ", pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        std::smatch m;
        if (!std::regex_match(tok, m, term)) throw std::invalid_argument("bad polynomial term '" + tok + "'");
        p.add_term(std::stoi(m[2].str()), BigInt(m[1].str()));
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    return p;
}

nlohmann::json LaurentPoly1::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto &[e, c] : terms_) j[std::to_string(e)] = big_to_json(c);
    return j;
}

LaurentPoly2 LaurentPoly2::constant(const BigInt &c) { return monomial(c, 0, 0); }

LaurentPoly2 LaurentPoly2::monomial(const BigInt &c, int v, int z) {
    LaurentPoly2 p;
    p.add_term(v, z, c);
    return p;
}

void LaurentPoly2::add_term(int v, int z, const BigInt &c) {
    if (c == 0) return;
    Key k{v, z};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly2 &LaurentPoly2::operator+=(const LaurentPoly2 &o) {
    for (const auto &[k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

LaurentPoly2 &LaurentPoly2::operator-=(const LaurentPoly2 &o) {
    for (const auto &[k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2 &o) const {
    LaurentPoly2 r = *this;
    r += o;
    return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2 &o) const {
    LaurentPoly2 r = *this;
    r -= o;
    return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2 &o) const {
    LaurentPoly2 r;
    for (const auto &[k1, c1] : terms_)
        for (const auto &[k2, c2] : o.terms_) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r;
    for (const auto &[k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

LaurentPoly2 LaurentPoly2::pow(unsigned n) const {
    LaurentPoly2 r = constant(1), b = *this;
    while (n) {
        if (n & 1u) r = r * b;
        b = b * b;
        n >>= 1u;
    }
    return r;
}

std::string LaurentPoly2::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*v^" << k.first << "*z^" << k.second;
    }
    return os.str();
}

nlohmann::json LaurentPoly2::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto &[k, c] : terms_) j.push_back({{"v", k.first}, {"z", k.second}, {"c", big_to_json(c)}});
    return j;
}

} // namespace nullify
