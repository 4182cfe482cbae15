#include "slopelab/laurent.hpp"

#include <sstream>

namespace slopelab {

std::string rational_to_string(const Rational& r) {
    Rational c(r);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

LaurentPoly LaurentPoly::constant(const Rational& c) {
    LaurentPoly p;
    p.add_term(Exponent(0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, Exponent e) {
    LaurentPoly p;
    p.add_term(e, coeff);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Rational LaurentPoly::coeff(Exponent e) const {
    auto it = terms_.find(e.num);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(Exponent e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(e.num, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
        else it->second.canonicalize();
    } else {
        it->second.canonicalize();
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(Exponent(e), c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(Exponent(e), -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    if (terms_.empty() || o.terms_.empty()) return r;
    // iterate over the smaller factor's terms in the outer loop
    const LaurentPoly& small = terms_.size() <= o.terms_.size() ? *this : o;
    const LaurentPoly& big = terms_.size() <= o.terms_.size() ? o : *this;
    for (const auto& [e1, c1] : small.terms_)
        for (const auto& [e2, c2] : big.terms_)
            r.add_term(Exponent(e1 + e2), c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly acc = LaurentPoly::one();
    LaurentPoly base(*this);
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

void LaurentPoly::shift_scale(Exponent e, const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return;
    }
    TermMap shifted;
    for (auto& [ex, co] : terms_) {
        Rational nc = co * c;
        nc.canonicalize();
        shifted.emplace(ex + e.num, std::move(nc));
    }
    terms_ = std::move(shifted);
}

LaurentPoly LaurentPoly::substitute_q_inverse() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

Exponent LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw ZeroPolynomialError("max_exponent of zero polynomial");
    return Exponent(terms_.rbegin()->first);
}

Exponent LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw ZeroPolynomialError("min_exponent of zero polynomial");
    return Exponent(terms_.begin()->first);
}

bool LaurentPoly::is_integral() const {
    for (const auto& [e, c] : terms_)
        if (e % 8 != 0 || c.get_den() != 1) return false;
    return true;
}

std::string LaurentPoly::serialize() const {
    std::ostringstream os;
    for (const auto& [e, c] : terms_)
        os << e << " " << c.get_num().get_str() << " " << c.get_den().get_str() << "\n";
    return os.str();
}

LaurentPoly LaurentPoly::deserialize(const std::string& text) {
    LaurentPoly p;
    std::istringstream is(text);
    std::string line;
    std::int64_t prev_exp = 0;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::int64_t e;
        std::string num, den;
        if (!(ls >> e >> num >> den)) throw DomainError("malformed polynomial line: " + line);
        std::string rest;
        if (ls >> rest) throw DomainError("trailing junk in polynomial line: " + line);
        if (!first && e <= prev_exp) throw DomainError("polynomial lines out of order");
        first = false;
        prev_exp = e;
        Rational c = rational_from_string(num + "/" + den);
        if (sgn(c) == 0) throw DomainError("zero term in serialized polynomial");
        p.add_term(Exponent(e), c);
    }
    return p;
}

std::string LaurentPoly::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) { os << "-"; a = -a; }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool unit_coeff = (a == 1);
        if (e == 0) {
            os << rational_to_string(a);
        } else {
            if (!unit_coeff) os << rational_to_string(a) << "*";
            os << "q";
            if (e != 8) {
                if (e % 8 == 0) os << "^" << (e / 8);
                else os << "^(" << e << "/8)";
            }
        }
    }
    return os.str();
}

DegreeData degree_data(const LaurentPoly& p) {
    if (p.is_zero()) throw ZeroPolynomialError("degree_data of zero polynomial");
    const auto& t = p.terms();
    DegreeData d;
    d.d_plus = Exponent(t.rbegin()->first).value();
    d.d_minus = Exponent(t.begin()->first).value();
    d.lead_sign = sgn(t.rbegin()->second) > 0 ? 1 : -1;
    d.trail_sign = sgn(t.begin()->second) > 0 ? 1 : -1;
    return d;
}

LaurentPoly arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
    }
    throw DomainError("unknown arith op");
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw DomainError("exact_div by zero polynomial");
    if (num.is_zero()) return LaurentPoly::zero();
    // Any exact quotient q satisfies min(q) = min(num) - min(den); once the
    // running remainder's top falls below that bound no quotient exists.
    const std::int64_t lo_bound = num.min_exponent().num - den.min_exponent().num;
    const std::int64_t den_top = den.max_exponent().num;
    const Rational den_lead = den.terms().rbegin()->second;

    LaurentPoly quotient;
    LaurentPoly rem(num);
    while (!rem.is_zero()) {
        const std::int64_t e = rem.max_exponent().num - den_top;
        if (e < lo_bound) throw NotDivisibleError("no exact Laurent quotient");
        Rational c = rem.terms().rbegin()->second / den_lead;
        c.canonicalize();
        quotient.add_term(Exponent(e), c);
        LaurentPoly sub(den);
        sub.shift_scale(Exponent(e), c);
        rem -= sub;
    }
    return quotient;
}

RationalLaurent::RationalLaurent(LaurentPoly n, LaurentPoly d)
    : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw DomainError("RationalLaurent with zero denominator");
}

RationalLaurent RationalLaurent::operator+(const RationalLaurent& o) const {
    if (den == o.den) return RationalLaurent(num + o.num, den);
    return RationalLaurent(num * o.den + o.num * den, den * o.den);
}

RationalLaurent RationalLaurent::operator*(const RationalLaurent& o) const {
    return RationalLaurent(num * o.num, den * o.den);
}

RationalLaurent RationalLaurent::operator*(const LaurentPoly& p) const {
    return RationalLaurent(num * p, den);
}

Rational RationalLaurent::d_plus_extended() const {
    return degree_data(num).d_plus - degree_data(den).d_plus;
}

Rational RationalLaurent::d_minus_extended() const {
    return degree_data(num).d_minus - degree_data(den).d_minus;
}

LaurentPoly rational_reduce(const RationalLaurent& r) {
    return exact_div(r.num, r.den);
}

} // namespace slopelab
