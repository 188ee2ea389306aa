#include "iwg/group_ring.hpp"

#include <sstream>

#include "iwg/numutil.hpp"

namespace iwg {

void GroupRingElement::insert_term(long long exp, mpz_class coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, std::move(coeff));
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement GroupRingElement::constant(mpz_class c) {
    return monomial(std::move(c), 0);
}

GroupRingElement GroupRingElement::monomial(mpz_class coeff, long long exp) {
    GroupRingElement e;
    if (coeff != 0) e.terms_.emplace(exp, std::move(coeff));
    return e;
}

mpz_class GroupRingElement::coefficient(long long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
    for (const auto& [exp, coeff] : rhs.terms_) insert_term(exp, coeff);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
    for (const auto& [exp, coeff] : rhs.terms_) insert_term(exp, -coeff);
    return *this;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& rhs) const {
    GroupRingElement out = *this;
    out += rhs;
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& rhs) const {
    GroupRingElement out = *this;
    out -= rhs;
    return out;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out;
    for (const auto& [exp, coeff] : terms_) out.terms_.emplace(exp, -coeff);
    return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
    GroupRingElement out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) out.insert_term(e1 + e2, c1 * c2);
    return out;
}

GroupRingElement GroupRingElement::reduced_mod_cycle(long long modulus) const {
    GroupRingElement out;
    for (const auto& [exp, coeff] : terms_) out.insert_term(mod_floor(exp, modulus), coeff);
    return out;
}

mpz_class GroupRingElement::evaluate_at_one() const {
    mpz_class sum = 0;
    for (const auto& [exp, coeff] : terms_) sum += coeff;
    return sum;
}

mpz_class GroupRingElement::content() const {
    mpz_class g = 0;
    for (const auto& [exp, coeff] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), coeff.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::string GroupRingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest exponent first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exp, coeff] = *it;
        mpz_class mag = abs(coeff);
        if (first) {
            if (coeff < 0) out << "-";
            first = false;
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        if (exp == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag << "*";
            out << "x";
            if (exp != 1) out << "^" << exp;
        }
    }
    return out.str();
}

}  // namespace iwg
