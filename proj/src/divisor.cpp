#include "iwg/divisor.hpp"

#include "iwg/errors.hpp"

namespace iwg {

Divisor::Divisor(std::map<int, mpz_class> coefficients) : coefficients_(std::move(coefficients)) {
    for (auto it = coefficients_.begin(); it != coefficients_.end();) {
        if (it->second == 0)
            it = coefficients_.erase(it);
        else
            ++it;
    }
}

mpz_class Divisor::coefficient(int v) const {
    auto it = coefficients_.find(v);
    return it == coefficients_.end() ? mpz_class(0) : it->second;
}

void Divisor::set_coefficient(int v, mpz_class c) {
    if (c == 0)
        coefficients_.erase(v);
    else
        coefficients_[v] = std::move(c);
}

mpz_class Divisor::degree() const {
    mpz_class sum = 0;
    for (const auto& [v, c] : coefficients_) sum += c;
    return sum;
}

Divisor& Divisor::operator+=(const Divisor& rhs) {
    for (const auto& [v, c] : rhs.coefficients_) set_coefficient(v, coefficient(v) + c);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& rhs) {
    for (const auto& [v, c] : rhs.coefficients_) set_coefficient(v, coefficient(v) - c);
    return *this;
}

Divisor Divisor::operator+(const Divisor& rhs) const {
    Divisor out = *this;
    out += rhs;
    return out;
}

Divisor Divisor::operator-(const Divisor& rhs) const {
    Divisor out = *this;
    out -= rhs;
    return out;
}

Divisor principal_divisor(const Graph& g, int v) {
    if (v < 1 || v > g.vertex_count())
        throw input_error("principal_divisor: vertex " + std::to_string(v) + " out of range");
    Divisor d;
    d.set_coefficient(v, g.degree(v));
    for (const auto& [i, j] : g.edges()) {
        if (i == v) d.set_coefficient(j, -1);
        if (j == v) d.set_coefficient(i, -1);
    }
    return d;
}

Divisor laplacian_image(const Graph& g, const Divisor& d) {
    Divisor out;
    for (const auto& [v, c] : d.coefficients()) {
        if (v < 1 || v > g.vertex_count())
            throw input_error("laplacian_image: divisor supported outside the graph");
        Divisor pv = principal_divisor(g, v);
        for (const auto& [w, pc] : pv.coefficients()) out.set_coefficient(w, out.coefficient(w) + c * pc);
    }
    return out;
}

}  // namespace iwg
