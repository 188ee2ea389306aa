#include "iwg/iwasawa.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "iwg/errors.hpp"
#include "iwg/numutil.hpp"

namespace iwg {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------
// Growth-law fit

namespace {

mpz_class predicted_exponent(long long mu, long long lambda, long long nu, long long p, long long m) {
    return to_mpz(mu) * pow_ll(p, static_cast<unsigned long>(m)) + to_mpz(lambda * m + nu);
}

}  // namespace

IwasawaFit fit_invariants(const std::vector<long long>& e, long long p) {
    if (!is_prime(p)) throw input_error("fit_invariants: " + std::to_string(p) + " is not prime");
    const long long M = static_cast<long long>(e.size()) - 1;
    if (M < 3)
        throw math_error("fit_invariants: too few points (" + std::to_string(e.size()) +
                         "); need at least 4 exponents");
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0) throw input_error("fit_invariants: exponent e[" + std::to_string(i) + "] is negative");

    std::ostringstream residuals;
    for (long long m0 = 0; M - m0 >= 3; ++m0) {
        // d_m = e_{m+1} - e_m = mu*p^m*(p-1) + lambda, so the second
        // difference at m0 isolates mu.
        const long long d0 = e[m0 + 1] - e[m0];
        const long long d1 = e[m0 + 2] - e[m0 + 1];
        const long p1 = static_cast<long>(p - 1);
        const mpz_class denom = pow_ll(p, static_cast<unsigned long>(m0)) * p1 * p1;
        const mpz_class second_diff = to_mpz(d1 - d0);
        auto reject = [&](const std::string& why) { residuals << "  m0=" << m0 << ": " << why << "\n"; };
        if (second_diff % denom != 0) {
            reject("second difference " + mpz_class(second_diff).get_str() + " not divisible by p^m0*(p-1)^2 = " +
                   denom.get_str());
            continue;
        }
        const mpz_class mu_z = second_diff / denom;
        if (mu_z < 0) {
            reject("mu = " + mu_z.get_str() + " is negative");
            continue;
        }
        if (!mu_z.fits_slong_p()) {
            reject("mu does not fit a machine word");
            continue;
        }
        const long long mu = mu_z.get_si();
        const mpz_class lambda_z = to_mpz(d0) - mu_z * pow_ll(p, static_cast<unsigned long>(m0)) * p1;
        if (lambda_z < 0) {
            reject("lambda = " + lambda_z.get_str() + " is negative");
            continue;
        }
        if (!lambda_z.fits_slong_p()) {
            reject("lambda does not fit a machine word");
            continue;
        }
        const long long lambda = lambda_z.get_si();
        const mpz_class nu_z =
            to_mpz(e[m0]) - mu_z * pow_ll(p, static_cast<unsigned long>(m0)) - to_mpz(lambda * m0);
        const long long nu = nu_z.get_si();
        bool ok = true;
        for (long long m = m0; m <= M && ok; ++m) {
            mpz_class predicted = predicted_exponent(mu, lambda, nu, p, m);
            if (predicted != to_mpz(e[m])) {
                reject("tail mismatch at m=" + std::to_string(m) + " (observed " + std::to_string(e[m]) +
                       ", predicted " + predicted.get_str() + ")");
                ok = false;
            }
        }
        if (!ok) continue;
        return IwasawaFit{mu, lambda, nu, m0, M - m0 + 1};
    }
    throw math_error("fit_invariants: insufficient or non-conforming data; residuals:\n" + residuals.str());
}

std::string fit_json(const IwasawaFit& fit) {
    ordered_json j;
    j["mu"] = fit.mu;
    j["lambda"] = fit.lambda;
    j["nu"] = fit.nu;
    j["m0"] = fit.m0;
    j["verified_levels"] = fit.verified_levels;
    return j.dump();
}

// ---------------------------------------------------------------------
// Determinant over the Laurent ring

namespace {

// Dense polynomial in Z[x]; c[k] is the coefficient of x^k, trailing
// zeros trimmed, zero polynomial = empty vector.
using Poly = std::vector<mpz_class>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    poly_trim(out);
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly out = a;
    if (out.size() < b.size()) out.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    poly_trim(out);
    return out;
}

// Exact quotient a / b in Z[x]; the caller guarantees b | a.
Poly poly_exact_div(Poly a, const Poly& b) {
    if (b.empty()) throw std::logic_error("poly_exact_div: division by zero polynomial");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::logic_error("poly_exact_div: quotient is not polynomial");
    Poly q(a.size() - b.size() + 1);
    const mpz_class& lead = b.back();
    for (size_t k = q.size(); k-- > 0;) {
        mpz_class& target = a[k + b.size() - 1];
        if (target == 0) {
            q[k] = 0;
            continue;
        }
        if (!mpz_divisible_p(target.get_mpz_t(), lead.get_mpz_t()))
            throw std::logic_error("poly_exact_div: non-exact step");
        mpz_divexact(q[k].get_mpz_t(), target.get_mpz_t(), lead.get_mpz_t());
        for (size_t i = 0; i < b.size(); ++i)
            mpz_submul(a[k + i].get_mpz_t(), q[k].get_mpz_t(), b[i].get_mpz_t());
    }
    for (const auto& c : a)
        if (c != 0) throw std::logic_error("poly_exact_div: nonzero remainder");
    poly_trim(q);
    return q;
}

// Fraction-free (Bareiss) determinant over Z[x].
Poly poly_determinant(std::vector<std::vector<Poly>> a) {
    const size_t n = a.size();
    if (n == 0) return {mpz_class(1)};
    int sign = 1;
    Poly prev = {mpz_class(1)};
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].empty()) {
            size_t r = k + 1;
            while (r < n && a[r][k].empty()) ++r;
            if (r == n) return {};
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly t = poly_sub(poly_mul(a[k][k], a[i][j]), poly_mul(a[i][k], a[k][j]));
                a[i][j] = t.empty() ? Poly{} : poly_exact_div(std::move(t), prev);
            }
            a[i][k].clear();
        }
        prev = a[k][k];
    }
    Poly det = a[n - 1][n - 1];
    if (sign < 0)
        for (auto& c : det) mpz_neg(c.get_mpz_t(), c.get_mpz_t());
    return det;
}

// det of a matrix of group-ring elements: rows are scaled by x^k to clear
// negative exponents, the polynomial determinant is taken, and the result
// is shifted back.
GroupRingElement laurent_determinant(const std::vector<std::vector<GroupRingElement>>& m) {
    const size_t n = m.size();
    long long total_shift = 0;
    std::vector<std::vector<Poly>> pm(n, std::vector<Poly>(n));
    for (size_t i = 0; i < n; ++i) {
        long long min_exp = 0;
        for (size_t j = 0; j < n; ++j)
            if (!m[i][j].is_zero()) min_exp = std::min(min_exp, m[i][j].terms().begin()->first);
        const long long shift = -min_exp;  // >= 0
        total_shift += shift;
        for (size_t j = 0; j < n; ++j) {
            const auto& terms = m[i][j].terms();
            if (terms.empty()) continue;
            Poly p(static_cast<size_t>(terms.rbegin()->first + shift) + 1);
            for (const auto& [exp, coeff] : terms) p[static_cast<size_t>(exp + shift)] = coeff;
            pm[i][j] = std::move(p);
        }
    }
    Poly det = poly_determinant(std::move(pm));
    GroupRingElement out;
    for (size_t k = 0; k < det.size(); ++k)
        if (det[k] != 0)
            out += GroupRingElement::monomial(det[k], static_cast<long long>(k) - total_shift);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------
// Stickelberger element and the rank verdict

std::string to_string(ThetaVerdict v) {
    switch (v) {
        case ThetaVerdict::bounded: return "bounded";
        case ThetaVerdict::unbounded: return "unbounded";
        case ThetaVerdict::zero: return "zero";
    }
    return "?";
}

StickelbergerReport stickelberger(const VoltageAssignment& va,
                                  const std::vector<long long>& reduction_levels) {
    StickelbergerReport report;
    report.p = va.prime;
    report.theta = laurent_determinant(voltage_laplacian(va));
    if (report.theta.is_zero()) {
        report.verdict = ThetaVerdict::zero;
    } else {
        const long long v = p_valuation(report.theta.content(), va.prime);
        report.content_valuation = v;
        report.verdict = v == 0 ? ThetaVerdict::bounded : ThetaVerdict::unbounded;
    }
    for (long long m : reduction_levels) {
        if (m < 0) throw input_error("stickelberger: negative reduction level");
        long long q = 1;
        for (long long step = 0; step < m; ++step) {
            if (q > (1LL << 56) / va.prime)
                throw input_error("stickelberger: reduction level " + std::to_string(m) + " too large");
            q *= va.prime;
        }
        report.level_reductions[m] = report.theta.reduced_mod_cycle(q);
    }
    return report;
}

namespace {

ordered_json group_ring_json(const GroupRingElement& e) {
    ordered_json j = ordered_json::object();
    for (const auto& [exp, coeff] : e.terms()) j[std::to_string(exp)] = coeff.get_str();
    return j;
}

}  // namespace

std::string stickelberger_json(const StickelbergerReport& report, int indent) {
    ordered_json j;
    j["theta"] = group_ring_json(report.theta);
    j["content_valuation"] =
        report.content_valuation ? ordered_json(*report.content_valuation) : ordered_json("inf");
    j["verdict"] = to_string(report.verdict);
    if (!report.level_reductions.empty()) {
        ordered_json reductions = ordered_json::object();
        for (const auto& [m, theta_m] : report.level_reductions)
            reductions[std::to_string(m)] = group_ring_json(theta_m);
        j["level_reductions"] = std::move(reductions);
    }
    return j.dump(indent);
}

std::string to_string(TrajectoryOutcome o) {
    switch (o) {
        case TrajectoryOutcome::pass: return "pass";
        case TrajectoryOutcome::fail: return "fail";
        case TrajectoryOutcome::inconclusive: return "inconclusive";
    }
    return "?";
}

RankTrajectory rank_trajectory_check(const TowerReport& report, const StickelbergerReport& sr) {
    RankTrajectory out;
    for (const auto& rec : report.levels)
        if (rec.connected && rec.p_rank) out.observed_ranks.push_back(*rec.p_rank);
    if (out.observed_ranks.size() < 3) {
        out.outcome = TrajectoryOutcome::inconclusive;
        out.note = "fewer than 3 connected levels with Jacobian data";
        return out;
    }
    if (sr.verdict == ThetaVerdict::zero) {
        out.outcome = TrajectoryOutcome::inconclusive;
        out.note = "theta is zero; the content criterion presupposes a connected tower";
        return out;
    }
    const long long last = out.observed_ranks.back();
    const long long prev = out.observed_ranks[out.observed_ranks.size() - 2];
    const char* proxy = " (finite-sample proxy over the observed window, not a proof)";
    if (sr.verdict == ThetaVerdict::bounded) {
        const bool stable = last == prev;
        out.outcome = stable ? TrajectoryOutcome::pass : TrajectoryOutcome::fail;
        out.note = std::string("content prime to p predicts stable ranks; last two are ") +
                   std::to_string(prev) + ", " + std::to_string(last) + proxy;
    } else {
        const bool growing = last > prev;
        out.outcome = growing ? TrajectoryOutcome::pass : TrajectoryOutcome::fail;
        out.note = std::string("p divides the content, predicting strictly growing ranks; last two are ") +
                   std::to_string(prev) + ", " + std::to_string(last) + proxy;
    }
    return out;
}

// ---------------------------------------------------------------------
// Single-voltage complete-graph towers

Example1Expected example1_expected(long long n, long long p) {
    if (n < 3) throw input_error("example1_expected: n must be at least 3");
    if (!is_prime(p)) throw input_error("example1_expected: " + std::to_string(p) + " is not prime");
    // largest power of p dividing (n-2) * n^(n-3)
    const mpz_class value = to_mpz(n - 2) * pow_ll(n, static_cast<unsigned long>(n - 3));
    return Example1Expected{p_valuation(value, p), 1};
}

Example1Result verify_example1(long long n, long long p, long long max_level,
                               std::size_t max_vertices) {
    Example1Result result;
    result.n = n;
    result.p = p;
    result.max_level = max_level;
    result.expected = example1_expected(n, p);
    if (max_level < 1) throw input_error("verify_example1: need at least two levels (M >= 1)");

    VoltageAssignment va =
        make_voltage_assignment(complete_graph(static_cast<int>(n)), {{{1, 2}, 1}}, p);
    TowerSpec spec{std::move(va), max_level, max_vertices};
    TowerReport report = analyze_tower(spec);
    if (report.truncated_at_level)
        throw guard_error("verify_example1: vertex guard truncated the tower at level " +
                          std::to_string(*report.truncated_at_level) +
                          "; raise the limit or lower the level");
    if (report.first_disconnected_level) {
        result.pass = false;
        result.detail = "tower disconnected at level " + std::to_string(*report.first_disconnected_level);
        return result;
    }
    for (const auto& rec : report.levels) result.exponents.push_back(*rec.e_m);

    if (max_level >= 3) {
        try {
            IwasawaFit fit = fit_invariants(result.exponents, p);
            result.fit = fit;
            result.pass = fit.mu == result.expected.mu && fit.lambda == result.expected.lambda;
            if (!result.pass)
                result.detail = "fitted (mu, lambda) = (" + std::to_string(fit.mu) + ", " +
                                std::to_string(fit.lambda) + ") differs from the closed form";
        } catch (const math_error& err) {
            result.pass = false;
            result.detail = err.what();
        }
        return result;
    }

    // Too few points for a full fit: check the first-difference relation
    // e_{m+1} - e_m = mu*p^m*(p-1) + lambda on the available pairs.
    result.difference_check = true;
    result.pass = true;
    for (long long m = 0; m < max_level; ++m) {
        const mpz_class expected_diff =
            to_mpz(result.expected.mu) * pow_ll(p, static_cast<unsigned long>(m)) *
                static_cast<long>(p - 1) +
            to_mpz(result.expected.lambda);
        const long long observed = result.exponents[m + 1] - result.exponents[m];
        if (expected_diff != to_mpz(observed)) {
            result.pass = false;
            result.detail += (result.detail.empty() ? "" : "; ");
            result.detail += "difference at m=" + std::to_string(m) + " is " + std::to_string(observed) +
                             ", closed form predicts " + expected_diff.get_str();
        }
    }
    return result;
}

}  // namespace iwg
