#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iwg/group_ring.hpp"
#include "iwg/tower.hpp"
#include "iwg/voltage.hpp"

namespace iwg {

// Exact fit of e_m = mu*p^m + lambda*m + nu to an observed exponent tail.
struct IwasawaFit {
    long long mu = 0;
    long long lambda = 0;
    long long nu = 0;
    long long m0 = 0;               // first level from which the law holds
    long long verified_levels = 0;  // tail points matched, including m0
};

// Requires at least 4 points (3 unknowns + 1 verification point). Searches
// the smallest m0 whose tail fits exactly; throws math_error with residual
// diagnostics when no tail conforms.
IwasawaFit fit_invariants(const std::vector<long long>& e, long long p);

std::string fit_json(const IwasawaFit& fit);

enum class ThetaVerdict { bounded, unbounded, zero };

std::string to_string(ThetaVerdict v);

struct StickelbergerReport {
    long long p = 2;
    GroupRingElement theta;  // det of the voltage Laplacian, exact
    // v_p of the content; absent means theta == 0 (valuation infinite).
    std::optional<long long> content_valuation;
    ThetaVerdict verdict = ThetaVerdict::zero;
    // m -> theta mod (x^{p^m} - 1), for the requested levels.
    std::map<long long, GroupRingElement> level_reductions;
};

// Determinant of voltage_laplacian(va) in Z[x, x^-1], computed by
// fraction-free elimination after clearing each row's negative exponents.
// The verdict follows the content criterion: group elements are units, so
// p | theta exactly when p divides every coefficient.
StickelbergerReport stickelberger(const VoltageAssignment& va,
                                  const std::vector<long long>& reduction_levels = {});

std::string stickelberger_json(const StickelbergerReport& report, int indent = -1);

enum class TrajectoryOutcome { pass, fail, inconclusive };

std::string to_string(TrajectoryOutcome o);

// Finite-sample consistency check of the rank trajectory against the theta
// verdict: bounded predicts constant p-ranks over the last two observed
// levels, unbounded predicts strict growth. A proxy, never a proof.
struct RankTrajectory {
    TrajectoryOutcome outcome = TrajectoryOutcome::inconclusive;
    std::vector<long long> observed_ranks;
    std::string note;
};

RankTrajectory rank_trajectory_check(const TowerReport& report, const StickelbergerReport& sr);

struct Example1Expected {
    long long mu = 0;
    long long lambda = 1;
};

// Closed form for the complete-graph tower with a single generator
// voltage on edge (1,2): mu = v_p((n-2) * n^(n-3)), lambda = 1. n >= 3.
Example1Expected example1_expected(long long n, long long p);

struct Example1Result {
    bool pass = false;
    long long n = 0;
    long long p = 2;
    long long max_level = 0;
    Example1Expected expected;
    std::optional<IwasawaFit> fit;   // present when enough levels to fit
    bool difference_check = false;   // fallback used (fewer than 4 levels)
    std::vector<long long> exponents;
    std::string detail;
};

// Builds the K_n tower with voltage 1 on edge (1,2), analyzes it to
// max_level and compares the fitted (mu, lambda) against the closed form.
// With fewer than 4 levels, checks the first-difference relation
// e_{m+1} - e_m = mu*p^m*(p-1) + lambda instead.
Example1Result verify_example1(long long n, long long p, long long max_level,
                               std::size_t max_vertices = kDefaultMaxVertices);

}  // namespace iwg
