#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iwg/jacobian.hpp"
#include "iwg/voltage.hpp"

namespace iwg {

struct TowerSpec {
    VoltageAssignment va;
    long long max_level = 0;
    std::size_t max_vertices = kDefaultMaxVertices;
    bool include_total_order = false;

    long long prime() const { return va.prime; }
};

struct LevelRecord {
    long long m = 0;
    long long vertices = 0;
    bool connected = false;
    // Jacobian fields are absent from the first disconnected level on.
    std::optional<long long> e_m;     // exponent of |J_p(X_m)|
    std::optional<long long> p_rank;
    std::optional<std::vector<mpz_class>> p_part_factors;
    std::optional<mpz_class> total_order;  // |J(X_m)|, only when requested
};

struct TowerReport {
    long long p = 2;
    long long base_vertices = 0;
    long long max_level = 0;
    std::vector<LevelRecord> levels;
    std::optional<long long> first_disconnected_level;
    // Set when a size guard stopped the run before max_level.
    std::optional<long long> truncated_at_level;
};

// Derives every level m = 0..max_level, records connectivity and the exact
// Sylow p-data of the Jacobian. Disconnected levels poison only the
// Jacobian fields; a guard hit truncates the report.
TowerReport analyze_tower(const TowerSpec& spec);

DerivedGraph level_graph(const TowerSpec& spec, long long m);

// {"p":..., "levels":[{"m":..., "vertices":..., "connected":..., "e_m":...,
//  "p_rank":..., "p_part_factors":[...]|null}], "first_disconnected_level":...}
// Big integers are serialized as decimal strings. indent < 0 is compact.
std::string tower_report_json(const TowerReport& report, int indent = -1);

// One row per level: m,vertices,connected,e_m,p_rank,p_part_factors
// (factors ';'-joined; empty cells where data is absent).
std::string tower_report_csv(const TowerReport& report);

std::string tower_report_text(const TowerReport& report);

}  // namespace iwg
