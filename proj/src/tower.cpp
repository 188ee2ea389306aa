#include "iwg/tower.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "iwg/errors.hpp"

namespace iwg {

using ordered_json = nlohmann::ordered_json;

TowerReport analyze_tower(const TowerSpec& spec) {
    TowerReport report;
    report.p = spec.prime();
    report.base_vertices = spec.va.base.vertex_count();
    report.max_level = spec.max_level;
    if (spec.max_level < 0) throw input_error("analyze_tower: negative max level");

    bool disconnected_seen = false;
    for (long long m = 0; m <= spec.max_level; ++m) {
        DerivedGraph dg;
        try {
            dg = derive(spec.va, m, spec.max_vertices);
        } catch (const guard_error&) {
            report.truncated_at_level = m;
            break;
        }
        LevelRecord rec;
        rec.m = m;
        rec.vertices = dg.graph.vertex_count();
        rec.connected = is_connected(dg.graph);
        if (!rec.connected && !disconnected_seen) {
            disconnected_seen = true;
            report.first_disconnected_level = m;
        }
        if (rec.connected && disconnected_seen)
            throw std::logic_error("analyze_tower: level " + std::to_string(m) +
                                   " is connected below a disconnected level; covering structure violated");
        // A connected level above a connected level 1 is the normal run;
        // a disconnection after level 1 was connected would contradict the
        // covering structure, so it is flagged as a hard error.
        if (!rec.connected && m >= 2 && report.levels[1].connected && report.levels[0].connected)
            throw std::logic_error("analyze_tower: level " + std::to_string(m) +
                                   " disconnected although level 1 is connected");
        if (!disconnected_seen) {
            InvariantFactors factors = jacobian(dg.graph, 1);
            PSylow syl = p_sylow(factors, spec.prime());
            rec.e_m = syl.order_exponent;
            rec.p_rank = syl.p_rank;
            rec.p_part_factors = std::move(syl.p_part_factors);
            if (spec.include_total_order) rec.total_order = factors.group_order();
        }
        report.levels.push_back(std::move(rec));
    }
    return report;
}

DerivedGraph level_graph(const TowerSpec& spec, long long m) {
    if (m < 0 || m > spec.max_level)
        throw input_error("level_graph: level " + std::to_string(m) + " outside 0.." +
                          std::to_string(spec.max_level));
    return derive(spec.va, m, spec.max_vertices);
}

namespace {

ordered_json level_json(const LevelRecord& rec) {
    ordered_json j;
    j["m"] = rec.m;
    j["vertices"] = rec.vertices;
    j["connected"] = rec.connected;
    j["e_m"] = rec.e_m ? ordered_json(*rec.e_m) : ordered_json(nullptr);
    j["p_rank"] = rec.p_rank ? ordered_json(*rec.p_rank) : ordered_json(nullptr);
    if (rec.p_part_factors) {
        ordered_json parts = ordered_json::array();
        for (const auto& f : *rec.p_part_factors) parts.push_back(f.get_str());
        j["p_part_factors"] = std::move(parts);
    } else {
        j["p_part_factors"] = nullptr;
    }
    if (rec.total_order) j["total_order"] = rec.total_order->get_str();
    return j;
}

}  // namespace

std::string tower_report_json(const TowerReport& report, int indent) {
    ordered_json j;
    j["p"] = report.p;
    ordered_json levels = ordered_json::array();
    for (const auto& rec : report.levels) levels.push_back(level_json(rec));
    j["levels"] = std::move(levels);
    j["first_disconnected_level"] = report.first_disconnected_level
                                        ? ordered_json(*report.first_disconnected_level)
                                        : ordered_json(nullptr);
    if (report.truncated_at_level) j["truncated_at_level"] = *report.truncated_at_level;
    return j.dump(indent);
}

std::string tower_report_csv(const TowerReport& report) {
    std::ostringstream out;
    out << "m,vertices,connected,e_m,p_rank,p_part_factors\n";
    for (const auto& rec : report.levels) {
        out << rec.m << ',' << rec.vertices << ',' << (rec.connected ? "true" : "false") << ',';
        if (rec.e_m) out << *rec.e_m;
        out << ',';
        if (rec.p_rank) out << *rec.p_rank;
        out << ',';
        if (rec.p_part_factors) {
            bool first = true;
            for (const auto& f : *rec.p_part_factors) {
                if (!first) out << ';';
                out << f.get_str();
                first = false;
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string tower_report_text(const TowerReport& report) {
    std::ostringstream out;
    out << "p = " << report.p << ", levels 0.." << report.max_level << "\n";
    for (const auto& rec : report.levels) {
        out << "  m=" << rec.m << "  vertices=" << rec.vertices
            << "  connected=" << (rec.connected ? "yes" : "no");
        if (rec.e_m) {
            out << "  |J_p| = " << report.p << "^" << *rec.e_m << "  p-rank=" << *rec.p_rank;
            if (rec.total_order) out << "  |J| = " << rec.total_order->get_str();
        }
        out << "\n";
    }
    if (report.first_disconnected_level)
        out << "  first disconnected level: " << *report.first_disconnected_level << "\n";
    if (report.truncated_at_level)
        out << "  truncated at level " << *report.truncated_at_level << " (vertex guard)\n";
    return out.str();
}

}  // namespace iwg
