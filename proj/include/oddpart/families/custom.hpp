#pragma once

#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddpart/families/equi.hpp"
#include "oddpart/family.hpp"

namespace oddpart::families {

struct CustomFamilyOptions {
    // Finite documents describe only a prefix of the diagram; either
    // continue it with scaled equi rows (flagged on the family) or
    // refuse it outright.
    bool extend_with_equi_tail = true;
};

/**
 * Family ingested from a JSON document:
 *   {"name": str, "target_sum": "p/q",
 *    "rows": [["p/q", ...], ...], "kind": "odd"|"general"}
 * with rationals as strings. Rows listed in the document are validated
 * eagerly; rows past the document are equi rows of the same target.
 */
inline ExactFamily::Config custom_family_config(const nlohmann::json& doc,
                                                CustomFamilyOptions opt = {}) {
    if (!doc.is_object()) throw FamilyConstructionError("custom family document must be an object");
    const std::string name = doc.value("name", std::string("custom"));
    if (!doc.contains("target_sum") || !doc.contains("rows") || !doc.contains("kind"))
        throw FamilyConstructionError("custom family needs name, target_sum, rows, kind");
    const Rational target = parse_rational(doc.at("target_sum").get<std::string>());
    if (!(target > 0)) throw FamilyConstructionError("target_sum must be positive");
    const std::string kind_str = doc.at("kind").get<std::string>();
    FamilyKind kind;
    if (kind_str == "odd")
        kind = FamilyKind::Odd;
    else if (kind_str == "general")
        kind = FamilyKind::General;
    else
        throw FamilyConstructionError("kind must be \"odd\" or \"general\"");

    auto rows = std::make_shared<std::vector<std::vector<Rational>>>();
    for (const auto& jrow : doc.at("rows")) {
        std::vector<Rational> row;
        for (const auto& cell : jrow) row.push_back(parse_rational(cell.get<std::string>()));
        rows->push_back(std::move(row));
    }
    if (rows->empty()) throw FamilyConstructionError("custom family needs at least row 0");
    if (!opt.extend_with_equi_tail)
        throw FamilyConstructionError(
            "finite custom family rejected: equi-tail extension is disabled");

    const long given = static_cast<long>(rows->size());
    for (long n = 0; n < given; ++n) {
        PartitionRow<Rational> probe;
        probe.order = n;
        probe.target_sum = target;
        probe.lengths = (*rows)[n];
        validate_row(probe, 0.0, kind);
    }

    // non-increasing bound: suffix maxima over the given rows, glued to
    // the scaled equi tail
    auto ubs = std::make_shared<std::vector<Rational>>(given + 1);
    (*ubs)[given] = target / (2 * given + 1);
    for (long n = given - 1; n >= 0; --n) {
        Rational mx = (*ubs)[n + 1];
        for (const auto& v : (*rows)[n]) mx = std::max(mx, v);
        (*ubs)[n] = mx;
    }

    ExactFamily::Config cfg;
    cfg.kind = kind;
    cfg.name = name + "+equi-tail";
    cfg.equi_tail_extended = true;
    cfg.row_fn = [rows, target, given](long n) -> PartitionRow<Rational> {
        if (n < given) {
            PartitionRow<Rational> row;
            row.order = n;
            row.target_sum = target;
            row.lengths = (*rows)[n];
            return row;
        }
        PartitionRow<Rational> row;
        row.order = n;
        row.target_sum = target;
        row.lengths.assign(static_cast<std::size_t>(2 * n + 1), target / (2 * n + 1));
        return row;
    };
    cfg.ub_fn = [ubs, target, given](long n) {
        return (n < given) ? (*ubs)[n] : target / (2 * n + 1);
    };
    return cfg;
}

inline ExactFamily make_custom_family(const nlohmann::json& doc, CustomFamilyOptions opt = {}) {
    return ExactFamily(custom_family_config(doc, opt));
}

inline ExactFamily::Config load_custom_family_config(const std::string& path,
                                                     CustomFamilyOptions opt = {}) {
    std::ifstream in(path);
    if (!in) throw FamilyConstructionError("cannot open custom family file '" + path + "'");
    nlohmann::json doc;
    in >> doc;
    return custom_family_config(doc, opt);
}

inline ExactFamily load_custom_family(const std::string& path, CustomFamilyOptions opt = {}) {
    return ExactFamily(load_custom_family_config(path, opt));
}

}  // namespace oddpart::families
