#pragma once

/**
 * @file trace_json.hpp
 * @brief JSON wire format for traces.
 *
 *     {"radicand": "864", "rule": "exact-largest", "style": "pg",
 *      "events": [{"step": 1, "label": "L:1",
 *                  "cells": [{"column": 1, "band": "root", "digit": 2, "flag": "normal"}],
 *                  "note": "..."}, ...],
 *      "result": {"root": "29", "remainder": "23"}}
 *
 * Big numbers travel as decimal strings. Output uses two-space indentation
 * and fixed key order so export -> parse -> export is byte-stable.
 */

#include "fibroot/digitmethod.hpp"
#include "fibroot/tableau.hpp"
#include "fibroot/trace.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibroot {

struct TraceExport {
    Natural radicand;
    DigitRule rule = DigitRule::ExactLargest;
    TableauStyle style = TableauStyle::PracticaGeometrie;
    std::vector<TraceEvent> events;
    Natural root;
    Natural remainder;

    friend bool operator==(const TraceExport&, const TraceExport&) = default;
};

inline TraceExport make_export(const FibonacciRun& run, TableauStyle style) {
    return TraceExport{run.trace.radicand, run.trace.rule, style, run.trace.events, run.result.root,
                       run.result.remainder};
}

inline std::string to_json(const TraceExport& x) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["radicand"] = x.radicand.str();
    j["rule"] = std::string(rule_name(x.rule));
    j["style"] = std::string(style_name(x.style));
    ordered_json events = ordered_json::array();
    for (const auto& e : x.events) {
        ordered_json ev;
        ev["step"] = e.step;
        ev["label"] = e.label;
        ordered_json cells = ordered_json::array();
        for (const auto& c : e.cells) {
            ordered_json cell;
            cell["column"] = c.column;
            cell["band"] = std::string(band_name(c.band));
            cell["digit"] = static_cast<int>(c.digit);
            cell["flag"] = std::string(flag_name(c.flag));
            cells.push_back(std::move(cell));
        }
        ev["cells"] = std::move(cells);
        ev["note"] = e.note;
        events.push_back(std::move(ev));
    }
    j["events"] = std::move(events);
    j["result"] = ordered_json{{"root", x.root.str()}, {"remainder", x.remainder.str()}};
    return j.dump(2) + "\n";
}

/// Throws std::invalid_argument on malformed input.
inline TraceExport parse_trace_export(std::string_view text) {
    using nlohmann::json;
    auto bad = [](const std::string& why) { return std::invalid_argument("trace export: " + why); };
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw bad(e.what());
    }
    auto natural = [&](const json& v, const char* what) {
        if (!v.is_string()) throw bad(std::string(what) + " must be a decimal string");
        auto n = parse_natural(v.get<std::string>());
        if (!n) throw bad(std::string(what) + " is not a natural number");
        return *n;
    };
    try {
        TraceExport x;
        x.radicand = natural(j.at("radicand"), "radicand");
        auto rule = parse_rule(j.at("rule").get<std::string>());
        auto style = parse_style(j.at("style").get<std::string>());
        if (!rule) throw bad("unknown rule");
        if (!style) throw bad("unknown style");
        x.rule = *rule;
        x.style = *style;
        for (const auto& ev : j.at("events")) {
            TraceEvent e;
            e.step = ev.at("step").get<unsigned>();
            e.label = ev.at("label").get<std::string>();
            e.note = ev.at("note").get<std::string>();
            for (const auto& c : ev.at("cells")) {
                TraceCell cell;
                cell.column = c.at("column").get<int>();
                const int digit = c.at("digit").get<int>();
                if (digit < 0 || digit > 9) throw bad("digit out of range");
                cell.digit = static_cast<std::uint8_t>(digit);
                auto band = parse_band(c.at("band").get<std::string>());
                auto flag = parse_flag(c.at("flag").get<std::string>());
                if (!band) throw bad("unknown band");
                if (!flag) throw bad("unknown flag");
                cell.band = *band;
                cell.flag = *flag;
                e.cells.push_back(cell);
            }
            x.events.push_back(std::move(e));
        }
        x.root = natural(j.at("result").at("root"), "root");
        x.remainder = natural(j.at("result").at("remainder"), "remainder");
        return x;
    } catch (const json::exception& e) {
        throw bad(e.what());
    }
}

}  // namespace fibroot
