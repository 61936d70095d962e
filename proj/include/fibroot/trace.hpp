#pragma once

/**
 * @file trace.hpp
 * @brief Step-annotated record of a digit-by-digit extraction.
 *
 * A trace is the ordered list of writes a calculator makes on the board:
 * the radicand first (step 0), then root digits, running residuals, doubled
 * roots and finally the remainder. Each write carries the step number that
 * the manuscripts' subscripts refer to. Columns are powers of ten.
 *
 * Invariants maintained by make_trace():
 *   - steps strictly increase from event to event
 *   - Radicand cells occur only in the step 0 event
 */

#include "fibroot/exactnum.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibroot {

enum class Band { Residual, Radicand, Root, DoubledRoot, Remainder };

/// Inserted marks a digit that a modern editor had to add to the manuscript
/// board (printed red in critical editions).
enum class CellFlag { Normal, Inserted, Overwritten };

/// How the working is laid out on the board.
///  - Abaci: root written twice, one combined subtraction per digit
///  - Geometrie: doubled root on its own row, one subtraction per digit of it
///  - Evolving: every level of the recursion is worked on the board in place,
///    with the doubled root rewritten as it grows
enum class Procedure { Abaci, Geometrie, Evolving };

inline std::string_view band_name(Band b) {
    switch (b) {
        case Band::Residual: return "residual";
        case Band::Radicand: return "radicand";
        case Band::Root: return "root";
        case Band::DoubledRoot: return "doubled-root";
        case Band::Remainder: return "remainder";
    }
    return "?";
}

inline std::optional<Band> parse_band(std::string_view s) {
    for (Band b : {Band::Residual, Band::Radicand, Band::Root, Band::DoubledRoot, Band::Remainder})
        if (band_name(b) == s) return b;
    return std::nullopt;
}

inline std::string_view flag_name(CellFlag f) {
    switch (f) {
        case CellFlag::Normal: return "normal";
        case CellFlag::Inserted: return "inserted";
        case CellFlag::Overwritten: return "overwritten";
    }
    return "?";
}

inline std::optional<CellFlag> parse_flag(std::string_view s) {
    for (CellFlag f : {CellFlag::Normal, CellFlag::Inserted, CellFlag::Overwritten})
        if (flag_name(f) == s) return f;
    return std::nullopt;
}

struct TraceCell {
    int column = 0;
    Band band = Band::Residual;
    std::uint8_t digit = 0;
    CellFlag flag = CellFlag::Normal;

    friend bool operator==(const TraceCell&, const TraceCell&) = default;
};

struct TraceEvent {
    unsigned step = 0;
    std::string label;
    std::vector<TraceCell> cells;
    std::string note;

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Writes the digits of value (least significant at column `lowest`) in one band.
inline std::vector<TraceCell> cells_for(const Natural& value, int lowest, Band band) {
    std::vector<TraceCell> out;
    const Digits d = digits_of(value);
    for (std::size_t i = 0; i < d.size(); ++i)
        out.push_back(TraceCell{lowest + static_cast<int>(i), band, d.values[i], CellFlag::Normal});
    return out;
}

/// Digits of the values written in one band, read most significant first.
inline Natural read_band(const std::vector<TraceEvent>& events, Band band) {
    std::vector<std::pair<int, std::uint8_t>> found;
    for (const auto& e : events)
        for (const auto& c : e.cells)
            if (c.band == band) found.emplace_back(c.column, c.digit);
    Natural v = 0;
    if (found.empty()) return v;
    // Later writes to the same column replace earlier ones.
    int top = 0;
    for (const auto& [col, _] : found) top = std::max(top, col);
    std::vector<std::uint8_t> by_col(static_cast<std::size_t>(top) + 1, 0);
    for (const auto& [col, dig] : found) by_col[static_cast<std::size_t>(col)] = dig;
    for (auto it = by_col.rbegin(); it != by_col.rend(); ++it) v = v * 10 + *it;
    return v;
}

/// One write before step numbers are assigned.
struct RawEvent {
    enum class Kind { Radicand, Root, Residual, Double, Digit, Partial, Remainder, Note };
    Kind kind = Kind::Note;
    std::vector<TraceCell> cells;
    std::string note;
};

/// Per-radicand adjustments that make a generated trace read like a specific
/// manuscript board. Event indices refer to the raw event list, radicand
/// placement included at index 0.
struct Layout {
    /// Explicit step per raw event; empty means automatic numbering.
    std::vector<unsigned> steps;
    /// Write the prefix residual even when it is zero (as a single 0).
    bool materialize_zero_residual = false;
    /// Raw events whose cells the manuscript omits.
    std::vector<std::size_t> dropped;
    /// Column displacement applied to every cell of a raw event.
    std::vector<std::pair<std::size_t, int>> shifted;
    /// Raw events written entirely by the editor.
    std::vector<std::size_t> inserted_events;
    /// Single editor-inserted cells: (raw event, column after shifting).
    std::vector<std::pair<std::size_t, int>> inserted_cells;
    /// Text-only events: (step, note).
    std::vector<std::pair<unsigned, std::string>> notes;

    bool empty() const {
        return steps.empty() && !materialize_zero_residual && dropped.empty() && shifted.empty() &&
               inserted_events.empty() && inserted_cells.empty() && notes.empty();
    }
};

/// Applies a layout, numbers the steps and merges writes sharing a step.
///
/// Automatic numbering gives every cell-bearing event the next step. An
/// event without cells joins the next cell-bearing event (or the last one
/// if nothing follows), so bookkeeping-only events never open a step of
/// their own.
inline std::vector<TraceEvent> make_trace(std::vector<RawEvent> raw, const Layout& layout) {
    auto contains = [](const auto& v, std::size_t i) { return std::find(v.begin(), v.end(), i) != v.end(); };

    if (layout.materialize_zero_residual)
        for (auto& e : raw)
            if (e.kind == RawEvent::Kind::Residual && e.cells.empty())
                e.cells.push_back(TraceCell{2, Band::Residual, 0, CellFlag::Normal});

    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (contains(layout.dropped, i)) raw[i].cells.clear();
        for (const auto& [idx, delta] : layout.shifted)
            if (idx == i)
                for (auto& c : raw[i].cells) c.column += delta;
        if (contains(layout.inserted_events, i))
            for (auto& c : raw[i].cells) c.flag = CellFlag::Inserted;
        for (const auto& [idx, col] : layout.inserted_cells)
            if (idx == i)
                for (auto& c : raw[i].cells)
                    if (c.column == col) c.flag = CellFlag::Inserted;
    }

    std::vector<unsigned> steps(raw.size(), 0);
    if (!layout.steps.empty()) {
        if (layout.steps.size() != raw.size())
            throw std::invalid_argument("layout step list does not match the event count");
        steps = layout.steps;
    } else {
        unsigned next = 0;
        std::vector<std::size_t> pending;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i].kind == RawEvent::Kind::Radicand) {
                steps[i] = 0;
                continue;
            }
            if (raw[i].cells.empty()) {
                pending.push_back(i);
                continue;
            }
            steps[i] = ++next;
            for (auto p : pending) steps[p] = next;
            pending.clear();
        }
        for (auto p : pending) steps[p] = std::max(next, 1u);
    }

    std::vector<std::pair<unsigned, RawEvent>> numbered;
    for (std::size_t i = 0; i < raw.size(); ++i) numbered.emplace_back(steps[i], std::move(raw[i]));
    for (const auto& [step, note] : layout.notes)
        numbered.emplace_back(step, RawEvent{RawEvent::Kind::Note, {}, note});
    std::stable_sort(numbered.begin(), numbered.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<TraceEvent> out;
    for (auto& [step, e] : numbered) {
        if (out.empty() || out.back().step != step) {
            out.push_back(TraceEvent{step, "L:" + std::to_string(step), {}, {}});
        }
        auto& dst = out.back();
        dst.cells.insert(dst.cells.end(), e.cells.begin(), e.cells.end());
        if (!e.note.empty()) {
            if (!dst.note.empty()) dst.note += "; ";
            dst.note += e.note;
        }
    }
    return out;
}

}  // namespace fibroot
