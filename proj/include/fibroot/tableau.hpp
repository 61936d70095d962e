#pragma once

/**
 * @file tableau.hpp
 * @brief The calculation board: cells on a place-value grid, rendering and diffing.
 *
 * Bands from top to bottom: remainder annotation, residual stacks, radicand,
 * root (written twice in the Liber Abaci styles), doubled-root rows.
 *
 * Text rendering, one grid column per power of ten (highest on the left)
 * plus a trailing annotation column:
 *
 *     "*d*"   radicand digit
 *     "d_s"   digit d written at step s (show_steps)
 *     "d"     digit without step
 *     "(r_s"  remainder annotation
 *
 * Each column is as wide as its widest token, columns are separated by one
 * space, tokens are left aligned and trailing blanks are trimmed.
 */

#include "fibroot/digitmethod.hpp"
#include "fibroot/exactnum.hpp"
#include "fibroot/trace.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace fibroot {

enum class TableauStyle { LiberAbaci1202, LiberAbaci1228, PracticaGeometrie };

inline std::string_view style_name(TableauStyle s) {
    switch (s) {
        case TableauStyle::LiberAbaci1202: return "la1202";
        case TableauStyle::LiberAbaci1228: return "la1228";
        case TableauStyle::PracticaGeometrie: return "pg";
    }
    return "?";
}

inline std::optional<TableauStyle> parse_style(std::string_view s) {
    for (auto st : {TableauStyle::LiberAbaci1202, TableauStyle::LiberAbaci1228, TableauStyle::PracticaGeometrie})
        if (style_name(st) == s) return st;
    return std::nullopt;
}

/// The working procedure each style's manuscript uses for ordinary radicands.
inline Procedure procedure_for(TableauStyle s) {
    return s == TableauStyle::PracticaGeometrie ? Procedure::Geometrie : Procedure::Abaci;
}

struct Cell {
    int column = 0;  ///< power of ten of the (lowest) digit
    int row = 0;     ///< position inside the band; residual rows count upward from the radicand
    Band band = Band::Residual;
    std::string digits;  ///< one digit, except joined residual tokens in the 1202 style
    unsigned step = 0;
    CellFlag flag = CellFlag::Normal;
    std::optional<unsigned> overwritten_at;  ///< step at which a newer row replaced this cell

    CellFlag effective_flag() const { return overwritten_at ? CellFlag::Overwritten : flag; }

    friend bool operator==(const Cell&, const Cell&) = default;
};

struct Tableau {
    Natural radicand;
    Natural root;
    Natural remainder;
    TableauStyle style = TableauStyle::PracticaGeometrie;
    std::vector<Cell> cells;

    unsigned last_step() const {
        unsigned s = 0;
        for (const auto& c : cells) s = std::max(s, c.step);
        return s;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

inline Tableau build_tableau(const Trace& trace, TableauStyle style) {
    Tableau t;
    t.radicand = trace.radicand;
    t.root = read_band(trace.events, Band::Root);
    t.remainder = read_band(trace.events, Band::Remainder);
    t.style = style;

    const bool abaci = style != TableauStyle::PracticaGeometrie;
    bool has_doubled = false;
    for (const auto& e : trace.events)
        for (const auto& c : e.cells) has_doubled = has_doubled || c.band == Band::DoubledRoot;
    const bool twice_written = abaci && !has_doubled;

    std::map<int, int> residual_height;
    int doubled_row = 0;
    bool doubled_started = false;

    auto push_residual = [&](int column, std::string digits, unsigned step, CellFlag flag) {
        int& h = residual_height[column];
        t.cells.push_back(Cell{column, h++, Band::Residual, std::move(digits), step, flag, std::nullopt});
    };

    for (const auto& e : trace.events) {
        // Doubled-root writes that collide with the current row open a new row.
        bool collides = false;
        for (const auto& c : e.cells) {
            if (c.band != Band::DoubledRoot || !doubled_started) continue;
            for (const auto& old : t.cells)
                if (old.band == Band::DoubledRoot && old.row == doubled_row && old.column == c.column) collides = true;
        }
        if (collides) {
            for (auto& old : t.cells)
                if (old.band == Band::DoubledRoot && old.row == doubled_row) old.overwritten_at = e.step;
            ++doubled_row;
        }

        std::vector<TraceCell> residual;
        for (const auto& c : e.cells) {
            const std::string d(1, static_cast<char>('0' + c.digit));
            switch (c.band) {
                case Band::Residual: residual.push_back(c); break;
                case Band::DoubledRoot:
                    doubled_started = true;
                    t.cells.push_back(Cell{c.column, doubled_row, c.band, d, e.step, c.flag, std::nullopt});
                    break;
                case Band::Root:
                    t.cells.push_back(Cell{c.column, 0, c.band, d, e.step, c.flag, std::nullopt});
                    if (twice_written) t.cells.push_back(Cell{c.column, 1, c.band, d, e.step, c.flag, std::nullopt});
                    break;
                default: t.cells.push_back(Cell{c.column, 0, c.band, d, e.step, c.flag, std::nullopt}); break;
            }
        }
        if (residual.empty()) continue;
        if (style == TableauStyle::LiberAbaci1202 && residual.size() > 1) {
            // The 1202 edition writes a multi-digit value as one token in the
            // column of its lowest digit.
            std::sort(residual.begin(), residual.end(),
                      [](const TraceCell& a, const TraceCell& b) { return a.column > b.column; });
            std::string joined;
            CellFlag flag = CellFlag::Normal;
            for (const auto& c : residual) {
                joined += static_cast<char>('0' + c.digit);
                if (c.flag == CellFlag::Inserted) flag = CellFlag::Inserted;
            }
            push_residual(residual.back().column, joined, e.step, flag);
        } else {
            for (const auto& c : residual)
                push_residual(c.column, std::string(1, static_cast<char>('0' + c.digit)), e.step, c.flag);
        }
    }
    return t;
}

/// Board states after each step: element i holds the cells written at steps <= i.
inline std::vector<Tableau> snapshots(const Tableau& t) {
    std::vector<Tableau> out;
    const unsigned last = t.last_step();
    for (unsigned i = 0; i <= last; ++i) {
        Tableau s = t;
        s.cells.clear();
        for (auto c : t.cells) {
            if (c.step > i) continue;
            if (c.overwritten_at && *c.overwritten_at > i) c.overwritten_at.reset();
            s.cells.push_back(c);
        }
        out.push_back(std::move(s));
    }
    return out;
}

struct RenderedBoard {
    std::vector<std::string> lines;

    std::string text() const {
        std::string out;
        for (const auto& l : lines) out += l + '\n';
        return out;
    }

    friend bool operator==(const RenderedBoard&, const RenderedBoard&) = default;
};

/// Fixed-width text board. show_steps adds step subscripts and keeps
/// replaced doubled-root rows; without it equal consecutive digits in a
/// residual column are written once, as on the manuscripts.
inline RenderedBoard render_text(const Tableau& t, bool show_steps) {
    auto token = [&](const Cell& c) {
        return show_steps ? c.digits + "_" + std::to_string(c.step) : c.digits;
    };

    int top = 0;
    bool annotated = false;
    for (const auto& c : t.cells) {
        if (c.band == Band::Remainder) {
            annotated = true;
            continue;
        }
        top = std::max(top, c.column);
    }
    const std::size_t ncols = static_cast<std::size_t>(top) + 1;
    using Row = std::vector<std::string>;  // index = column
    std::vector<Row> rows;
    std::vector<std::string> annotation;  // parallel to rows

    auto add_row = [&](Row r, std::string note = {}) {
        rows.push_back(std::move(r));
        annotation.push_back(std::move(note));
    };
    auto visible = [&](const Cell& c) { return show_steps || c.effective_flag() != CellFlag::Overwritten; };

    if (annotated) {
        std::vector<const Cell*> rem;
        unsigned step = 0;
        for (const auto& c : t.cells)
            if (c.band == Band::Remainder) {
                rem.push_back(&c);
                step = std::max(step, c.step);
            }
        std::sort(rem.begin(), rem.end(), [](const Cell* a, const Cell* b) { return a->column > b->column; });
        std::string tok = "(";
        for (const auto* c : rem) tok += c->digits;
        if (show_steps) tok += "_" + std::to_string(step);
        add_row(Row(ncols), tok);
    }

    std::map<int, std::string> radicand_digit;
    for (const auto& c : t.cells)
        if (c.band == Band::Radicand) radicand_digit[c.column] = c.digits;

    std::vector<std::vector<std::string>> stacks(ncols);  // bottom-up tokens per column
    for (std::size_t col = 0; col < ncols; ++col) {
        std::vector<const Cell*> here;
        for (const auto& c : t.cells)
            if (c.band == Band::Residual && c.column == static_cast<int>(col) && visible(c)) here.push_back(&c);
        std::sort(here.begin(), here.end(), [](const Cell* a, const Cell* b) { return a->row < b->row; });
        std::string below = radicand_digit.count(static_cast<int>(col)) ? radicand_digit[static_cast<int>(col)] : "";
        for (const auto* c : here) {
            if (!show_steps && c->digits == below) continue;
            stacks[col].push_back(token(*c));
            below = c->digits;
        }
    }
    std::size_t height = 0;
    for (const auto& s : stacks) height = std::max(height, s.size());
    for (std::size_t level = height; level-- > 0;) {
        Row r(ncols);
        for (std::size_t col = 0; col < ncols; ++col)
            if (level < stacks[col].size()) r[col] = stacks[col][level];
        add_row(std::move(r));
    }

    {
        Row r(ncols);
        for (const auto& [col, d] : radicand_digit) r[static_cast<std::size_t>(col)] = "*" + d + "*";
        add_row(std::move(r));
    }

    auto band_rows = [&](Band band) {
        int max_row = -1;
        for (const auto& c : t.cells)
            if (c.band == band) max_row = std::max(max_row, c.row);
        for (int i = 0; i <= max_row; ++i) {
            Row r(ncols);
            bool any = false;
            for (const auto& c : t.cells)
                if (c.band == band && c.row == i && visible(c)) {
                    r[static_cast<std::size_t>(c.column)] = token(c);
                    any = true;
                }
            if (any) add_row(std::move(r));
        }
    };
    band_rows(Band::Root);
    band_rows(Band::DoubledRoot);

    // Leftmost grid column is the highest power of ten.
    std::vector<std::size_t> width(ncols, 0);
    for (const auto& r : rows)
        for (std::size_t col = 0; col < ncols; ++col) width[col] = std::max(width[col], r[col].size());

    RenderedBoard board;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string line;
        for (std::size_t col = ncols; col-- > 0;) {
            std::string tok = rows[i][col];
            tok.resize(width[col], ' ');
            line += tok;
            if (col > 0) line += ' ';
        }
        if (annotated) line += ' ' + annotation[i];
        while (!line.empty() && line.back() == ' ') line.pop_back();
        board.lines.push_back(std::move(line));
    }
    return board;
}

struct Discrepancy {
    enum class Kind { MissingCell, ExtraCell, ColumnShift, DigitMismatch };
    Kind kind = Kind::MissingCell;
    Band band = Band::Residual;
    int column = 0;        ///< expected column (actual column for ExtraCell)
    std::string actual;    ///< digits present on the actual board
    std::string expected;  ///< digits on the expected board
    int delta = 0;         ///< ColumnShift only: actual column minus expected column

    friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

inline std::string_view kind_name(Discrepancy::Kind k) {
    switch (k) {
        case Discrepancy::Kind::MissingCell: return "MissingCell";
        case Discrepancy::Kind::ExtraCell: return "ExtraCell";
        case Discrepancy::Kind::ColumnShift: return "ColumnShift";
        case Discrepancy::Kind::DigitMismatch: return "DigitMismatch";
    }
    return "?";
}

inline std::string describe(const Discrepancy& d) {
    const std::string where = "(10^" + std::to_string(d.column) + ", " + std::string(band_name(d.band)) + ")";
    switch (d.kind) {
        case Discrepancy::Kind::MissingCell: return "MissingCell " + where + " expected " + d.expected;
        case Discrepancy::Kind::ExtraCell: return "ExtraCell " + where + " actual " + d.actual;
        case Discrepancy::Kind::ColumnShift:
            return "ColumnShift " + std::string(band_name(d.band)) + " delta " + (d.delta > 0 ? "+" : "") +
                   std::to_string(d.delta);
        case Discrepancy::Kind::DigitMismatch:
            return "DigitMismatch " + where + " actual " + d.actual + " expected " + d.expected;
    }
    return "?";
}

/// Compares cell content, ignoring steps, rows and flags.
inline std::vector<Discrepancy> diff_tableau(const Tableau& actual, const Tableau& expected) {
    if (actual.radicand != expected.radicand) throw std::invalid_argument("boards have different radicands");

    using Key = std::tuple<Band, int, std::string>;
    auto keys = [](const Tableau& t) {
        std::vector<Key> k;
        for (const auto& c : t.cells) k.emplace_back(c.band, c.column, c.digits);
        std::sort(k.begin(), k.end());
        return k;
    };
    const std::vector<Key> all_a = keys(actual);
    const std::vector<Key> all_e = keys(expected);
    std::vector<Key> only_a, only_e;
    std::set_difference(all_a.begin(), all_a.end(), all_e.begin(), all_e.end(), std::back_inserter(only_a));
    std::set_difference(all_e.begin(), all_e.end(), all_a.begin(), all_a.end(), std::back_inserter(only_e));

    auto of_band = [](const std::vector<Key>& v, Band b) {
        std::vector<Key> out;
        for (const auto& k : v)
            if (std::get<0>(k) == b) out.push_back(k);
        return out;
    };
    auto shifted = [](std::vector<Key> v, int delta) {
        for (auto& k : v) std::get<1>(k) += delta;
        std::sort(v.begin(), v.end());
        return v;
    };
    // delta such that shifting `from` by it yields `to`, if any.
    auto find_shift = [&](const std::vector<Key>& from, const std::vector<Key>& to) -> std::optional<int> {
        if (from.empty() || from.size() != to.size()) return std::nullopt;
        const int delta = std::get<1>(to.front()) - std::get<1>(from.front());
        if (delta == 0) return std::nullopt;
        if (shifted(from, delta) == to) return delta;
        // Sorting is by column first, so also try aligning on the highest column.
        const int d2 = std::get<1>(to.back()) - std::get<1>(from.back());
        if (d2 != 0 && shifted(from, d2) == to) return d2;
        return std::nullopt;
    };

    std::vector<Discrepancy> out;
    for (Band b : {Band::Remainder, Band::Residual, Band::Radicand, Band::Root, Band::DoubledRoot}) {
        auto a = of_band(only_a, b);
        auto e = of_band(only_e, b);
        if (a.empty() && e.empty()) continue;
        std::optional<int> delta = find_shift(of_band(all_e, b), of_band(all_a, b));
        if (!delta) delta = find_shift(e, a);
        if (delta) {
            out.push_back(Discrepancy{Discrepancy::Kind::ColumnShift, b, 0, {}, {}, *delta});
            continue;
        }
        // Same place, different digits.
        for (auto ia = a.begin(); ia != a.end();) {
            auto ie = std::find_if(e.begin(), e.end(), [&](const Key& k) { return std::get<1>(k) == std::get<1>(*ia); });
            if (ie == e.end()) {
                ++ia;
                continue;
            }
            out.push_back(Discrepancy{Discrepancy::Kind::DigitMismatch, b, std::get<1>(*ia), std::get<2>(*ia),
                                      std::get<2>(*ie), 0});
            e.erase(ie);
            ia = a.erase(ia);
        }
        for (const auto& k : e)
            out.push_back(Discrepancy{Discrepancy::Kind::MissingCell, b, std::get<1>(k), {}, std::get<2>(k), 0});
        for (const auto& k : a)
            out.push_back(Discrepancy{Discrepancy::Kind::ExtraCell, b, std::get<1>(k), std::get<2>(k), {}, 0});
    }
    return out;
}

/// Removes the cells an editor had to add, leaving the board as the
/// manuscript has it.
inline Tableau without_inserted(Tableau t) {
    std::erase_if(t.cells, [](const Cell& c) { return c.flag == CellFlag::Inserted; });
    return t;
}

}  // namespace fibroot
