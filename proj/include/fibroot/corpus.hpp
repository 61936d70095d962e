#pragma once

/**
 * @file corpus.hpp
 * @brief The sixteen worked examples from Liber Abaci and De Practica Geometrie.
 *
 * Each entry carries the expected root and remainder, an optional fraction
 * check, the board layout quirks of its manuscript, and transcribed boards
 * together with their frozen text renderings.
 *
 * Board transcription syntax, whitespace separated; the radicand is implicit:
 *
 *     r<col>=<digits>@<step>[!]   residual (several digits: one joined token)
 *     t<col>=<d>@<step>[!]        root
 *     u<col>=<d>@<step>[!]        second copy of the root
 *     d<col>=<d>@<step>[!]        doubled root
 *     (<digits>@<step>            remainder annotation
 *
 * A trailing '!' marks a digit inserted by the editor.
 *
 * Export format, one record per line:
 *
 *     id|source|radicand|root|remainder|fraction|figure_ref
 *
 * fraction is empty, "refine:<q>[;<q>...]" (successive refinements from the
 * floor root) or "scale<m>:<q>" (the radicand is M*10^(2m); q is the root of
 * M to m decimal places plus a unit-fraction correction).
 */

#include "fibroot/digitmethod.hpp"
#include "fibroot/exactnum.hpp"
#include "fibroot/rational.hpp"
#include "fibroot/refine.hpp"
#include "fibroot/tableau.hpp"
#include "fibroot/trace.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibroot {

enum class Source { LA, DPG };

inline std::string_view source_name(Source s) { return s == Source::LA ? "LA" : "DPG"; }

inline std::optional<Source> parse_source(std::string_view s) {
    if (s == "LA") return Source::LA;
    if (s == "DPG") return Source::DPG;
    return std::nullopt;
}

struct FractionCheck {
    enum class Kind { Refine, Scale };
    Kind kind = Kind::Refine;
    unsigned pairs = 0;             ///< Scale only
    std::vector<Rational> values;   ///< Refine: one per step; Scale: the descaled value

    friend bool operator==(const FractionCheck&, const FractionCheck&) = default;
};

inline std::optional<Rational> parse_rational(std::string_view s) {
    const auto slash = s.find('/');
    const bool neg = !s.empty() && s.front() == '-';
    const std::string_view body = neg ? s.substr(1) : s;
    if (slash == std::string_view::npos) {
        auto n = parse_natural(body);
        if (!n) return std::nullopt;
        return Rational(neg ? Integer(-*n) : *n);
    }
    const auto bslash = body.find('/');
    auto n = parse_natural(body.substr(0, bslash));
    auto d = parse_natural(body.substr(bslash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(neg ? Integer(-*n) : *n, *d);
}

inline std::string format_fraction(const FractionCheck& f) {
    std::string out = f.kind == FractionCheck::Kind::Refine ? "refine:" : "scale" + std::to_string(f.pairs) + ":";
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (i) out += ';';
        out += f.values[i].str();
    }
    return out;
}

inline std::optional<FractionCheck> parse_fraction(std::string_view s) {
    const auto colon = s.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    const std::string_view head = s.substr(0, colon);
    FractionCheck f;
    if (head == "refine") {
        f.kind = FractionCheck::Kind::Refine;
    } else if (head.substr(0, 5) == "scale") {
        auto m = parse_natural(head.substr(5));
        if (!m || *m > 1000) return std::nullopt;
        f.kind = FractionCheck::Kind::Scale;
        f.pairs = static_cast<unsigned>(*m);
    } else {
        return std::nullopt;
    }
    std::string_view rest = s.substr(colon + 1);
    while (true) {
        const auto semi = rest.find(';');
        auto q = parse_rational(rest.substr(0, semi));
        if (!q) return std::nullopt;
        f.values.push_back(*q);
        if (semi == std::string_view::npos) break;
        rest = rest.substr(semi + 1);
    }
    if (f.kind == FractionCheck::Kind::Scale && f.values.size() != 1) return std::nullopt;
    return f;
}

/// A transcribed manuscript board and its frozen text rendering.
struct BoardFixture {
    std::string name;
    TableauStyle style = TableauStyle::PracticaGeometrie;
    std::optional<unsigned> upto;  ///< board after this step; empty = complete board
    std::string cells;             ///< transcription
    std::string render;            ///< render_text(..., show_steps = true)
};

struct CorpusEntry {
    std::string id;
    Source source = Source::LA;
    Natural radicand;
    Natural expected_root;
    Natural expected_remainder;
    std::optional<FractionCheck> expected_fraction;
    std::string figure_ref;

    TableauStyle style = TableauStyle::PracticaGeometrie;
    Procedure procedure = Procedure::Geometrie;
    Layout layout;
    std::vector<BoardFixture> boards;
};

/// Parses a transcription into a board for `radicand`.
inline Tableau parse_transcription(const Natural& radicand, TableauStyle style, std::string_view text) {
    Tableau t;
    t.radicand = radicand;
    t.style = style;
    for (const auto& c : cells_for(radicand, 0, Band::Radicand))
        t.cells.push_back(Cell{c.column, 0, Band::Radicand, std::string(1, char('0' + c.digit)), 0, CellFlag::Normal, {}});

    std::istringstream in{std::string(text)};
    std::string tok;
    auto fail = [&] { throw std::invalid_argument("bad transcription token '" + tok + "'"); };
    auto read_uint = [&](std::string_view s) {
        auto v = parse_natural(s);
        if (!v || *v > 100000) fail();
        return static_cast<unsigned>(*v);
    };
    std::map<std::pair<Band, int>, int> rows;
    while (in >> tok) {
        std::string_view s = tok;
        CellFlag flag = CellFlag::Normal;
        if (s.back() == '!') {
            flag = CellFlag::Inserted;
            s.remove_suffix(1);
        }
        const auto at = s.find('@');
        if (at == std::string_view::npos || s.size() < 3) fail();
        const unsigned step = read_uint(s.substr(at + 1));
        if (s.front() == '(') {
            const std::string_view digits = s.substr(1, at - 1);
            if (!parse_natural(digits)) fail();
            for (std::size_t i = 0; i < digits.size(); ++i)
                t.cells.push_back(Cell{static_cast<int>(digits.size() - 1 - i), 0, Band::Remainder,
                                       std::string(1, digits[i]), step, flag, {}});
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string_view::npos || eq > at) fail();
        const int column = static_cast<int>(read_uint(s.substr(1, eq - 1)));
        const std::string digits(s.substr(eq + 1, at - eq - 1));
        if (!parse_natural(digits)) fail();
        Band band = Band::Residual;
        int row = 0;
        switch (s.front()) {
            case 'r': band = Band::Residual; break;
            case 't': band = Band::Root; break;
            case 'u': band = Band::Root; row = 1; break;
            case 'd': band = Band::DoubledRoot; break;
            default: fail();
        }
        if (band != Band::Residual && digits.size() != 1) fail();
        if (band == Band::Residual || band == Band::DoubledRoot) row = rows[{band, column}]++;
        t.cells.push_back(Cell{column, row, band, digits, step, flag, {}});
    }
    t.root = 0;
    for (const auto& c : t.cells)
        if (c.band == Band::Root && c.row == 0) t.root += Natural(c.digits[0] - '0') * pow10(static_cast<unsigned>(c.column));
    for (const auto& c : t.cells)
        if (c.band == Band::Remainder) t.remainder += Natural(c.digits[0] - '0') * pow10(static_cast<unsigned>(c.column));
    return t;
}

namespace detail {

inline CorpusEntry entry(std::string id, Source source, unsigned long long n, unsigned long long root,
                         unsigned long long rem, std::string figure_ref) {
    CorpusEntry e;
    e.id = std::move(id);
    e.source = source;
    e.radicand = n;
    e.expected_root = root;
    e.expected_remainder = rem;
    e.figure_ref = std::move(figure_ref);
    e.style = source == Source::LA ? TableauStyle::LiberAbaci1228 : TableauStyle::PracticaGeometrie;
    e.procedure = procedure_for(e.style);
    return e;
}

inline FractionCheck refine_check(std::vector<Rational> values) {
    return FractionCheck{FractionCheck::Kind::Refine, 0, std::move(values)};
}

inline Rational q(long long n, long long d) { return Rational(Integer(n), Integer(d)); }

}  // namespace detail

inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        using detail::entry;
        using detail::q;
        std::vector<CorpusEntry> v;

        auto e = entry("la-743", Source::LA, 743, 27, 14, "Liber Abaci ch. 14, Boncompagni 1857 p. 353-354");
        e.expected_fraction = detail::refine_check({q(736, 27)});
        e.boards = {
            {"stage-2", TableauStyle::LiberAbaci1228, 2u, "r2=3@2 t1=2@1 u1=2@1",
             R"board(
3_2
*7* *4* *3*
    2_1
    2_1
)board"},
            {"final", TableauStyle::LiberAbaci1228, std::nullopt, "r2=3@2 r1=6@4 t1=2@1 t0=7@3 u1=2@1 u0=7@3 (14@5",
             R"board(
            (14_5
3_2 6_4
*7* *4* *3*
    2_1 7_3
    2_1 7_3
)board"},
        };
        v.push_back(e);

        e = entry("la-8754", Source::LA, 8754, 93, 105, "Liber Abaci ch. 14, Boncompagni 1857 p. 354");
        e.expected_fraction = detail::refine_check({q(5801, 62)});
        e.boards = {
            {"la1228", TableauStyle::LiberAbaci1228, std::nullopt,
             "r2=6@2 r2=1@4 r1=1@4 t1=9@1 t0=3@3 u1=9@1 u0=3@3 (105@5",
             R"board(
                (105_5
    1_4
    6_2 1_4
*8* *7* *5* *4*
        9_1 3_3
        9_1 3_3
)board"},
            {"la1202", TableauStyle::LiberAbaci1202, std::nullopt,
             "r2=6@2 r1=11@4 t1=9@1 t0=3@3 u1=9@1 u0=3@3 (105@5",
             R"board(
                 (105_5
    6_2 11_4
*8* *7* *5*  *4*
        9_1  3_3
        9_1  3_3
)board"},
        };
        v.push_back(e);

        e = entry("la-12345", Source::LA, 12345, 111, 24, "Liber Abaci ch. 14, Boncompagni 1857 p. 354-355");
        e.expected_fraction = detail::refine_check({q(4111, 37)});
        e.boards = {
            {"final", TableauStyle::LiberAbaci1228, std::nullopt,
             "r2=2@2 r1=2@4 t2=1@1 t1=1@1 t0=1@3 u2=1@1 u1=1@1 u0=1@3 (24@5",
             R"board(
                    (24_5
        2_2 2_4
*1* *2* *3* *4* *5*
        1_1 1_1 1_3
        1_1 1_1 1_3
)board"},
        };
        v.push_back(e);

        e = entry("la-927435", Source::LA, 927435, 963, 66, "Liber Abaci ch. 14, Boncompagni 1857 p. 355");
        e.expected_fraction = detail::refine_check({q(309134, 321), Rational(Integer(191127659791LL), Integer(198464028))});
        e.boards = {
            {"final", TableauStyle::LiberAbaci1228, std::nullopt,
             "r3=5@2 r2=8@2 r1=7@4 t2=9@1 t1=6@1 t0=3@3 u2=9@1 u1=6@1 u0=3@3 (66@5",
             R"board(
                        (66_5
        5_2 8_2 7_4
*9* *2* *7* *4* *3* *5*
            9_1 6_1 3_3
            9_1 6_1 3_3
)board"},
        };
        v.push_back(e);

        e = entry("la-72340000", Source::LA, 72340000, 8505, 4975,
                  "Liber Abaci ch. 14, root of 7234 to two more places, Boncompagni 1857 p. 355-356");
        e.expected_fraction = FractionCheck{FractionCheck::Kind::Scale, 2, {q(34021, 400)}};
        e.procedure = Procedure::Evolving;
        e.layout.inserted_cells = {{6, 5}};
        {
            const std::string s7 = "r6=8@2 r6=3@5 r5=3@6! r4=9@7 t3=8@1 t2=5@4 d4=1@3 d3=6@3";
            const std::string s13 = s7 + " r4=4@12 r3=5@13 t1=0@9 t0=5@11 d4=1@8 d3=7@8 d2=0@8 d1=0@10";
            const std::string s15 = s13 + " r3=4@14 r2=9@14 r1=7@14 r0=5@14 d4=1@15 d3=7@15 d2=0@15 d1=1@15 d0=0@15 (4975@14";
            e.boards = {
                {"stage-7", TableauStyle::LiberAbaci1228, 7u, s7,
             R"board(
    3_5
    8_2 3_6 9_7
*7* *2* *3* *4* *0* *0* *0* *0*
                8_1 5_4
            1_3 6_3
)board"},
                {"stage-13", TableauStyle::LiberAbaci1228, 13u, s13,
             R"board(
    3_5     4_12
    8_2 3_6 9_7  5_13
*7* *2* *3* *4*  *0*  *0* *0*  *0*
                 8_1  5_4 0_9  5_11
            1_3  6_3
            1_8  7_8  0_8 0_10
)board"},
                {"stage-15", TableauStyle::LiberAbaci1228, std::nullopt, s15,
             R"board(
                                     (4975_14
    3_5     4_12 4_14
    8_2 3_6 9_7  5_13 9_14 7_14 5_14
*7* *2* *3* *4*  *0*  *0*  *0*  *0*
                 8_1  5_4  0_9  5_11
            1_3  6_3
            1_8  7_8  0_8  0_10
            1_15 7_15 0_15 1_15 0_15
)board"},
            };
        }
        v.push_back(e);

        e = entry("dpg-153", Source::DPG, 153, 12, 9, "De Practica Geometrie ch. 2, Boncompagni 1862 p. 19");
        e.layout.steps = {0, 1, 4, 3, 2, 4, 5};
        e.boards = {{"final", TableauStyle::PracticaGeometrie, std::nullopt, "r1=1@4 t1=1@1 t0=2@2 d1=2@3 (9@5",
             R"board(
            (9_5
    1_4
*1* *5* *3*
    1_1 2_2
    2_3
)board"}};
        v.push_back(e);

        e = entry("dpg-864", Source::DPG, 864, 29, 23, "De Practica Geometrie ch. 2, Boncompagni 1862 p. 19");
        e.boards = {{"final", TableauStyle::PracticaGeometrie, std::nullopt,
                     "r2=4@2 r2=1@5 r1=0@5 t1=2@1 t0=9@4 d1=4@3 (23@6",
             R"board(
            (23_6
1_5
4_2 0_5
*8* *6* *4*
    2_1 9_4
    4_3
)board"}};
        v.push_back(e);

        e = entry("dpg-960", Source::DPG, 960, 30, 60, "De Practica Geometrie ch. 2, Boncompagni 1862 p. 19-20");
        e.layout.materialize_zero_residual = true;
        e.layout.inserted_events = {2};
        e.boards = {{"final", TableauStyle::PracticaGeometrie, std::nullopt, "r2=0@2! t1=3@1 t0=0@4 d1=6@3 (60@5",
             R"board(
            (60_5
0_2
*9* *6* *0*
    3_1 0_4
    6_3
)board"}};
        v.push_back(e);

        e = entry("dpg-1234", Source::DPG, 1234, 35, 9, "De Practica Geometrie ch. 2, Boncompagni 1862 p. 20");
        e.layout.steps = {0, 1, 2, 4, 5, 6, 7};
        e.layout.notes = {{3, "join 3 with 34 to make 334"}};
        e.layout.inserted_cells = {{5, 1}};
        e.boards = {{"final", TableauStyle::PracticaGeometrie, std::nullopt, "r2=3@2 r1=3@6! t1=3@1 t0=5@5 d1=6@4 (9@7",
             R"board(
                (9_7
    3_2 3_6
*1* *2* *3* *4*
        3_1 5_5
        6_4
)board"}};
        v.push_back(e);

        e = entry("dpg-6142", Source::DPG, 6142, 78, 58, "De Practica Geometrie ch. 2, Boncompagni 1862 p. 20");
        e.layout.steps = {0, 1, 2, 3, 4, 5, 5, 6};
        e.layout.dropped = {5};
        e.layout.shifted = {{6, -1}};
        e.boards = {{"final", TableauStyle::PracticaGeometrie, std::nullopt,
                     "r3=1@2 r2=2@2 r1=1@5 r0=2@5 t1=7@1 t0=8@4 d2=1@3 d1=4@3 (58@6",
             R"board(
                (58_6
1_2 2_2 1_5 2_5
*6* *1* *4* *2*
        7_1 8_4
    1_3 4_3
)board"}};
        v.push_back(e);

        e = entry("dpg-8172", Source::DPG, 8172, 90, 72, "De Practica Geometrie ch. 2, Boncompagni 1862 p. 20-21");
        e.boards = {{"final", TableauStyle::PracticaGeometrie, std::nullopt, "t1=9@1 t0=0@3 d2=1@2 d1=8@2 (72@4",
             R"board(
                (72_4
*8* *1* *7* *2*
        9_1 0_3
    1_2 8_2
)board"}};
        v.push_back(e);

        e = entry("dpg-12345", Source::DPG, 12345, 111, 24, "De Practica Geometrie ch. 2, Boncompagni 1862 p. 21");
        e.layout.steps = {0, 1, 3, 2, 4, 5, 5, 5};
        e.layout.dropped = {6};
        e.boards = {{"final", TableauStyle::PracticaGeometrie, std::nullopt,
                     "r2=2@3 t2=1@1 t1=1@1 t0=1@4 d2=2@2 d1=2@2 (24@5",
             R"board(
                    (24_5
        2_3
*1* *2* *3* *4* *5*
        1_1 1_1 1_4
        2_2 2_2
)board"}};
        v.push_back(e);

        e = entry("dpg-98765", Source::DPG, 98765, 314, 169, "De Practica Geometrie ch. 2, Boncompagni 1862 p. 21-22");
        e.boards = {{"final", TableauStyle::PracticaGeometrie, std::nullopt,
                     "r3=2@2 r2=6@2 r2=2@5 r2=1@6 r1=8@6 t2=3@1 t1=1@1 t0=4@4 d2=6@3 d1=2@3 (169@7",
             R"board(
                    (169_7
        1_6
        2_5
    2_2 6_2 8_6
*9* *8* *7* *6* *5*
        3_1 1_1 4_4
        6_3 2_3
)board"}};
        v.push_back(e);

        e = entry("dpg-123456", Source::DPG, 123456, 351, 255, "De Practica Geometrie ch. 2, Boncompagni 1862 p. 22");
        e.boards = {{"final", TableauStyle::PracticaGeometrie, std::nullopt,
                     "r2=9@2 r2=2@5 t2=3@1 t1=5@1 t0=1@4 d2=7@3 d1=0@3 (255@6",
             R"board(
                        (255_6
            2_5
            9_2
*1* *2* *3* *4* *5* *6*
            3_1 5_1 1_4
            7_3 0_3
)board"}};
        v.push_back(e);

        e = entry("dpg-987654", Source::DPG, 987654, 993, 1605, "De Practica Geometrie ch. 2, Boncompagni 1862 p. 22");
        e.layout.inserted_cells = {{7, 1}};
        e.boards = {{"final", TableauStyle::PracticaGeometrie, std::nullopt,
                     "r3=7@2 r2=5@2 r3=4@5 r3=1@6 r2=8@6 r3=1@7 r2=6@7 r1=1@7! t2=9@1 t1=9@1 t0=3@4 "
                     "d3=1@3 d2=9@3 d1=8@3 (1605@8",
             R"board(
                        (1605_8
        1_7
        1_6 6_7
        4_5 8_6
        7_2 5_2 1_7
*9* *8* *7* *6* *5* *4*
            9_1 9_1 3_4
        1_3 9_3 8_3
)board"}};
        v.push_back(e);

        e = entry("dpg-9876543", Source::DPG, 9876543, 3142, 4379, "De Practica Geometrie ch. 2, Boncompagni 1862 p. 22");
        e.layout.inserted_events = {3, 5, 6, 7};
        e.boards = {{"final", TableauStyle::PracticaGeometrie, std::nullopt,
                     "r4=1@2 r3=6@2 r2=9@2 r3=4@5! r3=4@6! r2=5@6! r3=4@7! r2=3@7! r1=8@7! t3=3@1 t2=1@1 t1=4@1 "
                     "t0=2@4 d3=6@3! d2=2@3! d1=8@3! (4379@8",
             R"board(
                            (4379_8
            4_7
            4_6 3_7
            4_5 5_6
        1_2 6_2 9_2 8_7
*9* *8* *7* *6* *5* *4* *3*
            3_1 1_1 4_1 2_4
            6_3 2_3 8_3
)board"}};
        v.push_back(e);
        for (auto& entry : v)
            for (auto& b : entry.boards)
                if (!b.render.empty() && b.render.front() == '\n') b.render.erase(0, 1);
        return v;
    }();
    return entries;
}

inline const CorpusEntry* find_entry(std::string_view id) {
    for (const auto& e : corpus())
        if (e.id == id) return &e;
    return nullptr;
}

/// The square root of 10, worked twice, is a fraction example with no board.
inline FractionCheck sqrt10_check() {
    return FractionCheck{FractionCheck::Kind::Refine, 0, {detail::q(19, 6), detail::q(721, 228)}};
}

/// Trace of an entry with its manuscript layout applied.
inline FibonacciRun corpus_run(const CorpusEntry& e, DigitRule rule = DigitRule::ExactLargest) {
    return isqrt_fibonacci(e.radicand, rule, e.procedure, e.layout);
}

/// The board of an entry as the library draws it, for one fixture.
inline Tableau corpus_board(const CorpusEntry& e, const BoardFixture& f) {
    const Tableau full = build_tableau(corpus_run(e).trace, f.style);
    if (!f.upto) return full;
    return snapshots(full).at(*f.upto);
}

// ---- export file ---------------------------------------------------------

struct CorpusRecord {
    std::string id;
    Source source = Source::LA;
    Natural radicand;
    Natural root;
    Natural remainder;
    std::optional<FractionCheck> fraction;
    std::string figure_ref;

    friend bool operator==(const CorpusRecord&, const CorpusRecord&) = default;
};

inline CorpusRecord record_of(const CorpusEntry& e) {
    return CorpusRecord{e.id, e.source, e.radicand, e.expected_root, e.expected_remainder, e.expected_fraction,
                        e.figure_ref};
}

inline std::string format_record(const CorpusRecord& r) {
    return r.id + "|" + std::string(source_name(r.source)) + "|" + r.radicand.str() + "|" + r.root.str() + "|" +
           r.remainder.str() + "|" + (r.fraction ? format_fraction(*r.fraction) : "") + "|" + r.figure_ref;
}

inline std::string export_corpus() {
    std::string out;
    for (const auto& e : corpus()) out += format_record(record_of(e)) + "\n";
    return out;
}

/// Parses an export file. Throws std::invalid_argument naming the bad line.
inline std::vector<CorpusRecord> parse_corpus(std::string_view text) {
    std::vector<CorpusRecord> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty()) continue;
        auto bad = [&](const char* why) {
            return std::invalid_argument("corpus line " + std::to_string(line_no) + ": " + why);
        };
        std::vector<std::string_view> f;
        while (true) {
            const auto bar = line.find('|');
            f.push_back(line.substr(0, bar));
            if (bar == std::string_view::npos) break;
            line = line.substr(bar + 1);
        }
        if (f.size() != 7) throw bad("expected 7 fields");
        CorpusRecord r;
        r.id = std::string(f[0]);
        auto src = parse_source(f[1]);
        auto n = parse_natural(f[2]);
        auto root = parse_natural(f[3]);
        auto rem = parse_natural(f[4]);
        if (r.id.empty()) throw bad("empty id");
        if (!src) throw bad("unknown source");
        if (!n || !root || !rem) throw bad("malformed number");
        r.source = *src;
        r.radicand = *n;
        r.root = *root;
        r.remainder = *rem;
        if (!f[5].empty()) {
            r.fraction = parse_fraction(f[5]);
            if (!r.fraction) throw bad("malformed fraction");
        }
        r.figure_ref = std::string(f[6]);
        out.push_back(std::move(r));
    }
    return out;
}

// ---- verification --------------------------------------------------------

struct CheckLine {
    bool pass = false;
    std::string text;
};

/// Root and remainder of one record under every digit rule.
inline CheckLine check_root(const CorpusRecord& r) {
    const std::string expected = "root " + r.root.str() + " remainder " + r.remainder.str();
    if (r.root * r.root + r.remainder != r.radicand)
        return {false, "FAIL " + r.id + " " + expected + ": root^2 + remainder != " + r.radicand.str()};
    for (DigitRule rule : kAllRules) {
        const RootResult got = isqrt(r.radicand, rule);
        if (got.root != r.root || got.remainder != r.remainder)
            return {false, "FAIL " + r.id + " " + expected + ": got root " + got.root.str() + " remainder " +
                               got.remainder.str() + " with " + std::string(rule_name(rule))};
    }
    return {true, "PASS " + r.id + " " + expected};
}

inline CheckLine check_fraction(const std::string& id, const Natural& n, const FractionCheck& f) {
    const std::string expected = format_fraction(f);
    FractionCheck got = f;
    got.values.clear();
    if (f.kind == FractionCheck::Kind::Refine) {
        if (n < 1 || f.values.empty()) return {false, "FAIL " + id + " fraction " + expected + ": nothing to refine"};
        for (const auto& s : refine_sequence(n, StartChoice::Floor, f.values.size())) got.values.push_back(s.approx);
    } else {
        // The record holds the scaled radicand N*10^(2m).
        const Natural unit = pow10(2 * f.pairs);
        if (n % unit != 0)
            return {false, "FAIL " + id + " fraction " + expected + ": radicand is not a multiple of " + unit.str()};
        got.values.push_back(scale_and_root(n / unit, f.pairs).descaled);
    }
    if (got.values != f.values)
        return {false, "FAIL " + id + " fraction " + expected + ": got " + format_fraction(got)};
    return {true, "PASS " + id + " fraction " + expected};
}

/// One line per root result, then one per fraction check (including the
/// square root of 10, which has no corpus entry).
inline std::vector<CheckLine> run_corpus(const std::vector<CorpusRecord>& records) {
    std::vector<CheckLine> out;
    for (const auto& r : records) out.push_back(check_root(r));
    for (const auto& r : records)
        if (r.fraction) out.push_back(check_fraction(r.id, r.radicand, *r.fraction));
    out.push_back(check_fraction("sqrt-10", 10, sqrt10_check()));
    return out;
}

}  // namespace fibroot
