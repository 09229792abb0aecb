#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "cubefold/errors.hpp"
#include "cubefold/polyomino.hpp"

#include <nlohmann/json.hpp>

namespace cubefold {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

int require_int(const json& v, const char* what) {
    if (!v.is_number_integer()) {
        throw SyntaxError(std::string(what) + " must be an integer");
    }
    return v.get<int>();
}

GridPoint parse_point(const json& v, const char* what) {
    if (!v.is_array() || v.size() != 2) {
        throw SyntaxError(std::string(what) + " must be a [x,y] pair");
    }
    return {require_int(v[0], what), require_int(v[1], what)};
}

Polyomino parse_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SyntaxError("top-level value must be an object");
    for (const auto& item : doc.items()) {
        if (item.key() != "squares" && item.key() != "slits") {
            throw SyntaxError("unknown key \"" + item.key() + "\"");
        }
    }
    if (!doc.contains("squares")) throw SyntaxError("missing \"squares\"");
    if (!doc["squares"].is_array()) throw SyntaxError("\"squares\" must be an array");

    std::vector<GridPoint> squares;
    for (const json& sq : doc["squares"]) {
        squares.push_back(parse_point(sq, "square"));
    }
    std::vector<LatticeEdge> slits;
    if (doc.contains("slits")) {
        if (!doc["slits"].is_array()) throw SyntaxError("\"slits\" must be an array");
        for (const json& sl : doc["slits"]) {
            if (!sl.is_array() || sl.size() != 2) {
                throw SyntaxError("slit must be a pair of points");
            }
            slits.push_back(LatticeEdge::between(parse_point(sl[0], "slit endpoint"),
                                                 parse_point(sl[1], "slit endpoint")));
        }
    }
    return Polyomino::create(std::move(squares), std::move(slits));
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    if (!current.empty()) lines.push_back(current);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

Polyomino parse_ascii_compact(const std::vector<std::string>& lines) {
    const std::size_t width = lines.front().size();
    std::vector<GridPoint> squares;
    const int height = static_cast<int>(lines.size());
    for (int r = 0; r < height; ++r) {
        if (lines[r].size() != width) {
            throw SyntaxError("compact grid must be rectangular");
        }
        for (std::size_t c = 0; c < width; ++c) {
            const char ch = lines[r][c];
            if (ch == '#') {
                squares.push_back({static_cast<int>(c), height - 1 - r});
            } else if (ch != '.') {
                throw SyntaxError(std::string("unexpected character '") + ch +
                                  "' in compact grid");
            }
        }
    }
    return Polyomino::create(std::move(squares));
}

Polyomino parse_ascii_expanded(std::vector<std::string> lines) {
    const int dh = static_cast<int>(lines.size());
    std::size_t width = 0;
    for (const std::string& l : lines) width = std::max(width, l.size());
    const int dw = static_cast<int>(width);
    if (dh % 2 == 0 || dw % 2 == 0) {
        throw SyntaxError("expanded grid must be (2H+1) rows by (2W+1) columns");
    }
    for (std::string& l : lines) l.resize(width, ' ');

    const int cells_h = (dh - 1) / 2;
    auto at = [&](int i, int j) { // doubled coordinates, j up
        return lines[static_cast<std::size_t>(dh - 1 - j)][static_cast<std::size_t>(i)];
    };

    std::vector<GridPoint> squares;
    // Marked edges, keyed by doubled coordinates.
    std::vector<std::vector<bool>> marked(static_cast<std::size_t>(dw),
                                          std::vector<bool>(static_cast<std::size_t>(dh), false));
    for (int j = 0; j < dh; ++j) {
        for (int i = 0; i < dw; ++i) {
            const char ch = at(i, j);
            const bool iodd = i & 1, jodd = j & 1;
            if (iodd && jodd) {
                if (ch == '#') {
                    squares.push_back({(i - 1) / 2, (j - 1) / 2});
                } else if (ch != '.' && ch != ' ') {
                    throw SyntaxError(std::string("unexpected cell character '") + ch + "'");
                }
            } else if (!iodd && !jodd) {
                if (ch != '+' && ch != ' ' && ch != '.') {
                    throw SyntaxError(std::string("unexpected character '") + ch +
                                      "' at a grid-point position");
                }
            } else {
                const char expected = iodd ? '-' : '|';
                if (ch == expected) {
                    marked[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
                } else if (ch != ' ' && ch != '.') {
                    throw SyntaxError(std::string("unexpected character '") + ch +
                                      "' at an edge position");
                }
            }
        }
    }

    // Interior edges between two squares: unmarked means slit.
    std::vector<LatticeEdge> slits;
    auto has_square = [&](int cx, int cy) {
        if (cx < 0 || cy < 0) return false;
        return std::find(squares.begin(), squares.end(), GridPoint{cx, cy}) != squares.end();
    };
    for (int j = 0; j < dh; ++j) {
        for (int i = 0; i < dw; ++i) {
            const bool iodd = i & 1, jodd = j & 1;
            if (iodd == jodd) continue;
            bool interior;
            LatticeEdge e{{0, 0}, {0, 0}};
            if (!iodd) { // vertical edge at x=i/2
                const int x = i / 2, y = (j - 1) / 2;
                interior = has_square(x - 1, y) && has_square(x, y);
                e = LatticeEdge{{x, y}, {x, y + 1}};
            } else { // horizontal edge at y=j/2
                const int x = (i - 1) / 2, y = j / 2;
                interior = has_square(x, y - 1) && has_square(x, y);
                e = LatticeEdge{{x, y}, {x + 1, y}};
            }
            if (interior && !marked[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                slits.push_back(e);
            }
        }
    }
    (void)cells_h;
    return Polyomino::create(std::move(squares), std::move(slits));
}

} // namespace

Polyomino parse(std::string_view text, Format format) {
    if (format == Format::Json) return parse_json(text);
    auto lines = split_lines(text);
    if (lines.empty()) throw SyntaxError("empty input");
    // Compact uses only '#' and '.'; anything else means the expanded grid.
    bool compact = true;
    for (const std::string& l : lines) {
        for (char c : l) {
            if (c != '#' && c != '.') {
                compact = false;
                break;
            }
        }
        if (!compact) break;
    }
    return compact ? parse_ascii_compact(lines) : parse_ascii_expanded(std::move(lines));
}

std::string to_json(const Polyomino& p) {
    ordered_json doc;
    auto& squares = doc["squares"] = ordered_json::array();
    for (const GridPoint& s : p.squares()) squares.push_back({s.x, s.y});
    auto& slits = doc["slits"] = ordered_json::array();
    for (const LatticeEdge& e : p.slit_edges()) {
        slits.push_back({{e.a.x, e.a.y}, {e.b.x, e.b.y}});
    }
    return doc.dump();
}

std::string to_ascii_compact(const Polyomino& p) {
    if (!p.slit_edges().empty()) {
        throw ValidationError("compact format cannot express slit edges");
    }
    auto [lo, hi] = p.cell_bounds();
    std::string out;
    for (int y = hi.y; y >= lo.y; --y) {
        for (int x = lo.x; x <= hi.x; ++x) {
            out += p.contains({x, y}) ? '#' : '.';
        }
        out += '\n';
    }
    return out;
}

std::string to_ascii_expanded(const Polyomino& p) {
    auto [lo, hi] = p.cell_bounds();
    const int w = hi.x - lo.x + 1, h = hi.y - lo.y + 1;
    const int dw = 2 * w + 1, dh = 2 * h + 1;
    std::vector<std::string> rows(static_cast<std::size_t>(dh),
                                  std::string(static_cast<std::size_t>(dw), ' '));
    auto put = [&](int i, int j, char c) {
        rows[static_cast<std::size_t>(dh - 1 - j)][static_cast<std::size_t>(i)] = c;
    };
    for (int j = 0; j < dh; j += 2) {
        for (int i = 0; i < dw; i += 2) put(i, j, '+');
    }
    for (int y = lo.y; y <= hi.y; ++y) {
        for (int x = lo.x; x <= hi.x; ++x) {
            put(2 * (x - lo.x) + 1, 2 * (y - lo.y) + 1, p.contains({x, y}) ? '#' : '.');
        }
    }
    auto mark_if_present = [&](GridPoint cell, Direction d, int i, int j, char c) {
        if (p.contains(cell) && p.connects(cell, d)) put(i, j, c);
    };
    for (int y = lo.y; y <= hi.y; ++y) {
        for (int x = lo.x; x <= hi.x; ++x) {
            // East and north interior edges of each cell.
            mark_if_present({x, y}, Direction::East, 2 * (x - lo.x) + 2, 2 * (y - lo.y) + 1, '|');
            mark_if_present({x, y}, Direction::North, 2 * (x - lo.x) + 1, 2 * (y - lo.y) + 2, '-');
        }
    }
    std::string out;
    for (std::string& r : rows) {
        while (!r.empty() && r.back() == ' ') r.pop_back();
        out += r;
        out += '\n';
    }
    return out;
}

} // namespace cubefold
