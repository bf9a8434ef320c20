#include "tlab/io.hpp"

#include <json.hpp>

#include <sstream>

namespace tlab {

namespace {
using json = nlohmann::ordered_json;
}

std::string to_text(const SkewTableau& t) {
    std::ostringstream os;
    for (int i = 1; i <= t.row_count(); ++i) {
        bool first = true;
        for (int d = 0; d < t.shape.inner_at(i); ++d) {
            os << (first ? "" : " ") << '.';
            first = false;
        }
        for (int e : t.rows[static_cast<size_t>(i - 1)]) {
            os << (first ? "" : " ") << e;
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

SkewTableau tableau_from_text(const std::string& text) {
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> rows;
    int line_no = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
        pos = eol == std::string::npos ? text.size() : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        int dots = 0;
        std::vector<int> entries;
        bool seen_entry = false;
        size_t col = 0;
        while (col < line.size()) {
            if (line[col] == ' ') {
                ++col;
                continue;
            }
            if (line[col] == '.') {
                if (seen_entry)
                    throw ParseError(line_no, static_cast<int>(col) + 1,
                                     "inner-cell marker after an entry");
                ++dots;
                ++col;
                continue;
            }
            if (line[col] >= '0' && line[col] <= '9') {
                size_t start = col;
                long value = 0;
                while (col < line.size() && line[col] >= '0' && line[col] <= '9') {
                    value = value * 10 + (line[col] - '0');
                    if (value > 1000000000)
                        throw ParseError(line_no, static_cast<int>(start) + 1, "entry out of range");
                    ++col;
                }
                entries.push_back(static_cast<int>(value));
                seen_entry = true;
                continue;
            }
            throw ParseError(line_no, static_cast<int>(col) + 1,
                             std::string("unexpected character '") + line[col] + "'");
        }
        if (dots == 0 && entries.empty())
            throw ParseError(line_no, 1, "empty row");
        inner.push_back(dots);
        outer.push_back(dots + static_cast<int>(entries.size()));
        rows.push_back(std::move(entries));
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    SkewTableau t{SkewShape{Partition{std::move(outer)}, Partition{std::move(inner)}},
                  std::move(rows)};
    if (!is_valid_tableau(t)) throw ParseError(line_no, 1, "rows do not form a valid skew tableau");
    return t;
}

std::string to_json(const SkewTableau& t) {
    json j;
    j["outer"] = t.shape.outer.parts;
    j["inner"] = t.shape.inner.parts;
    j["rows"] = t.rows;
    return j.dump() + "\n";
}

SkewTableau tableau_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(1, static_cast<int>(e.byte), e.what());
    }
    if (!j.is_object() || !j.contains("outer") || !j.contains("inner") || !j.contains("rows"))
        throw ParseError(1, 1, "expected an object with outer, inner and rows");
    SkewTableau t;
    try {
        t.shape.outer.parts = j["outer"].get<std::vector<int>>();
        t.shape.inner.parts = j["inner"].get<std::vector<int>>();
        t.rows = j["rows"].get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
        throw ParseError(1, 1, e.what());
    }
    if (!is_valid_tableau(t)) throw ParseError(1, 1, "fields do not form a valid skew tableau");
    return t;
}

std::string to_text(const Partition& p) {
    if (p.parts.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < p.parts.size(); ++i) os << (i ? "," : "") << p.parts[i];
    return os.str();
}

Partition partition_from_text(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.empty() || s == "-") return Partition{};
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty())
            throw ParseError(1, static_cast<int>(pos) + 1, "empty partition part");
        for (char c : tok)
            if (c < '0' || c > '9')
                throw ParseError(1, static_cast<int>(pos) + 1, "partition parts must be integers");
        long value = std::stol(tok);
        if (value > 1000000000) throw ParseError(1, static_cast<int>(pos) + 1, "part out of range");
        parts.push_back(static_cast<int>(value));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    try {
        return normalized_partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, 1, e.what());
    }
}

}  // namespace tlab
