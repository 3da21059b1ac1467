#include "sliplab/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "sliplab/errors.hpp"

namespace sliplab {
namespace {

struct Line {
    std::size_t number = 0;  // 1-based line number in the source text
    std::vector<std::string> tokens;
};

// Strips comments, splits on whitespace, and drops blank lines.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        Line line;
        line.number = line_no;
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
            if (i > start) line.tokens.emplace_back(raw.substr(start, i - start));
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
    }
    return lines;
}

std::uint64_t parse_number(const std::string& token, const Line& line, std::string_view origin) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(std::string(origin) + ": expected a number, got '" + token + "'",
                         line.number);
    return value;
}

std::size_t parse_index(const std::string& token, std::size_t bound, const Line& line,
                        std::string_view origin) {
    std::uint64_t value = parse_number(token, line, origin);
    if (value >= bound)
        throw ParseError(std::string(origin) + ": index " + token + " out of range (must be < " +
                             std::to_string(bound) + ")",
                         line.number);
    return static_cast<std::size_t>(value);
}

Residue parse_residue(const std::string& token, const PrimeField& field, const Line& line,
                      std::string_view origin) {
    std::uint64_t value = parse_number(token, line, origin);
    if (value >= field.modulus())
        throw ParseError(std::string(origin) + ": entry " + token + " not reduced mod " +
                             std::to_string(field.modulus()),
                         line.number);
    return static_cast<Residue>(value);
}

// Parses the residue list after a ':' separator at tokens[offset].
Vec parse_coords(const Line& line, std::size_t offset, std::size_t count, const PrimeField& field,
                 std::string_view origin) {
    if (line.tokens.size() < offset + 1 || line.tokens[offset] != ":")
        throw ParseError(std::string(origin) + ": expected ':' before the entry list",
                         line.number);
    if (line.tokens.size() != offset + 1 + count)
        throw ParseError(std::string(origin) + ": expected " + std::to_string(count) +
                             " entries, got " + std::to_string(line.tokens.size() - offset - 1),
                         line.number);
    Vec coords(count, 0);
    for (std::size_t k = 0; k < count; ++k)
        coords[k] = parse_residue(line.tokens[offset + 1 + k], field, line, origin);
    return coords;
}

void append_row(std::string& out, std::string_view key, std::span<const Residue> coords) {
    out += key;
    out += " :";
    for (Residue c : coords) {
        out += ' ';
        out += std::to_string(c);
    }
    out += '\n';
}

}  // namespace

Algebra parse_algebra_text(std::string_view text, std::string_view origin) {
    const std::vector<Line> lines = tokenize(text);

    std::optional<PrimeField> field;
    std::optional<std::size_t> dim;
    std::optional<Vec> unit;
    Vec structure;
    std::vector<bool> seen;

    for (const Line& line : lines) {
        const std::string& key = line.tokens[0];
        if (key == "field") {
            if (field) throw ParseError(std::string(origin) + ": duplicate 'field'", line.number);
            if (line.tokens.size() != 2)
                throw ParseError(std::string(origin) + ": 'field' takes one number", line.number);
            std::uint64_t p = parse_number(line.tokens[1], line, origin);
            if (p == 0 || p > 0xFFFFu)
                throw ParseError(std::string(origin) + ": field modulus out of range",
                                 line.number);
            field.emplace(static_cast<std::uint32_t>(p));  // throws NonPrimeModulus if composite
        } else if (key == "dim") {
            if (dim) throw ParseError(std::string(origin) + ": duplicate 'dim'", line.number);
            if (line.tokens.size() != 2)
                throw ParseError(std::string(origin) + ": 'dim' takes one number", line.number);
            std::uint64_t d = parse_number(line.tokens[1], line, origin);
            if (d == 0 || d > 4096)
                throw ParseError(std::string(origin) + ": dimension out of range", line.number);
            dim = static_cast<std::size_t>(d);
            structure.assign(*dim * *dim * *dim, 0);
            seen.assign(*dim * *dim, false);
        } else if (key == "unit") {
            if (!field || !dim)
                throw ParseError(std::string(origin) + ": 'unit' before 'field'/'dim'",
                                 line.number);
            if (unit) throw ParseError(std::string(origin) + ": duplicate 'unit'", line.number);
            if (line.tokens.size() != 1 + *dim)
                throw ParseError(std::string(origin) + ": expected " + std::to_string(*dim) +
                                     " unit entries, got " +
                                     std::to_string(line.tokens.size() - 1),
                                 line.number);
            Vec coords(*dim, 0);
            for (std::size_t k = 0; k < *dim; ++k)
                coords[k] = parse_residue(line.tokens[1 + k], *field, line, origin);
            unit = std::move(coords);
        } else if (key == "mul") {
            if (!field || !dim)
                throw ParseError(std::string(origin) + ": 'mul' before 'field'/'dim'",
                                 line.number);
            if (line.tokens.size() < 4)
                throw ParseError(std::string(origin) + ": 'mul' needs two indices and entries",
                                 line.number);
            std::size_t i = parse_index(line.tokens[1], *dim, line, origin);
            std::size_t j = parse_index(line.tokens[2], *dim, line, origin);
            if (seen[i * *dim + j])
                throw ParseError(std::string(origin) + ": duplicate 'mul " + std::to_string(i) +
                                     " " + std::to_string(j) + "'",
                                 line.number);
            seen[i * *dim + j] = true;
            Vec coords = parse_coords(line, 3, *dim, *field, origin);
            std::copy(coords.begin(), coords.end(),
                      structure.begin() + static_cast<std::ptrdiff_t>((i * *dim + j) * *dim));
        } else {
            throw ParseError(std::string(origin) + ": unknown directive '" + key + "'",
                             line.number);
        }
    }

    if (!field) throw ParseError(std::string(origin) + ": missing 'field'", 0);
    if (!dim) throw ParseError(std::string(origin) + ": missing 'dim'", 0);
    if (!unit) throw ParseError(std::string(origin) + ": missing 'unit'", 0);
    for (std::size_t i = 0; i < *dim; ++i)
        for (std::size_t j = 0; j < *dim; ++j)
            if (!seen[i * *dim + j]) throw MissingEntry("mul", i, j);

    Algebra a{*field, *dim, std::move(structure), std::move(*unit)};
    require_valid(a);
    return a;
}

Algebra parse_algebra_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open algebra file '" + path.string() + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra_text(buf.str(), path.string());
}

std::string serialize_algebra(const Algebra& a) {
    std::string out;
    out += "field " + std::to_string(a.field.modulus()) + '\n';
    out += "dim " + std::to_string(a.dim) + '\n';
    out += "unit";
    for (Residue c : a.unit) {
        out += ' ';
        out += std::to_string(c);
    }
    out += '\n';
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            append_row(out, "mul " + std::to_string(i) + " " + std::to_string(j),
                       a.product_row(i, j));
    return out;
}

ParsedModule parse_module_text(std::string_view text, const std::filesystem::path& base_dir,
                               std::string_view origin) {
    const std::vector<Line> lines = tokenize(text);

    std::optional<Algebra> over;
    std::optional<Algebra> left;
    std::optional<std::size_t> mdim;
    Vec raction;
    Vec laction;
    std::vector<bool> seen_r;
    std::vector<bool> seen_l;

    auto resolve = [&](const std::string& token) {
        std::filesystem::path p(token);
        if (p.is_relative()) p = base_dir / p;
        return parse_algebra_file(p);
    };

    for (const Line& line : lines) {
        const std::string& key = line.tokens[0];
        if (key == "over") {
            if (over) throw ParseError(std::string(origin) + ": duplicate 'over'", line.number);
            if (line.tokens.size() != 2)
                throw ParseError(std::string(origin) + ": 'over' takes one path", line.number);
            over = resolve(line.tokens[1]);
        } else if (key == "left") {
            if (left) throw ParseError(std::string(origin) + ": duplicate 'left'", line.number);
            if (line.tokens.size() != 2)
                throw ParseError(std::string(origin) + ": 'left' takes one path", line.number);
            left = resolve(line.tokens[1]);
        } else if (key == "mdim") {
            if (mdim) throw ParseError(std::string(origin) + ": duplicate 'mdim'", line.number);
            if (line.tokens.size() != 2)
                throw ParseError(std::string(origin) + ": 'mdim' takes one number", line.number);
            std::uint64_t m = parse_number(line.tokens[1], line, origin);
            if (m > 4096)
                throw ParseError(std::string(origin) + ": module dimension out of range",
                                 line.number);
            mdim = static_cast<std::size_t>(m);
        } else if (key == "ract" || key == "lact") {
            if (!over || !mdim)
                throw ParseError(std::string(origin) + ": '" + key + "' before 'over'/'mdim'",
                                 line.number);
            if (key == "lact" && !left)
                throw ParseError(std::string(origin) + ": 'lact' before 'left'", line.number);
            if (line.tokens.size() < 4)
                throw ParseError(std::string(origin) + ": '" + key +
                                     "' needs two indices and entries",
                                 line.number);
            if (key == "ract") {
                if (raction.empty() && *mdim > 0) {
                    raction.assign(*mdim * over->dim * *mdim, 0);
                    seen_r.assign(*mdim * over->dim, false);
                }
                std::size_t i = parse_index(line.tokens[1], *mdim, line, origin);
                std::size_t j = parse_index(line.tokens[2], over->dim, line, origin);
                if (seen_r[i * over->dim + j])
                    throw ParseError(std::string(origin) + ": duplicate 'ract " +
                                         std::to_string(i) + " " + std::to_string(j) + "'",
                                     line.number);
                seen_r[i * over->dim + j] = true;
                Vec coords = parse_coords(line, 3, *mdim, over->field, origin);
                std::copy(coords.begin(), coords.end(),
                          raction.begin() +
                              static_cast<std::ptrdiff_t>((i * over->dim + j) * *mdim));
            } else {
                if (laction.empty() && *mdim > 0) {
                    laction.assign(left->dim * *mdim * *mdim, 0);
                    seen_l.assign(left->dim * *mdim, false);
                }
                std::size_t i = parse_index(line.tokens[1], left->dim, line, origin);
                std::size_t j = parse_index(line.tokens[2], *mdim, line, origin);
                if (seen_l[i * *mdim + j])
                    throw ParseError(std::string(origin) + ": duplicate 'lact " +
                                         std::to_string(i) + " " + std::to_string(j) + "'",
                                     line.number);
                seen_l[i * *mdim + j] = true;
                Vec coords = parse_coords(line, 3, *mdim, left->field, origin);
                std::copy(coords.begin(), coords.end(),
                          laction.begin() + static_cast<std::ptrdiff_t>((i * *mdim + j) * *mdim));
            }
        } else {
            throw ParseError(std::string(origin) + ": unknown directive '" + key + "'",
                             line.number);
        }
    }

    if (!over) throw ParseError(std::string(origin) + ": missing 'over'", 0);
    if (!mdim) throw ParseError(std::string(origin) + ": missing 'mdim'", 0);
    if (*mdim > 0) {
        if (raction.empty()) raction.assign(*mdim * over->dim * *mdim, 0);
        if (seen_r.empty()) seen_r.assign(*mdim * over->dim, false);
        for (std::size_t i = 0; i < *mdim; ++i)
            for (std::size_t j = 0; j < over->dim; ++j)
                if (!seen_r[i * over->dim + j]) throw MissingEntry("ract", i, j);
    }
    if (left && *mdim > 0) {
        if (laction.empty()) laction.assign(left->dim * *mdim * *mdim, 0);
        if (seen_l.empty()) seen_l.assign(left->dim * *mdim, false);
        for (std::size_t i = 0; i < left->dim; ++i)
            for (std::size_t j = 0; j < *mdim; ++j)
                if (!seen_l[i * *mdim + j]) throw MissingEntry("lact", i, j);
    }

    if (left) return make_bimodule(std::move(*left), std::move(*over), *mdim, std::move(laction),
                                   std::move(raction));
    return make_right_module(std::move(*over), *mdim, std::move(raction));
}

ParsedModule parse_module_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open module file '" + path.string() + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_module_text(buf.str(), path.parent_path(), path.string());
}

std::string serialize_right_module(const RightModule& x, std::string_view over_path) {
    std::string out;
    out += "over " + std::string(over_path) + '\n';
    out += "mdim " + std::to_string(x.mdim) + '\n';
    for (std::size_t i = 0; i < x.mdim; ++i)
        for (std::size_t j = 0; j < x.base.dim; ++j)
            append_row(out, "ract " + std::to_string(i) + " " + std::to_string(j),
                       x.ract_row(i, j));
    return out;
}

std::string serialize_bimodule(const Bimodule& m, std::string_view left_path,
                               std::string_view over_path) {
    std::string out;
    out += "left " + std::string(left_path) + '\n';
    out += "over " + std::string(over_path) + '\n';
    out += "mdim " + std::to_string(m.mdim) + '\n';
    for (std::size_t i = 0; i < m.left_algebra.dim; ++i)
        for (std::size_t j = 0; j < m.mdim; ++j)
            append_row(out, "lact " + std::to_string(i) + " " + std::to_string(j),
                       m.lact_row(i, j));
    for (std::size_t i = 0; i < m.mdim; ++i)
        for (std::size_t j = 0; j < m.right_algebra.dim; ++j)
            append_row(out, "ract " + std::to_string(i) + " " + std::to_string(j),
                       m.ract_row(i, j));
    return out;
}

Matrix parse_map_text(std::string_view text, const PrimeField& field, std::string_view origin) {
    const std::vector<Line> lines = tokenize(text);

    std::optional<std::size_t> rows;
    std::optional<std::size_t> cols;
    std::vector<Vec> data;

    for (const Line& line : lines) {
        const std::string& key = line.tokens[0];
        if (key == "rows" || key == "cols") {
            auto& slot = (key == "rows") ? rows : cols;
            if (slot) throw ParseError(std::string(origin) + ": duplicate '" + key + "'",
                                       line.number);
            if (line.tokens.size() != 2)
                throw ParseError(std::string(origin) + ": '" + key + "' takes one number",
                                 line.number);
            std::uint64_t n = parse_number(line.tokens[1], line, origin);
            if (n > 4096)
                throw ParseError(std::string(origin) + ": '" + key + "' out of range",
                                 line.number);
            slot = static_cast<std::size_t>(n);
        } else {
            if (!rows || !cols)
                throw ParseError(std::string(origin) + ": data line before 'rows'/'cols'",
                                 line.number);
            if (line.tokens.size() != *cols)
                throw ParseError(std::string(origin) + ": expected " + std::to_string(*cols) +
                                     " entries, got " + std::to_string(line.tokens.size()),
                                 line.number);
            if (data.size() == *rows)
                throw ParseError(std::string(origin) + ": more than " + std::to_string(*rows) +
                                     " data lines",
                                 line.number);
            Vec row(*cols, 0);
            for (std::size_t k = 0; k < *cols; ++k)
                row[k] = parse_residue(line.tokens[k], field, line, origin);
            data.push_back(std::move(row));
        }
    }

    if (!rows) throw ParseError(std::string(origin) + ": missing 'rows'", 0);
    if (!cols) throw ParseError(std::string(origin) + ": missing 'cols'", 0);
    if (data.size() != *rows)
        throw ParseError(std::string(origin) + ": expected " + std::to_string(*rows) +
                             " data lines, got " + std::to_string(data.size()),
                         0);

    Matrix m(field, *rows, *cols);
    for (std::size_t r = 0; r < *rows; ++r)
        std::copy(data[r].begin(), data[r].end(),
                  m.data.begin() + static_cast<std::ptrdiff_t>(r * *cols));
    return m;
}

Matrix parse_map_file(const std::filesystem::path& path, const PrimeField& field) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open map file '" + path.string() + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_map_text(buf.str(), field, path.string());
}

std::string serialize_map(const Matrix& m) {
    std::string out;
    out += "rows " + std::to_string(m.rows) + '\n';
    out += "cols " + std::to_string(m.cols) + '\n';
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (c > 0) out += ' ';
            out += std::to_string(m.at(r, c));
        }
        out += '\n';
    }
    return out;
}

}  // namespace sliplab
