#include "sepfam/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include "sepfam/errors.hpp"

namespace sepfam {

std::string to_fraction_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::optional<Rational> parse_fraction(std::string_view text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    const std::size_t num_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    const std::size_t num_end = i;
    if (num_end == num_begin) return std::nullopt;
    if (i == text.size() || text[i] != '/') return std::nullopt;
    ++i;
    const std::size_t den_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == den_begin || i != text.size()) return std::nullopt;

    BigInt num, den;
    num.set_str(std::string(text.substr(num_begin, num_end - num_begin)), 10);
    den.set_str(std::string(text.substr(den_begin)), 10);
    if (den == 0) return std::nullopt;
    Rational q(num, den);
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    if (text.find('\r') != std::string_view::npos)
        throw parse_error("carriage returns are not supported");
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        if (nl == std::string_view::npos) {
            lines.push_back(text);
            break;
        }
        lines.push_back(text.substr(0, nl));
        text.remove_prefix(nl + 1);
    }
    return lines;
}

// Splits on single spaces; empty tokens (leading, trailing or doubled
// spaces) make the line invalid.
bool split_tokens(std::string_view line, std::vector<std::string_view>& out) {
    out.clear();
    std::size_t pos = 0;
    while (true) {
        const auto sp = line.find(' ', pos);
        const auto tok = sp == std::string_view::npos ? line.substr(pos) : line.substr(pos, sp - pos);
        if (tok.empty()) return false;
        out.push_back(tok);
        if (sp == std::string_view::npos) return true;
        pos = sp + 1;
    }
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& what) {
    throw parse_error("line " + std::to_string(line_no) + ": " + what);
}

Rational need_fraction(std::string_view tok, std::size_t line_no) {
    auto q = parse_fraction(tok);
    if (!q) bad_line(line_no, "bad fraction '" + std::string(tok) + "'");
    return *q;
}

bool point_less(const Point& a, const Point& b) {
    const int cx = cmp(a.x, b.x);
    if (cx != 0) return cx < 0;
    return a.y < b.y;
}

// Returns the first pair of equal points, as input indices.
std::optional<std::pair<std::size_t, std::size_t>> find_duplicate(const PointSet& pts) {
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (pts[a] == pts[b]) return a < b;
        return point_less(pts[a], pts[b]);
    });
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (pts[order[k - 1]] == pts[order[k]]) {
            auto lo = std::min(order[k - 1], order[k]);
            auto hi = std::max(order[k - 1], order[k]);
            if (!best || std::pair(lo, hi) < *best) best = {lo, hi};
        }
    }
    return best;
}

const std::string_view kProvenancePrefix = "# provenance: ";

}  // namespace

std::string serialize_points(const PointSet& pts) {
    if (pts.empty()) throw precondition_error("point set is empty");
    if (auto dup = find_duplicate(pts))
        throw precondition_error("duplicate points at indices " + std::to_string(dup->first) +
                                 " and " + std::to_string(dup->second));
    std::string out = "sfp 1\n";
    for (const Point& p : pts) {
        out += to_fraction_string(p.x);
        out += ' ';
        out += to_fraction_string(p.y);
        out += '\n';
    }
    return out;
}

PointSet parse_points(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty() || lines[0] != "sfp 1")
        throw parse_error("point file must start with 'sfp 1'");
    PointSet pts;
    std::vector<std::string_view> toks;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const std::size_t line_no = k + 1;
        if (!split_tokens(lines[k], toks) || toks.size() != 2)
            bad_line(line_no, "expected 'X Y'");
        Point p{need_fraction(toks[0], line_no), need_fraction(toks[1], line_no)};
        pts.push_back(std::move(p));
    }
    if (pts.empty()) throw parse_error("point file has no points");
    if (auto dup = find_duplicate(pts))
        throw parse_error("duplicate point on lines " + std::to_string(dup->first + 2) + " and " +
                          std::to_string(dup->second + 2));
    return pts;
}

std::string serialize_family(const SeparatingFamily& fam) {
    if (fam.provenance.find('\n') != std::string::npos)
        throw precondition_error("provenance must be a single line");
    std::string out = "sff 1\n";
    for (const Separator& s : fam.separators) {
        validate_separator(s);
        if (const auto* h = std::get_if<Halfplane>(&s)) {
            out += "H " + to_fraction_string(h->a) + ' ' + to_fraction_string(h->b) + ' ' +
                   to_fraction_string(h->c);
        } else if (const auto* d = std::get_if<Disc>(&s)) {
            out += "D " + to_fraction_string(d->center.x) + ' ' + to_fraction_string(d->center.y) +
                   ' ' + to_fraction_string(d->radius_sq);
        } else {
            const auto& g = std::get<ConvexPolygon>(s);
            out += 'P';
            for (const Point& v : g.vertices)
                out += ' ' + to_fraction_string(v.x) + ' ' + to_fraction_string(v.y);
        }
        out += '\n';
    }
    if (!fam.provenance.empty()) {
        out += kProvenancePrefix;
        out += fam.provenance;
        out += '\n';
    }
    return out;
}

SeparatingFamily parse_family(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty() || lines[0] != "sff 1")
        throw parse_error("family file must start with 'sff 1'");
    SeparatingFamily fam;
    bool saw_provenance = false;
    std::vector<std::string_view> toks;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const std::size_t line_no = k + 1;
        const auto line = lines[k];
        if (!line.empty() && line[0] == '#') {
            if (saw_provenance) bad_line(line_no, "more than one provenance line");
            if (line.substr(0, kProvenancePrefix.size()) != kProvenancePrefix)
                bad_line(line_no, "unknown metadata line");
            fam.provenance = std::string(line.substr(kProvenancePrefix.size()));
            saw_provenance = true;
            continue;
        }
        if (saw_provenance) bad_line(line_no, "separator after provenance line");
        if (!split_tokens(line, toks)) bad_line(line_no, "empty or malformed line");

        Separator sep;
        if (toks[0] == "H") {
            if (toks.size() != 4) bad_line(line_no, "halfplane needs 'H A B C'");
            sep = Halfplane{need_fraction(toks[1], line_no), need_fraction(toks[2], line_no),
                            need_fraction(toks[3], line_no)};
        } else if (toks[0] == "D") {
            if (toks.size() != 4) bad_line(line_no, "disc needs 'D CX CY R2'");
            sep = Disc{{need_fraction(toks[1], line_no), need_fraction(toks[2], line_no)},
                       need_fraction(toks[3], line_no)};
        } else if (toks[0] == "P") {
            if (toks.size() < 3 || toks.size() % 2 == 0)
                bad_line(line_no, "polygon needs 'P X1 Y1 [X2 Y2 ...]'");
            ConvexPolygon g;
            for (std::size_t t = 1; t < toks.size(); t += 2)
                g.vertices.push_back(
                    {need_fraction(toks[t], line_no), need_fraction(toks[t + 1], line_no)});
            sep = std::move(g);
        } else {
            bad_line(line_no, "unknown separator kind '" + std::string(toks[0]) + "'");
        }
        try {
            validate_separator(sep);
        } catch (const precondition_error& e) {
            bad_line(line_no, e.what());
        }
        fam.separators.push_back(std::move(sep));
    }
    return fam;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw parse_error("read failure on '" + path + "'");
    return std::move(ss).str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw parse_error("write failure on '" + path + "'");
}

}  // namespace

void save_points(const std::string& path, const PointSet& pts) {
    write_file(path, serialize_points(pts));
}

PointSet load_points(const std::string& path) { return parse_points(read_file(path)); }

void save_family(const std::string& path, const SeparatingFamily& fam) {
    write_file(path, serialize_family(fam));
}

SeparatingFamily load_family(const std::string& path) { return parse_family(read_file(path)); }

}  // namespace sepfam
