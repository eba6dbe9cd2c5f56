#pragma once

// File formats: context files (a TOML subset), generator-matrix files, cocycle tables,
// ring-element lists and semilinear map lists.

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "skewring/action.hpp"
#include "skewring/code.hpp"
#include "skewring/error.hpp"
#include "skewring/gf.hpp"
#include "skewring/group.hpp"
#include "skewring/ring.hpp"
#include "skewring/semilinear.hpp"

namespace skewring {

// ---------------------------------------------------------------------------
// TOML subset: [table] headers, key = value, values are integers, floats, booleans,
// basic "strings" and (possibly nested, multi-line) arrays. '#' starts a comment.

struct TomlValue {
    enum class Kind { integer, floating, boolean, string, array } kind = Kind::integer;
    std::int64_t i = 0;
    double f = 0;
    bool b = false;
    std::string s;
    std::vector<TomlValue> arr;
    int line = 0;
};

struct TomlTable {
    std::map<std::string, TomlValue> entries;
    int line = 0;

    [[nodiscard]] const TomlValue* find(const std::string& key) const
    {
        auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    }
};

struct TomlDoc {
    std::map<std::string, TomlTable> tables;  // "" holds top-level keys

    [[nodiscard]] const TomlTable* find(const std::string& name) const
    {
        auto it = tables.find(name);
        return it == tables.end() ? nullptr : &it->second;
    }
};

namespace detail {

class TomlParser {
public:
    explicit TomlParser(std::string_view text) : s_(text) {}

    TomlDoc parse()
    {
        TomlDoc doc;
        std::string current;
        doc.tables[current].line = 1;
        while (true) {
            skip_ws_lines();
            if (eof()) break;
            if (peek() == '[') {
                ++pos_;
                skip_inline_ws();
                current = bare_key();
                skip_inline_ws();
                expect(']');
                if (doc.tables.count(current)) fail("duplicate table [" + current + "]");
                doc.tables[current].line = line_;
                end_of_line();
                continue;
            }
            const int at = line_;
            const std::string key = peek() == '"' ? basic_string() : bare_key();
            skip_inline_ws();
            expect('=');
            skip_inline_ws();
            if (peek() == '{') {
                if (!current.empty()) fail("inline tables are only allowed at top level");
                if (doc.tables.count(key)) fail("duplicate table [" + key + "]");
                inline_table(doc.tables[key]);
                doc.tables[key].line = at;
                end_of_line();
                continue;
            }
            TomlValue v = value();
            v.line = at;
            auto& tab = doc.tables[current];
            if (!tab.entries.emplace(key, std::move(v)).second) fail("duplicate key '" + key + "'");
            end_of_line();
        }
        return doc;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw error(errc::parse_error, "line " + std::to_string(line_) + ": " + what);
    }
    [[nodiscard]] bool eof() const { return pos_ >= s_.size(); }
    [[nodiscard]] char peek() const { return eof() ? '\0' : s_[pos_]; }
    void expect(char c)
    {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    void skip_inline_ws()
    {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
    }
    void skip_comment()
    {
        if (peek() == '#')
            while (!eof() && peek() != '\n') ++pos_;
    }
    void skip_ws_lines()
    {
        while (!eof()) {
            skip_inline_ws();
            skip_comment();
            if (peek() == '\n') {
                ++pos_;
                ++line_;
            } else {
                break;
            }
        }
    }
    void end_of_line()
    {
        skip_inline_ws();
        skip_comment();
        if (eof()) return;
        if (peek() != '\n') fail("unexpected trailing characters");
        ++pos_;
        ++line_;
    }
    // key = { a = 1, b = "x" } on one line
    void inline_table(TomlTable& tab)
    {
        expect('{');
        skip_inline_ws();
        if (peek() == '}') {
            ++pos_;
            return;
        }
        while (true) {
            skip_inline_ws();
            const std::string key = peek() == '"' ? basic_string() : bare_key();
            skip_inline_ws();
            expect('=');
            skip_inline_ws();
            TomlValue v = value();
            if (!tab.entries.emplace(key, std::move(v)).second) fail("duplicate key '" + key + "'");
            skip_inline_ws();
            if (peek() == ',') {
                ++pos_;
            } else if (peek() == '}') {
                ++pos_;
                return;
            } else {
                fail("expected ',' or '}' in inline table");
            }
        }
    }
    std::string bare_key()
    {
        std::string k;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-' || peek() == '.'))
            k += s_[pos_++];
        if (k.empty()) fail("expected a key");
        return k;
    }
    std::string basic_string()
    {
        expect('"');
        std::string out;
        while (true) {
            if (eof() || peek() == '\n') fail("unterminated string");
            char c = s_[pos_++];
            if (c == '"') break;
            if (c == '\\') {
                if (eof()) fail("unterminated escape");
                char e = s_[pos_++];
                switch (e) {
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                default: fail(std::string("unsupported escape \\") + e);
                }
            } else {
                out += c;
            }
        }
        return out;
    }
    TomlValue value()
    {
        TomlValue v;
        v.line = line_;
        const char c = peek();
        if (c == '"') {
            v.kind = TomlValue::Kind::string;
            v.s = basic_string();
        } else if (c == '[') {
            ++pos_;
            v.kind = TomlValue::Kind::array;
            while (true) {
                skip_ws_lines();
                if (peek() == ']') {
                    ++pos_;
                    break;
                }
                v.arr.push_back(value());
                skip_ws_lines();
                if (peek() == ',') {
                    ++pos_;
                } else if (peek() == ']') {
                    ++pos_;
                    break;
                } else {
                    fail("expected ',' or ']' in array");
                }
            }
        } else {
            std::string tok;
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-' || peek() == '+' ||
                              peek() == '.' || peek() == '_'))
                tok += s_[pos_++];
            if (tok == "true" || tok == "false") {
                v.kind = TomlValue::Kind::boolean;
                v.b = tok == "true";
            } else if (tok.empty()) {
                fail("expected a value");
            } else {
                std::string clean;
                for (char ch : tok)
                    if (ch != '_') clean += ch;
                try {
                    std::size_t used = 0;
                    if (clean.find_first_of(".eE") != std::string::npos) {
                        v.kind = TomlValue::Kind::floating;
                        v.f = std::stod(clean, &used);
                    } else {
                        v.kind = TomlValue::Kind::integer;
                        v.i = std::stoll(clean, &used);
                    }
                    if (used != clean.size()) fail("malformed number '" + tok + "'");
                } catch (const std::logic_error&) {
                    fail("malformed value '" + tok + "'");
                }
            }
        }
        return v;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

}  // namespace detail

inline TomlDoc parse_toml(std::string_view text) { return detail::TomlParser(text).parse(); }

inline std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::io_error, "cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// ---------------------------------------------------------------------------
// Context files

namespace detail {

[[noreturn]] inline void ctx_fail(const std::string& block, const std::string& what, int line = 0)
{
    std::string where = "[" + block + "]";
    if (line > 0) where = "line " + std::to_string(line) + " " + where;
    throw error(errc::parse_error, where + ": " + what);
}

inline const TomlTable& need_table(const TomlDoc& doc, const std::string& name)
{
    const auto* t = doc.find(name);
    if (!t) ctx_fail(name, "missing block");
    return *t;
}

inline std::int64_t need_int(const TomlTable& t, const std::string& block, const std::string& key)
{
    const auto* v = t.find(key);
    if (!v) ctx_fail(block, "missing key '" + key + "'", t.line);
    if (v->kind != TomlValue::Kind::integer) ctx_fail(block, "'" + key + "' must be an integer", v->line);
    return v->i;
}

inline std::string need_string(const TomlTable& t, const std::string& block, const std::string& key)
{
    const auto* v = t.find(key);
    if (!v) ctx_fail(block, "missing key '" + key + "'", t.line);
    if (v->kind != TomlValue::Kind::string) ctx_fail(block, "'" + key + "' must be a string", v->line);
    return v->s;
}

inline std::string opt_string(const TomlTable& t, const std::string& key, std::string dflt)
{
    const auto* v = t.find(key);
    return v && v->kind == TomlValue::Kind::string ? v->s : dflt;
}

inline std::vector<std::int64_t> int_array(const TomlValue& v, const std::string& block)
{
    if (v.kind != TomlValue::Kind::array) ctx_fail(block, "expected an integer array", v.line);
    std::vector<std::int64_t> out;
    for (const auto& x : v.arr) {
        if (x.kind != TomlValue::Kind::integer) ctx_fail(block, "expected an integer array", x.line);
        out.push_back(x.i);
    }
    return out;
}

inline std::uint32_t element_by_label(const Group& g, const TomlValue& v, const std::string& block)
{
    if (v.kind == TomlValue::Kind::integer) {
        if (v.i < 0 || v.i >= g.order()) ctx_fail(block, "group index out of range", v.line);
        return static_cast<std::uint32_t>(v.i);
    }
    if (v.kind != TomlValue::Kind::string) ctx_fail(block, "expected a group label", v.line);
    const auto idx = g.find(v.s);
    if (idx < 0) ctx_fail(block, "unknown group element '" + v.s + "'", v.line);
    return static_cast<std::uint32_t>(idx);
}

inline FieldElem field_value(const Field& k, const TomlValue& v, const std::string& block)
{
    try {
        if (v.kind == TomlValue::Kind::integer) return k.from_int(v.i);
        if (v.kind == TomlValue::Kind::string) return k.parse(v.s);
    } catch (const error& e) {
        ctx_fail(block, e.what(), v.line);
    }
    ctx_fail(block, "expected a field element", v.line);
}

}  // namespace detail

/// Reads "n x n" whitespace-separated field elements ('#' comments allowed).
inline Cocycle parse_cocycle_table(const Field& k, std::string_view text, std::uint32_t n)
{
    std::vector<FieldElem> tab;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                tab.push_back(k.parse(tok));
            } catch (const error& e) {
                throw error(errc::parse_error, "line " + std::to_string(lineno) + ": " + e.what());
            }
        }
    }
    if (tab.size() != std::size_t(n) * n)
        throw error(errc::parse_error, "cocycle table has " + std::to_string(tab.size()) + " entries, expected " +
                                           std::to_string(std::size_t(n) * n));
    return Cocycle(n, std::move(tab));
}

inline std::string render_cocycle_table(const Field& k, const Cocycle& a)
{
    std::string out;
    for (std::uint32_t i = 0; i < a.order(); ++i) {
        for (std::uint32_t j = 0; j < a.order(); ++j) out += (j ? " " : "") + k.render(a(i, j));
        out += '\n';
    }
    return out;
}

/// Reads n lines of n space-separated 0-based indices ('#' comments allowed).
inline std::vector<std::vector<std::uint32_t>> parse_group_table(std::string_view text)
{
    std::vector<std::vector<std::uint32_t>> table;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<std::uint32_t> row;
        std::string tok;
        while (ls >> tok) {
            if (tok.find_first_not_of("0123456789") != std::string::npos)
                throw error(errc::parse_error, "line " + std::to_string(lineno) + ": bad index '" + tok + "'");
            row.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        }
        if (!row.empty()) table.push_back(std::move(row));
    }
    return table;
}

/// Builds a validated context. base_dir resolves relative cocycle file paths.
inline RingCtxPtr load_context(std::string_view text, const std::filesystem::path& base_dir = ".")
{
    const TomlDoc doc = parse_toml(text);
    using detail::ctx_fail;

    const auto& ft = detail::need_table(doc, "field");
    const auto p = detail::need_int(ft, "field", "p");
    const auto m = ft.find("m") ? detail::need_int(ft, "field", "m") : 1;
    if (p < 2 || m < 1) ctx_fail("field", "p must be >= 2 and m >= 1", ft.line);
    Field k = [&] {
        try {
            if (const auto* pv = ft.find("poly")) {
                std::vector<std::uint32_t> poly;
                for (auto c : detail::int_array(*pv, "field")) poly.push_back(static_cast<std::uint32_t>(c));
                return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), poly);
            }
            if (m != 1) ctx_fail("field", "'poly' is required when m > 1", ft.line);
            return Field::prime(static_cast<std::uint32_t>(p));
        } catch (const error& e) {
            if (e.code() == errc::parse_error) throw;
            throw error(e.code(), std::string("[field]: ") + e.what());
        }
    }();

    const auto& gt = detail::need_table(doc, "group");
    const std::string family = detail::need_string(gt, "group", "family");
    const auto order = [&] {
        return static_cast<std::uint32_t>(detail::need_int(gt, "group", gt.find("n") ? "n" : "order"));
    };
    Group g = [&] {
        try {
            if (family == "cyclic") return Group::cyclic(order());
            if (family == "dihedral") {
                const auto* il = gt.find("interleaved");
                return Group::dihedral(order(), il && il->kind == TomlValue::Kind::boolean && il->b);
            }
            if (family == "semidirect")
                return Group::semidirect(static_cast<std::uint32_t>(detail::need_int(gt, "group", "m")),
                                         static_cast<std::uint32_t>(detail::need_int(gt, "group", "k")),
                                         static_cast<std::uint32_t>(detail::need_int(gt, "group", "r")));
            if (family == "alt4") return Group::alt4();
            if (family == "table" || family == "explicit") {
                const auto* tv = gt.find("table");
                if (!tv) ctx_fail("group", "missing 'table'", gt.line);
                std::vector<std::vector<std::uint32_t>> table;
                if (tv->kind == TomlValue::Kind::string) {
                    table = parse_group_table(read_file(base_dir / tv->s));
                } else {
                    if (tv->kind != TomlValue::Kind::array) ctx_fail("group", "'table' must be an array or a path", tv->line);
                    for (const auto& row : tv->arr) {
                        std::vector<std::uint32_t> r;
                        for (auto x : detail::int_array(row, "group")) r.push_back(static_cast<std::uint32_t>(x));
                        table.push_back(std::move(r));
                    }
                }
                std::vector<std::string> labels;
                if (const auto* lv = gt.find("labels")) {
                    if (lv->kind != TomlValue::Kind::array) ctx_fail("group", "'labels' must be an array", lv->line);
                    for (const auto& x : lv->arr) labels.push_back(x.s);
                }
                return Group::explicit_table(table, labels);
            }
        } catch (const error& e) {
            if (e.code() == errc::parse_error) throw;
            throw error(e.code(), "[group]: " + std::string(e.what()));
        }
        ctx_fail("group", "unknown family '" + family + "'", gt.line);
    }();

    Theta th = Theta::trivial(g.order(), k.m());
    if (const auto* tt = doc.find("theta")) {
        const std::string kind = detail::opt_string(*tt, "kind", "trivial");
        const auto* ev = tt->find("exp");
        const std::uint32_t exp = ev ? static_cast<std::uint32_t>(detail::need_int(*tt, "theta", "exp")) : 1;
        try {
            if (kind == "trivial") {
            } else if (kind == "involutions") {
                th = Theta::involutions_frobenius(g, k, exp);
            } else if (kind == "kernel") {
                const auto* kv = tt->find("kernel");
                if (!kv || kv->kind != TomlValue::Kind::array) ctx_fail("theta", "missing 'kernel' array", tt->line);
                std::vector<std::uint32_t> gens;
                for (const auto& x : kv->arr) gens.push_back(detail::element_by_label(g, x, "theta"));
                const auto* iv = tt->find("image");
                if (!iv) ctx_fail("theta", "missing 'image'", tt->line);
                th = Theta::kernel_power(g, k, gens, detail::element_by_label(g, *iv, "theta"), exp);
            } else if (kind == "table") {
                const auto* xv = tt->find("exps");
                if (!xv) ctx_fail("theta", "missing 'exps'", tt->line);
                std::vector<std::uint32_t> e;
                for (auto x : detail::int_array(*xv, "theta")) e.push_back(static_cast<std::uint32_t>(x));
                th = Theta::from_table(g, k, e);
            } else {
                ctx_fail("theta", "unknown kind '" + kind + "'", tt->line);
            }
        } catch (const error& e) {
            if (e.code() == errc::parse_error) throw;
            throw error(e.code(), "[theta]: " + std::string(e.what()));
        }
    }

    Cocycle a = Cocycle::trivial(g.order());
    if (const auto* at = doc.find("cocycle")) {
        const std::string kind = detail::opt_string(*at, "kind", "trivial");
        try {
            if (kind == "trivial") {
            } else if (kind == "constacyclic") {
                const auto* lv = at->find("lambda");
                if (!lv) ctx_fail("cocycle", "missing 'lambda'", at->line);
                a = Cocycle::constacyclic(g, detail::field_value(k, *lv, "cocycle"));
            } else if (kind == "table") {
                const auto* tv = at->find("table");
                if (!tv || tv->kind != TomlValue::Kind::array) ctx_fail("cocycle", "missing 'table' array", at->line);
                std::vector<FieldElem> tab;
                for (const auto& row : tv->arr) {
                    if (row.kind != TomlValue::Kind::array || row.arr.size() != g.order())
                        ctx_fail("cocycle", "each table row needs |G| entries", row.line);
                    for (const auto& x : row.arr) tab.push_back(detail::field_value(k, x, "cocycle"));
                }
                if (tab.size() != std::size_t(g.order()) * g.order()) ctx_fail("cocycle", "table needs |G| rows", tv->line);
                a = Cocycle(g.order(), std::move(tab));
            } else if (kind == "file") {
                const auto path = base_dir / detail::need_string(*at, "cocycle", "path");
                a = parse_cocycle_table(k, read_file(path), g.order());
            } else {
                ctx_fail("cocycle", "unknown kind '" + kind + "'", at->line);
            }
        } catch (const error& e) {
            if (e.code() == errc::parse_error || e.code() == errc::io_error) throw;
            throw error(e.code(), "[cocycle]: " + std::string(e.what()));
        }
    }
    return RingCtx::make(std::move(k), std::move(g), std::move(th), std::move(a));
}

inline RingCtxPtr load_context_file(const std::filesystem::path& path)
{
    return load_context(read_file(path), path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path());
}

// ---------------------------------------------------------------------------
// Generator-matrix files: "# field p m poly=<c0,c1,...> n k" then one row per line.

inline std::string render_genmat(const Code& c)
{
    const Field& k = c.field();
    std::string out = "# field " + std::to_string(k.p()) + " " + std::to_string(k.m()) + " poly=";
    for (std::size_t i = 0; i < k.poly().size(); ++i) out += (i ? "," : "") + std::to_string(k.poly()[i]);
    out += " " + std::to_string(c.n()) + " " + std::to_string(c.k()) + "\n";
    for (const auto& r : c.genmat().data()) {
        for (std::size_t j = 0; j < r.size(); ++j) out += (j ? " " : "") + k.render(r[j]);
        out += '\n';
    }
    return out;
}

struct GenmatFile {
    Field field;
    std::size_t n = 0;
    std::vector<Vec> rows;
};

namespace detail {

struct Header {
    Field field;
    std::size_t n = 0, k = 0;
};

inline Header parse_header(const std::string& line)
{
    std::istringstream is(line);
    std::string hash, word, poly;
    std::uint32_t p = 0, m = 0;
    std::size_t n = 0, k = 0;
    if (!(is >> hash >> word >> p >> m >> poly >> n >> k) || hash != "#" || word != "field" || poly.rfind("poly=", 0) != 0)
        throw error(errc::parse_error, "line 1: expected '# field p m poly=<coeffs> n k'");
    std::vector<std::uint32_t> coeffs;
    for (const auto& part : split_top(poly.substr(5), ',')) {
        const auto t = trim(part);
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char ch) { return std::isdigit(ch); }))
            throw error(errc::parse_error, "line 1: malformed poly coefficients");
        coeffs.push_back(static_cast<std::uint32_t>(std::stoul(t)));
    }
    return {Field::make(p, m, coeffs), n, k};
}

}  // namespace detail

inline GenmatFile parse_genmat(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw error(errc::parse_error, "empty generator-matrix file");
    auto h = detail::parse_header(line);
    GenmatFile out{h.field, h.n, {}};
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
        std::istringstream ls(line);
        std::string tok;
        Vec row;
        while (ls >> tok) {
            try {
                row.push_back(h.field.parse(tok));
            } catch (const error& e) {
                throw error(errc::parse_error, "line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (row.empty()) continue;
        if (row.size() != h.n)
            throw error(errc::parse_error, "line " + std::to_string(lineno) + ": expected " + std::to_string(h.n) + " entries");
        out.rows.push_back(std::move(row));
    }
    if (out.rows.size() != h.k)
        throw error(errc::parse_error, "header announces " + std::to_string(h.k) + " rows, found " + std::to_string(out.rows.size()));
    return out;
}

/// Ring elements, one per non-empty line, in the sum form or the positional CSV form.
inline std::vector<RingElem> parse_elements(const RingCtxPtr& ctx, std::string_view text)
{
    std::vector<RingElem> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
        const auto t = detail::trim(line);
        if (t.empty()) continue;
        try {
            const bool csv = t.find('*') == std::string::npos && detail::split_top(t, ',').size() == ctx->n() && ctx->n() > 1;
            out.push_back(csv ? parse_elem_csv(ctx, t) : parse_elem(ctx, t));
        } catch (const error& e) {
            throw error(errc::parse_error, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

/// A generator file for a context: either a genmat file (header line) or ring elements.
/// Throws zero_code when the file holds no generators.
inline Code load_code(const RingCtxPtr& ctx, std::string_view text)
{
    const auto first = detail::trim(text.substr(0, text.find('\n')));
    if (first.rfind("# field", 0) == 0) {
        auto gm = parse_genmat(text);
        if (!(gm.field == ctx->field()) || gm.n != ctx->n())
            throw error(errc::context_mismatch, "generator matrix does not match the context's field or length");
        if (gm.rows.empty()) throw error(errc::zero_code, "no generators");
        return Code::ideal_from_rows(ctx, std::move(gm.rows));
    }
    auto gens = parse_elements(ctx, text);
    if (gens.empty()) throw error(errc::zero_code, "no generators");
    return ideal_span(gens);
}

// ---------------------------------------------------------------------------
// Semilinear map files: a field header "# field p m poly=<coeffs> n" then one map per line.

inline GammaGroup parse_gamma_group(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw error(errc::parse_error, "empty map file");
    auto h = detail::parse_header(line + " 0");
    std::vector<SemilinearMap> gens;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
        if (detail::trim(line).empty()) continue;
        try {
            gens.push_back(parse_map(h.field, line, h.n));
        } catch (const error& e) {
            throw error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return GammaGroup::closure(h.field, std::move(gens));
}

inline std::string render_gamma_group(const GammaGroup& gg, bool all_elements = false)
{
    const Field& k = gg.field();
    std::string out = "# field " + std::to_string(k.p()) + " " + std::to_string(k.m()) + " poly=";
    for (std::size_t i = 0; i < k.poly().size(); ++i) out += (i ? "," : "") + std::to_string(k.poly()[i]);
    out += " " + std::to_string(gg.n()) + "\n";
    for (const auto& u : all_elements ? gg.elements() : gg.generators()) out += render(k, u) + "\n";
    return out;
}

}  // namespace skewring
