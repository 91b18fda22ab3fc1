#include "chu/io.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

#include "chu/gallery.hpp"

namespace chu {
namespace io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::ParseError, what); }

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string line(text.substr(pos, nl - pos));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        pos = nl + 1;
    }
    // A trailing newline produces one empty tail line; drop it.
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string t;
    while (in >> t) tokens.push_back(t);
    return tokens;
}

/// A line cursor over a parsed file; space/morphism payloads embedded in
/// larger files are consumed through the same cursor.
struct Cursor {
    const std::vector<std::string>& lines;
    std::size_t pos = 0;

    bool done() const { return pos >= lines.size(); }
    const std::string& peek() const {
        if (done()) fail("unexpected end of input");
        return lines[pos];
    }
    std::string take() {
        std::string line = peek();
        ++pos;
        return line;
    }
    void expect(const std::string& literal) {
        if (take() != literal) fail("expected '" + literal + "' at line " + std::to_string(pos));
    }
};

/// Section line "<keyword> tok tok ..."; the bare keyword means an empty list.
std::vector<std::string> section(Cursor& c, const std::string& keyword) {
    std::vector<std::string> tokens = split_tokens(c.take());
    if (tokens.empty() || tokens.front() != keyword)
        fail("expected '" + keyword + "' section at line " + std::to_string(c.pos));
    tokens.erase(tokens.begin());
    return tokens;
}

Space parse_space_block(Cursor& c) {
    c.expect("chu v1");
    Alphabet alphabet(section(c, "sigma"));
    std::vector<std::string> objects = section(c, "objects");
    std::vector<std::string> attributes = section(c, "attributes");
    c.expect("matrix");
    std::vector<Symbol> matrix;
    matrix.reserve(objects.size() * attributes.size());
    for (std::size_t row = 0; row < objects.size(); ++row) {
        std::vector<std::string> cells = split_tokens(c.take());
        if (cells.size() != attributes.size())
            fail("matrix row " + std::to_string(row + 1) + " has " +
                 std::to_string(cells.size()) + " cells, expected " +
                 std::to_string(attributes.size()));
        for (const std::string& cell : cells) {
            auto s = alphabet.index_of(cell);
            if (!s) fail("matrix cell '" + cell + "' is not an alphabet symbol");
            matrix.push_back(static_cast<Symbol>(*s));
        }
    }
    try {
        return Space(std::move(alphabet), std::move(objects), std::move(attributes),
                     std::move(matrix));
    } catch (const Error& e) {
        fail(e.what());
    }
}

void emit_list(std::ostringstream& out, const std::string& keyword,
               const std::vector<std::string>& items) {
    out << keyword;
    for (const std::string& item : items) out << ' ' << item;
    out << '\n';
}

void emit_space_block(std::ostringstream& out, const Space& space) {
    out << "chu v1\n";
    emit_list(out, "sigma", space.alphabet().symbols());
    emit_list(out, "objects", space.objects());
    emit_list(out, "attributes", space.attributes());
    out << "matrix\n";
    for (std::size_t a = 0; a < space.object_count(); ++a) {
        for (std::size_t x = 0; x < space.attribute_count(); ++x) {
            if (x) out << ' ';
            out << space.alphabet().symbol(space.at(a, x));
        }
        out << '\n';
    }
}

/// "label->label" pairs resolved against the listed names; positional result.
std::vector<std::size_t> parse_arrows(const std::vector<std::string>& tokens,
                                      const std::vector<std::string>& from,
                                      const Space& to_space, bool on_objects) {
    std::vector<std::size_t> map(from.size(), SIZE_MAX);
    for (const std::string& tok : tokens) {
        std::size_t arrow = tok.find("->");
        if (arrow == std::string::npos) fail("malformed arrow '" + tok + "'");
        std::string lhs = tok.substr(0, arrow);
        std::string rhs = tok.substr(arrow + 2);
        std::size_t i = SIZE_MAX;
        for (std::size_t k = 0; k < from.size(); ++k)
            if (from[k] == lhs) i = k;
        if (i == SIZE_MAX) fail("unknown arrow source '" + lhs + "'");
        auto j = on_objects ? to_space.object_index(rhs) : to_space.attribute_index(rhs);
        if (!j) fail("unknown arrow target '" + rhs + "'");
        if (map[i] != SIZE_MAX) fail("duplicate arrow source '" + lhs + "'");
        map[i] = *j;
    }
    for (std::size_t k = 0; k < map.size(); ++k)
        if (map[k] == SIZE_MAX) fail("missing arrow for '" + from[k] + "'");
    return map;
}

/// Endpoint line "source inline|<path>|-". `bound` supplies the space for
/// the positional "-" form used inside chain files.
Space parse_endpoint(Cursor& c, const std::string& keyword, const FileReader& read_file,
                     const Space* bound) {
    std::vector<std::string> tokens = split_tokens(c.take());
    if (tokens.size() != 2 || tokens.front() != keyword)
        fail("expected '" + keyword + " inline|<path>' at line " + std::to_string(c.pos));
    const std::string& ref = tokens.back();
    if (ref == "inline") return parse_space_block(c);
    if (ref == "-") {
        if (!bound) fail("'" + keyword + " -' is only valid inside a chain file");
        return *bound;
    }
    if (!read_file) fail("'" + keyword + " " + ref + "' needs a file reader");
    return parse_space(read_file(ref));
}

Morphism parse_morphism_block(Cursor& c, const FileReader& read_file, const Space* bound_source,
                              const Space* bound_target) {
    c.expect("chumorph v1");
    Morphism m;
    m.source = parse_endpoint(c, "source", read_file, bound_source);
    m.target = parse_endpoint(c, "target", read_file, bound_target);
    m.forward = parse_arrows(section(c, "forward"), m.source.objects(), m.target, true);
    m.backward = parse_arrows(section(c, "backward"), m.target.attributes(), m.source, false);
    if (!validate(m)) fail("morphism violates adjointness");
    return m;
}

void emit_morphism_block(std::ostringstream& out, const Morphism& m, bool positional) {
    out << "chumorph v1\n";
    if (positional) {
        out << "source -\ntarget -\n";
    } else {
        out << "source inline\n";
        emit_space_block(out, m.source);
        out << "target inline\n";
        emit_space_block(out, m.target);
    }
    out << "forward";
    for (std::size_t a = 0; a < m.forward.size(); ++a)
        out << ' ' << m.source.objects()[a] << "->" << m.target.objects()[m.forward[a]];
    out << "\nbackward";
    for (std::size_t y = 0; y < m.backward.size(); ++y)
        out << ' ' << m.target.attributes()[y] << "->" << m.source.attributes()[m.backward[y]];
    out << '\n';
}

ChainCategory parse_category(const std::string& name) {
    if (name == "iC") return ChainCategory::iC;
    if (name == "iE") return ChainCategory::iE;
    if (name == "iB") return ChainCategory::iB;
    fail("unknown chain category '" + name + "'");
}

}  // namespace

std::string emit_space_text(const Space& space) {
    std::ostringstream out;
    emit_space_block(out, space);
    return out.str();
}

Space parse_space_text(std::string_view text) {
    std::vector<std::string> lines = split_lines(text);
    Cursor c{lines};
    Space space = parse_space_block(c);
    if (!c.done()) fail("trailing content after space payload");
    return space;
}

std::string emit_space_json(const Space& space) {
    nlohmann::json j;
    j["format"] = "chu-v1";
    j["sigma"] = space.alphabet().symbols();
    j["objects"] = space.objects();
    j["attributes"] = space.attributes();
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t a = 0; a < space.object_count(); ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t x = 0; x < space.attribute_count(); ++x)
            row.push_back(space.alphabet().symbol(space.at(a, x)));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    return j.dump();
}

Space parse_space_json(std::string_view text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        if (j.at("format").get<std::string>() != "chu-v1") fail("unknown JSON format tag");
        Alphabet alphabet(j.at("sigma").get<std::vector<std::string>>());
        auto objects = j.at("objects").get<std::vector<std::string>>();
        auto attributes = j.at("attributes").get<std::vector<std::string>>();
        std::vector<Symbol> matrix;
        matrix.reserve(objects.size() * attributes.size());
        const nlohmann::json& rows = j.at("matrix");
        if (rows.size() != objects.size()) fail("matrix row count mismatch");
        for (const nlohmann::json& row : rows) {
            if (row.size() != attributes.size()) fail("matrix row width mismatch");
            for (const nlohmann::json& cell : row) {
                auto s = alphabet.index_of(cell.get<std::string>());
                if (!s) fail("matrix cell is not an alphabet symbol");
                matrix.push_back(static_cast<Symbol>(*s));
            }
        }
        return Space(std::move(alphabet), std::move(objects), std::move(attributes),
                     std::move(matrix));
    } catch (const nlohmann::json::exception& e) {
        fail(e.what());
    } catch (const Error& e) {
        if (e.code() == Errc::ParseError) throw;
        fail(e.what());
    }
}

Space parse_space(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_space_json(text);
    return parse_space_text(text);
}

std::string emit_morphism_text(const Morphism& m) {
    std::ostringstream out;
    emit_morphism_block(out, m, /*positional=*/false);
    return out.str();
}

Morphism parse_morphism_text(std::string_view text, const FileReader& read_file) {
    std::vector<std::string> lines = split_lines(text);
    Cursor c{lines};
    Morphism m = parse_morphism_block(c, read_file, nullptr, nullptr);
    if (!c.done()) fail("trailing content after morphism payload");
    return m;
}

std::string emit_morphism_json(const Morphism& m) {
    nlohmann::json j;
    j["format"] = "chumorph-v1";
    j["source"] = nlohmann::json::parse(emit_space_json(m.source));
    j["target"] = nlohmann::json::parse(emit_space_json(m.target));
    nlohmann::json fwd = nlohmann::json::array();
    for (std::size_t a = 0; a < m.forward.size(); ++a)
        fwd.push_back({m.source.objects()[a], m.target.objects()[m.forward[a]]});
    nlohmann::json bwd = nlohmann::json::array();
    for (std::size_t y = 0; y < m.backward.size(); ++y)
        bwd.push_back({m.target.attributes()[y], m.source.attributes()[m.backward[y]]});
    j["forward"] = std::move(fwd);
    j["backward"] = std::move(bwd);
    return j.dump();
}

Morphism parse_morphism_json(std::string_view text, const FileReader&) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        if (j.at("format").get<std::string>() != "chumorph-v1") fail("unknown JSON format tag");
        Morphism m;
        m.source = parse_space_json(j.at("source").dump());
        m.target = parse_space_json(j.at("target").dump());
        m.forward.assign(m.source.object_count(), SIZE_MAX);
        for (const nlohmann::json& pair : j.at("forward")) {
            auto a = m.source.object_index(pair.at(0).get<std::string>());
            auto b = m.target.object_index(pair.at(1).get<std::string>());
            if (!a || !b) fail("unknown object label in forward map");
            m.forward[*a] = *b;
        }
        m.backward.assign(m.target.attribute_count(), SIZE_MAX);
        for (const nlohmann::json& pair : j.at("backward")) {
            auto y = m.target.attribute_index(pair.at(0).get<std::string>());
            auto x = m.source.attribute_index(pair.at(1).get<std::string>());
            if (!y || !x) fail("unknown attribute label in backward map");
            m.backward[*y] = *x;
        }
        for (std::size_t i : m.forward)
            if (i == SIZE_MAX) fail("forward map is not total");
        for (std::size_t i : m.backward)
            if (i == SIZE_MAX) fail("backward map is not total");
        if (!validate(m)) fail("morphism violates adjointness");
        return m;
    } catch (const nlohmann::json::exception& e) {
        fail(e.what());
    }
}

std::string emit_chain_text(const Chain& chain) {
    std::ostringstream out;
    if (!chain.is_explicit()) {
        if (chain.rule().empty())
            throw Error(Errc::InvalidChain, "generated chain without a rule is not serializable");
        out << "chugen v1\n";
        out << "rule " << chain.rule() << '\n';
        if (chain.window()) out << "param window " << *chain.window() << '\n';
        return out.str();
    }
    out << "chuchain v1\n";
    out << "category " << chain_category_name(chain.claim()) << '\n';
    std::size_t n = *chain.length();
    for (std::size_t i = 0; i < n; ++i) {
        out << "space\n";
        emit_space_block(out, chain.stage(i));
        if (i + 1 < n) {
            out << "morphism\n";
            emit_morphism_block(out, chain.link(i), /*positional=*/true);
        }
    }
    return out.str();
}

Chain parse_chain_text(std::string_view text) {
    std::vector<std::string> lines = split_lines(text);
    Cursor c{lines};
    if (!c.done() && c.peek() == "chugen v1") {
        c.take();
        std::vector<std::string> rule = split_tokens(c.take());
        if (rule.size() != 2 || rule.front() != "rule") fail("expected 'rule <id>' line");
        std::map<std::string, std::string> params;
        while (!c.done()) {
            std::vector<std::string> p = split_tokens(c.take());
            if (p.size() != 3 || p.front() != "param") fail("expected 'param <key> <value>' line");
            params[p[1]] = p[2];
        }
        return gallery::make_rule_chain(rule.back(), params);
    }
    c.expect("chuchain v1");
    std::vector<std::string> cat = split_tokens(c.take());
    if (cat.size() != 2 || cat.front() != "category") fail("expected 'category <iC|iE|iB>' line");
    ChainCategory claim = parse_category(cat.back());

    std::vector<Space> stages;
    std::vector<Morphism> links;
    c.expect("space");
    stages.push_back(parse_space_block(c));
    while (!c.done()) {
        c.expect("morphism");
        // A link's "-" target is the *next* space block, so collect the arrow
        // tokens first and resolve them once that block has been parsed.
        Cursor probe = c;
        probe.expect("chumorph v1");
        std::vector<std::string> src_line = split_tokens(probe.take());
        std::vector<std::string> tgt_line = split_tokens(probe.take());
        if (src_line != std::vector<std::string>{"source", "-"} ||
            tgt_line != std::vector<std::string>{"target", "-"})
            fail("chain morphism blocks must use positional '-' endpoints");
        std::vector<std::string> fwd = section(probe, "forward");
        std::vector<std::string> bwd = section(probe, "backward");
        c.pos = probe.pos;
        c.expect("space");
        stages.push_back(parse_space_block(c));
        const Space& tgt = stages.back();
        Morphism m;
        m.source = stages[stages.size() - 2];
        m.target = tgt;
        m.forward = parse_arrows(fwd, m.source.objects(), tgt, true);
        m.backward = parse_arrows(bwd, tgt.attributes(), m.source, false);
        if (!validate(m)) fail("chain link violates adjointness");
        links.push_back(std::move(m));
    }
    try {
        return Chain::explicit_chain(std::move(stages), std::move(links), claim);
    } catch (const Error& e) {
        fail(e.what());
    }
}

}  // namespace io
}  // namespace chu
