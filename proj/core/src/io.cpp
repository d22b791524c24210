#include "lcanet/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace lcanet {

namespace {

struct Line {
    std::size_t number = 0;             // 1-based
    std::vector<std::string> tokens;
};

// Significant lines only: blank lines and '#' comment lines are dropped,
// trailing '\r' is stripped so CRLF files parse like LF files.
std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        std::istringstream words(raw);
        std::string token;
        std::vector<std::string> tokens;
        while (words >> token)
            tokens.push_back(token);
        if (tokens.empty() || tokens.front().front() == '#')
            continue;
        lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

bool is_header(const Line& line) {
    return line.tokens.front() == "leaves:";
}

void require_name(const std::string& file, std::size_t line, const std::string& name) {
    if (!LeafSet::valid_name(name)) {
        if (name == "_root")
            throw ParseError(file, line, "'_root' is reserved and cannot name a leaf");
        throw ParseError(file, line, "invalid leaf name '" + name + "'");
    }
}

} // namespace

Relation parse_constraints(std::istream& in, const std::string& filename,
                           const std::string& separator) {
    std::vector<Line> lines = read_lines(in);

    std::set<std::string> names;
    std::size_t first = 0;
    if (!lines.empty() && is_header(lines.front())) {
        for (std::size_t t = 1; t < lines.front().tokens.size(); ++t) {
            require_name(filename, lines.front().number, lines.front().tokens[t]);
            names.insert(lines.front().tokens[t]);
        }
        first = 1;
    }

    for (std::size_t i = first; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (is_header(line))
            throw ParseError(filename, line.number, "duplicate or misplaced 'leaves:' header");
        if (line.tokens.size() != 5 || line.tokens[2] != separator)
            throw ParseError(filename, line.number, "expected 'A B " + separator + " X Y'");
        for (std::size_t t : {0u, 1u, 3u, 4u}) {
            require_name(filename, line.number, line.tokens[t]);
            names.insert(line.tokens[t]);
        }
    }

    if (names.empty())
        throw ParseError(filename, 0, "no leaves declared");

    Relation R(LeafSet(std::vector<std::string>(names.begin(), names.end())));
    const LeafSet& leaves = R.leaves();
    for (std::size_t i = first; i < lines.size(); ++i) {
        const Line& line = lines[i];
        Pair lhs(leaves.id(line.tokens[0]), leaves.id(line.tokens[1]));
        Pair rhs(leaves.id(line.tokens[3]), leaves.id(line.tokens[4]));
        R.insert(lhs, rhs);
    }
    return R;
}

std::string serialize_constraints(const Relation& R, const std::string& separator) {
    const LeafSet& leaves = R.leaves();
    Bitset mentioned(leaves.size());
    std::string body;
    for (const auto& [p, q] : R.facts()) {
        mentioned.set(p.lo);
        mentioned.set(p.hi);
        mentioned.set(q.lo);
        mentioned.set(q.hi);
        body += to_string(leaves, p) + " " + separator + " " + to_string(leaves, q) + "\n";
    }
    if (mentioned.count() == leaves.size())
        return body;
    std::string header = "leaves:";
    for (const auto& name : leaves.names())
        header += " " + name;
    return header + "\n" + body;
}

Dag parse_dag(std::istream& in, const std::string& filename) {
    std::vector<Line> lines = read_lines(in);

    std::set<std::string> declared;
    std::size_t first = 0;
    if (!lines.empty() && is_header(lines.front())) {
        for (std::size_t t = 1; t < lines.front().tokens.size(); ++t) {
            require_name(filename, lines.front().number, lines.front().tokens[t]);
            declared.insert(lines.front().tokens[t]);
        }
        first = 1;
    }

    std::vector<std::pair<std::string, std::string>> arcs;
    std::set<std::pair<std::string, std::string>> seen;
    std::map<std::string, std::size_t> first_parent_line;
    std::map<std::string, std::size_t> first_line;
    std::vector<std::string> appearance;

    auto note_appearance = [&](const std::string& name, std::size_t number) {
        if (first_line.emplace(name, number).second)
            appearance.push_back(name);
    };

    for (std::size_t i = first; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (is_header(line))
            throw ParseError(filename, line.number, "duplicate or misplaced 'leaves:' header");
        if (line.tokens.size() != 3 || line.tokens[1] != "->")
            throw ParseError(filename, line.number, "expected 'U -> V'");
        const std::string& parent = line.tokens[0];
        const std::string& child = line.tokens[2];
        for (const std::string& name : {parent, child}) {
            for (char c : name) {
                if (c == '<' || c == '#' || c == ':')
                    throw ParseError(filename, line.number,
                                     "invalid vertex name '" + name + "'");
            }
        }
        if (parent == child)
            throw ParseError(filename, line.number, "self arc '" + parent + " -> " + child + "'");
        if (!seen.insert({parent, child}).second)
            throw ParseError(filename, line.number,
                             "duplicate arc '" + parent + " -> " + child + "'");
        note_appearance(parent, line.number);
        note_appearance(child, line.number);
        first_parent_line.emplace(parent, line.number);
        arcs.emplace_back(parent, child);
    }

    for (const auto& name : declared) {
        auto it = first_parent_line.find(name);
        if (it != first_parent_line.end())
            throw ParseError(filename, it->second, "leaf '" + name + "' has outgoing arcs");
    }

    // Sinks are implied leaves; the declared names join them.
    std::set<std::string> leaf_names = declared;
    for (const auto& name : appearance) {
        if (!first_parent_line.count(name)) {
            require_name(filename, first_line.at(name), name);
            leaf_names.insert(name);
        }
    }
    if (leaf_names.empty())
        throw ParseError(filename, 0, "no leaves declared");

    LeafSet leaves{std::vector<std::string>(leaf_names.begin(), leaf_names.end())};
    Dag::Builder builder(leaves);
    std::map<std::string, VertexId> vertex_of;
    for (const auto& name : leaf_names)
        vertex_of[name] = builder.leaf_vertex(leaves.id(name));
    for (const auto& name : appearance) {
        if (!leaf_names.count(name))
            vertex_of[name] = builder.add_internal(name);
    }

    // Self, duplicate and leaf-parent arcs were rejected above, so only the
    // whole-file checks (cycles) can throw here.
    try {
        for (const auto& [parent, child] : arcs)
            builder.add_arc(vertex_of.at(parent), vertex_of.at(child));
        return std::move(builder).build();
    } catch (const InvalidInput& e) {
        throw ParseError(filename, 0, e.what());
    }
}

Dag parse_dag_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(path, 0, "cannot open file");
    return parse_dag(in, path);
}

Relation parse_constraints_file(const std::string& path, const std::string& separator) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(path, 0, "cannot open file");
    return parse_constraints(in, path, separator);
}

std::string serialize_dag(const Dag& G) {
    std::string out = "leaves:";
    for (const auto& name : G.leaves().names())
        out += " " + name;
    out += "\n";
    for (std::size_t u = 0; u < G.vertex_count(); ++u) {
        for (VertexId w : G.children(static_cast<VertexId>(u)))
            out += G.label(static_cast<VertexId>(u)) + " -> " + G.label(w) + "\n";
    }
    return out;
}

namespace {

std::string dot_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string to_dot(const Dag& G) {
    std::string out = "digraph G {\n";
    for (std::size_t v = 0; v < G.vertex_count(); ++v) {
        VertexId id = static_cast<VertexId>(v);
        out += "  \"" + dot_escape(G.label(id)) + "\" [shape=";
        if (G.is_leaf(id))
            out += "box";
        else if (G.label(id) == "_root")
            out += "point";
        else {
            out += "ellipse";
            if (!G.note(id).empty())
                out += ", tooltip=\"" + dot_escape(G.note(id)) + "\"";
        }
        out += "];\n";
    }
    for (std::size_t u = 0; u < G.vertex_count(); ++u) {
        VertexId id = static_cast<VertexId>(u);
        for (VertexId w : G.children(id))
            out += "  \"" + dot_escape(G.label(id)) + "\" -> \"" + dot_escape(G.label(w)) + "\";\n";
    }
    out += "}\n";
    return out;
}

} // namespace lcanet
