// Copyright 2026-present the ssw authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ssw/text_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ssw::io {

namespace {

[[noreturn]] void
malformed(const std::string& origin, std::size_t line, const std::string& what) {
    throw Error(ErrorKind::MalformedInput, origin + ":" + std::to_string(line) + ": " + what);
}

// '#' opens a comment only at the start of a line or after whitespace, so
// edge labels such as 1->2#1 survive.
std::string
strip_comment(const std::string& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
            return line.substr(0, i);
        }
    }
    return line;
}

bool
blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<std::string>
tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) {
        out.push_back(t);
    }
    return out;
}

std::optional<std::int64_t>
to_int(const std::string& s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

std::ifstream
open(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::MalformedInput, "cannot open " + path.string());
    }
    return in;
}

}  // namespace

IntMatrix
parse_matrix(std::istream& in, const std::string& origin) {
    std::string raw;
    std::size_t line_no = 0;
    std::vector<std::vector<std::string>> lines;
    std::vector<std::size_t> numbers;
    while (std::getline(in, raw)) {
        ++line_no;
        auto line = strip_comment(raw);
        if (blank(line)) {
            continue;
        }
        lines.push_back(tokens(line));
        numbers.push_back(line_no);
    }
    if (lines.empty()) {
        malformed(origin, line_no, "missing \"rows cols\" header");
    }
    if (lines[0].size() != 2) {
        malformed(origin, numbers[0], "header must be \"rows cols\"");
    }
    const auto rows = to_int(lines[0][0]);
    const auto cols = to_int(lines[0][1]);
    if (!rows || !cols || *rows < 0 || *cols < 0) {
        malformed(origin, numbers[0], "bad dimensions");
    }
    if (lines.size() - 1 != static_cast<std::size_t>(*rows)) {
        malformed(origin, numbers.back(),
                  "expected " + std::to_string(*rows) + " rows, found " + std::to_string(lines.size() - 1));
    }
    IntMatrix m(static_cast<std::size_t>(*rows), static_cast<std::size_t>(*cols));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto& row = lines[i + 1];
        if (row.size() != m.cols()) {
            malformed(origin, numbers[i + 1], "expected " + std::to_string(m.cols()) + " entries");
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            auto v = to_int(row[j]);
            if (!v) {
                malformed(origin, numbers[i + 1], "not an integer: " + row[j]);
            }
            m(i, j) = *v;
        }
    }
    return m;
}

IntMatrix
read_matrix(const std::filesystem::path& path) {
    auto in = open(path);
    return parse_matrix(in, path.string());
}

TransitionMatrix
read_transition_matrix(const std::filesystem::path& path) {
    return TransitionMatrix(read_matrix(path));
}

std::string
format_matrix(const IntMatrix& m) {
    std::string s = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            s += (j ? " " : "") + std::to_string(m(i, j));
        }
        s += "\n";
    }
    return s;
}

std::size_t
parse_edge_label(const DirectedMultigraph& g, const std::string& label) {
    const auto arrow = label.find("->");
    const auto hash = label.find('#');
    if (arrow == std::string::npos || hash == std::string::npos || hash < arrow) {
        throw Error(ErrorKind::MalformedInput, "edge label \"" + label + "\" is not of the form i->j#k");
    }
    const auto i = to_int(label.substr(0, arrow));
    const auto j = to_int(label.substr(arrow + 2, hash - arrow - 2));
    const auto k = to_int(label.substr(hash + 1));
    if (!i || !j || !k || *i < 1 || *j < 1 || *k < 1) {
        throw Error(ErrorKind::MalformedInput, "edge label \"" + label + "\" has bad indices");
    }
    auto id = g.find_edge(static_cast<std::size_t>(*i - 1), static_cast<std::size_t>(*j - 1), *k);
    if (!id) {
        throw Error(ErrorKind::InvalidPartition, "edge " + label + " does not exist");
    }
    return *id;
}

template <SplitKind K>
EdgePartition<K>
parse_partition(std::istream& in, const DirectedMultigraph& g, const std::string& origin) {
    std::vector<typename EdgePartition<K>::Blocks> blocks(g.vertex_count());
    std::vector<bool> listed(g.vertex_count(), false);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = strip_comment(raw);
        if (blank(line)) {
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            malformed(origin, line_no, "expected \"vertex: blocks\"");
        }
        const auto vtok = tokens(line.substr(0, colon));
        const auto v = vtok.size() == 1 ? to_int(vtok[0]) : std::nullopt;
        if (!v || *v < 1 || static_cast<std::size_t>(*v) > g.vertex_count()) {
            malformed(origin, line_no, "bad vertex index");
        }
        const auto vi = static_cast<std::size_t>(*v - 1);
        if (listed[vi]) {
            malformed(origin, line_no, "vertex listed twice");
        }
        listed[vi] = true;
        std::istringstream rest(line.substr(colon + 1));
        std::string part;
        while (std::getline(rest, part, '|')) {
            std::vector<std::size_t> block;
            for (const auto& label : tokens(part)) {
                block.push_back(parse_edge_label(g, label));
            }
            blocks[vi].push_back(std::move(block));
        }
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& edges = K == SplitKind::Out ? g.out_edges(v) : g.in_edges(v);
        if (!listed[v] && !edges.empty()) {
            blocks[v].push_back(edges);
        }
    }
    return EdgePartition<K>(g, std::move(blocks));
}

template <SplitKind K>
EdgePartition<K>
read_partition(const std::filesystem::path& path, const DirectedMultigraph& g) {
    auto in = open(path);
    return parse_partition<K>(in, g, path.string());
}

template <SplitKind K>
std::string
format_partition(const EdgePartition<K>& p, const DirectedMultigraph& g) {
    std::string s;
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        if (p.block_count(v) == 0) {
            continue;
        }
        s += std::to_string(v + 1) + ":";
        for (std::size_t b = 0; b < p.block_count(v); ++b) {
            s += b ? " |" : "";
            for (std::size_t e : p.blocks(v)[b]) {
                s += " " + g.edge_label(e);
            }
        }
        s += "\n";
    }
    return s;
}

template EdgePartition<SplitKind::Out>
parse_partition<SplitKind::Out>(std::istream&, const DirectedMultigraph&, const std::string&);
template EdgePartition<SplitKind::In>
parse_partition<SplitKind::In>(std::istream&, const DirectedMultigraph&, const std::string&);
template EdgePartition<SplitKind::Out>
read_partition<SplitKind::Out>(const std::filesystem::path&, const DirectedMultigraph&);
template EdgePartition<SplitKind::In>
read_partition<SplitKind::In>(const std::filesystem::path&, const DirectedMultigraph&);
template std::string
format_partition<SplitKind::Out>(const EdgePartition<SplitKind::Out>&, const DirectedMultigraph&);
template std::string
format_partition<SplitKind::In>(const EdgePartition<SplitKind::In>&, const DirectedMultigraph&);

SSEChain
read_chain_manifest(const std::filesystem::path& path) {
    auto in = open(path);
    const auto dir = path.parent_path();
    SSEChain chain;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto t = tokens(strip_comment(raw));
        if (t.empty()) {
            continue;
        }
        if (t.size() != 3 || t[0] != "step") {
            malformed(path.string(), line_no, "expected \"step <C-file> <D-file>\"");
        }
        chain.steps.push_back(make_elementary(read_matrix(dir / t[1]), read_matrix(dir / t[2])));
    }
    if (chain.steps.empty()) {
        throw Error(ErrorKind::EmptyChain, path.string() + " lists no steps");
    }
    return chain;
}

std::vector<TFStep>
read_tf_manifest(const std::filesystem::path& path) {
    auto in = open(path);
    const auto dir = path.parent_path();
    std::vector<TFStep> steps;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto t = tokens(strip_comment(raw));
        if (t.empty()) {
            continue;
        }
        if (t.size() != 5 || t[0] != "tf") {
            malformed(path.string(), line_no, "expected \"tf <side> <move> <matrix-file> <partition-file>\"");
        }
        Side side;
        if (t[1] == "direct") {
            side = Side::Direct;
        } else if (t[1] == "transposed") {
            side = Side::Transposed;
        } else {
            malformed(path.string(), line_no, "side must be direct or transposed");
        }
        Move move;
        if (t[2] == "out_split") {
            move = Move::OutSplit;
        } else if (t[2] == "out_amalgamate") {
            move = Move::OutAmalgamate;
        } else {
            malformed(path.string(), line_no, "move must be out_split or out_amalgamate");
        }
        const auto a = read_transition_matrix(dir / t[3]);
        const auto g = from_matrix(a);
        const auto split = side == Side::Direct ? out_split(g, read_partition<SplitKind::Out>(dir / t[4], g))
                                                : in_split(g, read_partition<SplitKind::In>(dir / t[4], g));
        steps.push_back(move == Move::OutSplit ? step_from_split(split, side) : amalgamation_step(split, side));
    }
    if (steps.empty()) {
        throw Error(ErrorKind::EmptyChain, path.string() + " lists no steps");
    }
    return steps;
}

CylinderFunction
parse_cylinder_function(std::istream& in, const TransitionMatrix& a, const std::string& origin) {
    const auto g = from_matrix(a);
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::size_t> depth;
    std::map<Word, std::int64_t> values;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = strip_comment(raw);
        if (blank(line)) {
            continue;
        }
        if (!depth) {
            const auto t = tokens(line);
            const auto k = t.size() == 2 && t[0] == "depth" ? to_int(t[1]) : std::nullopt;
            if (!k || *k < 0) {
                malformed(origin, line_no, "expected \"depth k\" header");
            }
            depth = static_cast<std::size_t>(*k);
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            malformed(origin, line_no, "expected \"word : value\"");
        }
        Word w;
        for (const auto& label : tokens(line.substr(0, colon))) {
            w.push_back(parse_edge_label(g, label));
        }
        const auto vt = tokens(line.substr(colon + 1));
        const auto v = vt.size() == 1 ? to_int(vt[0]) : std::nullopt;
        if (!v) {
            malformed(origin, line_no, "bad value");
        }
        if (w.size() != *depth) {
            malformed(origin, line_no, "word length differs from depth");
        }
        if (!values.emplace(std::move(w), *v).second) {
            malformed(origin, line_no, "word listed twice");
        }
    }
    if (!depth) {
        malformed(origin, line_no, "missing \"depth k\" header");
    }
    CylinderFunction f(*depth, std::move(values));
    if (!is_total(f, a)) {
        throw Error(ErrorKind::MalformedInput, origin + ": function is not defined on every allowed word");
    }
    return f;
}

std::string
format_cylinder_function(const CylinderFunction& f, const TransitionMatrix& a) {
    const auto g = from_matrix(a);
    std::string s = "depth " + std::to_string(f.depth()) + "\n";
    for (const auto& [w, v] : f.values()) {
        std::string word;
        for (std::size_t e : w) {
            word += (word.empty() ? "" : " ") + g.edge_label(e);
        }
        s += word + (word.empty() ? ": " : " : ") + std::to_string(v) + "\n";
    }
    return s;
}

}  // namespace ssw::io
