#include "gplus/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace gplus {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

void encode_order(std::size_t n, std::string& out)
{
    auto put_bits = [&](std::uint64_t value, int groups) {
        for (int k = groups - 1; k >= 0; --k)
            out += static_cast<char>(63 + ((value >> (6 * k)) & 0x3f));
    };
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        put_bits(n, 3);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(126);
        put_bits(n, 6);
    }
}

int decode_byte(char ch)
{
    int v = static_cast<unsigned char>(ch) - 63;
    if (v < 0 || v > 63)
        throw FormatError("graph6: byte out of range");
    return v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::size_t parse_index(std::string_view s)
{
    s = trim(s);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw FormatError("edge list: bad vertex index '" + std::string(s) + "'");
    return value;
}

}  // namespace

std::string to_graph6(const LabeledGraph& g, bool header)
{
    std::string out;
    if (header)
        out += kGraph6Header;
    encode_order(g.order(), out);
    int bits = 0;
    int acc = 0;
    for (Vertex j = 1; j < g.order(); ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out += static_cast<char>(63 + acc);
                bits = 0;
                acc = 0;
            }
        }
    }
    if (bits > 0)
        out += static_cast<char>(63 + (acc << (6 - bits)));
    return out;
}

LabeledGraph from_graph6(std::string_view text)
{
    text = trim(text);
    if (text.starts_with(kGraph6Header))
        text.remove_prefix(kGraph6Header.size());
    if (text.empty())
        throw FormatError("graph6: empty input");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto take = [&](int groups) {
        std::uint64_t v = 0;
        for (int k = 0; k < groups; ++k) {
            if (pos >= text.size())
                throw FormatError("graph6: truncated order");
            v = (v << 6) | static_cast<std::uint64_t>(decode_byte(text[pos++]));
        }
        return v;
    };
    if (static_cast<unsigned char>(text[0]) != 126) {
        n = take(1);
    } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
        pos = 2;
        n = take(6);
    } else {
        pos = 1;
        n = take(3);
    }

    const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t expected = (pairs + 5) / 6;
    if (text.size() - pos != expected)
        throw FormatError("graph6: expected " + std::to_string(expected) + " data bytes, got " +
                          std::to_string(text.size() - pos));

    LabeledGraph g(static_cast<std::size_t>(n));
    std::uint64_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            int byte = decode_byte(text[pos + bit / 6]);
            if (byte & (1 << (5 - bit % 6)))
                g.add_edge(i, j);
        }
    }
    if (bit % 6 != 0) {
        int byte = decode_byte(text[pos + bit / 6]);
        if (byte & ((1 << (6 - bit % 6)) - 1))
            throw FormatError("graph6: nonzero padding bits");
    }
    return g;
}

void write_dot(const LabeledGraph& g, std::ostream& out, std::string_view name)
{
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v + 1;
        if (const auto& l = g.label(v))
            out << " [label=\"" << l->to_string() << "\""
                << (l->is_resolver() ? ", shape=box" : "") << "]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges())
        out << "  " << u + 1 << " -- " << v + 1 << ";\n";
    out << "}\n";
}

void write_edgelist(const LabeledGraph& g, std::ostream& out)
{
    out << "u,v\n";
    for (auto [u, v] : g.edges())
        out << u + 1 << ',' << v + 1 << '\n';
}

LabeledGraph read_edgelist(std::istream& in)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t n = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view s = trim(line);
        if (s.empty())
            continue;
        if (s.front() == '#') {
            s.remove_prefix(1);
            s = trim(s);
            if (s.starts_with("n="))
                n = std::max(n, parse_index(s.substr(2)));
            continue;
        }
        if (s == "u,v")
            continue;
        auto comma = s.find(',');
        if (comma == std::string_view::npos)
            throw FormatError("edge list: missing comma in '" + std::string(s) + "'");
        std::size_t u = parse_index(s.substr(0, comma));
        std::size_t v = parse_index(s.substr(comma + 1));
        if (u == 0 || v == 0)
            throw FormatError("edge list: indices are 1-based");
        edges.emplace_back(u - 1, v - 1);
        n = std::max({n, u, v});
    }
    LabeledGraph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

LabeledGraph read_graph_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path.string());
    auto ext = path.extension().string();
    if (ext == ".csv" || ext == ".edges" || ext == ".txt")
        return read_edgelist(in);
    if (ext == ".g6") {
        std::string line;
        while (std::getline(in, line))
            if (!trim(line).empty())
                return from_graph6(line);
        throw FormatError("empty graph file " + path.string());
    }

    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    std::istringstream probe(text);
    std::string line;
    while (std::getline(probe, line)) {
        auto s = trim(line);
        if (s.empty())
            continue;
        if (s.front() == '#' || s.find(',') != std::string_view::npos) {
            std::istringstream again(text);
            return read_edgelist(again);
        }
        return from_graph6(s);
    }
    throw FormatError("empty graph file " + path.string());
}

}  // namespace gplus
