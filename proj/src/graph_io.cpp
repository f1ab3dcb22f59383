#include "gapcert/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace gapcert {

namespace {

std::string_view trim(std::string_view s)
{
    auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && ws(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && ws(s.back()))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view token, int line_no)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw InputError("line " + std::to_string(line_no) + ": expected integer, got '" + std::string(token) + "'");
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    std::optional<long long> declared;
    std::vector<Edge> edges;
    long long max_id = -1;
    bool seen_data = false;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        auto line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        auto tokens = split_ws(line);
        if (tokens.size() == 2 && tokens[0] == "n") {
            if (seen_data)
                throw InputError("line " + std::to_string(line_no) + ": 'n' header must precede edges");
            declared = parse_int(tokens[1], line_no);
            if (*declared < 0)
                throw InputError("negative vertex count");
            seen_data = true;
            continue;
        }
        if (tokens.size() != 2)
            throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
        seen_data = true;

        long long u = parse_int(tokens[0], line_no);
        long long v = parse_int(tokens[1], line_no);
        if (u < 0 || v < 0)
            throw InputError("line " + std::to_string(line_no) + ": negative vertex id");
        if (u == v)
            throw InputError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
        if (declared && (u >= *declared || v >= *declared))
            throw InputError("line " + std::to_string(line_no) + ": vertex id exceeds declared n=" + std::to_string(*declared));
        if (std::max(u, v) > 1'000'000)
            throw InputError("line " + std::to_string(line_no) + ": vertex id too large");
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }

    int n = declared ? static_cast<int>(*declared) : static_cast<int>(max_id + 1);
    return Graph(n, edges);
}

std::string emit_edge_list(const Graph &g)
{
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (const auto &[u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw InputError("graph6: truncated input (no size byte)");
    for (char c : text) {
        auto b = static_cast<unsigned char>(c);
        if (b < 63 || b > 126)
            throw InputError("graph6: malformed character (byte " + std::to_string(b) + ")");
    }
    if (static_cast<unsigned char>(text[0]) == 126)
        throw InputError("graph6: orders above " + std::to_string(graph6_max_order) + " are not supported");

    int n = text[0] - 63;
    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t bytes = (bits + 5) / 6;
    if (text.size() - 1 < bytes)
        throw InputError("graph6: truncated bit vector");
    if (text.size() - 1 > bytes)
        throw InputError("graph6: trailing data after bit vector");

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[1 + k / 6] - 63;
            if (byte & (0x20 >> (k % 6)))
                edges.emplace_back(i, j);
        }
    return Graph(n, edges);
}

std::string emit_graph6(const Graph &g)
{
    int n = g.order();
    if (n > graph6_max_order)
        throw InputError("graph6: order " + std::to_string(n) + " exceeds supported maximum " +
                         std::to_string(graph6_max_order));

    std::string out(1, static_cast<char>(n + 63));
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

bool looks_like_graph6(std::string_view text)
{
    text = trim(text);
    if (text.empty() || text.find('\n') != std::string_view::npos)
        return false;
    return std::all_of(text.begin(), text.end(), [](char c) {
        auto b = static_cast<unsigned char>(c);
        return b >= 63 && b <= 126;
    });
}

Graph parse_graph(std::string_view text)
{
    return looks_like_graph6(text) ? parse_graph6(text) : parse_edge_list(text);
}

} // namespace gapcert
