#include "hgenergy/hg_format.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <fmt/format.h>
#include <fstream>
#include <sstream>
#include <vector>

#include "hgenergy/error.hpp"

namespace hgenergy {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what)
{
    throw Error(ErrorCode::ParseError, fmt::format("line {}: {}", line, what));
}

std::vector<std::uint64_t> tokenize(std::string_view text, std::size_t line)
{
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
        if (i == text.size()) break;
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        const auto consumed = static_cast<std::size_t>(ptr - (text.data() + i));
        if (ec != std::errc{} || consumed == 0 ||
            (i + consumed < text.size() && text[i + consumed] != ' ' && text[i + consumed] != '\t' &&
             text[i + consumed] != '\r')) {
            fail(line, fmt::format("expected a non-negative integer near '{}'", text.substr(i)));
        }
        out.push_back(value);
        i += consumed;
    }
    return out;
}

} // namespace

Hypergraph parse_hg(std::istream& in)
{
    std::string raw;
    std::size_t line = 0;
    bool have_header = false;
    std::uint64_t k = 0, n = 0, m = 0;
    std::vector<Edge> edges;
    std::map<Edge, std::size_t> first_seen;

    while (std::getline(in, raw)) {
        ++line;
        auto tokens = tokenize(raw, line);
        if (tokens.empty()) continue;
        if (!have_header) {
            if (tokens.size() != 3) fail(line, "header must be 'k n m'");
            k = tokens[0];
            n = tokens[1];
            m = tokens[2];
            if (k < 2) fail(line, "k must be at least 2");
            if (n < 1) fail(line, "n must be at least 1");
            if (n > std::numeric_limits<Vertex>::max()) fail(line, "n too large");
            have_header = true;
            continue;
        }
        if (edges.size() == m) fail(line, fmt::format("more than the declared {} edges", m));
        if (tokens.size() != k) fail(line, fmt::format("edge has {} vertices, expected k = {}", tokens.size(), k));
        Edge e;
        e.reserve(k);
        for (auto t : tokens) {
            if (t >= n) fail(line, fmt::format("vertex {} out of range [0, {})", t, n));
            e.push_back(static_cast<Vertex>(t));
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) fail(line, "edge repeats a vertex");
        if (auto [it, fresh] = first_seen.emplace(e, line); !fresh) {
            fail(line, fmt::format("duplicate of the edge on line {}", it->second));
        }
        edges.push_back(std::move(e));
    }
    if (!have_header) fail(line + 1, "missing header 'k n m'");
    if (edges.size() != m) fail(line + 1, fmt::format("declared {} edges but found {}", m, edges.size()));

    return Hypergraph::from_edges(n, k, std::move(edges));
}

Hypergraph parse_hg(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_hg(in);
}

Hypergraph read_hg_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, fmt::format("cannot open '{}'", path));
    return parse_hg(in);
}

void write_hg(std::ostream& out, const Hypergraph& h)
{
    out << h.uniformity() << ' ' << h.num_vertices() << ' ' << h.num_edges() << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
}

std::string to_hg_string(const Hypergraph& h)
{
    std::ostringstream out;
    write_hg(out, h);
    return out.str();
}

} // namespace hgenergy
