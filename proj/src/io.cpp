#include <netrel/io.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace netrel {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

json parse_json_text(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line:column diagnostic.
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        parse_fail("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                   e.what());
    }
}

std::size_t index_field(const json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key))
        parse_fail(where + ": missing \"" + key + "\"");
    const auto& v = obj.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        parse_fail(where + ": \"" + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

Rational rational_field(const json& v, const std::string& where)
{
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    if (v.is_number())
        return rational_from_double(v.get<double>());
    parse_fail(where + ": expected a number or rational string");
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::string unquote(std::string_view s)
{
    s = trim(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        s = s.substr(1, s.size() - 2);
    return std::string(s);
}

std::size_t dot_node(std::string_view token, std::size_t line)
{
    auto name = unquote(token);
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(name.data(), name.data() + name.size(), value);
    if (name.empty() || ec != std::errc{} || end != name.data() + name.size())
        parse_fail("line " + std::to_string(line) + ": node name \"" + name +
                   "\" is not a non-negative integer");
    return value;
}

// Removes a trailing "[...]" attribute list, returning it separately.
std::string_view split_attributes(std::string_view stmt, std::string_view& attrs, std::size_t line)
{
    attrs = {};
    auto open = stmt.find('[');
    if (open == std::string_view::npos)
        return stmt;
    auto close = stmt.rfind(']');
    if (close == std::string_view::npos || close < open)
        parse_fail("line " + std::to_string(line) + ": unterminated attribute list");
    attrs = stmt.substr(open + 1, close - open - 1);
    return trim(stmt.substr(0, open));
}

} // namespace

Network parse_network_json(std::string_view text)
{
    const auto doc = parse_json_text(text);
    if (!doc.is_object())
        parse_fail("network document must be a JSON object");
    const auto nodes = index_field(doc, "nodes", "network");
    const auto source = index_field(doc, "source", "network");
    const auto terminal = index_field(doc, "terminal", "network");
    if (!doc.contains("edges") || !doc.at("edges").is_array())
        parse_fail("network: \"edges\" must be an array");
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < doc.at("edges").size(); ++j) {
        const auto where = "edge " + std::to_string(j);
        const auto& e = doc.at("edges").at(j);
        edges.push_back({index_field(e, "tail", where), index_field(e, "head", where)});
    }
    return Network::build(nodes, std::move(edges), source, terminal);
}

Network parse_network_dot(std::string_view text)
{
    std::vector<Edge> edges;
    std::optional<std::size_t> source, terminal, nodes;
    std::size_t max_node = 0;
    bool opened = false, closed = false;
    bool in_block_comment = false;

    auto note_node = [&](std::size_t v) { max_node = std::max(max_node, v); };
    auto set_attribute = [&](std::string_view key, std::string_view value, std::size_t line) {
        auto k = unquote(key);
        if (k == "source")
            source = dot_node(value, line);
        else if (k == "terminal")
            terminal = dot_node(value, line);
        else if (k == "nodes")
            nodes = dot_node(value, line);
        // other graph attributes (rankdir, label, ...) are presentation only
    };
    auto attribute_list = [&](std::string_view attrs, std::size_t line) {
        std::size_t start = 0;
        while (start <= attrs.size()) {
            auto end = attrs.find(',', start);
            if (end == std::string_view::npos)
                end = attrs.size();
            auto item = trim(attrs.substr(start, end - start));
            if (!item.empty()) {
                auto eq = item.find('=');
                if (eq == std::string_view::npos)
                    parse_fail("line " + std::to_string(line) + ": expected key=value in attribute list");
                set_attribute(trim(item.substr(0, eq)), trim(item.substr(eq + 1)), line);
            }
            start = end + 1;
        }
    };

    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string line;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (in_block_comment) {
                if (raw.compare(i, 2, "*/") == 0) {
                    in_block_comment = false;
                    ++i;
                }
                continue;
            }
            if (raw.compare(i, 2, "/*") == 0) {
                in_block_comment = true;
                ++i;
                continue;
            }
            if (raw.compare(i, 2, "//") == 0 || raw[i] == '#')
                break;
            line += raw[i];
        }

        std::string_view rest = line;
        if (!opened) {
            rest = trim(rest);
            if (rest.empty())
                continue;
            if (rest.rfind("strict", 0) == 0)
                rest = trim(rest.substr(6));
            if (rest.rfind("digraph", 0) != 0)
                parse_fail("line " + std::to_string(line_no) + ": expected \"digraph\"");
            auto brace = rest.find('{');
            if (brace == std::string_view::npos)
                parse_fail("line " + std::to_string(line_no) + ": expected '{' after digraph");
            opened = true;
            rest = rest.substr(brace + 1);
        }

        std::size_t start = 0;
        while (start <= rest.size()) {
            auto end = rest.find(';', start);
            if (end == std::string_view::npos)
                end = rest.size();
            auto stmt = trim(rest.substr(start, end - start));
            start = end + 1;
            if (stmt.empty())
                continue;
            if (closed)
                parse_fail("line " + std::to_string(line_no) + ": statement after closing '}'");
            if (stmt.back() == '}') {
                closed = true;
                stmt = trim(stmt.substr(0, stmt.size() - 1));
                if (stmt.empty())
                    continue;
            }

            std::string_view attrs;
            auto head = split_attributes(stmt, attrs, line_no);
            if (head == "graph") {
                attribute_list(attrs, line_no);
            } else if (head == "node" || head == "edge") {
                // default attribute statements carry no topology
            } else if (head.find("->") != std::string_view::npos) {
                std::vector<std::size_t> chain;
                std::size_t pos = 0;
                for (;;) {
                    auto arrow = head.find("->", pos);
                    chain.push_back(dot_node(head.substr(pos, arrow == std::string_view::npos
                                                                  ? std::string_view::npos
                                                                  : arrow - pos),
                                             line_no));
                    if (arrow == std::string_view::npos)
                        break;
                    pos = arrow + 2;
                }
                for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
                    note_node(chain[i]);
                    note_node(chain[i + 1]);
                    edges.push_back({chain[i], chain[i + 1]});
                }
            } else if (head.find("--") != std::string_view::npos) {
                parse_fail("line " + std::to_string(line_no) + ": undirected edges are not supported");
            } else if (auto eq = head.find('='); eq != std::string_view::npos) {
                set_attribute(trim(head.substr(0, eq)), trim(head.substr(eq + 1)), line_no);
            } else {
                note_node(dot_node(head, line_no));
            }
        }
    }
    if (in_block_comment)
        parse_fail("unterminated comment");
    if (!opened || !closed)
        parse_fail("line " + std::to_string(line_no) + ": missing digraph body or closing '}'");
    if (!source || !terminal)
        parse_fail("DOT input must set the graph attributes source and terminal");
    note_node(*source);
    note_node(*terminal);
    return Network::build(nodes.value_or(max_node + 1), std::move(edges), *source, *terminal);
}

Network parse_network(std::string_view text, NetworkFormat format)
{
    return format == NetworkFormat::Dot ? parse_network_dot(text) : parse_network_json(text);
}

NetworkFormat format_for_path(const std::string& path)
{
    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() &&
               path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    return ends_with(".dot") || ends_with(".gv") ? NetworkFormat::Dot : NetworkFormat::Json;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        parse_fail("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Network read_network(const std::string& path, std::optional<NetworkFormat> format)
{
    const auto text = read_file(path);
    try {
        return parse_network(text, format.value_or(format_for_path(path)));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError)
            throw Error(ErrorCode::ParseError, path + ": " + e.message());
        throw;
    }
}

json to_json(const Network& net)
{
    json edges = json::array();
    for (const auto& e : net.edges())
        edges.push_back({{"tail", e.tail}, {"head", e.head}});
    return {{"nodes", net.node_count()},
            {"edges", edges},
            {"source", net.source()},
            {"terminal", net.terminal()}};
}

CorrelationPartition parse_partition(std::string_view text)
{
    const auto doc = parse_json_text(text);
    if (!doc.is_object() || !doc.contains("rho") || !doc.contains("blocks") ||
        !doc.at("blocks").is_array())
        parse_fail("partition must be an object with \"rho\" and \"blocks\"");
    CorrelationPartition out;
    out.rho = rational_field(doc.at("rho"), "rho");
    for (const auto& block : doc.at("blocks")) {
        if (!block.is_array())
            parse_fail("each block must be an array of edge indices");
        EdgeSet set;
        for (const auto& e : block) {
            if (!e.is_number_integer() || e.get<long long>() < 0 ||
                e.get<long long>() >= static_cast<long long>(max_edges))
                parse_fail("block member must be an edge index in [0, 63)");
            if (set.contains(e.get<std::size_t>()))
                throw Error(ErrorCode::PartitionMismatch, "edge listed twice in one block");
            set.insert(e.get<std::size_t>());
        }
        out.blocks.push_back(set);
    }
    return out;
}

CorrelationPartition read_partition(const std::string& path) { return parse_partition(read_file(path)); }

std::vector<Rational> parse_values(std::string_view text)
{
    auto body = trim(text);
    std::vector<Rational> out;
    if (!body.empty() && body.front() == '[') {
        const auto doc = parse_json_text(text);
        for (std::size_t i = 0; i < doc.size(); ++i)
            out.push_back(rational_field(doc.at(i), "value " + std::to_string(i)));
        return out;
    }
    std::string token;
    auto flush = [&] {
        if (!token.empty())
            out.push_back(parse_rational(token));
        token.clear();
    };
    for (char c : body) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',')
            flush();
        else
            token += c;
    }
    flush();
    return out;
}

std::vector<Rational> read_values(const std::string& path) { return parse_values(read_file(path)); }

json to_json(EdgeSet set) { return set.members(); }

json to_json(const Poly& poly) { return coefficient_strings(poly); }

json to_json(const Poly2& poly)
{
    json terms = json::array();
    for (const auto& [key, c] : poly.terms())
        terms.push_back({{"p", key.first}, {"rho", key.second}, {"coeff", to_string(c)}});
    return terms;
}

json to_json(const CapacitySpectrum& spectrum)
{
    json levels = json::array();
    for (const auto& c : spectrum.levels)
        levels.push_back(to_json(c));
    return {{"m", spectrum.min_cut}, {"C", levels}, {"ergodic", to_json(spectrum.ergodic)}};
}

CapacitySpectrum spectrum_from_json(const json& j)
{
    CapacitySpectrum out;
    out.min_cut = j.at("m").get<std::size_t>();
    for (const auto& level : j.at("C"))
        out.levels.push_back(poly_from_strings(level.get<std::vector<std::string>>()));
    out.ergodic = poly_from_strings(j.at("ergodic").get<std::vector<std::string>>());
    return out;
}

json to_json(const SimReport& report)
{
    return {{"outage_estimate", report.outage_estimate},
            {"outage_stderr", report.outage_stderr},
            {"capacity_histogram", report.capacity_histogram},
            {"ergodic_estimate", report.ergodic_estimate},
            {"ergodic_stderr", report.ergodic_stderr},
            {"trials", report.trials},
            {"seed", report.seed}};
}

std::string edge_label(EdgeSet set)
{
    std::string out = "{";
    bool first = true;
    set.for_each([&](std::size_t j) {
        out += (first ? "e" : ",e") + std::to_string(j + 1);
        first = false;
    });
    return out + "}";
}

std::string csv_header(const SimReport& report)
{
    std::string out = "trials,seed,outage_estimate,outage_stderr,ergodic_estimate,ergodic_stderr";
    for (std::size_t i = 0; i < report.capacity_histogram.size(); ++i)
        out += ",count_c" + std::to_string(i);
    return out;
}

std::string csv_row(const SimReport& report)
{
    std::string out = std::to_string(report.trials) + "," + std::to_string(report.seed) + "," +
                      format_double(report.outage_estimate) + "," +
                      format_double(report.outage_stderr) + "," +
                      format_double(report.ergodic_estimate) + "," +
                      format_double(report.ergodic_stderr);
    for (auto c : report.capacity_histogram)
        out += "," + std::to_string(c);
    return out;
}

} // namespace netrel
