#ifndef NETREL_IO_HPP
#define NETREL_IO_HPP

#include <netrel/capacity.hpp>
#include <netrel/correlated.hpp>
#include <netrel/network.hpp>
#include <netrel/outage.hpp>
#include <netrel/simulate.hpp>

#include <json.hpp>

#include <string>
#include <optional>
#include <string_view>
#include <vector>

namespace netrel {

enum class NetworkFormat { Json, Dot };

/// {"nodes": N, "edges": [{"tail": a, "head": b}, ...], "source": s, "terminal": t}
/// Edge j is the j-th array element. Malformed input raises ParseError with
/// the line and column; validation failures raise the Network::build errors.
Network parse_network_json(std::string_view text);

/// A subset of DOT: `digraph name { ... }` containing `a -> b;` edge
/// statements (chains allowed, attribute lists ignored) and the graph
/// attributes source, terminal and optionally nodes, either as `key = value;`
/// or inside `graph [...]`. Node names are integer indices.
Network parse_network_dot(std::string_view text);

Network parse_network(std::string_view text, NetworkFormat format);

// Format chosen from the extension: ".dot"/".gv" is DOT, anything else JSON.
NetworkFormat format_for_path(const std::string& path);
Network read_network(const std::string& path, std::optional<NetworkFormat> format = std::nullopt);

nlohmann::json to_json(const Network& net);

/// {"rho": <number or rational string>, "blocks": [[edge indices], ...]}
CorrelationPartition parse_partition(std::string_view text);
CorrelationPartition read_partition(const std::string& path);

/// A JSON array of numbers or rational strings, or plain text values
/// separated by whitespace or commas.
std::vector<Rational> parse_values(std::string_view text);
std::vector<Rational> read_values(const std::string& path);

std::string read_file(const std::string& path);

nlohmann::json to_json(EdgeSet set);
nlohmann::json to_json(const Poly& poly);
nlohmann::json to_json(const Poly2& poly);
nlohmann::json to_json(const CapacitySpectrum& spectrum);
nlohmann::json to_json(const SimReport& report);

CapacitySpectrum spectrum_from_json(const nlohmann::json& j);

// "{e1,e3}" with one-based edge labels.
std::string edge_label(EdgeSet set);

std::string csv_header(const SimReport& report);
std::string csv_row(const SimReport& report);

} // namespace netrel

#endif
