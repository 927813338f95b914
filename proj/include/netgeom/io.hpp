#ifndef NETGEOM_IO_HPP
#define NETGEOM_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "netgeom/compiler.hpp"
#include "netgeom/geometry.hpp"
#include "netgeom/network.hpp"
#include "netgeom/selection.hpp"

namespace netgeom::io {

using nlohmann::json;

/// Rounds to 12 significant digits; the JSON writer then emits the shortest
/// representation of the rounded value.
double round12(double v);

json to_json(const Arrangement& A);
json to_json(const Region& r);
json to_json(const std::vector<Region>& regions);
json to_json(const Selection& s);
json to_json(const CompiledNetwork& C);
json to_json(const VerifyReport& report);
json to_json(const StepNetwork& N);
json to_json(const IntersectionPoset& P, const std::vector<CoverPair>& covers);
json label_to_json(RegionLabel label);

/// `{"dimension": n, "hyperplanes": [{"normal": [..], "offset": b}, ..]}`
Arrangement parse_arrangement(std::string_view document);
/// `{"universe": k, "selected": [[indices], ..]}` with 1-based indices.
Selection parse_selection(std::string_view document);

/// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const json& j);

std::string read_file(const std::string& path);

}  // namespace netgeom::io

#endif
