#pragma once

#include "sl2/disc_model.hpp"
#include "sl2/frieze.hpp"
#include "sl2/tiling.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace sl2::io {

using Json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

using Payload = std::variant<DiscFragment, TilingWindow, FriezeWindow, OnesCertificate>;

Json to_json(const Vertex& v);
Json to_json(const Arc& a);
Json to_json(const DiscFragment& f);
Json to_json(const TilingWindow& w);
Json to_json(const FriezeWindow& f);
Json to_json(const OnesCertificate& c);

// All parsers throw Error(InvalidInput) on malformed data.
Vertex vertex_from_json(const Json& j);
Arc arc_from_json(const Json& j);
DiscFragment fragment_from_json(const Json& j);
TilingWindow tiling_from_json(const Json& j);
FriezeWindow frieze_from_json(const Json& j);
OnesCertificate certificate_from_json(const Json& j);

std::string payload_kind(const Payload& p);
Json manifest(const Payload& p);
Payload from_manifest(const Json& j);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);
std::string serialize(const Payload& p);
Payload parse(const std::string& text);

Payload read_file(const std::string& path);
void write_file(const std::string& path, const Payload& p);

}  // namespace sl2::io
