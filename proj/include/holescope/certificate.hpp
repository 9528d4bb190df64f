#ifndef HOLESCOPE_CERTIFICATE_HPP
#define HOLESCOPE_CERTIFICATE_HPP

#include "holescope/cable.hpp"
#include "holescope/levels.hpp"
#include "holescope/trellis.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace holescope {

class SchemaError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ShowerCert {
    Shower shower;
    Stability stability;
};

struct SprinklerCert {
    Shower shower;
    int nu = 1;
};

struct WandCert {
    Shower shower;
    Wand wand;
    std::optional<VertexSet> mat;
};

struct RecirculatorCert {
    Shower shower;
    VertexSeq path;
};

using Certificate = std::variant<Levelling, ShowerCert, TrellisEmbedding, MulticoverCert, Cable, WUBend,
                                 SprinklerCert, WandCert, RecirculatorCert>;

std::string certificate_kind(const Certificate& c);

nlohmann::json to_json(const Certificate& c);
/// Throws SchemaError on unknown kinds, missing fields or wrong types.
Certificate certificate_from_json(const nlohmann::json& j);
Certificate certificate_from_json(std::string_view text);

nlohmann::json violations_json(const Violations& vs);

/// {"kind", "valid", "violations"} plus kind-specific facts: bend size, pair
/// types, shadow, warnings. Malformed certificates throw std::invalid_argument
/// or std::out_of_range.
nlohmann::json verify_certificate(const Graph& g, const Certificate& c);

}  // namespace holescope

#endif
