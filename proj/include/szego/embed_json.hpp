#ifndef SZEGO_EMBED_JSON_HPP
#define SZEGO_EMBED_JSON_HPP

#include "szego/contact_embed.hpp"
#include "szego/gaussian.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace szego {

// Schema violation with a JSON-pointer path, e.g. "/pairs/0/1".
struct SchemaError : std::runtime_error {
    SchemaError(const std::string& what, std::string pointer_)
        : std::runtime_error(what + " at " + pointer_), pointer(std::move(pointer_))
    {
    }
    std::string pointer;
};

struct SamplePlan {
    enum class Kind { grid, random } kind = Kind::grid;
    size_t grid_per_axis = 101;
    size_t random_count = 1000;
    std::uint64_t seed = 0;

    std::vector<contact::Sample> make(size_t n_params) const;
};

struct EmbedInput {
    contact::ContactPresentation presentation;
    SamplePlan samples;
};

// {"params": [...], "pairs": [["expr","expr"],...],
//  "form": "two_xdy"|"antisymmetric",
//  "samples": {"grid": d} | {"random": count, "seed": int}}
EmbedInput embed_input_from_json(const nlohmann::json& j);

// {"matrix": [[entry,...],...]} with entry a number or [re, im].
gauss::ComplexQuadraticForm quadratic_form_from_json(const nlohmann::json& j);

} // namespace szego

#endif
