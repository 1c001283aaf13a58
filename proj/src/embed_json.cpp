#include "szego/embed_json.hpp"

namespace szego {

namespace {

const nlohmann::json& expect(const nlohmann::json& j, const std::string& key,
                             const std::string& at)
{
    if (!j.is_object() || !j.contains(key))
        throw SchemaError("missing field '" + key + "'", at.empty() ? "/" : at);
    return j.at(key);
}

} // namespace

std::vector<contact::Sample> SamplePlan::make(size_t n_params) const
{
    if (kind == Kind::grid)
        return contact::grid_samples(n_params, grid_per_axis);
    return contact::random_samples(n_params, random_count, seed);
}

EmbedInput embed_input_from_json(const nlohmann::json& j)
{
    EmbedInput input;

    const auto& params = expect(j, "params", "");
    if (!params.is_array() || params.empty())
        throw SchemaError("'params' must be a nonempty array", "/params");
    for (size_t i = 0; i < params.size(); ++i) {
        if (!params[i].is_string())
            throw SchemaError("parameter name must be a string", "/params/" + std::to_string(i));
        input.presentation.params.push_back(params[i].get<std::string>());
    }

    const auto& pairs = expect(j, "pairs", "");
    if (!pairs.is_array())
        throw SchemaError("'pairs' must be an array", "/pairs");
    for (size_t i = 0; i < pairs.size(); ++i) {
        const auto& pair = pairs[i];
        std::string at = "/pairs/" + std::to_string(i);
        if (!pair.is_array() || pair.size() != 2)
            throw SchemaError("pair must be a two-element array", at);
        contact::Expr exprs[2];
        for (size_t k = 0; k < 2; ++k) {
            std::string at_k = at + "/" + std::to_string(k);
            if (!pair[k].is_string())
                throw SchemaError("pair entry must be an expression string", at_k);
            try {
                exprs[k] = contact::Expr::parse(pair[k].get<std::string>(),
                                                input.presentation.params);
            } catch (const contact::ExprParseError& e) {
                throw SchemaError(std::string("bad expression: ") + e.what(), at_k);
            }
        }
        input.presentation.pairs.emplace_back(exprs[0], exprs[1]);
    }

    const auto& form = expect(j, "form", "");
    if (!form.is_string())
        throw SchemaError("'form' must be a string", "/form");
    std::string form_name = form.get<std::string>();
    if (form_name == "two_xdy")
        input.presentation.form = contact::FormKind::two_xdy;
    else if (form_name == "antisymmetric")
        input.presentation.form = contact::FormKind::antisymmetric;
    else
        throw SchemaError("'form' must be 'two_xdy' or 'antisymmetric'", "/form");

    if (j.contains("samples")) {
        const auto& samples = j.at("samples");
        if (!samples.is_object())
            throw SchemaError("'samples' must be an object", "/samples");
        if (samples.contains("grid")) {
            if (!samples.at("grid").is_number_integer() || samples.at("grid").get<long>() < 1)
                throw SchemaError("'grid' must be a positive integer", "/samples/grid");
            input.samples.kind = SamplePlan::Kind::grid;
            input.samples.grid_per_axis = samples.at("grid").get<size_t>();
        } else if (samples.contains("random")) {
            if (!samples.at("random").is_number_integer() ||
                samples.at("random").get<long>() < 1)
                throw SchemaError("'random' must be a positive integer", "/samples/random");
            input.samples.kind = SamplePlan::Kind::random;
            input.samples.random_count = samples.at("random").get<size_t>();
            if (samples.contains("seed")) {
                if (!samples.at("seed").is_number_integer())
                    throw SchemaError("'seed' must be an integer", "/samples/seed");
                input.samples.seed = samples.at("seed").get<std::uint64_t>();
            }
        } else {
            throw SchemaError("'samples' needs 'grid' or 'random'", "/samples");
        }
    }
    return input;
}

gauss::ComplexQuadraticForm quadratic_form_from_json(const nlohmann::json& j)
{
    const auto& rows = expect(j, "matrix", "");
    if (!rows.is_array() || rows.empty())
        throw SchemaError("'matrix' must be a nonempty array of rows", "/matrix");
    size_t d = rows.size();
    Eigen::MatrixXcd m(static_cast<int>(d), static_cast<int>(d));
    for (size_t i = 0; i < d; ++i) {
        std::string at_row = "/matrix/" + std::to_string(i);
        if (!rows[i].is_array() || rows[i].size() != d)
            throw SchemaError("matrix row must have " + std::to_string(d) + " entries", at_row);
        for (size_t k = 0; k < d; ++k) {
            const auto& entry = rows[i][k];
            std::string at = at_row + "/" + std::to_string(k);
            if (entry.is_number()) {
                m(static_cast<int>(i), static_cast<int>(k)) = entry.get<double>();
            } else if (entry.is_array() && entry.size() == 2 && entry[0].is_number() &&
                       entry[1].is_number()) {
                m(static_cast<int>(i), static_cast<int>(k)) =
                    std::complex<double>(entry[0].get<double>(), entry[1].get<double>());
            } else {
                throw SchemaError("matrix entry must be a number or [re, im]", at);
            }
        }
    }
    try {
        return gauss::ComplexQuadraticForm::from_matrix(std::move(m));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what(), "/matrix");
    }
}

} // namespace szego
