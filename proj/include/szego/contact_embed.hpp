#ifndef SZEGO_CONTACT_EMBED_HPP
#define SZEGO_CONTACT_EMBED_HPP

#include "szego/contact_expr.hpp"
#include "szego/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace szego::contact {

enum class FormKind {
    antisymmetric, // sum x_j dy_j - y_j dx_j
    two_xdy,       // 2 sum x_j dy_j
};

// Desk-scale contact presentation: a chart with named parameters and
// expression pairs; the global topology of the base manifold is not
// represented, only the algebra certifiable at sample points.
struct ContactPresentation {
    std::vector<std::string> params;
    std::vector<std::pair<Expr, Expr>> pairs;
    FormKind form = FormKind::antisymmetric;
};

struct Embedding {
    std::vector<std::pair<Expr, Expr>> target_pairs;
    Rational radius;
};

struct EmptyPresentation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RadicandNonpositive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ToleranceExceeded : std::runtime_error {
    ToleranceExceeded(const std::string& what, std::vector<double> worst_sample_)
        : std::runtime_error(what), worst_sample(std::move(worst_sample_))
    {
    }
    std::vector<double> worst_sample;
};

using Sample = std::vector<double>;

// Sample plans over the chart cube [-1, 1]^params.
std::vector<Sample> grid_samples(size_t n_params, size_t per_axis);
std::vector<Sample> random_samples(size_t n_params, size_t count, std::uint64_t seed);

// Value of the presentation's 1-form at a sample along coordinate
// direction dir (dual-number evaluation, not finite differences).
double form_value(const ContactPresentation& p, const Sample& at, size_t dir);

// Rewrites 2 sum x_j dy_j as sum x_j dy_j - y_j dx_j by prepending the
// pair (1, sum x_j y_j); exact algebraic identity, not an approximation.
ContactPresentation antisymmetrize(const ContactPresentation& p);

// Appends the pair (sqrt(R^2 - sum x^2+y^2), 0), which contributes
// nothing to the pullback and lands the chart on the radius-R sphere.
// With no radius given, picks the smallest integer R with
// R^2 >= max_over_samples + 1. If the radicand is identically zero on the
// samples the presentation already sits on the sphere and no pair is
// added.
Embedding pad_to_sphere(const ContactPresentation& p, std::optional<long> radius,
                        const std::vector<Sample>& samples);

struct EmbedReport {
    double max_form_deviation = 0;
    double max_sphere_deviation = 0;
    Sample worst_sample;
    size_t samples_checked = 0;
    bool pass = false;
};

// Certifies, at every sample and coordinate direction, that the target
// sphere form pulls back to the presentation's form and that the target
// lies on the radius-R sphere, both within tol. Throws ToleranceExceeded
// with the worst offending sample on failure.
EmbedReport verify_embedding(const Embedding& e, const ContactPresentation& p,
                             const std::vector<Sample>& samples, double tol);

} // namespace szego::contact

#endif
