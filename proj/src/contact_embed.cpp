#include "szego/contact_embed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace szego::contact {

std::vector<Sample> grid_samples(size_t n_params, size_t per_axis)
{
    if (per_axis < 2)
        per_axis = 2;
    std::vector<Sample> samples;
    std::vector<size_t> idx(n_params, 0);
    for (;;) {
        Sample s(n_params);
        for (size_t i = 0; i < n_params; ++i)
            s[i] = -1.0 + 2.0 * static_cast<double>(idx[i]) / static_cast<double>(per_axis - 1);
        samples.push_back(std::move(s));
        size_t axis = 0;
        while (axis < n_params && ++idx[axis] == per_axis) {
            idx[axis] = 0;
            ++axis;
        }
        if (axis == n_params)
            break;
    }
    return samples;
}

std::vector<Sample> random_samples(size_t n_params, size_t count, std::uint64_t seed)
{
    // mt19937_64 output mapped to [0,1) by hand so the stream is
    // bit-identical across standard libraries.
    std::mt19937_64 rng(seed);
    std::vector<Sample> samples;
    samples.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        Sample s(n_params);
        for (size_t j = 0; j < n_params; ++j) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            s[j] = 2.0 * u - 1.0;
        }
        samples.push_back(std::move(s));
    }
    return samples;
}

double form_value(const ContactPresentation& p, const Sample& at, size_t dir)
{
    double acc = 0;
    for (const auto& [x, y] : p.pairs) {
        Dual xv = x.eval_dual(at, dir);
        Dual yv = y.eval_dual(at, dir);
        if (p.form == FormKind::two_xdy)
            acc += 2.0 * xv.v * yv.d;
        else
            acc += xv.v * yv.d - yv.v * xv.d;
    }
    return acc;
}

namespace {

double form_value_pairs(const std::vector<std::pair<Expr, Expr>>& pairs, const Sample& at,
                        size_t dir)
{
    double acc = 0;
    for (const auto& [x, y] : pairs) {
        Dual xv = x.eval_dual(at, dir);
        Dual yv = y.eval_dual(at, dir);
        acc += xv.v * yv.d - yv.v * xv.d;
    }
    return acc;
}

double square_sum(const std::vector<std::pair<Expr, Expr>>& pairs, const Sample& at)
{
    double acc = 0;
    for (const auto& [x, y] : pairs) {
        double xv = x.eval(at);
        double yv = y.eval(at);
        acc += xv * xv + yv * yv;
    }
    return acc;
}

} // namespace

ContactPresentation antisymmetrize(const ContactPresentation& p)
{
    if (p.form != FormKind::two_xdy)
        throw std::invalid_argument("presentation is already antisymmetric");
    if (p.pairs.empty())
        throw EmptyPresentation("presentation has no coordinate pairs");

    // New first pair (1, sum x_j y_j): d(sum x_j y_j) supplies the
    // x dy + y dx half that turns sum x dy - y dx into 2 sum x dy.
    Expr cross = Expr::constant(0.0);
    for (const auto& [x, y] : p.pairs)
        cross = cross + x * y;

    ContactPresentation out;
    out.params = p.params;
    out.form = FormKind::antisymmetric;
    out.pairs.reserve(p.pairs.size() + 1);
    out.pairs.emplace_back(Expr::constant(1.0), cross);
    for (const auto& pair : p.pairs)
        out.pairs.push_back(pair);
    return out;
}

Embedding pad_to_sphere(const ContactPresentation& p, std::optional<long> radius,
                        const std::vector<Sample>& samples)
{
    if (p.form != FormKind::antisymmetric)
        throw std::invalid_argument("pad_to_sphere requires an antisymmetric presentation");
    if (p.pairs.empty())
        throw EmptyPresentation("presentation has no coordinate pairs");
    if (samples.empty())
        throw std::invalid_argument("pad_to_sphere needs sample points");

    double max_sum = 0;
    for (const auto& s : samples)
        max_sum = std::max(max_sum, square_sum(p.pairs, s));

    long r;
    if (radius) {
        r = *radius;
        if (r <= 0)
            throw std::invalid_argument("radius must be positive");
    } else {
        r = 1;
        while (static_cast<double>(r) * static_cast<double>(r) < max_sum + 1.0)
            ++r;
    }

    Embedding e;
    e.radius = Rational(r);
    e.target_pairs = p.pairs;

    Expr radicand = Expr::constant(static_cast<double>(r) * static_cast<double>(r));
    for (const auto& [x, y] : p.pairs)
        radicand = radicand - (x * x + y * y);

    // Identically-zero radicand: the presentation already lies on the
    // radius-r sphere (e.g. the standard S^3 chart); nothing to append.
    constexpr double kZeroTol = 1e-12;
    double rad_min = std::numeric_limits<double>::infinity();
    double rad_max = -std::numeric_limits<double>::infinity();
    for (const auto& s : samples) {
        double v = radicand.eval(s);
        rad_min = std::min(rad_min, v);
        rad_max = std::max(rad_max, v);
    }
    if (std::abs(rad_min) <= kZeroTol && std::abs(rad_max) <= kZeroTol)
        return e;
    if (rad_min <= kZeroTol)
        throw RadicandNonpositive("radius " + std::to_string(r) +
                                  " too small: radicand reaches " + std::to_string(rad_min));

    e.target_pairs.emplace_back(Expr::sqrt_of(radicand), Expr::constant(0.0));
    return e;
}

EmbedReport verify_embedding(const Embedding& e, const ContactPresentation& p,
                             const std::vector<Sample>& samples, double tol)
{
    if (samples.empty())
        throw std::invalid_argument("verify_embedding needs sample points");

    EmbedReport report;
    report.samples_checked = samples.size();
    double r2 = to_double(e.radius * e.radius);
    Sample worst;
    for (const auto& s : samples) {
        for (size_t dir = 0; dir < p.params.size(); ++dir) {
            double target = form_value_pairs(e.target_pairs, s, dir);
            double source = form_value(p, s, dir);
            double dev = std::abs(target - source);
            if (dev > report.max_form_deviation) {
                report.max_form_deviation = dev;
                worst = s;
            }
        }
        double sphere_dev = std::abs(square_sum(e.target_pairs, s) - r2);
        if (sphere_dev > report.max_sphere_deviation) {
            report.max_sphere_deviation = sphere_dev;
            if (sphere_dev > report.max_form_deviation)
                worst = s;
        }
    }
    report.worst_sample = worst;
    report.pass = report.max_form_deviation <= tol && report.max_sphere_deviation <= tol;
    if (!report.pass) {
        std::string what = "embedding check failed: form deviation " +
                           std::to_string(report.max_form_deviation) + ", sphere deviation " +
                           std::to_string(report.max_sphere_deviation) + " exceeds tol " +
                           std::to_string(tol);
        throw ToleranceExceeded(what, worst);
    }
    return report;
}

} // namespace szego::contact
