#include "szego/embed_json.hpp"
#include "szego/koszul.hpp"
#include "szego/op_grammar.hpp"
#include "szego/suites.hpp"
#include "szego/trace.hpp"
#include "szego/zeta_numeric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::ordered_json;

bool log_enabled()
{
    static const bool enabled = [] {
        const char* v = std::getenv("SZEGO_TRACE_LOG");
        return v != nullptr && *v != '\0' && std::string(v) != "0";
    }();
    return enabled;
}

void log_line(const std::string& line)
{
    if (log_enabled())
        std::cerr << "[szego-trace] " << line << "\n";
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << "\n";
    } else {
        std::ofstream os(out_path);
        if (!os)
            throw std::runtime_error("cannot open output file '" + out_path + "'");
        os << text;
        if (!text.empty() && text.back() != '\n')
            os << "\n";
    }
}

std::string format_double(double v)
{
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

// "3" or "1..6"
std::pair<unsigned, unsigned> parse_range(const std::string& text)
{
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        unsigned v = static_cast<unsigned>(std::stoul(text));
        return {v, v};
    }
    unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
    unsigned hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
    if (hi < lo)
        throw CLI::ValidationError("range upper bound below lower bound");
    return {lo, hi};
}

struct CommonFlags {
    std::string format = "text";
    std::string out;
    double tol = 1e-8;
};

void add_common(CLI::App* cmd, CommonFlags& flags)
{
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", flags.out, "Write the report to a file instead of stdout");
}

int run_res(const std::string& op_spec, unsigned n, int poles_depth, const CommonFlags& flags)
{
    auto t0 = std::chrono::steady_clock::now();
    szego::RhoExpr op = szego::parse_op_spec(op_spec);
    szego::SphereModel sphere = szego::SphereModel::make(n);

    szego::Rational exact = szego::residual_trace(op, sphere);
    szego::Rational log_value = szego::log_trace(op, sphere);
    double numeric = szego::residue_numeric(op, sphere);
    bool pass = exact == log_value &&
                std::abs(numeric - szego::to_double(exact)) <=
                    flags.tol * std::max(1.0, std::abs(szego::to_double(exact)));

    std::vector<szego::PoleData> poles;
    std::vector<double> pole_numeric;
    if (poles_depth > 0) {
        poles = szego::poles_and_residues(op, sphere, poles_depth);
        for (const auto& p : poles)
            pole_numeric.push_back(szego::residue_numeric(op, sphere, 0, p.location));
    }
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    log_line("res " + op_spec + " on n=" + std::to_string(n) + " took " + format_double(ms) +
             " ms");

    if (flags.format == "json") {
        ordered_json j;
        j["command"] = "res";
        j["op"] = op_spec;
        j["n"] = n;
        j["exact"] = szego::to_string(exact);
        j["numeric"] = numeric;
        if (poles_depth > 0) {
            ordered_json arr = ordered_json::array();
            for (size_t i = 0; i < poles.size(); ++i) {
                ordered_json p;
                p["s"] = poles[i].location;
                p["residue"] = szego::to_string(poles[i].residue);
                p["numeric"] = pole_numeric[i];
                arr.push_back(std::move(p));
            }
            j["poles"] = std::move(arr);
        }
        j["status"] = pass ? "pass" : "fail";
        emit(j.dump(2), flags.out);
    } else {
        std::ostringstream os;
        os << "operator  " << op.str() << "\n";
        os << "sphere    S^" << (2 * n - 1) << "  (n = " << n << ")\n";
        os << "exact     " << szego::to_string(exact) << "\n";
        os << "numeric   " << format_double(numeric) << "\n";
        if (poles_depth > 0) {
            os << "poles     s        residue      numeric\n";
            for (size_t i = 0; i < poles.size(); ++i)
                os << "          " << std::left << std::setw(8) << poles[i].location << " "
                   << std::setw(12) << szego::to_string(poles[i].residue) << " "
                   << format_double(pole_numeric[i]) << "\n";
        }
        os << "status    " << (pass ? "pass" : "fail") << "\n";
        os << "time      " << std::fixed << std::setprecision(1) << ms << " ms\n";
        emit(os.str(), flags.out);
    }
    return pass ? 0 : 1;
}

int run_verify(const std::string& suite, const szego::SuiteOptions& opts,
               const CommonFlags& flags)
{
    std::vector<szego::SuiteReport> reports;
    if (suite == "all")
        reports = szego::run_all_suites(opts);
    else
        reports.push_back(szego::run_suite(suite, opts));

    bool all_pass = true;
    size_t total = 0, failed = 0;
    for (const auto& r : reports) {
        all_pass = all_pass && r.all_pass();
        total += r.cases.size();
        failed += r.failures();
        for (const auto& c : r.cases)
            log_line((c.pass ? "pass " : "FAIL ") + c.key + ": " + c.detail);
    }

    if (flags.format == "json") {
        ordered_json j;
        j["command"] = "verify";
        j["suite"] = suite;
        j["seed"] = opts.seed;
        ordered_json suites = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json s;
            s["name"] = r.name;
            s["passed"] = r.cases.size() - r.failures();
            s["failed"] = r.failures();
            ordered_json cases = ordered_json::array();
            for (const auto& c : r.cases) {
                ordered_json cj;
                cj["key"] = c.key;
                cj["pass"] = c.pass;
                cj["detail"] = c.detail;
                cases.push_back(std::move(cj));
            }
            s["cases"] = std::move(cases);
            suites.push_back(std::move(s));
        }
        j["suites"] = std::move(suites);
        j["status"] = all_pass ? "pass" : "fail";
        emit(j.dump(2), flags.out);
    } else {
        std::ostringstream os;
        for (const auto& r : reports) {
            os << "suite " << std::left << std::setw(20) << r.name << " "
               << (r.cases.size() - r.failures()) << "/" << r.cases.size() << " passed\n";
            for (const auto& c : r.cases)
                if (!c.pass)
                    os << "  FAIL " << c.key << ": " << c.detail << "\n";
        }
        os << "total " << (total - failed) << "/" << total << " passed: "
           << (all_pass ? "pass" : "fail") << "\n";
        emit(os.str(), flags.out);
    }
    return all_pass ? 0 : 1;
}

ordered_json sample_to_json(const szego::contact::Sample& s)
{
    ordered_json arr = ordered_json::array();
    for (double v : s)
        arr.push_back(v);
    return arr;
}

int run_embed(const std::string& input_path, long radius_flag, size_t grid_flag, double tol,
              const CommonFlags& flags)
{
    std::ifstream is(input_path);
    if (!is)
        throw std::runtime_error("cannot read input file '" + input_path + "'");
    nlohmann::json input_json = nlohmann::json::parse(is);
    szego::EmbedInput input = szego::embed_input_from_json(input_json);
    if (grid_flag > 0) {
        input.samples.kind = szego::SamplePlan::Kind::grid;
        input.samples.grid_per_axis = grid_flag;
    }
    auto samples = input.samples.make(input.presentation.params.size());

    szego::contact::ContactPresentation anti =
        input.presentation.form == szego::contact::FormKind::two_xdy
            ? szego::contact::antisymmetrize(input.presentation)
            : input.presentation;
    std::optional<long> radius;
    if (radius_flag > 0)
        radius = radius_flag;
    szego::contact::Embedding emb = szego::contact::pad_to_sphere(anti, radius, samples);

    bool pass = true;
    std::string failure;
    szego::contact::EmbedReport report;
    try {
        report = szego::contact::verify_embedding(emb, input.presentation, samples, tol);
    } catch (const szego::contact::ToleranceExceeded& e) {
        pass = false;
        failure = e.what();
        report.worst_sample = e.worst_sample;
    }

    if (flags.format == "json") {
        ordered_json j;
        j["command"] = "embed";
        j["input"] = input_path;
        j["pairs"] = emb.target_pairs.size();
        j["radius"] = szego::to_string(emb.radius);
        j["samples"] = samples.size();
        j["tol"] = tol;
        if (pass) {
            j["max_form_deviation"] = report.max_form_deviation;
            j["max_sphere_deviation"] = report.max_sphere_deviation;
        } else {
            j["error"] = failure;
            j["worst_sample"] = sample_to_json(report.worst_sample);
        }
        j["status"] = pass ? "pass" : "fail";
        emit(j.dump(2), flags.out);
    } else {
        std::ostringstream os;
        os << "embedding  " << emb.target_pairs.size()
           << " pairs, radius R = " << szego::to_string(emb.radius) << "\n";
        os << "samples    " << samples.size() << ", tol " << tol << "\n";
        if (pass) {
            os << "pullback   max deviation " << format_double(report.max_form_deviation)
               << "\n";
            os << "sphere     max deviation " << format_double(report.max_sphere_deviation)
               << "\n";
        } else {
            os << "failure    " << failure << "\n";
        }
        os << "status     " << (pass ? "pass" : "fail") << "\n";
        emit(os.str(), flags.out);
    }
    return pass ? 0 : 1;
}

int run_gaussian(const std::string& input_path, double tol, const CommonFlags& flags)
{
    std::ifstream is(input_path);
    if (!is)
        throw std::runtime_error("cannot read input file '" + input_path + "'");
    nlohmann::json input_json = nlohmann::json::parse(is);
    szego::gauss::ComplexQuadraticForm form = szego::quadratic_form_from_json(input_json);

    std::complex<double> closed = szego::gauss::gaussian_integral_closed(form);
    std::complex<double> numeric = szego::gauss::gaussian_integral_numeric(form, tol / 4);
    double diff = std::abs(closed - numeric);
    bool pass = diff <= tol;

    if (flags.format == "json") {
        ordered_json j;
        j["command"] = "gaussian";
        j["input"] = input_path;
        j["dim"] = form.dim();
        j["closed"] = {closed.real(), closed.imag()};
        j["quadrature"] = {numeric.real(), numeric.imag()};
        j["difference"] = diff;
        j["tol"] = tol;
        j["status"] = pass ? "pass" : "fail";
        emit(j.dump(2), flags.out);
    } else {
        std::ostringstream os;
        os << "dimension   " << form.dim() << "\n";
        os << "closed      " << format_double(closed.real()) << " "
           << (closed.imag() < 0 ? "- " : "+ ") << format_double(std::abs(closed.imag()))
           << "i\n";
        os << "quadrature  " << format_double(numeric.real()) << " "
           << (numeric.imag() < 0 ? "- " : "+ ") << format_double(std::abs(numeric.imag()))
           << "i\n";
        os << "difference  " << format_double(diff) << "\n";
        os << "status      " << (pass ? "pass" : "fail") << "\n";
        emit(os.str(), flags.out);
    }
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Residual and logarithmic traces of Toeplitz operators on sphere Hardy "
                 "spaces, with contact-embedding and Gaussian model checks"};
    app.require_subcommand(1);

    std::string op_spec;
    unsigned res_n = 1;
    int poles_depth = 0;
    CommonFlags res_flags;
    CLI::App* res = app.add_subcommand("res", "Residual trace of an operator (exact + numeric)");
    res->add_option("--op", op_spec, "Operator spec, e.g. \"(rho)^-3\"")->required();
    res->add_option("--n", res_n, "Sphere parameter n (sphere S^(2n-1))")
        ->required()
        ->check(CLI::Range(1u, 12u));
    res->add_option("--poles", poles_depth, "Also report poles down to s = -K+1");
    res->add_option("--tol", res_flags.tol, "Exact/numeric agreement tolerance")
        ->capture_default_str();
    add_common(res, res_flags);

    std::string suite;
    std::string n_range = "1..6";
    std::string d_range = "1..3";
    szego::SuiteOptions opts;
    CommonFlags verify_flags;
    CLI::App* verify = app.add_subcommand("verify", "Run a named verification suite");
    std::vector<std::string> allowed = szego::suite_names();
    allowed.push_back("all");
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(allowed));
    verify->add_option("--n", n_range, "Sphere parameter range, e.g. 1..6")
        ->capture_default_str();
    verify->add_option("--d", d_range, "Codimension range, e.g. 1..3")->capture_default_str();
    verify->add_option("--order", opts.order, "Series order for the identity suite")
        ->capture_default_str();
    verify->add_option("--count", opts.count, "Random case count")->capture_default_str();
    verify->add_option("--seed", opts.seed, "Random seed")->capture_default_str();
    verify->add_option("--jobs", opts.jobs, "Parallel case evaluation")->capture_default_str();
    verify->add_option("--tol", opts.tol, "Numeric tolerance")->capture_default_str();
    add_common(verify, verify_flags);

    std::string embed_input;
    long embed_radius = 0;
    size_t embed_grid = 0;
    double embed_tol = 1e-9;
    CommonFlags embed_flags;
    CLI::App* embed =
        app.add_subcommand("embed", "Verify a contact presentation embeds in a sphere");
    embed->add_option("input", embed_input, "Presentation JSON file")->required();
    embed->add_option("--radius", embed_radius, "Force the sphere radius (default: auto)");
    embed->add_option("--grid", embed_grid, "Override sample grid density per axis");
    embed->add_option("--tol", embed_tol, "Certification tolerance")->capture_default_str();
    add_common(embed, embed_flags);

    std::string gaussian_input;
    double gaussian_tol = 1e-6;
    CommonFlags gaussian_flags;
    CLI::App* gaussian =
        app.add_subcommand("gaussian", "Closed-form vs quadrature Gaussian integral");
    gaussian->add_option("input", gaussian_input, "Matrix JSON file")->required();
    gaussian->add_option("--tol", gaussian_tol, "Agreement tolerance")->capture_default_str();
    add_common(gaussian, gaussian_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (res->parsed())
            return run_res(op_spec, res_n, poles_depth, res_flags);
        if (verify->parsed()) {
            std::tie(opts.n_lo, opts.n_hi) = parse_range(n_range);
            std::tie(opts.d_lo, opts.d_hi) = parse_range(d_range);
            return run_verify(suite, opts, verify_flags);
        }
        if (embed->parsed())
            return run_embed(embed_input, embed_radius, embed_grid, embed_tol, embed_flags);
        if (gaussian->parsed())
            return run_gaussian(gaussian_input, gaussian_tol, gaussian_flags);
    } catch (const szego::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "  " << op_spec << "\n  " << std::string(e.column - 1, ' ') << "^\n";
        return 2;
    } catch (const szego::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const szego::PoleProximity& e) {
        std::cerr << "warning: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
