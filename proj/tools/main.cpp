// borderlim: exact limit machinery for coordinate spaces on the command
// line. Exit codes: 0 mathematical success, 1 mathematical negative,
// 2 input error, 3 step budget exhausted.

#include "borderlim/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace borderlim;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kResourceLimit = 3;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw parse_error(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

PolyMap require_poly_map(const ParsedMap& parsed, std::optional<int> level_flag) {
    if (parsed.poly_map && !level_flag) return *parsed.poly_map;
    int level = level_flag ? *level_flag : (parsed.level ? *parsed.level : -1);
    if (level < 0) throw parse_error("the map needs a level (in the file or via --level)");
    if (parsed.slot_map) return PolyMap::from_slot_map(*parsed.slot_map, level);
    if (parsed.poly_map && parsed.poly_map->source().level() == level) return *parsed.poly_map;
    throw parse_error("a components map cannot be re-leveled; regenerate the file");
}

struct CommandSettings {
    bool as_json = false;
    std::uint64_t seed = 12345;
};

int run_strength_quad(const std::string& form_text, const CommandSettings& set) {
    Poly f = Poly::parse(form_text);
    int s = quadratic_strength(f);
    if (set.as_json)
        emit(json{{"strength", s}});
    else
        std::cout << s << "\n";
    return kOk;
}

int run_certify(const std::string& form_text, const std::string& cert_path,
                const CommandSettings& set) {
    Poly f = Poly::parse(form_text);
    Certificate cert = certificate_from_json(read_json_file(cert_path));
    CertificateCheck check = verify_border_certificate(f, cert);

    json product = json::object();
    for (const auto& [e, p] : check.product.coeffs()) {
        json slots = json::array();
        for (const auto& fm : p.forms()) slots.push_back(fm.to_string());
        product[std::to_string(e)] = slots;
    }
    if (check.accepted()) {
        if (set.as_json)
            emit(json{{"status", "accepted"}, {"s", check.sigma_witness}, {"product", product}});
        else {
            std::cout << "accepted s=" << check.sigma_witness << "\n";
            std::cout << "P(t) coefficients:\n";
            for (const auto& [e, p] : check.product.coeffs())
                std::cout << "  t^" << e << ": " << p.form(0).to_string() << "\n";
        }
        return kOk;
    }
    std::string reason = check.status == CertificateCheck::Status::RejectedPole
                             ? "PoleAtZero"
                             : "WrongLimit";
    if (set.as_json)
        emit(json{{"status", "rejected"}, {"reason", reason}, {"product", product}});
    else
        std::cout << "rejected " << reason << "\n";
    return kNegative;
}

int run_lnm(const std::string& map_path, int n, std::optional<int> m, std::optional<int> level,
            const CommandSettings& set) {
    ParsedMap parsed = map_from_json(read_json_file(map_path));
    ConstraintSystem sys;
    if (parsed.slot_map && !level) {
        int mm = m ? *m : stabilization_bound(*parsed.slot_map, n);
        sys = lnm_constraints(*parsed.slot_map, n, mm);
    } else {
        PolyMap phi = require_poly_map(parsed, level);
        int mm = m ? *m : stabilization_bound(phi, n);
        sys = lnm_constraints(phi, n, mm);
    }
    if (set.as_json) {
        emit(constraint_system_to_json(sys));
    } else {
        std::cout << "constraints (" << sys.constraints.size() << "):\n";
        for (const auto& c : sys.constraints) std::cout << "  " << c.to_string() << " = 0\n";
        std::cout << "evaluation:\n";
        for (const auto& e : sys.evaluation) std::cout << "  " << e.to_string() << "\n";
    }
    return kOk;
}

int run_limit(const std::string& laurent_path, const CommandSettings& set) {
    LaurentPoint y = laurent_from_json(read_json_file(laurent_path));
    try {
        Point value = limit_at_zero(y);
        if (set.as_json)
            emit(json{{"status", "ok"}, {"value", point_to_json(value)}});
        else
            for (const auto& f : value.forms()) std::cout << f.to_string() << "\n";
        return kOk;
    } catch (const pole_at_zero& e) {
        if (set.as_json)
            emit(json{{"status", "pole"}, {"min_exponent", e.min_exponent}});
        else
            std::cout << "pole at t=0 (least exponent " << e.min_exponent << ")\n";
        return kNegative;
    }
}

int run_implicitize(const std::string& map_path, std::optional<int> level, long long budget,
                    const CommandSettings& set) {
    ParsedMap parsed = map_from_json(read_json_file(map_path));
    PolyMap phi = require_poly_map(parsed, level);
    GroebnerOptions opts;
    if (budget > 0) opts.step_budget = budget;
    Ideal image = implicitize(phi, opts);
    if (set.as_json) {
        emit(ideal_to_json(image));
    } else {
        if (image.basis->empty()) {
            std::cout << "zero ideal (the image closure is the whole target)\n";
        } else {
            for (const auto& g : *image.basis) std::cout << g.to_string() << " = 0\n";
        }
    }
    return kOk;
}

int run_sigma_search(const std::string& form_text, int r, int n_max, const CommandSettings& set) {
    Poly f = Poly::parse(form_text);
    SigmaSearchOptions opts;
    opts.n_max = n_max;
    opts.seed = set.seed;
    SigmaSearchResult res = sigma_search(f, r, opts);
    if (res.outcome == SigmaSearchResult::Outcome::Witnessed) {
        if (set.as_json)
            emit(json{{"status", "witnessed"},
                      {"s", res.s},
                      {"certificate", certificate_to_json(*res.certificate)},
                      {"note", res.note}});
        else
            std::cout << "witnessed s=" << res.s << " (" << res.note << ")\n";
        return kOk;
    }
    if (set.as_json)
        emit(json{{"status", "inconclusive"}, {"note", res.note}});
    else
        std::cout << "inconclusive: " << res.note << "\n";
    return kNegative;
}

int run_line_curve(const std::string& x_path, const std::string& y_path, const std::string& t0_text,
                   const CommandSettings& set) {
    Point x = point_from_json(read_json_file(x_path));
    Point y = point_from_json(read_json_file(y_path));
    auto t0 = parse_rational(t0_text);
    if (!t0) throw parse_error("t0 must be a rational number");
    CurveExpansion e = expand_at(line_curve(x, y), *t0);
    if (set.as_json)
        emit(json{{"at", rational_to_string(*t0)}, {"series", laurent_to_json(e.series)}});
    else {
        std::cout << "value: ";
        for (const auto& f : e.series.coeff(0).forms()) std::cout << f.to_string() << "  ";
        std::cout << "\ndirection: ";
        for (const auto& f : e.series.coeff(1).forms()) std::cout << f.to_string() << "  ";
        std::cout << "\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact limit machinery for coordinate spaces"};
    app.require_subcommand(1);

    CommandSettings set;
    app.add_flag("--json", set.as_json, "machine-readable output");
    app.add_option("--seed", set.seed, "seed for the randomized searches");

    std::string form_text, map_path, cert_path, laurent_path, x_path, y_path, t0_text = "0";
    int n = 0, r = 1, n_max = 1;
    std::optional<int> m, level;
    long long budget = 0;

    auto* quad = app.add_subcommand("strength-quad", "strength of a quadratic form");
    quad->add_option("form", form_text, "the form, e.g. \"x1*x2 + x3*x4\"")->required();

    auto* certify = app.add_subcommand("certify", "verify a border certificate");
    certify->add_option("--form", form_text)->required();
    certify->add_option("--cert", cert_path)->required();

    auto* lnm = app.add_subcommand("lnm", "constraint system of a map on Laurent points");
    lnm->add_option("--map", map_path)->required();
    lnm->add_option("--n", n, "pole depth")->required();
    lnm->add_option("--m", m, "upper degree (defaults to the stabilization bound)");
    lnm->add_option("--level", level, "expand at a level instead of slot symbols");

    auto* limit = app.add_subcommand("limit", "value of a Laurent point at t=0");
    limit->add_option("--laurent", laurent_path)->required();

    auto* impl = app.add_subcommand("implicitize", "generators of an image closure");
    impl->add_option("--map", map_path)->required();
    impl->add_option("--level", level);
    impl->add_option("--budget", budget, "step budget override");

    auto* sigma = app.add_subcommand("sigma-search", "search for a border certificate");
    sigma->add_option("--form", form_text)->required();
    sigma->add_option("--r", r, "number of products")->required();
    sigma->add_option("--n-max", n_max, "largest pole depth to try");

    auto* curve = app.add_subcommand("line-curve", "expand the line through two points");
    curve->add_option("--x", x_path)->required();
    curve->add_option("--y", y_path)->required();
    curve->add_option("--t0", t0_text, "expansion center (rational)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (quad->parsed()) return run_strength_quad(form_text, set);
        if (certify->parsed()) return run_certify(form_text, cert_path, set);
        if (lnm->parsed()) return run_lnm(map_path, n, m, level, set);
        if (limit->parsed()) return run_limit(laurent_path, set);
        if (impl->parsed()) return run_implicitize(map_path, level, budget, set);
        if (sigma->parsed()) return run_sigma_search(form_text, r, n_max, set);
        if (curve->parsed()) return run_line_curve(x_path, y_path, t0_text, set);
    } catch (const resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
