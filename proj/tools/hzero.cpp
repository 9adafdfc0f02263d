#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hzero/counting.hpp"
#include "hzero/cyclic_shift.hpp"
#include "hzero/hecke0.hpp"
#include "hzero/inductive_product.hpp"
#include "hzero/json_io.hpp"
#include "hzero/stair_classes.hpp"
#include "hzero/verify.hpp"

using namespace hzero;

namespace {

struct Options {
    bool force = false;
    std::string out;
    int n = 0;
    std::string alpha;
    std::string twist = "id";
    std::string stratum = "max";
    std::string format = "json";
    std::string suite = "all";
};

void emit(const Options& opt, const std::string& text)
{
    if (opt.out.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream file(opt.out);
    if (!file)
        throw invalid_input("cannot open " + opt.out);
    file << text << '\n';
}

void emit(const Options& opt, const Json& j)
{
    emit(opt, j.dump(2));
}

Composition maximal_alpha(const std::string& text)
{
    Composition alpha = parse_composition(text);
    if (!is_maximal(alpha))
        throw invalid_input(to_string(alpha) + " is not a maximal composition");
    return alpha;
}

int run_classes(const Options& opt)
{
    const Twist twist = parse_twist(opt.twist);
    auto classes = equiv_classes(opt.n, twist, parse_stratum(opt.stratum), opt.force);
    emit(opt, catalog_to_json(opt.n, twist, classes));
    std::cerr << classes.size() << " classes (n = " << opt.n << ", twist " << to_string(twist)
              << ", stratum " << opt.stratum << ")\n";
    return 0;
}

int run_sigma(const Options& opt)
{
    const Composition alpha = maximal_alpha(opt.alpha);
    EquivClass cls = sigma_class(alpha);
    if (opt.format == "text") {
        std::string text;
        for (const auto& p : cls.elements)
            text += cycle_string(p) + "\n";
        if (!text.empty())
            text.pop_back();
        emit(opt, text);
    } else if (opt.format == "json") {
        Json j = class_to_json(cls);
        j["strategy"] = to_string(sigma_strategy(alpha));
        j["orbit_partitions"] = orbit_histogram(cls);
        emit(opt, j);
    } else {
        throw invalid_input("unknown format '" + opt.format + "'");
    }
    std::cerr << "Sigma" << to_string(alpha) << ": " << cls.elements.size() << " elements, length "
              << cls.common_length << ", via " << to_string(sigma_strategy(alpha)) << "\n";
    return 0;
}

int run_stairform(const Options& opt)
{
    const Composition alpha = parse_composition(opt.alpha);
    emit(opt, cycle_string(stair_form(alpha)));
    return 0;
}

int run_dim(const Options& opt)
{
    if (opt.n < 0)
        throw invalid_input("n must be nonnegative");
    emit(opt, dim_center(opt.n).str());
    return 0;
}

int run_count(const Options& opt)
{
    const Composition alpha = maximal_alpha(opt.alpha);
    Json j{{"alpha", to_json(alpha)}, {"formula", nullptr}, {"enumerated", nullptr}};
    if (odd_tail_is_hook(alpha)) {
        BigInt value = size_sigma_formula(alpha);
        j["formula"] = Json::parse(value.str());
        std::cerr << "formula: " << value << "\n";
    }
    // Enumeration is attempted only when it stays small.
    const BigInt enumeration_cap = 2'000'000;
    bool feasible = j["formula"].is_null() || size_sigma_formula(alpha) <= enumeration_cap;
    if (feasible) {
        try {
            auto size = sigma_class(alpha).elements.size();
            j["enumerated"] = size;
            std::cerr << "enumerated: " << size << "\n";
        } catch (const resource_limit& e) {
            std::cerr << "enumeration skipped: " << e.what() << "\n";
        }
    }
    emit(opt, j);
    if (!j["formula"].is_null() && !j["enumerated"].is_null() && j["formula"] != j["enumerated"])
        throw consistency_error("formula and enumeration disagree");
    return 0;
}

int run_basis(const Options& opt)
{
    check_brute_force_bound(opt.n, opt.force);
    std::vector<Composition> alphas;
    if (opt.alpha.empty()) {
        alphas = enumerate_maximal(opt.n);
    } else {
        alphas.push_back(maximal_alpha(opt.alpha));
        if (alphas.front().size() != opt.n)
            throw invalid_input("|alpha| must equal n");
    }
    Json basis = Json::array();
    for (const auto& alpha : alphas) {
        HeckeElement x = t_leq_sigma(alpha, opt.n);
        basis.push_back(hecke_to_json(alpha, x));
        std::cerr << "T_<=Sigma" << to_string(alpha) << ": " << x.terms().size() << " terms\n";
    }
    emit(opt, Json{{"n", opt.n}, {"basis", std::move(basis)}});
    return 0;
}

int run_verify(const Options& opt)
{
    VerifyReport report = verify(opt.n, parse_suite(opt.suite), opt.force);
    emit(opt, report_to_json(report));
    for (const auto& c : report.checks)
        std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : " [" + c.detail + "]")
                  << "\n";
    for (const auto& s : report.skipped)
        std::cerr << "SKIP " << s << " (beyond the default bound; use --force)\n";
    return report.ok() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cyclic-shift classes of S_n and the center of H_n(0)"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--force", opt.force, "allow brute force beyond the default bound");
    app.add_option("--out", opt.out, "write output to FILE instead of stdout");

    auto* classes = app.add_subcommand("classes", "brute-force cyclic-shift classes");
    classes->add_option("--n", opt.n)->required();
    classes->add_option("--twist", opt.twist, "id or nu");
    classes->add_option("--stratum", opt.stratum, "max, min or all");

    auto* sigma = app.add_subcommand("sigma", "the class Sigma_alpha");
    sigma->add_option("--alpha", opt.alpha)->required();
    sigma->add_option("--format", opt.format, "json or text");

    auto* stairform = app.add_subcommand("stairform", "sigma_alpha in cycle notation");
    stairform->add_option("--alpha", opt.alpha)->required();

    auto* dim = app.add_subcommand("dim", "dimension of the center of H_n(0)");
    dim->add_option("--n", opt.n)->required();

    auto* count = app.add_subcommand("count", "|Sigma_alpha| by formula and enumeration");
    count->add_option("--alpha", opt.alpha)->required();

    auto* basis = app.add_subcommand("basis", "the central elements T_<=Sigma_alpha");
    basis->add_option("--n", opt.n)->required();
    basis->add_option("--alpha", opt.alpha);

    auto* verify_cmd = app.add_subcommand("verify", "oracle checks at a single n");
    verify_cmd->add_option("--n", opt.n)->required();
    verify_cmd->add_option("--suite", opt.suite, "all, classes, hooks, iprod or center");

    for (auto* sub : app.get_subcommands({})) {
        sub->add_flag("--force", opt.force, "allow brute force beyond the default bound");
        sub->add_option("--out", opt.out, "write output to FILE instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*classes) return run_classes(opt);
        if (*sigma) return run_sigma(opt);
        if (*stairform) return run_stairform(opt);
        if (*dim) return run_dim(opt);
        if (*count) return run_count(opt);
        if (*basis) return run_basis(opt);
        if (*verify_cmd) return run_verify(opt);
    } catch (const consistency_error& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
