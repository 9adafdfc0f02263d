#include "hzero/verify.hpp"

#include <algorithm>
#include <set>

#include "hzero/counting.hpp"
#include "hzero/cyclic_shift.hpp"
#include "hzero/hecke0.hpp"
#include "hzero/inductive_product.hpp"
#include "hzero/stair_classes.hpp"

namespace hzero {

Suite parse_suite(std::string_view text)
{
    if (text == "all") return Suite::all;
    if (text == "classes") return Suite::classes;
    if (text == "hooks") return Suite::hooks;
    if (text == "iprod") return Suite::iprod;
    if (text == "center") return Suite::center;
    throw invalid_input("unknown suite '" + std::string(text) + "'");
}

std::string to_string(Suite suite)
{
    switch (suite) {
    case Suite::all: return "all";
    case Suite::classes: return "classes";
    case Suite::hooks: return "hooks";
    case Suite::iprod: return "iprod";
    case Suite::center: return "center";
    }
    return "unknown";
}

bool VerifyReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void VerifyReport::add(std::string name, bool passed, std::string detail)
{
    checks.push_back({std::move(name), passed, std::move(detail)});
}

namespace {

std::vector<Permutation> brute_class_of(const ShiftGraph& graph, const Permutation& p)
{
    const auto comp = graph.component_of(graph.index_of(p));
    std::vector<Permutation> out;
    for (std::size_t v = 0; v < graph.vertices().size(); ++v)
        if (graph.component_of(v) == comp)
            out.push_back(graph.vertices()[v]);
    return out;
}

std::vector<Permutation> filter_members(const Composition& alpha)
{
    std::vector<Permutation> out;
    for (auto& p : permutations_of_type(sort_to_partition(alpha)))
        if (member_sigma_alpha(p, alpha))
            out.push_back(std::move(p));
    return out;
}

void classes_suite(int n, bool force, VerifyReport& report)
{
    auto labeled = label_max_classes(n, force);
    report.add("max classes labeled bijectively by stair forms", true,
               std::to_string(labeled.size()) + " classes");
    report.add("class count equals dim_center", BigInt(labeled.size()) == dim_center(n),
               std::to_string(labeled.size()) + " vs " + dim_center(n).str());
    report.add("class count equals maximal compositions",
               labeled.size() == enumerate_maximal(n).size());

    bool constructive = true;
    bool filtered = true;
    bool nu_stable = true;
    std::string first_failure;
    for (const auto& [alpha, cls] : labeled) {
        if (sigma_class(alpha).elements != cls.elements) {
            constructive = false;
            if (first_failure.empty())
                first_failure = to_string(alpha);
        }
        if (filter_members(alpha) != cls.elements)
            filtered = false;
        for (const auto& p : cls.elements)
            if (!cls.contains(conj_w0(p)))
                nu_stable = false;
    }
    report.add("sigma_class equals brute-force class", constructive, first_failure);
    report.add("membership filter equals brute-force class", filtered);
    report.add("nu stabilizes every max class", nu_stable);

    auto reps = min_representatives(n, force);
    report.add("sigma_alpha w0 in distinct nu-min classes", reps.size() == labeled.size(),
               std::to_string(reps.size()) + " representatives");
}

void hooks_suite(int n, bool force, VerifyReport& report)
{
    ShiftGraph graph(n, Twist::identity, force);
    bool hooks_ok = true;
    std::string failures;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> parts{k};
        parts.resize(static_cast<std::size_t>(n - k + 1), 1);
        Composition alpha(parts);
        auto brute = brute_class_of(graph, stair_form(alpha));
        std::vector<Permutation> by_properties;
        for (auto& p : permutations_of_type(sort_to_partition(alpha)))
            if (hook_properties(p, alpha))
                by_properties.push_back(std::move(p));
        bool same = by_properties == brute && sigma_class(alpha).elements == brute;
        if (!same) {
            hooks_ok = false;
            failures += to_string(alpha) + " ";
        }
    }
    report.add("hook properties and hook bijections equal brute force", hooks_ok, failures);

    // Sigma_(n) by predicates over all n-cycles.
    std::vector<Permutation> by_predicate;
    for (auto& p : permutations_of_type(Partition({n})))
        if (is_oscillating(p) && has_connected_intervals(p))
            by_predicate.push_back(std::move(p));
    auto brute_n = brute_class_of(graph, stair_form(Composition{n}));
    report.add("oscillating with connected intervals equals Sigma_(n)", by_predicate == brute_n);
    report.add("psi recursion equals Sigma_(n)", sigma_n(n) == brute_n);
    report.add("|Sigma_(n)| formula", BigInt(brute_n.size()) == size_sigma_n(n),
               std::to_string(brute_n.size()));

    if (n >= 4) {
        bool inverse_ok = true;
        for (const auto& s : sigma_n(n)) {
            auto pre = psi_inverse(s);
            if (psi(n, pre.sigma, pre.q) != s)
                inverse_ok = false;
        }
        report.add("psi inverse round-trips", inverse_ok);
    }
}

void iprod_suite(int n, bool force, VerifyReport& report)
{
    ShiftGraph graph(n, Twist::identity, force);
    bool roundtrip = true;
    bool law = true;
    const auto perms_n = all_permutations(n);
    for (int n1 = 0; n1 <= n; ++n1) {
        const int n2 = n - n1;
        // Image law over all of S_n.
        const IprodFrame frame(n1, n2);
        for (const auto& p : perms_n) {
            bool stable = true;
            for (int x = 1; x <= n; ++x)
                if (frame.in_n1(x) != frame.in_n1(p(x)))
                    stable = false;
            auto f = iprod_factor(p, n1, n2);
            if (stable != f.has_value() || (f && iprod(f->first, f->second) != p))
                roundtrip = false;
        }
        if (n1 == 0)
            continue;
        for (const auto& s1 : permutations_of_type(Partition({n1})))
            for (const auto& s2 : all_permutations(n2))
                if (iprod_length_law(s1, s2) != length(iprod(s1, s2)))
                    law = false;
    }
    report.add("iprod_factor inverts iprod exactly on the image", roundtrip);
    report.add("length law", law);

    bool factor_ok = true;
    bool product_ok = true;
    bool star_ok = true;
    std::string failures;
    for (const auto& alpha : enumerate_maximal(n)) {
        if (alpha.empty())
            continue;
        try {
            stair_factorization(alpha);
        } catch (const consistency_error&) {
            factor_ok = false;
        }
        auto brute = brute_class_of(graph, stair_form(alpha));
        if (alpha[0] % 2 == 0) {
            if (class_product(alpha).elements != brute) {
                product_ok = false;
                failures += to_string(alpha) + " ";
            }
        } else if (sigma_star_product(alpha) != sigma_star(alpha)) {
            star_ok = false;
            failures += to_string(alpha) + " ";
        }
    }
    report.add("stair forms factor through iprod", factor_ok);
    report.add("even first part: class product equals brute force", product_ok, failures);
    report.add("odd first part: orbit-matched product identity", star_ok);
}

void center_suite(int n, bool force, VerifyReport& report)
{
    auto r = verify_center_basis(n, force);
    report.add("T_{<=Sigma} central", r.all_central);
    report.add("T_{<=Sigma} linearly independent", r.independent, "rank " + std::to_string(r.rank));
    report.add("basis size equals dim_center", r.size_matches, r.dim.str());
}

} // namespace

VerifyReport verify(int n, Suite suite, bool force)
{
    if (n < 1)
        throw invalid_input("verify: n must be positive");
    check_brute_force_bound(n, force);
    VerifyReport report;
    report.n = n;
    if (suite == Suite::all || suite == Suite::classes)
        classes_suite(n, force, report);
    if (suite == Suite::all || suite == Suite::hooks)
        hooks_suite(n, force, report);
    if (suite == Suite::all || suite == Suite::iprod)
        iprod_suite(n, force, report);
    if (suite == Suite::center)
        center_suite(n, force, report);
    else if (suite == Suite::all && (force || n <= center_basis_limit))
        center_suite(n, force, report);
    else if (suite == Suite::all)
        report.skipped.push_back("center");
    return report;
}

} // namespace hzero
