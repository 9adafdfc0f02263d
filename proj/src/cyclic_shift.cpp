#include "hzero/cyclic_shift.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "hzero/stair_classes.hpp"

namespace hzero {

std::string to_string(Twist twist)
{
    return twist == Twist::identity ? "id" : "nu";
}

std::string to_string(Stratum stratum)
{
    switch (stratum) {
    case Stratum::all: return "all";
    case Stratum::min: return "min";
    case Stratum::max: return "max";
    }
    return "all";
}

Twist parse_twist(std::string_view text)
{
    if (text == "id" || text == "identity")
        return Twist::identity;
    if (text == "nu")
        return Twist::nu;
    throw invalid_input("unknown twist '" + std::string(text) + "' (expected id or nu)");
}

Stratum parse_stratum(std::string_view text)
{
    if (text == "all")
        return Stratum::all;
    if (text == "min")
        return Stratum::min;
    if (text == "max")
        return Stratum::max;
    throw invalid_input("unknown stratum '" + std::string(text) + "' (expected all, min or max)");
}

bool EquivClass::contains(const Permutation& p) const
{
    return std::binary_search(elements.begin(), elements.end(), p);
}

EquivClass make_class(std::vector<Permutation> elements, std::optional<Composition> alpha)
{
    if (elements.empty())
        throw consistency_error("empty equivalence class");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    EquivClass cls;
    cls.common_length = length(elements.front());
    for (const auto& p : elements)
        if (length(p) != cls.common_length)
            throw consistency_error("class elements of different length");
    cls.representative = elements.front();
    cls.even_orbit_partition = even_orbits(cls.representative);
    cls.alpha = std::move(alpha);
    cls.elements = std::move(elements);
    return cls;
}

namespace {

// s_i w s_j: left factor swaps the values i, i+1, right factor swaps the
// positions j, j+1.
Permutation twisted_conj(const Permutation& w, int i, int j)
{
    std::vector<int> images(w.images().begin(), w.images().end());
    std::swap(images[static_cast<std::size_t>(j - 1)], images[static_cast<std::size_t>(j)]);
    for (int& v : images) {
        if (v == i)
            v = i + 1;
        else if (v == i + 1)
            v = i;
    }
    return PermutationBuilder::adopt(std::move(images));
}

Permutation shift_move(const Permutation& w, int i, Twist twist)
{
    const int n = w.degree();
    if (i < 1 || i > n - 1)
        throw invalid_input("one_step: generator index out of range");
    return twisted_conj(w, i, twist == Twist::identity ? i : n - i);
}

} // namespace

std::optional<Permutation> one_step(const Permutation& w, int i, Twist twist)
{
    Permutation target = shift_move(w, i, twist);
    if (length(target) <= length(w))
        return target;
    return std::nullopt;
}

std::vector<Permutation> arrow_closure(const Permutation& w, Twist twist)
{
    std::set<Permutation> seen{w};
    std::deque<Permutation> queue{w};
    while (!queue.empty()) {
        Permutation cur = std::move(queue.front());
        queue.pop_front();
        for (int i = 1; i < cur.degree(); ++i) {
            auto next = one_step(cur, i, twist);
            if (next && seen.insert(*next).second)
                queue.push_back(*next);
        }
    }
    return {seen.begin(), seen.end()};
}

void check_brute_force_bound(int n, bool force)
{
    if (n < 0)
        throw invalid_input("degree must be nonnegative");
    if (n > brute_force_limit && !force)
        throw resource_limit("n = " + std::to_string(n) + " exceeds the brute-force bound " +
                             std::to_string(brute_force_limit) + " (pass --force to override)");
}

ShiftGraph::ShiftGraph(int n, Twist twist, bool force) : n_(n), twist_(twist)
{
    check_brute_force_bound(n, force);
    vertices_ = all_permutations(n);
    const std::size_t count = vertices_.size();
    lengths_.resize(count);
    for (std::size_t v = 0; v < count; ++v)
        lengths_[v] = length(vertices_[v]);

    // Union-find over all moves (length ignored) gives the twisted
    // conjugacy classes, since the s_i generate S_n.
    std::vector<std::size_t> parent(count);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    edges_.resize(count);
    for (std::size_t v = 0; v < count; ++v) {
        for (int i = 1; i < n; ++i) {
            std::size_t t = static_cast<std::size_t>(lex_rank(shift_move(vertices_[v], i, twist)));
            auto a = find(v);
            auto b = find(t);
            if (a != b)
                parent[a] = b;
            if (t != v && lengths_[t] <= lengths_[v])
                edges_[v].push_back(t);
        }
        std::sort(edges_[v].begin(), edges_[v].end());
        edges_[v].erase(std::unique(edges_[v].begin(), edges_[v].end()), edges_[v].end());
    }

    conj_class_.resize(count);
    std::map<std::size_t, std::size_t> roots;
    for (std::size_t v = 0; v < count; ++v) {
        auto [it, inserted] = roots.emplace(find(v), roots.size());
        conj_class_[v] = it->second;
    }
    conj_min_.assign(roots.size(), std::numeric_limits<int>::max());
    conj_max_.assign(roots.size(), -1);
    for (std::size_t v = 0; v < count; ++v) {
        auto c = conj_class_[v];
        conj_min_[c] = std::min(conj_min_[c], lengths_[v]);
        conj_max_[c] = std::max(conj_max_[c], lengths_[v]);
    }

    compute_components();
}

std::size_t ShiftGraph::index_of(const Permutation& p) const
{
    if (p.degree() != n_)
        throw invalid_input("permutation degree does not match the graph");
    return static_cast<std::size_t>(lex_rank(p));
}

void ShiftGraph::compute_components()
{
    // Iterative Tarjan.
    const std::size_t count = vertices_.size();
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> index(count, unvisited);
    std::vector<std::size_t> low(count, 0);
    std::vector<bool> on_stack(count, false);
    std::vector<std::size_t> stack;
    component_.assign(count, unvisited);
    component_count_ = 0;
    std::size_t next_index = 0;

    struct Frame {
        std::size_t v;
        std::size_t edge;
    };
    std::vector<Frame> call;

    for (std::size_t root = 0; root < count; ++root) {
        if (index[root] != unvisited)
            continue;
        call.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& out = edges_[f.v];
            if (f.edge < out.size()) {
                std::size_t w = out[f.edge++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            std::size_t v = f.v;
            call.pop_back();
            if (!call.empty())
                low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component_[w] = component_count_;
                } while (w != v);
                ++component_count_;
            }
        }
    }
}

bool ShiftGraph::in_stratum(std::size_t v, Stratum stratum) const noexcept
{
    switch (stratum) {
    case Stratum::all: return true;
    case Stratum::min: return lengths_[v] == conj_min_[conj_class_[v]];
    case Stratum::max: return lengths_[v] == conj_max_[conj_class_[v]];
    }
    return false;
}

std::vector<EquivClass> ShiftGraph::classes(Stratum stratum) const
{
    std::vector<std::vector<Permutation>> members(component_count_);
    std::vector<bool> keep(component_count_, false);
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        members[component_[v]].push_back(vertices_[v]);
        if (in_stratum(v, stratum))
            keep[component_[v]] = true;
    }
    std::vector<EquivClass> out;
    for (std::size_t c = 0; c < component_count_; ++c)
        if (keep[c])
            out.push_back(make_class(std::move(members[c])));
    std::sort(out.begin(), out.end(), [](const EquivClass& a, const EquivClass& b) {
        return a.elements.front() < b.elements.front();
    });
    return out;
}

namespace {

Permutation twisted_representative(const Composition& alpha, Twist twist)
{
    Permutation sf = stair_form(alpha);
    if (twist == Twist::identity)
        return sf;
    return compose(sf, longest_element(sf.degree()));
}

} // namespace

std::vector<EquivClass> equiv_classes(int n, Twist twist, Stratum stratum, bool force)
{
    ShiftGraph graph(n, twist, force);
    auto out = graph.classes(stratum);
    // Label classes through their stair-form (or stair-form times w0)
    // representatives.
    for (const auto& alpha : enumerate_maximal(n)) {
        Permutation rep = twisted_representative(alpha, twist);
        for (auto& cls : out) {
            if (cls.contains(rep)) {
                cls.alpha = alpha;
                cls.representative = rep;
                cls.even_orbit_partition = even_orbits(rep);
                break;
            }
        }
    }
    return out;
}

std::vector<std::pair<Composition, EquivClass>> label_max_classes(int n, bool force)
{
    ShiftGraph graph(n, Twist::identity, force);
    auto max_classes = graph.classes(Stratum::max);
    std::vector<int> hits(max_classes.size(), 0);
    std::vector<std::pair<Composition, EquivClass>> out;

    for (const auto& alpha : enumerate_maximal(n)) {
        Permutation sf = stair_form(alpha);
        auto v = graph.index_of(sf);
        if (!graph.in_stratum(v, Stratum::max))
            throw consistency_error("stair form of " + to_string(alpha) + " is not of maximal length");
        auto it = std::find_if(max_classes.begin(), max_classes.end(),
                               [&](const EquivClass& c) { return c.contains(sf); });
        if (it == max_classes.end())
            throw consistency_error("stair form of " + to_string(alpha) + " lies in no max class");
        auto idx = static_cast<std::size_t>(it - max_classes.begin());
        if (++hits[idx] > 1)
            throw consistency_error("two stair forms share the class of " + to_string(alpha));
        EquivClass cls = *it;
        cls.alpha = alpha;
        cls.representative = sf;
        cls.even_orbit_partition = even_orbits(sf);
        for (const auto& p : cls.elements)
            if (even_orbits(p) != cls.even_orbit_partition)
                throw consistency_error("even orbits differ inside the class of " + to_string(alpha));
        out.emplace_back(alpha, std::move(cls));
    }
    for (std::size_t c = 0; c < max_classes.size(); ++c)
        if (hits[c] != 1)
            throw consistency_error("max class without a stair form, least element " +
                                    cycle_string(max_classes[c].elements.front()));
    return out;
}

std::vector<std::pair<Composition, Permutation>> min_representatives(int n, bool force)
{
    ShiftGraph graph(n, Twist::nu, force);
    std::set<std::size_t> min_components;
    for (std::size_t v = 0; v < graph.vertices().size(); ++v)
        if (graph.in_stratum(v, Stratum::min))
            min_components.insert(graph.component_of(v));

    std::set<std::size_t> used;
    std::vector<std::pair<Composition, Permutation>> out;
    for (const auto& alpha : enumerate_maximal(n)) {
        Permutation rep = twisted_representative(alpha, Twist::nu);
        auto v = graph.index_of(rep);
        if (!graph.in_stratum(v, Stratum::min))
            throw consistency_error("sigma_alpha w0 for " + to_string(alpha) +
                                    " is not nu-minimal");
        if (!used.insert(graph.component_of(v)).second)
            throw consistency_error("sigma_alpha w0 representatives collide at " + to_string(alpha));
        out.emplace_back(alpha, rep);
    }
    if (used.size() != min_components.size())
        throw consistency_error("sigma_alpha w0 does not cover every nu-min class");
    return out;
}

} // namespace hzero
