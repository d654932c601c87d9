#include "bp/graph.hpp"

#include <numeric>

namespace bp {

BrieskornGraph build_graph(const ExponentVector& a) {
    const auto& e = a.exponents();
    for (auto v : e)
        if (v < 2) throw invalid_input_error("build_graph: exponents must be >= 2");
    BrieskornGraph g;
    g.vertices = e;
    const int n = static_cast<int>(e.size());
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::gcd(e[i], e[j]) > 1) {
                g.edges.emplace_back(i, j);
                ++deg[i];
                ++deg[j];
            }
    for (int i = 0; i < n; ++i)
        if (deg[i] == 0) g.isolated.push_back(i);
    // Component of the even vertices (all even exponents share the edge
    // gcd >= 2, so they live in one component).
    std::vector<char> in(n, 0);
    std::vector<int> stack;
    for (int i = 0; i < n; ++i)
        if (e[i] % 2 == 0 && !in[i]) {
            in[i] = 1;
            stack.push_back(i);
        }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [x, y] : g.edges) {
            int v = (x == u) ? y : (y == u) ? x : -1;
            if (v >= 0 && !in[v]) {
                in[v] = 1;
                stack.push_back(v);
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (in[i]) g.c_ev.push_back(i);
    return g;
}

HomologyClass classify_homology(const ExponentVector& a) {
    const auto& e = a.exponents();
    // An exponent 1 means the singularity is smoothable away: L is the
    // standard sphere.
    for (auto v : e)
        if (v == 1) return HomologyClass::IntegralHomologySphere;

    BrieskornGraph g = build_graph(a);
    const auto& ev = g.c_ev;

    auto all_pairs_gcd_two = [&]() {
        for (std::size_t i = 0; i < ev.size(); ++i)
            for (std::size_t j = i + 1; j < ev.size(); ++j)
                if (std::gcd(e[ev[i]], e[ev[j]]) != 2) return false;
        return true;
    };

    bool isolated_outside_ev = false;
    int isolated_count = static_cast<int>(g.isolated.size());
    for (int i : g.isolated) {
        bool inside = false;
        for (int j : ev)
            if (j == i) { inside = true; break; }
        if (!inside) isolated_outside_ev = true;
    }

    bool integral = (isolated_count >= 2) ||
                    (isolated_outside_ev && ev.size() % 2 == 1 && all_pairs_gcd_two());
    if (integral) return HomologyClass::IntegralHomologySphere;

    bool rational = (isolated_count >= 1) ||
                    (ev.size() % 2 == 1 && all_pairs_gcd_two());
    if (rational) return HomologyClass::RationalHomologySphereOnly;
    return HomologyClass::NotRationalHS;
}

bool is_homotopy_sphere(const ExponentVector& a) {
    return a.dimension() >= 5 &&
           classify_homology(a) == HomologyClass::IntegralHomologySphere;
}

const char* homology_class_name(HomologyClass c) {
    switch (c) {
        case HomologyClass::IntegralHomologySphere: return "integral_homology_sphere";
        case HomologyClass::RationalHomologySphereOnly: return "rational_homology_sphere";
        case HomologyClass::NotRationalHS: return "not_rational_homology_sphere";
    }
    return "?";
}

} // namespace bp
