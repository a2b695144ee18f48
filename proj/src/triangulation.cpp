#include "triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace nmi::detail {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
        std::size_t h = v.size();
        for (auto e : v) h = h * 1000003u ^ e;
        return h;
    }
    std::size_t operator()(const IntVec& v) const noexcept {
        std::size_t h = v.size();
        for (auto e : v) h = h * 1000003u ^ static_cast<std::size_t>(e);
        return h;
    }
};

using Face = std::vector<std::size_t>;  // sorted generator indices, size dim-1

// Inward facet normals of the simplex on `verts`: the normal opposite
// verts[k] vanishes on the other vertices and is positive on verts[k].
std::vector<IntVec> simplex_normals(const std::vector<IntVec>& gens, const std::vector<std::size_t>& verts) {
    std::vector<IntVec> rows;
    rows.reserve(verts.size());
    for (auto v : verts) rows.push_back(gens[v]);
    std::vector<IntVec> adj;
    Int det = determinant_and_adjugate(rows, adj);
    if (det == 0) throw InvalidArgument("triangulation produced a degenerate simplex");
    const std::size_t n = verts.size();
    std::vector<IntVec> normals(n, IntVec(n));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) normals[k][j] = det > 0 ? adj[j][k] : -adj[j][k];
        make_primitive(normals[k]);
    }
    return normals;
}

Face without(const std::vector<std::size_t>& verts, std::size_t skip) {
    Face f;
    f.reserve(verts.size() - 1);
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (i != skip) f.push_back(verts[i]);
    std::sort(f.begin(), f.end());
    return f;
}

}  // namespace

Triangulation triangulate(const std::vector<IntVec>& gens, std::size_t dim, const Budget& budget) {
    Triangulation tri;
    // Greedy independent starting simplex in input order.
    std::vector<std::size_t> start;
    std::vector<IntVec> start_rows;
    for (std::size_t i = 0; i < gens.size() && start.size() < dim; ++i) {
        start_rows.push_back(gens[i]);
        if (rank(start_rows, dim) == start_rows.size()) {
            start.push_back(i);
        } else {
            start_rows.pop_back();
        }
    }
    if (start.size() < dim) throw InvalidArgument("triangulate: generators do not span the ambient space");

    std::unordered_map<Face, IntVec, VecHash> boundary;
    auto add_simplex = [&](const std::vector<std::size_t>& verts) {
        auto normals = simplex_normals(gens, verts);
        std::vector<std::size_t> sorted = verts;
        std::sort(sorted.begin(), sorted.end());
        tri.simplices.push_back(sorted);
        return normals;
    };

    {
        auto normals = add_simplex(start);
        for (std::size_t k = 0; k < dim; ++k) boundary.emplace(without(start, k), normals[k]);
    }

    std::vector<bool> used(gens.size(), false);
    for (auto s : start) used[s] = true;
    for (std::size_t x = 0; x < gens.size(); ++x) {
        if (used[x]) continue;
        budget.check_time("triangulation");
        std::vector<Face> visible;
        for (const auto& [face, normal] : boundary)
            if (dot(normal, gens[x]) < 0) visible.push_back(face);
        if (visible.empty()) continue;  // already inside the current cone
        std::sort(visible.begin(), visible.end());
        std::map<Face, IntVec> added;
        for (const auto& face : visible) {
            std::vector<std::size_t> verts = face;
            verts.push_back(x);
            auto normals = add_simplex(verts);
            // Faces of the new simplex other than `face` all contain x;
            // one shared by two new simplices is interior.
            for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
                Face f = without(verts, k);
                auto it = added.find(f);
                if (it != added.end()) {
                    added.erase(it);
                } else {
                    added.emplace(std::move(f), normals[k]);
                }
            }
        }
        for (const auto& face : visible) boundary.erase(face);
        for (auto& [face, normal] : added) boundary.emplace(face, std::move(normal));
        budget.require_points(tri.simplices.size(), "triangulation");
    }

    std::set<IntVec> facets;
    for (const auto& [face, normal] : boundary) facets.insert(normal);
    tri.facets.assign(facets.begin(), facets.end());
    std::sort(tri.simplices.begin(), tri.simplices.end());
    return tri;
}

std::vector<IntVec> parallelepiped_points(const std::vector<IntVec>& rows, const Budget& budget) {
    const std::size_t n = rows.size();
    std::vector<IntVec> adj;
    Int det = determinant_and_adjugate(rows, adj);
    if (det == 0) throw InvalidArgument("parallelepiped_points: singular simplex");
    const Int D = det < 0 ? -det : det;
    if (D == 1) return {};
    budget.require_points(static_cast<std::uint64_t>(D), "fundamental parallelepiped");

    // A lattice point p has coordinates λ_i = ⟨adj column i, p⟩ / det. The
    // classes of ℤⁿ modulo the simplex lattice are reached from 0 by adding
    // unit vectors, tracked as the numerators D·λ mod D.
    const Int s = det > 0 ? 1 : -1;
    std::vector<IntVec> steps(n, IntVec(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) steps[j][i] = floor_mod(mul(s, adj[j][i]), D);

    std::unordered_set<IntVec, VecHash> seen;
    std::vector<IntVec> frontier{IntVec(n, 0)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const auto& mu : frontier) {
            for (const auto& step : steps) {
                IntVec nu(n);
                for (std::size_t i = 0; i < n; ++i) nu[i] = (mu[i] + step[i]) % D;
                if (seen.insert(nu).second) next.push_back(std::move(nu));
            }
        }
        frontier = std::move(next);
        budget.check_time("fundamental parallelepiped");
    }

    std::vector<IntVec> points;
    points.reserve(seen.size());
    for (const auto& mu : seen) {
        bool zero = std::all_of(mu.begin(), mu.end(), [](Int e) { return e == 0; });
        if (zero) continue;
        IntVec p(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (mu[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) p[j] = add(p[j], mul(mu[i], rows[i][j]));
        }
        for (auto& e : p) {
            if (e % D != 0) throw InvalidArgument("parallelepiped point is not integral");
            e /= D;
        }
        points.push_back(std::move(p));
    }
    std::sort(points.begin(), points.end());
    return points;
}

}  // namespace nmi::detail
