#include "subshift/rauzy.hpp"

#include <algorithm>
#include <stdexcept>

#include "subshift/factors.hpp"

namespace subshift {

RauzyGraph build_rauzy(std::size_t order) {
    if (order == 0) throw std::invalid_argument("Rauzy graph order must be positive");
    RauzyGraph g;
    g.order = order;
    const FactorSet vertex_factors = FactorSet::build(order);
    const FactorSet edge_factors = FactorSet::build(order + 1);
    g.vertices.assign(vertex_factors.words().begin(), vertex_factors.words().end());
    g.edges.reserve(edge_factors.size());
    for (std::string_view label : edge_factors.words()) {
        g.edges.push_back({Word(label.substr(0, order)), Word(label.substr(1)), Word(label)});
    }
    return g;
}

namespace {

std::size_t vertex_index(const RauzyGraph& g, std::string_view v) {
    const auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), v);
    if (it == g.vertices.end() || *it != v) {
        throw std::logic_error("Rauzy edge endpoint is not a vertex");
    }
    return static_cast<std::size_t>(it - g.vertices.begin());
}

struct Adjacency {
    std::vector<std::vector<std::size_t>> out;  // per-source targets, in label order
    std::vector<std::vector<std::size_t>> in;   // per-target sources, in label order
};

Adjacency adjacency_of(const RauzyGraph& g) {
    Adjacency adj{std::vector<std::vector<std::size_t>>(g.vertices.size()),
                  std::vector<std::vector<std::size_t>>(g.vertices.size())};
    for (const RauzyEdge& e : g.edges) {
        const std::size_t s = vertex_index(g, e.source);
        const std::size_t t = vertex_index(g, e.target);
        adj.out[s].push_back(t);
        adj.in[t].push_back(s);
    }
    return adj;
}

std::size_t reachable_count(const std::vector<std::vector<std::size_t>>& step,
                            const std::vector<std::vector<std::size_t>>* also) {
    if (step.empty()) return 0;
    std::vector<bool> seen(step.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 0;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        ++count;
        const auto push_all = [&](const std::vector<std::size_t>& targets) {
            for (std::size_t t : targets) {
                if (!seen[t]) {
                    seen[t] = true;
                    stack.push_back(t);
                }
            }
        };
        push_all(step[v]);
        if (also) push_all((*also)[v]);
    }
    return count;
}

}  // namespace

BranchReport branch_vertices(const RauzyGraph& g) {
    const Adjacency adj = adjacency_of(g);
    BranchReport report;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (adj.out[i].size() >= 2) report.right_branching.push_back(g.vertices[i]);
        if (adj.in[i].size() >= 2) report.left_branching.push_back(g.vertices[i]);
    }
    return report;  // vertices are sorted, so both lists are too
}

std::string to_dot(const RauzyGraph& g) {
    const Adjacency adj = adjacency_of(g);
    std::string out = "digraph rauzy_" + std::to_string(g.order) + " {\n";
    out += "  rankdir=LR;\n";
    out += "  node [shape=circle];\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        out += "  \"";
        out += g.vertices[i];
        out += "\"";
        if (adj.out[i].size() >= 2 || adj.in[i].size() >= 2) out += " [shape=doublecircle]";
        out += ";\n";
    }
    for (const RauzyEdge& e : g.edges) {
        out += "  \"";
        out += e.source;
        out += "\" -> \"";
        out += e.target;
        out += "\" [label=\"";
        out += e.label;
        out += "\"];\n";
    }
    out += "}\n";
    return out;
}

std::string rauzy_stats(const RauzyGraph& g) {
    const BranchReport branches = branch_vertices(g);
    return "order " + std::to_string(g.order) + ": V=" + std::to_string(g.vertices.size()) +
           " E=" + std::to_string(g.edges.size()) +
           " right_branch=" + std::to_string(branches.right_branching.size()) +
           " left_branch=" + std::to_string(branches.left_branching.size());
}

std::string loop_summary(const RauzyGraph& g) {
    const Adjacency adj = adjacency_of(g);
    const std::size_t n = g.vertices.size();
    std::vector<bool> is_branch(n, false);
    std::size_t branch_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        is_branch[i] = adj.out[i].size() >= 2 || adj.in[i].size() >= 2;
        if (is_branch[i]) ++branch_count;
    }

    std::string text;
    if (branch_count == 0) {
        text += "no branch vertices: single cycle of length " + std::to_string(g.edges.size()) +
                "\n";
    } else {
        text += "arcs between branch vertices (interior vertex counts):\n";
        for (std::size_t b = 0; b < n; ++b) {
            if (!is_branch[b]) continue;
            for (std::size_t start : adj.out[b]) {
                std::size_t cur = start;
                std::size_t interior = 0;
                while (!is_branch[cur] && interior <= n) {
                    ++interior;
                    cur = adj.out[cur].front();  // non-branch vertices have out-degree 1
                }
                text += "  \"" + g.vertices[b] + "\" -> \"" + g.vertices[cur] +
                        "\" interior=" + std::to_string(interior) + "\n";
            }
        }
    }

    const bool weak = reachable_count(adj.out, &adj.in) == n;
    const bool strong =
        reachable_count(adj.out, nullptr) == n && reachable_count(adj.in, nullptr) == n;
    text += std::string("weakly connected: ") + (weak ? "yes" : "no") + "\n";
    text += std::string("strongly connected: ") + (strong ? "yes" : "no") + "\n";
    return text;
}

}  // namespace subshift
