// Copyright 2026 The cqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cqa/statespace.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace cqa {

HopGraph::HopGraph(std::size_t n_nodes, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : adjacency_(n_nodes) {
    for (auto &[u, v] : edges) {
        require(u < n_nodes && v < n_nodes, "hop edge endpoint out of range");
        require(u != v, "hop graphs carry no self-loops");
        if (u > v) {
            std::swap(u, v);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
}

HopGraph hop_graph(const Hamiltonian &driver, const SectorBasis &sector) {
    require(sector.feasible(), "hop graph needs a nonempty sector");
    require(driver.n_sites() == sector.n_sites(), "driver and sector have different numbers of sites");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < sector.size(); ++i) {
        for (auto [to, amp] : column(driver, sector.state(i), kHopThreshold)) {
            auto j = sector.index_of(to);
            if (j && *j != i) {
                edges.emplace_back(i, *j);
            }
        }
    }
    return HopGraph(sector.size(), std::move(edges));
}

HopGraph hop_graph(const ConfigModel &model, std::span<const Word> words) {
    require(!words.empty(), "hop graph needs at least one word");
    std::vector<Word> sorted(words.begin(), words.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < words.size(); ++i) {
        require(static_cast<int>(words[i].size()) == model.word_length, "word has the wrong length");
        for (const auto &g : model.hops) {
            auto next = model.apply(g, words[i]);
            if (!next || *next == words[i]) {
                continue;
            }
            auto it = std::find(words.begin(), words.end(), *next);
            if (it != words.end()) {
                edges.emplace_back(i, static_cast<std::size_t>(it - words.begin()));
            }
        }
    }
    return HopGraph(words.size(), std::move(edges));
}

std::size_t component_count(const HopGraph &g) {
    std::vector<bool> seen(g.n_nodes(), false);
    std::size_t components = 0;
    std::deque<std::size_t> queue;
    for (std::size_t start = 0; start < g.n_nodes(); ++start) {
        if (seen[start]) {
            continue;
        }
        ++components;
        seen[start] = true;
        queue.push_back(start);
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v : g.neighbours(u)) {
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    return components;
}

bool is_connected(const HopGraph &g) {
    require(g.n_nodes() > 0, "connectivity of an empty graph is undefined");
    return component_count(g) == 1;
}

namespace {

std::vector<int> charges(std::span<const Constraint> cs, Mask state) {
    std::vector<int> out;
    out.reserve(cs.size());
    for (const auto &c : cs) {
        out.push_back(eval_constraint(c, state));
    }
    return out;
}

void record(ClosureReport &report, ClosureWitness w, std::size_t max_witnesses) {
    report.pass = false;
    ++report.violations;
    if (report.witnesses.size() < max_witnesses) {
        report.witnesses.push_back(w);
    }
}

}  // namespace

ClosureReport check_closure(const Hamiltonian &driver, std::span<const Constraint> constraints,
                            std::size_t max_witnesses) {
    const int n = driver.n_sites();
    for (const auto &c : constraints) {
        require(c.n_sites() == n, "constraint and driver have different numbers of sites");
    }
    ClosureReport report;
    auto check_state = [&](Mask u) {
        ++report.states_checked;
        auto q = charges(constraints, u);
        for (auto [to, amp] : column(driver, u, kHopThreshold)) {
            if (to != u && charges(constraints, to) != q) {
                record(report, ClosureWitness{u, to, to ^ u, amp}, max_witnesses);
            }
        }
    };
    if (n <= kClosureFullSpaceSites) {
        const Mask dim = Mask{1} << n;
        for (Mask u = 0; u < dim; ++u) {
            check_state(u);
        }
    } else {
        SectorBasis sector = sector_basis(constraints, n);
        for (Mask u : sector.states()) {
            check_state(u);
        }
    }
    return report;
}

ClosureReport check_closure(const ConfigModel &model, std::span<const Word> words, std::size_t max_witnesses) {
    std::vector<Word> allowed(words.begin(), words.end());
    std::sort(allowed.begin(), allowed.end());
    // Witness states are words read as base-alphabet integers, x_mask is the hop index.
    auto encode = [&](const Word &w) {
        Mask code = 0;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            code = code * static_cast<Mask>(model.alphabet_size) + static_cast<Mask>(*it);
        }
        return code;
    };
    ClosureReport report;
    for (const auto &w : words) {
        ++report.states_checked;
        for (std::size_t h = 0; h < model.hops.size(); ++h) {
            auto next = model.apply(model.hops[h], w);
            if (next && !std::binary_search(allowed.begin(), allowed.end(), *next)) {
                record(report, ClosureWitness{encode(w), encode(*next), static_cast<Mask>(h), 1.0}, max_witnesses);
            }
        }
    }
    return report;
}

VerifyReport verify_driver(const Hamiltonian &driver, std::span<const Constraint> constraints,
                           std::size_t max_witnesses) {
    SectorBasis sector = sector_basis(constraints, driver.n_sites());
    require(sector.feasible(), "constraints admit no state", ErrorCode::infeasible);
    VerifyReport report;
    report.closure = check_closure(driver, constraints, max_witnesses);
    HopGraph g = hop_graph(driver, sector);
    report.components = component_count(g);
    report.connected = report.components == 1;
    report.sector_size = sector.size();
    report.max_term_support = driver.max_support();
    report.n_terms = driver.size();
    return report;
}

}  // namespace cqa
