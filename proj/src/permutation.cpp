#include "pmp/permutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace pmp {

std::vector<std::vector<int>> Permutation::cycles(bool include_fixed) const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int start = 0; start < n(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cyc;
        int cur = start;
        do {
            seen[static_cast<std::size_t>(cur)] = true;
            cyc.push_back(cur);
            cur = img_[static_cast<std::size_t>(cur)];
        } while (cur != start);
        if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
    }
    return out;
}

long Permutation::order() const {
    long ord = 1;
    for (const auto& c : cycles(true)) ord = std::lcm(ord, static_cast<long>(c.size()));
    return ord;
}

std::string Permutation::cycle_string() const {
    auto cs = cycles(false);
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
        os << "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << " ";
            os << c[i];
        }
        os << ")";
    }
    return os.str();
}

Permutation Permutation::power(long k) const {
    long m = order();
    k %= m;
    if (k < 0) k += m;
    Permutation acc(n());
    for (long i = 0; i < k; ++i) acc = acc.then(*this);
    return acc;
}

Permutation full_cycle(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(j)] = (j + 1) % n;
    return Permutation(std::move(img));
}

namespace {

std::vector<int> point_orbit(const std::vector<Permutation>& gens, int start) {
    const int n = gens.front().n();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::deque<int> queue{start};
    seen[static_cast<std::size_t>(start)] = true;
    std::vector<int> orbit;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        orbit.push_back(x);
        for (const auto& g : gens) {
            int y = g(x);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                queue.push_back(y);
            }
        }
    }
    return orbit;
}

bool pair_orbit_full(const std::vector<Permutation>& gens) {
    const int n = gens.front().n();
    if (n < 2) return true;
    std::vector<bool> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
    auto id = [n](int x, int y) { return static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y); };
    std::deque<std::pair<int, int>> queue{{0, 1}};
    seen[id(0, 1)] = true;
    std::size_t count = 0;
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        ++count;
        for (const auto& g : gens) {
            int gx = g(x), gy = g(y);
            if (!seen[id(gx, gy)]) {
                seen[id(gx, gy)] = true;
                queue.emplace_back(gx, gy);
            }
        }
    }
    return count == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1);
}

}  // namespace

std::vector<int> minimal_block(const std::vector<Permutation>& gens, int alpha, int beta) {
    const int n = gens.front().n();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    std::deque<std::pair<int, int>> queue;
    auto unite = [&](int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return;
        parent[static_cast<std::size_t>(rx)] = ry;
        queue.emplace_back(x, y);
    };
    unite(alpha, beta);
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        for (const auto& g : gens) unite(g(x), g(y));
    }
    std::vector<int> block;
    int ra = find(alpha);
    for (int x = 0; x < n; ++x)
        if (find(x) == ra) block.push_back(x);
    return block;
}

GroupProperties group_properties(const std::vector<Permutation>& gens) {
    GroupProperties props;
    if (gens.empty()) return props;
    const int n = gens.front().n();
    props.transitive = static_cast<int>(point_orbit(gens, 0).size()) == n;
    if (!props.transitive) return props;
    props.primitive = true;
    for (int beta = 1; beta < n; ++beta) {
        if (static_cast<int>(minimal_block(gens, 0, beta).size()) < n) {
            props.primitive = false;
            break;
        }
    }
    if (n <= 2) props.primitive = true;
    props.doubly_transitive = pair_orbit_full(gens);
    return props;
}

std::vector<std::vector<std::vector<int>>> block_systems(const std::vector<Permutation>& gens) {
    std::vector<std::vector<std::vector<int>>> systems;
    if (gens.empty()) return systems;
    const int n = gens.front().n();
    std::set<std::vector<int>> seen_seed_blocks;
    for (int beta = 1; beta < n; ++beta) {
        std::vector<int> block = minimal_block(gens, 0, beta);
        if (static_cast<int>(block.size()) >= n || block.size() <= 1) continue;
        if (!seen_seed_blocks.insert(block).second) continue;
        // expand the block to the full system through the point orbit
        std::set<std::vector<int>> blocks{block};
        std::deque<std::vector<int>> queue{block};
        while (!queue.empty()) {
            auto cur = queue.front();
            queue.pop_front();
            for (const auto& g : gens) {
                std::vector<int> img;
                img.reserve(cur.size());
                for (int x : cur) img.push_back(g(x));
                std::sort(img.begin(), img.end());
                if (blocks.insert(img).second) queue.push_back(img);
            }
        }
        systems.emplace_back(blocks.begin(), blocks.end());
    }
    return systems;
}

unsigned long group_order(const std::vector<Permutation>& gens, unsigned long cap) {
    if (gens.empty()) return 1;
    std::set<std::vector<int>> elements;
    std::deque<Permutation> queue;
    Permutation id(gens.front().n());
    elements.insert(id.images());
    queue.push_back(id);
    while (!queue.empty()) {
        Permutation cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            Permutation next = cur.then(g);
            if (elements.insert(next.images()).second) {
                if (elements.size() > cap) return 0;
                queue.push_back(next);
            }
        }
    }
    return elements.size();
}

}  // namespace pmp
