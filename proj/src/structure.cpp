#include "agsync/structure.hpp"

#include <algorithm>
#include <limits>

namespace agsync {

FunctionalGraphSummary functional_summary(std::span<const State> map) {
    const std::size_t n = map.size();
    constexpr std::uint32_t unseen = std::numeric_limits<std::uint32_t>::max();
    // 0 = unvisited, 1 = on the current walk, 2 = finished.
    std::vector<std::uint8_t> color(n, 0);
    std::vector<std::uint32_t> pos(n, unseen);
    std::vector<bool> cyclic(n, false);
    std::vector<State> path;
    FunctionalGraphSummary out;

    for (State start = 0; start < n; ++start) {
        if (color[start] != 0)
            continue;
        path.clear();
        State x = start;
        while (color[x] == 0) {
            color[x] = 1;
            pos[x] = static_cast<std::uint32_t>(path.size());
            path.push_back(x);
            x = map[x];
        }
        if (color[x] == 1) {
            std::vector<State> cycle(path.begin() + pos[x], path.end());
            for (auto c : cycle)
                cyclic[c] = true;
            std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
            out.cycles.push_back(std::move(cycle));
        }
        for (auto p : path)
            color[p] = 2;
    }

    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const auto &l, const auto &r) { return l.front() < r.front(); });
    for (const auto &c : out.cycles) {
        out.cycle_length_lcm = boost::multiprecision::lcm(out.cycle_length_lcm, BigCount(c.size()));
        out.cycle_length_product *= c.size();
    }
    for (State q = 0; q < n; ++q)
        (cyclic[q] ? out.cyclic_points : out.non_cyclic).push_back(q);
    return out;
}

FunctionalGraphSummary functional_summary(const Automaton &a, Letter letter) {
    const auto map = a.letter_map(letter);
    return functional_summary(map);
}

State power_image(std::span<const State> map, State q, const BigCount &exponent) {
    const std::size_t n = map.size();
    if (exponent <= n) {
        const auto steps = exponent.convert_to<std::size_t>();
        for (std::size_t i = 0; i < steps; ++i)
            q = map[q];
        return q;
    }
    // After n steps every walk sits on its cycle.
    for (std::size_t i = 0; i < n; ++i)
        q = map[q];
    std::size_t length = 1;
    for (State x = map[q]; x != q; x = map[x])
        ++length;
    const auto rest = static_cast<std::size_t>(((exponent - n) % length).convert_to<std::uint64_t>());
    for (std::size_t i = 0; i < rest; ++i)
        q = map[q];
    return q;
}

std::vector<std::size_t> SccDecomposition::terminal_components() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < components.size(); ++i)
        if (terminal[i])
            out.push_back(i);
    return out;
}

SccDecomposition scc(const Automaton &a) {
    const std::size_t n = a.states(), k = a.letters();
    constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(n, none), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<State> stack;
    struct Frame {
        State v;
        Letter next_letter;
    };
    std::vector<Frame> call;
    std::uint32_t counter = 0;

    SccDecomposition out;
    out.component_of.assign(n, 0);

    for (State root = 0; root < n; ++root) {
        if (index[root] != none)
            continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto &frame = call.back();
            const State v = frame.v;
            if (frame.next_letter < k) {
                const State w = a.next(v, frame.next_letter++);
                if (index[w] == none) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                StateSet component;
                State w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    out.component_of[w] = out.components.size();
                    component.push_back(w);
                } while (w != v);
                std::sort(component.begin(), component.end());
                out.components.push_back(std::move(component));
            }
            call.pop_back();
            if (!call.empty()) {
                const State parent = call.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }

    out.terminal.assign(out.components.size(), true);
    for (State q = 0; q < n; ++q)
        for (Letter l = 0; l < k; ++l)
            if (out.component_of[a.next(q, l)] != out.component_of[q])
                out.terminal[out.component_of[q]] = false;
    out.is_strongly_connected = out.components.size() == 1;
    return out;
}

bool is_strongly_connected(const Automaton &a) {
    const std::size_t n = a.states(), k = a.letters();
    if (n == 1)
        return true;
    const auto &delta = a.table();

    std::vector<State> queue;
    queue.reserve(n);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    queue.push_back(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const State q = queue[head];
        for (std::size_t l = 0; l < k; ++l) {
            const State r = delta[q * k + l];
            if (!seen[r]) {
                seen[r] = true;
                queue.push_back(r);
            }
        }
    }
    if (queue.size() != n)
        return false;

    // Reverse adjacency in CSR form.
    std::vector<std::uint32_t> offset(n + 1, 0);
    for (std::size_t i = 0; i < n * k; ++i)
        ++offset[delta[i] + 1];
    for (std::size_t q = 0; q < n; ++q)
        offset[q + 1] += offset[q];
    std::vector<State> preds(n * k);
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (std::size_t i = 0; i < n * k; ++i)
        preds[fill[delta[i]]++] = static_cast<State>(i / k);

    queue.clear();
    std::fill(seen.begin(), seen.end(), false);
    seen[0] = true;
    queue.push_back(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const State q = queue[head];
        for (auto i = offset[q]; i < offset[q + 1]; ++i) {
            const State p = preds[i];
            if (!seen[p]) {
                seen[p] = true;
                queue.push_back(p);
            }
        }
    }
    return queue.size() == n;
}

} // namespace agsync
