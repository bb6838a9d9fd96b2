#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "capelli/matrix.hpp"
#include "capelli/parallel.hpp"

namespace capelli {

// Factor order of the permutation products. Column-ascending is the Capelli
// convention and the supported semantics; the row variant is an expert knob.
enum class DetOrder { ColumnAscending, RowAscending };

struct LayerStat {
    int layer = 0;
    std::uint64_t states = 0;
    std::uint64_t terms = 0;            // sum of term counts over the layer
    std::uint64_t max_state_terms = 0;
    std::uint64_t coeff_units = 0;      // payload weight, 8-byte units
    double elapsed_ms = 0.0;            // excluded from determinism contract
};

struct DetStats {
    std::vector<LayerStat> layers;
    std::uint64_t peak_terms = 0;        // max over layers of `terms`
    std::uint64_t peak_bytes_estimate = 0;
};

struct DetOptions {
    int threads = 1;
    DetOrder order = DetOrder::ColumnAscending;
    std::uint64_t memory_cap_bytes = 0;  // 0 = unlimited
    int abort_after_layer = -1;          // test hook: stop after checkpointing this layer
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(int completed_layer, std::uint64_t bytes)
        : std::runtime_error("memory budget exceeded"),
          completed_layer_(completed_layer), bytes_(bytes) {}
    int completed_layer() const { return completed_layer_; }
    std::uint64_t bytes_estimate() const { return bytes_; }

private:
    int completed_layer_;
    std::uint64_t bytes_;
};

class AbortAfterLayer : public std::runtime_error {
public:
    explicit AbortAfterLayer(int layer)
        : std::runtime_error("stopped by abort-after-layer hook"), layer_(layer) {}
    int layer() const { return layer_; }

private:
    int layer_;
};

template <class C>
struct DetCallbacks {
    // Called once per completed DP layer with (mask, state) pairs in mask order.
    std::function<void(int layer,
                       const std::vector<std::pair<std::uint32_t, const WeylElement<C>*>>&)>
        on_layer;
};

template <class C>
struct DetResume {
    int layer = -1;  // last completed layer
    std::vector<std::pair<std::uint32_t, WeylElement<C>>> states;
};

namespace detail {

// Deterministic size estimate: hash-table slot plus big-integer payload.
template <class C>
std::uint64_t state_bytes_estimate(std::uint64_t terms, std::uint64_t coeff_units) {
    const std::uint64_t slot = sizeof(std::pair<Monomial, C>) + 1;
    return terms * slot * 10 / 7 + coeff_units * 8;
}

} // namespace detail

// Column-determinant by dynamic programming over row subsets. The state for
// a subset S (|S| = j) is the signed sum over all ways to fill columns 1..j
// with distinct rows from S, factors multiplied in ascending column order:
//   f(S u {r}) += (-1)^{#{s in S : s > r}} f(S) * m(r, j+1).
template <class C>
WeylElement<C> column_det(const WeylMatrix<C>& m, const DetOptions& opt = {},
                          DetStats* stats = nullptr, const DetCallbacks<C>* cb = nullptr,
                          DetResume<C>* resume = nullptr) {
    const WeylMatrix<C>* mat = &m;
    WeylMatrix<C> transposed;
    if (opt.order == DetOrder::RowAscending) {
        transposed = transpose(m);
        mat = &transposed;
    }
    const int n = mat->dim();
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);

    std::vector<WeylElement<C>> states(std::size_t(1) << n);
    std::vector<std::uint64_t> state_bytes(std::size_t(1) << n, 0);
    int start_layer = 1;
    if (resume && resume->layer >= 0) {
        for (auto& [mask, st] : resume->states) states[mask] = std::move(st);
        start_layer = resume->layer + 1;
    } else {
        states[0] = WeylElement<C>::constant(n, C(1));
    }

    // Masks grouped by popcount.
    std::vector<std::vector<std::uint32_t>> by_count(n + 1);
    for (std::uint32_t mask = 0; mask <= full; ++mask)
        by_count[std::popcount(mask)].push_back(mask);

    std::uint64_t prev_layer_bytes = 0;
    for (const auto& [mask, st] : [&] {
             std::vector<std::pair<std::uint32_t, const WeylElement<C>*>> v;
             for (std::uint32_t mask : by_count[start_layer - 1])
                 if (!states[mask].zero() || mask == 0) v.emplace_back(mask, &states[mask]);
             return v;
         }()) {
        prev_layer_bytes +=
            detail::state_bytes_estimate<C>(st->term_count(), st->payload_weight());
    }

    for (int j = start_layer; j <= n; ++j) {
        const auto t0 = std::chrono::steady_clock::now();
        auto& masks = by_count[j];
        std::mutex mu;
        LayerStat ls;
        ls.layer = j;
        ls.states = masks.size();
        std::uint64_t layer_bytes = 0;
        bool breached = false;

        parallel_for(masks.size(), opt.threads, [&](std::size_t mi) {
            {
                std::scoped_lock lk(mu);
                if (breached) return;
            }
            const std::uint32_t mask = masks[mi];
            WeylElement<C> acc(n);
            for (int r = 1; r <= n; ++r) {
                const std::uint32_t bit = 1u << (r - 1);
                if (!(mask & bit)) continue;
                const std::uint32_t prev = mask ^ bit;
                const WeylElement<C>& f = states[prev];
                if (f.zero()) continue;
                const int sign = (std::popcount(prev >> r) & 1) ? -1 : 1;
                mul_acc(acc, f, mat->at(r, j), sign);
            }
            const std::uint64_t terms = acc.term_count();
            const std::uint64_t units = acc.payload_weight();
            const std::uint64_t bytes = detail::state_bytes_estimate<C>(terms, units);
            states[mask] = std::move(acc);
            std::scoped_lock lk(mu);
            ls.terms += terms;
            ls.max_state_terms = std::max(ls.max_state_terms, terms);
            ls.coeff_units += units;
            state_bytes[mask] = bytes;
            layer_bytes += bytes;
            if (opt.memory_cap_bytes != 0 &&
                layer_bytes + prev_layer_bytes > opt.memory_cap_bytes)
                breached = true;
        });

        if (breached) throw BudgetExceeded(j - 1, layer_bytes + prev_layer_bytes);

        ls.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        if (stats) {
            stats->layers.push_back(ls);
            stats->peak_terms = std::max(stats->peak_terms, ls.terms);
            stats->peak_bytes_estimate =
                std::max(stats->peak_bytes_estimate, layer_bytes + prev_layer_bytes);
        }
        if (cb && cb->on_layer) {
            std::vector<std::pair<std::uint32_t, const WeylElement<C>*>> view;
            view.reserve(masks.size());
            for (std::uint32_t mask : masks) view.emplace_back(mask, &states[mask]);
            cb->on_layer(j, view);
        }
        // Release the previous layer; transitions only ever look one layer back.
        for (std::uint32_t mask : by_count[j - 1]) states[mask].clear_release();
        prev_layer_bytes = layer_bytes;
        if (opt.abort_after_layer == j && j < n) throw AbortAfterLayer(j);
    }
    return std::move(states[full]);
}

// Direct permutation-sum oracle; factorial cost, so small dimensions only.
template <class C>
WeylElement<C> brute_force_det(const WeylMatrix<C>& m,
                               DetOrder order = DetOrder::ColumnAscending) {
    const int n = m.dim();
    if (n > 5) throw std::invalid_argument("brute_force_det: dimension too large");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    WeylElement<C> acc(n);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int k = i + 1; k < n; ++k)
                if (perm[i] > perm[k]) ++inversions;
        WeylElement<C> prod = WeylElement<C>::constant(n, C(1));
        for (int c = 1; c <= n; ++c) {
            const auto& factor =
                order == DetOrder::ColumnAscending ? m.at(perm[c - 1], c) : m.at(c, perm[c - 1]);
            prod = mul(prod, factor);
        }
        for (const auto& [mono, coeff] : prod.terms()) acc.acc_term(mono, coeff, (inversions & 1) ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace capelli
