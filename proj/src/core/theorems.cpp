#include "theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace metriclab {

namespace {

unsigned long long ipow(unsigned long long base, unsigned long long exp) {
    unsigned long long r = 1;
    while (exp--) {
        if (base != 0 && r > ~0ull / base) return ~0ull;
        r *= base;
    }
    return r;
}

bool map_is_expansive(const FiniteMetricSpace& space, const std::vector<PointId>& image,
                      double tol) {
    const std::size_t n = space.size();
    const bool exact = space.exact() && tol == 0.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (exact) {
                if (space.dist_exact(image[a], image[b]) < space.dist_exact(a, b)) return false;
            } else {
                if (space.dist(image[a], image[b]) < space.dist(a, b) * (1.0 - tol)) return false;
            }
        }
    return true;
}

// Backtracking over injective assignments; prunes on the pairwise
// non-shrinking constraint as soon as both endpoints are assigned.
void search_injective(const FiniteMetricSpace& space, double tol, std::size_t next,
                      std::vector<PointId>& image, std::vector<bool>& used,
                      const std::function<void(const std::vector<PointId>&)>& emit) {
    const std::size_t n = space.size();
    if (next == n) {
        emit(image);
        return;
    }
    const bool exact = space.exact() && tol == 0.0;
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (std::size_t prev = 0; prev < next && ok; ++prev) {
            if (exact) {
                if (space.dist_exact(image[prev], cand) < space.dist_exact(prev, next)) ok = false;
            } else {
                if (space.dist(image[prev], cand) < space.dist(prev, next) * (1.0 - tol)) ok = false;
            }
        }
        if (!ok) continue;
        image[next] = cand;
        used[cand] = true;
        search_injective(space, tol, next + 1, image, used, emit);
        used[cand] = false;
    }
}

}  // namespace

std::vector<TaggedMap> enumerate_expansive_maps(const FiniteMetricSpace& space,
                                                const EnumerationOptions& opts) {
    const std::size_t n = space.size();
    std::vector<TaggedMap> result;
    if (n == 0) return result;
    if (n == 1) {
        SelfMap id = SelfMap::identity(1);
        ExpansionClass cls;
        cls.tag = ExpansionTag::Isometry;  // vacuously
        result.push_back({id, cls});
        return result;
    }

    const unsigned long long total = ipow(n, n);
    if (total <= opts.max_maps) {
        std::vector<PointId> image(n, 0);
        while (true) {
            if (map_is_expansive(space, image, opts.tol)) {
                SelfMap m(image);
                result.push_back({m, classify(space, m, opts.tol)});
            }
            // odometer
            std::size_t pos = 0;
            while (pos < n && ++image[pos] == n) image[pos++] = 0;
            if (pos == n) break;
        }
        return result;
    }

    if (n > opts.pruned_max_n)
        throw BudgetExceeded("space of size " + std::to_string(n) +
                                 " exceeds the enumeration budget (" + std::to_string(total) +
                                 " maps needed)",
                             total);

    // Expansive maps are injective whenever all off-diagonal distances are
    // positive, so the injective backtracking search is complete here.
    std::vector<PointId> image(n, 0);
    std::vector<bool> used(n, false);
    search_injective(space, opts.tol, 0, image, used, [&](const std::vector<PointId>& im) {
        SelfMap m(im);
        result.push_back({m, classify(space, m, opts.tol)});
    });
    return result;
}

json EnumerationReport::to_json() const {
    json doc;
    doc["n"] = n;
    doc["total_maps"] = total_maps;
    doc["expansive_count"] = expansive_count;
    doc["all_expansive_are_isometric_bijections"] = all_expansive_are_isometric_bijections;
    if (counterexample) doc["counterexample"] = counterexample->to_json();
    return doc;
}

EnumerationReport verify_compact_theorem(const FiniteMetricSpace& space,
                                         const EnumerationOptions& opts) {
    EnumerationReport rep;
    rep.n = space.size();
    rep.total_maps = ipow(space.size(), space.size());
    rep.all_expansive_are_isometric_bijections = true;
    auto maps = enumerate_expansive_maps(space, opts);
    rep.expansive_count = maps.size();
    for (const auto& tm : maps) {
        const bool ok = tm.map.is_permutation() && tm.cls.tag == ExpansionTag::Isometry;
        if (!ok) {
            rep.all_expansive_are_isometric_bijections = false;
            rep.counterexample = tm.map;
            break;
        }
    }
    return rep;
}

json RecurrenceResult::to_json() const {
    json doc;
    doc["found"] = found;
    doc["n"] = n;
    doc["distance"] = distance;
    return doc;
}

RecurrenceResult recurrence_search(const FiniteMetricSpace& space, const SelfMap& map,
                                   PointId x, double epsilon, unsigned long long max_iter) {
    PointId cur = x;
    return recurrence_search(
        [&](unsigned long long) {
            cur = map(cur);
            return space.dist(x, cur);
        },
        epsilon, max_iter);
}

RecurrenceResult recurrence_search(const std::function<double(unsigned long long)>& orbit_distance,
                                   double epsilon, unsigned long long max_iter) {
    if (epsilon < 0) throw std::domain_error("epsilon must be nonnegative");
    RecurrenceResult best{false, 0, std::numeric_limits<double>::infinity()};
    for (unsigned long long n = 1; n <= max_iter; ++n) {
        const double d = orbit_distance(n);
        if (d <= epsilon) return {true, n, d};
        if (d < best.distance) {
            best.distance = d;
            best.n = n;
        }
    }
    return best;
}

FiniteMetricSpace linf_counterexample_space(std::size_t N) {
    if (N < 1) throw std::domain_error("N must be >= 1");
    std::vector<std::string> labels;
    std::vector<std::vector<Rat>> dist(N, std::vector<Rat>(N, Rat::integer(0)));
    for (std::size_t i = 0; i < N; ++i) labels.push_back("x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            if (i == j) continue;
            const auto lo = static_cast<std::int64_t>(std::min(i, j) + 1);
            dist[i][j] = Rat{lo + 1, lo};  // 1 + 1/min
        }
    return FiniteMetricSpace::from_exact(std::move(labels), std::move(dist));
}

json CounterexampleReport::to_json() const {
    json doc;
    doc["N"] = N;
    doc["distances_match_formula"] = distances_match_formula;
    doc["all_pairwise_above_one"] = all_pairwise_above_one;
    doc["identity_up_to_tail_swap"] = identity_up_to_tail_swap;
    doc["fixed_prefix"] = fixed_prefix;
    doc["expansive_count"] = expansive_maps.size();
    return doc;
}

CounterexampleReport verify_counterexample(std::size_t N, const EnumerationOptions& opts) {
    const FiniteMetricSpace space = linf_counterexample_space(N);
    CounterexampleReport rep;
    rep.N = N;
    rep.distances_match_formula = true;
    rep.all_pairwise_above_one = true;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            if (i == j) continue;
            const auto lo = static_cast<std::int64_t>(std::min(i, j) + 1);
            if (space.dist_exact(i, j) != Rat{lo + 1, lo}) rep.distances_match_formula = false;
            if (!(space.dist_exact(i, j) > Rat::integer(1))) rep.all_pairwise_above_one = false;
        }
    auto maps = enumerate_expansive_maps(space, opts);
    for (auto& tm : maps) rep.expansive_maps.push_back(tm.map);

    if (N < 2) {
        rep.identity_up_to_tail_swap =
            maps.size() == 1 && maps[0].map == SelfMap::identity(N);
        rep.fixed_prefix = N;
        return rep;
    }

    std::vector<PointId> swap_im(N);
    for (std::size_t i = 0; i < N; ++i) swap_im[i] = i;
    std::swap(swap_im[N - 2], swap_im[N - 1]);
    const SelfMap tail_swap(std::move(swap_im));
    const SelfMap ident = SelfMap::identity(N);
    bool has_ident = false, has_swap = false, only_those = true;
    for (const auto& m : rep.expansive_maps) {
        if (m == ident) has_ident = true;
        else if (m == tail_swap) has_swap = true;
        else only_those = false;
    }
    rep.identity_up_to_tail_swap = has_ident && has_swap && only_those;

    rep.fixed_prefix = N;
    for (const auto& m : rep.expansive_maps)
        for (std::size_t i = 0; i < rep.fixed_prefix; ++i)
            if (m(i) != i) rep.fixed_prefix = i;
    return rep;
}

json AnticontractionScanReport::to_json() const {
    json doc;
    doc["none_found"] = none_found;
    if (offending_map) {
        doc["offending_map"] = offending_map->to_json();
        doc["offending_subset"] = offending_subset;
    }
    return doc;
}

AnticontractionScanReport no_anticontraction_check(const FiniteMetricSpace& space, double tol,
                                                   std::size_t max_subset,
                                                   const EnumerationOptions& opts) {
    AnticontractionScanReport rep;
    rep.none_found = true;

    auto scan_space = [&](const FiniteMetricSpace& sub, const std::vector<PointId>& idx) {
        if (sub.size() < 2) return;
        for (const auto& tm : enumerate_expansive_maps(sub, opts)) {
            if (tm.cls.tag == ExpansionTag::Anticontraction) {
                rep.none_found = false;
                rep.offending_map = tm.map;
                rep.offending_subset = idx;
                return;
            }
        }
    };

    std::vector<PointId> all(space.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    scan_space(space, all);
    if (!rep.none_found) return rep;

    // subsets up to max_subset points
    const std::size_t n = space.size();
    std::vector<PointId> subset;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!rep.none_found) return;
        if (subset.size() >= 2 && subset.size() < n)
            scan_space(space.restrict(subset), subset);
        if (subset.size() == max_subset) return;
        for (std::size_t p = start; p < n; ++p) {
            subset.push_back(p);
            rec(p + 1);
            subset.pop_back();
        }
    };
    rec(0);
    return rep;
}

FiniteMetricSpace random_metric_space(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> draw(1, 10);
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = draw(rng);
    // Floyd-Warshall repair: shortest-path completion yields a valid metric
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return FiniteMetricSpace::from_matrix(std::move(labels), std::move(d));
}

std::vector<FiniteMetricSpace> all_metric_spaces(std::size_t n,
                                                 const std::vector<std::int64_t>& values) {
    std::vector<FiniteMetricSpace> out;
    const std::size_t pairs = n * (n - 1) / 2;
    std::vector<std::size_t> pick(pairs, 0);
    while (true) {
        std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat::integer(0)));
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                d[i][j] = d[j][i] = Rat::integer(values[pick[idx++]]);
        bool valid = true;
        for (std::size_t i = 0; i < n && valid; ++i)
            for (std::size_t k = 0; k < n && valid; ++k)
                for (std::size_t j = 0; j < n && valid; ++j) {
                    if (i == j || j == k || i == k) continue;
                    if (d[i][j] + d[j][k] < d[i][k]) valid = false;
                }
        if (valid) {
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
            out.push_back(FiniteMetricSpace::from_exact(std::move(labels), std::move(d)));
        }
        std::size_t pos = 0;
        while (pos < pairs && ++pick[pos] == values.size()) pick[pos++] = 0;
        if (pos == pairs || pairs == 0) break;
    }
    return out;
}

}  // namespace metriclab
