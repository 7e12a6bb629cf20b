#include "ftc/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <thread>

#include "ftc/catalog.hpp"
#include "ftc/rng.hpp"
#include "ftc/syndrome.hpp"

namespace ftc::sim {

void SimConfig::validate() const {
    if (complex_name.empty()) throw ConfigInvalid("no complex name");
    if (sizes.empty()) throw ConfigInvalid("no lattice sizes");
    for (int L : sizes)
        if (L < 2) throw ConfigInvalid("lattice size must be >= 2");
    if (grid.empty()) throw ConfigInvalid("empty probability grid");
    if (!std::is_sorted(grid.begin(), grid.end())) throw ConfigInvalid("grid must be ascending");
    for (double p : grid)
        if (p < 0 || p > 1) throw ConfigInvalid("probabilities must be in [0,1]");
    if (trials_per_point < 1) throw ConfigInvalid("trials_per_point must be >= 1");
    if (decoder != "peeling" && decoder != "union-find")
        throw ConfigInvalid("unknown decoder: " + decoder);
    if (model != "erasure" && model != "flip" && model != "mixed")
        throw ConfigInvalid("unknown error model: " + model);
    if (decoder == "peeling" && (model == "flip" || (model == "mixed" && p_other > 0)))
        throw ConfigInvalid("peeling decoder requires a pure erasure model");
    if (types.empty()) throw ConfigInvalid("no check types selected");
}

namespace {

ErrorModel model_at(const SimConfig& cfg, double p) {
    ErrorModel m;
    if (cfg.model == "erasure") {
        m.p_erasure = p;
    } else if (cfg.model == "flip") {
        m.p_flip = p;
    } else {  // mixed: sweep erasure, flip fixed
        m.p_erasure = p;
        m.p_flip = cfg.p_other;
    }
    return m;
}

struct GraphBundle {
    int L;
    CheckType type;
    DecodeGraph graph;
};

}  // namespace

std::pair<double, double> wilson_interval(long failures, long trials) {
    const double z = 1.959963984540054;
    double n = static_cast<double>(trials);
    double ph = failures / n;
    double denom = 1.0 + z * z / n;
    double center = (ph + z * z / (2 * n)) / denom;
    double half = z * std::sqrt(ph * (1 - ph) / n + z * z / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

SimResult run_montecarlo(const SimConfig& cfg) {
    cfg.validate();

    std::vector<GraphBundle> bundles;
    for (int L : cfg.sizes) {
        auto K = instantiate(gen::catalog(cfg.complex_name), {L, L, L});
        auto coloring = bicolor_cells(K);
        auto [gx, gz] = syn::build_syndrome_graphs(K, coloring);
        for (CheckType t : cfg.types) {
            const syn::SyndromeGraph& g = t == CheckType::X ? gx : gz;
            auto membranes = syn::logical_membranes(K, coloring, t);
            bundles.push_back({L, t, DecodeGraph::build(g, membranes)});
        }
    }

    // Work chunks of up to 10^3 trials; aggregation is by fixed chunk
    // order, so the output is independent of scheduling.
    constexpr long kChunk = 1000;
    struct Task {
        std::size_t bundle, point;
        long first, count;
    };
    std::vector<Task> tasks;
    for (std::size_t b = 0; b < bundles.size(); ++b)
        for (std::size_t pi = 0; pi < cfg.grid.size(); ++pi)
            for (long t0 = 0; t0 < cfg.trials_per_point; t0 += kChunk)
                tasks.push_back({b, pi, t0, std::min(kChunk, cfg.trials_per_point - t0)});

    std::vector<long> task_failures(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            const GraphBundle& gb = bundles[t.bundle];
            double p = cfg.grid[t.point];
            ErrorModel m = model_at(cfg, p);
            long fails = 0;
            for (long k = 0; k < t.count; ++k) {
                std::uint64_t seed = trial_seed(cfg.seed, gb.L, p, static_cast<int>(gb.type),
                                                t.first + k);
                SyndromeSample s = sample(gb.graph, m, seed);
                BitVec corr = cfg.decoder == "peeling" ? peel_decode(gb.graph, s)
                                                       : uf_decode(gb.graph, s);
                corr ^= s.flipped;
                auto par = membrane_parities(gb.graph, corr);
                if (par[0] || par[1] || par[2]) ++fails;
            }
            task_failures[i] = fails;
        }
    };

    unsigned jobs = cfg.jobs > 0 ? static_cast<unsigned>(cfg.jobs)
                                 : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, tasks.size() ? tasks.size() : 1);
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::map<std::pair<std::size_t, std::size_t>, long> failures;
    for (std::size_t i = 0; i < tasks.size(); ++i)
        failures[{tasks[i].bundle, tasks[i].point}] += task_failures[i];

    SimResult out;
    for (std::size_t b = 0; b < bundles.size(); ++b) {
        for (std::size_t pi = 0; pi < cfg.grid.size(); ++pi) {
            SimRow row;
            row.complex_name = cfg.complex_name;
            row.type = bundles[b].type;
            row.decoder = cfg.decoder;
            row.model = cfg.model;
            row.L = bundles[b].L;
            row.p = cfg.grid[pi];
            row.trials = cfg.trials_per_point;
            row.failures = failures[{b, pi}];
            row.rate = static_cast<double>(row.failures) / row.trials;
            auto [lo, hi] = wilson_interval(row.failures, row.trials);
            row.ci_low = lo;
            row.ci_high = hi;
            row.seed = cfg.seed;
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

void write_csv(const SimResult& r, std::ostream& out) {
    out << "complex,check_type,decoder,error_model,L,p,trials,failures,logical_rate,ci_low,ci_"
           "high,seed\n";
    char buf[256];
    for (const auto& row : r.rows) {
        std::snprintf(buf, sizeof buf, "%s,%c,%s,%s,%d,%.10g,%ld,%ld,%.10g,%.10g,%.10g,%llu\n",
                      row.complex_name.c_str(), check_type_name(row.type), row.decoder.c_str(),
                      row.model.c_str(), row.L, row.p, row.trials, row.failures, row.rate,
                      row.ci_low, row.ci_high,
                      static_cast<unsigned long long>(row.seed));
        out << buf;
    }
}

namespace {

double log_odds(long failures, long trials) {
    // Laplace-style smoothing keeps endpoints finite.
    double f = failures + 0.5;
    double s = trials - failures + 0.5;
    return std::log(f / s);
}

// Crossing of two log-odds curves on a shared ascending grid; NaN if none.
double crossing(const std::vector<double>& grid, const std::vector<double>& a,
                const std::vector<double>& b) {
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        double d0 = a[i] - b[i];
        double d1 = a[i + 1] - b[i + 1];
        if (d0 == 0) return grid[i];
        if ((d0 < 0 && d1 >= 0) || (d0 > 0 && d1 <= 0)) {
            double t = d0 / (d0 - d1);
            return grid[i] + t * (grid[i + 1] - grid[i]);
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

long binomial_draw(SplitMix64& rng, long n, double p) {
    if (p <= 0) return 0;
    if (p >= 1) return n;
    double mean = n * p, var = n * p * (1 - p);
    if (var > 25.0) {
        // Box-Muller normal approximation
        double u1 = std::max(rng.u01(), 1e-300), u2 = rng.u01();
        double g = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
        long v = std::lround(mean + g * std::sqrt(var));
        return std::clamp(v, 0l, n);
    }
    // geometric-skip Bernoulli counting, O(successes)
    long count = 0;
    double log1mp = std::log1p(-p);
    long pos = 0;
    while (true) {
        double u = std::max(rng.u01(), 1e-300);
        pos += static_cast<long>(std::floor(std::log(u) / log1mp)) + 1;
        if (pos > n) break;
        ++count;
    }
    return count;
}

}  // namespace

ThresholdEstimate estimate_threshold(const SimResult& res) {
    if (res.rows.empty()) throw NoCrossingInGrid("no rows");
    for (const auto& r : res.rows) {
        if (r.complex_name != res.rows[0].complex_name || r.type != res.rows[0].type ||
            r.decoder != res.rows[0].decoder || r.model != res.rows[0].model)
            throw ConfigInvalid("estimate_threshold expects a single result group");
    }

    std::vector<int> sizes;
    std::vector<double> grid;
    for (const auto& r : res.rows) {
        if (std::find(sizes.begin(), sizes.end(), r.L) == sizes.end()) sizes.push_back(r.L);
        if (std::find(grid.begin(), grid.end(), r.p) == grid.end()) grid.push_back(r.p);
    }
    std::sort(sizes.begin(), sizes.end());
    std::sort(grid.begin(), grid.end());
    if (sizes.size() < 2) throw NoCrossingInGrid("need at least two lattice sizes");
    if (grid.size() < 4) throw NoCrossingInGrid("need at least four grid points");

    std::map<std::pair<int, double>, std::pair<long, long>> cell;  // (L,p) -> (failures, trials)
    for (const auto& r : res.rows) cell[{r.L, r.p}] = {r.failures, r.trials};

    auto estimate_from = [&](auto&& fail_of) -> double {
        std::vector<double> crossings;
        for (std::size_t si = 0; si + 1 < sizes.size(); ++si) {
            std::vector<double> a, b;
            for (double p : grid) {
                auto [fa, na] = cell.at({sizes[si], p});
                auto [fb, nb] = cell.at({sizes[si + 1], p});
                a.push_back(log_odds(fail_of(sizes[si], p, fa, na), na));
                b.push_back(log_odds(fail_of(sizes[si + 1], p, fb, nb), nb));
            }
            double c = crossing(grid, a, b);
            if (!std::isnan(c)) crossings.push_back(c);
        }
        if (crossings.empty()) return std::numeric_limits<double>::quiet_NaN();
        double sum = 0;
        for (double c : crossings) sum += c;
        return sum / crossings.size();
    };

    double p_star = estimate_from([](int, double, long f, long) { return f; });
    if (std::isnan(p_star)) throw NoCrossingInGrid("logical-rate curves do not cross in the grid");

    // bootstrap over per-point binomial resamples
    const int kResamples = 1000;
    SplitMix64 rng(mix64(res.rows[0].seed ^ 0xB0075742F00Dull));
    std::vector<double> boots;
    boots.reserve(kResamples);
    for (int k = 0; k < kResamples; ++k) {
        std::map<std::pair<int, double>, long> resampled;
        for (auto& [key, fn] : cell)
            resampled[key] = binomial_draw(rng, fn.second, double(fn.first) / fn.second);
        double b = estimate_from(
            [&](int L, double p, long, long) { return resampled.at({L, p}); });
        if (!std::isnan(b)) boots.push_back(b);
    }
    ThresholdEstimate est;
    est.p_star = p_star;
    est.method = "consecutive-size log-odds crossings, " + std::to_string(kResamples) +
                 " bootstrap resamples";
    if (boots.size() >= 100) {
        std::sort(boots.begin(), boots.end());
        est.ci_low = boots[static_cast<std::size_t>(0.025 * boots.size())];
        est.ci_high = boots[static_cast<std::size_t>(0.975 * boots.size()) - 1];
    } else {
        est.ci_low = est.ci_high = p_star;
    }
    return est;
}

}  // namespace ftc::sim
