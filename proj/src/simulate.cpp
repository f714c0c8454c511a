#include "prefixcomp/simulate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "prefixcomp/coding.hpp"
#include "prefixcomp/kraft.hpp"

namespace prefixcomp {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

std::uint64_t mix64(std::uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

RngStream RngStream::keyed(std::uint64_t seed, std::uint64_t n, std::uint64_t index) {
    return {mix64(mix64(mix64(seed) ^ n) ^ index)};
}

std::uint64_t RngStream::next_u64() {
    state += kGolden;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double RngStream::next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
}

namespace {

std::vector<double> sample_probs(int n, RngStream& rng) {
    std::vector<double> p(n);
    double total = 0.0;
    for (double& x : p) {
        x = -std::log(rng.next_unit());  // unit-mean exponential
        total += x;
    }
    for (double& x : p) x /= total;
    return p;
}

bool flagged_leaf(const std::vector<double>& p) {
    CodeTree<double> tree = build_huffman_tree(p);
    return scan_leaf_condition(tree).has_value();
}

bool flagged_hexahedron(std::vector<double> p) {
    std::sort(p.begin(), p.end(), std::greater<>());
    return p[2] + p[3] < p[0] && p[1] + p[2] > p[0];
}

bool flagged_subset(const std::vector<double>& p) {
    std::vector<Rational> q;
    Rational total(0);
    q.reserve(p.size());
    for (double x : p) {
        q.push_back(rational_from_double(x));
        total += q.back();
    }
    for (Rational& r : q) r /= total;  // exact renormalization
    Source s = make_source(q, NumericMode::exact());
    return subset_certificate(s, huffman(s).profile, 10).status ==
           OptimalityStatus::NotOptimal;
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.n_min < 1 || cfg.n_min > cfg.n_max)
        throw DomainError(Errc::BadConfig, "requires 1 <= n_min <= n_max");
    if (cfg.samples_per_n < 1)
        throw DomainError(Errc::BadConfig, "requires samples_per_n >= 1");
    if (cfg.threads < 0)
        throw DomainError(Errc::BadConfig, "threads must be nonnegative");
    switch (cfg.method) {
        case VerdictMethod::LeafCondition:
            break;
        case VerdictMethod::SubsetExact:
            if (cfg.n_max > 10)
                throw DomainError(Errc::BadConfig, "SubsetExact guarded at n_max <= 10");
            break;
        case VerdictMethod::Hexahedron:
            if (cfg.n_min != 4 || cfg.n_max != 4)
                throw DomainError(Errc::BadConfig, "Hexahedron covers n = 4 only");
            break;
        default:
            throw DomainError(Errc::BadConfig, "method must be leaf, subset, or hexahedron");
    }
}

}  // namespace

Source sample_dirichlet(int n, RngStream& rng) {
    if (n < 1) throw DomainError(Errc::WrongSize, "requires n >= 1");
    return make_source(sample_probs(n, rng), NumericMode::floating());
}

SimulationReport run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    bool (*flag)(const std::vector<double>&) =
        cfg.method == VerdictMethod::LeafCondition  ? flagged_leaf
        : cfg.method == VerdictMethod::SubsetExact  ? flagged_subset
                                                    : +[](const std::vector<double>& p) {
                                                          return flagged_hexahedron(p);
                                                      };
    int threads = cfg.threads != 0
                      ? cfg.threads
                      : std::max(1u, std::thread::hardware_concurrency());

    SimulationReport report{cfg, {}};
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        auto count_range = [&](std::int64_t begin, std::int64_t end) {
            std::int64_t c = 0;
            for (std::int64_t i = begin; i < end; ++i) {
                RngStream rng = RngStream::keyed(cfg.seed, static_cast<std::uint64_t>(n),
                                                 static_cast<std::uint64_t>(i));
                if (flag(sample_probs(n, rng))) ++c;
            }
            return c;
        };

        std::int64_t flagged = 0;
        if (threads <= 1) {
            flagged = count_range(0, cfg.samples_per_n);
        } else {
            std::vector<std::int64_t> partial(threads, 0);
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) {
                std::int64_t begin = cfg.samples_per_n * t / threads;
                std::int64_t end = cfg.samples_per_n * (t + 1) / threads;
                pool.emplace_back(
                    [&, t, begin, end] { partial[t] = count_range(begin, end); });
            }
            for (auto& th : pool) th.join();
            for (std::int64_t c : partial) flagged += c;
        }

        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.rows.push_back({n, cfg.samples_per_n, flagged,
                               static_cast<double>(flagged) /
                                   static_cast<double>(cfg.samples_per_n),
                               seconds});
    }
    return report;
}

void write_report_csv(const SimulationReport& r, std::ostream& out) {
    out << "n,samples,flagged,fraction,method,seed\n";
    for (const auto& row : r.rows) {
        char frac[32];
        std::snprintf(frac, sizeof frac, "%.6f", row.fraction);
        out << row.n << ',' << row.samples << ',' << row.flagged << ',' << frac << ','
            << verdict_method_name(r.config.method) << ',' << r.config.seed << '\n';
    }
}

void write_report(const SimulationReport& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError(Errc::Io, "cannot open " + path);
    write_report_csv(r, out);
    if (!out) throw DomainError(Errc::Io, "write failed on " + path);
}

void write_report_json(const SimulationReport& r, const std::string& path) {
    nlohmann::json j;
    j["config"] = {{"n_min", r.config.n_min},
                   {"n_max", r.config.n_max},
                   {"samples_per_n", r.config.samples_per_n},
                   {"seed", r.config.seed},
                   {"method", verdict_method_name(r.config.method)},
                   {"threads", r.config.threads}};
    j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows)
        j["rows"].push_back({{"n", row.n},
                             {"samples", row.samples},
                             {"flagged", row.flagged},
                             {"fraction", row.fraction},
                             {"seconds", row.seconds}});
    std::ofstream out(path);
    if (!out) throw DomainError(Errc::Io, "cannot open " + path);
    out << j.dump(2) << '\n';
    if (!out) throw DomainError(Errc::Io, "write failed on " + path);
}

SimulationReport read_report_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "n,samples,flagged,fraction,method,seed")
        throw DomainError(Errc::Io, "bad CSV header");
    SimulationReport r;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 6) throw DomainError(Errc::Io, "bad CSV row: " + line);
        SimulationRow parsed;
        parsed.n = std::stoi(fields[0]);
        parsed.samples = std::stoll(fields[1]);
        parsed.flagged = std::stoll(fields[2]);
        parsed.fraction = std::stod(fields[3]);
        auto method = verdict_method_from_name(fields[4]);
        if (!method) throw DomainError(Errc::Io, "bad method: " + fields[4]);
        if (first) {
            r.config.n_min = parsed.n;
            r.config.samples_per_n = parsed.samples;
            r.config.method = *method;
            r.config.seed = std::stoull(fields[5]);
            first = false;
        }
        r.config.n_max = parsed.n;
        r.rows.push_back(parsed);
    }
    return r;
}

}  // namespace prefixcomp
