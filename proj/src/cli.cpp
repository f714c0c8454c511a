#include "prefixcomp/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prefixcomp/coding.hpp"
#include "prefixcomp/competition.hpp"
#include "prefixcomp/families.hpp"
#include "prefixcomp/kraft.hpp"
#include "prefixcomp/oracle.hpp"
#include "prefixcomp/simulate.hpp"

namespace prefixcomp {

namespace {

using nlohmann::json;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw DomainError(Errc::BadConfig,
                              std::string(what) + ": bad integer '" + item + "'");
        }
    }
    if (out.empty())
        throw DomainError(Errc::BadConfig, std::string(what) + ": empty list");
    return out;
}

LengthProfile parse_profile(const std::string& text) {
    return LengthProfile(parse_int_list(text, "profile"));
}

SymbolSet parse_set(const std::string& text, const char* what) {
    SymbolSet s;
    for (int i : parse_int_list(text, what)) {
        if (i < 0 || i >= 64)
            throw DomainError(Errc::BadSubset, std::string(what) + ": index out of range");
        s.add(i);
    }
    return s;
}

Rational parse_rational_arg(const std::string& text, const char* what) {
    auto r = parse_rational(text);
    if (!r)
        throw DomainError(Errc::BadConfig,
                          std::string(what) + ": expected p or p/q, got '" + text + "'");
    return *r;
}

Source load_source(const std::string& arg, bool float_mode) {
    std::string text = arg;
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '[') {
        std::ifstream in(arg);
        if (!in) throw DomainError(Errc::Io, "cannot read source file " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(Errc::BadConfig, std::string("bad source JSON: ") + e.what());
    }
    if (!parsed.is_array())
        throw DomainError(Errc::BadConfig, "source must be a JSON array");

    std::vector<Rational> probs;
    for (const auto& entry : parsed) {
        if (entry.is_string()) {
            std::string s = entry.get<std::string>();
            if (auto r = parse_rational(s)) {
                probs.push_back(*r);
            } else if (float_mode) {
                probs.push_back(rational_from_double(std::stod(s)));
            } else {
                throw DomainError(Errc::BadConfig, "bad probability '" + s + "'");
            }
        } else if (entry.is_number_integer()) {
            probs.push_back(Rational(entry.get<std::int64_t>()));
        } else if (entry.is_number_float()) {
            probs.push_back(rational_from_double(entry.get<double>()));
        } else {
            throw DomainError(Errc::BadConfig, "source entries must be strings or numbers");
        }
    }
    NumericMode mode = float_mode ? NumericMode::floating() : NumericMode::exact();
    return make_source(probs, mode);
}

json number_json(const Rational& r, bool float_mode) {
    if (float_mode) return to_double(r);
    return format_rational(r);
}

json profile_json(const LengthProfile& p) { return json(p.lengths()); }

json set_json(SymbolSet s) { return json(s.indices()); }

json certificate_json(const Certificate& c) {
    json j;
    if (const auto* sp = std::get_if<SubsetPairCertificate>(&c)) {
        j["kind"] = "subset-pair";
        j["u"] = set_json(sp->u);
        j["v"] = set_json(sp->v);
    } else if (const auto* dp = std::get_if<DominatingProfileCertificate>(&c)) {
        j["kind"] = "dominating-profile";
        j["profile"] = profile_json(dp->profile);
    } else if (const auto* lt = std::get_if<LeafTripleCertificate>(&c)) {
        j["kind"] = "leaf-triple";
        j["y"] = lt->y;
        j["y_sib"] = lt->y_sib;
        j["z"] = lt->z;
    }
    return j;
}

json verdict_json(const OptimalityVerdict& v) {
    json j;
    j["status"] = optimality_status_name(v.status);
    j["method"] = verdict_method_name(v.method);
    if (v.certificate) j["certificate"] = certificate_json(*v.certificate);
    return j;
}

json competition_json(const CompetitionResult& r, bool float_mode) {
    json j;
    j["wins"] = set_json(r.wins);
    j["losses"] = set_json(r.losses);
    j["ties"] = set_json(r.ties);
    j["p_win"] = number_json(r.p_win, float_mode);
    j["p_loss"] = number_json(r.p_loss, float_mode);
    j["advantage"] = number_json(r.advantage, float_mode);
    Dominance d = dominates(r);
    j["dominance"] = d == Dominance::Strict   ? "strict"
                     : d == Dominance::Weak   ? "weak"
                                              : "dominated";
    return j;
}

json source_json(const Source& s) {
    json arr = json::array();
    for (const auto& p : s.probabilities()) arr.push_back(format_rational(p));
    return arr;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"prefix-code competition engine"};
    app.require_subcommand(1);

    std::string source_arg, profile_arg, profile_b_arg, method_arg, sim_method = "leaf";
    std::string name_arg, eps_arg, set_arg, u_arg, v_arg;
    std::string out_path, json_path;
    bool float_mode = false;
    int n_arg = 0, max_len = 0, n_min = 0, n_max = 0, j_arg = -1, threads = 1;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    std::string universe_arg;

    auto* c_huffman = app.add_subcommand("huffman", "Canonical Huffman profile");
    c_huffman->add_option("--source", source_arg)->required();
    c_huffman->add_flag("--float", float_mode);

    auto* c_sf = app.add_subcommand("shannon-fano", "Shannon-Fano profile");
    c_sf->add_option("--source", source_arg)->required();
    c_sf->add_flag("--float", float_mode);

    auto* c_compete = app.add_subcommand("compete", "Profile a versus profile b");
    c_compete->add_option("--source", source_arg)->required();
    c_compete->add_option("--profile-a", profile_arg)->required();
    c_compete->add_option("--profile-b", profile_b_arg)->required();
    c_compete->add_flag("--float", float_mode);

    auto* c_check = app.add_subcommand("check", "Competitive optimality verdict");
    c_check->add_option("--source", source_arg)->required();
    c_check->add_option("--profile", profile_arg)->required();
    c_check->add_option("--method", method_arg)
        ->check(CLI::IsMember({"subset", "leaf", "brute", "hexahedron", "small-n"}))
        ->required();
    c_check->add_flag("--float", float_mode);

    auto* c_exists = app.add_subcommand("exists-optimal",
                                        "Does any competitively optimal code exist");
    c_exists->add_option("--source", source_arg)->required();
    c_exists->add_flag("--float", float_mode);

    auto* c_family = app.add_subcommand("family", "Constructed extremal families");
    c_family->add_option("--name", name_arg)
        ->check(CLI::IsMember({"one-third", "sf-gap"}))
        ->required();
    c_family->add_option("--n", n_arg)->required();
    c_family->add_option("--eps", eps_arg)->required();

    auto* c_fixture = app.add_subcommand("fixture", "Named example sources");
    c_fixture->add_option("--name", name_arg)
        ->check(CLI::IsMember({"two-huffman", "four-codes"}))
        ->required();

    auto* c_partition = app.add_subcommand("partition", "Kraft partition of a subset");
    c_partition->add_option("--profile", profile_arg)->required();
    c_partition->add_option("--set", set_arg)->required();
    c_partition->add_option("--complete-to", j_arg,
                            "instead return B with K(set + B) = 2^-j");
    c_partition->add_option("--universe", universe_arg, "defaults to the full alphabet");

    auto* c_dominate = app.add_subcommand("dominate", "Profile winning on u, losing on v");
    c_dominate->add_option("--profile", profile_arg)->required();
    c_dominate->add_option("--u", u_arg)->required();
    c_dominate->add_option("--v", v_arg)->required();

    auto* c_simulate = app.add_subcommand("simulate", "Random-source experiment, CSV out");
    c_simulate->add_option("--n-min", n_min)->required();
    c_simulate->add_option("--n-max", n_max)->required();
    c_simulate->add_option("--samples", samples)->required();
    c_simulate->add_option("--seed", seed)->required();
    c_simulate->add_option("--method", sim_method)
        ->check(CLI::IsMember({"leaf", "subset", "hexahedron"}));
    c_simulate->add_option("--threads", threads)->envname("PREFIXCOMP_THREADS");
    c_simulate->add_option("--out", out_path, "CSV file (default: stdout)");
    c_simulate->add_option("--json", json_path, "also write a JSON report");

    auto* c_enumerate = app.add_subcommand("enumerate", "All complete profiles");
    c_enumerate->add_option("--n", n_arg)->required();
    c_enumerate->add_option("--max-len", max_len, "defaults to n - 1");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_huffman->parsed()) {
            Source s = load_source(source_arg, float_mode);
            HuffmanResult h = huffman(s);
            json j;
            j["profile"] = profile_json(h.profile);
            j["expected_length"] = number_json(expected_length(s, h.profile), float_mode);
            emit(out, j);
        } else if (c_sf->parsed()) {
            Source s = load_source(source_arg, float_mode);
            LengthProfile p = shannon_fano(s);
            json j;
            j["profile"] = profile_json(p);
            j["expected_length"] = number_json(expected_length(s, p), float_mode);
            emit(out, j);
        } else if (c_compete->parsed()) {
            Source s = load_source(source_arg, float_mode);
            CompetitionResult r =
                compete(s, parse_profile(profile_arg), parse_profile(profile_b_arg));
            emit(out, competition_json(r, float_mode));
        } else if (c_check->parsed()) {
            Source s = load_source(source_arg, float_mode);
            auto method = verdict_method_from_name(method_arg);
            OptimalityVerdict v =
                is_competitively_optimal(s, parse_profile(profile_arg), *method);
            emit(out, verdict_json(v));
        } else if (c_exists->parsed()) {
            Source s = load_source(source_arg, float_mode);
            ExistenceResult r = exists_competitively_optimal_code(s);
            json j;
            j["exists"] = r.exists;
            if (r.witness) j["witness"] = profile_json(*r.witness);
            emit(out, j);
        } else if (c_family->parsed()) {
            Rational eps = parse_rational_arg(eps_arg, "--eps");
            FamilyInstance f = name_arg == "one-third" ? family_one_third(n_arg, eps)
                                                       : family_sf_gap(n_arg, eps);
            json j;
            j["source"] = source_json(f.source);
            j["reference_profile"] = profile_json(f.reference_profile);
            j["challenger_profile"] = profile_json(f.challenger_profile);
            j["predicted_advantage"] = format_rational(f.predicted_advantage);
            j["predicted_avg_length_gap"] = format_rational(f.predicted_avg_length_gap);
            emit(out, j);
        } else if (c_fixture->parsed()) {
            json j;
            if (name_arg == "two-huffman") {
                Source s = fixture_two_huffman();
                j["source"] = source_json(s);
                j["labels"] = s.labels();
            } else {
                FourCodesFixture f = fixture_four_codes();
                j["source"] = source_json(f.source);
                j["labels"] = f.source.labels();
                j["h1"] = profile_json(f.h1);
                j["h2"] = profile_json(f.h2);
                j["c1"] = profile_json(f.c1);
                j["c2"] = profile_json(f.c2);
            }
            emit(out, j);
        } else if (c_partition->parsed()) {
            LengthProfile p = parse_profile(profile_arg);
            SymbolSet a = parse_set(set_arg, "--set");
            json j;
            if (c_partition->count("--complete-to") > 0) {
                SymbolSet universe = universe_arg.empty()
                                         ? SymbolSet::full(p.size())
                                         : parse_set(universe_arg, "--universe");
                SymbolSet b = kraft_completion(p, universe, a, j_arg);
                j["b"] = set_json(b);
                j["kraft_sum"] = format_rational(kraft_sum(p, a.united(b)));
            } else {
                KraftPartition part = huffman_kraft_partition(p, a);
                j["base_set"] = set_json(part.base_set);
                j["kraft_sum"] = format_rational(kraft_sum(p, part.base_set));
                j["parts"] = json::array();
                for (size_t i = 0; i < part.parts.size(); ++i) {
                    if (part.parts[i].empty()) continue;
                    j["parts"].push_back({{"bit", i + 1},
                                          {"set", set_json(part.parts[i])}});
                }
            }
            emit(out, j);
        } else if (c_dominate->parsed()) {
            LengthProfile p = parse_profile(profile_arg);
            LengthProfile d = construct_dominating_profile(p, parse_set(u_arg, "--u"),
                                                           parse_set(v_arg, "--v"));
            json j;
            j["profile"] = profile_json(d);
            emit(out, j);
        } else if (c_simulate->parsed()) {
            ExperimentConfig cfg;
            cfg.n_min = n_min;
            cfg.n_max = n_max;
            cfg.samples_per_n = samples;
            cfg.seed = seed;
            cfg.method = sim_method == "subset"       ? VerdictMethod::SubsetExact
                         : sim_method == "hexahedron" ? VerdictMethod::Hexahedron
                                                      : VerdictMethod::LeafCondition;
            cfg.threads = threads;
            SimulationReport report = run_experiment(cfg);
            if (out_path.empty())
                write_report_csv(report, out);
            else
                write_report(report, out_path);
            if (!json_path.empty()) write_report_json(report, json_path);
        } else if (c_enumerate->parsed()) {
            int cap = c_enumerate->count("--max-len") > 0 ? max_len : n_arg - 1;
            json j = json::array();
            for (const LengthProfile& p : enumerate_complete_profiles(n_arg, cap))
                j.push_back(profile_json(p));
            emit(out, j);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace prefixcomp
