#pragma once

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "agc.hpp"

namespace agc::cli {

using ordered_json = nlohmann::ordered_json;

namespace detail {

struct IoOpts {
    std::string format;
    std::string out_path;
};

inline void add_io_opts(CLI::App* sub, IoOpts& io, const std::string& default_format) {
    io.format = default_format;
    sub->add_option("--format", io.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", io.out_path, "write output to a file instead of stdout");
}

inline void deliver(const std::string& payload, const IoOpts& io, std::ostream& out) {
    if (io.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(io.out_path, std::ios::binary);
    require(f.good(), errc::domain, "cannot open output file '" + io.out_path + "'");
    f << payload;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

// One CSV cell from a JSON scalar or a flat array (entries joined by ';').
inline std::string csv_cell(const ordered_json& v) {
    if (v.is_string()) return csv_escape(v.get<std::string>());
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ';';
            s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
        }
        return csv_escape(s);
    }
    return v.dump();
}

inline std::string object_payload(const ordered_json& obj, const std::string& format) {
    if (format == "json") return obj.dump() + "\n";
    std::string out = "key,value\n";
    for (auto it = obj.begin(); it != obj.end(); ++it)
        out += it.key() + "," + csv_cell(it.value()) + "\n";
    return out;
}

inline std::string rows_payload(const std::vector<ordered_json>& rows, const std::string& format) {
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) arr.push_back(r);
        return arr.dump() + "\n";
    }
    std::string out;
    if (!rows.empty()) {
        bool first = true;
        for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
            if (!first) out += ',';
            out += it.key();
            first = false;
        }
        out += '\n';
        for (const auto& r : rows) {
            first = true;
            for (auto it = r.begin(); it != r.end(); ++it) {
                if (!first) out += ',';
                out += csv_cell(it.value());
                first = false;
            }
            out += '\n';
        }
    }
    return out;
}

}  // namespace detail

/// Runs one CLI invocation. `args` is the command line without the program
/// name, in natural order. Exit status: 0 success, 2 flag errors, 3 domain
/// errors (the message names the violated precondition).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"desk-scale toolkit for codes, curves and asymptotic bounds"};
    app.require_subcommand(1);

    // bounds
    std::uint64_t bounds_q = 0;
    std::size_t bounds_samples = 101;
    detail::IoOpts bounds_io;
    auto* bounds_cmd = app.add_subcommand("bounds", "rate/distance bound table for one alphabet size");
    bounds_cmd->add_option("--q", bounds_q, "alphabet size q >= 2")->required();
    bounds_cmd->add_option("--samples", bounds_samples, "number of delta samples on [0,1]")
        ->capture_default_str();
    detail::add_io_opts(bounds_cmd, bounds_io, "csv");

    // crossover
    std::uint64_t cross_q = 0;
    detail::IoOpts cross_io;
    auto* cross_cmd = app.add_subcommand("crossover", "where (if at all) the TVZ line exceeds the GV curve");
    cross_cmd->add_option("--q", cross_q, "prime square q >= 9")->required();
    detail::add_io_opts(cross_cmd, cross_io, "json");

    // rs
    std::uint64_t rs_q = 0;
    std::size_t rs_n = 0, rs_k = 0;
    detail::IoOpts rs_io;
    auto* rs_cmd = app.add_subcommand("rs", "Reed-Solomon code parameters (or the generator matrix)");
    rs_cmd->add_option("--q", rs_q, "field order (prime power, exponent <= 4)")->required();
    rs_cmd->add_option("--n", rs_n, "code length, n <= q")->required();
    rs_cmd->add_option("--k", rs_k, "code dimension, 1 <= k <= n")->required();
    detail::add_io_opts(rs_cmd, rs_io, "json");

    // agcode
    std::string agc_curve;
    long long agc_m = 0;
    detail::IoOpts agc_io;
    auto* agc_cmd = app.add_subcommand("agcode", "evaluation code from a one-point divisor on a curve");
    agc_cmd->add_option("--curve", agc_curve, "curve spec E[q=...;A=...;B=...]")->required();
    agc_cmd->add_option("--m", agc_m, "divisor multiplicity at O_E")->required();
    detail::add_io_opts(agc_cmd, agc_io, "json");

    // elliptic
    std::string ell_curve;
    bool ell_points = false, ell_group = false, ell_j = false, ell_ss = false;
    detail::IoOpts ell_io;
    auto* ell_cmd = app.add_subcommand("elliptic", "inspect one curve over a small field");
    ell_cmd->add_option("--curve", ell_curve, "curve spec E[q=...;A=...;B=...]")->required();
    auto* f_points = ell_cmd->add_flag("--points", ell_points, "list all rational points");
    auto* f_group = ell_cmd->add_flag("--group", ell_group, "group structure Z/n1 x Z/n2");
    auto* f_j = ell_cmd->add_flag("--j", ell_j, "j-invariant");
    auto* f_ss = ell_cmd->add_flag("--supersingular", ell_ss, "supersingularity test");
    f_points->excludes(f_group)->excludes(f_j)->excludes(f_ss);
    f_group->excludes(f_j)->excludes(f_ss);
    f_j->excludes(f_ss);
    detail::add_io_opts(ell_cmd, ell_io, "json");

    // supersingular
    std::uint32_t ss_p = 0;
    detail::IoOpts ss_io;
    auto* ss_cmd = app.add_subcommand("supersingular", "count supersingular classes over F_{p^2}");
    ss_cmd->add_option("--p", ss_p, "prime 5 <= p <= 100")->required();
    detail::add_io_opts(ss_cmd, ss_io, "json");

    // x0
    long long x0_ell = 0;
    detail::IoOpts x0_io;
    auto* x0_cmd = app.add_subcommand("x0", "genus and ramification profile of X_0(ell)");
    x0_cmd->add_option("--ell", x0_ell, "prime ell > 3")->required();
    detail::add_io_opts(x0_cmd, x0_io, "json");

    // ihara
    std::uint32_t ih_p = 0;
    std::string ih_ells;
    detail::IoOpts ih_io;
    auto* ih_cmd = app.add_subcommand("ihara", "point-count/genus ratio table for X_0(ell)");
    ih_cmd->add_option("--p", ih_p, "prime p >= 5, p != ell")->required();
    ih_cmd->add_option("--ells", ih_ells, "comma-separated primes, each = 11 mod 12")->required();
    detail::add_io_opts(ih_cmd, ih_io, "csv");

    // channel
    std::uint64_t ch_q = 0, ch_seed = 0;
    std::size_t ch_n = 0, ch_trials = 0;
    double ch_perr = 0.0;
    detail::IoOpts ch_io;
    auto* ch_cmd = app.add_subcommand("channel", "weight samples from the q-ary symmetric channel");
    ch_cmd->add_option("--q", ch_q, "alphabet size q >= 2")->required();
    ch_cmd->add_option("--n", ch_n, "word length")->required();
    ch_cmd->add_option("--perr", ch_perr, "symbol error probability in [0, 1 - 1/q]")->required();
    ch_cmd->add_option("--trials", ch_trials, "number of sampled words")->required();
    ch_cmd->add_option("--seed", ch_seed, "64-bit RNG seed")->required();
    detail::add_io_opts(ch_cmd, ch_io, "csv");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*bounds_cmd) {
            auto rows = bound_table(bounds_q, bounds_samples);
            if (bounds_io.format == "csv") {
                detail::deliver(bound_table_csv(rows), bounds_io, out);
            } else {
                std::vector<ordered_json> jrows;
                jrows.reserve(rows.size());
                for (const auto& r : rows)
                    jrows.push_back({{"delta", r.delta},
                                     {"singleton", r.r_singleton},
                                     {"plotkin", r.r_plotkin},
                                     {"gv", r.r_gv},
                                     {"tvz", r.r_tvz}});
                detail::deliver(detail::rows_payload(jrows, "json"), bounds_io, out);
            }
        } else if (*cross_cmd) {
            auto res = tvz_beats_gv(cross_q);
            ordered_json j;
            j["q"] = cross_q;
            j["beats"] = res.beats;
            if (res.beats) {
                j["delta_lo"] = res.delta_lo;
                j["delta_hi"] = res.delta_hi;
            }
            j["max_gap"] = res.max_gap;
            detail::deliver(detail::object_payload(j, cross_io.format), cross_io, out);
        } else if (*rs_cmd) {
            std::uint32_t p = 0, m = 0;
            factor_prime_power(rs_q, p, m);
            Field f(p, m);
            require(rs_n >= 1 && rs_n <= f.order(), errc::k_out_of_range, "need 1 <= n <= q");
            std::vector<FieldElement> alphas;
            alphas.reserve(rs_n);
            for (std::size_t i = 0; i < rs_n; ++i) alphas.push_back(f.element_at(i));
            LinearCode code = rs_generator(f, alphas, rs_k);
            if (rs_io.format == "csv") {
                detail::deliver(code_to_csv(code), rs_io, out);
            } else {
                ordered_json j;
                j["n"] = code.n;
                j["k"] = code.k;
                j["d"] = code.n - code.k + 1;  // exact for Reed-Solomon
                j["d_exact"] = true;
                detail::deliver(detail::object_payload(j, "json"), rs_io, out);
            }
        } else if (*agc_cmd) {
            WeierstrassCurve E = parse_curve(agc_curve);
            auto divisor = OnePointDivisor::elliptic(E, agc_m);
            if (agc_io.format == "csv") {
                detail::deliver(code_to_csv(ag_code_all_points(divisor)), agc_io, out);
            } else {
                AgParams p = ag_params_all_points(divisor);
                ordered_json j;
                j["n"] = p.n;
                j["k"] = p.k;
                j["d"] = p.d;
                j["d_exact"] = p.d_exact;
                j["g"] = p.genus;
                j["degG"] = p.deg_g;
                detail::deliver(detail::object_payload(j, "json"), agc_io, out);
            }
        } else if (*ell_cmd) {
            WeierstrassCurve E = parse_curve(ell_curve);
            ordered_json j;
            if (ell_points) {
                auto pts = enumerate_points(E);
                j["N"] = pts.size();
                ordered_json arr = ordered_json::array();
                for (const auto& P : pts) arr.push_back(P.str());
                j["points"] = arr;
            } else if (ell_group) {
                auto g = group_structure(E);
                j["n1"] = g.n1;
                j["n2"] = g.n2;
                j["N"] = g.N;
            } else if (ell_j) {
                j["j"] = E.j_invariant().str();
            } else if (ell_ss) {
                std::uint64_t n = point_count(E);
                std::int64_t t =
                    static_cast<std::int64_t>(E.field().order()) + 1 - static_cast<std::int64_t>(n);
                j["supersingular"] = is_supersingular(E);
                j["trace"] = t;
                j["N"] = n;
            } else {
                j["curve"] = E.str();
                j["q"] = E.field().order();
                j["j"] = E.j_invariant().str();
                j["N"] = point_count(E);
                j["supersingular"] = is_supersingular(E);
            }
            detail::deliver(detail::object_payload(j, ell_io.format), ell_io, out);
        } else if (*ss_cmd) {
            auto js = supersingular_j_list(ss_p);
            ordered_json j;
            j["p"] = ss_p;
            j["q"] = static_cast<std::uint64_t>(ss_p) * ss_p;
            j["count"] = js.size();
            ordered_json arr = ordered_json::array();
            for (const auto& e : js) arr.push_back(e.str());
            j["j_list"] = arr;
            detail::deliver(detail::object_payload(j, ss_io.format), ss_io, out);
        } else if (*x0_cmd) {
            X0Data d = x0_ramification(x0_ell);
            ordered_json j;
            j["ell"] = d.ell;
            j["genus"] = d.genus;
            j["degree"] = d.degree;
            j["nu2"] = d.nu2;
            j["nu3"] = d.nu3;
            j["cusp_indices"] = ordered_json::array({d.cusp_indices.first, d.cusp_indices.second});
            detail::deliver(detail::object_payload(j, x0_io.format), x0_io, out);
        } else if (*ih_cmd) {
            std::vector<long long> ells;
            std::size_t pos = 0;
            while (pos <= ih_ells.size()) {
                auto comma = ih_ells.find(',', pos);
                std::string tok =
                    ih_ells.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                require(!tok.empty(), errc::domain, "--ells must be a comma-separated list of primes");
                long long v = 0;
                for (char ch : tok) {
                    require(ch >= '0' && ch <= '9', errc::domain, "bad prime '" + tok + "' in --ells");
                    v = v * 10 + (ch - '0');
                }
                ells.push_back(v);
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            auto rows = ihara_table(ih_p, ells);
            if (ih_io.format == "csv") {
                detail::deliver(ihara_csv(rows), ih_io, out);
            } else {
                std::vector<ordered_json> jrows;
                jrows.reserve(rows.size());
                for (const auto& r : rows)
                    jrows.push_back({{"ell", r.ell},
                                     {"genus", r.genus},
                                     {"lower_bound", r.lower_bound.str()},
                                     {"ratio", r.ratio.str()}});
                detail::deliver(detail::rows_payload(jrows, "json"), ih_io, out);
            }
        } else if (*ch_cmd) {
            ChannelSpec spec(ch_q, ch_perr, ch_seed);
            ChannelSampler sampler(spec);
            if (ch_io.format == "csv") {
                std::string csv = "trial,weight\n";
                for (std::size_t t = 0; t < ch_trials; ++t) {
                    auto e = sampler.sample(ch_n);
                    std::size_t w = 0;
                    for (auto v : e) w += (v != 0) ? 1 : 0;
                    csv += std::to_string(t) + "," + std::to_string(w) + "\n";
                }
                detail::deliver(csv, ch_io, out);
            } else {
                std::vector<ordered_json> jrows;
                jrows.reserve(ch_trials);
                for (std::size_t t = 0; t < ch_trials; ++t) {
                    auto e = sampler.sample(ch_n);
                    std::size_t w = 0;
                    for (auto v : e) w += (v != 0) ? 1 : 0;
                    jrows.push_back({{"trial", t}, {"weight", w}});
                }
                detail::deliver(detail::rows_payload(jrows, "json"), ch_io, out);
            }
        }
    } catch (const agc::error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace agc::cli
