/*
   Copyright 2026 The convexq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "convexq/cli.hpp"
#include "convexq/enumeration.hpp"
#include "convexq/explorer.hpp"
#include "convexq/montecarlo.hpp"
#include "convexq/verification.hpp"

namespace convexq::cli {

namespace {

struct VerifyOptions {
    std::int64_t i = 0;
    std::int64_t n = 0;
    std::int64_t all_up_to = 0;
    bool ledger = false;
};

struct EnumerateOptions {
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::string format = "json";
};

struct SimulateOptions {
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::string x;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double z_threshold = 4.0;
    std::string format = "text";
};

struct ExploreOptions {
    std::int64_t max_a = 0;
    std::int64_t max_b = 0;
    std::int64_t max_size = 0;
    std::int64_t max_m = 0;
    std::int64_t max_n = 0;
    bool set_semantics = false;
    std::uint64_t node_cap = SearchBounds{}.node_cap;
};

struct RenderOptions {
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::string out_dir;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    if (opt.all_up_to > 0) {
        if (opt.all_up_to < 2) throw std::invalid_argument("--all-up-to needs N >= 2");
        std::size_t pairs = 0;
        std::size_t failures = 0;
        for (std::int64_t n = 2; n <= opt.all_up_to; ++n) {
            for (std::int64_t i = 1; i < n; ++i) {
                const auto report = verify_all(i, n);
                ++pairs;
                if (report.all_passed()) {
                    out << "i=" << i << " n=" << n << ": ok, lhs = rhs = " << to_string(report.rhs) << "\n";
                    if (opt.ledger) out << format_report(report, true);
                } else {
                    ++failures;
                    out << format_report(report, true);
                }
            }
        }
        if (failures == 0) {
            out << pairs << " pairs, all pass\n";
            return kOk;
        }
        out << pairs << " pairs, " << failures << " FAILED\n";
        return kCheckFailed;
    }
    const auto report = verify_all(opt.i, opt.n);
    out << format_report(report, opt.ledger);
    return report.all_passed() ? kOk : kCheckFailed;
}

int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out) {
    const TriangleSpec spec(opt.i, opt.j);
    out << (opt.format == "csv" ? enumeration_csv(spec) : enumeration_json(spec));
    return kOk;
}

std::string format_double(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << v;
    return s.str();
}

int cmd_simulate(const SimulateOptions& opt, std::ostream& out) {
    const SimulationConfig config{TriangleSpec(opt.i, opt.j), parse_fraction(opt.x), opt.trials, opt.seed};
    validate(config);
    if (opt.threads < 1) throw std::invalid_argument("--threads must be >= 1");
    const auto table = simulate(config, opt.threads);
    const auto report = compare(table, config, opt.z_threshold);

    if (opt.format == "json") {
        nlohmann::ordered_json doc;
        doc["i"] = opt.i;
        doc["j"] = opt.j;
        doc["x"] = config.x.get_str();
        doc["trials"] = opt.trials;
        doc["seed"] = opt.seed;
        doc["zThreshold"] = opt.z_threshold;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& r : report.rows) {
            nlohmann::ordered_json row;
            auto verts = nlohmann::ordered_json::array();
            for (const auto& v : r.polygon.vertices()) verts.push_back({v.x, v.y});
            row["vertices"] = std::move(verts);
            row["count"] = r.count;
            row["empirical"] = format_double(r.empirical);
            row["exact"] = r.exact.get_str();
            row["z"] = format_double(r.z);
            row["flagged"] = r.flagged;
            rows.push_back(std::move(row));
        }
        doc["rows"] = std::move(rows);
        doc["exactTotal"] = report.exact_total.get_str();
        doc["normalized"] = report.normalized;
        doc["flagged"] = report.flagged_count;
        doc["foreign"] = report.foreign.size();
        out << doc.dump(2) << "\n";
    } else {
        out << "triangle i=" << opt.i << " j=" << opt.j << " x=" << config.x.get_str() << " trials=" << opt.trials
            << " seed=" << opt.seed << "\n";
        out << "index,count,empirical,exact,z,flag,vertices\n";
        for (std::size_t m = 0; m < report.rows.size(); ++m) {
            const auto& r = report.rows[m];
            out << m << ',' << r.count << ',' << format_double(r.empirical) << ',' << r.exact.get_str() << ','
                << format_double(r.z) << ',' << (r.flagged ? "FLAG" : "ok") << ',' << to_string(r.polygon) << "\n";
        }
        out << "normalization: sum of exact probabilities = " << report.exact_total.get_str()
            << (report.normalized ? " (ok)" : " (FAIL)") << "\n";
        for (const auto& p : report.foreign) out << "foreign polygon: " << to_string(p) << "\n";
        out << "flagged rows (|z| > " << format_double(opt.z_threshold) << "): " << report.flagged_count << "\n";
    }
    return report.ok() ? kOk : kCheckFailed;
}

int cmd_explore(const ExploreOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.max_a < 0 || opt.max_b < 0 || opt.max_size < 1 || opt.max_m < 1 || opt.max_n < 1) {
        throw std::invalid_argument("explore bounds need max-a, max-b >= 0 and max-size, max-m, max-n >= 1");
    }
    const auto mode = opt.set_semantics ? SignatureMode::set : SignatureMode::multiset;
    std::vector<Signature> found;
    try {
        found = search_unit_multisets({opt.max_a, opt.max_b, opt.max_size, opt.node_cap});
    } catch (const SearchCapExceeded& e) {
        err << "explore: " << e.what() << " (raise --node-cap or shrink the bounds)\n";
        return kUsage;
    }
    out << "search bounds: max-a=" << opt.max_a << " max-b=" << opt.max_b << " max-size=" << opt.max_size << " ("
        << (opt.set_semantics ? "set" : "multiset") << " semantics)\n";
    out << "match bounds: max-m=" << opt.max_m << " max-n=" << opt.max_n << "\n";
    out << "unit multisets found: " << found.size() << "\n";
    for (const auto& sig : found) {
        out << to_string(sig) << ": ";
        const auto matches = match_signature(sig, opt.max_m, opt.max_n, mode);
        if (matches.empty()) {
            out << "no triangle within bounds";
        } else {
            out << "matched by";
            for (const auto& [m, n] : matches) out << " (" << m << "," << n << ")";
        }
        out << "\n";
    }
    return kOk;
}

int cmd_render(const RenderOptions& opt, std::ostream& out, std::ostream& err) {
    const TriangleSpec spec(opt.i, opt.j);
    namespace fs = std::filesystem;
    const fs::path dir(opt.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        err << "render: cannot create " << dir.string() << ": " << ec.message() << "\n";
        return kCheckFailed;
    }
    const auto polygons = enumerate_polygons(spec);
    for (std::size_t m = 0; m < polygons.size(); ++m) {
        const fs::path file = dir / ("poly_" + std::to_string(m) + ".svg");
        std::ofstream stream(file, std::ios::binary | std::ios::trunc);
        stream << render_svg(polygons[m]);
        stream.close();
        if (!stream) {
            err << "render: cannot write " << file.string() << "\n";
            return kCheckFailed;
        }
        out << file.string() << "\n";
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of a q-polynomial identity over convex lattice chains", "convexq"};
    app.require_subcommand(1);

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "Check every identity form for a pair (i, n)");
    auto* vi = verify->add_option("--i", vopt.i, "i with 1 <= i < n");
    auto* vn = verify->add_option("--n", vopt.n, "n > i");
    auto* vall = verify->add_option("--all-up-to", vopt.all_up_to, "Sweep every 1 <= i < n <= N");
    vall->excludes(vi)->excludes(vn);
    vi->needs(vn);
    vn->needs(vi);
    verify->add_flag("--ledger", vopt.ledger, "Always print the per-term ledgers");

    EnumerateOptions eopt;
    auto* enumerate = app.add_subcommand("enumerate", "List every convex chain of a triangle");
    enumerate->add_option("--i", eopt.i, "Horizontal leg")->required();
    enumerate->add_option("--j", eopt.j, "Vertical leg")->required();
    enumerate->add_option("--format", eopt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    SimulateOptions sopt;
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo run of the point-selection process");
    simulate_cmd->add_option("--i", sopt.i, "Horizontal leg")->required();
    simulate_cmd->add_option("--j", sopt.j, "Vertical leg")->required();
    simulate_cmd->add_option("--x", sopt.x, "Selection probability as p/q")->required();
    simulate_cmd->add_option("--trials", sopt.trials, "Number of rounds");
    simulate_cmd->add_option("--seed", sopt.seed, "64-bit seed");
    simulate_cmd->add_option("--threads", sopt.threads, "Worker threads (result does not depend on it)");
    simulate_cmd->add_option("--z-threshold", sopt.z_threshold, "Flag rows with |z| above this");
    simulate_cmd->add_option("--format", sopt.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    ExploreOptions xopt;
    auto* explore = app.add_subcommand("explore", "Bounded search for unit multisets and matching triangles");
    explore->add_option("--max-a", xopt.max_a, "Largest x exponent")->required();
    explore->add_option("--max-b", xopt.max_b, "Largest (1-x) exponent")->required();
    explore->add_option("--max-size", xopt.max_size, "Largest multiset size")->required();
    explore->add_option("--max-m", xopt.max_m, "Largest triangle leg m")->required();
    explore->add_option("--max-n", xopt.max_n, "Largest triangle leg n")->required();
    explore->add_flag("--set-semantics", xopt.set_semantics, "Compare signatures as sets");
    explore->add_option("--node-cap", xopt.node_cap, "Search node budget");

    RenderOptions ropt;
    auto* render = app.add_subcommand("render", "Write one SVG per convex chain");
    render->add_option("--i", ropt.i, "Horizontal leg")->required();
    render->add_option("--j", ropt.j, "Vertical leg")->required();
    render->add_option("--out", ropt.out_dir, "Output directory")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "convexq: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (verify->parsed()) {
            if (vopt.all_up_to == 0 && vi->count() == 0) {
                throw std::invalid_argument("verify needs --i and --n, or --all-up-to");
            }
            return cmd_verify(vopt, out);
        }
        if (enumerate->parsed()) return cmd_enumerate(eopt, out);
        if (simulate_cmd->parsed()) return cmd_simulate(sopt, out);
        if (explore->parsed()) return cmd_explore(xopt, out, err);
        if (render->parsed()) return cmd_render(ropt, out, err);
    } catch (const std::invalid_argument& e) {
        err << "convexq: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace convexq::cli
