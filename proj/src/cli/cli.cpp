// Copyright 2026 The qnc Authors
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

#include "qnc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qnc/analysis.hpp"
#include "qnc/bounds.hpp"
#include "qnc/protocols.hpp"
#include "qnc/random.hpp"

namespace qnc::cli {

using nlohmann::json;

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::optional<uint64_t> seed;
    int jobs = 0;
    std::string format;
    std::string output;
};

struct InputFlags {
    std::string protocol;
    std::vector<double> theta1;
    std::vector<double> theta2;
    std::vector<unsigned> bits;
    std::optional<unsigned> i1;
    std::optional<unsigned> i2;
    bool averaged = false;
};

struct Row {
    std::string protocol;
    std::string sink;
    std::string kind;
    double value;
    std::vector<SourceAngles> argmin;
    std::string grid;
    json extra = json::object();
};

// Source kinds per protocol: 0 quantum, otherwise classical width.
std::vector<unsigned> source_layout(ProtocolId id) {
    switch (id) {
        case ProtocolId::xqq:
            return {0, 0};
        case ProtocolId::xqc:
            return {0, 1};
        case ProtocolId::x2c2c:
            return {2, 2};
        case ProtocolId::x3c3c:
            return {3, 3};
        case ProtocolId::classical:
            return {1, 1};
        case ProtocolId::xq3:
            return {0, 0, 0};
    }
    return {};
}

size_t count_quantum(const std::vector<unsigned> &layout) {
    return static_cast<size_t>(std::count(layout.begin(), layout.end(), 0u));
}

std::pair<size_t, size_t> parse_grid(const std::string &s) {
    auto x = s.find('x');
    size_t n1 = 0, n2 = 0;
    try {
        if (x == std::string::npos) {
            throw std::invalid_argument("");
        }
        size_t used = 0;
        n1 = std::stoul(s.substr(0, x), &used);
        if (used != x) {
            throw std::invalid_argument("");
        }
        n2 = std::stoul(s.substr(x + 1), &used);
        if (used != s.size() - x - 1) {
            throw std::invalid_argument("");
        }
    } catch (const std::exception &) {
        throw UsageError("--grid expects NxM, got '" + s + "'");
    }
    if (n1 < 8 || n2 < 8) {
        throw UsageError("--grid must be at least 8x8");
    }
    return {n1, n2};
}

uint64_t resolve_seed(const Common &c, const std::optional<std::string> &env) {
    if (c.seed) {
        return *c.seed;
    }
    if (env && !env->empty()) {
        try {
            size_t used = 0;
            uint64_t v = std::stoull(*env, &used);
            if (used == env->size()) {
                return v;
            }
        } catch (const std::exception &) {
        }
        throw UsageError("QNC_SEED must be a non-negative integer, got '" + *env + "'");
    }
    return 0;
}

std::string angles_field(const std::vector<SourceAngles> &a, bool first) {
    std::string s;
    for (size_t k = 0; k < a.size(); k++) {
        if (k) {
            s += ';';
        }
        s += format_value(first ? a[k].theta1 : a[k].theta2);
    }
    return s;
}

json angles_json(const std::vector<SourceAngles> &a) {
    if (a.empty()) {
        return nullptr;
    }
    json arr = json::array();
    for (const auto &x : a) {
        arr.push_back({x.theta1, x.theta2});
    }
    return arr;
}

json finite_or_null(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

class Reporter {
   public:
    Reporter(std::string command, json config) : command_(std::move(command)), config_(std::move(config)) {}

    void row(Row r) { rows_.push_back(std::move(r)); }
    void check(const CheckResult &c) { checks_.push_back(c); }
    void value(const std::string &key, json v) { values_[key] = std::move(v); }
    json &config() { return config_; }
    bool all_pass() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult &c) { return c.pass; });
    }
    const std::vector<CheckResult> &checks() const { return checks_; }

    std::string render(const std::string &format, uint64_t seed, double wall) const {
        if (format == "json") {
            json rows = json::array();
            for (const auto &r : rows_) {
                json j = {{"protocol", r.protocol}, {"sink", r.sink},   {"kind", r.kind},
                          {"value", r.value},       {"argmin", angles_json(r.argmin)},
                          {"grid", r.grid.empty() ? json(nullptr) : json(r.grid)}, {"seed", seed}};
                j.update(r.extra);
                rows.push_back(j);
            }
            json checks = json::array();
            for (const auto &c : checks_) {
                checks.push_back({{"anchor", c.anchor},
                                  {"detail", c.detail},
                                  {"residual", finite_or_null(c.residual)},
                                  {"tol", c.tol},
                                  {"pass", c.pass}});
            }
            json report = {{"schema_version", kSchemaVersion},
                           {"tool", "qnc"},
                           {"version", kVersion},
                           {"command", command_},
                           {"config", config_},
                           {"results", rows},
                           {"checks", checks},
                           {"values", values_},
                           {"wall_time_seconds", wall}};
            return report.dump(2) + "\n";
        }
        if (format == "csv") {
            std::string s = "protocol,sink,kind,value,argmin_theta1,argmin_theta2,grid,seed\n";
            for (const auto &r : rows_) {
                s += r.protocol + "," + r.sink + "," + r.kind + "," + format_value(r.value) + "," +
                     angles_field(r.argmin, true) + "," + angles_field(r.argmin, false) + "," + r.grid + "," +
                     std::to_string(seed) + "\n";
            }
            return s;
        }
        std::ostringstream s;
        for (const auto &[k, v] : values_.items()) {
            s << k << " = " << (v.is_number_float() ? format_value(v.get<double>()) : v.dump()) << "\n";
        }
        for (const auto &c : checks_) {
            s << (c.pass ? "[PASS] " : "[FAIL] ") << c.anchor << ": " << c.detail << " (residual "
              << format_value(c.residual) << ", tol " << format_value(c.tol) << ")\n";
        }
        return s.str();
    }

   private:
    std::string command_;
    json config_;
    std::vector<Row> rows_;
    std::vector<CheckResult> checks_;
    json values_ = json::object();
};

void add_common(CLI::App *sub, Common &c, const std::string &default_format, std::vector<std::string> formats) {
    sub->add_option("--seed", c.seed, "Seed; overrides QNC_SEED");
    sub->add_option("--jobs", c.jobs, "Worker threads for parallel sweeps (0 = default)")->check(CLI::NonNegativeNumber);
    c.format = default_format;
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--output,-o", c.output, "Write the report here instead of stdout");
}

void add_inputs(CLI::App *sub, InputFlags &in) {
    sub->add_option("--protocol", in.protocol, "xqq, xqc, x2c2c, x3c3c, classical or xq3")->required();
    sub->add_option("--theta1", in.theta1, "Polar angle of one quantum source; repeat per source");
    sub->add_option("--theta2", in.theta2, "Phase angle of one quantum source; repeat per source");
    sub->add_option("--bit", in.bits, "Value of one classical source; repeat per source");
    sub->add_option("--i1", in.i1, "Bit index decoded at t1 (1-based)");
    sub->add_option("--i2", in.i2, "Bit index decoded at t2 (1-based)");
    sub->add_flag("--averaged", in.averaged, "XQC: mix in the random-bit branch");
}

struct ResolvedInputs {
    ProtocolId id;
    std::vector<unsigned> layout;
    bool have_angles;
    bool have_bits;
};

ResolvedInputs check_inputs(const InputFlags &in) {
    ResolvedInputs r{parse_protocol(in.protocol), {}, false, false};
    r.layout = source_layout(r.id);
    size_t nq = count_quantum(r.layout), nc = r.layout.size() - nq;
    if (in.theta1.size() != in.theta2.size()) {
        throw UsageError("--theta1 and --theta2 must be given the same number of times");
    }
    if (!in.theta1.empty() && in.theta1.size() != nq) {
        throw UsageError(in.protocol + " takes " + std::to_string(nq) + " quantum source(s)");
    }
    if (!in.bits.empty() && in.bits.size() != nc) {
        throw UsageError(in.protocol + " takes " + std::to_string(nc) + " classical source(s)");
    }
    if (in.averaged && r.id != ProtocolId::xqc) {
        throw UsageError("--averaged only applies to xqc");
    }
    unsigned width = r.id == ProtocolId::x3c3c ? 3 : 2;
    for (auto i : {in.i1, in.i2}) {
        if (i && (r.id == ProtocolId::x2c2c || r.id == ProtocolId::x3c3c) && (*i < 1 || *i > width)) {
            throw UsageError("--i1/--i2 must lie in 1.." + std::to_string(width));
        }
        if (i && r.id != ProtocolId::x2c2c && r.id != ProtocolId::x3c3c) {
            throw UsageError("--i1/--i2 only apply to x2c2c and x3c3c");
        }
    }
    r.have_angles = !in.theta1.empty();
    r.have_bits = !in.bits.empty();
    return r;
}

ProtocolInput build_input(const ResolvedInputs &r, const InputFlags &in, Rng *fill) {
    ProtocolInput p;
    size_t q = 0, c = 0;
    for (unsigned w : r.layout) {
        if (w == 0) {
            if (r.have_angles) {
                p.sources.emplace_back(PureState::from_angles(in.theta1[q], in.theta2[q]));
            } else {
                p.sources.emplace_back(random_pure_state(*fill));
            }
            q++;
        } else {
            unsigned v = r.have_bits ? in.bits[c] : static_cast<unsigned>(fill->next_u64() % (1u << w));
            if (v >= (1u << w)) {
                throw UsageError("--bit value " + std::to_string(v) + " does not fit in " + std::to_string(w) +
                                 " bit(s)");
            }
            p.sources.emplace_back(Bits{v, w});
            c++;
        }
    }
    p.i1 = in.i1.value_or(1);
    p.i2 = in.i2.value_or(1);
    p.averaged = in.averaged;
    return p;
}

json input_config(const InputFlags &in) {
    return {{"protocol", in.protocol},
            {"theta1", in.theta1},
            {"theta2", in.theta2},
            {"bits", in.bits},
            {"i1", in.i1 ? json(*in.i1) : json(nullptr)},
            {"i2", in.i2 ? json(*in.i2) : json(nullptr)},
            {"averaged", in.averaged}};
}

// ---- run ----------------------------------------------------------------------------

void run_protocol(Reporter &rep, const InputFlags &in, const std::string &grid_flag, double refine_tol, int jobs) {
    ResolvedInputs r = check_inputs(in);
    std::string name(protocol_name(r.id));
    size_t nq = count_quantum(r.layout);
    bool explicit_grid = !grid_flag.empty();
    auto [n1, n2] = parse_grid(explicit_grid ? grid_flag : (r.id == ProtocolId::xq3 ? "16x8" : "64x32"));

    if (nq == 0 || r.have_angles) {
        // Enumerate every classical input (and index pair) that was left open.
        std::vector<std::vector<unsigned>> bit_sets;
        std::vector<unsigned> widths;
        for (unsigned w : r.layout) {
            if (w) {
                widths.push_back(w);
            }
        }
        if (r.have_bits || widths.empty()) {
            bit_sets.push_back(in.bits);
        } else {
            size_t total = 1;
            for (unsigned w : widths) {
                total <<= w;
            }
            for (size_t k = 0; k < total; k++) {
                std::vector<unsigned> b;
                size_t rest = k;
                for (size_t s = widths.size(); s-- > 0;) {
                    b.insert(b.begin(), static_cast<unsigned>(rest % (1u << widths[s])));
                    rest >>= widths[s];
                }
                bit_sets.push_back(b);
            }
        }
        bool qra = r.id == ProtocolId::x2c2c || r.id == ProtocolId::x3c3c;
        unsigned width = r.id == ProtocolId::x3c3c ? 3 : 2;
        std::vector<unsigned> i1s = in.i1 ? std::vector<unsigned>{*in.i1} : std::vector<unsigned>{};
        std::vector<unsigned> i2s = in.i2 ? std::vector<unsigned>{*in.i2} : std::vector<unsigned>{};
        for (unsigned k = 1; qra && k <= width; k++) {
            if (!in.i1) {
                i1s.push_back(k);
            }
            if (!in.i2) {
                i2s.push_back(k);
            }
        }
        if (!qra) {
            i1s = {1};
            i2s = {1};
        }
        std::vector<SinkValue> worst;
        size_t cases = 0;
        for (const auto &bits : bit_sets) {
            InputFlags f = in;
            f.bits = bits;
            ResolvedInputs rr = r;
            rr.have_bits = !bits.empty();
            for (unsigned i1 : i1s) {
                for (unsigned i2 : i2s) {
                    ProtocolInput p = build_input(rr, f, nullptr);
                    p.i1 = i1;
                    p.i2 = i2;
                    auto v = exact_values(r.id, p);
                    cases++;
                    if (worst.empty()) {
                        worst = v;
                    }
                    for (size_t s = 0; s < v.size(); s++) {
                        worst[s].value = std::min(worst[s].value, v[s].value);
                    }
                }
            }
        }
        for (const auto &v : worst) {
            Row row{name, v.sink, std::string(value_kind_name(v.kind)), v.value, {}, "", {}};
            row.extra["cases"] = cases;
            if (r.have_angles) {
                for (size_t k = 0; k < in.theta1.size(); k++) {
                    row.argmin.push_back({in.theta1[k], in.theta2[k]});
                }
            }
            rep.row(row);
        }
        return;
    }

    SearchOptions opt;
    opt.n1 = n1;
    opt.n2 = n2;
    opt.refine_tol = refine_tol;
    opt.jobs = jobs;
    std::string grid = std::to_string(n1) + "x" + std::to_string(n2);
    size_t nsinks = r.id == ProtocolId::xq3 ? 3 : 2;
    std::vector<unsigned> bs = {0};
    if (r.id == ProtocolId::xqc) {
        bs = r.have_bits ? std::vector<unsigned>{in.bits[0]} : std::vector<unsigned>{0, 1};
    }
    for (size_t sink = 0; sink < nsinks; sink++) {
        std::optional<FidelitySearchResult> best;
        for (unsigned b : bs) {
            ProtocolInput fixed;
            if (r.id == ProtocolId::xqc) {
                fixed.sources = {PureState::basis(1, 0), Bits{b, 1}};
                fixed.averaged = in.averaged;
            }
            auto res = worst_case_fidelity(sink_objective(r.id, sink, fixed), opt);
            if (!best || res.min_value < best->min_value) {
                best = res;
            }
        }
        bool success = r.id == ProtocolId::xqc && sink == 1;
        Row row{name, "t" + std::to_string(sink + 1),
                std::string(value_kind_name(success ? ValueKind::success_probability : ValueKind::fidelity)),
                best->min_value, best->argmin, grid, {}};
        row.extra["max_value"] = best->max_value;
        row.extra["refine_depth"] = best->depth;
        row.extra["converged"] = best->converged;
        rep.row(row);
    }
}

// ---- sample -------------------------------------------------------------------------

void sample_protocol(Reporter &rep, const InputFlags &in, uint64_t shots, uint64_t seed) {
    ResolvedInputs r = check_inputs(in);
    Rng fill(seed, 1);
    ProtocolInput p = build_input(r, in, &fill);
    // Echo the inputs actually used so the run can be repeated with explicit flags.
    json used = json::array();
    for (const auto &s : p.sources) {
        if (const auto *q = std::get_if<PureState>(&s)) {
            used.push_back({{"amplitudes",
                             {{q->amps()[0].real(), q->amps()[0].imag()}, {q->amps()[1].real(), q->amps()[1].imag()}}}});
        } else {
            used.push_back({{"bits", std::get<Bits>(s).value}});
        }
    }
    rep.config()["resolved_sources"] = used;
    auto exact = exact_values(r.id, p);
    auto st = sample(r.id, p, shots, seed);
    std::string name(protocol_name(r.id));
    for (size_t k = 0; k < st.sinks.size(); k++) {
        double pe = exact[k].value, f = st.frequency[k];
        double sd = std::sqrt(std::max(0.0, pe * (1 - pe)) / static_cast<double>(shots));
        double z = sd > 0 ? (f - pe) / sd : (f == pe ? 0.0 : std::numeric_limits<double>::infinity());
        Row row{name, st.sinks[k], std::string(value_kind_name(exact[k].kind)), f, {}, "", {}};
        row.extra = {{"shots", shots},
                     {"successes", st.successes[k]},
                     {"exact", pe},
                     {"standard_error", st.standard_error[k]},
                     {"z", finite_or_null(z)}};
        rep.row(row);
        rep.check({"sample-" + st.sinks[k], "empirical frequency within 4 standard errors of the exact value",
                   std::abs(z), 4, std::abs(z) <= 4});
    }
}

// ---- bounds -------------------------------------------------------------------------

void bounds_report(Reporter &rep, const std::string &theorem, uint64_t trials, uint64_t seed, double resolution,
                   double beta_step, int jobs) {
    if (theorem == "bit-copy") {
        auto s = solve_thm4(resolution, beta_step);
        rep.value("epsilon_star", s.epsilon_star);
        rep.value("fidelity_bound", s.fidelity_bound);
        rep.value("solver", s.solver);
        rep.value("resolution", s.resolution);
        rep.check({"bit-copy-epsilon", "threshold exceeds 1/12", std::max(0.0, 1.0 / 12 - s.epsilon_star), 0,
                   s.epsilon_star > 1.0 / 12});
        rep.check({"bit-copy-bound", "fidelity bound below 11/12", std::max(0.0, s.fidelity_bound - 11.0 / 12), 0,
                   s.fidelity_bound < 11.0 / 12});
    } else if (theorem == "general") {
        auto s = solve_thm3(resolution);
        rep.value("epsilon_star", s.epsilon_star);
        rep.value("fidelity_bound", s.fidelity_bound);
        rep.value("solver", s.solver);
        rep.value("resolution", s.resolution);
        rep.check({"general-epsilon", "threshold exceeds 0.017", std::max(0.0, 0.017 - s.epsilon_star), 0,
                   s.epsilon_star > 0.017});
        rep.check({"general-bound", "fidelity bound below 0.983", std::max(0.0, s.fidelity_bound - 0.983), 0,
                   s.fidelity_bound < 0.983});
    } else {
        auto r = theorem1_falsifier(trials, seed, jobs);
        rep.value("trials", r.trials);
        rep.value("max_min_fidelity", r.max_min_fidelity);
        rep.value("worst_trial", r.worst_trial);
        rep.value("distance_checks", r.distance_checks);
        rep.value("min_distance_margin", finite_or_null(r.min_distance_margin));
        rep.value("distance_violations", r.distance_violations);
        rep.check({"no-side-links-fidelity", "no random protocol beats 1/2 at both sinks",
                   std::max(0.0, r.max_min_fidelity - 0.5), 1e-6, r.max_min_fidelity <= 0.5 + 1e-6});
        rep.check({"no-side-links-image-distance", "images for b = 0 and 1 stay 4 eps apart",
                   static_cast<double>(r.distance_violations), 0, r.distance_violations == 0});
    }
}

void emit(const std::string &body, const Common &c, std::ostream &out) {
    if (c.output.empty()) {
        out << body;
        return;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) {
        throw IoError("cannot open '" + c.output + "' for writing");
    }
    f << body;
    f.flush();
    if (!f) {
        throw IoError("failed writing '" + c.output + "'");
    }
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
            const std::optional<std::string> &env_seed) {
    CLI::App app{"qnc: quantum network coding on the Butterfly network", "qnc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Common run_c, verify_c, bounds_c, sample_c;
    InputFlags run_in, sample_in;
    std::string grid_flag;
    double refine_tol = 1e-12;
    auto *run = app.add_subcommand("run", "Exact sink values; worst case over quantum inputs without angles");
    add_common(run, run_c, "csv", {"csv", "json"});
    add_inputs(run, run_in);
    run->add_option("--grid", grid_flag, "Per-source search grid NxM (default 64x32, 16x8 for xq3)");
    run->add_option("--refine-tol", refine_tol, "Stop refining once the local stencil is this flat")
        ->check(CLI::PositiveNumber);

    std::string suite = "all";
    double tol = 0;
    auto *verify = app.add_subcommand("verify", "Run the lemma, table and protocol checks");
    add_common(verify, verify_c, "text", {"text", "json"});
    verify->add_option("--suite", suite, "lemmas, tables, protocols or all")
        ->check(CLI::IsMember({"lemmas", "tables", "protocols", "all"}));
    verify->add_option("--tol", tol, "Override every check tolerance")->check(CLI::PositiveNumber);

    std::string theorem;
    uint64_t trials = 200;
    double resolution = 1e-6, beta_step = 1e-4;
    auto *bounds = app.add_subcommand("bounds", "Solve the upper-bound inequalities or run the no-side-link campaign");
    add_common(bounds, bounds_c, "text", {"text", "json"});
    bounds->add_option("--theorem", theorem, "no-sidelinks, bit-copy or general")
        ->required()
        ->check(CLI::IsMember({"no-sidelinks", "bit-copy", "general"}));
    bounds->add_option("--trials", trials, "Random protocols in the campaign")->check(CLI::PositiveNumber);
    bounds->add_option("--resolution", resolution, "Bisection resolution")->check(CLI::PositiveNumber);
    bounds->add_option("--beta-step", beta_step, "Scan step for |beta|")->check(CLI::PositiveNumber);

    uint64_t shots = 100000;
    auto *samp = app.add_subcommand("sample", "Monte-Carlo trajectories against the exact values");
    add_common(samp, sample_c, "csv", {"csv", "json"});
    add_inputs(samp, sample_in);
    samp->add_option("--shots", shots, "Trajectories per run");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForVersion &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    auto started = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    };
    try {
        if (run->parsed()) {
            uint64_t seed = resolve_seed(run_c, env_seed);
            json config = input_config(run_in);
            config.update({{"command", "run"}, {"grid", grid_flag}, {"refine_tol", refine_tol}, {"seed", seed},
                           {"jobs", run_c.jobs}, {"format", run_c.format}});
            Reporter rep("run", config);
            run_protocol(rep, run_in, grid_flag, refine_tol, run_c.jobs);
            emit(rep.render(run_c.format, seed, elapsed()), run_c, out);
            return kExitOk;
        }
        if (verify->parsed()) {
            uint64_t seed = resolve_seed(verify_c, env_seed);
            json config = {{"command", "verify"}, {"suite", suite}, {"tol", tol}, {"seed", seed},
                           {"jobs", verify_c.jobs}, {"format", verify_c.format}};
            Reporter rep("verify", config);
            for (const auto &c : run_suite(parse_suite(suite), tol, verify_c.jobs)) {
                rep.check(c);
            }
            emit(rep.render(verify_c.format, seed, elapsed()), verify_c, out);
            if (!rep.all_pass()) {
                for (const auto &c : rep.checks()) {
                    if (!c.pass) {
                        err << "qnc: check failed: " << c.anchor << "\n";
                    }
                }
                return kExitVerifyFailed;
            }
            return kExitOk;
        }
        if (bounds->parsed()) {
            uint64_t seed = resolve_seed(bounds_c, env_seed);
            json config = {{"command", "bounds"}, {"theorem", theorem},     {"trials", trials},
                           {"resolution", resolution}, {"beta_step", beta_step}, {"seed", seed},
                           {"jobs", bounds_c.jobs},   {"format", bounds_c.format}};
            Reporter rep("bounds", config);
            bounds_report(rep, theorem, trials, seed, resolution, beta_step, bounds_c.jobs);
            emit(rep.render(bounds_c.format, seed, elapsed()), bounds_c, out);
            return rep.all_pass() ? kExitOk : kExitVerifyFailed;
        }
        if (samp->parsed()) {
            if (shots < 1) {
                throw UsageError("--shots must be at least 1");
            }
            uint64_t seed = resolve_seed(sample_c, env_seed);
            json config = input_config(sample_in);
            config.update({{"command", "sample"}, {"shots", shots}, {"seed", seed}, {"jobs", sample_c.jobs},
                           {"format", sample_c.format}});
            Reporter rep("sample", config);
            sample_protocol(rep, sample_in, shots, seed);
            emit(rep.render(sample_c.format, seed, elapsed()), sample_c, out);
            return kExitOk;
        }
    } catch (const UsageError &e) {
        err << "qnc: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error &e) {
        err << "qnc: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError &e) {
        err << "qnc: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}

}  // namespace qnc::cli
