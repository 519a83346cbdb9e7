// Copyright 2026 The loe-page Authors
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

#include "loe/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "loe/curve_io.hpp"
#include "loe/error.hpp"
#include "loe/haar.hpp"
#include "loe/montecarlo.hpp"
#include "loe/nc_lattice.hpp"
#include "loe/page.hpp"
#include "loe/purity_exact.hpp"
#include "loe/weingarten.hpp"

namespace loe::cli {

namespace {

ExactScalar parse_rational(const std::string &token) {
    require(!token.empty(), "invalid_number", "empty number in list");
    if (token.find('/') != std::string::npos) {
        ExactScalar q;
        if (q.set_str(token, 10) != 0 || q.get_den() == 0) {
            fail("invalid_number", "cannot parse '" + token + "' as a rational");
        }
        q.canonicalize();
        return q;
    }
    // Decimal: [sign] digits [. digits], converted exactly.
    std::size_t i = 0;
    bool negative = false;
    if (token[i] == '+' || token[i] == '-') {
        negative = token[i] == '-';
        ++i;
    }
    std::string digits;
    int scale = 0;
    bool seen_point = false;
    for (; i < token.size(); ++i) {
        const char c = token[i];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            scale += seen_point ? 1 : 0;
        } else {
            fail("invalid_number", "cannot parse '" + token + "' as an exact number");
        }
    }
    require(!digits.empty(), "invalid_number", "cannot parse '" + token + "' as an exact number");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
    ExactScalar q(mpz_class(digits), den);
    q.canonicalize();
    return negative ? ExactScalar(-q) : q;
}

std::vector<ExactScalar> parse_rational_list(const std::string &text) {
    std::vector<ExactScalar> out;
    for (const auto &item : split_list(text)) {
        out.push_back(parse_rational(item));
    }
    require(!out.empty(), "invalid_number", "empty number list");
    return out;
}

std::vector<double> parse_double_list(const std::string &text) {
    std::vector<double> out;
    for (const auto &item : split_list(text)) {
        std::size_t used = 0;
        double x = 0;
        try {
            x = std::stod(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        require(used == item.size() && used > 0, "invalid_number", "cannot parse '" + item + "' as a number");
        out.push_back(x);
    }
    require(!out.empty(), "invalid_number", "empty number list");
    return out;
}

std::vector<EntropyOrder> parse_orders(const std::string &text) {
    std::vector<EntropyOrder> orders;
    for (const auto &item : split_list(text)) {
        const EntropyOrder o = EntropyOrder::parse(item);
        bool duplicate = false;
        for (const auto &seen : orders) {
            duplicate = duplicate || seen == o;
        }
        if (!duplicate) {
            orders.push_back(o);
        }
    }
    require(!orders.empty(), "invalid_order", "no entropy orders given");
    return orders;
}

std::string decimal(const ExactScalar &q) { return format_double(q.get_d()); }

std::uint64_t resolve_seed(const std::optional<std::uint64_t> &flag) {
    if (flag) {
        return *flag;
    }
    if (const char *env = std::getenv("LOE_SEED"); env != nullptr && *env != '\0') {
        const std::string text(env);
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(text, &used, 0);
        } catch (const std::exception &) {
            used = 0;
        }
        require(used == text.size(), "invalid_seed", "LOE_SEED='" + text + "' is not an unsigned integer");
        return v;
    }
    fail("missing_seed", "stochastic commands need --seed or LOE_SEED");
}

struct Sink {
    std::ostream *stream = nullptr;
    std::unique_ptr<std::ofstream> file;
};

Sink open_sink(const std::string &path, std::ostream &fallback) {
    Sink s;
    if (path.empty() || path == "-") {
        s.stream = &fallback;
        return s;
    }
    s.file = std::make_unique<std::ofstream>(path);
    if (!*s.file) {
        fail_runtime("io_error", "cannot write '" + path + "'");
    }
    s.stream = s.file.get();
    return s;
}

void emit_curve(const EntropyCurve &curve, const std::string &format, const std::string &path, std::ostream &out) {
    Sink sink = open_sink(path, out);
    if (format == "json") {
        write_curve_json(curve, *sink.stream);
    } else {
        write_curve_csv(curve, *sink.stream);
    }
    sink.stream->flush();
    if (!*sink.stream) {
        fail_runtime("io_error", "write failed");
    }
}

// Writes a small table as CSV or as a JSON array of objects.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    // Column indices rendered as JSON numbers rather than strings.
    std::vector<bool> numeric;

    void write(std::ostream &out, const std::string &format) const {
        if (format == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto &row : rows) {
                nlohmann::json obj = nlohmann::json::object();
                for (std::size_t c = 0; c < columns.size(); ++c) {
                    if (numeric[c]) {
                        obj[columns[c]] = row[c] == "nan" ? nlohmann::json(nullptr) : nlohmann::json::parse(row[c]);
                    } else {
                        obj[columns[c]] = row[c];
                    }
                }
                arr.push_back(obj);
            }
            out << arr.dump(2) << '\n';
            return;
        }
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out << (c ? "," : "") << columns[c];
        }
        out << '\n';
        for (const auto &row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                out << (c ? "," : "") << row[c];
            }
            out << '\n';
        }
    }
};

CLI::Option *add_format(CLI::App *sub, std::string &format) {
    return sub->add_option("--format", format, "Output encoding")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        std::string item = text.substr(start, end - start);
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
        require(!item.empty() || text.empty(), "invalid_list", "empty item in list '" + text + "'");
        if (!item.empty()) {
            out.push_back(item);
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Haar-averaged local-operator entanglement: exact replica sums, asymptotics and Monte Carlo.", "loe"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);
    app.set_version_flag("--version", "loe 1.0.0");

    // exact-purity
    struct {
        int k = 2;
        std::int64_t dim_a = 0;
        std::int64_t dim_b = 0;
        std::string moments;
        bool breakdown = false;
        bool raw = false;
        bool second_moment = false;
        bool state = false;
        bool plain = false;
        int series = 0;
        std::string backend = "characters";
        std::string format = "csv";
    } ex;
    auto *exact = app.add_subcommand("exact-purity", "Exact Haar-averaged operator k-purity (rational arithmetic)");
    exact->add_option("--k", ex.k, "Renyi order (1..4; state mode up to 8)")->required();
    exact->add_option("--dimA", ex.dim_a, "Dimension of subsystem A");
    exact->add_option("--dimB", ex.dim_b, "Dimension of the complement");
    exact->add_option("--moments", ex.moments, "Normalized moments <O>,<O^2>,... up to order 2k (8 with --second-moment)");
    exact->add_flag("--breakdown", ex.breakdown, "CSV of contributions per cycle type of sigma");
    exact->add_flag("--raw", ex.raw, "Skip the <O^2> = 1 check");
    exact->add_flag("--second-moment", ex.second_moment, "Average of the squared 2-purity instead");
    exact->add_flag("--state", ex.state, "Haar pure-state purity on the doubled space (no moments)");
    exact->add_flag("--plain", ex.plain, "With --state: undoubled space of dimension dimA*dimB");
    exact->add_option("--series", ex.series, "Print this many coefficients of the half-cut 1/D expansion instead")
        ->check(CLI::Range(1, 64));
    exact->add_option("--backend", ex.backend, "Weingarten backend")->check(CLI::IsMember({"characters", "gram"}));
    add_format(exact, ex.format);

    // asym-purity
    struct {
        int k = 2;
        std::int64_t dim_a = 0;
        std::int64_t dim_b = 0;
        std::string moments;
        std::string cumulants;
        std::optional<double> kappa4;
        std::string format = "csv";
    } as;
    auto *asym = app.add_subcommand(
        "asym-purity", "Leading-order purity: general cumulant sum, non-crossing sum, or corrected half chain");
    asym->add_option("--k", as.k, "Renyi order")->required();
    asym->add_option("--dimA", as.dim_a, "Dimension of subsystem A")->required();
    asym->add_option("--dimB", as.dim_b, "Dimension of the complement")->required();
    // At most one of the three sources; checked after parsing so the help
    // text does not depend on option addresses.
    asym->add_option("--moments", as.moments, "Moments <O>,<O^2>,... (general sum, order 2k)");
    asym->add_option("--cumulants", as.cumulants, "Free cumulants k1,k2,... (general sum, order 2k)");
    asym->add_option("--kappa4", as.kappa4, "Half-chain 1/D-corrected value for k <= 4");
    add_format(asym, as.format);

    // page-curve
    struct {
        std::string k = "vn";
        int qubits = 8;
        int local_dim = 2;
        std::optional<double> kappa4;
        bool bits = false;
        std::string format = "csv";
    } pc;
    auto *page = app.add_subcommand("page-curve", "Predicted LOE Page curve for nA = 0..N");
    page->add_option("--k", pc.k, "Entropy order: integer >= 2 or vn");
    page->add_option("--qubits", pc.qubits, "Number of sites N")->check(CLI::Range(1, 31));
    page->add_option("--local-dim", pc.local_dim, "Local dimension q")->check(CLI::Range(2, 64));
    page->add_option("--kappa4", pc.kappa4, "Fourth free cumulant for the half-chain 1/D correction (k = vn: extrapolated from k = 2..4)");
    page->add_flag("--bits", pc.bits, "Report entropies in bits instead of nats");
    add_format(page, pc.format);

    // mc / state-mc
    struct {
        int qubits = 4;
        std::int64_t samples = 100;
        std::string k = "vn";
        std::string op = "pauli:Z1";
        std::optional<std::uint64_t> seed;
        std::string out;
        int threads = 1;
        int local_dim = 2;
        int max_qubits = 10;
        std::int64_t amplitude_cap = kDefaultAmplitudeCap;
        std::string format = "csv";
    } mc;
    auto add_scan_options = [&mc](CLI::App *sub) {
        sub->add_option("--qubits", mc.qubits, "Number of sites N")->check(CLI::Range(1, 64));
        sub->add_option("--samples", mc.samples, "Haar samples")->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
        sub->add_option("--k", mc.k, "Comma-separated orders: integers >= 2, 1 or vn, 0, inf");
        sub->add_option("--seed", mc.seed, "Master seed (falls back to LOE_SEED)");
        sub->add_option("--out", mc.out, "Output file ('-' or empty for stdout)");
        sub->add_option("--threads", mc.threads, "Worker threads")->check(CLI::Range(1, 1024));
        sub->add_option("--local-dim", mc.local_dim, "Local dimension q")->check(CLI::Range(2, 64));
        sub->add_option("--max-qubits", mc.max_qubits, "Resource guard on N");
        sub->add_option("--amplitude-cap", mc.amplitude_cap, "Resource guard on q^{2N}");
        add_format(sub, mc.format);
    };
    auto *mcsub = app.add_subcommand("mc", "Monte Carlo LOE Page curve of U^dag O U");
    add_scan_options(mcsub);
    mcsub->add_option("--operator", mc.op, "pauli:<letters+sites>, gue, random_traceless, trace:<w>, file:<path>");
    auto *statesub = app.add_subcommand("state-mc", "Monte Carlo Page curve of Haar states on the doubled space");
    add_scan_options(statesub);

    // fluct
    struct {
        std::string qubits = "4,6,8";
        std::int64_t samples = 400;
        int k = 2;
        std::string op = "pauli:Z1";
        std::optional<std::uint64_t> seed;
        int threads = 1;
        int local_dim = 2;
        int max_qubits = 10;
        std::string format = "csv";
    } fl;
    auto *fluct = app.add_subcommand("fluct", "Relative variance of the half-chain k-purity and its log-log slope");
    fluct->add_option("--qubits", fl.qubits, "Comma-separated list of N");
    fluct->add_option("--samples", fl.samples, "Haar samples per N")->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
    fluct->add_option("--k", fl.k, "Renyi order >= 2")->check(CLI::Range(2, 64));
    fluct->add_option("--operator", fl.op, "Operator, as for mc");
    fluct->add_option("--seed", fl.seed, "Master seed (falls back to LOE_SEED)");
    fluct->add_option("--threads", fl.threads, "Worker threads")->check(CLI::Range(1, 1024));
    fluct->add_option("--local-dim", fl.local_dim, "Local dimension q")->check(CLI::Range(2, 64));
    fluct->add_option("--max-qubits", fl.max_qubits, "Resource guard on N");
    add_format(fluct, fl.format);

    // wg
    struct {
        int n = 2;
        std::int64_t dim = 4;
        std::string backend = "characters";
        bool asymptotic = false;
        std::string format = "csv";
    } wg;
    auto *wgsub = app.add_subcommand("wg", "Exact unitary Weingarten function on S_n, one row per cycle type");
    wgsub->add_option("--n", wg.n, "Degree n (characters: n <= 10, gram: n <= 8)")->required();
    wgsub->add_option("--dim", wg.dim, "Dimension D >= n")->required();
    wgsub->add_option("--backend", wg.backend, "Weingarten backend")->check(CLI::IsMember({"characters", "gram"}));
    wgsub->add_flag("--asymptotic", wg.asymptotic, "Add the leading large-D term");
    add_format(wgsub, wg.format);

    // nc
    struct {
        int k = 4;
        bool list = false;
        bool count = false;
        bool pairings = false;
        std::string format = "csv";
    } nc;
    auto *ncsub = app.add_subcommand("nc", "Non-crossing permutations NC(k) and non-crossing pairings of 2k points");
    ncsub->add_option("--k", nc.k, "Size k")->required();
    ncsub->add_flag("--list", nc.list, "List elements in cycle notation");
    ncsub->add_flag("--count", nc.count, "Print the number of elements");
    ncsub->add_flag("--pairings", nc.pairings, "Use non-crossing pairings of 2k points instead of NC(k)");
    add_format(ncsub, nc.format);

    // cumulants
    struct {
        std::string moments;
        std::string op;
        int qubits = 4;
        int order = 8;
        std::optional<std::uint64_t> seed;
        std::string format = "csv";
    } cu;
    auto *cumsub = app.add_subcommand("cumulants", "Free cumulants from moments, or of a concrete operator");
    auto *cu_m = cumsub->add_option("--moments", cu.moments, "Moments <O>,<O^2>,... (exact rationals)");
    auto *cu_o = cumsub->add_option("--operator", cu.op, "Operator spec, as for mc");
    cu_m->excludes(cu_o);
    cumsub->add_option("--qubits", cu.qubits, "Sites N for --operator")->check(CLI::Range(1, 14));
    cumsub->add_option("--order", cu.order, "Highest order for --operator")->check(CLI::Range(1, kMaxCumulantOrder));
    cumsub->add_option("--seed", cu.seed, "Seed for random operators (falls back to LOE_SEED)");
    add_format(cumsub, cu.format);

    // ose-const
    struct {
        std::string k = "2,3,4,5,6";
        std::string format = "csv";
    } os;
    auto *osesub = app.add_subcommand("ose-const", "Haar operator-stabilizer-entropy constant vs the LOE constant");
    osesub->add_option("--k", os.k, "Comma-separated orders >= 2");
    add_format(osesub, os.format);

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err) == 0 ? kExitOk : kExitValidation;
        }
        std::string msg = e.what();
        for (char &c : msg) {
            c = c == '\n' ? ' ' : c;
        }
        err << "usage_error: " << msg << '\n';
        return kExitValidation;
    }

    try {
        if (exact->parsed()) {
            if (ex.state) {
                require(ex.k >= 1 && ex.k <= 8, "unsupported_order", "state purity supports 1 <= k <= 8");
                if (ex.series > 0) {
                    require(!ex.plain, "invalid_argument", "--series uses the doubled space");
                    const auto coeffs = state_purity_series(ex.k, ex.series);
                    Table t{{"power", "coefficient", "decimal"}, {}, {true, false, true}};
                    for (std::size_t j = 0; j < coeffs.size(); ++j) {
                        t.rows.push_back({std::to_string(j), coeffs[j].get_str(), decimal(coeffs[j])});
                    }
                    t.write(out, ex.format);
                    return kExitOk;
                }
                require(ex.dim_a >= 1 && ex.dim_b >= 1, "invalid_dimension", "--dimA and --dimB are required");
                const auto r = average_state_purity_exact(ex.k, ex.dim_a, ex.dim_b,
                                                          ex.plain ? StateSpace::plain : StateSpace::doubled);
                Table t{{"value", "decimal"}, {{r.value.get_str(), decimal(r.value)}}, {false, true}};
                t.write(out, ex.format);
                return kExitOk;
            }
            require(!ex.moments.empty(), "missing_moments", "--moments is required");
            const MomentProfile<ExactScalar> profile(parse_rational_list(ex.moments));
            if (ex.series > 0) {
                require(!ex.breakdown, "invalid_argument", "--series and --breakdown are exclusive");
                const auto coeffs = ex.second_moment ? second_moment_series(profile, ex.series)
                                                     : operator_purity_series(ex.k, profile, ex.series);
                Table t{{"power", "coefficient", "decimal"}, {}, {true, false, true}};
                for (std::size_t j = 0; j < coeffs.size(); ++j) {
                    t.rows.push_back({std::to_string(j), coeffs[j].get_str(), decimal(coeffs[j])});
                }
                t.write(out, ex.format);
                return kExitOk;
            }
            require(ex.dim_a >= 1 && ex.dim_b >= 1, "invalid_dimension", "--dimA and --dimB are required");
            const PurityQuery query{ex.k, ex.dim_a, ex.dim_b, profile, ex.raw};
            ExactPurityResult r;
            if (ex.second_moment) {
                require(!ex.breakdown, "invalid_argument", "--breakdown is not available for --second-moment");
                r = average_purity_second_moment_exact(query);
            } else {
                r = average_purity_exact(query, ex.breakdown, parse_backend(ex.backend));
            }
            if (ex.breakdown) {
                Table t{{"cycle_type", "contribution", "decimal"}, {}, {false, false, true}};
                for (const auto &[type, part] : r.breakdown) {
                    t.rows.push_back({type.to_string(), part.get_str(), decimal(part)});
                }
                t.rows.push_back({"total", r.value.get_str(), decimal(r.value)});
                t.write(out, ex.format);
                return kExitOk;
            }
            Table t{{"value", "decimal"}, {{r.value.get_str(), decimal(r.value)}}, {false, true}};
            t.write(out, ex.format);
            return kExitOk;
        }

        if (asym->parsed()) {
            require(int{!as.moments.empty()} + int{!as.cumulants.empty()} + int{as.kappa4.has_value()} <= 1,
                    "conflicting_options", "--moments, --cumulants and --kappa4 are mutually exclusive");
            double value = 0;
            std::string method;
            if (!as.moments.empty() || !as.cumulants.empty()) {
                CumulantProfile<double> kappa;
                if (!as.cumulants.empty()) {
                    kappa = CumulantProfile<double>(parse_double_list(as.cumulants));
                } else {
                    kappa = cumulants_from_moments(MomentProfile<double>(parse_double_list(as.moments)));
                }
                value = purity_leading_general(as.k, as.dim_a, as.dim_b, kappa);
                method = "general";
            } else if (as.kappa4) {
                require(as.dim_a == as.dim_b, "invalid_dimension", "--kappa4 needs a half cut (dimA = dimB)");
                value = half_chain_purity_corrected(as.k, as.dim_a * as.dim_b, *as.kappa4);
                method = "half_chain_corrected";
            } else {
                value = page_purity(as.k, as.dim_a, as.dim_b);
                method = "noncrossing";
            }
            Table t{{"method", "purity"}, {{method, format_double(value)}}, {false, true}};
            t.write(out, as.format);
            return kExitOk;
        }

        if (page->parsed()) {
            auto points = predicted_page_curve(EntropyOrder::parse(pc.k), pc.qubits, pc.kappa4, pc.local_dim);
            if (pc.bits) {
                for (auto &p : points) {
                    p.entropy /= std::log(2.0);
                }
            }
            if (pc.format == "json") {
                write_prediction_json(points, out);
            } else {
                write_prediction_csv(points, out);
            }
            return kExitOk;
        }

        if (mcsub->parsed() || statesub->parsed()) {
            ScanOptions options;
            options.samples = mc.samples;
            options.orders = parse_orders(mc.k);
            options.seed = resolve_seed(mc.seed);
            options.threads = mc.threads;
            options.max_qubits = mc.max_qubits;
            options.amplitude_cap = mc.amplitude_cap;
            require(mc.qubits <= mc.max_qubits, "guard",
                    "N = " + std::to_string(mc.qubits) + " exceeds --max-qubits " + std::to_string(mc.max_qubits));
            const EntropyCurve curve =
                mcsub->parsed() ? page_curve_scan(OperatorSpec::parse(mc.op, mc.qubits, mc.local_dim), options)
                                : state_page_scan(mc.qubits, mc.local_dim, options);
            emit_curve(curve, mc.format, mc.out, out);
            return kExitOk;
        }

        if (fluct->parsed()) {
            std::vector<int> sizes;
            for (const auto &item : split_list(fl.qubits)) {
                std::size_t used = 0;
                int n = 0;
                try {
                    n = std::stoi(item, &used);
                } catch (const std::exception &) {
                    used = 0;
                }
                require(used == item.size() && n >= 2, "invalid_argument", "bad system size '" + item + "'");
                sizes.push_back(n);
            }
            ScanOptions options;
            options.samples = fl.samples;
            options.seed = resolve_seed(fl.seed);
            options.threads = fl.threads;
            options.max_qubits = fl.max_qubits;
            const FluctuationResult r = fluctuation_scan(fl.op, fl.k, sizes, options, fl.local_dim);
            if (fl.format == "json") {
                nlohmann::json rows = nlohmann::json::array();
                for (const auto &p : r.points) {
                    rows.push_back({{"N", p.qubits},
                                    {"D", p.dim},
                                    {"mean_purity", p.mean_purity},
                                    {"purity_variance", p.purity_variance},
                                    {"relative_variance", p.relative_variance},
                                    {"mean_entropy", p.mean_entropy},
                                    {"annealed_entropy", p.annealed_entropy},
                                    {"samples", p.samples}});
                }
                out << nlohmann::json{{"k", r.k}, {"slope", r.slope}, {"rows", rows}}.dump(2) << '\n';
                return kExitOk;
            }
            out << "N,D,mean_purity,purity_variance,relative_variance,mean_entropy,annealed_entropy,samples\n";
            for (const auto &p : r.points) {
                out << p.qubits << ',' << p.dim << ',' << format_double(p.mean_purity) << ','
                    << format_double(p.purity_variance) << ',' << format_double(p.relative_variance) << ','
                    << format_double(p.mean_entropy) << ',' << format_double(p.annealed_entropy) << ',' << p.samples
                    << '\n';
            }
            out << "# slope," << format_double(r.slope) << '\n';
            return kExitOk;
        }

        if (wgsub->parsed()) {
            const auto table = weingarten_exact(wg.n, wg.dim, parse_backend(wg.backend));
            Table t{{"cycle_type", "value", "decimal"}, {}, {false, false, true}};
            if (wg.asymptotic) {
                t.columns.push_back("asymptotic");
                t.numeric.push_back(true);
            }
            for (std::size_t i = 0; i < table->classes().size(); ++i) {
                const auto &c = table->classes()[i];
                std::vector<std::string> row{c.to_string(), table->values()[i].get_str(), decimal(table->values()[i])};
                if (wg.asymptotic) {
                    std::vector<std::vector<int>> cycles;
                    int next = 0;
                    for (int len : c.parts()) {
                        std::vector<int> cycle;
                        for (int j = 0; j < len; ++j) {
                            cycle.push_back(next++);
                        }
                        cycles.push_back(cycle);
                    }
                    const Permutation rep = Permutation::from_cycles(wg.n, cycles);
                    row.push_back(format_double(weingarten_asymptotic(rep, Permutation::identity(wg.n), wg.dim)));
                }
                t.rows.push_back(row);
            }
            t.write(out, wg.format);
            return kExitOk;
        }

        if (ncsub->parsed()) {
            require(nc.list != nc.count, "invalid_argument", "give exactly one of --list and --count");
            std::vector<std::string> items;
            std::size_t size = 0;
            if (nc.pairings) {
                require(nc.k >= 1 && nc.k <= 8, "guard", "non-crossing pairings limited to k <= 8");
                const auto pairings = enumerate_nc_pairings(2 * nc.k);
                size = pairings.size();
                if (nc.list) {
                    for (const auto &p : pairings) {
                        items.push_back(format_cycles(p.to_permutation()));
                    }
                }
            } else {
                const NCSet set = enumerate_nc(nc.k);
                size = set.elements.size();
                if (nc.list) {
                    for (const auto &p : set.elements) {
                        items.push_back(format_cycles(p));
                    }
                }
            }
            if (nc.count) {
                if (nc.format == "json") {
                    out << nlohmann::json{{"k", nc.k}, {"count", size}}.dump() << '\n';
                } else {
                    out << size << '\n';
                }
                return kExitOk;
            }
            Table t{{"element"}, {}, {false}};
            for (auto &s : items) {
                t.rows.push_back({s});
            }
            t.write(out, nc.format);
            return kExitOk;
        }

        if (cumsub->parsed()) {
            if (!cu.moments.empty()) {
                const MomentProfile<ExactScalar> m(parse_rational_list(cu.moments));
                const auto kappa = cumulants_from_moments(m);
                Table t{{"order", "moment", "cumulant", "decimal"}, {}, {true, false, false, true}};
                for (int l = 1; l <= m.max_order(); ++l) {
                    t.rows.push_back({std::to_string(l), m.at(l).get_str(), kappa.at(l).get_str(), decimal(kappa.at(l))});
                }
                t.write(out, cu.format);
                return kExitOk;
            }
            require(!cu.op.empty(), "invalid_argument", "give --moments or --operator");
            const OperatorSpec spec = OperatorSpec::parse(cu.op, cu.qubits);
            const std::uint64_t seed = spec.is_random() ? resolve_seed(cu.seed) : 0;
            const ComplexMatrix op = build_operator(spec, derive_seed(seed, kOperatorStream, 0));
            const auto m = operator_moments(op, cu.order);
            const auto kappa = cumulants_from_moments(m);
            Table t{{"order", "moment", "cumulant"}, {}, {true, true, true}};
            for (int l = 1; l <= cu.order; ++l) {
                t.rows.push_back({std::to_string(l), format_double(m.at(l)), format_double(kappa.at(l))});
            }
            t.write(out, cu.format);
            return kExitOk;
        }

        if (osesub->parsed()) {
            Table t{{"k", "ose_correction", "loe_correction"}, {}, {true, true, true}};
            for (const auto &item : split_list(os.k)) {
                const EntropyOrder o = EntropyOrder::parse(item);
                require(o.kind == EntropyOrder::Kind::renyi && o.k <= 30, "invalid_order", "orders must be 2..30");
                const double loe = std::log(static_cast<double>(catalan(o.k))) / (1.0 - o.k);
                t.rows.push_back({std::to_string(o.k), format_double(haar_ose_correction(o.k)), format_double(loe)});
            }
            t.write(out, os.format);
            return kExitOk;
        }
    } catch (const Error &e) {
        err << e.code() << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::validation ? kExitValidation : kExitRuntime;
    } catch (const std::exception &e) {
        err << "internal_error: " << e.what() << '\n';
        return kExitRuntime;
    }
    err << "usage_error: no subcommand\n";
    return kExitValidation;
}

}  // namespace loe::cli
