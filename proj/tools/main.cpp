// hbf: construct, verify, count and analyze vectorial hyper-bent functions
// over GF(2^(2m)).
//
// Exit codes: 0 = success / verdict true, 1 = verdict false,
// 2 = usage or precondition error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hbf/enumeration.hpp"
#include "hbf/io.hpp"
#include "hbf/msequence.hpp"

using json = nlohmann::ordered_json;
using namespace hbf;

namespace {

bool guard_override() {
    const char* v = std::getenv("HBF_GUARD_OVERRIDE");
    return v != nullptr && std::string(v) == "1";
}

struct Output {
    std::string report_path;  // empty = stdout
    bool timing = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(json& report) const {
        if (timing) {
            const auto elapsed = std::chrono::steady_clock::now() - start;
            report["timing_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        }
        const std::string text = report.dump(2) + "\n";
        if (report_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream os(report_path, std::ios::binary);
            if (!os)
                throw std::runtime_error("cannot open report file '" + report_path + "'");
            os << text;
        }
    }
};

json histogram_json(const std::map<std::int64_t, std::uint64_t>& hist) {
    json h = json::object();
    for (const auto& [value, count] : hist)
        h[std::to_string(value)] = count;
    return h;
}

json spectrum_histogram(const WalshSpectrum& s) {
    std::map<std::int64_t, std::uint64_t> hist;
    for (std::int64_t v : s.values)
        hist[v] += 1;
    return histogram_json(hist);
}

// shared auto-verification block for construct commands
json verify_construct(const VectorialFunction& F, const UGroup& U) {
    json verdicts = json::object();
    const bool symmetric = check_psap_symmetry(F);
    verdicts["psap_symmetric"] = symmetric;
    if (symmetric && F.k <= U.m) {
        verdicts["condition2"] = check_condition2(F, U);
        verdicts["condition3"] = check_condition3(F, U);
    } else {
        verdicts["condition2"] = nullptr;
        verdicts["condition3"] = nullptr;
    }
    const unsigned n = F.ctx->degree();
    bool hyper_bent;
    if (n <= 12 || guard_override()) {
        const bool oracle = is_vectorial_hyperbent_oracle(F, guard_override());
        verdicts["oracle"] = oracle;
        hyper_bent = oracle;
    } else {
        verdicts["oracle"] = nullptr;
        hyper_bent = symmetric && verdicts["condition2"].is_boolean() &&
                     verdicts["condition2"].get<bool>();
    }
    verdicts["hyper_bent"] = hyper_bent;
    return verdicts;
}

int run_construct(const std::string& kind, unsigned n, std::uint64_t u0_exp, std::uint32_t r,
                  std::uint64_t d, const std::string& h_file, const std::string& coeff_file,
                  const std::string& out_file, Output& output) {
    const Field field(n);

    json report;
    report["command"] = "construct";
    report["kind"] = kind;
    json params = json::object();
    params["n"] = n;

    VectorialFunction F;
    std::optional<Field::Elt> lambda_found;

    if (kind == "tracecoeffs") {
        std::ifstream is(coeff_file);
        if (!is)
            throw std::runtime_error("cannot open coefficient file '" + coeff_file + "'");
        const TraceForm tf = read_trace_form(is, field);
        params["coeff_file"] = coeff_file;
        params["k"] = tf.k;
        F = trace_form_eval(tf);
    } else {
        const PsapContext ctx(field);
        const Field::Elt u0 = ctx.u0_from_exponent(u0_exp);
        params["m"] = ctx.m();
        params["u0_exp"] = u0_exp;

        if (kind == "tconstruction") {
            F = t_construction(ctx, u0);
        } else if (kind == "dickson") {
            params["r"] = r;
            F = dickson_construction(ctx, u0, r);
        } else if (kind == "balanced") {
            std::ifstream is(h_file);
            if (!is)
                throw std::runtime_error("cannot open h table '" + h_file + "'");
            unsigned hm = 0, hk = 0;
            const auto h = read_h_table(is, hm, hk);
            if (hm != ctx.m())
                throw std::invalid_argument("h table is for m = " + std::to_string(hm) +
                                            ", field needs m = " + std::to_string(ctx.m()));
            params["h_file"] = h_file;
            params["k"] = hk;
            F = balanced_compose(h, hk, t_construction(ctx, u0));
        } else if (kind == "corollary2") {
            params["d"] = d;
            const Corollary2Result res = corollary2_search(ctx, u0, d);
            lambda_found = res.lambda;
            F = zero_vectorial(field, 1);
            for (std::size_t i = 0; i < res.lifted.table.size(); ++i)
                F.table[i] = res.lifted.table[i];
        } else {
            throw std::invalid_argument("unknown construct kind '" + kind + "'");
        }
    }

    report["parameters"] = params;
    report["output_file"] = out_file;
    if (lambda_found)
        report["lambda"] = *lambda_found;

    write_truth_table_file(out_file, F);

    const UGroup U = make_ugroup(field);
    report["verdicts"] = verify_construct(F, U);
    output.emit(report);
    return report["verdicts"]["hyper_bent"].get<bool>() ? 0 : 1;
}

int run_verify(const std::string& file, const std::string& mode, Output& output) {
    const TruthTableFile tt = read_truth_table_file(file);
    const Field field(tt.n);
    const VectorialFunction F = to_vectorial(tt, field);
    const UGroup U = make_ugroup(field);

    json report;
    report["command"] = "verify";
    report["file"] = file;
    report["mode"] = mode;
    report["n"] = tt.n;
    report["k"] = tt.k;

    bool verdict = false;
    if (mode == "oracle") {
        VectorialWitness w;
        verdict = is_vectorial_hyperbent_oracle(F, guard_override(), &w);
        report["verdict"] = verdict;
        if (!verdict)
            report["witness"] = {{"v", w.v}, {"t", w.inner.t}, {"lambda", w.inner.lambda},
                                 {"value", w.inner.value}};
        else
            report["witness"] = nullptr;
    } else if (mode == "psap") {
        if (!check_psap_symmetry(F)) {
            report["verdict"] = false;
            report["note"] = "symmetry precondition failed";
            output.emit(report);
            return 1;
        }
        verdict = true;
        json sums = json::object();
        for (std::uint32_t v = 1; v < (std::uint32_t{1} << F.k); ++v) {
            const std::int64_t s = restriction_sum(component(F, v), U);
            sums[std::to_string(v)] = s;
            verdict = verdict && s == 1;
        }
        report["verdict"] = verdict;
        report["restriction_sums"] = sums;
    } else if (mode == "condition2") {
        verdict = check_condition2(F, U);
        report["verdict"] = verdict;
    } else if (mode == "condition3") {
        verdict = check_condition3(F, U);
        report["verdict"] = verdict;
        const GroupRingElement A = restriction_multiset(F, U);
        json hist = json::object();
        for (std::size_t b = 0; b < A.coeffs.size(); ++b)
            hist[std::to_string(b)] = A.coeffs[b];
        report["multiset"] = hist;
    } else {
        throw std::invalid_argument("unknown verify mode '" + mode + "'");
    }
    output.emit(report);
    return verdict ? 0 : 1;
}

int run_count(unsigned m, unsigned k, const std::string& mode, bool csv, Output& output) {
    json report;
    report["command"] = "count";
    report["m"] = m;
    report["k"] = k;
    report["mode"] = mode;

    std::optional<CountReport> formula, exhaustive;
    if (mode == "formula" || mode == "both")
        formula = count_formula(m, k);
    if (mode == "exhaustive" || mode == "both")
        exhaustive = exhaustive_count_oracle(m, k, guard_override());
    if (!formula && !exhaustive)
        throw std::invalid_argument("unknown count mode '" + mode + "'");

    if (formula) {
        report["formula_count"] = formula->formula_count.to_string();
        report["core_count"] = formula->core_count.to_string();
    }
    if (exhaustive) {
        report["exhaustive_count"] = exhaustive->formula_count.to_string();
        report["exhaustive_core"] = exhaustive->core_count.to_string();
    }
    bool ok = true;
    if (formula && exhaustive) {
        ok = formula->formula_count == exhaustive->formula_count &&
             formula->core_count == exhaustive->core_count;
        report["match"] = ok;
    }

    if (csv) {
        const CountReport& cr = formula ? *formula : *exhaustive;
        std::cout << "m,k,core_count,formula_count\n"
                  << m << "," << k << "," << cr.core_count.to_string() << ","
                  << cr.formula_count.to_string() << "\n";
    }
    output.emit(report);
    return ok ? 0 : 1;
}

int run_spectrum_walsh(const std::string& file, std::uint32_t t, std::uint32_t v, Output& output) {
    const TruthTableFile tt = read_truth_table_file(file);
    const Field field(tt.n);
    const VectorialFunction F = to_vectorial(tt, field);

    json report;
    report["command"] = "spectrum";
    report["kind"] = "walsh";
    report["file"] = file;
    report["n"] = tt.n;
    report["k"] = tt.k;
    report["t"] = t;
    report["v"] = v;

    const WalshSpectrum s = full_spectrum(component(F, v), t);
    report["histogram"] = spectrum_histogram(s);
    const std::int64_t mag = std::int64_t{1} << (tt.n / 2);
    const bool flat = tt.n % 2 == 0 && s.all_plus_minus(mag);
    report["all_plus_minus_2_n_half"] = flat;
    output.emit(report);
    return flat ? 0 : 1;
}

int run_spectrum_crosscorr(unsigned m, std::uint64_t d, Output& output) {
    const Field fm(m);
    const CrosscorrSpectrum s = crosscorr_spectrum(fm, d);

    json report;
    report["command"] = "spectrum";
    report["kind"] = "crosscorr";
    report["m"] = m;
    report["d"] = d;
    report["histogram"] = histogram_json(s.histogram);
    report["distinct_values"] = s.distinct_values();
    report["three_valued"] = s.three_valued();
    report["contains_minus_one"] = s.contains(-1);
    output.emit(report);
    return s.three_valued() ? 0 : 1;
}

int run_enumerate(unsigned m, unsigned k, const std::string& out_dir, std::uint64_t limit,
                  std::uint64_t cap, Output& output) {
    const Field field(2 * m);
    const UGroup U = make_ugroup(field);
    std::filesystem::create_directories(out_dir);

    std::uint64_t written = 0;
    enumerate_g_functions(U, k, [&](const GFunction& g) {
        char name[32];
        std::snprintf(name, sizeof name, "g_%06llu.hbf",
                      static_cast<unsigned long long>(written));
        write_truth_table_file((std::filesystem::path(out_dir) / name).string(),
                               lift_g_to_f(g));
        written += 1;
        return limit == 0 || written < limit;
    }, cap);

    json report;
    report["command"] = "enumerate";
    report["m"] = m;
    report["k"] = k;
    report["out_dir"] = out_dir;
    report["core_count"] = count_formula(m, k).core_count.to_string();
    report["written"] = written;
    output.emit(report);
    return 0;
}

int run_decimations(unsigned m, Output& output) {
    json report;
    report["command"] = "decimations";
    report["m"] = m;
    json list = json::array();
    for (const DecimationEntry& e : known_decimations(m)) {
        json item;
        item["family"] = family_name(e.family);
        if (e.k)
            item["k"] = e.k;
        item["d_raw"] = e.d_raw;
        item["d"] = e.d;
        item["included"] = e.included;
        if (!e.note.empty())
            item["note"] = e.note;
        list.push_back(item);
    }
    report["entries"] = list;
    output.emit(report);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vectorial hyper-bent function toolkit over GF(2^(2m))"};
    app.require_subcommand(1);

    unsigned threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = hardware default)");

    Output output;
    app.add_option("--report", output.report_path, "write the JSON report here instead of stdout");
    app.add_flag("--timing", output.timing, "append elapsed milliseconds to the report");

    // construct
    auto* construct = app.add_subcommand("construct", "build a function and write its truth table");
    std::string kind;
    construct->add_option("kind", kind, "tconstruction | dickson | balanced | tracecoeffs | corollary2")
        ->required();
    unsigned n = 0;
    std::uint64_t u0_exp = 1;
    std::uint32_t r = 1;
    std::uint64_t d = 1;
    std::string h_file, coeff_file, out_file;
    construct->add_option("--n", n, "field degree (even)")->required();
    construct->add_option("--u0-exp", u0_exp, "u0 = (gamma^(2^m-1))^e, e in [1, 2^m]");
    construct->add_option("--r", r, "Dickson index");
    construct->add_option("--d", d, "decimation for corollary2");
    construct->add_option("--h-file", h_file, "balanced table (HTBL v1)");
    construct->add_option("--coeff-file", coeff_file, "trace-form coefficients (TFORM v1)");
    construct->add_option("--out", out_file, "output truth table path")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check a truth-table file");
    std::string vfile, vmode = "oracle";
    verify->add_option("--file", vfile, "truth table to verify")->required();
    verify->add_option("--mode", vmode, "oracle | psap | condition2 | condition3");

    // count
    auto* count = app.add_subcommand("count", "count canonical vectorial hyper-bent functions");
    unsigned cm = 0, ck = 0;
    std::string cmode = "formula";
    bool csv = false;
    count->add_option("--m", cm)->required();
    count->add_option("--k", ck)->required();
    count->add_option("--mode", cmode, "formula | exhaustive | both");
    count->add_flag("--csv", csv, "also print a flat CSV row to stdout");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "Walsh or crosscorrelation histograms");
    std::string skind;
    spectrum->add_option("kind", skind, "walsh | crosscorr")->required();
    std::string sfile;
    std::uint32_t st = 1, sv = 1;
    unsigned sm = 0;
    std::uint64_t sd = 1;
    spectrum->add_option("--file", sfile, "truth table (walsh)");
    spectrum->add_option("--t", st, "exponent t coprime to 2^n-1 (walsh)");
    spectrum->add_option("--v", sv, "component selector (walsh, default 1)");
    spectrum->add_option("--m", sm, "sequence degree (crosscorr)");
    spectrum->add_option("--d", sd, "decimation (crosscorr)");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "stream canonical g functions as truth tables");
    unsigned em = 0, ek = 0;
    std::string out_dir;
    std::uint64_t limit = 0, cap = 1u << 20;
    enumerate->add_option("--m", em)->required();
    enumerate->add_option("--k", ek)->required();
    enumerate->add_option("--out-dir", out_dir)->required();
    enumerate->add_option("--limit", limit, "stop after this many files (0 = all)");
    enumerate->add_option("--cap", cap, "refuse to enumerate more than this many");

    // decimations
    auto* decim = app.add_subcommand("decimations", "list the three-valued decimation catalogue");
    unsigned dm = 0;
    decim->add_option("--m", dm)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            return app.exit(e);
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (threads)
        set_worker_count(threads);

    try {
        if (*construct)
            return run_construct(kind, n, u0_exp, r, d, h_file, coeff_file, out_file, output);
        if (*verify)
            return run_verify(vfile, vmode, output);
        if (*count)
            return run_count(cm, ck, cmode, csv, output);
        if (*spectrum) {
            if (skind == "walsh")
                return run_spectrum_walsh(sfile, st, sv, output);
            if (skind == "crosscorr")
                return run_spectrum_crosscorr(sm, sd, output);
            throw std::invalid_argument("unknown spectrum kind '" + skind + "'");
        }
        if (*enumerate)
            return run_enumerate(em, ek, out_dir, limit, cap, output);
        if (*decim)
            return run_decimations(dm, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
