// apcover: sequence generation, covering verification, density tables, and
// the seeded random-set sampler behind one reproducible command line.
//
// Exit codes: 0 success (and verified), 1 verification found failures,
// 2 usage or parameter error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "apcover/ap_core.hpp"
#include "apcover/constructions.hpp"
#include "apcover/density.hpp"
#include "apcover/greedy.hpp"
#include "apcover/io.hpp"
#include "apcover/random_cover.hpp"

using json = nlohmann::json;
using namespace apcover;

namespace {

constexpr int kVersion = 1;

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
        out.push_back(std::stoull(item));
    }
    if (out.empty()) throw std::invalid_argument("expected a nonempty comma-separated list");
    return out;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw std::runtime_error("cannot write " + output_path);
    out << text;
}

std::string sequence_lines(const NaturalSequence& seq) {
    std::string out;
    for (std::uint64_t v : seq) {
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("APCOVER_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

// A named set resolved from --set: always has a membership predicate; file,
// sample and stanley sets are explicit sequences, thm1/thm2 come with exact
// counters.
struct ResolvedSet {
    std::string label;
    bool is_sequence = false;
    NaturalSequence seq;
    MemberFn member;
    CountFn counter;

    CountingSet counting() const {
        if (is_sequence) return CountingSet::from_sequence(seq);
        if (counter) return CountingSet::from_predicate(member, counter);
        return CountingSet::from_predicate(member);
    }
};

struct SetOptions {
    int k = 3;                     // order for stanley/sample sets
    std::string stanley_seed = "0,1";
    double sample_c = 0.0;         // 0 = default_c(k) * 1.1
    std::uint64_t sample_seed = 0;
    std::uint64_t sample_nmax = 0; // 0 = derive from the queried range
};

ResolvedSet resolve_set(const std::string& spec, const SetOptions& opt,
                        std::uint64_t hi_hint, json* params) {
    ResolvedSet set;
    set.label = spec;
    (*params)["set"] = spec;
    if (spec == "thm1") {
        set.member = [](std::uint64_t n) { return thm1_member(n); };
        set.counter = [](std::uint64_t n) { return thm1_count(n); };
    } else if (spec == "thm2") {
        set.member = [](std::uint64_t n) { return thm2_member(n); };
        set.counter = [](std::uint64_t n) { return thm2_count(n); };
    } else if (spec.rfind("file:", 0) == 0) {
        set.is_sequence = true;
        set.seq = read_sequence_file(spec.substr(5));
    } else if (spec == "stanley") {
        set.is_sequence = true;
        NaturalSequence seed(parse_u64_list(opt.stanley_seed));
        set.seq = stanley_sequence(seed, opt.k, Limit::max_value(hi_hint));
        (*params)["seed"] = opt.stanley_seed;
        (*params)["k"] = opt.k;
    } else if (spec == "sample") {
        RandomCoverParams p;
        p.k = opt.k;
        p.c = opt.sample_c > 0.0 ? opt.sample_c : default_c(opt.k) * 1.1;
        p.rng_seed = opt.sample_seed;
        p.n_max = opt.sample_nmax > 0 ? opt.sample_nmax : hi_hint;
        set.is_sequence = true;
        set.seq = sample_set(p);
        (*params)["k"] = p.k;
        (*params)["c"] = p.c;
        (*params)["seed"] = p.rng_seed;
        (*params)["nmax"] = p.n_max;
    } else {
        throw std::invalid_argument(
            "unknown set '" + spec + "' (expected thm1, thm2, stanley, sample, or file:PATH)");
    }
    if (set.is_sequence) {
        auto held = std::make_shared<const NaturalSequence>(set.seq);
        set.member = [held](std::uint64_t n) { return held->contains(n); };
    }
    return set;
}

json density_rows(const DensityTable& table,
                  const std::vector<std::pair<double, double>>* extremes) {
    json rows = json::array();
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        json row;
        row["n"] = table.rows[i].n;
        row["count"] = table.rows[i].count;
        row["ratio"] = table.rows[i].ratio;
        if (extremes) {
            row["tail_min"] = (*extremes)[i].first;
            row["tail_max"] = (*extremes)[i].second;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string csv_with_extremes(const DensityTable& table,
                              const std::vector<std::pair<double, double>>& extremes) {
    std::string out = "n,count,ratio,alpha,beta,tail_min,tail_max\n";
    char buf[192];
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%llu,%llu,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      static_cast<unsigned long long>(table.rows[i].n),
                      static_cast<unsigned long long>(table.rows[i].count),
                      table.rows[i].ratio, table.alpha, table.beta,
                      extremes[i].first, extremes[i].second);
        out += buf;
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"arithmetic-progression covering sequences: generation, "
                 "verification, density analysis, random sampling"};
    app.require_subcommand(1);

    std::string output_path;
    const auto add_output_option = [&output_path](CLI::App* cmd) {
        cmd->add_option("--output", output_path, "write results to a file instead of stdout");
    };

    // ---- generate ----
    auto* gen = app.add_subcommand("generate", "emit a greedily generated sequence");
    gen->require_subcommand(1);

    std::string gen_seed = "0,1";
    int gen_k = 3;
    std::uint64_t gen_count = 0;
    std::uint64_t gen_max = 0;
    std::string gen_format = "text";

    auto* gen_st = gen->add_subcommand("stanley", "greedy k-AP-free extension of a seed");
    gen_st->add_option("--seed", gen_seed, "comma-separated seed, strictly increasing")
        ->capture_default_str();
    gen_st->add_option("--k", gen_k, "progression length to avoid (>= 3)")->capture_default_str();
    auto* opt_count = gen_st->add_option("--count", gen_count, "total number of terms to emit");
    auto* opt_max = gen_st->add_option("--max", gen_max, "emit all terms <= this value");
    gen_st->add_option("--format", gen_format, "text | json")->capture_default_str();
    add_output_option(gen_st);

    std::uint64_t gg_a0 = 3;
    int gg_k = 4;
    std::uint64_t gg_max = 0;
    std::string gg_format = "text";
    auto* gen_gg = gen->add_subcommand(
        "generalized", "rule: n joins unless n = k*b - a for a, b already in the set");
    gen_gg->add_option("--a0", gg_a0, "starting element")->required();
    gen_gg->add_option("--k", gg_k, "rule multiplier")->required();
    gen_gg->add_option("--max", gg_max, "emit all terms <= this value")->required();
    gen_gg->add_option("--format", gg_format, "text | json")->capture_default_str();
    add_output_option(gen_gg);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "sweep a range for covering failures");
    std::string verify_set;
    int verify_k = 3;
    std::uint64_t verify_from = 0, verify_to = 0;
    unsigned verify_jobs = default_jobs();
    SetOptions verify_opts;
    verify->add_option("--set", verify_set, "thm1 | thm2 | stanley | sample | file:PATH")
        ->required();
    verify->add_option("--k", verify_k, "progression length (>= 3)")->capture_default_str();
    verify->add_option("--from", verify_from, "range start")->required();
    verify->add_option("--to", verify_to, "range end (inclusive)")->required();
    verify->add_option("--jobs", verify_jobs, "parallel workers (env APCOVER_JOBS)")
        ->capture_default_str();
    verify->add_option("--seed", verify_opts.stanley_seed, "seed for --set stanley");
    verify->add_option("--c", verify_opts.sample_c, "density constant for --set sample");
    verify->add_option("--rng-seed", verify_opts.sample_seed, "rng seed for --set sample");
    verify->add_option("--nmax", verify_opts.sample_nmax, "sampling bound for --set sample");
    add_output_option(verify);

    // ---- density ----
    auto* density = app.add_subcommand("density", "counting-function table at checkpoints");
    std::string density_set;
    std::string density_checkpoints;
    double density_alpha = 0.5, density_beta = 0.0;
    std::string density_format = "csv";
    bool density_extremes = false;
    SetOptions density_opts;
    density->add_option("--set", density_set, "thm1 | thm2 | stanley | sample | file:PATH")
        ->required();
    density->add_option("--checkpoints", density_checkpoints,
                        "comma-separated ascending checkpoints")->required();
    density->add_option("--alpha", density_alpha, "exponent of n")->capture_default_str();
    density->add_option("--beta", density_beta, "exponent of ln n")->capture_default_str();
    density->add_option("--format", density_format, "csv | json")->capture_default_str();
    density->add_flag("--extremes", density_extremes,
                      "append running tail min/max of the ratio column");
    density->add_option("--k", density_opts.k, "order for stanley/sample sets")
        ->capture_default_str();
    density->add_option("--seed", density_opts.stanley_seed, "seed for --set stanley");
    density->add_option("--c", density_opts.sample_c, "density constant for --set sample");
    density->add_option("--rng-seed", density_opts.sample_seed, "rng seed for --set sample");
    density->add_option("--nmax", density_opts.sample_nmax, "sampling bound for --set sample");
    add_output_option(density);

    // ---- sample ----
    auto* sample = app.add_subcommand(
        "sample", "draw the random covering set and report failures and growth");
    int sample_k = 3;
    double sample_c = 0.0;
    std::uint64_t sample_seed = 0;
    std::uint64_t sample_nmax = 0;
    std::uint64_t sample_from = 0, sample_to = 0;
    std::string sample_checkpoints;
    std::string sample_elements_out;
    unsigned sample_jobs = default_jobs();
    sample->add_option("--k", sample_k, "progression length (>= 3)")->capture_default_str();
    sample->add_option("--c", sample_c, "density constant (default: 1.1 * default_c(k))");
    sample->add_option("--seed", sample_seed, "rng seed")->capture_default_str();
    sample->add_option("--nmax", sample_nmax, "sampling bound (inclusive)")->required();
    sample->add_option("--from", sample_from, "failure sweep start (default 2k)");
    sample->add_option("--to", sample_to, "failure sweep end (default nmax)");
    sample->add_option("--checkpoints", sample_checkpoints,
                       "growth checkpoints (default: powers of 10 up to nmax)");
    sample->add_option("--elements-out", sample_elements_out,
                       "also write the sampled set as a plain text sequence file");
    sample->add_option("--jobs", sample_jobs, "parallel workers (env APCOVER_JOBS)")
        ->capture_default_str();
    add_output_option(sample);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (gen_st->parsed()) {
        if ((opt_count->count() > 0) == (opt_max->count() > 0)) {
            throw std::invalid_argument("generate stanley needs exactly one of --count / --max");
        }
        NaturalSequence seed(parse_u64_list(gen_seed));
        const Limit limit = opt_count->count() > 0 ? Limit::term_count(gen_count)
                                                   : Limit::max_value(gen_max);
        const NaturalSequence seq = stanley_sequence(seed, gen_k, limit);
        if (gen_format == "json") {
            json doc;
            doc["params"] = {{"kind", "stanley"}, {"seed", gen_seed}, {"k", gen_k}};
            if (opt_count->count() > 0) doc["params"]["count"] = gen_count;
            else doc["params"]["max"] = gen_max;
            doc["rows"] = seq.values();
            doc["version"] = kVersion;
            emit(doc.dump(2) + "\n", output_path);
        } else {
            emit(sequence_lines(seq), output_path);
        }
        return 0;
    }

    if (gen_gg->parsed()) {
        const GeneralizedGreedyResult result = generalized_greedy(gg_a0, gg_k, gg_max);
        if (!result.structure_guaranteed) {
            std::cerr << "warning: interval structure is not guaranteed for a0 < 3 or k < 4\n";
        }
        if (gg_format == "json") {
            json doc;
            doc["params"] = {{"kind", "generalized"},
                             {"a0", gg_a0},
                             {"k", gg_k},
                             {"max", gg_max},
                             {"structure_guaranteed", result.structure_guaranteed}};
            doc["rows"] = result.sequence.values();
            doc["version"] = kVersion;
            emit(doc.dump(2) + "\n", output_path);
        } else {
            emit(sequence_lines(result.sequence), output_path);
        }
        return 0;
    }

    if (verify->parsed()) {
        json params;
        params["k"] = verify_k;
        params["from"] = verify_from;
        params["to"] = verify_to;
        verify_opts.k = verify_k;
        if (verify_opts.sample_nmax == 0) verify_opts.sample_nmax = verify_to;
        const ResolvedSet set = resolve_set(verify_set, verify_opts, verify_to, &params);
        const CoverReport report =
            set.is_sequence
                ? verify_covering(set.seq, verify_k, verify_from, verify_to, verify_jobs)
                : verify_covering(set.member, verify_k, verify_from, verify_to, verify_jobs);
        json doc;
        doc["params"] = std::move(params);
        doc["failures"] = report.failures;
        doc["version"] = kVersion;
        emit(doc.dump(2) + "\n", output_path);
        return report.all_covered() ? 0 : 1;
    }

    if (density->parsed()) {
        const std::vector<std::uint64_t> checkpoints = parse_u64_list(density_checkpoints);
        json params;
        params["alpha"] = density_alpha;
        params["beta"] = density_beta;
        if (density_opts.sample_nmax == 0) density_opts.sample_nmax = checkpoints.back();
        const ResolvedSet set =
            resolve_set(density_set, density_opts, checkpoints.back(), &params);
        const DensityTable table =
            ratio_series(set.counting(), checkpoints, density_alpha, density_beta);
        std::vector<std::pair<double, double>> extremes;
        if (density_extremes) {
            extremes = subsequence_extremes(table);
            params["note"] = std::string(kAsymptoticNote);
        }
        if (density_format == "json") {
            json doc;
            doc["params"] = std::move(params);
            doc["rows"] = density_rows(table, density_extremes ? &extremes : nullptr);
            doc["version"] = kVersion;
            emit(doc.dump(2) + "\n", output_path);
        } else if (density_format == "csv") {
            if (density_extremes) {
                std::cerr << "note: " << kAsymptoticNote << "\n";
                emit(csv_with_extremes(table, extremes), output_path);
            } else {
                emit(to_csv(table), output_path);
            }
        } else {
            throw std::invalid_argument("unknown format '" + density_format + "'");
        }
        return 0;
    }

    if (sample->parsed()) {
        RandomCoverParams p;
        p.k = sample_k;
        p.c = sample_c > 0.0 ? sample_c : default_c(sample_k) * 1.1;
        p.rng_seed = sample_seed;
        p.n_max = sample_nmax;
        const NaturalSequence set = sample_set(p);

        const std::uint64_t lo =
            sample_from > 0 ? sample_from : 2 * static_cast<std::uint64_t>(sample_k);
        const std::uint64_t hi = sample_to > 0 ? sample_to : sample_nmax;
        const std::vector<std::uint64_t> failures =
            covering_failures(set, sample_k, lo, hi, sample_jobs);

        std::vector<std::uint64_t> checkpoints;
        if (!sample_checkpoints.empty()) {
            checkpoints = parse_u64_list(sample_checkpoints);
        } else {
            for (std::uint64_t c = 10; c < sample_nmax; c *= 10) checkpoints.push_back(c);
            checkpoints.push_back(sample_nmax);
        }
        const DensityTable growth = growth_report(set, sample_k, checkpoints);

        if (!sample_elements_out.empty()) write_sequence_file(sample_elements_out, set);

        json doc;
        doc["elements"] = set.values();
        doc["failures"] = failures;
        doc["params"] = {{"k", p.k},      {"c", p.c},   {"seed", p.rng_seed},
                         {"nmax", p.n_max}, {"from", lo}, {"to", hi}};
        doc["rows"] = density_rows(growth, nullptr);
        doc["version"] = kVersion;
        emit(doc.dump(2) + "\n", output_path);
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
