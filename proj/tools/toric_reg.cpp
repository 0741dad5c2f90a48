// toric-reg: command-line front end for the sumset / regularity engine.

#include "toric/cm_reg.hpp"
#include "toric/errors.hpp"
#include "toric/families.hpp"
#include "toric/io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace toric;

namespace {

enum ExitCode { kOk = 0, kInvalid = 1, kUnsupported = 2, kResource = 3, kContradiction = 4 };

struct Common {
    std::string field = "q";
    std::int64_t cutoff = -1;
    unsigned threads = 0;
    std::uint64_t max_slice = std::uint64_t{1} << 27;
    bool timing = true;

    EngineOptions engine() const { return EngineOptions{max_slice, threads}; }
    RegOptions reg_options() const {
        RegOptions r;
        r.field = parse_field(field);
        if (cutoff >= 0) {
            r.cutoff_level = cutoff;
        }
        return r;
    }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--field", c.field, "Coefficient field: q, f2, f32003")->check(CLI::IsMember({"q", "f2", "f32003"}));
    cmd->add_option("--cutoff", c.cutoff, "Highest level |y|/D to enumerate (verdict Other only)");
    cmd->add_option("--threads", c.threads, "Worker threads, 0 = all cores");
    cmd->add_option("--max-slice", c.max_slice, "Largest simplex slice in lattice points");
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

json analyze(const GeneratorSet& a, const Common& c) {
    const auto engine = c.engine();
    const std::string hash = instance_hash(a);
    json out{{"schema", kSchema}, {"instance_hash", hash}, {"instance", instance_to_json(a)}};
    json timing = json::object();

    auto t = std::chrono::steady_clock::now();
    const auto report = classify(a, engine);
    timing["classify"] = elapsed_ms(t);
    out["classification"] = to_json(report);
    out["classification"]["instance_hash"] = hash;

    if (report.verdict == Verdict::Other && c.cutoff < 0) {
        throw UnsupportedInstanceError("verdict Other: " + report.failed_condition + " (pass --cutoff for a lower bound)");
    }

    std::optional<SigmaResult> sig;
    if (report.verdict != Verdict::Other) {
        t = std::chrono::steady_clock::now();
        SumsetTable table(*report.normalized, engine);
        sig = sigma(table, report.verdict);
        const auto bounds = verify_sigma_bounds(*sig);
        timing["sigma"] = elapsed_ms(t);
        out["sigma"] = to_json(*sig);
        out["sigma"]["alt_lower_holds"] = bounds.alt_lower_holds;
        out["sigma"]["instance_hash"] = hash;
    } else {
        out["sigma"] = nullptr;
    }

    t = std::chrono::steady_clock::now();
    const auto r = reg(a, c.reg_options(), engine);
    timing["reg"] = elapsed_ms(t);
    out["regularity"] = to_json(r);
    out["regularity"]["instance_hash"] = hash;
    if (sig) {
        out["regularity"]["reg_minus_sigma"] = r.reg - sig->sigma;
    }

    t = std::chrono::steady_clock::now();
    const auto deg = degree(a, &report);
    timing["degree"] = elapsed_ms(t);
    out["degree"] = to_json(deg);
    out["degree"]["instance_hash"] = hash;

    const auto eg = eg_check(r.reg, deg, report.verdict, a.dim());
    out["eg"] = to_json(eg);
    out["eg"]["instance_hash"] = hash;
    if (c.timing) {
        out["timing_ms"] = timing;
    }
    return out;
}

GeneratorSet generate(const std::string& family, int d, std::int64_t degree_value, std::int64_t e, int extras,
                      std::uint64_t seed) {
    Rng rng(seed);
    GeneratorSet a = [&] {
        if (family == "veronese") {
            return veronese(d, degree_value);
        }
        if (family == "minimal-smooth") {
            return minimal_smooth(d, degree_value);
        }
        if (family == "smooth-random") {
            return smooth_random(d, degree_value, extras, rng);
        }
        if (family == "one-singular") {
            return one_singular_random(d, degree_value, e, extras, rng);
        }
        if (family == "chart-example") {
            return chart_example();
        }
        if (family == "one-hole-quartic") {
            return one_hole_quartic();
        }
        if (family == "even-sextic") {
            return even_sextic();
        }
        throw ValidationError("unknown family " + family);
    }();
    const auto report = classify(a);
    const bool smooth_family = family == "veronese" || family == "minimal-smooth" || family == "smooth-random";
    const Verdict expected = smooth_family ? Verdict::Smooth : Verdict::OneSingular;
    if (report.verdict != expected) {
        throw InternalError("generated set classifies as " + to_string(report.verdict));
    }
    return a;
}

std::string csv_row(const std::string& name, const GeneratorSet& a, const Common& c) {
    std::ostringstream row;
    row << name << ',' << a.dim() << ',' << a.degree() << ',';
    const auto report = classify(a, c.engine());
    row << report.e << ',' << to_string(report.verdict) << ',';
    if (report.verdict == Verdict::Other) {
        row << ",,,,,";
        return row.str();
    }
    const auto sig = sigma(a, c.engine());
    const auto r = reg(a, c.reg_options(), c.engine());
    const auto deg = degree(a, &report);
    const auto eg = eg_check(r.reg, deg, report.verdict, a.dim());
    row << sig.sigma << ',' << r.reg << ',' << deg.degree.get_str() << ',' << deg.codim << ',' << eg.slack.get_str()
        << ',' << r.reg - sig.sigma;
    return row.str();
}

std::string corpus(const std::string& dir, const Common& c) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::ostringstream out;
    out << "file,d,D,e,verdict,sigma,reg,degree,codim,eg_slack,reg_minus_sigma\n";
    for (const auto& f : files) {
        out << csv_row(f.filename().string(), load_instance(f.string()), c) << '\n';
    }
    return out.str();
}

void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw ValidationError("cannot write " + path);
    }
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sumsets, regularity and degree of simplicial projective toric varieties"};
    app.require_subcommand(1);
    Common common;
    std::string path;
    std::string out_path;
    std::int64_t level = 1;

    auto* analyze_cmd = app.add_subcommand("analyze", "Full pipeline as JSON");
    analyze_cmd->add_option("instance", path, "Instance JSON file")->required();
    analyze_cmd->add_flag("!--no-timing", common.timing, "Omit per-stage timings");
    add_common(analyze_cmd, common);

    std::string family;
    int gen_d = 2;
    std::int64_t gen_degree = 3;
    std::int64_t gen_e = 1;
    int gen_extras = 0;
    std::uint64_t seed = 1;
    auto* gen_cmd = app.add_subcommand("gen", "Emit an instance of a named family");
    gen_cmd->add_option("family", family, "veronese, minimal-smooth, smooth-random, one-singular, chart-example, "
                                          "one-hole-quartic, even-sextic")
        ->required();
    gen_cmd->add_option("--d", gen_d, "Dimension");
    gen_cmd->add_option("--D", gen_degree, "Maximal norm");
    gen_cmd->add_option("--e", gen_e, "Divisor (one-singular)");
    gen_cmd->add_option("--extras", gen_extras, "Random extra points");
    gen_cmd->add_option("--seed", seed, "Seed for std::mt19937_64");

    auto* plot_cmd = app.add_subcommand("plot", "SVG of sA inside Delta_{s,e} (d = 2)");
    plot_cmd->add_option("instance", path)->required();
    plot_cmd->add_option("--s", level, "Level");
    plot_cmd->add_option("-o,--output", out_path, "Output file (default standard output)");
    add_common(plot_cmd, common);

    bool count_only = false;
    auto* sumset_cmd = app.add_subcommand("sumset", "List or count sA");
    sumset_cmd->add_option("instance", path)->required();
    sumset_cmd->add_option("--s", level, "Level");
    sumset_cmd->add_flag("--count", count_only, "Only the cardinality");
    add_common(sumset_cmd, common);

    auto* hilbert_cmd = app.add_subcommand("hilbert", "|sA| for s = 0..s-max");
    hilbert_cmd->add_option("instance", path)->required();
    hilbert_cmd->add_option("--s-max", level, "Last level");
    add_common(hilbert_cmd, common);

    auto* sigma_cmd = app.add_subcommand("sigma", "Sumsets regularity");
    sigma_cmd->add_option("instance", path)->required();
    add_common(sigma_cmd, common);

    auto* reg_cmd = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
    reg_cmd->add_option("instance", path)->required();
    add_common(reg_cmd, common);

    auto* degree_cmd = app.add_subcommand("degree", "Degree from maximal minors");
    degree_cmd->add_option("instance", path)->required();
    add_common(degree_cmd, common);

    auto* eg_cmd = app.add_subcommand("eg-check", "reg <= degree - codim");
    eg_cmd->add_option("instance", path)->required();
    add_common(eg_cmd, common);

    auto* corpus_cmd = app.add_subcommand("corpus", "CSV summary of every *.json in a directory");
    corpus_cmd->add_option("directory", path)->required();
    corpus_cmd->add_option("-o,--output", out_path, "Output file (default standard output)");
    add_common(corpus_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInvalid;
    }

    try {
        const auto engine = common.engine();
        if (*analyze_cmd) {
            emit(analyze(load_instance(path), common));
        } else if (*gen_cmd) {
            emit(instance_to_json(generate(family, gen_d, gen_degree, gen_e, gen_extras, seed)));
        } else if (*plot_cmd) {
            SumsetTable table(load_instance(path), engine);
            write_or_print(plot_svg(table, level), out_path);
        } else if (*sumset_cmd) {
            SumsetTable table(load_instance(path), engine);
            const auto& l = table.level(level);
            json j{{"schema", kSchema}, {"s", level}, {"count", l.cardinality()}};
            if (!count_only) {
                j["points"] = to_json(l.members());
            }
            emit(j);
        } else if (*hilbert_cmd) {
            SumsetTable table(load_instance(path), engine);
            emit(json{{"schema", kSchema}, {"hilbert", hilbert_function(table, level)}});
        } else if (*sigma_cmd) {
            const auto a = load_instance(path);
            const auto s = sigma(a, engine);
            auto j = to_json(s);
            j["alt_lower_holds"] = verify_sigma_bounds(s).alt_lower_holds;
            j["schema"] = kSchema;
            emit(j);
        } else if (*reg_cmd) {
            auto j = to_json(reg(load_instance(path), common.reg_options(), engine));
            j["schema"] = kSchema;
            emit(j);
        } else if (*degree_cmd) {
            const auto a = load_instance(path);
            std::optional<ClassificationReport> report;
            if (!is_coordinate_simplex(a)) {
                report = classify(a, engine);
            }
            auto j = to_json(degree(a, report ? &*report : nullptr));
            j["schema"] = kSchema;
            emit(j);
        } else if (*eg_cmd) {
            auto j = to_json(eg_check(load_instance(path), common.reg_options(), engine));
            j["schema"] = kSchema;
            emit(j);
        } else if (*corpus_cmd) {
            write_or_print(corpus(path, common), out_path);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const UnsupportedInstanceError& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kUnsupported;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const Error& e) {
        std::cerr << "internal: " << e.what() << '\n';
        return kContradiction;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kOk;
}
