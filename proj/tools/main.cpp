#include <CLI11.hpp>
#include <json.hpp>

#include <tlab/coreq.hpp>
#include <tlab/fixed.hpp>
#include <tlab/io.hpp>
#include <tlab/jdt.hpp>
#include <tlab/stabilize.hpp>
#include <tlab/verify.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using tlab::CheckResult;
using tlab::Partition;
using tlab::SkewTableau;

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

SkewTableau load_tableau(const std::string& path) {
    std::string text = read_input(path);
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') return tlab::tableau_from_json(text);
    return tlab::tableau_from_text(text);
}

// Output envelope. Text mode prints the bare payload; json mode wraps it with
// the command, its parameters, elapsed time, and a pass/fail/info status.
struct Report {
    bool json = false;
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::string status = "pass";
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::ostringstream text;

    void tableau(const SkewTableau& t, const char* key = "tableau") {
        if (json) {
            results[key] = nlohmann::json::parse(tlab::to_json(t));
        } else {
            text << tlab::to_text(t);
        }
    }

    void finish() const {
        if (json) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            nlohmann::json rep{{"schema", "1"},          {"command", command},
                               {"parameters", params},   {"results", results},
                               {"elapsed_ms", ms},       {"status", status}};
            std::cout << rep.dump() << "\n";
        } else {
            std::cout << text.str();
        }
    }
};

// Prints one line per check in text mode and returns whether all passed.
bool record_checks(Report& rep, const std::vector<CheckResult>& checks) {
    if (rep.json) {
        auto arr = nlohmann::json::array();
        for (const CheckResult& c : checks) {
            arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        rep.results["checks"] = arr;
    } else {
        for (const CheckResult& c : checks) {
            rep.text << (c.pass ? "PASS " : "FAIL ") << c.name;
            if (!c.pass && !c.detail.empty()) rep.text << ": " << c.detail;
            rep.text << "\n";
        }
    }
    bool ok = tlab::all_pass(checks);
    if (!ok) rep.status = "fail";
    return ok;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew tableau stabilization toolkit"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "text";
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for parallel sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // Transforms reading one tableau (file path or "-" for stdin).
    struct TransformEntry {
        const char* name;
        const char* help;
    };
    const std::vector<TransformEntry> unary = {
        {"rect", "rectify a skew tableau"},
        {"antirect", "anti-rectify a skew tableau"},
        {"demote", "inverse promotion"},
        {"evacuate", "evacuation of a straight tableau"},
        {"dagger", "rotate 180 degrees and reverse entries"},
        {"stab", "smallest k at which the tableau stabilizes"},
        {"reading-word", "row reading word, bottom row first"},
    };
    std::map<std::string, CLI::App*> subs;
    std::string input = "-";
    for (const auto& t : unary) {
        CLI::App* s = app.add_subcommand(t.name, t.help);
        s->add_option("input", input, "tableau file, - for stdin");
        subs[t.name] = s;
    }

    int power = 1;
    CLI::App* promote_cmd = app.add_subcommand("promote", "promotion, optionally iterated");
    promote_cmd->add_option("input", input, "tableau file, - for stdin");
    promote_cmd->add_option("--power", power, "number of applications")
        ->check(CLI::NonNegativeNumber);

    int copies = 1;
    CLI::App* shape_cmd =
        app.add_subcommand("stab-shape", "shape of the rectified k-fold shifted union");
    shape_cmd->add_option("input", input, "tableau file, - for stdin");
    shape_cmd->add_option("--copies", copies, "number of copies")
        ->required()
        ->check(CLI::NonNegativeNumber);

    int modulus = 1;
    std::string partition_arg;
    CLI::App* quotient_cmd = app.add_subcommand("quotient", "r-quotient and r-core of a partition");
    quotient_cmd->add_option("partition", partition_arg, "comma-separated parts, - for empty")
        ->required();
    quotient_cmd->add_option("-r", modulus, "modulus")->required()->check(CLI::PositiveNumber);
    CLI::App* core_cmd = app.add_subcommand("core", "r-core of a partition");
    core_cmd->add_option("partition", partition_arg, "comma-separated parts, - for empty")
        ->required();
    core_cmd->add_option("-r", modulus, "modulus")->required()->check(CLI::PositiveNumber);

    int opt_a = 0, opt_b = 0, opt_r = 1;
    bool all = false;
    std::string construct_input;
    CLI::App* construct_cmd =
        app.add_subcommand("construct", "promotion-fixed tableau from row pieces");
    construct_cmd->add_option("input", construct_input, "tableau file, - for stdin");
    construct_cmd->add_option("-a", opt_a, "target column count in row lengths")->required();
    construct_cmd->add_flag("--all", all, "map every standard filling of the domain");
    construct_cmd->add_option("-b", opt_b, "rows of the domain (with --all)");
    construct_cmd->add_option("-r", opt_r, "row length of the domain (with --all)");

    CLI::App* construct2_cmd =
        app.add_subcommand("construct2", "promotion-fixed tableau from two stacked pieces");
    construct2_cmd->add_option("input", construct_input, "tableau file, - for stdin");
    construct2_cmd->add_flag("--all", all, "map every standard filling of the domain");
    construct2_cmd->add_option("-b", opt_b, "total rows of the domain (with --all)");
    construct2_cmd->add_option("-r", opt_r, "row length of the domain (with --all)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "verification campaigns");
    verify_cmd->require_subcommand(1);
    int dist_n = 5;
    CLI::App* dist_cmd = verify_cmd->add_subcommand(
        "stab-dist", "distribution of the stabilization statistic over all words");
    dist_cmd->add_option("-n", dist_n, "word length")->required()->check(CLI::PositiveNumber);
    int max_size = 6;
    CLI::App* conjecture_cmd = verify_cmd->add_subcommand(
        "conjecture", "stabilization bounded by row count, exhaustive sweep");
    conjecture_cmd->add_option("--max-size", max_size, "largest cell count swept")
        ->required()
        ->check(CLI::PositiveNumber);
    int csp_a = 0, csp_b = 0;
    CLI::App* csp_cmd = verify_cmd->add_subcommand(
        "csp", "fixed-point counts against root-of-unity polynomial evaluations");
    csp_cmd->add_option("-a", csp_a, "columns")->required()->check(CLI::PositiveNumber);
    csp_cmd->add_option("-b", csp_b, "rows")->required()->check(CLI::PositiveNumber);
    CLI::App* fixed_cmd = verify_cmd->add_subcommand(
        "fixed-points", "constructions against brute-force fixed-point searches");
    CLI::App* props_cmd =
        verify_cmd->add_subcommand("properties", "structural invariants of the toolkit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report rep;
    rep.json = format == "json";
    for (const CLI::App* s : app.get_subcommands()) {
        rep.command = s->get_name();
        for (const CLI::App* inner : s->get_subcommands()) {
            rep.command += " " + inner->get_name();
        }
    }

    try {
        if (subs["rect"]->parsed()) {
            rep.tableau(tlab::rect(load_tableau(input)));
        } else if (subs["antirect"]->parsed()) {
            rep.tableau(tlab::antirect(load_tableau(input)));
        } else if (subs["demote"]->parsed()) {
            rep.tableau(tlab::demote(load_tableau(input)));
        } else if (subs["evacuate"]->parsed()) {
            rep.tableau(tlab::evacuate(load_tableau(input)));
        } else if (subs["dagger"]->parsed()) {
            rep.tableau(tlab::dagger(load_tableau(input)));
        } else if (promote_cmd->parsed()) {
            rep.params["power"] = power;
            rep.tableau(tlab::promote_power(load_tableau(input), power));
        } else if (subs["stab"]->parsed()) {
            int k = tlab::stab(load_tableau(input)).stab;
            if (rep.json) {
                rep.results["stab"] = k;
            } else {
                rep.text << k << "\n";
            }
        } else if (shape_cmd->parsed()) {
            rep.params["copies"] = copies;
            SkewTableau r = tlab::rect(tlab::shifted_copies(load_tableau(input), copies));
            Partition shape = tlab::normalized_partition(tlab::row_vector(r));
            if (rep.json) {
                rep.results["shape"] = shape.parts;
            } else {
                rep.text << tlab::to_text(shape) << "\n";
            }
        } else if (subs["reading-word"]->parsed()) {
            auto w = tlab::reading_word(load_tableau(input));
            if (rep.json) {
                rep.results["word"] = w;
            } else {
                for (std::size_t i = 0; i < w.size(); ++i) rep.text << (i ? " " : "") << w[i];
                rep.text << "\n";
            }
        } else if (quotient_cmd->parsed() || core_cmd->parsed()) {
            rep.params["r"] = modulus;
            Partition p = tlab::partition_from_text(partition_arg);
            tlab::QuotientDecomposition q = tlab::quotient(p, modulus);
            if (core_cmd->parsed()) {
                if (rep.json) {
                    rep.results["core"] = q.core.parts;
                } else {
                    rep.text << tlab::to_text(q.core) << "\n";
                }
            } else if (rep.json) {
                auto arr = nlohmann::json::array();
                for (const Partition& piece : q.pieces) arr.push_back(piece.parts);
                rep.results["pieces"] = arr;
                rep.results["core"] = q.core.parts;
            } else {
                for (const Partition& piece : q.pieces) rep.text << tlab::to_text(piece) << "\n";
                rep.text << "core: " << tlab::to_text(q.core) << "\n";
            }
        } else if (construct_cmd->parsed() || construct2_cmd->parsed()) {
            bool two = construct2_cmd->parsed();
            auto build = [&](const SkewTableau& s) {
                return two ? tlab::construct_R2(s) : tlab::construct_Ra(s, opt_a);
            };
            if (!two) rep.params["a"] = opt_a;
            if (all) {
                if (opt_b < 1) throw std::invalid_argument("--all requires -b");
                rep.params["b"] = opt_b;
                rep.params["r"] = opt_r;
                tlab::SkewShape domain = two ? tlab::two_block_shape(opt_b, opt_r)
                                             : tlab::block_antidiagonal_shape(opt_b, opt_r);
                std::vector<SkewTableau> images;
                for (const SkewTableau& s : tlab::enumerate_syt(domain)) images.push_back(build(s));
                if (rep.json) {
                    auto arr = nlohmann::json::array();
                    for (const SkewTableau& t : images)
                        arr.push_back(nlohmann::json::parse(tlab::to_json(t)));
                    rep.results["tableaux"] = arr;
                    rep.results["count"] = images.size();
                } else {
                    for (const SkewTableau& t : images) rep.text << tlab::to_text(t) << "\n";
                    rep.text << "count: " << images.size() << "\n";
                }
            } else {
                if (construct_input.empty())
                    throw std::invalid_argument("provide an input tableau or --all");
                rep.tableau(build(load_tableau(construct_input)));
            }
        } else if (dist_cmd->parsed()) {
            rep.params["n"] = dist_n;
            rep.params["jobs"] = jobs;
            std::cerr << "computing stabilization distribution over words of length " << dist_n
                      << " (jobs=" << jobs << ")\n";
            std::vector<long long> row = tlab::stab_distribution(dist_n, jobs);
            std::vector<long long> ref = tlab::reference_stab_row(dist_n);
            bool ok;
            std::string note;
            if (!ref.empty()) {
                ok = row == ref;
                note = "reference row";
            } else {
                long long sum = 0;
                for (long long v : row) sum += v;
                ok = sum == factorial(dist_n);
                note = "row sum";
            }
            if (!ok) rep.status = "fail";
            if (rep.json) {
                rep.results["row"] = row;
                rep.results["checked_against"] = note;
            } else {
                for (std::size_t i = 0; i < row.size(); ++i) rep.text << (i ? " " : "") << row[i];
                rep.text << "\n";
            }
            rep.finish();
            return ok ? 0 : 1;
        } else if (conjecture_cmd->parsed()) {
            rep.params["max_size"] = max_size;
            rep.params["jobs"] = jobs;
            std::cerr << "sweeping decreasing-row skew tableaux with up to " << max_size
                      << " cells\n";
            bool ok = record_checks(rep, tlab::verify_conjecture(max_size, jobs));
            rep.finish();
            return ok ? 0 : 1;
        } else if (csp_cmd->parsed()) {
            rep.params["a"] = csp_a;
            rep.params["b"] = csp_b;
            std::cerr << "checking cyclic sieving for the " << csp_b << " x " << csp_a
                      << " rectangle\n";
            bool ok = record_checks(rep, tlab::verify_csp({{csp_a, csp_b}}));
            rep.finish();
            return ok ? 0 : 1;
        } else if (fixed_cmd->parsed()) {
            std::cerr << "comparing fixed-point constructions against brute force\n";
            bool ok = record_checks(rep, tlab::verify_fixed_points());
            rep.finish();
            return ok ? 0 : 1;
        } else if (props_cmd->parsed()) {
            std::cerr << "running structural invariant suites\n";
            bool ok = record_checks(rep, tlab::verify_properties());
            rep.finish();
            return ok ? 0 : 1;
        }
    } catch (const tlab::EnumerationLimit& e) {
        rep.status = "info";
        std::cerr << "info: " << e.what() << "\n";
        if (rep.json) {
            rep.results["message"] = e.what();
            rep.finish();
        }
        return 0;
    } catch (const tlab::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    rep.finish();
    return 0;
}
