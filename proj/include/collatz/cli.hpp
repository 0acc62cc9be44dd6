#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "collatz/approximation.hpp"
#include "collatz/emit.hpp"
#include "collatz/geometry.hpp"
#include "collatz/inversion.hpp"
#include "collatz/loops.hpp"
#include "collatz/odd_rational.hpp"
#include "collatz/rational.hpp"
#include "collatz/representation.hpp"
#include "collatz/sequence.hpp"
#include "collatz/verify.hpp"

namespace collatz::cli {

namespace detail {

inline viewport parse_viewport(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4) {
        throw std::invalid_argument("viewport needs four comma-separated rationals: '" +
                                    text + "'");
    }
    return viewport{rational::parse(parts[0]), rational::parse(parts[1]),
                    rational::parse(parts[2]), rational::parse(parts[3])};
}

inline void write_output(const std::string& bytes, const std::string& path,
                         std::ostream& out) {
    if (path.empty() || path == "-") {
        out << bytes;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << bytes;
}

inline std::string members_text(const std::vector<odd_rational>& members) {
    std::string s = "[";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i != 0) s += ',';
        s += members[i].str();
    }
    return s + "]";
}

}  // namespace detail

/// Runs one invocation. `args` holds the arguments without the program name,
/// in command-line order. Returns the exit status: 0 success, 1 domain
/// failure, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Collatz representations of rationals with odd parts"};
    app.name("collatz");
    app.require_subcommand(1);

    std::string repr_value;
    std::uint32_t repr_max_steps = 10000;
    CLI::App* repr = app.add_subcommand("repr", "Collatz representation of a rational");
    repr->add_option("value", repr_value, "rational with odd numerator and denominator")
        ->required();
    repr->add_option("--max-steps", repr_max_steps, "iteration budget before giving up");

    std::string invert_text;
    unsigned invert_dec = 12;
    CLI::App* invert_cmd = app.add_subcommand("invert", "value of an eventually periodic sequence");
    invert_cmd->add_option("sequence", invert_text, "sequence like [4,1,(3)]")->required();
    CLI::Option* invert_dec_opt =
        invert_cmd->add_option("--dec", invert_dec, "append a decimal rendering");

    std::string point_text;
    unsigned point_dec = 12;
    CLI::App* point_cmd = app.add_subcommand("point", "plane point of a {1,2}-sequence");
    point_cmd->add_option("sequence", point_text, "finite sequence like [1,2] or []")
        ->required();
    CLI::Option* point_dec_opt =
        point_cmd->add_option("--dec", point_dec, "append decimal renderings");

    unsigned fractal_depth = 0;
    std::string fractal_format = "svg";
    std::string fractal_viewport;
    unsigned fractal_dec = 12;
    std::string fractal_out;
    CLI::App* fractal = app.add_subcommand("fractal", "point set of all {1,2}-sequences");
    fractal->add_option("--depth", fractal_depth, "maximum sequence length")->required();
    fractal->add_option("--format", fractal_format, "svg, csv, or json");
    fractal->add_option("--viewport", fractal_viewport,
                        "xmin,xmax,ymin,ymax (default -4,3,-4,1)");
    fractal->add_option("--dec", fractal_dec, "decimal precision for csv/json");
    fractal->add_option("-o,--out", fractal_out, "output file, '-' for standard output");

    std::string approx_target;
    std::string approx_eps;
    bool approx_trace = false;
    unsigned approx_digits = 0;
    unsigned approx_dec = 12;
    CLI::App* approx_cmd = app.add_subcommand("approx", "approach a rational <= -1 from above");
    approx_cmd->add_option("value", approx_target, "target rational, at most -1")->required();
    approx_cmd->add_option("--eps", approx_eps, "error bound, positive rational")->required();
    approx_cmd->add_flag("--trace", approx_trace, "print one line per refinement round");
    approx_cmd->add_option("--digits", approx_digits,
                           "also print this many digits of the infinite word");
    approx_cmd->add_option("--dec", approx_dec, "decimal precision of annotations");

    std::string digits_target;
    unsigned digits_count = 0;
    CLI::App* digits_cmd =
        app.add_subcommand("digits", "prefix of the infinite {1,2}-word converging to a value");
    digits_cmd->add_option("value", digits_target, "target rational, at most -1")->required();
    digits_cmd->add_option("--digits", digits_count, "how many digits")->required();

    std::int64_t loops_min = 0;
    std::int64_t loops_max = 0;
    std::uint32_t loops_max_steps = 10000;
    std::string loops_format = "text";
    CLI::App* loops_cmd = app.add_subcommand("loops", "absolutely periodic odd integers in a range");
    loops_cmd->add_option("--min", loops_min, "lower end of the range")->required();
    loops_cmd->add_option("--max", loops_max, "upper end of the range")->required();
    loops_cmd->add_option("--max-steps", loops_max_steps, "iteration budget per element");
    loops_cmd->add_option("--format", loops_format, "text or json");

    unsigned verify_depth = 10;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "cross-check the library's identities at a chosen scale");
    verify_cmd->add_option("--depth", verify_depth, "check over {1,2}-sequences up to this length");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (repr->parsed()) {
            const odd_rational a{rational::parse(repr_value)};
            const represent_result r = represent(a, repr_max_steps);
            if (is_periodic(r)) {
                out << to_string(periodic_seq(r)) << "\n";
            } else {
                const truncation& t = std::get<truncation>(r);
                out << "truncated after " << t.steps_used << " steps, last "
                    << t.last_iterate.str() << "\n";
            }
        } else if (invert_cmd->parsed()) {
            const odd_rational v = invert(parse_sequence(invert_text));
            out << v.str();
            if (invert_dec_opt->count() > 0) out << " (" << v.value().decimal(invert_dec) << ")";
            out << "\n";
        } else if (point_cmd->parsed()) {
            const point p = point_of(parse_finite_seq(point_text));
            const bool dec = point_dec_opt->count() > 0;
            out << "x " << p.x.str();
            if (dec) out << " (" << p.x.value().decimal(point_dec) << ")";
            out << "\ny " << p.y.str();
            if (dec) out << " (" << p.y.value().decimal(point_dec) << ")";
            out << "\n";
        } else if (fractal->parsed()) {
            const emit_format format = parse_emit_format(fractal_format);
            if (format == emit_format::svg && fractal_out.empty()) {
                err << "error: svg output needs -o <file> (or '-o -' for standard output)\n";
                return 2;
            }
            const viewport vp = fractal_viewport.empty()
                                    ? default_viewport()
                                    : detail::parse_viewport(fractal_viewport);
            const fractal_graph g = make_fractal_graph(fractal_depth);
            detail::write_output(emit(g, format, vp, fractal_dec), fractal_out, out);
        } else if (approx_cmd->parsed()) {
            const rational z = rational::parse(approx_target);
            const approx_result r = approximate(z, rational::parse(approx_eps));
            out << "sequence " << to_string(r.sequence) << "\n";
            out << "value " << r.value.str() << " (" << r.value.value().decimal(approx_dec)
                << ")\n";
            out << "error " << r.error.str() << " (" << r.error.decimal(approx_dec) << ")\n";
            if (approx_trace) {
                out << "start error " << r.start_error.str() << " ("
                    << r.start_error.decimal(approx_dec) << ")\n";
                for (std::size_t i = 0; i < r.trace.size(); ++i) {
                    const round_record& rec = r.trace[i];
                    out << "round " << i + 1 << ": twos " << rec.twos_appended << ", ones "
                        << rec.ones_appended << ", error " << rec.error_after.str() << " ("
                        << rec.error_after.decimal(approx_dec) << ")\n";
                }
            }
            out << "rounds " << r.trace.size() << "\n";
            if (approx_digits > 0) {
                out << "digits " << to_string(digits_of(z, approx_digits)) << "\n";
            }
        } else if (digits_cmd->parsed()) {
            out << to_string(digits_of(rational::parse(digits_target), digits_count)) << "\n";
        } else if (loops_cmd->parsed()) {
            const loop_scan_result r = find_absolute_loops(bigint(loops_min), bigint(loops_max),
                                                           loops_max_steps);
            if (loops_format == "json") {
                nlohmann::ordered_json doc;
                doc["loops"] = nlohmann::ordered_json::array();
                for (const loop_report& loop : r.loops) {
                    nlohmann::ordered_json members = nlohmann::ordered_json::array();
                    for (const odd_rational& m : loop.members) members.push_back(m.str());
                    doc["loops"].push_back({{"members", std::move(members)},
                                            {"cycle", loop.quotient_cycle},
                                            {"canonical", loop.canonical}});
                }
                doc["undecided"] = nlohmann::ordered_json::array();
                for (const odd_rational& u : r.undecided) doc["undecided"].push_back(u.str());
                out << doc.dump(2) << "\n";
            } else if (loops_format == "text") {
                for (std::size_t i = 0; i < r.loops.size(); ++i) {
                    const loop_report& loop = r.loops[i];
                    out << "loop " << i + 1 << ": members "
                        << detail::members_text(loop.members) << " cycle "
                        << to_string(eventually_periodic{{}, loop.quotient_cycle}) << "\n";
                }
                out << "undecided " << r.undecided.size() << "\n";
            } else {
                throw std::invalid_argument("unknown format: " + loops_format);
            }
        } else if (verify_cmd->parsed()) {
            const auto t0 = std::chrono::steady_clock::now();
            const verify_report report = verify(verify_depth);
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - t0;
            out << "depth " << report.depth << ", sequences " << report.sequences << "\n";
            for (const suite_result& s : report.suites) {
                out << s.name << ": " << s.checked << " checked, " << s.failed << " failed\n";
            }
            out << "d0 matches the bare 2/3^|A| for " << report.d0_simple_matches << " of "
                << report.sequences << " sequences (exact form is 2^(1+sum A)/3^|A|)\n";
            for (const auto& [seq, d0] : report.d0_mismatch_samples) {
                bigint p3 = 1;
                for (std::size_t k = 0; k < seq.size(); ++k) p3 *= 3;
                out << "  e.g. A=" << to_string(seq) << ": d0 = " << d0.str()
                    << ", 2/3^|A| = " << rational(2, p3).str() << "\n";
            }
            out << (report.passed() ? "PASS" : "FAIL") << "\n";
            // timing goes to the error stream so standard output stays
            // byte-identical across runs
            err << "runtime " << elapsed.count() << "s\n";
            return report.passed() ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace collatz::cli
