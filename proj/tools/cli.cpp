#include "cli.hpp"

#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "pythia/serialize.hpp"
#include "pythia/verifier.hpp"

namespace pythia::cli {

namespace {

enum class Format { Jsonl, Csv, Table };

Format parse_format(const std::string& s) {
    if (s == "jsonl") return Format::Jsonl;
    if (s == "csv") return Format::Csv;
    if (s == "table") return Format::Table;
    throw CLI::ValidationError("--format", "expected jsonl, csv or table");
}

void table_row(std::ostream& out, const json& j) {
    // Human-convenience only; exempt from byte stability.
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        if (key == "kind") continue;
        if (!first) out << "  ";
        out << key << '=' << value.dump();
        first = false;
    }
    out << '\n';
}

template <class T>
void emit(std::ostream& out, Format fmt, const T& value) {
    switch (fmt) {
        case Format::Jsonl: out << to_json(value).dump() << '\n'; break;
        case Format::Csv: out << to_csv(value) << '\n'; break;
        case Format::Table: table_row(out, to_json(value)); break;
    }
}

int run_verify(const std::string& claim_name, u64 bound, unsigned jobs,
               std::ostream& out) {
    SearchReport report;
    switch (claim_from_name(claim_name)) {
        case Claim::Prop1: report = verify_prop1(bound, jobs); break;
        case Claim::Prop2: report = verify_prop2(bound, jobs); break;
        case Claim::Result1: report = verify_result1(bound, jobs); break;
        case Claim::Result2: report = verify_result2(bound, jobs); break;
        case Claim::Result3: report = verify_result3(bound, jobs); break;
        case Claim::Theorem1: report = verify_theorem1(bound, jobs); break;
        case Claim::Theorem2: report = verify_theorem2(bound, jobs); break;
        case Claim::NoTriples: report = verify_no_triples(bound, jobs); break;
    }
    out << to_json(report).dump() << '\n';
    return report.counterexamples.empty() ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Pythagorean triple, box and Diophantine search toolkit"};
    app.require_subcommand(1);

    std::string format = "jsonl";
    u64 max_c = 0, max_z = 0, max_t = 0, bound = 0, max_param = 0;
    bool primitive = false, odd_k_only = false;
    bool equal_edge = false, face_diagonal = false;
    unsigned jobs = 1;
    std::vector<u64> decompose_args;
    unsigned family = 0;
    std::optional<u64> fK, fm, fn, fM, fN, fd;
    std::string claim;

    auto* c_triples = app.add_subcommand("triples", "Enumerate Pythagorean triples");
    c_triples->add_option("--max-c", max_c, "Largest hypotenuse")->required();
    c_triples->add_flag("--primitive", primitive, "Primitive triples only");
    c_triples->add_option("--format", format, "jsonl|csv|table");
    c_triples->add_option("--jobs", jobs, "Worker threads");

    auto* c_decompose =
        app.add_subcommand("decompose", "Canonical parameters of a triple");
    c_decompose->add_option("abc", decompose_args, "Triple A B C")
        ->expected(3)
        ->required();
    c_decompose->add_option("--format", format, "jsonl|csv|table");

    auto* c_two = app.add_subcommand("two-square",
                                     "Enumerate solutions of x^2 + 2y^2 = z^2");
    c_two->add_option("--max-z", max_z, "Largest z")->required();
    c_two->add_flag("--odd-k-only", odd_k_only, "Restrict the generator to odd k");
    c_two->add_option("--format", format, "jsonl|csv|table");
    c_two->add_option("--jobs", jobs, "Worker threads");

    auto* c_boxes = app.add_subcommand("boxes", "Enumerate Pythagorean boxes");
    c_boxes->add_option("--max-t", max_t, "Largest inner diagonal")->required();
    auto* opt_equal = c_boxes->add_flag("--equal-edge", equal_edge,
                                        "Boxes with two equal adjacent edges");
    auto* opt_face = c_boxes->add_flag("--face-diagonal", face_diagonal,
                                       "Integral-face-diagonal subfamily");
    opt_face->excludes(opt_equal);
    c_boxes->add_option("--max-param", max_param,
                        "Parameter cap for --face-diagonal");
    c_boxes->add_option("--format", format, "jsonl|csv|table");
    c_boxes->add_option("--jobs", jobs, "Worker threads");

    auto* c_pairs =
        app.add_subcommand("pairs", "Generate a shared-side triangle pair");
    c_pairs->add_option("--family", family, "Family 1..4")->required();
    c_pairs->add_option("--K", fK, "Scale K (families 2, 3)");
    c_pairs->add_option("--m", fm, "m (families 2, 3)");
    c_pairs->add_option("--n", fn, "n (families 2, 3)");
    c_pairs->add_option("--M", fM, "M")->required();
    c_pairs->add_option("--N", fN, "N")->required();
    c_pairs->add_option("--d", fd, "d (family 4)");
    c_pairs->add_option("--format", format, "jsonl|csv|table");

    auto* c_verify =
        app.add_subcommand("verify", "Bounded exhaustive non-existence sweep");
    c_verify
        ->add_option("claim", claim,
                     "prop1|prop2|result1|result2|result3|theorem1|theorem2")
        ->required();
    c_verify->add_option("--bound", bound, "Search bound")->required();
    c_verify->add_option("--jobs", jobs, "Worker threads");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << '\n';
        return 1;
    }

    try {
        const Format fmt = parse_format(format);
        if (*c_triples) {
            for (const auto& t : enumerate_triples(max_c, primitive, jobs))
                emit(out, fmt, t);
        } else if (*c_decompose) {
            emit(out, fmt,
                 params_of(Triple::make(decompose_args[0], decompose_args[1],
                                        decompose_args[2])));
        } else if (*c_two) {
            for (const auto& s : enumerate_two_two(max_z, odd_k_only, jobs))
                emit(out, fmt, s);
        } else if (*c_boxes) {
            if (face_diagonal) {
                if (max_param == 0)
                    throw domain_error("--face-diagonal requires --max-param");
                for (u64 delta = 1; delta <= max_param; ++delta)
                    for (u64 m = 2; m <= max_param; ++m)
                        for (u64 k = 1; k < m; ++k) {
                            if ((m + k) % 2 == 0 || gcd(m, k) != 1) continue;
                            const auto fb = face_diagonal_box(
                                FaceDiagonalParams::make(delta, m, k));
                            if (fb.box.t <= max_t) emit(out, fmt, fb);
                        }
            } else if (equal_edge) {
                for (const auto& b : equal_edge_boxes(max_t, jobs))
                    emit(out, fmt, b);
            } else {
                for (const auto& b : enumerate_boxes(max_t, jobs))
                    emit(out, fmt, b);
            }
        } else if (*c_pairs) {
            auto need = [](const std::optional<u64>& v, const char* name) {
                if (!v)
                    throw domain_error(std::string("missing --") + name +
                                       " for this family");
                return *v;
            };
            TrianglePair pair = [&] {
                switch (family) {
                    case 1: return family1(need(fM, "M"), need(fN, "N"));
                    case 2:
                        return family2(need(fK, "K"), need(fm, "m"),
                                       need(fn, "n"), need(fM, "M"),
                                       need(fN, "N"));
                    case 3:
                        return family3(need(fK, "K"), need(fm, "m"),
                                       need(fn, "n"), need(fM, "M"),
                                       need(fN, "N"));
                    case 4:
                        return family4(need(fd, "d"), need(fM, "M"),
                                       need(fN, "N"));
                    default:
                        throw domain_error("--family must be 1, 2, 3 or 4");
                }
            }();
            emit(out, fmt, pair);
        } else if (*c_verify) {
            return run_verify(claim, bound, jobs, out);
        }
    } catch (const overflow_error& e) {
        err << "overflow: " << e.what() << '\n';
        return 1;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace pythia::cli
