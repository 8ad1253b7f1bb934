#include "cli.hpp"

#include "sl2/cc_counting.hpp"
#include "sl2/error.hpp"
#include "sl2/frieze.hpp"
#include "sl2/io.hpp"
#include "sl2/reconstruct.hpp"
#include "sl2/render.hpp"
#include "sl2/tiling.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sl2::cli {

namespace {

struct Failure {
    int code;
    std::string error;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& error, const std::string& message) {
    throw Failure{code, error, message};
}

IndexRange parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) fail(2, "InvalidInput", "expected a range A..B, got '" + s + "'");
    try {
        const IndexRange r{to_int64(parse_decimal(s.substr(0, dots))), to_int64(parse_decimal(s.substr(dots + 2)))};
        if (r.hi < r.lo) fail(2, "InvalidInput", "empty range '" + s + "'");
        return r;
    } catch (const Error&) {
        fail(2, "InvalidInput", "expected a range A..B, got '" + s + "'");
    }
}

std::vector<BigInt> parse_list(const std::string& s) {
    std::vector<BigInt> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');) out.push_back(parse_decimal(item));
    return out;
}

template <class T>
T read_as(const std::string& path, const char* what) {
    auto p = io::read_file(path);
    if (auto* x = std::get_if<T>(&p)) return std::move(*x);
    fail(2, "InvalidInput", "'" + path + "' does not hold a " + what);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(2, "InvalidInput", "cannot write '" + path + "'");
    f << text;
}

void require_valid(const ValidationReport& rep) {
    if (!rep.ok()) fail(2, "InvalidInput", rep.issues.front());
}

// "--rows -3..3" would otherwise read as a short flag.
std::vector<std::string> normalize(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if ((a == "--rows" || a == "--cols" || a == "--start" || a == "--a" || a == "--d") && i + 1 < argc &&
            argv[i + 1][0] == '-') {
            args.push_back(a + "=" + argv[++i]);
            continue;
        }
        args.push_back(a);
    }
    return args;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"SL2-tilings and triangulations of discs with accumulation points"};
    app.require_subcommand(1);

    std::string in_a, in_b, out_path, rows_s, cols_s, format = "ascii", quid_s;
    Index start = 0, depth = 0, a_idx = 0, d_idx = 0;

    auto* gen = app.add_subcommand("gen", "Counting tiling window from a fragment");
    gen->add_option("fragment", in_a)->required();
    gen->add_option("--rows", rows_s)->required();
    gen->add_option("--cols", cols_s)->required();
    gen->add_option("--out", out_path);

    auto* invert = app.add_subcommand("invert", "Fragment realizing a tiling window");
    invert->add_option("tiling", in_a)->required();
    invert->add_option("certificate", in_b)->required();
    invert->add_option("--out", out_path);

    auto* roundtrip = app.add_subcommand("roundtrip", "Invert, count and compare");
    roundtrip->add_option("tiling", in_a)->required();
    roundtrip->add_option("certificate", in_b)->required();

    auto* render = app.add_subcommand("render", "Draw a fragment or window");
    render->add_option("file", in_a)->required();
    render->add_option("--format", format)->check(CLI::IsMember({"svg", "ascii"}));
    render->add_option("--out", out_path);

    auto* validate = app.add_subcommand("validate", "Check any manifest file");
    validate->add_option("file", in_a)->required();

    auto* frieze = app.add_subcommand("frieze", "Frieze utilities");
    frieze->require_subcommand(1);
    auto* from_quid = frieze->add_subcommand("from-quiddity", "Infinite frieze from a quiddity sequence");
    from_quid->add_option("quiddity", quid_s)->required();
    from_quid->add_option("--start", start);
    from_quid->add_option("--depth", depth)->required();
    from_quid->add_option("--out", out_path);
    auto* from_poly = frieze->add_subcommand("from-polygon", "Conway-Coxeter frieze of a triangulated polygon");
    from_poly->add_option("fragment", in_a)->required();
    from_poly->add_option("--out", out_path);
    auto* to_poly = frieze->add_subcommand("to-polygon", "Triangulation from a fundamental domain");
    to_poly->add_option("frieze", in_a)->required();
    auto* a_opt = to_poly->add_option("--a", a_idx);
    auto* d_opt = to_poly->add_option("--d", d_idx);
    to_poly->add_option("--out", out_path);
    auto* fvalidate = frieze->add_subcommand("validate", "Check a frieze file");
    fvalidate->add_option("frieze", in_a)->required();

    auto args = normalize(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << io::Json{{"error", "InvalidInput"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        if (*gen) {
            const auto frag = read_as<DiscFragment>(in_a, "fragment");
            require_valid(validate_fragment(frag));
            const auto pw = phi_window(frag, parse_range(rows_s), parse_range(cols_s));
            emit(io::serialize(pw.t), out_path, out);
        } else if (*invert) {
            const auto w = read_as<TilingWindow>(in_a, "tiling window");
            const auto cert = read_as<OnesCertificate>(in_b, "certificate");
            require_valid(validate_window(w));
            const auto trace = construct_traced(w, cert);
            if (out_path.empty()) {
                out << io::serialize(trace.fragment);
            } else {
                emit(io::serialize(trace.fragment), out_path, out);
                out << trace.id.name() << "\n";
            }
        } else if (*roundtrip) {
            const auto w = read_as<TilingWindow>(in_a, "tiling window");
            const auto cert = read_as<OnesCertificate>(in_b, "certificate");
            require_valid(validate_window(w));
            DiscFragment frag;
            try {
                frag = construct(w, cert);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::AgreementFailure) throw;
                fail(1, "AgreementFailure", e.what());
            }
            const auto again = phi_window(frag, w.rows(), w.cols()).t;
            for (Index b = w.rows().lo; b <= w.rows().hi; ++b)
                for (Index v = w.cols().lo; v <= w.cols().hi; ++v)
                    if (again.at(b, v) != w.at(b, v))
                        fail(1, "Mismatch",
                             "first differing cell (" + std::to_string(b) + "," + std::to_string(v) + "): " +
                                 again.at(b, v).str() + " != " + w.at(b, v).str());
            out << "roundtrip ok (" << classify(cert).name() << ")\n";
        } else if (*render) {
            const auto p = io::read_file(in_a);
            if (std::holds_alternative<DiscFragment>(p)) require_valid(validate_fragment(std::get<DiscFragment>(p)));
            emit(format == "svg" ? render_svg(p) : render_ascii(p), out_path, out);
        } else if (*validate) {
            const auto p = io::read_file(in_a);
            ValidationReport rep;
            if (const auto* f = std::get_if<DiscFragment>(&p)) rep = validate_fragment(*f);
            if (const auto* w = std::get_if<TilingWindow>(&p)) rep = validate_window(*w);
            if (const auto* f = std::get_if<FriezeWindow>(&p)) rep = validate_frieze(*f);
            if (const auto* c = std::get_if<OnesCertificate>(&p))
                if (!is_zigzag_shaped(c->zigzag.points)) rep.issues.push_back("points do not form a zig-zag");
            if (!rep.ok()) {
                err << io::Json{{"error", "InvalidInput"}, {"message", rep.issues.front()}, {"issues", rep.issues}}.dump()
                    << "\n";
                return 2;
            }
            out << "valid " << io::payload_kind(p) << "\n";
        } else if (*from_quid) {
            emit(io::serialize(frieze_from_quiddity(parse_list(quid_s), start, depth)), out_path, out);
        } else if (*from_poly) {
            const auto frag = read_as<DiscFragment>(in_a, "fragment");
            emit(io::serialize(cc_frieze_from_polygon(frag)), out_path, out);
        } else if (*to_poly) {
            const auto f = read_as<FriezeWindow>(in_a, "frieze window");
            const Index a = *a_opt ? a_idx : f.lo;
            Index d = d_idx;
            if (!*d_opt) {
                if (f.kind != FriezeKind::FiniteCC) fail(2, "InvalidInput", "--d is required for an infinite frieze");
                d = a + f.period - 1;
            }
            emit(io::serialize(triangulation_from_cc_frieze(f, a, d)), out_path, out);
        } else if (*fvalidate) {
            const auto f = read_as<FriezeWindow>(in_a, "frieze window");
            const auto rep = validate_frieze(f);
            if (!rep.ok()) {
                err << io::Json{{"error", "InvalidInput"}, {"message", rep.issues.front()}, {"issues", rep.issues}}.dump()
                    << "\n";
                return 2;
            }
            out << "valid frieze_window\n";
        }
    } catch (const Failure& f) {
        err << io::Json{{"error", f.error}, {"message", f.message}}.dump() << "\n";
        return f.code;
    } catch (const Error& e) {
        err << io::Json{{"error", error_name(e.code())}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace sl2::cli
