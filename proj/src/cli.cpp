#include "bicircle/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bicircle/classify.hpp"
#include "bicircle/examples.hpp"
#include "bicircle/json_io.hpp"
#include "bicircle/randgen.hpp"
#include "bicircle/selftest.hpp"
#include "bicircle/splitting.hpp"

namespace bicircle {

namespace {

Json read_json(const std::string& path, std::istream& fallback_in) {
    std::string text;
    if (path == "-" || path.empty()) {
        std::ostringstream buf;
        buf << fallback_in.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) fail(errc::io_error, "cannot read " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::io_error, "input is not valid JSON");
    return j;
}

class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) {
        if (path == "-" || path.empty()) {
            out_ = &fallback;
        } else {
            file_.open(path);
            if (!file_) fail(errc::io_error, "cannot write " + path);
            out_ = &file_;
        }
    }
    std::ostream& get() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

std::pair<Rat, Rat> parse_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        fail(errc::io_error, "range must look like lo:hi, got " + text);
    return {Rat::parse(text.substr(0, colon)), Rat::parse(text.substr(colon + 1))};
}

void write_csv(std::ostream& os, const SampleGrid& grid) {
    os << "u,v,re,x,y,z\n";
    for (const GridPoint& gp : grid.points)
        os << gp.u << "," << gp.v << "," << gp.point.re << "," << gp.point.x << ","
           << gp.point.y << "," << gp.point.z << "\n";
}

Json grid_to_json(const SampleGrid& grid) {
    Json points = Json::array();
    for (const GridPoint& gp : grid.points)
        points.push_back(Json{{"u", gp.u.to_string()},
                              {"v", gp.v.to_string()},
                              {"point", quat_to_json(gp.point)}});
    Json poles = Json::array();
    for (const auto& [u, v] : grid.poles)
        poles.push_back(Json::array({u.to_string(), v.to_string()}));
    return Json{{"points", points}, {"poles", poles}};
}

// OBJ wants a full lattice; vertices are indexed row-major over the
// non-pole points and faces reference only quads with all four corners.
void write_obj(std::ostream& os, const SurfaceSpec& spec, const Rat& u_lo, const Rat& u_hi,
               const Rat& v_lo, const Rat& v_hi, int n, int precision) {
    std::vector<std::vector<int>> index(static_cast<size_t>(n),
                                        std::vector<int>(static_cast<size_t>(n), 0));
    std::ostringstream verts;
    int next = 1, poles = 0;
    Rat steps(n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat u = u_lo + (u_hi - u_lo) * Rat(i) / steps;
            Rat v = v_lo + (v_hi - v_lo) * Rat(j) / steps;
            try {
                Quat p = eval_surface(spec, u, v);
                verts << "v " << p.x.decimal_string(precision) << " "
                      << p.y.decimal_string(precision) << " "
                      << p.z.decimal_string(precision) << "\n";
                index[static_cast<size_t>(i)][static_cast<size_t>(j)] = next++;
            } catch (const error& e) {
                if (e.code() != errc::pole) throw;
                ++poles;
            }
        }
    if (next == 1) fail(errc::all_poles, "every lattice point is a pole");
    os << "# exact rational surface sampled on a " << n << "x" << n << " grid\n";
    os << "# coordinates are the imaginary components (x, y, z); " << poles
       << " pole(s) skipped\n";
    os << verts.str();
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j) {
            int q00 = index[static_cast<size_t>(i)][static_cast<size_t>(j)];
            int q10 = index[static_cast<size_t>(i + 1)][static_cast<size_t>(j)];
            int q11 = index[static_cast<size_t>(i + 1)][static_cast<size_t>(j + 1)];
            int q01 = index[static_cast<size_t>(i)][static_cast<size_t>(j + 1)];
            if (q00 && q10 && q11 && q01)
                os << "f " << q00 << " " << q10 << " " << q11 << " " << q01 << "\n";
        }
}

Json check_example(const NamedExample& ex) {
    if (ex.poly) {
        // polynomial fixture: norm-square separation plus the splitting guard
        RPolyN nsq = ex.poly->norm_sq();
        auto sep = separable_test(nsq);
        Json out{{"name", ex.name}, {"norm_square", rpoly_to_json(nsq)}};
        out["separable"] = sep.has_value();
        if (sep) {
            out["p_u"] = rpoly_to_json(sep->p_u);
            out["r_v"] = rpoly_to_json(sep->r_v);
        }
        try {
            split_h11(*ex.poly);
            out["split"] = "unexpected success";
        } catch (const error& e) {
            out["split_rejected"] = e.code_name();
        }
        return out;
    }

    const SurfaceSpec& spec = *ex.spec;
    SampleGrid grid = ladder_grid(spec, 7);
    Ambient amb = contains_check(spec, grid);
    Json out{{"name", ex.name},
             {"ambient", amb == Ambient::im_h   ? "im_h"
                         : amb == Ambient::s3   ? "s3"
                                                : "neither"}};

    if (std::holds_alternative<ABCForm>(spec) || std::holds_alternative<QuotientForm>(spec)) {
        out["classification"] = classification_to_json(classify(spec));
    } else if (std::holds_alternative<EuclideanTranslationalForm>(spec)) {
        ABCForm abc = encode_translational(std::get<EuclideanTranslationalForm>(spec));
        out["classification"] = classification_to_json(classify(SurfaceSpec(abc)));
    } else {
        // quasideterminant surfaces: certify the two-circle samples instead
        int lines = 0;
        for (FixedVar fixed : {FixedVar::u, FixedVar::v})
            for (int idx = 0; idx < 8 && lines < 10; ++idx) {
                std::array<Quat, 4> pts;
                size_t have = 0;
                IsoCurve iso;
                try {
                    iso = iso_curve(spec, fixed, ladder_value(idx));
                    for (int t = 0; t < 12 && have < 4; ++t) {
                        Quat p;
                        try {
                            p = iso.eval(ladder_value(t));
                        } catch (const error&) {
                            continue;
                        }
                        bool dup = false;
                        for (size_t s = 0; s < have; ++s)
                            if (pts[s] == p) dup = true;
                        if (!dup) pts[have++] = p;
                    }
                } catch (const error&) {
                    continue;
                }
                if (have < 4) continue;
                if (!concyclic4(pts))
                    fail(errc::verification_failed, "iso-curve samples not concyclic");
                ++lines;
            }
        out["concyclic_lines_checked"] = lines;
    }
    return out;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             std::istream& in) {
    CLI::App app{"exact quaternionic toolkit for surfaces carrying two circles through each point",
                 "bicircle"};
    app.require_subcommand(1);

    std::string in_path = "-", out_path = "-", name, format = "json";
    std::string u_range = "-2:2", v_range = "-2:2";
    int grid_n = 5, precision = 12;
    long long seed = 1;
    int count = 10;
    bool check = false;
    std::string eval_u = "0", eval_v = "0";

    CLI::App* cmd_split = app.add_subcommand("split", "factor a bidegree-(1,1) polynomial");
    cmd_split->add_option("--in", in_path, "input polynomial JSON (- for stdin)");
    cmd_split->add_option("--out", out_path, "output path (- for stdout)");

    CLI::App* cmd_impl = app.add_subcommand("implicitize", "implicit quartic of a quotient surface");
    cmd_impl->add_option("--in", in_path, "JSON object with fields a, b");
    cmd_impl->add_option("--out", out_path, "output path");

    CLI::App* cmd_classify = app.add_subcommand("classify", "classify an ABC or quotient surface");
    cmd_classify->add_option("--in", in_path, "surface spec JSON");
    cmd_classify->add_option("--out", out_path, "output path");

    CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate a surface at one parameter pair");
    cmd_eval->add_option("--in", in_path, "surface spec JSON");
    cmd_eval->add_option("--u", eval_u, "u value, rational");
    cmd_eval->add_option("--v", eval_v, "v value, rational");
    cmd_eval->add_option("--out", out_path, "output path");

    CLI::App* cmd_sample = app.add_subcommand("sample", "sample a surface on a rational lattice");
    cmd_sample->add_option("--in", in_path, "surface spec JSON");
    cmd_sample->add_option("--grid", grid_n, "lattice size n (n x n)");
    cmd_sample->add_option("--u-range", u_range, "lo:hi");
    cmd_sample->add_option("--v-range", v_range, "lo:hi");
    cmd_sample->add_option("--format", format, "json | csv | obj");
    cmd_sample->add_option("--precision", precision, "decimal digits for obj export");
    cmd_sample->add_option("--out", out_path, "output path");

    CLI::App* cmd_gen = app.add_subcommand("gen-pyth", "generate certified Pythagorean 6-tuples");
    cmd_gen->add_option("--seed", seed, "PRNG seed, recorded in the output");
    cmd_gen->add_option("--count", count, "number of tuples");
    cmd_gen->add_option("--out", out_path, "output path (JSON lines)");

    CLI::App* cmd_verify = app.add_subcommand("verify-pyth", "verify a 6-tuple exactly");
    cmd_verify->add_option("--in", in_path, "tuple JSON (array of six polynomials)");
    cmd_verify->add_option("--out", out_path, "output path");

    CLI::App* cmd_examples = app.add_subcommand("examples", "list or emit built-in fixtures");
    cmd_examples->add_option("--name", name, "fixture name");
    cmd_examples->add_flag("--check", check, "run the fixture's verification pipeline");
    cmd_examples->add_option("--out", out_path, "output path");

    app.add_subcommand("selftest", "run the whole acceptance suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    if (cmd_split->parsed()) {
        SplitResult s = split_h11(qpoly_from_json(read_json(in_path, in)));
        Sink sink(out_path, out);
        sink.get() << split_to_json(s).dump(2) << "\n";
        return 0;
    }

    if (cmd_impl->parsed()) {
        Json j = read_json(in_path, in);
        if (!j.contains("a") || !j.contains("b"))
            fail(errc::io_error, "implicitize input needs fields a and b");
        ImplicitQuartic f = implicitize_quotient(qpoly_from_json(j["a"]), qpoly_from_json(j["b"]));
        Sink sink(out_path, out);
        sink.get() << implicit_to_json(f).dump(2) << "\n";
        return 0;
    }

    if (cmd_classify->parsed()) {
        Classification cls = classify(spec_from_json(read_json(in_path, in)));
        Sink sink(out_path, out);
        sink.get() << classification_to_json(cls).dump(2) << "\n";
        return 0;
    }

    if (cmd_eval->parsed()) {
        SurfaceSpec spec = spec_from_json(read_json(in_path, in));
        Quat p = eval_surface(spec, Rat::parse(eval_u), Rat::parse(eval_v));
        Sink sink(out_path, out);
        sink.get() << Json{{"point", quat_to_json(p)}}.dump(2) << "\n";
        return 0;
    }

    if (cmd_sample->parsed()) {
        if (grid_n < 2) {
            err << "--grid must be at least 2\n";
            return 1;
        }
        if (format != "json" && format != "csv" && format != "obj") {
            err << "--format must be json, csv, or obj\n";
            return 1;
        }
        SurfaceSpec spec = spec_from_json(read_json(in_path, in));
        auto [u_lo, u_hi] = parse_range(u_range);
        auto [v_lo, v_hi] = parse_range(v_range);
        Sink sink(out_path, out);
        if (format == "obj") {
            write_obj(sink.get(), spec, u_lo, u_hi, v_lo, v_hi, grid_n, precision);
        } else {
            SampleGrid grid = sample_grid(spec, u_lo, u_hi, v_lo, v_hi, grid_n);
            if (format == "csv") {
                write_csv(sink.get(), grid);
                if (!grid.poles.empty()) {
                    // sidecar report; the csv itself stays clean
                    Json poles = Json::array();
                    for (const auto& [u, v] : grid.poles)
                        poles.push_back(Json::array({u.to_string(), v.to_string()}));
                    err << Json{{"note", "skipped_poles"}, {"poles", poles}}.dump() << "\n";
                }
            } else {
                sink.get() << grid_to_json(grid).dump(2) << "\n";
            }
        }
        return 0;
    }

    if (cmd_gen->parsed()) {
        Rng rng(static_cast<uint64_t>(seed));
        Sink sink(out_path, out);
        for (int k = 0; k < count; ++k) {
            PythTuple t = gen_tuple(rand_pyth_seed(rng));
            sink.get() << Json{{"seed", seed}, {"index", k}, {"certified", true},
                               {"tuple", tuple_to_json(t)}}
                              .dump()
                       << "\n";
        }
        return 0;
    }

    if (cmd_verify->parsed()) {
        PythTuple t = tuple_from_json(read_json(in_path, in));
        TupleVerdict v = verify_tuple(t);
        if (!v.valid) {
            Json e{{"error",
                    Json{{"code", "IdentityFailure"},
                         {"message", "tuple fails X1^2+...+X5^2 = X6^2 or its bidegree bound"},
                         {"defect", rpoly_to_json(v.defect)}}}};
            err << e.dump(2) << "\n";
            return 2;
        }
        Sink sink(out_path, out);
        sink.get() << Json{{"valid", true}}.dump(2) << "\n";
        return 0;
    }

    if (cmd_examples->parsed()) {
        Sink sink(out_path, out);
        if (name.empty()) {
            Json list = Json::array();
            for (const NamedExample& e : builtin_examples())
                list.push_back(Json{{"name", e.name},
                                    {"description", e.description},
                                    {"kind", e.spec ? "surface" : "polynomial"}});
            sink.get() << list.dump(2) << "\n";
            return 0;
        }
        const NamedExample& ex = find_example(name);
        if (check) {
            sink.get() << check_example(ex).dump(2) << "\n";
        } else if (ex.spec) {
            sink.get() << spec_to_json(*ex.spec).dump(2) << "\n";
        } else {
            sink.get() << qpoly_to_json(*ex.poly).dump(2) << "\n";
        }
        return 0;
    }

    // selftest
    auto results = run_acceptance();
    bool all = true;
    for (const CriterionResult& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.index << ". " << r.name;
        if (!r.detail.empty()) out << "  (" << r.detail << ")";
        out << "\n";
        all = all && r.passed;
    }
    if (!all) {
        err << Json{{"error", Json{{"code", "VerificationFailed"},
                                   {"message", "acceptance suite reported failures"}}}}
                   .dump(2)
            << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err, std::cin);
    } catch (const error& e) {
        err << error_to_json(e).dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << Json{{"error", Json{{"code", "Internal"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 2;
    }
}

} // namespace bicircle
