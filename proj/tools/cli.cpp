#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "polyspace/case12.hpp"
#include "polyspace/case21.hpp"
#include "polyspace/case31.hpp"
#include "polyspace/harness.hpp"
#include "polyspace/json_io.hpp"
#include "polyspace/mapdeg.hpp"
#include "polyspace/numeric_roots.hpp"
#include "polyspace/stab.hpp"

namespace polyspace::cli {

namespace {

struct Options {
    std::string input;
    std::string format = "json";
    std::string case_tag;
    std::string T;
    std::string out_path;
    int d = 0, m = 0, n = 0;
    long trials = 0;
    std::uint64_t seed = 0;
    int generator = 0;
    int multiple = 1;
    bool witness = false;
};

std::string read_input(const Options& o, std::istream& in) {
    std::ostringstream buf;
    if (o.input.empty() || o.input == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(o.input);
        if (!f) throw InputError("input: cannot open '" + o.input + "'");
        buf << f.rdbuf();
    }
    return buf.str();
}

Json number15(double x) { return Json::parse(format_double(x)); }

Json complex15(std::complex<double> z) { return Json::array({number15(z.real()), number15(z.imag())}); }

void emit_scalar(const Options& o, std::ostream& out, const std::string& name, const Json& value) {
    if (o.format == "csv")
        out << name << "\n" << value.dump() << "\n";
    else
        out << value.dump() << "\n";
}

void emit_object(const Options& o, std::ostream& out, const Json& obj) {
    if (o.format == "csv") {
        std::string header, row;
        for (const auto& [k, v] : obj.items()) {
            header += (header.empty() ? "" : ",") + k;
            row += (row.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
        }
        out << header << "\n" << row << "\n";
    } else {
        out << obj.dump(2) << "\n";
    }
}

case31::Model31 model_from_json(const Json& j, const std::string& field) {
    if (j.is_object() && j.contains("model")) {
        const auto& mj = j["model"];
        if (!mj.is_array() || mj.size() != 3) throw InputError(field + ".model: expected [f1, f2, f3]");
        case31::Model31 m{qpoly_from_json(mj[0], field + ".model[0]"), qpoly_from_json(mj[1], field + ".model[1]"),
                          qpoly_from_json(mj[2], field + ".model[2]")};
        case31::validate(m);
        return m;
    }
    return case31::phi(tuple_from_json(j));
}

int run_member(const Options& o, std::istream& in, std::ostream& out) {
    const SystemTuple t = tuple_from_json(parse_json(read_input(o, in)));
    if (!o.witness) {
        emit_scalar(o, out, "member", is_member(t));
        return 0;
    }
    emit_object(o, out, Json{{"member", is_member(t)}, {"gcd", to_json(common_gcd(t))}, {"max_multiplicity", max_common_multiplicity(t)}});
    return 0;
}

int run_jet(const Options& o, std::istream& in, std::ostream& out) {
    const Json j = parse_json(read_input(o, in));
    if (!j.is_object() || !j.contains("f")) throw InputError("f: expected {\"f\": [...], \"n\": k}");
    int n = o.n;
    if (n == 0) {
        if (!j.contains("n") || !j["n"].is_number_integer()) throw InputError("n: expected an integer");
        n = j["n"].get<int>();
    }
    const GPoly f = gpoly_from_json(j["f"], "f");
    Json jets = Json::array();
    for (const auto& g : jet(f, n)) jets.push_back(to_json(g));
    out << Json{{"n", n}, {"jets", jets}}.dump(2) << "\n";
    return 0;
}

int run_degree(const Options& o, std::istream& in, std::ostream& out) {
    const auto t = tuple_from_json(parse_json(read_input(o, in)));
    const auto r = map_degree(t, o.seed);
    emit_object(o, out,
                Json{{"degree", r.degree}, {"raw_turns", number15(r.raw_turns)}, {"samples", r.samples},
                     {"radius", number15(r.radius)}, {"seed", o.seed}});
    return 0;
}

int run_rp1(const Options& o, std::istream& in, std::ostream& out) {
    const auto t = tuple_from_json(parse_json(read_input(o, in)));
    if (t.m() != 2) throw DomainError("rp1-degree: expected a pair of polynomials");
    const auto f = t.real_polys();
    emit_scalar(o, out, "j", rp1_degree(f[0], f[1]));
    return 0;
}

int run_rd(const Options& o, std::istream& in, std::ostream& out) {
    const auto m = model_from_json(parse_json(read_input(o, in)), "input");
    const auto rt = case31::r_tilde(m);
    Json exact = nullptr;
    if (const auto e = case31::r_tilde_exact(m)) exact = to_json(*e);
    emit_object(o, out,
                Json{{"r_d", complex15(rt / std::abs(rt))}, {"r_tilde", complex15(rt)}, {"r_tilde_exact", exact}});
    return 0;
}

int run_pi1(const Options& o, std::istream& in, std::ostream& out) {
    if (o.generator > 0) {
        const int d = o.generator, k = o.multiple;
        const auto w = case31::pi1_winding([d, k](double th) { return case31::i_d_loop(d, k * th); });
        emit_scalar(o, out, "winding", w.winding);
        return 0;
    }
    const Json j = parse_json(read_input(o, in));
    if (!j.is_object() || !j.contains("loop") || !j["loop"].is_array())
        throw InputError("loop: expected {\"loop\": [sample, ...]}");
    std::vector<case31::Model31> samples;
    for (std::size_t k = 0; k < j["loop"].size(); ++k)
        samples.push_back(model_from_json(j["loop"][k], "loop[" + std::to_string(k) + "]"));
    emit_scalar(o, out, "winding", case31::pi1_winding(samples).winding);
    return 0;
}

int run_census(const Options& o, std::ostream& out) {
    if (o.trials < 1) throw DomainError("census: --samples must be >= 1");
    std::map<int, long> counts;
    long rejected = 0;
    if (o.case_tag == "21") {
        const auto r = case21::census(o.d, o.trials, o.seed);
        counts = r.counts;
        rejected = r.rejected;
    } else if (o.case_tag == "12") {
        const auto r = case12::census(o.d, o.trials, o.seed);
        counts = r.counts;
        rejected = r.rejected;
    } else {
        throw DomainError("census: --case must be 21 or 12");
    }
    if (o.format == "csv") {
        out << "# case=" << o.case_tag << " d=" << o.d << " samples=" << o.trials << " seed=" << o.seed
            << " rejected=" << rejected << "\n";
        out << "j,count\n";
        for (const auto& [j, c] : counts) out << j << "," << c << "\n";
    } else {
        Json cj = Json::object();
        for (const auto& [j, c] : counts) cj[std::to_string(j)] = c;
        out << Json{{"case", o.case_tag}, {"d", o.d}, {"samples", o.trials}, {"seed", o.seed}, {"rejected", rejected},
                    {"counts", cj}}
                   .dump(2)
            << "\n";
    }
    return 0;
}

int run_electric(const Options& o, std::istream& in, std::ostream& out) {
    const Json j = parse_json(read_input(o, in));
    const auto pts = configuration_from_json(j.is_object() && j.contains("points") ? j["points"] : j, "points");
    for (const auto& p : pts)
        if (!(p.imag() > 0)) throw DomainError("electric-degree: points must lie in the upper half plane");
    emit_scalar(o, out, "degree", case12::electric_degree(pts).degree);
    return 0;
}

StabCase stab_case(const std::string& s) {
    if (s == "31") return StabCase::Case31;
    if (s == "12") return StabCase::Case12;
    if (s == "mult") return StabCase::Multiplicity;
    throw DomainError("stabilize: --case must be 31, 12 or mult");
}

int run_stabilize(const Options& o, std::istream& in, std::ostream& out) {
    const StabCase c = stab_case(o.case_tag);
    const auto t = tuple_from_json(parse_json(read_input(o, in)));
    Rational T;
    if (o.T.empty()) {
        T = default_T(c, t);
    } else {
        try {
            T = parse_rational(o.T);
        } catch (const DomainError& e) {
            throw InputError(std::string("--T: ") + e.what());
        }
    }
    const auto r = stabilize_report(c, t, T);
    auto label = [](const StabLabel& l) { return l.j ? Json(*l.j) : Json(nullptr); };
    out << Json{{"case", to_string(c)},
                {"T_used", to_json(r.T_used)},
                {"input_label", label(r.input_label)},
                {"output_label", label(r.output_label)},
                {"member_in", r.member_in},
                {"member_out", r.member_out},
                {"output", to_json(r.output)}}
               .dump(2)
        << "\n";
    return 0;
}

int run_sweep(const Options& o, std::ostream& out) {
    const auto c = harness::case_from_string(o.case_tag);
    const auto r = harness::invariant_sweep(c, o.d, o.trials, o.seed);
    const std::string text = harness::to_json(r).dump(2) + "\n";
    if (o.out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) throw InputError("--out: cannot write '" + o.out_path + "'");
        f << text;
        out << Json{{"failures", r.failures}, {"out", o.out_path}}.dump() << "\n";
    }
    return r.failures == 0 ? 0 : 1;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spaces of non-resultant polynomial systems"};
    app.require_subcommand(1);
    Options o;

    auto input = [&](CLI::App* s) { s->add_option("input", o.input, "JSON input file (default: stdin)"); };
    auto format = [&](CLI::App* s) {
        s->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };

    auto* member = app.add_subcommand("member", "Decide membership of a tuple");
    input(member);
    format(member);
    member->add_flag("--witness", o.witness, "also print the common gcd and its largest multiplicity");
    auto* jet_cmd = app.add_subcommand("jet", "Jet components (f, f + f', ..., f + f^(n-1))");
    input(jet_cmd);
    jet_cmd->add_option("--n", o.n, "multiplicity bound (overrides the input)");
    auto* degree = app.add_subcommand("degree", "Degree of the natural map");
    input(degree);
    format(degree);
    degree->add_option("--seed", o.seed, "seed for the generic combination");
    auto* rp1 = app.add_subcommand("rp1-degree", "Real-axis degree of a real pair");
    input(rp1);
    format(rp1);
    auto* rd = app.add_subcommand("r-d", "Splitting map of a real triple");
    input(rd);
    format(rd);
    auto* pi1 = app.add_subcommand("pi1", "Winding of a sampled loop of triples");
    input(pi1);
    format(pi1);
    pi1->add_option("--generator", o.generator, "use the generator loop of odd degree d instead of input");
    pi1->add_option("--multiple", o.multiple, "traverse the generator loop this many times");
    auto* census = app.add_subcommand("census", "Component census by random sampling");
    census->add_option("--case", o.case_tag, "21 or 12")->required()->check(CLI::IsMember({"21", "12"}));
    census->add_option("--d", o.d, "degree")->required();
    census->add_option("--samples,--trials", o.trials, "number of samples")->required();
    census->add_option("--seed", o.seed, "seed");
    census->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    auto* electric = app.add_subcommand("electric-degree", "Degree of the electric-field map of a configuration");
    input(electric);
    format(electric);
    auto* stabilize = app.add_subcommand("stabilize", "Stabilization report");
    input(stabilize);
    stabilize->add_option("--case", o.case_tag, "31, 12 or mult")->required()->check(CLI::IsMember({"31", "12", "mult"}));
    stabilize->add_option("--T", o.T, "point at infinity (default: just beyond the root bound)");
    auto* sweep = app.add_subcommand("sweep", "Seeded invariant sweep");
    sweep->add_option("--case", o.case_tag, "21, 31, 12, 13 or 22")
        ->required()
        ->check(CLI::IsMember({"21", "31", "12", "13", "22"}));
    sweep->add_option("--d", o.d, "degree")->required();
    sweep->add_option("--trials", o.trials, "number of trials")->required();
    sweep->add_option("--seed", o.seed, "seed");
    sweep->add_option("--out", o.out_path, "write the report here");
    auto* stab_dim = app.add_subcommand("stability-dim", "Stability dimension D(d; m, n)");
    stab_dim->add_option("--d", o.d)->required();
    stab_dim->add_option("--m", o.m)->required();
    stab_dim->add_option("--n", o.n)->required();
    format(stab_dim);

    bool census_csv_default = true;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        census_csv_default = census->count("--format") == 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*member) return run_member(o, in, out);
        if (*jet_cmd) return run_jet(o, in, out);
        if (*degree) return run_degree(o, in, out);
        if (*rp1) return run_rp1(o, in, out);
        if (*rd) return run_rd(o, in, out);
        if (*pi1) return run_pi1(o, in, out);
        if (*census) {
            if (census_csv_default) o.format = "csv";
            return run_census(o, out);
        }
        if (*electric) return run_electric(o, in, out);
        if (*stabilize) return run_stabilize(o, in, out);
        if (*sweep) return run_sweep(o, out);
        if (*stab_dim) {
            emit_scalar(o, out, "D", stability_dimension(o.d, o.m, o.n));
            return 0;
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace polyspace::cli
