#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <hyperloc/cli.hpp>

#include "json_io.hpp"

namespace hyperloc
{

namespace
{

using json_io::Json;
using json_io::to_json;

struct Options {
    std::string matrix_file;
    std::string chi;
    std::string chi2;
    std::string delta;
    std::string chamber_witness;
    std::string x;
    std::string y;
    std::string eval_file;
    std::string h;
    long m = 0;
    long radius = 6;
    long dunkl = -1;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    std::size_t fan_samples = 0;
    bool pretty = false;
    bool verdict = false;
    bool dims = false;
};

Json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::ParseError, "invalid JSON in '" + path + "': " + e.what());
    }
}

IntMatrix load_matrix(const Options &o)
{
    if (o.matrix_file.empty()) {
        throw Error(ErrorKind::ParseError, "--matrix is required");
    }
    return json_io::matrix_from(read_json_file(o.matrix_file));
}

Character need_chi(const std::string &text, const char *flag, std::size_t d)
{
    if (text.empty()) {
        throw Error(ErrorKind::ParseError, std::string(flag) + " is required");
    }
    Character chi = parse_param_list(text);
    if (chi.size() != d) {
        throw Error(ErrorKind::ShapeMismatch, std::string(flag) + " must have " + std::to_string(d) + " entries");
    }
    return chi;
}

RatVector need_rationals(const std::string &text, const char *flag, std::size_t d)
{
    if (text.empty()) {
        throw Error(ErrorKind::ParseError, std::string(flag) + " is required");
    }
    RatVector v = parse_rational_list(text);
    if (v.size() != d) {
        throw Error(ErrorKind::ShapeMismatch, std::string(flag) + " must have " + std::to_string(d) + " entries");
    }
    return v;
}

ParameterSpace make_space(const IntMatrix &a, const Options &o)
{
    ParameterSpace ps(a);
    ps.set_jobs(o.jobs);
    ps.set_radius(o.radius);
    return ps;
}

Json matrix_facts(const IntMatrix &a)
{
    Json j{{"matrix", to_json(a)}, {"d", a.rows()}, {"n", a.cols()}};
    j["unimodular"] = is_unimodular(a);
    j["minors_coprime"] = minors_coprime(a);
    const SmithForm s = smith_normal_form(a);
    j["smith_diagonal"] = to_json(s.diagonal());
    j["rank"] = s.rank;
    if (s.rank == a.rows()) {
        const KernelBasis b = kernel_basis(a);
        Json rows = Json::array();
        for (auto r : b.zero_rows()) {
            rows.push_back(r);
        }
        j["kernel"] = to_json(b.B);
        j["kernel_zero_rows"] = rows;
        j["kernel_has_zero_row"] = !b.zero_rows().empty();
    }
    return j;
}

Json cmd_lattice(const Options &o)
{
    const IntMatrix a = load_matrix(o);
    Json j = matrix_facts(a);
    Json minors = Json::array();
    for (const auto &m : maximal_minors(a)) {
        minors.push_back(to_json(m));
    }
    j["maximal_minors"] = minors;
    try {
        ActionMatrix checked(a);
        j["valid_action_matrix"] = true;
    } catch (const Error &e) {
        j["valid_action_matrix"] = false;
        j["invalid_reason"] = std::string(to_string(e.kind()));
    }
    if (!o.chi.empty()) {
        const Character chi = need_chi(o.chi, "--chi", a.rows());
        std::vector<std::size_t> all(a.cols());
        for (std::size_t i = 0; i < all.size(); ++i) {
            all[i] = i;
        }
        const auto rat = rational_span_witness(a, chi, all);
        j["in_rational_span"] = rat.has_value();
        if (rat) {
            j["rational_witness"] = to_json(*rat);
        }
        if (std::all_of(chi.begin(), chi.end(), [](const ParamScalar &x) { return x.is_rational(); })) {
            const auto z = integer_span_witness(a, chi, all);
            j["in_integer_span"] = z.has_value();
            if (z) {
                j["integer_witness"] = to_json(*z);
            }
        }
    }
    return j;
}

Json cmd_fan(const Options &o)
{
    const IntMatrix a = load_matrix(o);
    ActionMatrix checked(a);
    const WallArrangement w = wall_hyperplanes(a, FanSource::FanOnMomentFiber);
    Json cs = Json::array();
    for (const auto &c : chambers(w)) {
        cs.push_back(Json{{"signs", to_string(c.signs)}, {"witness", to_json(c.witness)}});
    }
    Json j{{"walls", json_io::walls_json(w)},
           {"walls_on_V", json_io::walls_json(wall_hyperplanes(a, FanSource::FanOnV))},
           {"chambers", cs},
           {"chamber_count", cs.size()}};
    if (!o.delta.empty()) {
        const RatVector delta = need_rationals(o.delta, "--delta", a.rows());
        j["delta"] = to_json(delta);
        j["chamber_of_delta"] = json_io::chamber_json(chamber_of(delta, w));
        j["generic"] = is_generic(delta, w);
        j["effective"] = effective(a, delta);
    }
    return j;
}

Json cmd_covectors(const Options &o)
{
    const IntMatrix a = load_matrix(o);
    ActionMatrix checked(a);
    Json list = Json::array();
    for (const auto &c : enumerate_covectors(a)) {
        list.push_back(json_io::covector_json(c));
    }
    return Json{{"covectors", list}, {"count", list.size()}};
}

Json cmd_qset(const Options &o)
{
    const IntMatrix a = load_matrix(o);
    ParameterSpace ps = make_space(a, o);
    const Character chi = need_chi(o.chi, "--chi", a.rows());
    Json j = json_io::qset_json(ps.q_set(chi));
    j["chi"] = to_json(chi);
    j["unimodular"] = ps.unimodular();
    return j;
}

Json cmd_arrow(const Options &o)
{
    const IntMatrix a = load_matrix(o);
    ParameterSpace ps = make_space(a, o);
    const Character chi = need_chi(o.chi, "--chi", a.rows());
    const Character chi2 = need_chi(o.chi2, "--chi2", a.rows());
    const bool arrow = ps.chi_arrow(chi, chi2);
    return Json{{"chi", to_json(chi)},
                {"chi2", to_json(chi2)},
                {"arrow", arrow},
                {"qset_chi", json_io::qset_json(ps.q_set(chi))},
                {"qset_chi2", json_io::qset_json(ps.q_set(chi2))}};
}

Json cmd_maximal(const Options &o)
{
    const IntMatrix a = load_matrix(o);
    ParameterSpace ps = make_space(a, o);
    const Character chi = need_chi(o.chi, "--chi", a.rows());
    Json j = json_io::maximality_json(ps.is_maximal(chi, o.radius));
    j["chi"] = to_json(chi);
    if (!j.contains("inconclusive")) {
        j["inconclusive"] = false;
    }
    return j;
}

Json cmd_shiftcone(const Options &o)
{
    const IntMatrix a = load_matrix(o);
    ParameterSpace ps = make_space(a, o);
    const Character chi = need_chi(o.chi, "--chi", a.rows());
    const RatVector w = need_rationals(o.chamber_witness, "--chamber-witness", a.rows());
    Json j = json_io::shift_cone_json(ps.shifting_cone(chi, w));
    j["chi"] = to_json(chi);
    return j;
}

Json weyl_report(const WeylElement &r)
{
    Json j{{"result", json_io::weyl_json(r)}, {"text", r.to_string()}};
    const auto ord = order(r);
    j["order"] = ord ? Json(ord->to_string()) : Json(nullptr);
    const FWeight w = f_weight(r);
    if (const auto *q = std::get_if<Rational>(&w)) {
        j["f_weight"] = q->to_string();
    } else {
        j["f_weight"] = std::holds_alternative<MixedWeight>(w) ? "Mixed" : "None";
    }
    return j;
}

Json cmd_weyl(const Options &o)
{
    if (o.eval_file.empty()) {
        throw Error(ErrorKind::ParseError, "--eval is required");
    }
    const Json expr = read_json_file(o.eval_file);
    return weyl_report(json_io::eval_weyl(expr.is_object() && expr.contains("expr") ? expr.at("expr") : expr));
}

Json cmd_flatness(const Options &o)
{
    return json_io::flatness_json(moment_ideal(load_matrix(o)));
}

Json cmd_semistable(const Options &o)
{
    const IntMatrix a = load_matrix(o);
    const CotangentPoint p{need_rationals(o.x, "--x", a.cols()), need_rationals(o.y, "--y", a.cols())};
    const RatVector delta = need_rationals(o.delta, "--delta", a.rows());
    const StabilityResult r = semistable_point(a, p, delta);
    Json j = json_io::stability_json(r);
    j["certificate_verified"] = verify_stability(a, p, delta, r);
    const auto subset = semistable_projection(a, p, delta);
    j["projection_semistable"] = subset.has_value();
    if (subset) {
        j["projection_subset"] = *subset;
    }
    if (o.fan_samples > 0) {
        std::mt19937_64 rng(o.seed);
        const FanEqualityReport rep = fan_equality_check(a, {delta}, o.fan_samples, rng);
        j["fan_check"] = Json{{"checked", rep.checked}, {"counterexamples", rep.counterexamples.size()}, {"seed", o.seed}};
    }
    return j;
}

Json cmd_cherednik(const Options &o)
{
    const CherednikParams p{o.m, parse_rational_list(o.h)};
    p.validate();
    const bool all = !o.verdict && !o.dims && o.dunkl < 0;
    Json j{{"m", p.m}, {"h", to_json(p.h)}, {"chi", to_json(chi_of_h(p))}};
    if (all || o.verdict) {
        j["verdict"] = json_io::localization_json(localization_verdict(p));
    }
    if (all || o.dims) {
        Json c = Json::array();
        for (long i = 0; i < p.m; ++i) {
            const auto v = simple_dim(p, i);
            c.push_back(v ? Json(*v) : Json("inf"));
        }
        j["c"] = c;
    }
    if (o.dunkl >= 0) {
        j["dunkl_eigenvalue"] = dunkl_ym_eigenvalue(p, o.dunkl).to_string();
        j["dunkl_r"] = o.dunkl;
    }
    return j;
}

Json cmd_analyze(const Options &o)
{
    const IntMatrix a = load_matrix(o);
    ActionMatrix checked(a);
    ParameterSpace ps = make_space(a, o);
    const Character chi = need_chi(o.chi, "--chi", a.rows());
    const RatVector delta = need_rationals(o.delta, "--delta", a.rows());

    Json j{{"matrix_facts", matrix_facts(a)}, {"chi", to_json(chi)}, {"delta", to_json(delta)}};
    const WallArrangement w = wall_hyperplanes(a, FanSource::FanOnMomentFiber);
    const ChamberResult cd = chamber_of(delta, w);
    const ChamberResult cchi = chamber_of(pr(chi), w);
    j["fan_facts"] = Json{{"walls", json_io::walls_json(w)},
                          {"chamber_of_delta", json_io::chamber_json(cd)},
                          {"chamber_of_pr_chi", json_io::chamber_json(cchi)}};
    const QSet &q = ps.q_set(chi);
    j["qset"] = json_io::qset_json(q);

    const bool unimodular = checked.unimodular();
    const bool generic = std::holds_alternative<Chamber>(cd);
    const bool same = generic && std::holds_alternative<Chamber>(cchi)
                      && std::get<Chamber>(cd).signs == std::get<Chamber>(cchi).signs;
    bool cone_ok = false;
    if (unimodular && same && !q.partial) {
        j["shift_cone"] = json_io::shift_cone_json(ps.shifting_cone(chi, delta));
        cone_ok = true;
    }
    j["flatness_certificate"] = json_io::flatness_json(moment_ideal(a));
    j["arrows_tested"] = Json{{"reflexive", !unimodular || q.partial ? Json(nullptr) : Json(ps.chi_arrow(chi, chi))}};
    const bool verdict = unimodular && generic && same && cone_ok;
    j["verdicts"] = Json{{"unimodular", unimodular},
                         {"delta_generic", generic},
                         {"pr_chi_in_chamber_of_delta", same},
                         {"qset_complete", !q.partial},
                         {"shift_cone_constructed", cone_ok},
                         {"hypotheses_satisfied", verdict ? "yes" : "no"}};
    j["verdict"] = verdict ? "yes" : "no";
    j["inconclusive"] = q.partial;
    return j;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Exact combinatorics of hypertoric parameter spaces", "hyperloc"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--matrix", o.matrix_file, "JSON file with the weight matrix (array of rows)");
    app.add_option("--chi", o.chi, "comma separated character, entries like 1/2 or 1/3+T");
    app.add_option("--delta", o.delta, "comma separated rational stability parameter");
    app.add_option("--radius", o.radius, "search radius for bounded searches")->check(CLI::PositiveNumber);
    app.add_option("--jobs", o.jobs, "worker threads for per-covector work")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "seed for randomized checks");
    app.add_flag("--pretty", o.pretty, "indent the JSON output");

    std::string chosen;
    auto sub = [&](const char *name, const char *help) {
        CLI::App *s = app.add_subcommand(name, help);
        s->callback([&chosen, name] { chosen = name; });
        return s;
    };
    sub("lattice", "minors, Smith form, kernel and lattice membership");
    sub("fan", "walls, chambers and the chamber of --delta");
    sub("covectors", "all covectors with witnesses");
    sub("qset", "covectors attached to --chi");
    sub("arrow", "decide chi -> chi2")->add_option("--chi2", o.chi2, "second character");
    sub("maximal", "bounded maximality search");
    sub("shiftcone", "integral shifting cone inside a chamber")
        ->add_option("--chamber-witness", o.chamber_witness, "a point of the open chamber");
    sub("weyl", "evaluate a star-product expression")->add_option("--eval", o.eval_file, "JSON expression file");
    sub("flatness", "normal form certificate for the moment map");
    CLI::App *semi = sub("semistable", "semistability of a point of T*V");
    semi->add_option("--x", o.x, "comma separated x coordinates");
    semi->add_option("--y", o.y, "comma separated y coordinates");
    semi->add_option("--fan-check", o.fan_samples, "random points for the fan equality check");
    CLI::App *ch = sub("cherednik", "cyclic Cherednik parameters");
    // --h would clash with the short help flag.
    ch->set_help_flag("--help", "Print this help message and exit");
    ch->add_option("--m", o.m, "order of the cyclic group")->required();
    ch->add_option("--h", o.h, "comma separated h_0..h_{m-1}")->required();
    ch->add_flag("--verdict", o.verdict, "localization verdict");
    ch->add_flag("--dims", o.dims, "dimensions c_i of the simple modules");
    ch->add_option("--dunkl", o.dunkl, "eigenvalue of the Dunkl operator on x^r");
    sub("analyze", "full pipeline for (A, chi, delta)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        Json report;
        if (chosen == "lattice") {
            report = cmd_lattice(o);
        } else if (chosen == "fan") {
            report = cmd_fan(o);
        } else if (chosen == "covectors") {
            report = cmd_covectors(o);
        } else if (chosen == "qset") {
            report = cmd_qset(o);
        } else if (chosen == "arrow") {
            report = cmd_arrow(o);
        } else if (chosen == "maximal") {
            report = cmd_maximal(o);
        } else if (chosen == "shiftcone") {
            report = cmd_shiftcone(o);
        } else if (chosen == "weyl") {
            report = cmd_weyl(o);
        } else if (chosen == "flatness") {
            report = cmd_flatness(o);
        } else if (chosen == "semistable") {
            report = cmd_semistable(o);
        } else if (chosen == "cherednik") {
            report = cmd_cherednik(o);
        } else {
            report = cmd_analyze(o);
        }
        out << (o.pretty ? report.dump(2) : report.dump()) << '\n';
        return exit_ok;
    } catch (const Error &e) {
        const Json j{{"error", Json{{"kind", std::string(to_string(e.kind())) }, {"message", e.what()}}}};
        out << (o.pretty ? j.dump(2) : j.dump()) << '\n';
        return exit_validation;
    }
}

} // namespace hyperloc
