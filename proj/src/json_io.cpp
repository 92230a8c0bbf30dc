#include "json_io.hpp"

namespace hyperloc::json_io
{

Json to_json(const Integer &z)
{
    if (z.fits_slong_p()) {
        return z.get_si();
    }
    return z.get_str();
}

Json to_json(const Rational &q)
{
    return q.to_string();
}

Json to_json(const ParamScalar &x)
{
    return x.to_string();
}

Json to_json(const IntVector &v)
{
    Json out = Json::array();
    for (const auto &z : v) {
        out.push_back(to_json(z));
    }
    return out;
}

Json to_json(const RatVector &v)
{
    Json out = Json::array();
    for (const auto &q : v) {
        out.push_back(to_json(q));
    }
    return out;
}

Json to_json(const ParamVector &v)
{
    Json out = Json::array();
    for (const auto &x : v) {
        out.push_back(to_json(x));
    }
    return out;
}

Json to_json(const IntMatrix &m)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out.push_back(to_json(m.row(i)));
    }
    return out;
}

Json to_json(const RatMatrix &m)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out.push_back(to_json(m.row(i)));
    }
    return out;
}

Integer integer_from(const Json &j)
{
    if (j.is_number_integer()) {
        return Integer(j.get<long>());
    }
    if (j.is_string()) {
        return parse_integer(j.get<std::string>());
    }
    throw Error(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

Rational rational_from(const Json &j)
{
    if (j.is_number_integer()) {
        return Rational(Integer(j.get<long>()));
    }
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    throw Error(ErrorKind::ParseError, "expected a rational (integer or string), got " + j.dump());
}

IntMatrix matrix_from(const Json &input)
{
    // Accepted shapes: [[...], ...], {"matrix": [[...]]} and
    // {"d": d, "n": n, "entries": [[...]]}.
    const bool object = input.is_object();
    const Json &j = object && input.contains("entries") ? input.at("entries")
                    : object && input.contains("matrix") ? input.at("matrix")
                                                         : input;
    if (!j.is_array() || j.empty()) {
        throw Error(ErrorKind::ParseError, "matrix must be a non-empty array of rows");
    }
    std::vector<IntVector> rows;
    for (const auto &row : j) {
        if (!row.is_array()) {
            throw Error(ErrorKind::ParseError, "matrix rows must be arrays");
        }
        IntVector r;
        for (const auto &x : row) {
            r.push_back(integer_from(x));
        }
        if (!rows.empty() && r.size() != rows.front().size()) {
            throw Error(ErrorKind::ShapeMismatch, "matrix rows have different lengths");
        }
        rows.push_back(std::move(r));
    }
    if (object && input.contains("d") && input.at("d") != Json(rows.size())) {
        throw Error(ErrorKind::ShapeMismatch, "\"d\" does not match the number of rows");
    }
    if (object && input.contains("n") && input.at("n") != Json(rows.front().size())) {
        throw Error(ErrorKind::ShapeMismatch, "\"n\" does not match the row length");
    }
    return IntMatrix::from_rows(rows);
}

Json covector_json(const Covector &c)
{
    return Json{{"signs", to_string(c.signs)}, {"witness", to_json(c.witness)}};
}

Json qset_json(const QSet &q)
{
    Json members = Json::array();
    Json witnesses = Json::object();
    for (const auto &s : q.members) {
        const std::string key = to_string(s);
        members.push_back(key);
        if (auto it = q.witnesses.find(key); it != q.witnesses.end()) {
            witnesses[key] = to_json(it->second);
        }
    }
    Json inconclusive = Json::array();
    for (const auto &s : q.inconclusive) {
        inconclusive.push_back(to_string(s));
    }
    return Json{{"covectors", members},
                {"witnesses", witnesses},
                {"partial", q.partial},
                {"inconclusive", !q.inconclusive.empty()},
                {"inconclusive_covectors", inconclusive}};
}

Json walls_json(const WallArrangement &w)
{
    Json normals = Json::array();
    for (const auto &n : w.normals) {
        normals.push_back(to_json(n));
    }
    return Json{{"normals", normals},
                {"source", w.source == FanSource::FanOnV ? "FanOnV" : "FanOnMomentFiber"},
                {"support_is_column_cone", w.support_is_column_cone}};
}

Json chamber_json(const ChamberResult &c)
{
    if (const auto *ch = std::get_if<Chamber>(&c)) {
        return Json{{"generic", true}, {"signs", to_string(ch->signs)}, {"witness", to_json(ch->witness)}};
    }
    Json idx = Json::array();
    for (auto i : std::get<OnWall>(c).indices) {
        idx.push_back(i);
    }
    return Json{{"generic", false}, {"on_walls", idx}};
}

Json stability_json(const StabilityResult &r)
{
    Json weights = Json::array();
    if (const auto *s = std::get_if<Semistable>(&r)) {
        for (const auto &w : s->weights) {
            weights.push_back(to_json(w));
        }
        return Json{{"semistable", true}, {"weights", weights}, {"combination", to_json(s->coeffs)}};
    }
    const auto &u = std::get<Unstable>(r);
    for (const auto &w : u.weights) {
        weights.push_back(to_json(w));
    }
    return Json{{"semistable", false}, {"weights", weights}, {"lambda", to_json(u.lambda)}};
}

Json shift_cone_json(const ShiftCone &sc)
{
    Json gens = Json::array();
    Json normals = Json::array();
    Json reverse = Json::array();
    for (const auto &u : sc.generators) {
        gens.push_back(to_json(u));
    }
    for (const auto &mu : sc.normals) {
        normals.push_back(to_json(mu));
    }
    for (bool b : sc.reverse_direction) {
        reverse.push_back(b);
    }
    return Json{{"generators", gens},
                {"N0", to_json(sc.n0)},
                {"N1", to_json(sc.n1)},
                {"p", to_json(sc.p)},
                {"delta", to_json(sc.delta)},
                {"box_constant", to_json(sc.box_constant)},
                {"chamber", to_string(sc.chamber)},
                {"chamber_normals", normals},
                {"validated_shift_to_chi", true},
                {"reverse_direction", reverse}};
}

Json maximality_json(const MaximalityResult &r)
{
    if (std::holds_alternative<Maximal>(r)) {
        return Json{{"result", "Maximal"}};
    }
    if (const auto *nm = std::get_if<NotMaximal>(&r)) {
        return Json{{"result", "NotMaximal"}, {"theta", to_json(nm->theta)}};
    }
    return Json{{"result", "UnknownWithin"}, {"radius", std::get<UnknownWithin>(r).radius}, {"inconclusive", true}};
}

Json weyl_json(const WeylElement &a)
{
    Json terms = Json::array();
    for (const auto &[m, c] : a.terms()) {
        terms.push_back(Json{{"h", m.hbar_exp().to_string()}, {"x", m.x}, {"xi", m.xi}, {"c", c.to_string()}});
    }
    return terms;
}

namespace
{

std::vector<unsigned> exponents(const Json &j)
{
    std::vector<unsigned> out;
    for (const auto &e : j) {
        const long v = e.get<long>();
        if (v < 0) {
            throw Error(ErrorKind::ParseError, "negative exponent");
        }
        out.push_back(static_cast<unsigned>(v));
    }
    return out;
}

WeylElement term_from(const Json &t)
{
    const Rational h = t.contains("h") ? rational_from(t.at("h")) : Rational(0);
    const Rational c = t.contains("c") ? rational_from(t.at("c")) : Rational(1);
    return WeylElement::term(c, h, exponents(t.at("x")), exponents(t.at("xi")));
}

const Json &args_of(const Json &node, std::size_t at_least)
{
    const Json &args = node.at("args");
    if (!args.is_array() || args.size() < at_least) {
        throw Error(ErrorKind::ParseError, "operator needs at least " + std::to_string(at_least) + " arguments");
    }
    return args;
}

} // namespace

WeylElement weyl_from(const Json &j)
{
    const Json &terms = j.is_object() && j.contains("terms") ? j.at("terms") : j;
    if (terms.is_object()) {
        return term_from(terms);
    }
    if (!terms.is_array() || terms.empty()) {
        throw Error(ErrorKind::ParseError, "a Weyl element needs at least one term (use c = 0 for zero)");
    }
    WeylElement out = term_from(terms.front());
    for (std::size_t k = 1; k < terms.size(); ++k) {
        out += term_from(terms[k]);
    }
    return out;
}

WeylElement eval_weyl(const Json &expr)
{
    try {
        if (!expr.is_object() || !expr.contains("op")) {
            return weyl_from(expr);
        }
        const std::string op = expr.at("op").get<std::string>();
        if (op == "mu") {
            return mu_W(matrix_from(expr.at("matrix")), expr.at("i").get<std::size_t>());
        }
        if (op == "symbol") {
            return symbol(eval_weyl(expr.at("arg")), rational_from(expr.at("m")));
        }
        if (op == "scale") {
            return eval_weyl(expr.at("arg")) * rational_from(expr.at("c"));
        }
        if (op == "commutator" || op == "poisson") {
            const Json &args = args_of(expr, 2);
            if (args.size() != 2) {
                throw Error(ErrorKind::ParseError, op + " takes exactly two arguments");
            }
            const WeylElement a = eval_weyl(args[0]), b = eval_weyl(args[1]);
            return op == "commutator" ? commutator(a, b) : poisson(a, b);
        }
        if (op == "star" || op == "add" || op == "sub" || op == "mul") {
            const Json &args = args_of(expr, 1);
            WeylElement acc = eval_weyl(args[0]);
            for (std::size_t k = 1; k < args.size(); ++k) {
                const WeylElement next = eval_weyl(args[k]);
                if (op == "star") {
                    acc = star(acc, next);
                } else if (op == "add") {
                    acc += next;
                } else if (op == "sub") {
                    acc -= next;
                } else {
                    acc = multiply(acc, next);
                }
            }
            return acc;
        }
        throw Error(ErrorKind::ParseError, "unknown operator '" + op + "'");
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("malformed expression: ") + e.what());
    }
}

Json flatness_json(const MomentIdeal &mi)
{
    const FlatnessCertificate &c = mi.certificate;
    Json gens = Json::array(), nf = Json::array(), init = Json::array();
    for (const auto &g : mi.generators) {
        gens.push_back(g.to_string());
    }
    for (const auto &g : c.normal_form) {
        nf.push_back(g.to_string());
    }
    for (const auto &g : c.initial_ideal) {
        init.push_back(g.to_string());
    }
    Json perm = Json::array();
    for (auto p : c.permutation) {
        perm.push_back(p);
    }
    Json zero_rows = Json::array();
    for (auto r : c.kernel_zero_rows) {
        zero_rows.push_back(r);
    }
    return Json{{"generators", gens},
                {"permutation", perm},
                {"row_ops", to_json(c.row_ops)},
                {"row_ops_unimodular", c.row_ops_unimodular},
                {"c", to_json(c.c)},
                {"normal_form", nf},
                {"normal_form_verified", c.normal_form_verified},
                {"initial_ideal", init},
                {"dim_fiber", c.dim_fiber},
                {"dim_quotient", c.dim_quotient},
                {"kernel", to_json(c.kernel)},
                {"kernel_zero_rows", zero_rows},
                {"kernel_has_zero_row", !c.kernel_zero_rows.empty()}};
}

Json localization_json(const LocalizationReport &r)
{
    Json sat = Json::array(), skipped = Json::array(), hit = Json::array();
    for (const auto &[i, j] : r.arrangement.satisfied) {
        sat.push_back(Json::array({i, j}));
    }
    for (const auto &[i, j] : r.arrangement.skipped) {
        skipped.push_back(Json::array({i, j}));
    }
    for (auto w : r.walls_hit) {
        hit.push_back(w);
    }
    return Json{{"chi", to_json(r.chi)},
                {"h_in_C", r.arrangement.member},
                {"satisfied_equations", sat},
                {"skipped_degenerate_equations", skipped},
                {"chi_on_wall", r.on_wall},
                {"walls_hit", hit},
                {"equivalence_holds", r.equivalence_holds}};
}

} // namespace hyperloc::json_io
