#include "bicircle/json_io.hpp"

namespace bicircle {

namespace {

[[noreturn]] void bad(const std::string& what) {
    fail(errc::io_error, "malformed JSON: " + what);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

} // namespace

Json rat_to_json(const Rat& r) { return r.to_string(); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) bad("rational must be a string or integer");
    return Rat::parse(j.get<std::string>());
}

Json quat_to_json(const Quat& q) {
    return Json::array({q.re.to_string(), q.x.to_string(), q.y.to_string(), q.z.to_string()});
}

Quat quat_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) bad("quaternion must be an array of four rationals");
    return Quat(rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2]), rat_from_json(j[3]));
}

Json qpoly_to_json(const QPoly2& p) {
    Json out = Json::array();
    for (const auto& [m, c] : p.terms())
        out.push_back(Json{{"du", m.du}, {"dv", m.dv}, {"coef", quat_to_json(c)}});
    return out;
}

QPoly2 qpoly_from_json(const Json& j) {
    if (!j.is_array()) bad("quaternion polynomial must be a term list");
    QPoly2 p;
    for (const auto& term : j) {
        int du = field(term, "du").get<int>();
        int dv = field(term, "dv").get<int>();
        if (du < 0 || dv < 0) bad("negative exponent");
        p.set_coef(du, dv, p.coef(du, dv) + quat_from_json(field(term, "coef")));
    }
    return p;
}

Json rpoly_to_json(const RPolyN& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(Json{{"exps", e}, {"coef", c.to_string()}});
    return out;
}

RPolyN rpoly_from_json(const Json& j, int nvars) {
    if (!j.is_array()) bad("real polynomial must be a term list");
    RPolyN p(nvars);
    for (const auto& term : j) {
        auto exps = field(term, "exps").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != nvars) bad("exponent vector length mismatch");
        for (int e : exps)
            if (e < 0) bad("negative exponent");
        p.set_coef(exps, p.coef(exps) + rat_from_json(field(term, "coef")));
    }
    return p;
}

Json curve_to_json(const MoebiusCurve& m) {
    return Json{{"a", quat_to_json(m.a)},
                {"b", quat_to_json(m.b)},
                {"c", quat_to_json(m.c)},
                {"d", quat_to_json(m.d)},
                {"side", m.side == CurveSide::left ? "left" : "right"}};
}

MoebiusCurve curve_from_json(const Json& j) {
    MoebiusCurve m;
    m.a = quat_from_json(field(j, "a"));
    m.b = quat_from_json(field(j, "b"));
    m.c = quat_from_json(field(j, "c"));
    m.d = quat_from_json(field(j, "d"));
    std::string side = field(j, "side").get<std::string>();
    if (side == "left")
        m.side = CurveSide::left;
    else if (side == "right")
        m.side = CurveSide::right;
    else
        bad("side must be 'left' or 'right'");
    if (m.a.is_zero() && m.b.is_zero() && m.c.is_zero() && m.d.is_zero())
        fail(errc::invalid_curve, "all four curve coefficients are zero");
    return m;
}

Json spec_to_json(const SurfaceSpec& spec) {
    if (const auto* abc = std::get_if<ABCForm>(&spec))
        return Json{{"kind", "abc"},
                    {"a", qpoly_to_json(abc->a)},
                    {"b", qpoly_to_json(abc->b)},
                    {"c", qpoly_to_json(abc->c)}};
    if (const auto* q = std::get_if<QuotientForm>(&spec))
        return Json{{"kind", "quotient"}, {"a", qpoly_to_json(q->a)}, {"b", qpoly_to_json(q->b)}};
    if (const auto* e = std::get_if<EuclideanTranslationalForm>(&spec))
        return Json{{"kind", "euclidean_translational"},
                    {"alpha", curve_to_json(e->alpha)},
                    {"beta", curve_to_json(e->beta)}};
    if (const auto* c = std::get_if<CliffordTranslationalForm>(&spec))
        return Json{{"kind", "clifford_translational"},
                    {"alpha", curve_to_json(c->alpha)},
                    {"beta", curve_to_json(c->beta)},
                    {"project", c->project}};
    const auto& qd = std::get<QuasidetForm>(spec);
    Json rows = Json::array();
    for (const auto& row : qd.m) {
        Json r = Json::array();
        for (const auto& entry : row) r.push_back(qpoly_to_json(entry));
        rows.push_back(r);
    }
    return Json{{"kind", "quasidet"}, {"m", rows}};
}

SurfaceSpec spec_from_json(const Json& j) {
    std::string kind = field(j, "kind").get<std::string>();
    SurfaceSpec spec;
    if (kind == "abc") {
        spec = ABCForm{qpoly_from_json(field(j, "a")), qpoly_from_json(field(j, "b")),
                       qpoly_from_json(field(j, "c"))};
    } else if (kind == "quotient") {
        spec = QuotientForm{qpoly_from_json(field(j, "a")), qpoly_from_json(field(j, "b"))};
    } else if (kind == "euclidean_translational") {
        spec = EuclideanTranslationalForm{curve_from_json(field(j, "alpha")),
                                          curve_from_json(field(j, "beta"))};
    } else if (kind == "clifford_translational") {
        CliffordTranslationalForm c{curve_from_json(field(j, "alpha")),
                                    curve_from_json(field(j, "beta")), false};
        if (j.contains("project")) c.project = j.at("project").get<bool>();
        spec = c;
    } else if (kind == "quasidet") {
        const Json& rows = field(j, "m");
        if (!rows.is_array() || rows.size() != 3) bad("quasidet matrix must have three rows");
        QuasidetForm qd;
        for (size_t r = 0; r < 3; ++r) {
            if (!rows[r].is_array() || rows[r].size() != 3) bad("quasidet rows need three entries");
            for (size_t c = 0; c < 3; ++c) qd.m[r][c] = qpoly_from_json(rows[r][c]);
        }
        spec = qd;
    } else {
        bad("unknown surface kind '" + kind + "'");
    }
    validate_spec(spec);
    return spec;
}

Json implicit_to_json(const ImplicitQuartic& f) {
    return Json{{"vars", Json::array({"x", "y", "z", "t"})}, {"terms", rpoly_to_json(f.f)}};
}

ImplicitQuartic implicit_from_json(const Json& j) {
    return ImplicitQuartic{rpoly_from_json(field(j, "terms"), 4)};
}

Json split_to_json(const SplitResult& s) {
    return Json{{"order", s.order == SplitOrder::d_then_e ? "d_then_e" : "e_then_d"},
                {"left", qpoly_to_json(s.left)},
                {"right", qpoly_to_json(s.right)},
                {"witness_q", quat_to_json(s.witness_q)},
                {"witness_p", quat_to_json(s.witness_p)}};
}

Json tuple_to_json(const PythTuple& t) {
    Json out = Json::array();
    for (const auto& p : t.x) out.push_back(rpoly_to_json(p));
    return out;
}

PythTuple tuple_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 6) bad("tuple must be an array of six polynomials");
    PythTuple t;
    for (size_t k = 0; k < 6; ++k) t.x[k] = rpoly_from_json(j[k], 2);
    return t;
}

namespace {

Json darboux_to_json(const DarbouxForm& d) {
    return Json{{"a", d.a.to_string()},
                {"linear", rpoly_to_json(d.linear)},
                {"quadratic", rpoly_to_json(d.quadratic)}};
}

} // namespace

Json classification_to_json(const Classification& c) {
    if (const auto* d = std::get_if<DarbouxCyclideClass>(&c))
        return Json{{"variant", "darboux_cyclide"},
                    {"implicit", rpoly_to_json(d->implicit)},
                    {"darboux", darboux_to_json(d->form)}};
    if (const auto* q = std::get_if<QuadricInS3Class>(&c))
        return Json{{"variant", "quadric_in_s3"},
                    {"implicit_projected", rpoly_to_json(q->implicit_projected)},
                    {"darboux", darboux_to_json(q->form)}};
    if (const auto* e = std::get_if<EuclideanTranslationalClass>(&c))
        return Json{{"variant", "euclidean_translational"},
                    {"alpha", curve_to_json(e->alpha)},
                    {"beta", curve_to_json(e->beta)}};
    if (const auto* cl = std::get_if<CliffordTranslationalClass>(&c))
        return Json{{"variant", "clifford_translational"},
                    {"alpha", curve_to_json(cl->alpha)},
                    {"beta", curve_to_json(cl->beta)},
                    {"norm_ratio", cl->norm_ratio.to_string()},
                    {"left_var", cl->left_var == FixedVar::v ? "v" : "u"}};
    const auto& p = std::get<PlanarClass>(c);
    return Json{{"variant", "planar"},
                {"normal", quat_to_json(p.normal)},
                {"offset", p.offset.to_string()}};
}

Json error_to_json(const error& e) {
    return Json{{"error", Json{{"code", e.code_name()}, {"message", e.what()}}}};
}

} // namespace bicircle
