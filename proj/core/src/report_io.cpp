#include "rht/report_io.hpp"

#include "rht/error.hpp"

#include <limits>
#include <sstream>

namespace rht {

namespace {

[[noreturn]] void field_error(const std::string& pointer, const std::string& msg)
{
    throw ParseError("field " + pointer + ": " + msg, -1, pointer);
}

const Json& at(const Json& doc, const std::string& pointer, const char* key)
{
    if (!doc.is_object())
        field_error(pointer.empty() ? "/" : pointer, "expected an object");
    auto it = doc.find(key);
    if (it == doc.end())
        field_error(pointer + "/" + key, "missing field");
    return *it;
}

int get_int(const Json& doc, const std::string& pointer, const char* key)
{
    const Json& v = at(doc, pointer, key);
    if (!v.is_number_integer())
        field_error(pointer + "/" + key, "expected an integer");
    return v.get<int>();
}

std::string get_string(const Json& doc, const std::string& pointer, const char* key)
{
    const Json& v = at(doc, pointer, key);
    if (!v.is_string())
        field_error(pointer + "/" + key, "expected a string");
    return v.get<std::string>();
}

bool get_bool(const Json& doc, const std::string& pointer, const char* key)
{
    const Json& v = at(doc, pointer, key);
    if (!v.is_boolean())
        field_error(pointer + "/" + key, "expected true or false");
    return v.get<bool>();
}

template <class E>
E enum_from(const std::string& text, const std::string& pointer, std::initializer_list<E> values)
{
    for (E e : values)
        if (to_string(e) == text)
            return e;
    field_error(pointer, "unknown value \"" + text + "\"");
}

Json integers(const std::vector<Integer>& v)
{
    Json a = Json::array();
    for (const auto& z : v)
        a.push_back(integer_to_json(z));
    return a;
}

std::vector<Integer> integers_from(const Json& v, const std::string& pointer)
{
    if (!v.is_array())
        field_error(pointer, "expected an array");
    std::vector<Integer> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(integer_from_json(v[i], pointer + "/" + std::to_string(i)));
    return out;
}

}  // namespace

Json integer_to_json(const Integer& z)
{
    if (mpz_fits_slong_p(z.get_mpz_t()) && sizeof(long) >= 8)
        return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

Integer integer_from_json(const Json& v, const std::string& pointer)
{
    if (v.is_number_integer())
        return Integer(std::to_string(v.get<std::int64_t>()));
    if (v.is_string()) {
        Integer z;
        if (z.set_str(v.get<std::string>(), 10) == 0)
            return z;
    }
    field_error(pointer, "expected an integer");
}

Json to_json(const PoincareSeries& s) { return integers(s.coefficients()); }

Json to_json(const ImmersionReport& r)
{
    Json hyp = Json::array();
    for (const auto& h : r.hypotheses)
        hyp.push_back(Json{{"name", h.name}, {"statement", h.statement}, {"passed", h.passed}});
    Json doc{{"manifold", r.manifold}, {"dimension", r.dimension},  {"k", r.k},
             {"max_degree", r.max_degree}, {"hypotheses", hyp}, {"hypotheses_passed", r.hypotheses_passed}};
    doc["connectivity"] = to_string(r.connectivity);
    Json factors = Json::array();
    for (const auto& f : r.em_factors)
        factors.push_back(
            Json{{"kind", "em"}, {"degree", f.degree}, {"multiplicity", f.coefficient_dim}, {"status", "resolved"}});
    if (r.sphere) {
        Json s{{"kind", "sphere"}, {"degree", r.sphere->k}, {"multiplicity", 1}, {"status", to_string(r.sphere->status)}};
        s["model"] = r.sphere->model ? to_json(*r.sphere->model) : Json();
        s["rational"] = r.sphere->rational ? Json{{"numerator", integers(r.sphere->rational->numerator)},
                                                  {"denominator", r.sphere->rational->denominator}}
                                           : Json();
        factors.push_back(std::move(s));
    }
    doc["factors"] = factors;
    doc["series"] = r.series ? Json{{"scope", to_string(r.scope)}, {"coefficients", to_json(*r.series)}} : Json();
    if (r.growth) {
        Json g{{"kind", to_string(r.growth->kind)}};
        g["degree"] = r.growth->kind == Growth::Kind::Polynomial ? Json(r.growth->degree) : Json();
        doc["growth"] = g;
    } else {
        doc["growth"] = Json();
    }
    return doc;
}

ImmersionReport report_from_json(const Json& doc)
{
    ImmersionReport r;
    r.manifold = get_string(doc, "", "manifold");
    r.dimension = get_int(doc, "", "dimension");
    r.k = get_int(doc, "", "k");
    r.max_degree = get_int(doc, "", "max_degree");
    const Json& hyp = at(doc, "", "hypotheses");
    if (!hyp.is_array())
        field_error("/hypotheses", "expected an array");
    for (std::size_t i = 0; i < hyp.size(); ++i) {
        std::string p = "/hypotheses/" + std::to_string(i);
        r.hypotheses.push_back({get_string(hyp[i], p, "name"), get_string(hyp[i], p, "statement"),
                                get_bool(hyp[i], p, "passed")});
    }
    r.hypotheses_passed = get_bool(doc, "", "hypotheses_passed");
    r.connectivity = enum_from(get_string(doc, "", "connectivity"), "/connectivity",
                               {Connectivity::Connected, Connectivity::ComponentsIndexed});
    const Json& factors = at(doc, "", "factors");
    if (!factors.is_array())
        field_error("/factors", "expected an array");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::string p = "/factors/" + std::to_string(i);
        const Json& f = factors[i];
        std::string kind = get_string(f, p, "kind");
        if (kind == "em") {
            r.em_factors.push_back({static_cast<long>(get_int(f, p, "multiplicity")), get_int(f, p, "degree")});
        } else if (kind == "sphere") {
            SphereFactor s;
            s.k = get_int(f, p, "degree");
            s.status = enum_from(get_string(f, p, "status"), p + "/status",
                                 {SphereStatus::ResolvedNull, SphereStatus::Symbolic});
            if (const Json& m = at(f, p, "model"); !m.is_null()) {
                auto value = cdga_from_json(m, p + "/model");
                if (!std::holds_alternative<FreeCdga>(value))
                    field_error(p + "/model", "expected a free CDGA");
                s.model = std::get<FreeCdga>(std::move(value));
            }
            if (const Json& q = at(f, p, "rational"); !q.is_null()) {
                RationalForm form;
                form.numerator = integers_from(at(q, p + "/rational", "numerator"), p + "/rational/numerator");
                for (const auto& d : at(q, p + "/rational", "denominator"))
                    form.denominator.push_back(d.get<int>());
                s.rational = std::move(form);
            }
            r.sphere = std::move(s);
        } else {
            field_error(p + "/kind", "expected \"em\" or \"sphere\"");
        }
    }
    if (const Json& s = at(doc, "", "series"); !s.is_null()) {
        r.scope = enum_from(get_string(s, "/series", "scope"), "/series/scope", {SeriesScope::Total, SeriesScope::EmPart});
        auto c = integers_from(at(s, "/series", "coefficients"), "/series/coefficients");
        int cutoff = static_cast<int>(c.size()) - 1;
        r.series = PoincareSeries(std::move(c), cutoff);
    }
    if (const Json& g = at(doc, "", "growth"); !g.is_null()) {
        Growth gr;
        gr.kind = enum_from(get_string(g, "/growth", "kind"), "/growth/kind",
                            {Growth::Kind::Finite, Growth::Kind::Polynomial, Growth::Kind::Symbolic});
        if (gr.kind == Growth::Kind::Polynomial)
            gr.degree = get_int(g, "/growth", "degree");
        r.growth = gr;
    }
    return r;
}

ImmersionReport parse_report(std::string_view text) { return report_from_json(parse_json_text(text)); }

std::string serialize(const ImmersionReport& r) { return to_json(r).dump(2) + "\n"; }

std::string render_series(const PoincareSeries& s)
{
    std::ostringstream out;
    bool first = true;
    for (int n = 0; n <= s.cutoff(); ++n) {
        const Integer& c = s[static_cast<std::size_t>(n)];
        if (c == 0)
            continue;
        if (!first)
            out << " + ";
        first = false;
        if (n == 0 || c != 1)
            out << c.get_str();
        if (n > 0)
            out << (c != 1 ? "*" : "") << "t^" << n;
    }
    if (first)
        out << "0";
    out << " + O(t^" << s.cutoff() + 1 << ")";
    return out.str();
}

std::string render_table(const ImmersionReport& r)
{
    std::ostringstream out;
    out << "manifold      " << r.manifold << " (dim " << r.dimension << ")\n";
    out << "codimension   " << r.k << "\n";
    for (const auto& h : r.hypotheses)
        out << "hypothesis    " << (h.passed ? "[ok]   " : "[fail] ") << h.name << ": " << h.statement << "\n";
    if (!r.hypotheses_passed) {
        out << "result        none: hypotheses not satisfied\n";
        return out.str();
    }
    out << "connectivity  " << to_string(r.connectivity) << "\n";
    for (const auto& f : r.em_factors) {
        out << "factor        K(Q";
        if (f.coefficient_dim > 1)
            out << "^" << f.coefficient_dim;
        out << ", " << f.degree << ")\n";
    }
    if (r.sphere)
        out << "factor        Map(M, S^" << r.sphere->k << ")  " << to_string(r.sphere->status) << "\n";
    if (r.series) {
        out << "series        (" << to_string(r.scope) << ", degrees 0.." << r.series->cutoff() << ")\n";
        out << "  betti       ";
        for (int n = 0; n <= r.series->cutoff(); ++n)
            out << (n ? " " : "") << (*r.series)[static_cast<std::size_t>(n)].get_str();
        out << "\n";
    }
    if (r.growth) {
        out << "growth        " << to_string(r.growth->kind);
        if (r.growth->kind == Growth::Kind::Polynomial)
            out << " (degree " << r.growth->degree << ")";
        out << "\n";
    }
    return out.str();
}

}  // namespace rht
