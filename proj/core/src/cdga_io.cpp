#include "rht/cdga_io.hpp"

#include "rht/error.hpp"

#include <fstream>
#include <sstream>

namespace rht {

namespace {

[[noreturn]] void field_error(const std::string& pointer, const std::string& msg)
{
    throw ParseError("field " + (pointer.empty() ? std::string("/") : pointer) + ": " + msg, -1, pointer);
}

const Json& require(const Json& doc, const std::string& pointer, const char* key)
{
    if (!doc.is_object())
        field_error(pointer, "expected an object");
    auto it = doc.find(key);
    if (it == doc.end())
        field_error(pointer + "/" + key, "missing field");
    return *it;
}

std::string require_string(const Json& v, const std::string& pointer)
{
    if (!v.is_string())
        field_error(pointer, "expected a string");
    return v.get<std::string>();
}

std::vector<Generator> named_degrees(const Json& list, const std::string& pointer)
{
    if (!list.is_array())
        field_error(pointer, "expected an array");
    std::vector<Generator> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        std::string p = pointer + "/" + std::to_string(i);
        const Json& name = require(list[i], p, "name");
        const Json& deg = require(list[i], p, "degree");
        if (!deg.is_number_integer())
            field_error(p + "/degree", "expected an integer");
        out.push_back({require_string(name, p + "/name"), deg.get<int>()});
    }
    return out;
}

Json named_degrees_json(const std::vector<Generator>& gens)
{
    Json arr = Json::array();
    for (const auto& g : gens)
        arr.push_back(Json{{"name", g.name}, {"degree", g.degree}});
    return arr;
}

std::vector<std::pair<std::string, std::string>> differential_strings(const Json& doc, const std::string& pointer)
{
    std::vector<std::pair<std::string, std::string>> out;
    auto it = doc.find("differential");
    if (it == doc.end())
        return out;
    if (!it->is_object())
        field_error(pointer + "/differential", "expected an object");
    for (auto kv = it->begin(); kv != it->end(); ++kv)
        out.emplace_back(kv.key(), require_string(kv.value(), pointer + "/differential/" + kv.key()));
    return out;
}

template <class F>
auto with_field(const std::string& pointer, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError& e) {
        if (!e.field().empty())
            throw;
        field_error(pointer, e.what());
    } catch (const Error& e) {
        field_error(pointer, e.what());
    }
}

// Parses every differential entry up front so syntax and name errors point at it.
void check_expressions(const std::vector<std::pair<std::string, std::string>>& diff,
                       const std::vector<Generator>& names, const std::string& pointer)
{
    Context ctx;
    try {
        ctx = make_context(names);
    } catch (const Error&) {
        return;  // name clashes are reported by the model constructor
    }
    for (const auto& [name, expr] : diff)
        with_field(pointer + "/differential/" + name, [&] { return parse_element(expr, ctx); });
}

}  // namespace

Json to_json(const FreeCdga& c)
{
    Json d = Json::object();
    for (std::size_t i = 0; i < c.generators().size(); ++i)
        if (!c.d(i).is_zero())
            d[c.generators()[i].name] = to_string(c.d(i));
    return Json{{"kind", "free"}, {"label", c.label()}, {"generators", named_degrees_json(c.generators().generators())},
                {"differential", d}};
}

Json to_json(const FiniteCdga& c)
{
    Json d = Json::object();
    for (const auto& [i, v] : c.differential_list())
        d[c.basis(i).name] = c.to_string(v);
    Json products = Json::array();
    for (const auto& p : c.product_list())
        products.push_back(Json::array({c.basis(p.left).name, c.basis(p.right).name, c.to_string(p.value)}));
    return Json{{"kind", "finite"},
                {"label", c.label()},
                {"basis", named_degrees_json(c.names()->generators())},
                {"differential", d},
                {"products", products}};
}

Json to_json(const RelativeModel& c)
{
    Json d = Json::object();
    for (std::size_t i = 0; i < c.fiber()->size(); ++i)
        if (!c.d(i).is_zero())
            d[(*c.fiber())[i].name] = c.to_string(c.d(i));
    return Json{{"kind", "relative"},
                {"label", c.label()},
                {"base", to_json(c.base())},
                {"fiber", named_degrees_json(c.fiber()->generators())},
                {"differential", d}};
}

Json to_json(const CdgaValue& c)
{
    return std::visit([](const auto& v) { return to_json(v); }, c);
}

FiniteCdga finite_from_json(const Json& doc, const std::string& pointer)
{
    std::string label = doc.contains("label") ? require_string(doc["label"], pointer + "/label") : "";
    auto basis_gens = named_degrees(require(doc, pointer, "basis"), pointer + "/basis");
    std::vector<BasisElement> basis;
    for (const auto& g : basis_gens)
        basis.push_back({g.name, g.degree});
    // A scratch algebra with zero products resolves names to indices.
    FiniteCdga names = with_field(pointer + "/basis", [&] { return FiniteCdga(label, basis, {}, {}); });
    auto linear = [&](const std::string& text, const std::string& p) {
        return with_field(p, [&] {
            Element e = parse_element(text, names.names());
            BasisVector v;
            for (const auto& [m, c] : e.terms()) {
                if (m.is_unit()) {
                    v[0] += c;
                    continue;
                }
                auto lead = m.leading_index();
                int total = 0;
                for (int x : m.exponents())
                    total += x;
                if (total != 1)
                    throw ParseError("products must be linear combinations of basis elements");
                v[*lead + 1] += c;
            }
            return v;
        });
    };
    std::vector<FiniteCdga::Product> products;
    if (auto it = doc.find("products"); it != doc.end()) {
        if (!it->is_array())
            field_error(pointer + "/products", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            std::string p = pointer + "/products/" + std::to_string(i);
            const Json& row = (*it)[i];
            if (!row.is_array() || row.size() != 3)
                field_error(p, "expected [left, right, expression]");
            std::string l = require_string(row[0], p + "/0"), r = require_string(row[1], p + "/1");
            auto li = names.names()->find(l), ri = names.names()->find(r);
            if (!li)
                field_error(p + "/0", "unknown basis element '" + l + "'");
            if (!ri)
                field_error(p + "/1", "unknown basis element '" + r + "'");
            products.push_back({*li + 1, *ri + 1, linear(require_string(row[2], p + "/2"), p + "/2")});
        }
    }
    std::vector<std::pair<std::size_t, BasisVector>> diff;
    for (const auto& [name, expr] : differential_strings(doc, pointer)) {
        auto idx = names.names()->find(name);
        if (!idx)
            field_error(pointer + "/differential/" + name, "unknown basis element");
        diff.emplace_back(*idx + 1, linear(expr, pointer + "/differential/" + name));
    }
    return with_field(pointer, [&] { return FiniteCdga(label, basis, products, diff); });
}

CdgaValue cdga_from_json(const Json& doc, const std::string& pointer)
{
    std::string kind = require_string(require(doc, pointer, "kind"), pointer + "/kind");
    std::string label = doc.contains("label") ? require_string(doc["label"], pointer + "/label") : "";
    if (kind == "free") {
        auto gens = named_degrees(require(doc, pointer, "generators"), pointer + "/generators");
        auto diff = differential_strings(doc, pointer);
        check_expressions(diff, gens, pointer);
        return with_field(pointer, [&] { return FreeCdga::from_strings(label, gens, diff); });
    }
    if (kind == "finite")
        return finite_from_json(doc, pointer);
    if (kind == "relative") {
        auto base = std::make_shared<const FiniteCdga>(finite_from_json(require(doc, pointer, "base"), pointer + "/base"));
        auto gens = named_degrees(require(doc, pointer, "fiber"), pointer + "/fiber");
        auto diff = differential_strings(doc, pointer);
        auto names = base->names()->generators();
        names.insert(names.end(), gens.begin(), gens.end());
        check_expressions(diff, names, pointer);
        return with_field(pointer, [&] { return RelativeModel::from_strings(label, base, gens, diff); });
    }
    field_error(pointer + "/kind", "expected \"free\", \"finite\" or \"relative\"");
}

Json parse_json_text(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        long byte = static_cast<long>(e.byte);
        long line = 1, col = 1;
        for (long i = 0; i + 1 < byte && i < static_cast<long>(text.size()); ++i) {
            if (text[static_cast<std::size_t>(i)] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": invalid JSON", byte);
    }
}

CdgaValue parse_cdga(std::string_view text) { return cdga_from_json(parse_json_text(text)); }

std::string serialize(const CdgaValue& c) { return to_json(c).dump(2) + "\n"; }

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace rht
