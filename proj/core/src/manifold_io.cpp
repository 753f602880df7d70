#include "rht/manifold_io.hpp"

#include "rht/error.hpp"

namespace rht {

namespace {

[[noreturn]] void field_error(const std::string& pointer, const std::string& msg)
{
    throw ParseError("field " + pointer + ": " + msg, -1, pointer);
}

const Json& require(const Json& doc, const std::string& pointer, const char* key)
{
    if (!doc.is_object())
        field_error(pointer.empty() ? "/" : pointer, "expected an object");
    auto it = doc.find(key);
    if (it == doc.end())
        field_error(pointer + "/" + key, "missing field");
    return *it;
}

int require_int(const Json& v, const std::string& pointer)
{
    if (!v.is_number_integer())
        field_error(pointer, "expected an integer");
    return v.get<int>();
}

}  // namespace

Json to_json(const ManifoldModel& m)
{
    Json p = Json::array();
    for (const auto& c : m.pontryagin())
        p.push_back(Json{{"index", c.index}, {"expression", m.model().to_string(c.cocycle)}});
    return Json{{"name", m.name()}, {"dimension", m.dimension()}, {"model", to_json(m.model())}, {"pontryagin", p}};
}

ManifoldModel manifold_from_json(const Json& doc)
{
    const Json& name = require(doc, "", "name");
    if (!name.is_string())
        field_error("/name", "expected a string");
    int dim = require_int(require(doc, "", "dimension"), "/dimension");
    const Json& model_doc = require(doc, "", "model");
    if (model_doc.is_object() && model_doc.value("kind", "finite") != "finite")
        field_error("/model/kind", "manifold models must be finite CDGAs");
    auto model = std::make_shared<const FiniteCdga>(finite_from_json(model_doc, "/model"));

    std::vector<PontryaginClass> classes;
    if (auto it = doc.find("pontryagin"); it != doc.end()) {
        if (!it->is_array())
            field_error("/pontryagin", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            std::string p = "/pontryagin/" + std::to_string(i);
            int index = require_int(require((*it)[i], p, "index"), p + "/index");
            const Json& expr = require((*it)[i], p, "expression");
            if (!expr.is_string())
                field_error(p + "/expression", "expected a string");
            try {
                classes.push_back({index, model->parse(expr.get<std::string>())});
            } catch (const Error& e) {
                field_error(p + "/expression", e.what());
            }
        }
    }
    try {
        return ManifoldModel(name.get<std::string>(), dim, model, std::move(classes));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        field_error("/", e.what());
    }
}

ManifoldModel parse_manifold(std::string_view text) { return manifold_from_json(parse_json_text(text)); }

std::string serialize(const ManifoldModel& m) { return to_json(m).dump(2) + "\n"; }

ManifoldModel load_manifold(const std::string& path) { return parse_manifold(read_file(path)); }

}  // namespace rht
