#include "ksadist/io.hpp"

namespace ksadist {

namespace {

int parse_dimension(const Json& j) {
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw InputError("missing integer 'dimension'");
    int dim = j["dimension"].get<int>();
    if (dim <= 0)
        throw InputError("'dimension' must be positive");
    return dim;
}

std::string parse_field(const Json& j) {
    std::string field = j.value("field", std::string("cyclotomic3"));
    if (field != "cyclotomic3" && field != "float")
        throw InputError("unknown field '" + field + "' (expected cyclotomic3 or float)");
    return field;
}

template <typename S>
StateVector<S> parse_vector(const Json& jv, int dim, const std::string& id) {
    if (!jv.is_array())
        throw InputError("vector of '" + id + "' must be an array of scalar strings");
    if (static_cast<int>(jv.size()) != dim)
        throw InputError("vector '" + id + "' has " + std::to_string(jv.size()) +
                         " entries, expected " + std::to_string(dim));
    std::vector<S> entries;
    entries.reserve(jv.size());
    for (const auto& e : jv) {
        if (!e.is_string())
            throw InputError("entries of '" + id + "' must be scalar strings");
        entries.push_back(scalar_traits<S>::parse(e.get<std::string>()));
    }
    return StateVector<S>(id, std::move(entries));
}

template <typename S> Pool<S> parse_pool_typed(const Json& j) {
    int dim = parse_dimension(j);
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw InputError("missing non-empty 'vertices' array");
    Pool<S> pool(dim);
    for (const auto& jv : j["vertices"]) {
        if (!jv.contains("id") || !jv["id"].is_string() || !jv.contains("vector"))
            throw InputError("each vertex needs an 'id' string and a 'vector'");
        std::string id = jv["id"].get<std::string>();
        pool.push(parse_vector<S>(jv["vector"], dim, id));
    }
    return pool;
}

template <typename S> Scenario<S> parse_scenario_typed(const Json& j) {
    Pool<S> pool = parse_pool_typed<S>(j);
    if (!j.contains("contexts"))
        return enumerate_contexts(pool);
    Scenario<S> sc;
    sc.dim = pool.dim();
    sc.vertices = pool.vectors();
    for (const auto& jc : j["contexts"]) {
        if (!jc.is_array())
            throw InputError("'contexts' must be arrays of vertex ids");
        std::vector<int> ctx;
        for (const auto& je : jc) {
            if (!je.is_string())
                throw InputError("context members must be vertex ids");
            auto idx = pool.find_id(je.get<std::string>());
            if (!idx)
                throw InputError("context references unknown id '" + je.get<std::string>() +
                                 "'");
            ctx.push_back(*idx);
        }
        std::sort(ctx.begin(), ctx.end());
        if (std::adjacent_find(ctx.begin(), ctx.end()) != ctx.end())
            throw InputError("context repeats a vertex");
        if (static_cast<int>(ctx.size()) != sc.dim)
            throw InputError("contexts must have exactly " + std::to_string(sc.dim) +
                             " members");
        for (std::size_t a = 0; a < ctx.size(); ++a)
            for (std::size_t b = a + 1; b < ctx.size(); ++b)
                if (!orthogonal(sc.vertices[ctx[a]], sc.vertices[ctx[b]]))
                    throw InputError("context members '" + sc.vertices[ctx[a]].id + "' and '" +
                                     sc.vertices[ctx[b]].id + "' are not orthogonal");
        sc.contexts.push_back(std::move(ctx));
    }
    return sc;
}

} // namespace

AnyScenario parse_scenario(const Json& j) {
    if (parse_field(j) == "cyclotomic3")
        return parse_scenario_typed<Cyclotomic>(j);
    return parse_scenario_typed<FloatComplex>(j);
}

AnyPool parse_pool(const Json& j) {
    if (parse_field(j) == "cyclotomic3")
        return parse_pool_typed<Cyclotomic>(j);
    return parse_pool_typed<FloatComplex>(j);
}

std::string field_of(const AnyPool& pool) {
    return std::holds_alternative<Pool<Cyclotomic>>(pool) ? "cyclotomic3" : "float";
}

std::string field_of(const AnyScenario& sc) {
    return std::holds_alternative<Scenario<Cyclotomic>>(sc) ? "cyclotomic3" : "float";
}

template <typename S> Pvm<S> parse_pvm(const Json& j, const Pool<S>& pool) {
    int dim = parse_dimension(j);
    if (dim != pool.dim())
        throw InputError("PVM dimension does not match the pool");
    if (j.contains("field") && parse_field(j) != scalar_traits<S>::field_name)
        throw InputError("PVM field does not match the pool backend");
    if (!j.contains("elements") || !j["elements"].is_array() || j["elements"].empty())
        throw InputError("missing non-empty 'elements' array");
    Pvm<S> pvm;
    pvm.dim = dim;
    int anon = 0;
    for (const auto& je : j["elements"]) {
        if (!je.is_array() || je.empty())
            throw InputError("each PVM element is a non-empty array of vectors");
        PvmElement<S> element;
        for (const auto& jv : je) {
            if (jv.is_string()) {
                auto idx = pool.find_id(jv.get<std::string>());
                if (!idx)
                    throw InputError("PVM references unknown id '" + jv.get<std::string>() +
                                     "'");
                element.spanning.push_back(pool[*idx]);
            } else if (jv.is_array()) {
                element.spanning.push_back(
                    parse_vector<S>(jv, dim, "pvm" + std::to_string(anon++)));
            } else if (jv.is_object() && jv.contains("vector")) {
                std::string id = jv.value("id", "pvm" + std::to_string(anon++));
                element.spanning.push_back(parse_vector<S>(jv["vector"], dim, id));
            } else {
                throw InputError("PVM vectors must be ids, arrays, or {id, vector} objects");
            }
        }
        pvm.elements.push_back(std::move(element));
    }
    return pvm;
}

template <typename S> Json to_json(const Pool<S>& pool) {
    Json j;
    j["dimension"] = pool.dim();
    j["field"] = scalar_traits<S>::field_name;
    j["vertices"] = Json::array();
    for (const auto& v : pool.vectors()) {
        Json e;
        e["id"] = v.id;
        e["vector"] = Json::array();
        for (const auto& s : v.entries)
            e["vector"].push_back(to_string(s));
        j["vertices"].push_back(std::move(e));
    }
    return j;
}

template <typename S> Json to_json(const Scenario<S>& sc) {
    Pool<S> pool(sc.dim);
    for (const auto& v : sc.vertices)
        pool.push(v);
    Json j = to_json(pool);
    j["contexts"] = Json::array();
    for (const auto& ctx : sc.contexts) {
        Json jc = Json::array();
        for (int v : ctx)
            jc.push_back(sc.vertices[v].id);
        j["contexts"].push_back(std::move(jc));
    }
    return j;
}

template <typename S> Json to_json(const Pvm<S>& pvm) {
    Json j;
    j["dimension"] = pvm.dim;
    j["field"] = scalar_traits<S>::field_name;
    j["elements"] = Json::array();
    for (const auto& e : pvm.elements) {
        Json je = Json::array();
        for (const auto& v : e.spanning) {
            Json jv;
            jv["id"] = v.id;
            jv["vector"] = Json::array();
            for (const auto& s : v.entries)
                jv["vector"].push_back(to_string(s));
            je.push_back(std::move(jv));
        }
        j["elements"].push_back(std::move(je));
    }
    return j;
}

template <typename S>
Json witness_json(const Scenario<S>& sc, const std::optional<Assignment>& a) {
    Json j;
    if (!a) {
        j["status"] = "unsat";
        return j;
    }
    j["status"] = "sat";
    Json asg = Json::object();
    for (std::size_t v = 0; v < sc.vertices.size(); ++v)
        asg[sc.vertices[v].id] = static_cast<int>(a->values[v]);
    j["assignment"] = std::move(asg);
    return j;
}

template <typename S>
Json classification_json(const AdClass& cls, const Pvm<S>& pvm,
                         std::span<const StateVector<S>> states) {
    Json j;
    j["class"] = to_string(cls.level);
    j["a_matchable"] = cls.a_matchable;
    if (cls.a_matchable) {
        Json m = Json::object();
        for (std::size_t out = 0; out < cls.matching.size(); ++out)
            m["outcome" + std::to_string(out)] = states[cls.matching[out]].id;
        j["matching"] = std::move(m);
    } else {
        j["matching"] = nullptr;
    }
    j["excluded_by_outcome"] = Json::array();
    for (const auto& excl : cls.report.excluded_by_outcome) {
        Json row = Json::array();
        for (int i : excl)
            row.push_back(states[i].id);
        j["excluded_by_outcome"].push_back(std::move(row));
    }
    j["exclusive_outcomes"] = Json::object();
    for (std::size_t i = 0; i < cls.report.exclusive_outcomes.size(); ++i)
        j["exclusive_outcomes"][states[i].id] = cls.report.exclusive_outcomes[i];
    j["outcome_count"] = pvm.outcome_count();
    return j;
}

namespace {

template <typename R> Json real_json(const R& r) {
    if constexpr (std::is_same_v<R, Rational>)
        return r.str();
    else
        return r;
}

} // namespace

template <typename S> Json verdict_json(const ContextualityVerdict<S>& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["method"] = v.method;
    Json w = Json::object();
    if (v.overlaps) {
        w["overlaps"] = Json::array();
        for (const auto& d : *v.overlaps)
            w["overlaps"].push_back(real_json(d));
        w["criterion_holds"] = *v.criterion_holds;
        w["note"] = "a positive overlap-criterion verdict certifies an excluding measurement "
                    "in the cited three-state sense; a negative verdict exactly refutes it";
    }
    if (v.wa_witness) {
        w["scenario"] = to_json(v.wa_witness->scenario);
        Json ctx = Json::array();
        for (int idx : v.wa_witness->context)
            ctx.push_back(v.wa_witness->scenario.vertices[idx].id);
        w["wa_context"] = std::move(ctx);
    }
    j["witness"] = w.empty() ? Json() : std::move(w);
    return j;
}

template <typename S>
Json maximality_json(const MaximalityVerdict<S>& v, std::span<const StateVector<S>> states) {
    Json j;
    j["status"] = to_string(v.status);
    j["method"] = v.method;
    j["set_verdict"] = verdict_json(v.set_verdict);
    if (v.contextual_subset) {
        Json sub = Json::array();
        for (int i : *v.contextual_subset)
            sub.push_back(states[i].id);
        j["contextual_subset"] = std::move(sub);
        j["subset_verdict"] = verdict_json(v.subset_verdict);
    }
    return j;
}

template <typename S> Json roundtrip_json(const EquivalenceReport<S>& rep) {
    Json j;
    j["contextual_instance"] = rep.contextual_instance;
    j["wa_context_found"] = rep.wa_context_found;
    j["instance_to_wa_ok"] = rep.instance_to_wa_ok;
    j["wa_to_instance_ok"] = rep.wa_to_instance_ok;
    j["consistent"] = rep.consistent;
    if (rep.extracted_level)
        j["extracted_context_class"] = to_string(*rep.extracted_level);
    if (rep.rebuilt_vertex_count)
        j["rebuilt_vertex_count"] = *rep.rebuilt_vertex_count;
    return j;
}

// explicit instantiations for both backends
template Pvm<Cyclotomic> parse_pvm(const Json&, const Pool<Cyclotomic>&);
template Pvm<FloatComplex> parse_pvm(const Json&, const Pool<FloatComplex>&);
template Json to_json(const Pool<Cyclotomic>&);
template Json to_json(const Pool<FloatComplex>&);
template Json to_json(const Scenario<Cyclotomic>&);
template Json to_json(const Scenario<FloatComplex>&);
template Json to_json(const Pvm<Cyclotomic>&);
template Json to_json(const Pvm<FloatComplex>&);
template Json witness_json(const Scenario<Cyclotomic>&, const std::optional<Assignment>&);
template Json witness_json(const Scenario<FloatComplex>&, const std::optional<Assignment>&);
template Json classification_json(const AdClass&, const Pvm<Cyclotomic>&,
                                  std::span<const StateVector<Cyclotomic>>);
template Json classification_json(const AdClass&, const Pvm<FloatComplex>&,
                                  std::span<const StateVector<FloatComplex>>);
template Json verdict_json(const ContextualityVerdict<Cyclotomic>&);
template Json verdict_json(const ContextualityVerdict<FloatComplex>&);
template Json maximality_json(const MaximalityVerdict<Cyclotomic>&,
                              std::span<const StateVector<Cyclotomic>>);
template Json maximality_json(const MaximalityVerdict<FloatComplex>&,
                              std::span<const StateVector<FloatComplex>>);
template Json roundtrip_json(const EquivalenceReport<Cyclotomic>&);
template Json roundtrip_json(const EquivalenceReport<FloatComplex>&);

} // namespace ksadist
