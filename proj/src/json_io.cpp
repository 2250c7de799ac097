#include "borderlim/json_io.hpp"

#include "borderlim/errors.hpp"

#include <algorithm>

namespace borderlim {

namespace {

json tuple_to_json(const PartitionTuple& tuple) {
    json arr = json::array();
    for (const auto& part : tuple.partitions()) {
        json p = json::array();
        for (int x : part.parts()) p.push_back(x);
        arr.push_back(p);
    }
    return arr;
}

PartitionTuple tuple_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("partition tuple must be an array of arrays");
    std::vector<Partition> parts;
    for (const auto& p : j) {
        if (!p.is_array()) throw parse_error("partition must be an array of integers");
        std::vector<int> row;
        for (const auto& x : p) {
            if (!x.is_number_integer()) throw parse_error("partition parts must be integers");
            row.push_back(x.get<int>());
        }
        parts.push_back(Partition(std::move(row)));
    }
    return PartitionTuple(std::move(parts));
}

std::vector<std::string> names_from_json(const json& j, const char* key) {
    std::vector<std::string> names;
    if (j.contains(key)) {
        for (const auto& n : j.at(key)) names.push_back(n.get<std::string>());
    }
    return names;
}

} // namespace

json space_to_json(const CoordSpace& space) {
    json j;
    j["tuple"] = tuple_to_json(space.tuple());
    j["level"] = space.level();
    json names = json::array();
    for (const auto& n : space.slot_names()) names.push_back(n);
    j["slot_names"] = names;
    return j;
}

CoordSpace space_from_json(const json& j) {
    if (!j.contains("tuple") || !j.contains("level")) throw parse_error("space needs tuple and level");
    return CoordSpace(tuple_from_json(j.at("tuple")), j.at("level").get<int>(),
                      names_from_json(j, "slot_names"));
}

json point_to_json(const Point& p) {
    json j;
    j["space"] = space_to_json(p.space());
    json slots = json::array();
    for (const auto& f : p.forms()) slots.push_back(f.to_string());
    j["slots"] = slots;
    return j;
}

namespace {

Point point_on_space(const CoordSpace& space, const json& slots) {
    if (!slots.is_array()) throw parse_error("point slots must be an array of polynomials");
    std::vector<Poly> forms;
    for (const auto& s : slots) forms.push_back(Poly::parse(s.get<std::string>()));
    return Point(space, std::move(forms));
}

} // namespace

Point point_from_json(const json& j) {
    if (!j.contains("space") || !j.contains("slots")) throw parse_error("point needs space and slots");
    return point_on_space(space_from_json(j.at("space")), j.at("slots"));
}

json laurent_to_json(const LaurentPoint& y) {
    json j;
    j["space"] = space_to_json(y.space());
    json coeffs = json::object();
    for (const auto& [e, p] : y.coeffs()) {
        json slots = json::array();
        for (const auto& f : p.forms()) slots.push_back(f.to_string());
        coeffs[std::to_string(e)] = slots;
    }
    j["coeffs"] = coeffs;
    return j;
}

LaurentPoint laurent_from_json(const json& j) {
    if (!j.contains("space") || !j.contains("coeffs"))
        throw parse_error("laurent point needs space and coeffs");
    CoordSpace space = space_from_json(j.at("space"));
    LaurentPoint y(space);
    for (const auto& [key, slots] : j.at("coeffs").items()) {
        std::size_t used = 0;
        int e = 0;
        try {
            e = std::stoi(key, &used);
        } catch (const std::exception&) {
            throw parse_error("exponent keys must be signed decimal integers");
        }
        if (used != key.size()) throw parse_error("exponent keys must be signed decimal integers");
        y.set_coeff(e, point_on_space(space, slots));
    }
    return y;
}

ParsedMap map_from_json(const json& j) {
    if (!j.contains("source") || !j.contains("target"))
        throw parse_error("map needs source and target tuples");
    ParsedMap out;
    if (j.contains("level")) out.level = j.at("level").get<int>();

    PartitionTuple source = tuple_from_json(j.at("source"));
    PartitionTuple target = tuple_from_json(j.at("target"));
    std::vector<std::string> source_names = names_from_json(j, "slot_names");
    std::vector<std::string> target_names = names_from_json(j, "target_names");

    auto one_row_degrees = [](const PartitionTuple& t) {
        std::vector<int> degrees;
        for (const auto& p : t.partitions()) {
            if (!p.is_one_row()) throw parse_error("map slots must be one-row partitions");
            degrees.push_back(p.empty() ? 0 : p.parts()[0]);
        }
        return degrees;
    };

    if (j.contains("formula")) {
        std::vector<int> sdeg = one_row_degrees(source);
        std::vector<int> tdeg = one_row_degrees(target);
        while (source_names.size() < sdeg.size())
            source_names.push_back("u" + std::to_string(source_names.size() + 1));
        // intern the slot symbols before parsing so slot metadata is attached
        for (std::size_t i = 0; i < source_names.size(); ++i)
            slot_symbol(source_names[i], static_cast<int>(i));
        std::vector<Poly> formulas;
        for (const auto& f : j.at("formula")) formulas.push_back(Poly::parse(f.get<std::string>()));
        out.slot_map = SlotMap::make(sdeg, source_names, tdeg, std::move(formulas), target_names);
        if (out.level) out.poly_map = PolyMap::from_slot_map(*out.slot_map, *out.level);
        return out;
    }

    if (!j.contains("components")) throw parse_error("map needs a formula or components");
    if (!out.level) throw parse_error("a components map needs an explicit level");
    CoordSpace src(source, *out.level, source_names);
    CoordSpace tgt(target, *out.level, target_names);
    // intern coordinate variables before parsing the components
    for (std::size_t i = 0; i < src.slot_count(); ++i)
        for (long long c = 0; c < src.slot_dim(i); ++c)
            slot_coord_var(src.slot_name(i), static_cast<int>(i), static_cast<int>(c));
    std::vector<Poly> components;
    for (const auto& comp : j.at("components")) components.push_back(Poly::parse(comp.get<std::string>()));
    out.poly_map = PolyMap(src, tgt, std::move(components));
    return out;
}

json constraint_system_to_json(const ConstraintSystem& sys) {
    json j;
    json constraints = json::array();
    for (const auto& c : sys.constraints) constraints.push_back(c.to_string());
    json evaluation = json::array();
    for (const auto& e : sys.evaluation) evaluation.push_back(e.to_string());
    j["constraints"] = constraints;
    j["evaluation"] = evaluation;
    return j;
}

json certificate_to_json(const Certificate& cert) {
    json j;
    j["s"] = cert.s;
    j["degree"] = cert.splitting.d;
    json splitting = json::array();
    for (int e : cert.splitting.e) splitting.push_back(e);
    j["splitting"] = splitting;
    j["level"] = cert.level;
    json factors = json::array();
    for (const auto& f : cert.factors) factors.push_back(laurent_to_json(f));
    j["factors"] = factors;
    return j;
}

Certificate certificate_from_json(const json& j) {
    for (const char* key : {"s", "degree", "splitting", "level", "factors"})
        if (!j.contains(key)) throw parse_error(std::string("certificate needs ") + key);
    Certificate cert;
    cert.s = j.at("s").get<int>();
    if (cert.s < 0) throw parse_error("certificate shift must be non-negative");
    std::vector<int> e;
    for (const auto& x : j.at("splitting")) e.push_back(x.get<int>());
    cert.level = j.at("level").get<int>();
    std::vector<LaurentPoint> factors;
    for (const auto& f : j.at("factors")) factors.push_back(laurent_from_json(f));
    if (factors.size() != 2 * e.size()) throw parse_error("certificate needs 2r factors");
    // canonical splitting keeps e ascending; permute the factor pairs along
    std::vector<std::size_t> index(e.size());
    for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
    std::stable_sort(index.begin(), index.end(),
                     [&](std::size_t a, std::size_t b) { return e[a] < e[b]; });
    cert.splitting = DegreeSplitting::make(j.at("degree").get<int>(), e);
    for (std::size_t i : index) {
        cert.factors.push_back(factors[2 * i]);
        cert.factors.push_back(factors[2 * i + 1]);
    }
    return cert;
}

json ideal_to_json(const Ideal& ideal) {
    json j;
    j["order"] = ideal.order.to_string();
    json gens = json::array();
    const std::vector<Poly>& list = ideal.has_basis() ? *ideal.basis : ideal.generators;
    for (const auto& g : list) gens.push_back(g.to_string());
    j["generators"] = gens;
    j["reduced"] = ideal.has_basis();
    return j;
}

} // namespace borderlim
