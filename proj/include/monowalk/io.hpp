#ifndef MONOWALK_IO_HPP
#define MONOWALK_IO_HPP

// File formats: instances, walk certificates, and decomposition inputs as
// JSON documents whose numbers travel as decimal strings ("p" or "p/q"), so
// arbitrary-precision values survive round-trips bit-exactly.

#include "walks.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace monowalk {

struct InstanceFile {
    LpInstance inst;
    std::optional<Vec> x0;
    std::optional<std::string> mode;  // "circuit" | "graver"
};

struct DecomposeFile {
    Mat a;
    Vec h;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw monowalk::parse_error(e.what());  // nlohmann anchors line and column
    }
}

inline const Json& need(const Json& j, const char* key) {
    if (!j.is_object()) throw monowalk::parse_error("expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw monowalk::parse_error(std::string("missing key '") + key + "'");
    return *it;
}

inline Rat read_rat(const Json& j, const std::string& where) {
    try {
        if (j.is_string()) return rat_from_string(j.get<std::string>());
        if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    } catch (const monowalk::error& e) {
        throw monowalk::parse_error(where + ": " + e.what());
    }
    throw monowalk::parse_error(where + ": expected a decimal or p/q string");
}

inline Rat read_int(const Json& j, const std::string& where) {
    Rat v = read_rat(j, where);
    if (!is_integer(v)) throw monowalk::parse_error(where + ": expected an integer");
    return v;
}

inline Vec read_vec(const Json& j, const std::string& where, bool integral) {
    if (!j.is_array()) throw monowalk::parse_error(where + ": expected a list");
    Vec v;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string at = where + " entry " + std::to_string(i);
        v.push_back(integral ? read_int(j[i], at) : read_rat(j[i], at));
    }
    return v;
}

inline Json write_vec(const Vec& v) {
    Json out = Json::array();
    for (const Rat& q : v) out.push_back(rat_to_string(q));
    return out;
}

inline Mat read_matrix(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw monowalk::parse_error(where + ": expected a list of rows");
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        rows.push_back(read_vec(j[i], where + " row " + std::to_string(i), true));
        if (rows.back().empty() || rows.back().size() != rows[0].size())
            throw monowalk::parse_error(where + " row " + std::to_string(i) +
                                        ": rows must be nonempty and equally long");
    }
    Mat m((int)rows.size(), (int)rows[0].size());
    for (int i = 0; i < m.rows; ++i)
        for (int k = 0; k < m.cols; ++k) m.at(i, k) = rows[i][k];
    return m;
}

inline Json write_matrix(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline WalkMode read_mode(const Json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "circuit") return WalkMode::Circuit;
        if (s == "graver") return WalkMode::Graver;
    }
    throw monowalk::parse_error("key 'mode': expected \"circuit\" or \"graver\"");
}

inline Phase read_phase(const Json& j, const std::string& where) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "decay") return Phase::Decay;
        if (s == "descent") return Phase::Descent;
        if (s == "trivial") return Phase::Trivial;
    }
    throw monowalk::parse_error(where + ": expected \"decay\", \"descent\" or \"trivial\"");
}

}  // namespace detail

inline InstanceFile parse_instance(const std::string& text) {
    detail::Json j = detail::parse_json(text);
    InstanceFile f;
    f.inst.a = detail::read_matrix(detail::need(j, "A"), "key 'A'");
    f.inst.b = detail::read_vec(detail::need(j, "b"), "key 'b'", true);
    f.inst.l = detail::read_vec(detail::need(j, "l"), "key 'l'", true);
    f.inst.u = detail::read_vec(detail::need(j, "u"), "key 'u'", true);
    f.inst.w = detail::read_vec(detail::need(j, "w"), "key 'w'", true);
    try {
        validate_instance(f.inst);
    } catch (const error& e) {
        throw parse_error(e.what());
    }
    if (j.contains("x0")) {
        f.x0 = detail::read_vec(j["x0"], "key 'x0'", false);
        if (f.x0->size() != (std::size_t)f.inst.a.cols)
            throw parse_error("key 'x0': dimension mismatch");
    }
    if (j.contains("mode")) {
        detail::read_mode(j["mode"]);  // reject unknown modes at parse time
        f.mode = j["mode"].get<std::string>();
    }
    return f;
}

inline std::string serialize_instance(const InstanceFile& f) {
    detail::Json j;
    j["A"] = detail::write_matrix(f.inst.a);
    j["b"] = detail::write_vec(f.inst.b);
    j["l"] = detail::write_vec(f.inst.l);
    j["u"] = detail::write_vec(f.inst.u);
    j["w"] = detail::write_vec(f.inst.w);
    if (f.x0) j["x0"] = detail::write_vec(*f.x0);
    if (f.mode) j["mode"] = *f.mode;
    return j.dump(2) + "\n";
}

// Certificates serialize without their instance; verification pairs a
// certificate file with the instance file it walked on.
inline WalkCertificate parse_certificate(const std::string& text) {
    detail::Json j = detail::parse_json(text);
    WalkCertificate c;
    c.mode = detail::read_mode(detail::need(j, "mode"));
    c.start = detail::read_vec(detail::need(j, "start"), "key 'start'", false);
    const detail::Json& steps = detail::need(j, "steps");
    if (!steps.is_array()) throw parse_error("key 'steps': expected a list");
    for (std::size_t k = 0; k < steps.size(); ++k) {
        std::string where = "step " + std::to_string(k);
        const detail::Json& sj = steps[k];
        WalkStep s;
        s.direction = detail::read_vec(detail::need(sj, "direction"), where + " direction", false);
        s.multiplier = detail::read_rat(detail::need(sj, "multiplier"), where + " multiplier");
        s.phase = detail::read_phase(detail::need(sj, "phase"), where + " phase");
        s.objective_after =
            detail::read_rat(detail::need(sj, "objective_after"), where + " objective_after");
        c.steps.push_back(std::move(s));
    }
    c.terminal = detail::read_vec(detail::need(j, "terminal"), "key 'terminal'", false);
    return c;
}

inline std::string serialize_certificate(const WalkCertificate& c) {
    detail::Json j;
    j["mode"] = mode_name(c.mode);
    j["start"] = detail::write_vec(c.start);
    detail::Json steps = detail::Json::array();
    for (const WalkStep& s : c.steps) {
        detail::Json sj;
        sj["direction"] = detail::write_vec(s.direction);
        sj["multiplier"] = rat_to_string(s.multiplier);
        sj["phase"] = phase_name(s.phase);
        sj["objective_after"] = rat_to_string(s.objective_after);
        steps.push_back(sj);
    }
    j["steps"] = steps;
    j["terminal"] = detail::write_vec(c.terminal);
    return j.dump(2) + "\n";
}

inline DecomposeFile parse_decompose(const std::string& text) {
    detail::Json j = detail::parse_json(text);
    DecomposeFile f;
    f.a = detail::read_matrix(detail::need(j, "A"), "key 'A'");
    f.h = detail::read_vec(detail::need(j, "h"), "key 'h'", false);
    if (f.h.size() != (std::size_t)f.a.cols) throw parse_error("key 'h': dimension mismatch");
    return f;
}

inline std::string serialize_decompose(const DecomposeFile& f) {
    detail::Json j;
    j["A"] = detail::write_matrix(f.a);
    j["h"] = detail::write_vec(f.h);
    return j.dump(2) + "\n";
}

}  // namespace monowalk

#endif
