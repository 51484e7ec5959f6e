#include "autstab/certificate_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "autstab/error.hpp"
#include "autstab/parser.hpp"

namespace autstab {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::BadCertificate, what); }

json scalar_to_json(const Scalar& s) { return s.to_string(); }

json matrix_to_json(const std::vector<std::vector<Scalar>>& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const Scalar& s : row) r.push_back(scalar_to_json(s));
        rows.push_back(std::move(r));
    }
    return rows;
}

json map_to_json(const AlgebraSignature& sig, const AutFamilyParams& params) {
    json j;
    j["family"] = family_name(params);
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ShiftParams>) {
                j["generator"] = sig.generator_name(p.generator);
                j["amount"] = scalar_to_json(p.amount);
            } else if constexpr (std::is_same_v<T, LinearParams>) {
                j["atom"] = p.atom;
                j["matrix"] = matrix_to_json(p.matrix);
                json t = json::array();
                for (const Scalar& s : p.translate) t.push_back(scalar_to_json(s));
                j["translate"] = std::move(t);
            } else if constexpr (std::is_same_v<T, ScalingParams>) {
                j["generator"] = sig.generator_name(p.generator);
                j["factor"] = scalar_to_json(p.factor);
            } else if constexpr (std::is_same_v<T, PermutationParams>) {
                j["atom"] = p.atom;
                j["perm"] = p.perm;
            } else if constexpr (std::is_same_v<T, WeylScalingParams>) {
                j["atom"] = p.atom;
                j["pair"] = p.pair;
                j["factor"] = scalar_to_json(p.factor);
            } else if constexpr (std::is_same_v<T, WeylLinearParams>) {
                j["atom"] = p.atom;
                j["matrix"] = matrix_to_json(p.matrix);
            } else if constexpr (std::is_same_v<T, WeylSwapParams>) {
                j["atom"] = p.atom;
                j["pair"] = p.pair;
            } else if constexpr (std::is_same_v<T, AlphaParams>) {
                j["atom"] = p.atom;
                j["pair"] = p.pair;
                json h = json::array();
                for (const Scalar& s : p.h_coeffs) h.push_back(scalar_to_json(s));
                j["h"] = std::move(h);
            } else if constexpr (std::is_same_v<T, BetaParams>) {
                j["atom"] = p.atom;
                j["pair"] = p.pair;
                j["c"] = scalar_to_json(p.c);
            } else {
                j["generator"] = sig.generator_name(p.generator);
                j["c"] = scalar_to_json(p.c);
                j["monomial"] = format_monomial(sig, p.monomial);
            }
        },
        params);
    return j;
}

const json& field_at(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field '") + key + "'");
    return *it;
}

int int_at(const json& j, const char* key) {
    const json& v = field_at(j, key);
    if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::string string_at(const json& j, const char* key) {
    const json& v = field_at(j, key);
    if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

Scalar scalar_at(const json& j, const char* key, const Field& field) {
    try {
        return Scalar::from_string(field, string_at(j, key));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::BadCertificate) throw;
        bad(std::string("field '") + key + "': " + e.what());
    }
}

std::vector<std::vector<Scalar>> matrix_at(const json& j, const char* key, const Field& field) {
    const json& v = field_at(j, key);
    if (!v.is_array()) bad(std::string("field '") + key + "' must be an array");
    std::vector<std::vector<Scalar>> out;
    for (const json& row : v) {
        if (!row.is_array()) bad(std::string("field '") + key + "' must be an array of arrays");
        std::vector<Scalar> r;
        for (const json& cell : row) {
            if (!cell.is_string()) bad(std::string("field '") + key + "' entries must be strings");
            r.push_back(Scalar::from_string(field, cell.get<std::string>()));
        }
        out.push_back(std::move(r));
    }
    return out;
}

int generator_at(const json& j, const char* key, const AlgebraSignature& sig) {
    const std::string name = string_at(j, key);
    const int g = sig.generator_index(name);
    if (g < 0) bad("unknown generator '" + name + "'");
    return g;
}

Element element_from_string(const std::string& text, const SignaturePtr& sig) {
    try {
        return parse_element(text, sig);
    } catch (const Error& e) {
        bad(std::string("bad element '") + text + "': " + e.what());
    }
}

Monomial monomial_from_string(const std::string& text, const SignaturePtr& sig) {
    const Element e = element_from_string(text, sig);
    if (e.term_count() != 1 || !e.leading_coefficient().is_one()) {
        bad("'" + text + "' is not a monic monomial");
    }
    return e.leading_monomial();
}

AutFamilyParams map_from_json(const json& j, const SignaturePtr& sig) {
    if (!j.is_object()) bad("map must be an object");
    const Field& field = sig->field();
    const std::string family = string_at(j, "family");
    if (family == "shift") {
        return ShiftParams{generator_at(j, "generator", *sig), scalar_at(j, "amount", field)};
    }
    if (family == "linear") {
        return LinearParams{int_at(j, "atom"), matrix_at(j, "matrix", field),
                            [&] {
                                const json& t = field_at(j, "translate");
                                if (!t.is_array()) bad("field 'translate' must be an array");
                                std::vector<Scalar> out;
                                for (const json& cell : t) {
                                    if (!cell.is_string()) bad("'translate' entries must be strings");
                                    out.push_back(
                                        Scalar::from_string(field, cell.get<std::string>()));
                                }
                                return out;
                            }()};
    }
    if (family == "scaling") {
        return ScalingParams{generator_at(j, "generator", *sig), scalar_at(j, "factor", field)};
    }
    if (family == "permutation") {
        const json& p = field_at(j, "perm");
        if (!p.is_array()) bad("field 'perm' must be an array");
        std::vector<int> perm;
        for (const json& cell : p) {
            if (!cell.is_number_integer()) bad("'perm' entries must be integers");
            perm.push_back(cell.get<int>());
        }
        return PermutationParams{int_at(j, "atom"), std::move(perm)};
    }
    if (family == "weyl-scaling") {
        return WeylScalingParams{int_at(j, "atom"), int_at(j, "pair"),
                                 scalar_at(j, "factor", field)};
    }
    if (family == "weyl-linear") {
        return WeylLinearParams{int_at(j, "atom"), matrix_at(j, "matrix", field)};
    }
    if (family == "weyl-swap") {
        return WeylSwapParams{int_at(j, "atom"), int_at(j, "pair")};
    }
    if (family == "alpha") {
        const json& h = field_at(j, "h");
        if (!h.is_array()) bad("field 'h' must be an array");
        std::vector<Scalar> coeffs;
        for (const json& cell : h) {
            if (!cell.is_string()) bad("'h' entries must be strings");
            coeffs.push_back(Scalar::from_string(field, cell.get<std::string>()));
        }
        return AlphaParams{int_at(j, "atom"), int_at(j, "pair"), std::move(coeffs)};
    }
    if (family == "beta") {
        return BetaParams{int_at(j, "atom"), int_at(j, "pair"), scalar_at(j, "c", field)};
    }
    if (family == "triangular") {
        return TriangularParams{generator_at(j, "generator", *sig), scalar_at(j, "c", field),
                                monomial_from_string(string_at(j, "monomial"), sig)};
    }
    bad("unknown family '" + family + "'");
}

}  // namespace

std::string certificate_to_json(const ClosureCertificate& cert) {
    if (!cert.signature) fail(ErrorCode::SignatureMismatch, "certificate has no signature");
    const AlgebraSignature& sig = *cert.signature;

    json j;
    j["schema_version"] = 1;
    j["signature"] = sig.to_string();
    j["field"] = sig.field().to_string();
    j["seed"] = format_element(cert.seed);
    j["cap"] = cert.cap;

    json steps = json::array();
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const CertStep& s = cert.steps[i];
        json step;
        step["id"] = i;
        step["result"] = format_element(s.result);
        switch (s.kind) {
            case CertStep::Kind::seed:
                step["kind"] = "seed";
                break;
            case CertStep::Kind::apply:
                step["kind"] = "apply";
                step["input"] = s.input;
                step["map"] = map_to_json(sig, *s.map);
                break;
            case CertStep::Kind::combine: {
                step["kind"] = "combine";
                json inputs = json::array();
                for (const auto& [id, c] : s.combination) {
                    inputs.push_back(json::array({id, scalar_to_json(c)}));
                }
                step["inputs"] = std::move(inputs);
                break;
            }
        }
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);

    json coverage = json::object();
    for (const auto& [m, id] : cert.coverage) {
        coverage[format_monomial(sig, m)] = id;
    }
    j["coverage"] = std::move(coverage);

    return j.dump(2) + "\n";
}

ClosureCertificate certificate_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad("not valid JSON");
    if (!j.is_object()) bad("certificate must be a JSON object");
    if (int_at(j, "schema_version") != 1) {
        bad("unsupported schema_version " + field_at(j, "schema_version").dump());
    }

    Field field;
    SignaturePtr sig;
    try {
        field = Field::from_string(string_at(j, "field"));
        sig = parse_signature(string_at(j, "signature"), field);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::BadCertificate) throw;
        bad(e.what());
    }

    ClosureCertificate cert{sig, element_from_string(string_at(j, "seed"), sig),
                            int_at(j, "cap"), {}, {}};

    const json& steps = field_at(j, "steps");
    if (!steps.is_array()) bad("field 'steps' must be an array");
    for (const json& s : steps) {
        if (!s.is_object()) bad("steps must be objects");
        CertStep step{CertStep::Kind::seed, std::nullopt, 0, {},
                      element_from_string(string_at(s, "result"), sig)};
        const std::string kind = string_at(s, "kind");
        if (kind == "seed") {
            step.kind = CertStep::Kind::seed;
        } else if (kind == "apply") {
            step.kind = CertStep::Kind::apply;
            const int input = int_at(s, "input");
            if (input < 0) bad("negative step reference");
            step.input = static_cast<std::size_t>(input);
            step.map = map_from_json(field_at(s, "map"), sig);
        } else if (kind == "combine") {
            step.kind = CertStep::Kind::combine;
            const json& inputs = field_at(s, "inputs");
            if (!inputs.is_array()) bad("field 'inputs' must be an array");
            for (const json& pair : inputs) {
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                    !pair[1].is_string()) {
                    bad("combination entries must be [step, coefficient] pairs");
                }
                const int id = pair[0].get<int>();
                if (id < 0) bad("negative step reference");
                step.combination.emplace_back(
                    static_cast<std::size_t>(id),
                    Scalar::from_string(field, pair[1].get<std::string>()));
            }
        } else {
            bad("unknown step kind '" + kind + "'");
        }
        cert.steps.push_back(std::move(step));
    }

    const json& coverage = field_at(j, "coverage");
    if (!coverage.is_object()) bad("field 'coverage' must be an object");
    for (auto it = coverage.begin(); it != coverage.end(); ++it) {
        if (!it.value().is_number_integer()) bad("coverage values must be step ids");
        const int id = it.value().get<int>();
        if (id < 0) bad("negative step reference");
        cert.coverage.emplace(monomial_from_string(it.key(), sig),
                              static_cast<std::size_t>(id));
    }
    return cert;
}

void write_certificate_file(const std::string& path, const ClosureCertificate& cert) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    out << certificate_to_json(cert);
    out.flush();
    if (!out) fail(ErrorCode::IoError, "write to '" + path + "' failed");
}

ClosureCertificate read_certificate_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return certificate_from_json(buf.str());
}

}  // namespace autstab
