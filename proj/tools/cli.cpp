#include "cli.hpp"

#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "autstab/certificate_io.hpp"
#include "autstab/closure.hpp"
#include "autstab/error.hpp"
#include "autstab/filtration.hpp"
#include "autstab/parser.hpp"

namespace autstab::cli {

namespace {

using nlohmann::json;

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

SignaturePtr make_signature(const std::string& algebra, const std::string& field_spec) {
    return parse_signature(algebra, Field::from_string(field_spec));
}

std::vector<int> parse_weight_list(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const int w = std::stoi(item, &pos);
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(w);
        } catch (const std::exception&) {
            fail(ErrorCode::UsageError, "bad weight '" + item + "' (expected an integer)");
        }
    }
    if (out.empty()) fail(ErrorCode::UsageError, "empty weight list");
    return out;
}

WeightFiltration make_filtration(const SignaturePtr& sig, const std::string& spec) {
    if (spec == "bernstein") return WeightFiltration::bernstein(sig);
    return WeightFiltration(sig, parse_weight_list(spec));
}

std::string join_weights(const std::vector<int>& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w[i]);
    }
    return out;
}

struct Options {
    std::string algebra;
    std::string field = "q";
    std::string format = "text";
    std::string expr;
    std::vector<std::string> seeds;
    std::string pool = "affine";
    std::string weights = "bernstein";
    std::string out_path;
    std::string cert_path;
    int cap = 0;
    int max_rounds = 50;
    int split = 1;
    int steps = 12;
    bool json_out() const { return format == "json"; }
};

int cmd_parse(const Options& o, std::ostream& out) {
    const SignaturePtr sig = make_signature(o.algebra, o.field);
    const Element e = parse_element(o.expr, sig);
    if (o.json_out()) {
        json j;
        j["element"] = format_element(e);
        j["field"] = sig->field().to_string();
        j["signature"] = sig->to_string();
        emit(out, j);
    } else {
        out << format_element(e) << "\n";
    }
    return 0;
}

int cmd_closure(const Options& o, std::ostream& out) {
    const SignaturePtr sig = make_signature(o.algebra, o.field);
    const Element seed = parse_element(o.expr, sig);
    const ClosureCertificate cert = scripted_closure(seed, o.cap);
    if (!o.out_path.empty()) {
        write_certificate_file(o.out_path, cert);
    } else if (o.json_out()) {
        out << certificate_to_json(cert);
        return 0;
    }
    if (o.json_out()) {
        json j;
        j["cap"] = cert.cap;
        j["covered"] = cert.coverage.size();
        j["out"] = o.out_path;
        j["steps"] = cert.steps.size();
        emit(out, j);
    } else {
        out << "seed: " << format_element(cert.seed) << "\n";
        out << "cap: " << cert.cap << "\n";
        out << "steps: " << cert.steps.size() << "\n";
        out << "covered: " << cert.coverage.size() << " monomials\n";
        if (!o.out_path.empty()) out << "wrote: " << o.out_path << "\n";
    }
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::optional<ClosureCertificate> cert;
    try {
        cert = read_certificate_file(o.cert_path);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BadCertificate) throw;
        if (o.json_out()) {
            json j;
            j["detail"] = e.what();
            j["status"] = "malformed";
            emit(out, j);
        } else {
            out << "status: malformed\ndetail: " << e.what() << "\n";
        }
        return 1;
    }
    const VerifyResult r = verify_certificate(*cert);
    if (o.json_out()) {
        json j;
        j["status"] = verify_status_name(r.status);
        if (!r.ok()) {
            if (r.failing_step != static_cast<std::size_t>(-1)) j["failing_step"] = r.failing_step;
            j["detail"] = r.detail;
        } else {
            j["covered"] = cert->coverage.size();
            j["steps"] = cert->steps.size();
        }
        emit(out, j);
    } else {
        out << "status: " << verify_status_name(r.status) << "\n";
        if (r.ok()) {
            out << "steps: " << cert->steps.size() << "\n";
            out << "covered: " << cert->coverage.size() << " monomials through degree "
                << cert->cap << "\n";
        } else {
            if (r.failing_step != static_cast<std::size_t>(-1)) {
                out << "step: " << r.failing_step << "\n";
            }
            out << "detail: " << r.detail << "\n";
        }
    }
    return r.ok() ? 0 : 1;
}

int cmd_saturate(const Options& o, std::ostream& out) {
    const SignaturePtr sig = make_signature(o.algebra, o.field);
    std::vector<Element> seeds;
    for (const std::string& s : o.seeds) seeds.push_back(parse_element(s, sig));
    const std::vector<EndoMap> pool = pool_preset(sig, o.pool);
    const SaturationResult r = saturate(seeds, pool, o.cap, o.max_rounds);
    const bool sound = raw_table_consistent(r, seeds, pool);
    if (o.json_out()) {
        json j;
        json basis = json::array();
        for (const auto& row : r.basis.rows()) basis.push_back(format_element(row.elem));
        j["basis"] = std::move(basis);
        j["cap_blocked"] = r.cap_blocked;
        j["dim"] = r.basis.dimension();
        j["raw_table_consistent"] = sound;
        j["rounds"] = r.rounds;
        j["status"] = saturation_status_name(r.status);
        emit(out, j);
    } else {
        out << saturation_status_name(r.status) << ", dim " << r.basis.dimension() << "\n";
        out << "rounds: " << r.rounds << "\n";
        out << "cap-blocked: " << r.cap_blocked << "\n";
        out << "raw-table: " << (sound ? "consistent" : "INCONSISTENT") << "\n";
        out << "basis:\n";
        for (const auto& row : r.basis.rows()) out << "  " << format_element(row.elem) << "\n";
    }
    return sound ? 0 : 1;
}

int cmd_gr(const Options& o, std::ostream& out) {
    const SignaturePtr sig = make_signature(o.algebra, o.field);
    const WeightFiltration w = make_filtration(sig, o.weights);
    if (o.expr.empty()) {
        require_valid_filtration(w);
        if (o.json_out()) {
            json j;
            j["filtration"] = "ok";
            j["weights"] = w.weights();
            emit(out, j);
        } else {
            out << "weights: " << join_weights(w.weights()) << "\n";
            out << "filtration: ok\n";
        }
        return 0;
    }
    const Element f = parse_element(o.expr, sig);
    const Element lead = leading_form(w, f);
    const std::optional<int> wd = weight_degree(w, f);
    if (o.json_out()) {
        json j;
        j["leading_form"] = format_element(lead);
        j["weight_degree"] = *wd;
        j["weights"] = w.weights();
        emit(out, j);
    } else {
        out << "weights: " << join_weights(w.weights()) << "\n";
        out << "weight degree: " << *wd << "\n";
        out << "leading form: " << format_element(lead) << "\n";
    }
    return 0;
}

int cmd_tensor_gr_check(const Options& o, std::ostream& out) {
    const Field field = Field::from_string(o.field);
    const SignaturePtr sig = parse_signature(o.algebra, field);
    const int atom_count = static_cast<int>(sig->atoms().size());
    if (o.split < 1 || o.split >= atom_count) {
        fail(ErrorCode::UsageError,
             "--split must cut between atoms (1.." + std::to_string(atom_count - 1) + ")");
    }
    const std::vector<Atom> left(sig->atoms().begin(), sig->atoms().begin() + o.split);
    const std::vector<Atom> right(sig->atoms().begin() + o.split, sig->atoms().end());
    const auto sig_a = std::make_shared<const AlgebraSignature>(left, field);
    const auto sig_b = std::make_shared<const AlgebraSignature>(right, field);

    WeightFiltration wa = WeightFiltration::bernstein(sig_a);
    WeightFiltration wb = WeightFiltration::bernstein(sig_b);
    if (o.weights != "bernstein") {
        const std::vector<int> all = parse_weight_list(o.weights);
        if (static_cast<int>(all.size()) != sig->generator_count()) {
            fail(ErrorCode::UsageError,
                 "expected " + std::to_string(sig->generator_count()) + " weights");
        }
        const auto mid = all.begin() + sig_a->generator_count();
        wa = WeightFiltration(sig_a, std::vector<int>(all.begin(), mid));
        wb = WeightFiltration(sig_b, std::vector<int>(mid, all.end()));
    }

    const GradedReport rep = gr_dimension_check(wa, wb, o.cap);
    const bool pass = rep.all_pass();
    if (o.json_out()) {
        json j;
        json rows = json::array();
        for (const auto& row : rep.rows) {
            json r;
            r["degree"] = row.degree;
            r["lhs"] = row.lhs;
            r["pass"] = row.pass;
            r["rhs"] = row.rhs;
            rows.push_back(std::move(r));
        }
        j["all_pass"] = pass;
        j["domain_ok"] = rep.domain_ok;
        j["domain_samples"] = rep.domain_samples;
        j["rows"] = std::move(rows);
        emit(out, j);
    } else {
        out << "degree  gr-dim  convolution  result\n";
        for (const auto& row : rep.rows) {
            out << std::left << std::setw(8) << row.degree << std::setw(8) << row.lhs
                << std::setw(13) << row.rhs << (row.pass ? "pass" : "FAIL") << "\n";
        }
        out << "domain samples: " << rep.domain_samples << (rep.domain_ok ? " pass" : " FAIL")
            << "\n";
        out << "tensor-gr-check: " << (pass ? "pass" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int cmd_growth(const Options& o, std::ostream& out) {
    const SignaturePtr sig = make_signature(o.algebra, o.field);
    std::vector<Element> gens{Element::one(sig)};
    for (int g = 0; g < sig->generator_count(); ++g) {
        gens.push_back(Element::generator(sig, g));
        if (sig->invertible(g)) {
            gens.push_back(Element::generator(sig, g).pow(-1));
        }
    }
    const GrowthReport rep = growth_sequence(sig, gens, o.steps);
    if (o.json_out()) {
        json j;
        j["dims"] = rep.dims;
        if (rep.degree) {
            j["gk_degree"] = *rep.degree;
        } else {
            j["gk_degree"] = nullptr;
        }
        j["verdict"] = rep.verdict;
        emit(out, j);
    } else {
        out << "dims:";
        for (const std::int64_t d : rep.dims) out << " " << d;
        out << "\n";
        if (rep.degree) {
            out << "GK degree: " << *rep.degree << "\n";
        } else {
            out << "GK degree: unknown (" << rep.verdict << ")\n";
        }
    }
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"exact arithmetic, automorphism closures, and filtration checks "
                 "in polynomial, Laurent, and Weyl algebras",
                 "autstab"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* sub, bool need_algebra) {
        if (need_algebra) {
            sub->add_option("--algebra", o.algebra,
                            "algebra signature, e.g. poly:2, weyl:1, \"poly:1 x weyl:1\"")
                ->required();
            sub->add_option("--field", o.field, "coefficient field: q or f<p>");
        }
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* parse = app.add_subcommand("parse", "normalize an expression");
    add_common(parse, true);
    parse->add_option("--expr", o.expr, "expression to normalize")->required();

    CLI::App* closure = app.add_subcommand("closure", "derive a scripted closure certificate");
    add_common(closure, true);
    closure->add_option("--seed", o.expr, "seed element")->required();
    closure->add_option("--cap", o.cap, "degree cap")->required()->check(CLI::NonNegativeNumber);
    closure->add_option("--out", o.out_path, "certificate file to write");

    CLI::App* verify = app.add_subcommand("verify", "replay a closure certificate");
    add_common(verify, false);
    verify->add_option("--cert", o.cert_path, "certificate file")->required();

    CLI::App* saturate = app.add_subcommand("saturate", "saturate seeds under a map pool");
    add_common(saturate, true);
    saturate->add_option("--seed", o.seeds, "seed element (repeatable)")->required();
    saturate->add_option("--pool", o.pool, "map pool: affine, triangular, weyl-standard");
    saturate->add_option("--cap", o.cap, "degree cap")->required()->check(CLI::NonNegativeNumber);
    saturate->add_option("--max-rounds", o.max_rounds, "round limit")
        ->check(CLI::PositiveNumber);

    CLI::App* gr = app.add_subcommand("gr", "validate a filtration / take a leading form");
    add_common(gr, true);
    gr->add_option("--weights", o.weights, "comma-separated weights or 'bernstein'");
    gr->add_option("--expr", o.expr, "element whose leading form to compute");

    CLI::App* tensor = app.add_subcommand("tensor-gr-check",
                                          "compare gr dimensions of a tensor product against "
                                          "the factor convolution");
    add_common(tensor, true);
    tensor->add_option("--weights", o.weights, "weights for all generators or 'bernstein'");
    tensor->add_option("--split", o.split, "atoms in the left factor");
    tensor->add_option("--cap", o.cap, "top degree to compare")
        ->required()
        ->check(CLI::NonNegativeNumber);

    CLI::App* growth = app.add_subcommand("growth", "product growth sequence and GK estimate");
    add_common(growth, true);
    growth->add_option("--n", o.steps, "sequence length (products up to n factors)")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(parse)) return cmd_parse(o, out);
        if (app.got_subcommand(closure)) return cmd_closure(o, out);
        if (app.got_subcommand(verify)) return cmd_verify(o, out);
        if (app.got_subcommand(saturate)) return cmd_saturate(o, out);
        if (app.got_subcommand(gr)) return cmd_gr(o, out);
        if (app.got_subcommand(tensor)) return cmd_tensor_gr_check(o, out);
        if (app.got_subcommand(growth)) return cmd_growth(o, out);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace autstab::cli
