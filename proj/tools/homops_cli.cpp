// Command-line front end: verification suites, operation tables, homology of
// the truncated operation complex, and chain evaluation, with canonical
// machine-readable output.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

#include "homops/circle.hpp"
#include "homops/natcomplex.hpp"
#include "homops/verify.hpp"

namespace {

using homops::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
    f << text;
}

homops::OperationFamily family_by_name(const std::string& name, int K, int k) {
    if (name == "sh") return homops::shuffle_family(K, k);
    if (name == "lambda") return homops::lambda_family(K, k);
    if (name == "B") return homops::connes_family(K);
    if (name == "Bk") return homops::connes_power_family(K, k);
    throw CLI::ValidationError("--family", "unknown family '" + name + "'");
}

int cmd_op(const std::string& family, int n, int k, const std::string& out) {
    homops::Morphism m(0, 0);
    if (family == "sh") m = homops::shuffle_op(n, k);
    else if (family == "lambda") m = homops::lambda_op(n, k);
    else if (family == "l") m = homops::eulerian_op(n, k);
    else if (family == "B") m = homops::connes_component(n + 1);
    else if (family == "Bk") m = homops::connes_power_family(n, k).component(n);
    else if (family == "R") m = homops::rotated_eulerian_op(n, k);
    else throw CLI::ValidationError("--family", "unknown family '" + family + "'");
    json j{{"family", family}, {"n", n}, {"k", k}, {"component", homops::to_json(m)},
           {"terms", m.term_count()}};
    write_output(homops::canonical_dump(j), out);
    return kExitPass;
}

int cmd_aw(int max_n, const std::string& format, const std::string& out) {
    if (max_n > 9)
        throw CLI::ValidationError("--max-n", "pairing tables beyond n = 9 enumerate too many permutations");
    json rows = json::array();
    std::string csv = "family,k,n,coefficient\n";
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            homops::OperationFamily sh(0, n);
            for (int j = 0; j < n; ++j) sh.set_component(j, homops::Morphism::zero(j + 1, j + 1));
            sh.set_component(n, homops::shuffle_op(n, k));
            homops::Scalar csh = homops::q_map(sh)[static_cast<size_t>(n)];
            homops::Scalar cbk = homops::q_map(homops::connes_power_family(n, k))[static_cast<size_t>(n)];
            rows.push_back(json{{"family", "sh"}, {"k", k}, {"n", n}, {"coefficient", csh.to_string()}});
            rows.push_back(json{{"family", "Bk"}, {"k", k}, {"n", n}, {"coefficient", cbk.to_string()}});
            csv += "sh," + std::to_string(k) + "," + std::to_string(n) + "," + csh.to_string() + "\n";
            csv += "Bk," + std::to_string(k) + "," + std::to_string(n) + "," + cbk.to_string() + "\n";
        }
    }
    if (format == "csv") {
        write_output(csv, out);
    } else {
        write_output(homops::canonical_dump(json{{"table", rows}}), out);
    }
    return kExitPass;
}

int cmd_homology(int K, int lmin, int lmax, const homops::FieldSpec& field, bool stability,
                 const std::string& out) {
    if (K > 7) throw CLI::ValidationError("--K", "truncation beyond K = 7 is not feasible");
    if (lmax > 1) lmax = 1;  // the reduced complex vanishes above degree 1
    homops::NatComplex nat(K, lmin, lmax, field);
    homops::HomologyResult h = homology(nat.complex());
    std::vector<homops::OperationFamily> shs, bks;
    for (int k = 0; k <= K; ++k) {
        shs.push_back(homops::shuffle_family(K, k));
        bks.push_back(homops::connes_power_family(K, k));
    }
    json rows = json::array();
    for (int l = lmin; l <= lmax; ++l) {
        json row{{"degree", l}, {"dim", h.dim(l)}, {"basis", nat.basis_size(l)}};
        if (l == 0) row["sh_class_rank"] = nat.family_class_rank(shs);
        if (l == 1) row["B_class_rank"] = nat.family_class_rank(bks);
        if (stability) row["stable_dim"] = homops::NatComplex::stable_dim(K, l, field);
        rows.push_back(row);
    }
    json j{{"K", K}, {"field", field.to_string()}, {"table", rows}};
    write_output(homops::canonical_dump(j), out);
    return kExitPass;
}

int cmd_eval(const std::string& op_spec, const std::string& chain_arg, const std::string& algebra,
             int K, const std::string& out) {
    json opj = json::parse(op_spec);
    const homops::GradedCommutativeAlgebra& alg = homops::algebra_by_name(algebra);
    json cj = json::parse(chain_arg);
    if (opj.contains("family")) {
        homops::HochschildChain c = homops::chain_from_json(cj, alg);
        int maxlen = 1;
        for (const auto& [w, s] : c.terms()) maxlen = std::max(maxlen, static_cast<int>(w.size()));
        int Keff = K >= 0 ? K : maxlen - 1;
        homops::OperationFamily fam =
            family_by_name(opj.at("family").get<std::string>(), Keff, opj.value("k", 0));
        homops::HochschildChain r = act(fam, c);
        write_output(homops::canonical_dump(homops::chain_to_json(r)), out);
        return kExitPass;
    }
    homops::OperationSpec spec = homops::operation_spec_from_json(opj);
    homops::MultiChain c = homops::multichain_from_json(cj, alg, spec.n1, spec.m1);
    int maxlen = 1;
    for (const auto& [mw, s] : c.terms())
        for (const auto& w : mw) maxlen = std::max(maxlen, static_cast<int>(w.size()));
    int Keff = K >= 0 ? K : maxlen - 1;
    homops::MultiOperation x = homops::build_x_fs(spec, Keff);
    homops::MultiChain r = evaluate(x, c);
    write_output(homops::canonical_dump(homops::multichain_to_json(r)), out);
    return kExitPass;
}

int cmd_build(const std::string& spec_json, int K, const std::string& out) {
    homops::OperationSpec spec = homops::operation_spec_from_json(json::parse(spec_json));
    if (K > 5) throw CLI::ValidationError("--K", "component tables beyond K = 5 grow too large");
    homops::MultiOperation x = homops::build_x_fs(spec, K);
    write_output(homops::canonical_dump(homops::to_json(x)), out);
    return kExitPass;
}

int cmd_verify(const std::string& suite, const homops::Bounds& bounds, int threads, bool as_json,
               const std::string& out, const std::string& witness_out) {
    if (!homops::suite_exists(suite)) {
        std::cerr << "unknown suite '" << suite << "'; available:";
        for (const auto& s : homops::suite_names()) std::cerr << " " << s;
        std::cerr << "\n";
        return kExitUsage;
    }
    if (auto why = homops::infeasible_reason(suite, bounds)) {
        std::cerr << "infeasible bounds: " << *why << "\n";
        return kExitUsage;
    }
    homops::SuiteReport report = homops::run_suite(suite, bounds, threads);
    if (as_json) {
        write_output(homops::canonical_dump(report.to_json(bounds)), out);
    } else {
        write_output(report.to_text(), out);
    }
    if (!report.all_pass() && !witness_out.empty()) {
        for (const auto& c : report.checks) {
            if (c.pass) continue;
            std::ofstream f(witness_out, std::ios::binary);
            f << homops::canonical_dump(homops::witness_json(c, bounds));
            std::cerr << "witness for " << c.id << " written to " << witness_out << "\n";
            break;
        }
    }
    return report.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_replay(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        std::cerr << "cannot open witness file '" << path << "'\n";
        return kExitUsage;
    }
    json w = json::parse(f);
    homops::CheckOutcome out = homops::replay_witness(w);
    std::cout << (out.pass ? "pass" : "FAIL") << "  " << out.id << "\n";
    if (!out.pass) std::cout << out.witness.dump(2) << "\n";
    return out.pass ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact formal operations on Hochschild complexes"};
    app.require_subcommand(0, 1);

    std::string field_str = "fp:2147483647";
    std::string out_path;
    int threads = 1;
    std::string replay_path;
    app.add_option("--field", field_str, "coefficient field: q or fp:<prime>");
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--threads", threads, "parallel checks within a suite");
    app.add_option("--replay", replay_path, "re-run a failing check from its witness file");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    homops::Bounds bounds;
    bool verify_json = false;
    std::string witness_out = "witness.json";
    verify->add_option("suite", suite, "suite name (or 'all')");
    verify->add_option("--max-n", bounds.max_n, "word-index bound for componentwise identities");
    verify->add_option("--max-k", bounds.max_k, "weight bound for operation families");
    verify->add_option("--K", bounds.K, "truncation of the operation complex");
    verify->add_flag("--json", verify_json, "canonical JSON report");
    verify->add_option("--witness-out", witness_out, "where to write the first failure witness");
    verify->add_flag("--no-rational-confirm", "skip the rational confirmation pass");

    // op
    auto* op = app.add_subcommand("op", "emit one family component as canonical JSON");
    std::string op_family = "sh";
    int op_n = 0, op_k = 0;
    op->add_option("--family", op_family, "sh | lambda | l | B | Bk | R")->required();
    op->add_option("--n", op_n, "word index")->required();
    op->add_option("--k", op_k, "weight (or rotation count for R)");

    // homology
    auto* hom = app.add_subcommand("homology", "homology of the reduced truncated operation complex");
    int hK = 4, hlmin = -2, hlmax = 1;
    bool hstab = false;
    hom->add_option("--K", hK, "truncation");
    hom->add_option("--lmin", hlmin, "lowest degree");
    hom->add_option("--lmax", hlmax, "highest degree");
    hom->add_flag("--stability", hstab, "also report stable dimensions via K+1");

    // aw
    auto* awc = app.add_subcommand("aw", "pairing coefficients of sh^k and B^k against the circle classes");
    int aw_max_n = 6;
    std::string aw_format = "json";
    awc->add_option("--max-n", aw_max_n, "largest word index");
    awc->add_option("--format", aw_format, "json | csv");

    // eval
    auto* ev = app.add_subcommand("eval", "apply an operation to a chain");
    std::string ev_op, ev_chain, ev_algebra = "poly6";
    int ev_K = -1;
    ev->add_option("--op", ev_op, "family spec {\"family\":..,\"k\":..} or a full operation spec")->required();
    ev->add_option("--chain", ev_chain, "chain JSON (inline)")->required();
    ev->add_option("--algebra", ev_algebra, "hs1 | z2 | poly<m>");
    ev->add_option("--K", ev_K, "truncation (default: fit the chain)");

    // build
    auto* bd = app.add_subcommand("build", "emit the components of a generator operation");
    std::string bd_spec;
    int bd_K = 2;
    bd->add_option("--spec", bd_spec, "operation spec JSON")->required();
    bd->add_option("--K", bd_K, "truncation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        homops::FieldSpec field = homops::FieldSpec::parse(field_str);
        bounds.field = field;
        bounds.rational_confirm = verify->count("--no-rational-confirm") == 0;
        if (!replay_path.empty()) return cmd_replay(replay_path);
        if (verify->parsed()) return cmd_verify(suite, bounds, threads, verify_json, out_path, witness_out);
        if (op->parsed()) return cmd_op(op_family, op_n, op_k, out_path);
        if (hom->parsed()) return cmd_homology(hK, hlmin, hlmax, field, hstab, out_path);
        if (awc->parsed()) return cmd_aw(aw_max_n, aw_format, out_path);
        if (ev->parsed()) return cmd_eval(ev_op, ev_chain, ev_algebra, ev_K, out_path);
        if (bd->parsed()) return cmd_build(bd_spec, bd_K, out_path);
        std::cout << app.help();
        return kExitPass;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}
