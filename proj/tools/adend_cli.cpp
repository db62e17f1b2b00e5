// Command-line front end for libadend.  All functionality goes through the
// public C API; this file only does argument plumbing, file IO and output
// formatting.

#include <adend/adend.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

bool g_json = false;

[[noreturn]] void die(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(kExitError);
}

void check(adend_status st) {
    if (st != ADEND_OK) die(adend_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) die("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct AlgebraHandle {
    adend_algebra* ptr = nullptr;
    ~AlgebraHandle() { adend_algebra_free(ptr); }
};

struct BimoduleHandle {
    adend_bimodule* ptr = nullptr;
    ~BimoduleHandle() { adend_bimodule_free(ptr); }
};

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { adend_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

void load_algebra(const std::string& path, AlgebraHandle& h) {
    check(adend_algebra_parse(read_file(path).c_str(), &h.ptr));
}

// bimodule files may name the base algebra by path; inline it for the C API
std::string load_bimodule_text(const std::string& path) {
    std::string text = read_file(path);
    json j = json::parse(text);
    if (j.is_object() && j.contains("base") && j["base"].is_string()) {
        std::filesystem::path base = j["base"].get<std::string>();
        if (base.is_relative()) base = std::filesystem::path(path).parent_path() / base;
        j["base"] = json::parse(read_file(base.string()));
        return j.dump();
    }
    return text;
}

// "a=b,c=d" -> {"a":"b","c":"d"}
std::string binding_json(const std::string& entries) {
    json j = json::object();
    std::stringstream ss(entries);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) die("binding entries look like slot=op, got '" + item + "'");
        j[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return j.dump();
}

// map the DSL symbols used in identities to whatever ops the file declares
std::string identity_aliases(const std::string& algebra_text, const std::string& overrides) {
    json alg = json::parse(algebra_text);
    json binding = overrides.empty() ? json::object() : json::parse(overrides);
    auto have = [&](const std::string& op) {
        return alg.contains("ops") && alg["ops"].contains(op);
    };
    auto alias = [&](const std::string& sym, std::initializer_list<const char*> targets) {
        if (binding.contains(sym) || have(sym)) return;
        for (const char* t : targets)
            if (have(t)) {
                binding[sym] = t;
                return;
            }
    };
    alias(".", {"mul", "dot"});
    alias(">", {"tri_r", "succ", "q_r"});
    alias("<", {"tri_l", "prec", "q_l"});
    alias("*", {"star", "mul"});
    alias("o", {"circ", "diamond"});
    return binding.dump();
}

void emit_algebra(adend_algebra* alg, const std::string& out_path) {
    OwnedString s;
    check(adend_algebra_to_json(alg, &s.ptr));
    if (out_path.empty()) {
        std::cout << s.str() << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) die("cannot write '" + out_path + "'");
        out << s.str() << "\n";
    }
}

int report_exit(const std::string& report, const std::string& key) {
    json j = json::parse(report);
    bool ok = j.value(key, false);
    if (g_json) {
        std::cout << report << "\n";
    } else {
        std::cout << (ok ? "holds" : "FAILS") << "\n";
        if (!ok && j.contains("failed_identity"))
            std::cout << "  failed identity: " << j["failed_identity"].get<std::string>() << "\n";
        if (!ok && j.contains("witness")) std::cout << "  witness: " << j["witness"].dump() << "\n";
    }
    return ok ? kExitHolds : kExitFails;
}

void print_report(const std::string& report) { std::cout << report << "\n"; }

bool wild_match(const std::string& pat, const std::string& s) {
    std::size_t p = 0, i = 0, star = std::string::npos, mark = 0;
    while (i < s.size()) {
        if (p < pat.size() && (pat[p] == s[i] && pat[p] != '*')) {
            ++p;
            ++i;
        } else if (p < pat.size() && pat[p] == '*') {
            star = p++;
            mark = i;
        } else if (star != std::string::npos) {
            p = star + 1;
            i = ++mark;
        } else {
            return false;
        }
    }
    while (p < pat.size() && pat[p] == '*') ++p;
    return p == pat.size();
}

std::vector<std::string> expand_glob(const std::string& pattern) {
    namespace fs = std::filesystem;
    fs::path p(pattern);
    fs::path dir = p.parent_path().empty() ? fs::path(".") : p.parent_path();
    std::string name = p.filename().string();
    std::vector<std::string> out;
    if (name.find('*') == std::string::npos) {
        out.push_back(pattern);
        return out;
    }
    if (!fs::is_directory(dir)) die("glob directory '" + dir.string() + "' does not exist");
    for (const auto& entry : fs::directory_iterator(dir))
        if (wild_match(name, entry.path().filename().string()))
            out.push_back(entry.path().string());
    std::sort(out.begin(), out.end());
    if (out.empty()) die("glob '" + pattern + "' matched no files");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"adend: exact structure-constant computer algebra for (anti-)dendriform "
                 "and Novikov-type algebras"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "emit machine-readable JSON reports");
    app.failure_message([](const CLI::App* a, const CLI::Error& e) {
        return CLI::FailureMessage::simple(a, e);
    });

    // ---- check -----------------------------------------------------------
    auto* cmd_check = app.add_subcommand("check", "verify identities, bundles, bimodules");
    cmd_check->require_subcommand(1);

    std::string arg_identity, arg_file, arg_bind, arg_bundle, arg_q, arg_glob;
    auto* chk_id = cmd_check->add_subcommand("identity", "check one DSL identity on an algebra");
    chk_id->add_option("identity", arg_identity, "identity, e.g. \"x,y: x.y - y.x = 0\"")->required();
    chk_id->add_option("file", arg_file, "algebra JSON file")->required();
    chk_id->add_option("--bind", arg_bind, "symbol=op,... overrides");

    auto* chk_st = cmd_check->add_subcommand("structure", "check a named axiom bundle");
    chk_st->add_option("bundle", arg_bundle, "registry name or bundle JSON file")->required();
    chk_st->add_option("file", arg_file, "algebra JSON file");
    chk_st->add_option("--bind", arg_bind, "slot=op,... binding");
    chk_st->add_option("--q", arg_q, "rational q for q-parameterized bundles");
    chk_st->add_option("--glob", arg_glob, "check every matching file, e.g. 'dir/*.json'");

    auto* chk_bm = cmd_check->add_subcommand("bimodule", "verify the three bimodule axioms");
    chk_bm->add_option("file", arg_file, "bimodule JSON file")->required();

    auto* chk_ls = cmd_check->add_subcommand("bundles", "list the built-in axiom bundles");

    std::string arg_bundle_b;
    unsigned arg_dim = 2, arg_count = 0;
    unsigned long long arg_seed = 1;
    auto* chk_eq = cmd_check->add_subcommand("equiv", "agreement of two bundles");
    chk_eq->add_option("bundle_a", arg_bundle, "first bundle")->required();
    chk_eq->add_option("bundle_b", arg_bundle_b, "second bundle")->required();
    chk_eq->add_option("file", arg_file, "algebra JSON file (omit with --random)");
    chk_eq->add_option("--bind", arg_bind, "slot=op,... binding");
    chk_eq->add_option("--q", arg_q, "rational q");
    chk_eq->add_option("--random", arg_count, "test on N seeded random two-op algebras");
    chk_eq->add_option("--dim", arg_dim, "dimension for --random (default 2)");
    chk_eq->add_option("--seed", arg_seed, "RNG seed for --random");

    // ---- transform / construct -------------------------------------------
    std::string arg_ops, arg_out, arg_out_ops;
    auto* cmd_tr = app.add_subcommand("transform",
                                      "sum | commutator | pre-lie | anti-pre-lie | q-pair | "
                                      "q-pair-alt | q-single");
    std::string arg_kind;
    cmd_tr->add_option("kind", arg_kind, "transform kind")->required();
    cmd_tr->add_option("file", arg_file, "algebra JSON file")->required();
    cmd_tr->add_option("--ops", arg_ops, "comma-separated source op names")->required();
    cmd_tr->add_option("--q", arg_q, "rational q (q-kinds only)");
    cmd_tr->add_option("--out-ops", arg_out_ops, "names for the created ops");
    cmd_tr->add_option("-o,--output", arg_out, "write result algebra here (default stdout)");

    auto* cmd_co = app.add_subcommand("construct", "double | semidirect");
    cmd_co->require_subcommand(1);
    auto* co_double = cmd_co->add_subcommand("double", "double space of a two-op algebra");
    co_double->add_option("file", arg_file)->required();
    co_double->add_option("--ops", arg_ops, "tri_r,tri_l (default)");
    co_double->add_option("-o,--output", arg_out);
    auto* co_semi = cmd_co->add_subcommand("semidirect", "semidirect product of a bimodule file");
    co_semi->add_option("file", arg_file)->required();
    co_semi->add_option("-o,--output", arg_out);

    // ---- op ----------------------------------------------------------------
    std::string arg_map, arg_op = "mul";
    auto* cmd_op = app.add_subcommand("op", "anti-O / anti-Rota-Baxter / anti-1-cocycle layer");
    cmd_op->require_subcommand(1);
    auto* op_rb = cmd_op->add_subcommand("anti-rb", "check an anti-Rota-Baxter operator");
    op_rb->add_option("file", arg_file, "algebra JSON")->required();
    op_rb->add_option("--map", arg_map, "matrix JSON file")->required();
    op_rb->add_option("--op", arg_op, "designated associative op (default mul)");
    auto* op_ao = cmd_op->add_subcommand("anti-o", "check an anti-O-operator on a bimodule");
    op_ao->add_option("file", arg_file, "bimodule JSON")->required();
    op_ao->add_option("--map", arg_map, "matrix JSON file")->required();
    auto* op_ac = cmd_op->add_subcommand("anti-cocycle", "check an anti-1-cocycle on a bimodule");
    op_ac->add_option("file", arg_file, "bimodule JSON")->required();
    op_ac->add_option("--map", arg_map, "matrix JSON file")->required();
    auto* op_ind = cmd_op->add_subcommand("induce", "induced ops on the module of an anti-O-operator");
    op_ind->add_option("file", arg_file, "bimodule JSON")->required();
    op_ind->add_option("--map", arg_map, "matrix JSON file")->required();
    op_ind->add_option("-o,--output", arg_out);
    auto* op_hat = cmd_op->add_subcommand("embed-hat", "semidirect algebra plus the hat operator");
    op_hat->add_option("file", arg_file, "bimodule JSON")->required();
    op_hat->add_option("--map", arg_map, "matrix JSON file")->required();
    op_hat->add_option("-o,--output", arg_out);

    // ---- derive ------------------------------------------------------------
    auto* cmd_de = app.add_subcommand("derive", "annihilators | invariants | mult-op");
    cmd_de->require_subcommand(1);
    auto* de_ann = cmd_de->add_subcommand("annihilators", "Ann^L, Ann^R, product span");
    de_ann->add_option("file", arg_file)->required();
    de_ann->add_option("--op", arg_op);
    auto* de_inv = cmd_de->add_subcommand("invariants", "isomorphism invariant vector");
    de_inv->add_option("file", arg_file)->required();
    de_inv->add_option("--ops", arg_ops, "comma-separated op names")->required();
    std::string arg_side = "left", arg_vec;
    auto* de_mo = cmd_de->add_subcommand("mult-op", "matrix of L_op(x) or R_op(x)");
    de_mo->add_option("file", arg_file)->required();
    de_mo->add_option("--op", arg_op);
    de_mo->add_option("--side", arg_side, "left|right");
    de_mo->add_option("--vec", arg_vec, "coordinates, e.g. '[\"1\",\"0\"]'")->required();

    // ---- form ---------------------------------------------------------------
    std::string arg_form = "B";
    auto* cmd_fo = app.add_subcommand("form", "bilinear-form predicates and reconstructions");
    cmd_fo->require_subcommand(1);
    auto* fo_cl = cmd_fo->add_subcommand("classify", "symmetry/nondegeneracy/cocycle report");
    fo_cl->add_option("file", arg_file)->required();
    fo_cl->add_option("--form", arg_form);
    fo_cl->add_option("--op", arg_op);
    auto* fo_in = cmd_fo->add_subcommand("invariance", "anti-dendriform invariance of a form");
    fo_in->add_option("file", arg_file)->required();
    fo_in->add_option("--form", arg_form);
    fo_in->add_option("--ops", arg_ops, "tri_r,tri_l (default)");
    auto* fo_ia = cmd_fo->add_subcommand("invariance-apl", "anti-pre-Lie invariance of a form");
    fo_ia->add_option("file", arg_file)->required();
    fo_ia->add_option("--form", arg_form);
    fo_ia->add_option("--op", arg_op, "the anti-pre-Lie op (default mul)");
    auto* fo_re = cmd_fo->add_subcommand("reconstruct",
                                         "compatible anti-dendriform pair from a nondegenerate "
                                         "commutative Connes cocycle");
    fo_re->add_option("file", arg_file)->required();
    fo_re->add_option("--form", arg_form);
    fo_re->add_option("--op", arg_op);
    fo_re->add_option("-o,--output", arg_out);
    auto* fo_se = cmd_fo->add_subcommand("semidirect",
                                         "A x| A* with the canonical pairing form attached");
    fo_se->add_option("file", arg_file)->required();
    fo_se->add_option("--ops", arg_ops, "tri_r,tri_l (default)");
    fo_se->add_option("-o,--output", arg_out);
    auto* fo_eq = cmd_fo->add_subcommand("equivalence", "bimodule-equivalence characterization");
    fo_eq->add_option("file", arg_file)->required();
    fo_eq->add_option("--form", arg_form);
    fo_eq->add_option("--ops", arg_ops, "tri_r,tri_l (default)");

    // ---- solve -------------------------------------------------------------
    auto* cmd_so = app.add_subcommand("solve", "Groebner-basis searches");
    cmd_so->require_subcommand(1);
    auto* so_comp = cmd_so->add_subcommand("compatible",
                                           "all compatible anti-dendriform structures on an "
                                           "associative algebra");
    so_comp->add_option("file", arg_file)->required();
    so_comp->add_option("--op", arg_op);
    auto* so_rb = cmd_so->add_subcommand("anti-rb", "all anti-Rota-Baxter operators");
    so_rb->add_option("file", arg_file)->required();
    so_rb->add_option("--op", arg_op);
    unsigned arg_free_dim = 1;
    std::string arg_pins;
    auto* so_free = cmd_so->add_subcommand("free", "all anti-dendriform algebras of a dimension");
    so_free->add_option("--dim", arg_free_dim, "dimension (capped; ADEND_MAX_DIM overrides)")
        ->required();
    so_free->add_option("--pin", arg_pins, "entry=value,... pins, e.g. r_112=1");
    std::string arg_file_b;
    auto* so_iso = cmd_so->add_subcommand("iso", "isomorphism search between two algebras");
    so_iso->add_option("file_a", arg_file)->required();
    so_iso->add_option("file_b", arg_file_b)->required();
    so_iso->add_option("--ops", arg_ops, "comma-separated op names (default: all common ops)");

    // ---- catalog -------------------------------------------------------------
    auto* cmd_ca = app.add_subcommand("catalog", "built-in worked examples");
    cmd_ca->require_subcommand(1);
    cmd_ca->add_subcommand("list", "ids and descriptions");
    std::string arg_id, arg_params;
    auto* ca_show = cmd_ca->add_subcommand("show", "print one entry as JSON");
    ca_show->add_option("id", arg_id)->required();
    ca_show->add_option("--param", arg_params, "name=value,...");
    auto* ca_exp = cmd_ca->add_subcommand("export", "write one entry to a file");
    ca_exp->add_option("id", arg_id)->required();
    ca_exp->add_option("--param", arg_params, "name=value,...");
    ca_exp->add_option("-o,--output", arg_out)->required();
    cmd_ca->add_subcommand("self-test", "run every entry's expected assertions");

    // ---- validate --------------------------------------------------------------
    auto* cmd_va = app.add_subcommand("validate", "structural validation of an algebra file");
    cmd_va->add_option("file", arg_file)->required();

    CLI11_PARSE(app, argc, argv);

    auto csv_to_json = [](const std::string& csv) {
        json arr = json::array();
        std::stringstream ss(csv);
        std::string item;
        while (std::getline(ss, item, ',')) arr.push_back(item);
        return arr.dump();
    };
    auto kv_to_json = [](const std::string& kv) {
        json obj = json::object();
        if (kv.empty()) return obj.dump();
        std::stringstream ss(kv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) die("expected name=value, got '" + item + "'");
            obj[item.substr(0, eq)] = item.substr(eq + 1);
        }
        return obj.dump();
    };
    auto pair_ops = [&](const char* dflt_r, const char* dflt_l) {
        if (arg_ops.empty()) return std::make_pair(std::string(dflt_r), std::string(dflt_l));
        auto comma = arg_ops.find(',');
        if (comma == std::string::npos) die("--ops needs two comma-separated names");
        return std::make_pair(arg_ops.substr(0, comma), arg_ops.substr(comma + 1));
    };
    auto bundle_arg = [&](const std::string& b) {
        if (b.size() > 5 && b.substr(b.size() - 5) == ".json") return read_file(b);
        return b;
    };

    try {
        if (chk_id->parsed()) {
            std::string text = read_file(arg_file);
            AlgebraHandle alg;
            check(adend_algebra_parse(text.c_str(), &alg.ptr));
            std::string binding =
                identity_aliases(text, arg_bind.empty() ? "" : binding_json(arg_bind));
            OwnedString rep;
            check(adend_check_identity(alg.ptr, arg_identity.c_str(), binding.c_str(), &rep.ptr));
            return report_exit(rep.str(), "holds");
        }
        if (chk_st->parsed()) {
            std::vector<std::string> files;
            if (!arg_glob.empty())
                files = expand_glob(arg_glob);
            else if (!arg_file.empty())
                files.push_back(arg_file);
            else
                die("check structure needs a file or --glob");
            std::string bundle = bundle_arg(arg_bundle);
            std::string binding = binding_json(arg_bind.empty() ? "" : arg_bind);
            int exit_code = kExitHolds;
            for (const auto& f : files) {
                AlgebraHandle alg;
                load_algebra(f, alg);
                OwnedString rep;
                check(adend_check_structure(alg.ptr, bundle.c_str(), binding.c_str(),
                                            arg_q.empty() ? nullptr : arg_q.c_str(), &rep.ptr));
                json j = json::parse(rep.str());
                bool ok = j["holds"].get<bool>();
                if (files.size() > 1 || !arg_glob.empty())
                    std::cout << f << ": " << (ok ? "holds" : "FAILS") << "\n";
                else if (g_json)
                    std::cout << rep.str() << "\n";
                else
                    std::cout << (ok ? "holds" : "FAILS") << "\n";
                if (!ok) exit_code = kExitFails;
            }
            return exit_code;
        }
        if (chk_bm->parsed()) {
            BimoduleHandle m;
            check(adend_bimodule_parse(load_bimodule_text(arg_file).c_str(), &m.ptr));
            OwnedString rep;
            check(adend_bimodule_check(m.ptr, &rep.ptr));
            return report_exit(rep.str(), "holds");
        }
        if (chk_ls->parsed()) {
            OwnedString rep;
            check(adend_registry_list(&rep.ptr));
            if (g_json) {
                print_report(rep.str());
            } else {
                for (const auto& b : json::parse(rep.str())) {
                    std::cout << b["name"].get<std::string>() << "  (slots:";
                    for (const auto& s : b["slots"]) std::cout << " " << s.get<std::string>();
                    std::cout << (b["q_parameterized"].get<bool>() ? "; takes --q" : "") << ")\n";
                }
            }
            return kExitHolds;
        }
        if (chk_eq->parsed()) {
            OwnedString rep;
            if (arg_count > 0) {
                check(adend_check_equiv_random(bundle_arg(arg_bundle).c_str(),
                                               bundle_arg(arg_bundle_b).c_str(), arg_dim,
                                               arg_count, arg_seed, &rep.ptr));
            } else {
                if (arg_file.empty()) die("check equiv needs a file or --random N");
                AlgebraHandle alg;
                load_algebra(arg_file, alg);
                check(adend_check_equiv(alg.ptr, bundle_arg(arg_bundle).c_str(),
                                        bundle_arg(arg_bundle_b).c_str(),
                                        binding_json(arg_bind.empty() ? "" : arg_bind).c_str(),
                                        arg_q.empty() ? nullptr : arg_q.c_str(), &rep.ptr));
            }
            return report_exit(rep.str(), "agree");
        }

        if (cmd_tr->parsed()) {
            AlgebraHandle alg, out;
            load_algebra(arg_file, alg);
            check(adend_transform(alg.ptr, arg_kind.c_str(), csv_to_json(arg_ops).c_str(),
                                  arg_q.empty() ? nullptr : arg_q.c_str(),
                                  arg_out_ops.empty() ? nullptr : csv_to_json(arg_out_ops).c_str(),
                                  &out.ptr));
            emit_algebra(out.ptr, arg_out);
            return kExitHolds;
        }
        if (co_double->parsed()) {
            AlgebraHandle alg, out;
            load_algebra(arg_file, alg);
            auto [r, l] = pair_ops("tri_r", "tri_l");
            check(adend_construct_double(alg.ptr, r.c_str(), l.c_str(), &out.ptr));
            emit_algebra(out.ptr, arg_out);
            return kExitHolds;
        }
        if (co_semi->parsed()) {
            BimoduleHandle m;
            AlgebraHandle out;
            check(adend_bimodule_parse(load_bimodule_text(arg_file).c_str(), &m.ptr));
            check(adend_bimodule_semidirect(m.ptr, &out.ptr));
            emit_algebra(out.ptr, arg_out);
            return kExitHolds;
        }

        if (op_rb->parsed()) {
            AlgebraHandle alg;
            load_algebra(arg_file, alg);
            OwnedString rep;
            check(adend_check_anti_rb(alg.ptr, arg_op.c_str(), read_file(arg_map).c_str(),
                                      &rep.ptr));
            return report_exit(rep.str(), "is_operator");
        }
        if (op_ao->parsed() || op_ac->parsed() || op_ind->parsed() || op_hat->parsed()) {
            BimoduleHandle m;
            check(adend_bimodule_parse(load_bimodule_text(arg_file).c_str(), &m.ptr));
            std::string mat = read_file(arg_map);
            if (op_ao->parsed()) {
                OwnedString rep;
                check(adend_check_anti_o(m.ptr, mat.c_str(), &rep.ptr));
                return report_exit(rep.str(), "is_operator");
            }
            if (op_ac->parsed()) {
                OwnedString rep;
                check(adend_check_anti_cocycle(m.ptr, mat.c_str(), &rep.ptr));
                return report_exit(rep.str(), "holds");
            }
            if (op_ind->parsed()) {
                AlgebraHandle out;
                check(adend_induced_ops(m.ptr, mat.c_str(), &out.ptr));
                emit_algebra(out.ptr, arg_out);
                return kExitHolds;
            }
            AlgebraHandle out;
            OwnedString hat;
            check(adend_embed_hat(m.ptr, mat.c_str(), &out.ptr, &hat.ptr));
            std::cout << "hat: " << hat.str() << "\n";
            emit_algebra(out.ptr, arg_out);
            return kExitHolds;
        }

        if (de_ann->parsed() || de_inv->parsed() || de_mo->parsed()) {
            AlgebraHandle alg;
            load_algebra(arg_file, alg);
            OwnedString rep;
            if (de_ann->parsed())
                check(adend_annihilators(alg.ptr, arg_op.c_str(), &rep.ptr));
            else if (de_inv->parsed())
                check(adend_invariants(alg.ptr, csv_to_json(arg_ops).c_str(), &rep.ptr));
            else
                check(adend_mult_operator(alg.ptr, arg_op.c_str(), arg_side.c_str(),
                                          arg_vec.c_str(), &rep.ptr));
            print_report(rep.str());
            return kExitHolds;
        }

        if (fo_cl->parsed()) {
            AlgebraHandle alg;
            load_algebra(arg_file, alg);
            OwnedString rep;
            check(adend_form_classify(alg.ptr, arg_form.c_str(), arg_op.c_str(), &rep.ptr));
            print_report(rep.str());
            json j = json::parse(rep.str());
            return j["commutative_connes"].get<bool>() && j["nondegenerate"].get<bool>()
                       ? kExitHolds
                       : kExitFails;
        }
        if (fo_in->parsed()) {
            AlgebraHandle alg;
            load_algebra(arg_file, alg);
            auto [r, l] = pair_ops("tri_r", "tri_l");
            OwnedString rep;
            check(adend_form_invariance(alg.ptr, arg_form.c_str(), r.c_str(), l.c_str(), &rep.ptr));
            return report_exit(rep.str(), "invariant");
        }
        if (fo_ia->parsed()) {
            AlgebraHandle alg;
            load_algebra(arg_file, alg);
            OwnedString rep;
            check(adend_form_invariance_apl(alg.ptr, arg_form.c_str(), arg_op.c_str(), &rep.ptr));
            return report_exit(rep.str(), "holds");
        }
        if (fo_re->parsed()) {
            AlgebraHandle alg, out;
            load_algebra(arg_file, alg);
            OwnedString rep;
            check(adend_form_reconstruct(alg.ptr, arg_form.c_str(), arg_op.c_str(), &out.ptr,
                                         &rep.ptr));
            if (g_json) print_report(rep.str());
            emit_algebra(out.ptr, arg_out);
            json j = json::parse(rep.str());
            return j["anti_dendriform"].get<bool>() && j["sums_to_product"].get<bool>()
                       ? kExitHolds
                       : kExitFails;
        }
        if (fo_se->parsed()) {
            AlgebraHandle alg, out;
            load_algebra(arg_file, alg);
            auto [r, l] = pair_ops("tri_r", "tri_l");
            check(adend_form_semidirect(alg.ptr, r.c_str(), l.c_str(), &out.ptr));
            emit_algebra(out.ptr, arg_out);
            return kExitHolds;
        }
        if (fo_eq->parsed()) {
            AlgebraHandle alg;
            load_algebra(arg_file, alg);
            auto [r, l] = pair_ops("tri_r", "tri_l");
            OwnedString rep;
            check(adend_form_equivalence(alg.ptr, arg_form.c_str(), r.c_str(), l.c_str(), &rep.ptr));
            return report_exit(rep.str(), "agree");
        }

        if (so_comp->parsed() || so_rb->parsed()) {
            AlgebraHandle alg;
            load_algebra(arg_file, alg);
            OwnedString rep;
            if (so_comp->parsed())
                check(adend_solve_compatible(alg.ptr, arg_op.c_str(), &rep.ptr));
            else
                check(adend_solve_anti_rb(alg.ptr, arg_op.c_str(), &rep.ptr));
            print_report(rep.str());
            return kExitHolds;
        }
        if (so_free->parsed()) {
            OwnedString rep;
            check(adend_solve_free(arg_free_dim, kv_to_json(arg_pins).c_str(), &rep.ptr));
            print_report(rep.str());
            return kExitHolds;
        }
        if (so_iso->parsed()) {
            AlgebraHandle a, b;
            load_algebra(arg_file, a);
            load_algebra(arg_file_b, b);
            std::string ops_json;
            if (arg_ops.empty()) {
                json ja = json::parse(read_file(arg_file)), jb = json::parse(read_file(arg_file_b));
                json common = json::array();
                if (ja.contains("ops") && jb.contains("ops"))
                    for (const auto& [name, t] : ja["ops"].items())
                        if (jb["ops"].contains(name)) common.push_back(name);
                if (common.empty()) die("the two files share no op names; pass --ops");
                ops_json = common.dump();
            } else {
                ops_json = csv_to_json(arg_ops);
            }
            OwnedString rep;
            check(adend_solve_iso(a.ptr, b.ptr, ops_json.c_str(), &rep.ptr));
            print_report(rep.str());
            json j = json::parse(rep.str());
            return j["consistent"].get<bool>() ? kExitHolds : kExitFails;
        }

        if (cmd_ca->parsed()) {
            if (cmd_ca->get_subcommand("list")->parsed()) {
                OwnedString rep;
                check(adend_catalog_list(&rep.ptr));
                print_report(rep.str());
                return kExitHolds;
            }
            if (ca_show->parsed() || ca_exp->parsed()) {
                AlgebraHandle alg;
                check(adend_catalog_load(arg_id.c_str(), kv_to_json(arg_params).c_str(),
                                         &alg.ptr));
                emit_algebra(alg.ptr, ca_exp->parsed() ? arg_out : std::string());
                return kExitHolds;
            }
            OwnedString rep;
            check(adend_catalog_self_test(&rep.ptr));
            json j = json::parse(rep.str());
            if (g_json)
                print_report(rep.str());
            else
                for (const auto& item : j["items"])
                    std::cout << item["entry"].get<std::string>() << " / "
                              << item["bundle"].get<std::string>() << ": "
                              << (item["pass"].get<bool>() ? "ok" : "MISMATCH") << "\n";
            return j["all_pass"].get<bool>() ? kExitHolds : kExitFails;
        }

        if (cmd_va->parsed()) {
            OwnedString rep;
            check(adend_algebra_validate(read_file(arg_file).c_str(), &rep.ptr));
            json j = json::parse(rep.str());
            if (g_json)
                print_report(rep.str());
            else if (!j["valid"].get<bool>())
                std::cerr << "invalid: " << j["error"].get<std::string>() << "\n";
            return j["valid"].get<bool>() ? kExitHolds : kExitError;
        }
    } catch (const json::exception& e) {
        die(std::string("malformed JSON: ") + e.what());
    }
    return kExitError;
}
