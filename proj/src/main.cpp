// speclab command-line driver: build catalog models, compute spectra,
// lattices, radicals, supports, rank functions and tube combinatorics, and
// run the verification suites.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "speclab/catmodel.hpp"
#include "speclab/common.hpp"
#include "speclab/render.hpp"
#include "speclab/spectra.hpp"
#include "speclab/tube.hpp"
#include "speclab/tube_oracle.hpp"
#include "speclab/verify.hpp"

namespace {

using namespace speclab;

struct ModelArgs {
    std::string builtin;
    std::string file;
    catmodel::BuiltinOptions opt;
    std::string lambdas_csv = "0,1,-1,inf";
};

struct CommonArgs {
    std::string format = "text";
    int jobs = 1;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

void attach_model_flags(CLI::App* cmd, ModelArgs& a) {
    cmd->add_option("--model", a.builtin, "builtin model name");
    cmd->add_option("--model-file", a.file, "model document path");
    cmd->add_option("--n", a.opt.n, "An size / tube rank");
    cmd->add_option("--p", a.opt.p, "stmod prime");
    cmd->add_option("--nmax", a.opt.n_max, "Kronecker preprojective/preinjective bound");
    cmd->add_option("--jmax", a.opt.j_max, "Kronecker regular length bound");
    cmd->add_option("--lambdas", a.lambdas_csv, "Kronecker regular parameters (csv)");
    cmd->add_option("--bound", a.opt.bound, "specZ prime bound");
    cmd->add_option("--K", a.opt.K, "truncation depth of the infinity models");
}

void attach_common_flags(CLI::App* cmd, CommonArgs& c) {
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "doc", "dot"}));
    cmd->add_option("--jobs", c.jobs, "worker threads for enumerations");
}

catmodel::Model resolve_model(ModelArgs& a) {
    if (!a.builtin.empty() && !a.file.empty())
        throw usage_error("give either --model or --model-file, not both");
    if (a.builtin.empty() && a.file.empty())
        throw usage_error("no model selected (use --model NAME or --model-file PATH)");
    if (!a.file.empty()) return catmodel::load_model(a.file);
    a.opt.lambdas = split_csv(a.lambdas_csv);
    return catmodel::builtin_model(a.builtin, a.opt);
}

void emit(const std::string& s) { std::cout << s; }
void emit(const render::json& doc) { std::cout << doc.dump(2) << "\n"; }

void emit_space(const spectra::FiniteSpace& sp, const CommonArgs& c,
                const std::string& dot_name) {
    if (c.format == "text") emit(render::space_text(sp));
    else if (c.format == "doc") emit(render::space_doc(sp));
    else emit(render::space_dot(sp, dot_name));
}

// Parse "(a,b),(c,d)" into arcs on n marked points.
tube::ArcCollection parse_arcs(int n, const std::string& text) {
    tube::ArcCollection col;
    col.rank = n;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
    };
    auto number = [&] {
        size_t start = i;
        while (i < text.size() && (std::isdigit(text[i]) || text[i] == '-')) ++i;
        if (i == start) throw usage_error("bad arc list near position " + std::to_string(start));
        return std::stoi(text.substr(start, i - start));
    };
    skip();
    while (i < text.size()) {
        if (text[i] != '(') throw usage_error("bad arc list near position " + std::to_string(i));
        ++i;
        int a = number();
        if (i >= text.size() || text[i] != ',')
            throw usage_error("bad arc list near position " + std::to_string(i));
        ++i;
        int b = number();
        if (i >= text.size() || text[i] != ')')
            throw usage_error("bad arc list near position " + std::to_string(i));
        ++i;
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw usage_error("arc endpoint outside the marked points of a rank-" +
                              std::to_string(n) + " tube");
        col.arcs.push_back({a, b});
        skip();
    }
    return col;
}

std::string tube_objects_str(const std::vector<tube::TubeObject>& objs) {
    std::string out = "{";
    for (size_t i = 0; i < objs.size(); ++i) {
        if (i) out += ",";
        out += objs[i].str();
    }
    return out + "}";
}

std::string arcs_str(const tube::ArcCollection& col) {
    std::string out = "{";
    for (size_t i = 0; i < col.arcs.size(); ++i) {
        if (i) out += ",";
        out += col.arcs[i].str();
    }
    return out + "}";
}

rankfn::RankFunction rank_from_values(const catmodel::Model& m, const std::string& csv) {
    std::vector<std::string> toks = split_csv(csv);
    if (int(toks.size()) != m.k())
        throw usage_error("--values needs exactly " + std::to_string(m.k()) +
                          " comma-separated integers for model " + m.name);
    rankfn::RankFunction rho;
    for (const std::string& t : toks) {
        try {
            size_t used = 0;
            rho.values.push_back(std::stol(t, &used));
            if (used != t.size()) throw std::invalid_argument("");
        } catch (...) {
            throw usage_error("bad rank value '" + t + "'");
        }
    }
    return rho;
}

int run(int argc, char** argv) {
    CLI::App app{"speclab: spectra, lattices and rank functions of finite catalog models"};
    app.require_subcommand(1);

    ModelArgs margs;
    CommonArgs cargs;

    // ---- model ----
    auto* cmd_model = app.add_subcommand("model", "print or save a model document");
    attach_model_flags(cmd_model, margs);
    attach_common_flags(cmd_model, cargs);
    std::string model_out;
    cmd_model->add_option("--out", model_out, "write the model document to a file");

    // ---- spaces ----
    auto* cmd_sspec = app.add_subcommand("sspec", "shift-spectrum of a model");
    attach_model_flags(cmd_sspec, margs);
    attach_common_flags(cmd_sspec, cargs);
    bool criterion = false;
    cmd_sspec->add_flag("--criterion", criterion,
                        "also report the per-class discreteness criterion");

    auto* cmd_shspec = app.add_subcommand("shspec", "shift-homological spectrum");
    attach_model_flags(cmd_shspec, margs);
    attach_common_flags(cmd_shspec, cargs);

    auto* cmd_lattice = app.add_subcommand("lattice", "thick-subcategory lattice");
    attach_model_flags(cmd_lattice, margs);
    attach_common_flags(cmd_lattice, cargs);

    auto* cmd_matsui = app.add_subcommand("matsui", "Matsui spectrum of the thick lattice");
    attach_model_flags(cmd_matsui, margs);
    attach_common_flags(cmd_matsui, cargs);

    auto* cmd_fspcnt = app.add_subcommand("fspcnt", "up-set closed-set space of the thick lattice");
    attach_model_flags(cmd_fspcnt, margs);
    attach_common_flags(cmd_fspcnt, cargs);

    // ---- radicals and supports ----
    auto* cmd_radical = app.add_subcommand("radical", "radical of a thick subcategory");
    attach_model_flags(cmd_radical, margs);
    attach_common_flags(cmd_radical, cargs);
    std::string thick_arg;
    cmd_radical->add_option("--thick", thick_arg, "generator classes (csv; closure applied)")
        ->required();

    auto* cmd_psi = app.add_subcommand("psi", "radical thick subcategory of a point set");
    attach_model_flags(cmd_psi, margs);
    attach_common_flags(cmd_psi, cargs);
    std::string points_arg;
    cmd_psi->add_option("--points", points_arg, "spectrum points (csv of indices or names)")
        ->required();

    auto* cmd_support = app.add_subcommand("support", "support of a formal object");
    attach_model_flags(cmd_support, margs);
    attach_common_flags(cmd_support, cargs);
    std::string object_arg;
    cmd_support->add_option("--object", object_arg, "formal object, e.g. \"A,B[1],2*C\"")
        ->required();

    // ---- rank ----
    auto* cmd_rank = app.add_subcommand("rank", "rank functions");
    cmd_rank->require_subcommand(1);
    std::string rank_object, rank_values;
    bool rank_lower = false;

    auto* cmd_theta = cmd_rank->add_subcommand("theta", "theta rank function of an object");
    attach_model_flags(cmd_theta, margs);
    attach_common_flags(cmd_theta, cargs);
    cmd_theta->add_option("--object", rank_object, "formal object")->required();
    cmd_theta->add_flag("--lower", rank_lower, "use Hom out of the object instead of into it");

    auto* cmd_kernel = cmd_rank->add_subcommand("kernel", "kernel of a rank function");
    attach_model_flags(cmd_kernel, margs);
    attach_common_flags(cmd_kernel, cargs);
    cmd_kernel->add_option("--object", rank_object, "formal object (kernel of its theta)");
    cmd_kernel->add_option("--values", rank_values, "explicit per-class values (csv)");

    auto* cmd_decompose = cmd_rank->add_subcommand("decompose",
                                                   "decompose into irreducible candidates");
    attach_model_flags(cmd_decompose, margs);
    attach_common_flags(cmd_decompose, cargs);
    cmd_decompose->add_option("--object", rank_object, "formal object (decompose its theta)");
    cmd_decompose->add_option("--values", rank_values, "explicit per-class values (csv)");

    auto* cmd_check = cmd_rank->add_subcommand("check", "rank-function axioms on the model");
    attach_model_flags(cmd_check, margs);
    attach_common_flags(cmd_check, cargs);
    cmd_check->add_option("--object", rank_object, "formal object (check its theta)");
    cmd_check->add_option("--values", rank_values, "explicit per-class values (csv)");

    // ---- tube ----
    auto* cmd_tube = app.add_subcommand("tube", "tube combinatorics");
    cmd_tube->require_subcommand(1);
    int tube_n = 3, tube_len = 0;
    std::string tube_arcs;

    auto* cmd_tenum = cmd_tube->add_subcommand("enumerate", "non-crossing arc collections");
    cmd_tenum->add_option("--n", tube_n, "tube rank")->required();
    attach_common_flags(cmd_tenum, cargs);

    auto* cmd_twide = cmd_tube->add_subcommand("wide", "wide subcategory of an arc collection");
    cmd_twide->add_option("--n", tube_n, "tube rank")->required();
    cmd_twide->add_option("--arcs", tube_arcs, "arc list, e.g. \"(0,2),(2,0)\"")->required();
    cmd_twide->add_option("--length", tube_len, "truncation length (default 3n)");
    attach_common_flags(cmd_twide, cargs);

    auto* cmd_tperp = cmd_tube->add_subcommand("perp", "perpendicular object of an arc collection");
    cmd_tperp->add_option("--n", tube_n, "tube rank")->required();
    cmd_tperp->add_option("--arcs", tube_arcs, "arc list")->required();
    cmd_tperp->add_option("--length", tube_len, "truncation length (default 3n)");
    attach_common_flags(cmd_tperp, cargs);

    auto* cmd_tverify = cmd_tube->add_subcommand("verify", "closed forms against the quiver oracle");
    cmd_tverify->add_option("--n", tube_n, "tube rank")->required();
    cmd_tverify->add_option("--length", tube_len, "truncation length (default 3n)");
    attach_common_flags(cmd_tverify, cargs);

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "verification suites");
    cmd_verify->require_subcommand(1);
    ModelArgs vargs;
    auto* cmd_vkron = cmd_verify->add_subcommand("kronecker", "Kronecker catalog suite");
    auto* cmd_vtable = cmd_verify->add_subcommand("table1", "comparison-table suite");
    auto* cmd_vdinf = cmd_verify->add_subcommand("dinfinity", "D-infinity suite");
    auto* cmd_vall = cmd_verify->add_subcommand("all", "all suites");
    for (CLI::App* c : {cmd_vkron, cmd_vtable, cmd_vdinf, cmd_vall}) {
        attach_model_flags(c, vargs);
        attach_common_flags(c, cargs);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (cargs.jobs < 1) throw usage_error("--jobs must be at least 1");

    if (*cmd_model) {
        catmodel::Model m = resolve_model(margs);
        if (!model_out.empty()) catmodel::save_model(m, model_out);
        if (cargs.format == "text") emit(render::model_text(m));
        else if (cargs.format == "doc") emit(catmodel::model_to_json(m));
        else throw usage_error("the model document has no graph form; use --format text|doc");
        return exit_ok;
    }

    if (*cmd_sspec) {
        catmodel::Model m = resolve_model(margs);
        spectra::Spectrum sp = spectra::shift_spectrum(m);
        if (criterion) {
            std::vector<bool> crit = spectra::is_discrete_criterion(m);
            if (cargs.format == "doc") {
                render::json doc = render::space_doc(sp.space);
                render::json per;
                for (int c = 0; c < m.k(); ++c) per[m.classes[c].name] = bool(crit[c]);
                doc["discreteness_criterion"] = per;
                emit(doc);
            } else if (cargs.format == "text") {
                emit(render::space_text(sp.space));
                for (int c = 0; c < m.k(); ++c)
                    std::cout << "criterion " << m.classes[c].name << ": "
                              << (crit[c] ? "yes" : "no") << "\n";
            } else {
                throw usage_error("--criterion has no graph form; use --format text|doc");
            }
        } else {
            emit_space(sp.space, cargs, "sspec");
        }
        return exit_ok;
    }

    if (*cmd_shspec) {
        catmodel::Model m = resolve_model(margs);
        emit_space(spectra::shift_homological_spectrum(m).space, cargs, "shspec");
        return exit_ok;
    }

    if (*cmd_lattice) {
        catmodel::Model m = resolve_model(margs);
        spectra::ThickLattice lat = spectra::enumerate_thicks(m, cargs.jobs);
        if (cargs.format == "text") emit(render::lattice_text(m, lat));
        else if (cargs.format == "doc") emit(render::lattice_doc(m, lat));
        else emit(render::lattice_dot(m, lat, "thicks"));
        return exit_ok;
    }

    if (*cmd_matsui) {
        catmodel::Model m = resolve_model(margs);
        emit_space(spectra::matsui_spectrum(m, spectra::enumerate_thicks(m, cargs.jobs)), cargs,
                   "matsui");
        return exit_ok;
    }

    if (*cmd_fspcnt) {
        catmodel::Model m = resolve_model(margs);
        emit_space(spectra::fspcnt_space(m, spectra::enumerate_thicks(m, cargs.jobs)), cargs,
                   "fspcnt");
        return exit_ok;
    }

    if (*cmd_radical) {
        catmodel::Model m = resolve_model(margs);
        Mask gen = catmodel::classes_of(catmodel::parse_formal(m, thick_arg));
        Mask L = m.mode == catmodel::Mode::locally_finite ? catmodel::thick_closure(m, gen) : gen;
        spectra::Spectrum sp = spectra::shift_spectrum(m);
        Mask rad = spectra::radical(sp, L);
        if (cargs.format == "doc") {
            render::json doc;
            doc["kind"] = "radical";
            doc["model"] = m.name;
            doc["thick"] = mask_ids(L);
            doc["radical"] = mask_ids(rad);
            doc["is_radical"] = (rad == L);
            emit(doc);
        } else if (cargs.format == "text") {
            std::cout << "thick: " << m.set_str(L) << "\n";
            std::cout << "radical: " << m.set_str(rad) << "\n";
            std::cout << "is radical: " << (rad == L ? "yes" : "no") << "\n";
        } else {
            throw usage_error("radical output has no graph form; use --format text|doc");
        }
        return exit_ok;
    }

    if (*cmd_psi) {
        catmodel::Model m = resolve_model(margs);
        spectra::Spectrum sp = spectra::shift_spectrum(m);
        Mask pts = 0;
        for (const std::string& tok : split_csv(points_arg)) {
            int idx = -1;
            if (!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos)
                idx = std::stoi(tok);
            else
                for (int j = 0; j < sp.space.n(); ++j)
                    if (sp.space.names[j] == tok) idx = j;
            if (idx < 0 || idx >= sp.space.n())
                throw usage_error("unknown spectrum point '" + tok + "'");
            pts |= bit(idx);
        }
        Mask th = spectra::psi(sp, pts);
        if (cargs.format == "doc") {
            render::json doc;
            doc["kind"] = "psi";
            doc["model"] = m.name;
            doc["points"] = mask_ids(pts);
            doc["thick"] = mask_ids(th);
            emit(doc);
        } else if (cargs.format == "text") {
            std::cout << "points: " << popcount(pts) << " of " << sp.space.n() << "\n";
            std::cout << "psi: " << m.set_str(th) << "\n";
        } else {
            throw usage_error("psi output has no graph form; use --format text|doc");
        }
        return exit_ok;
    }

    if (*cmd_support) {
        catmodel::Model m = resolve_model(margs);
        spectra::Spectrum sp = spectra::shift_spectrum(m);
        catmodel::FormalObject obj = catmodel::parse_formal(m, object_arg);
        Mask s = spectra::support(m, obj, sp);
        if (cargs.format == "doc") {
            render::json doc;
            doc["kind"] = "support";
            doc["model"] = m.name;
            doc["object"] = catmodel::format_formal(m, obj);
            doc["points"] = mask_ids(s);
            render::json names = render::json::array();
            for (int j : mask_ids(s)) names.push_back(sp.space.names[j]);
            doc["point_names"] = names;
            emit(doc);
        } else if (cargs.format == "text") {
            std::cout << "object: " << catmodel::format_formal(m, obj) << "\n";
            std::cout << "support: " << popcount(s) << " of " << sp.space.n() << " points\n";
            for (int j : mask_ids(s)) std::cout << "point " << j << ": " << sp.space.names[j] << "\n";
        } else {
            throw usage_error("support output has no graph form; use --format text|doc");
        }
        return exit_ok;
    }

    if (*cmd_rank) {
        catmodel::Model m = resolve_model(margs);
        auto get_rho = [&]() {
            if (!rank_object.empty() && !rank_values.empty())
                throw usage_error("give either --object or --values, not both");
            if (!rank_object.empty())
                return rankfn::theta_upper(m, catmodel::parse_formal(m, rank_object));
            if (!rank_values.empty()) return rank_from_values(m, rank_values);
            throw usage_error("give --object or --values");
        };
        if (*cmd_theta) {
            catmodel::FormalObject obj = catmodel::parse_formal(m, rank_object);
            rankfn::RankFunction rho =
                rank_lower ? rankfn::theta_lower(m, obj) : rankfn::theta_upper(m, obj);
            if (cargs.format == "doc") emit(render::rank_doc(m, rho));
            else if (cargs.format == "text") emit(render::rank_text(m, rho));
            else throw usage_error("rank output has no graph form; use --format text|doc");
            return exit_ok;
        }
        if (*cmd_kernel) {
            rankfn::RankFunction rho = get_rho();
            Mask ker = rankfn::kernel(rho, m);
            spectra::Spectrum sp = spectra::shift_spectrum(m);
            bool radical = spectra::radical(sp, ker) == ker;
            if (cargs.format == "doc") {
                render::json doc;
                doc["kind"] = "rank_kernel";
                doc["model"] = m.name;
                doc["kernel"] = mask_ids(ker);
                doc["is_radical"] = radical;
                emit(doc);
            } else if (cargs.format == "text") {
                std::cout << "kernel: " << m.set_str(ker) << "\n";
                std::cout << "is radical: " << (radical ? "yes" : "no") << "\n";
            } else {
                throw usage_error("kernel output has no graph form; use --format text|doc");
            }
            return exit_ok;
        }
        if (*cmd_decompose) {
            rankfn::RankFunction rho = get_rho();
            rankfn::Decomposition dec = rankfn::decompose(rho, m);
            if (cargs.format == "doc") {
                render::json doc;
                doc["kind"] = "rank_decomposition";
                doc["model"] = m.name;
                doc["ok"] = dec.ok;
                if (dec.ok) {
                    render::json mults;
                    for (int c = 0; c < m.k(); ++c)
                        mults[m.classes[c].name] = dec.multiplicities[c];
                    doc["multiplicities"] = mults;
                } else {
                    doc["note"] = dec.note;
                }
                emit(doc);
            } else if (cargs.format == "text") {
                if (dec.ok) {
                    std::cout << "decomposition found\n";
                    for (int c = 0; c < m.k(); ++c)
                        if (dec.multiplicities[c] != 0)
                            std::cout << "candidate " << m.classes[c].name << ": "
                                      << dec.multiplicities[c] << "\n";
                } else {
                    std::cout << "no decomposition: " << dec.note << "\n";
                }
            } else {
                throw usage_error("decompose output has no graph form; use --format text|doc");
            }
            return exit_ok;
        }
        if (*cmd_check) {
            rankfn::RankFunction rho = get_rho();
            rankfn::AxiomReport rep = rankfn::check_axioms(rho, m, m.triangles);
            if (cargs.format == "doc") emit(render::axioms_doc(rep));
            else if (cargs.format == "text") emit(render::axioms_text(rep));
            else throw usage_error("axiom reports have no graph form; use --format text|doc");
            return rep.pass() ? exit_ok : exit_verify;
        }
    }

    if (*cmd_tube) {
        if (*cmd_tenum) {
            std::vector<tube::ArcCollection> all = tube::enumerate_noncrossing(tube_n);
            if (cargs.format == "doc") {
                render::json doc;
                doc["kind"] = "noncrossing_collections";
                doc["rank"] = tube_n;
                doc["collections"] = render::json::array();
                for (const auto& col : all) {
                    render::json arcs = render::json::array();
                    for (const auto& a : col.arcs) arcs.push_back(render::json::array({a.start, a.end}));
                    doc["collections"].push_back(arcs);
                }
                emit(doc);
            } else if (cargs.format == "text") {
                std::cout << "non-crossing collections on " << tube_n << " points: " << all.size()
                          << "\n";
                for (const auto& col : all) std::cout << arcs_str(col) << "\n";
            } else {
                throw usage_error("collection lists have no graph form; use --format text|doc");
            }
            return exit_ok;
        }
        int L = tube_len > 0 ? tube_len : tube::default_L_max(tube_n);
        if (*cmd_twide) {
            tube::ArcCollection col = parse_arcs(tube_n, tube_arcs);
            std::vector<tube::TubeObject> w = tube::wide_from_arcs(col, L);
            if (cargs.format == "doc") {
                render::json doc;
                doc["kind"] = "wide_subcategory";
                doc["rank"] = tube_n;
                doc["arcs"] = arcs_str(col);
                render::json objs = render::json::array();
                for (const auto& o : w) objs.push_back(o.str());
                doc["objects"] = objs;
                emit(doc);
            } else if (cargs.format == "text") {
                std::cout << "arcs: " << arcs_str(col) << "\n";
                std::cout << "wide (length <= " << L << "): " << tube_objects_str(w) << "\n";
            } else {
                throw usage_error("wide sets have no graph form; use --format text|doc");
            }
            return exit_ok;
        }
        if (*cmd_tperp) {
            tube::ArcCollection col = parse_arcs(tube_n, tube_arcs);
            std::vector<tube::TubeObject> z = tube::perp_object(col);
            std::vector<tube::TubeObject> p = tube::perp_set(z, tube_n, L);
            std::sort(z.begin(), z.end());
            if (cargs.format == "doc") {
                render::json doc;
                doc["kind"] = "perpendicular";
                doc["rank"] = tube_n;
                doc["arcs"] = arcs_str(col);
                render::json zs = render::json::array();
                for (const auto& o : z) zs.push_back(o.str());
                doc["perp_object"] = zs;
                render::json ps = render::json::array();
                for (const auto& o : p) ps.push_back(o.str());
                doc["perp_set"] = ps;
                emit(doc);
            } else if (cargs.format == "text") {
                std::cout << "arcs: " << arcs_str(col) << "\n";
                std::cout << "perp-object: " << tube_objects_str(z) << "\n";
                std::cout << "perp (length <= " << L << "): " << tube_objects_str(p) << "\n";
            } else {
                throw usage_error("perpendiculars have no graph form; use --format text|doc");
            }
            return exit_ok;
        }
        if (*cmd_tverify) {
            verify::Report rep;
            std::vector<tube::TubeObject> objs = tube::objects_up_to(tube_n, L);
            bool hom_ok = true, ext_ok = true;
            for (const auto& a : objs)
                for (const auto& b : objs) {
                    hom_ok = hom_ok && tube::hom_nonzero(a, b) == (tube_oracle::oracle_hom_dim(a, b) > 0);
                    ext_ok = ext_ok && tube::ext_nonzero(a, b) == (tube_oracle::oracle_ext_dim(a, b) > 0);
                }
            std::string scope = "all pairs, length <= " + std::to_string(L);
            rep.add("tube/hom vs quiver oracle (" + scope + ")", "agree",
                    hom_ok ? "agree" : "disagree", "nilpotent cyclic-quiver representations");
            rep.add("tube/ext vs quiver oracle (" + scope + ")", "agree",
                    ext_ok ? "agree" : "disagree", "nilpotent cyclic-quiver representations");
            // The empty collection keeps its two trivial conventions (an empty
            // filtration closure, and a vacuous perpendicular condition that
            // admits everything), so the identity is checked on the others.
            bool wide_ok = true;
            for (const auto& col : tube::enumerate_noncrossing(tube_n)) {
                if (col.arcs.empty()) continue;
                auto w = tube::wide_from_arcs(col, L);
                auto p = tube::perp_set(tube::perp_object(col), tube_n, L);
                wide_ok = wide_ok && w == p;
            }
            rep.add("tube/wide = perp of perp-object (all non-empty non-crossing collections)",
                    "agree", wide_ok ? "agree" : "disagree",
                    "filtration closure vs Hom/Ext vanishing");
            if (cargs.format == "doc") emit(render::report_doc(rep));
            else emit(render::report_text(rep));
            return rep.pass() ? exit_ok : exit_verify;
        }
    }

    if (*cmd_verify) {
        vargs.opt.lambdas = split_csv(vargs.lambdas_csv);
        verify::Report rep;
        if (*cmd_vkron) rep = verify::verify_kronecker(vargs.opt);
        else if (*cmd_vtable) rep = verify::verify_table1(vargs.opt);
        else if (*cmd_vdinf) rep = verify::verify_dinfinity(vargs.opt);
        else rep = verify::verify_all(vargs.opt);
        if (cargs.format == "doc") emit(render::report_doc(rep));
        else if (cargs.format == "text") emit(render::report_text(rep));
        else throw usage_error("reports have no graph form; use --format text|doc");
        return rep.pass() ? exit_ok : exit_verify;
    }

    throw usage_error("no subcommand selected");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const model_error& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return exit_model;
    } catch (const guard_error& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return exit_guard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_model;
    }
}
