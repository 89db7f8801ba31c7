#include <fstream>
#include <iostream>
#include "CLI11.hpp"
#include "eis/errors.hpp"
#include "eis/json_io.hpp"
#include "eis/selfcheck.hpp"

namespace {

using namespace eis;

// label grammar: E:l1,l2 | G:l1,l2 (single point)
//                E1:l1,l2 | G1:l1,l2 (Gamma_1 orbital sum)
//                E0:delta,l0 | G0:delta,l0 (Gamma_0 class sum)
struct ParsedLabel {
    char kind = 'E';
    char group = ' ';   // ' ' single point, '1', '0'
    long l1 = 0, l2 = 0;
};

ParsedLabel parse_label(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw parse_error("label: expected kind:l1,l2");
    std::string head = s.substr(0, colon);
    ParsedLabel out;
    if (head == "E" || head == "G") {
        out.kind = head[0];
    } else if (head == "E1" || head == "G1" || head == "E0" || head == "G0") {
        out.kind = head[0];
        out.group = head[1];
    } else {
        throw parse_error("label: unknown kind '" + head + "'");
    }
    auto comma = s.find(',', colon);
    if (comma == std::string::npos) throw parse_error("label: expected kind:l1,l2");
    try {
        out.l1 = std::stol(s.substr(colon + 1, comma - colon - 1));
        out.l2 = std::stol(s.substr(comma + 1));
    } catch (const std::exception&) {
        throw parse_error("label: invalid integers in '" + s + "'");
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw parse_error("cannot open output file: " + out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
}

std::pair<long, long> parse_levels(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw parse_error("levels: expected A..B");
    try {
        return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw parse_error("levels: invalid integers in '" + s + "'");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact Eisenstein series toolkit: cusps, orbits, bases, q-expansions,"
                 " Hecke action, nebentypus bases, and the invariant self-check"};
    app.require_subcommand(1);

    std::string group_spec, label_str, format = "json", out_path, levels_str, char_spec;
    long weight = 4, trunc = -1, p = 0, dd = 0, level = 0;
    bool unnormalized = false, verify = false;

    auto add_common = [&](CLI::App* cmd, bool with_group) {
        if (with_group)
            cmd->add_option("group", group_spec,
                            "group spec: gamma:N | gamma1:N | gamma0:N | gammaNt:N,t |"
                            " larcher:p,q,r,chi,tau | gens:N:a,b,c,d;...")
                ->required();
        cmd->add_option("--format", format, "output format: json | text");
        cmd->add_option("--out", out_path, "write output to this file");
    };

    auto* c_cusps = app.add_subcommand("cusps", "list the cusps of a group");
    add_common(c_cusps, true);
    auto* c_orbits = app.add_subcommand("orbits", "list the lattice orbits of a group");
    add_common(c_orbits, true);
    auto* c_basis = app.add_subcommand("basis", "emit an Eisenstein basis");
    add_common(c_basis, true);
    c_basis->add_option("--weight", weight, "weight k >= 2")->required();
    c_basis->add_option("--trunc", trunc, "truncation order in q_N units");
    c_basis->add_flag("--unnormalized", unnormalized, "use the unnormalized series family");
    auto* c_qexp = app.add_subcommand("qexp", "emit one series by label");
    add_common(c_qexp, true);
    c_qexp->add_option("--weight", weight, "weight k >= 2")->required();
    c_qexp->add_option("--label", label_str, "series label, e.g. G:0,0 or E1:2,1")->required();
    c_qexp->add_option("--trunc", trunc, "truncation order in q_N units");
    auto* c_hecke = app.add_subcommand("hecke", "apply diamond / T_p to an orbital-sum label");
    add_common(c_hecke, true);
    c_hecke->add_option("--weight", weight, "weight k >= 2")->required();
    c_hecke->add_option("--label", label_str, "orbital label, e.g. E1:2,1 or E0:0,1")->required();
    c_hecke->add_option("--p", p, "Hecke prime (applied after --d)");
    c_hecke->add_option("--d", dd, "diamond operator <d>");
    c_hecke->add_option("--trunc", trunc, "truncation for the verification report");
    c_hecke->add_flag("--verify", verify, "include the q-expansion verification report");
    auto* c_neben = app.add_subcommand("neben", "emit a nebentypus basis");
    add_common(c_neben, false);
    c_neben->add_option("--level", level, "level N >= 3")->required();
    c_neben->add_option("--char", char_spec, "character index in the enumeration order")
        ->required();
    c_neben->add_option("--weight", weight, "weight k >= 2")->required();
    c_neben->add_option("--trunc", trunc, "truncation order in q_N units");
    auto* c_self = app.add_subcommand("selfcheck", "run the invariant suite");
    add_common(c_self, false);
    c_self->add_option("--levels", levels_str, "level range A..B (caps the sweep)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (c_cusps->parsed()) {
        auto G = parse_group_spec(group_spec);
        auto cs = cusps(G);
        if (format == "json") {
            emit(cusps_to_json(cs).dump(2), out_path);
        } else {
            std::string s;
            for (const auto& c : cs)
                s += c.str() + "  amplitude=" + std::to_string(c.amplitude) +
                     (c.regular ? "  regular" : "  irregular") +
                     "  orbit_size=" + std::to_string(c.orbit_size) + "\n";
            emit(s, out_path);
        }
        return 0;
    }
    if (c_orbits->parsed()) {
        auto G = parse_group_spec(group_spec);
        auto os = orbits(G);
        if (format == "json") {
            emit(orbits_to_json(os).dump(2), out_path);
        } else {
            std::string s;
            for (const auto& O : os) {
                s += O.regular ? "regular  " : "irregular";
                for (const auto& pt : O.points)
                    s += " (" + std::to_string(pt.l1) + "," + std::to_string(pt.l2) + ")";
                s += "\n";
            }
            emit(s, out_path);
        }
        return 0;
    }
    if (c_basis->parsed()) {
        auto G = parse_group_spec(group_spec);
        long J = trunc >= 0 ? trunc : 30 * G.level;
        auto B = unnormalized ? unnormalized_basis(G, weight, J) : spectral_basis(G, weight, J);
        if (format == "json") {
            emit(basis_to_json(B).dump(2), out_path);
        } else {
            std::string s = B.kind + " basis for " + B.group_tag + ", weight " +
                            std::to_string(B.weight) + ", " +
                            std::to_string(B.elements.size()) + " element(s)\n";
            for (const auto& el : B.elements)
                s += "cusp " + el.cusp.str() + ":\n" + qexp_to_text(el.series);
            emit(s, out_path);
        }
        return 0;
    }
    if (c_qexp->parsed()) {
        auto G = parse_group_spec(group_spec);
        long N = G.level;
        long J = trunc >= 0 ? trunc : 30 * N;
        auto lb = parse_label(label_str);
        QExpansion f;
        if (lb.group == ' ') {
            auto pt = LatticePoint::make(N, lb.l1, lb.l2);
            f = lb.kind == 'G' ? g_series(pt, weight, J) : e_series(pt, weight, J);
        } else {
            HeckeLabel h = lb.group == '1' ? HeckeLabel::gamma1(N, lb.kind, lb.l1, lb.l2)
                                           : HeckeLabel::gamma0(N, lb.kind, lb.l1, lb.l2);
            f = label_qexp(h, weight, J);
        }
        emit(format == "json" ? qexp_to_json(f).dump(2) : qexp_to_text(f), out_path);
        return 0;
    }
    if (c_hecke->parsed()) {
        auto G = parse_group_spec(group_spec);
        long N = G.level;
        auto lb = parse_label(label_str);
        if (lb.group == ' ')
            throw parse_error("hecke: label must be an orbital sum (E1:/E0:/G1:/G0:)");
        HeckeLabel h = lb.group == '1' ? HeckeLabel::gamma1(N, lb.kind, lb.l1, lb.l2)
                                       : HeckeLabel::gamma0(N, lb.kind, lb.l1, lb.l2);
        auto c = single_label(h, weight);
        if (dd != 0) c = diamond(dd, c);
        if (p != 0) c = tp_label(p, c);
        Json j = label_combination_to_json(c);
        if (verify) {
            long J = trunc >= 0 ? trunc : 24 * N;
            QExpansion lhs = combination_qexp(c, J);
            QExpansion direct = label_qexp(h, weight, J);
            if (dd != 0) {
                auto cd = diamond(dd, single_label(h, weight));
                direct = combination_qexp(cd, J);
            }
            if (p != 0) direct = tp_qexp(direct, combination_qexp(diamond(p, dd != 0 ? diamond(dd, single_label(h, weight)) : single_label(h, weight)), J), p, weight).reindex(N);
            j["verified"] = qexp_equal(lhs, direct);
        }
        if (format == "json") {
            emit(j.dump(2), out_path);
        } else {
            std::string s;
            for (const auto& [l, coeff] : c.terms)
                s += "(" + cyc_to_text(coeff) + ") * " + std::string(1, l.kind) +
                     std::string(1, l.group) + ":(" + std::to_string(l.l1) + "," +
                     std::to_string(l.l2) + ")\n";
            if (verify) s += j["verified"].get<bool>() ? "verified: yes\n" : "verified: NO\n";
            emit(s, out_path);
        }
        return 0;
    }
    if (c_neben->parsed()) {
        long idx = 0;
        try {
            idx = std::stol(char_spec);
        } catch (const std::exception&) {
            throw parse_error("neben: --char must be a character index");
        }
        auto chars = enumerate_characters(level);
        if (idx < 0 || idx >= (long)chars.size())
            throw parse_error("neben: character index out of range");
        long J = trunc >= 0 ? trunc : 8 * level;
        auto B = nebentypus_basis(level, chars[idx], weight, J);
        if (format == "json") {
            emit(nebentypus_basis_to_json(B).dump(2), out_path);
        } else {
            std::string s = "nebentypus basis, level " + std::to_string(level) + ", character #" +
                            std::to_string(idx) + ", weight " + std::to_string(weight) + ", " +
                            std::to_string(B.elements.size()) + " element(s)\n";
            for (const auto& el : B.elements)
                s += "class (" + std::to_string(el.label.l1) + "," +
                     std::to_string(el.label.l2) + "):\n" + qexp_to_text(el.series);
            emit(s, out_path);
        }
        return 0;
    }
    if (c_self->parsed()) {
        SelfcheckConfig cfg;
        if (!levels_str.empty()) {
            auto [a, b] = parse_levels(levels_str);
            (void)a;
            cfg.orbit_max_level = std::min(cfg.orbit_max_level, b);
            cfg.dim_max_level = std::min(cfg.dim_max_level, b);
            cfg.roundtrip_max_level = std::min(cfg.roundtrip_max_level, b);
            cfg.hecke_max_level = std::min(cfg.hecke_max_level, b);
            cfg.neben_max_level = std::min(cfg.neben_max_level, b);
            cfg.zeta_max_level = std::min(cfg.zeta_max_level, b);
            cfg.inclusion_max_level = std::min(cfg.inclusion_max_level, b);
        }
        bool all = true;
        std::string s;
        for (const auto& r : run_selfcheck(cfg)) {
            s += std::string(r.pass ? "PASS" : "FAIL") + "  " + r.name + ": " + r.detail + "\n";
            all = all && r.pass;
        }
        emit(s, out_path);
        return all ? 0 : 3;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const eis::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const eis::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const eis::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
