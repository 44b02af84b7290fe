#include "twistforge/report.hpp"

#include "twistforge/errors.hpp"

#include <fstream>
#include <iostream>
#include <json.hpp>

namespace twistforge::cli {

using nlohmann::json;
using ncalg::NCPoly;
using ncalg::Presentation;
using ncalg::Sort;
using ncalg::Word;

std::string twist_report_json(const twists::TwistReport &rep, bool with_timings) {
    json j;
    j["twist"] = rep.twist;
    j["algebra"] = rep.algebra;
    j["t_order"] = rep.t_order;
    j["residual_terms"] = rep.residual_terms;
    j["counit_ok"] = rep.counit_ok;
    j["pass"] = rep.pass;
    j["elapsed_ms"] = with_timings ? rep.elapsed_ms : 0;
    j["notes"] = rep.notes;
    return j.dump(2) + "\n";
}

std::string suite_report_json(const std::vector<SuiteResult> &results, unsigned long seed,
                              bool with_timings, long elapsed_ms) {
    json j;
    j["seed"] = seed;
    j["elapsed_ms"] = with_timings ? elapsed_ms : 0;
    json arr = json::array();
    bool all = true;
    for (const auto &r : results) {
        json e;
        e["name"] = r.name;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        arr.push_back(e);
        all = all && r.pass;
    }
    j["results"] = arr;
    j["pass"] = all;
    // run defaults recorded for reproducibility
    j["defaults"] = {{"t_order_single_exponential", 4},
                     {"t_order_threefold_products", 3},
                     {"t_order_scalar_identities", 6},
                     {"zeta", "t"}};
    return j.dump(2) + "\n";
}

void emit_report(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw EngineError("cannot open report path: " + path);
    os << text;
    if (!os) throw EngineError("failed writing report: " + path);
}

namespace {

json word_to_json(const Presentation &p, const Word &w) {
    json j;
    json seq = json::array();
    for (int id : w.seq) seq.push_back(p.symbol(id).name);
    j["seq"] = seq;
    j["cartan"] = w.cartan;
    return j;
}

Word word_from_json(const Presentation &p, const json &j) {
    std::vector<int> seq;
    for (const auto &n : j.at("seq")) {
        auto id = p.find_symbol(n.get<std::string>());
        if (!id) throw EngineError("unknown symbol in presentation file");
        seq.push_back(*id);
    }
    return p.make_word(seq, j.at("cartan").get<std::vector<int>>());
}

json poly_to_json(const Presentation &p, const NCPoly &x) {
    json arr = json::array();
    for (const auto &[w, c] : x.terms()) {
        json t;
        t["coeff"] = c.str();
        t["word"] = word_to_json(p, w);
        arr.push_back(t);
    }
    return arr;
}

const char *sort_name(Sort s) {
    switch (s) {
    case Sort::Lowering: return "lowering";
    case Sort::Cartan: return "cartan";
    case Sort::Raising: return "raising";
    case Sort::Generic: return "generic";
    }
    return "generic";
}

Sort sort_from(const std::string &s) {
    if (s == "lowering") return Sort::Lowering;
    if (s == "cartan") return Sort::Cartan;
    if (s == "raising") return Sort::Raising;
    return Sort::Generic;
}

// Minimal exact parser for the coeff string format: integer-coefficient
// polynomials in sparse c*q^k form, as "(num)/(den)" or "num".
coeff::QPoly parse_poly_str(const std::string &s) {
    using coeff::Rational;
    std::vector<Rational> coeffs;
    size_t i = 0;
    auto skip = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    bool first = true;
    while (true) {
        skip();
        if (i >= s.size()) break;
        int sign = 1;
        if (!first || s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            else if (s[i] != '+') throw EngineError("bad scalar: " + s);
            ++i;
            skip();
        }
        first = false;
        mpz_class num = 1;
        bool have_num = false;
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            std::string d;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) d += s[i++];
            num = mpz_class(d);
            have_num = true;
        }
        skip();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip();
        }
        int k = 0;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            k = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                int esign = 1;
                if (s[i] == '-') {
                    esign = -1;
                    ++i;
                }
                std::string d;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) d += s[i++];
                k = esign * std::stoi(d);
            }
        } else if (!have_num) {
            throw EngineError("bad scalar term: " + s);
        }
        if (k < 0) throw EngineError("negative q power inside polynomial: " + s);
        if ((int)coeffs.size() <= k) coeffs.resize(k + 1, Rational(0));
        coeffs[k] += Rational(sign) * Rational(num);
    }
    return coeff::QPoly::from_coeffs(std::move(coeffs));
}

coeff::QRatFunc parse_scalar(const std::string &s) {
    auto slash = s.find(")/(");
    if (s.size() > 1 && s.front() == '(' && slash != std::string::npos && s.back() == ')') {
        std::string num = s.substr(1, slash - 1);
        std::string den = s.substr(slash + 3, s.size() - slash - 4);
        return coeff::QRatFunc(parse_poly_str(num), parse_poly_str(den));
    }
    return coeff::QRatFunc(parse_poly_str(s), coeff::QPoly(coeff::Rational(1)));
}

} // namespace

std::string presentation_to_json(const Presentation &p) {
    json j;
    j["name"] = p.name;
    json syms = json::array();
    for (int i = 0; i < p.n_symbols(); ++i) {
        json s;
        s["name"] = p.symbol(i).name;
        s["sort"] = sort_name(p.symbol(i).sort);
        s["grading"] = p.symbol(i).grading;
        s["precedence"] = p.precedence(i);
        syms.push_back(s);
    }
    j["symbols"] = syms;
    j["cartan"] = p.cartan_names();
    json pairing = json::array();
    for (int c = 0; c < p.cartan_rank(); ++c) {
        json row = json::array();
        for (int s = 0; s < p.n_symbols(); ++s) row.push_back(p.pairing(c, s));
        pairing.push_back(row);
    }
    j["pairing"] = pairing;
    json rules = json::array();
    for (const auto &r : p.rules()) {
        json jr;
        json lhs = json::array();
        for (int id : r.lhs) lhs.push_back(p.symbol(id).name);
        jr["lhs"] = lhs;
        json rhs = json::array();
        for (const auto &[shift, poly] : r.rhs) {
            json e;
            e["t"] = shift;
            e["poly"] = poly_to_json(p, poly);
            rhs.push_back(e);
        }
        jr["rhs"] = rhs;
        rules.push_back(jr);
    }
    j["rules"] = rules;
    return j.dump(2) + "\n";
}

Presentation presentation_from_json(const std::string &text) {
    json j = json::parse(text);
    Presentation p;
    p.name = j.at("name").get<std::string>();
    for (const auto &s : j.at("symbols")) {
        int id = p.add_symbol({s.at("name").get<std::string>(), sort_from(s.at("sort")),
                               s.at("grading").get<std::vector<int>>()});
        p.set_precedence(id, s.at("precedence").get<int>());
    }
    for (const auto &c : j.at("cartan")) p.add_cartan(c.get<std::string>());
    const auto &pairing = j.at("pairing");
    for (int c = 0; c < p.cartan_rank(); ++c)
        for (int s = 0; s < p.n_symbols(); ++s) p.set_pairing(c, s, pairing[c][s].get<int>());
    for (const auto &r : j.at("rules")) {
        std::vector<int> lhs;
        for (const auto &n : r.at("lhs")) lhs.push_back(*p.find_symbol(n.get<std::string>()));
        std::map<int, NCPoly> rhs;
        for (const auto &e : r.at("rhs")) {
            NCPoly poly;
            for (const auto &t : e.at("poly"))
                poly.add_term(word_from_json(p, t.at("word")), parse_scalar(t.at("coeff")));
            rhs[e.at("t").get<int>()] = std::move(poly);
        }
        p.add_rule_raw(std::move(lhs), std::move(rhs));
    }
    p.finalize();
    return p;
}

} // namespace twistforge::cli
