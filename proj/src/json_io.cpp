#include "homops/json_io.hpp"

#include <nlohmann/json.hpp>

namespace homops {

json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const json& j) {
    if (j.is_number_integer()) return Scalar::integer(j.get<std::int64_t>());
    return Scalar::parse(j.get<std::string>());
}

json to_json(const FinSetMap& f) {
    return json{{"m", f.source}, {"n", f.target}, {"image", f.image}};
}

FinSetMap finset_map_from_json(const json& j) {
    return FinSetMap(j.at("m").get<int>(), j.at("n").get<int>(), j.at("image").get<std::vector<int>>());
}

json to_json(const Morphism& m) {
    json terms = json::array();
    for (const auto& [f, c] : m.terms()) terms.push_back(json{{"map", to_json(f)}, {"coeff", to_json(c)}});
    return json{{"source", m.source()}, {"target", m.target()}, {"terms", terms}};
}

Morphism morphism_from_json(const json& j) {
    Morphism m(j.at("source").get<int>(), j.at("target").get<int>());
    for (const auto& t : j.at("terms")) m.add_term(finset_map_from_json(t.at("map")), scalar_from_json(t.at("coeff")));
    return m;
}

json to_json(const OperationFamily& f) {
    json comps = json::array();
    for (int k = 0; k <= f.truncation(); ++k) comps.push_back(to_json(f.component(k)));
    return json{{"degree", f.degree()}, {"truncation", f.truncation()}, {"components", comps}};
}

json to_json(const OperationSpec& s) {
    json sj = json::object();
    for (const auto& [i, b] : s.s) sj[std::to_string(i)] = b;
    return json{{"sig", {s.n1, s.m1, s.n2, s.m2}}, {"f", s.f}, {"s", sj}, {"k", s.k}};
}

OperationSpec operation_spec_from_json(const json& j) {
    OperationSpec s;
    auto sig = j.at("sig");
    s.n1 = sig.at(0).get<int>();
    s.m1 = sig.at(1).get<int>();
    s.n2 = sig.at(2).get<int>();
    s.m2 = sig.at(3).get<int>();
    s.f = j.at("f").get<std::vector<int>>();
    if (j.contains("k")) s.k = j.at("k").get<std::vector<int>>();
    if (j.contains("s"))
        for (const auto& [key, val] : j.at("s").items()) s.s[std::stoi(key)] = val.get<int>();
    s.validate();
    return s;
}

json to_json(const MultiOperation& x) {
    json comps = json::array();
    for (const auto& [j, slot] : x.comps) {
        for (const auto& [v, m] : slot) {
            if (m.is_zero()) continue;
            comps.push_back(json{{"in", j}, {"out", v}, {"morphism", to_json(m)}});
        }
    }
    return json{{"sig", {x.n1, x.m1, x.n2, x.m2}}, {"truncation", x.K}, {"components", comps}};
}

json chain_to_json(const HochschildChain& c) {
    json terms = json::array();
    for (const auto& [w, s] : c.terms()) {
        json word = json::array();
        for (int i : w) word.push_back(c.algebra().label(i));
        terms.push_back(json{{"word", word}, {"coeff", to_json(s)}});
    }
    return json{{"algebra", c.algebra().name()}, {"terms", terms}};
}

HochschildChain chain_from_json(const json& j, const GradedCommutativeAlgebra& a) {
    HochschildChain c(a);
    for (const auto& t : j.at("terms")) {
        Word w;
        for (const auto& l : t.at("word")) w.push_back(a.index_of(l.get<std::string>()));
        c.add_term(w, scalar_from_json(t.at("coeff")));
    }
    return c;
}

json multichain_to_json(const MultiChain& c) {
    json terms = json::array();
    for (const auto& [mw, s] : c.terms()) {
        json factors = json::array();
        for (const auto& w : mw) {
            json word = json::array();
            for (int i : w) word.push_back(c.algebra().label(i));
            factors.push_back(word);
        }
        terms.push_back(json{{"factors", factors}, {"coeff", to_json(s)}});
    }
    return json{{"algebra", c.algebra().name()}, {"words", c.words()}, {"letters", c.letters()}, {"terms", terms}};
}

MultiChain multichain_from_json(const json& j, const GradedCommutativeAlgebra& a, int n1, int m1) {
    MultiChain c(a, n1, m1);
    for (const auto& t : j.at("terms")) {
        std::vector<Word> mw;
        for (const auto& f : t.at("factors")) {
            Word w;
            for (const auto& l : f) w.push_back(a.index_of(l.get<std::string>()));
            mw.push_back(std::move(w));
        }
        c.add_term(mw, scalar_from_json(t.at("coeff")));
    }
    return c;
}

const GradedCommutativeAlgebra& algebra_by_name(const std::string& name) {
    if (name == "hs1") return GradedCommutativeAlgebra::circle_cohomology();
    if (name == "z2") return GradedCommutativeAlgebra::group_ring_z2();
    if (name.rfind("poly", 0) == 0) return GradedCommutativeAlgebra::truncated_polynomial(std::stoi(name.substr(4)));
    throw std::invalid_argument("unknown algebra '" + name + "' (expected hs1, z2 or poly<m>)");
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace homops
