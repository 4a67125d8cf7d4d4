#include "eqindex/models.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eqindex {

namespace {

ModelManifold make_s2() {
    ModelManifold m;
    m.name = "s2";
    m.n = 2;
    m.curvature = CurvatureData::from_table(2, {{1, 2, 1, 2, Rational(1)}});
    m.volume = QPiScalar::pi_power(1, GRational(4));
    m.euler = 2;
    return m;
}

ModelManifold make_s4() {
    ModelManifold m;
    m.name = "s4";
    m.n = 4;
    std::vector<CurvatureData::Component> comps;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) comps.push_back({i, j, i, j, Rational(1)});
    m.curvature = CurvatureData::from_table(4, comps);
    m.volume = QPiScalar::pi_power(2, GRational(8, 3));
    m.signature = 0;
    m.euler = 2;
    return m;
}

// Fubini-Study with holomorphic sectional curvature 4 in the frame
// (e1, e2 = J e1, e3, e4 = J e3).
ModelManifold make_cp2() {
    ModelManifold m;
    m.name = "cp2";
    m.n = 4;
    m.curvature = CurvatureData::from_table(
        4, {
               {1, 2, 1, 2, Rational(4)},
               {3, 4, 1, 2, Rational(2)},
               {1, 2, 3, 4, Rational(2)},
               {3, 4, 3, 4, Rational(4)},
               {1, 3, 1, 3, Rational(1)},
               {2, 4, 1, 3, Rational(1)},
               {1, 3, 2, 4, Rational(1)},
               {2, 4, 2, 4, Rational(1)},
               {1, 4, 1, 4, Rational(1)},
               {2, 3, 1, 4, Rational(-1)},
               {1, 4, 2, 3, Rational(-1)},
               {2, 3, 2, 3, Rational(1)},
           });
    m.volume = QPiScalar::pi_power(2, GRational(1, 2));
    m.signature = 1;
    m.euler = 3;
    return m;
}

ModelManifold make_t4() {
    ModelManifold m;
    m.name = "t4";
    m.n = 4;
    m.curvature = CurvatureData::flat(4);
    m.volume = QPiScalar(1);
    m.signature = 0;
    m.euler = 0;
    return m;
}

}  // namespace

const std::vector<ModelManifold>& catalog() {
    static const std::vector<ModelManifold> models = [] {
        std::vector<ModelManifold> v;
        v.push_back(make_s2());
        v.push_back(make_s4());
        v.push_back(make_cp2());
        v.push_back(make_t4());
        ModelManifold s2xs2 = product(make_s2(), make_s2());
        s2xs2.name = "s2xs2";
        s2xs2.signature = 0;
        s2xs2.euler = 4;
        v.push_back(std::move(s2xs2));
        return v;
    }();
    return models;
}

const ModelManifold& find_model(const std::string& name,
                                const std::vector<ModelManifold>& extra) {
    for (const auto& m : extra)
        if (m.name == name) return m;
    for (const auto& m : catalog())
        if (m.name == name) return m;
    throw std::invalid_argument("unknown model '" + name + "'");
}

QPiScalar integrate(const FormPoly& form, const ModelManifold& m) {
    if (form.dimension() != m.n)
        throw std::invalid_argument("integrate: form dimension does not match model");
    return form.top_coefficient() * m.volume;
}

ModelManifold product(const ModelManifold& m1, const ModelManifold& m2) {
    ModelManifold m;
    m.name = m1.name + "x" + m2.name;
    m.n = m1.n + m2.n;
    m.volume = m1.volume * m2.volume;

    std::vector<CurvatureData::Component> comps;
    auto gather = [&comps](const CurvatureData& r, int offset) {
        const int n = r.dimension();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (const auto& [mask, c] : r.entry(i, j).components()) {
                    FormPoly::Mask mm = mask;
                    int k = std::countr_zero(mm);
                    mm &= mm - 1;
                    int l = std::countr_zero(mm);
                    comps.push_back({k + 1 + offset, l + 1 + offset, i + 1 + offset,
                                     j + 1 + offset, c.to_rational()});
                }
    };
    gather(m1.curvature, 0);
    gather(m2.curvature, m1.n);
    m.curvature = CurvatureData::from_table(m.n, comps);
    return m;
}

QPiScalar parse_volume(const std::string& text) {
    // [rational][*pi[^int]] with "pi" usable standalone.
    std::string s = text;
    Rational coeff(1);
    int k = 0;
    size_t pi_pos = s.find("pi");
    if (pi_pos != std::string::npos) {
        std::string head = s.substr(0, pi_pos);
        std::string tail = s.substr(pi_pos + 2);
        if (!head.empty()) {
            if (head.back() != '*')
                throw std::invalid_argument("parse_volume: expected '*' before pi");
            head.pop_back();
        }
        if (!head.empty()) coeff = Rational(head);
        k = 1;
        if (!tail.empty()) {
            if (tail[0] != '^')
                throw std::invalid_argument("parse_volume: expected '^' after pi");
            k = std::stoi(tail.substr(1));
        }
    } else {
        coeff = Rational(s);
    }
    coeff.canonicalize();
    return QPiScalar::pi_power(k, GRational(coeff));
}

std::vector<ModelManifold> load_models(std::istream& in) {
    std::vector<ModelManifold> out;
    std::string line;
    std::string name;
    int n = -1;
    QPiScalar volume;
    bool have_volume = false;
    std::vector<CurvatureData::Component> comps;
    std::optional<long> signature, euler;
    int lineno = 0;

    auto fail = [&lineno](const std::string& msg) {
        throw std::invalid_argument("model file line " + std::to_string(lineno) + ": " + msg);
    };

    auto flush = [&] {
        if (name.empty()) return;
        if (n < 0) fail("missing 'dim'");
        if (!have_volume) fail("missing 'volume'");
        ModelManifold m;
        m.name = name;
        m.n = n;
        m.volume = volume;
        m.signature = signature;
        m.euler = euler;
        try {
            m.curvature = CurvatureData::from_table(n, comps);
        } catch (const std::invalid_argument& e) {
            fail(std::string("rejected curvature table: ") + e.what());
        }
        out.push_back(std::move(m));
        name.clear();
        n = -1;
        have_volume = false;
        comps.clear();
        signature.reset();
        euler.reset();
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        if (word == "model") {
            flush();
            if (!(ls >> name)) fail("model needs a name");
        } else if (word == "dim") {
            if (!(ls >> n)) fail("dim needs an integer");
        } else if (word == "volume") {
            std::string v;
            if (!(ls >> v)) fail("volume needs a value");
            try {
                volume = parse_volume(v);
            } catch (const std::exception& e) {
                fail(std::string("bad volume: ") + e.what());
            }
            have_volume = true;
        } else if (word == "signature") {
            long v;
            if (!(ls >> v)) fail("signature needs an integer");
            signature = v;
        } else if (word == "euler") {
            long v;
            if (!(ls >> v)) fail("euler needs an integer");
            euler = v;
        } else if (word == "R") {
            CurvatureData::Component c;
            std::string value;
            if (!(ls >> c.k >> c.l >> c.i >> c.j >> value)) fail("R needs k l i j value");
            try {
                c.value = Rational(value);
                c.value.canonicalize();
            } catch (const std::exception&) {
                fail("bad rational '" + value + "'");
            }
            comps.push_back(c);
        } else if (word == "end") {
            flush();
        } else {
            fail("unknown directive '" + word + "'");
        }
    }
    flush();
    return out;
}

std::vector<ModelManifold> load_models_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open model file '" + path + "'");
    return load_models(in);
}

}  // namespace eqindex
