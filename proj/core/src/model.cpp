#include "rbsys/model.hpp"

#include <algorithm>
#include <sstream>

#include "rbsys/errors.hpp"

namespace rbsys {

namespace {

struct Line {
    size_t number;
    std::string text;
};

[[noreturn]] void syntax_error(size_t line, size_t column, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": " + what);
}

std::vector<std::string> tokens_of(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

size_t parse_index(const std::string& tok, size_t line) {
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            syntax_error(line, 1, "expected a non-negative index, got '" + tok + "'");
    return static_cast<size_t>(std::stoull(tok));
}

long parse_int(const std::string& tok, size_t line) {
    try {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        syntax_error(line, 1, "expected an integer, got '" + tok + "'");
    }
}

} // namespace

ModelDocument parse_model(const std::string& text) {
    ModelDocument doc;
    std::istringstream is(text);
    std::string raw;
    size_t lineno = 0;

    std::string section, section_arg;
    std::map<std::string, std::pair<size_t, size_t>> map_shapes; // declared rows/cols

    while (std::getline(is, raw)) {
        ++lineno;
        std::string s = raw;
        if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        size_t first = 0;
        while (first < s.size() && std::isspace(static_cast<unsigned char>(s[first]))) ++first;
        s.erase(0, first);
        if (s.empty()) continue;

        if (s.front() == '[') {
            if (s.back() != ']') syntax_error(lineno, s.size(), "unterminated section header");
            auto inner = s.substr(1, s.size() - 2);
            auto toks = tokens_of(inner);
            if (toks.empty()) syntax_error(lineno, 2, "empty section header");
            section = toks[0];
            section_arg = toks.size() > 1 ? toks[1] : "";
            if (section == "algebra") {
                if (doc.algebra) syntax_error(lineno, 1, "duplicate [algebra] section");
                doc.algebra.emplace();
            } else if (section == "bimodule") {
                if (doc.bimodule) syntax_error(lineno, 1, "duplicate [bimodule] section");
                doc.bimodule.emplace();
            } else if (section == "map") {
                if (section_arg.empty()) syntax_error(lineno, 1, "[map] needs a name");
                if (doc.maps.count(section_arg))
                    syntax_error(lineno, 1, "duplicate [map " + section_arg + "] section");
                doc.maps.emplace(section_arg, Matrix());
            } else if (section == "tensor2") {
                if (section_arg.empty()) syntax_error(lineno, 1, "[tensor2] needs a name");
                doc.tensor2s[section_arg];
            } else if (section == "tensor3") {
                if (section_arg.empty()) syntax_error(lineno, 1, "[tensor3] needs a name");
                doc.tensor3s[section_arg];
            } else if (section == "bilinear") {
                if (section_arg.empty()) syntax_error(lineno, 1, "[bilinear] needs a name");
                doc.bilinears[section_arg];
            } else if (section == "coproduct") {
                if (section_arg.empty()) syntax_error(lineno, 1, "[coproduct] needs a name");
                doc.coproducts[section_arg];
            } else if (section == "series") {
                // entries follow
            } else if (section == "graded") {
                if (section_arg.empty()) syntax_error(lineno, 1, "[graded] needs a name");
                doc.graded[section_arg];
            } else if (section == "homotopy") {
                if (doc.homotopy) syntax_error(lineno, 1, "duplicate [homotopy] section");
                doc.homotopy.emplace();
            } else {
                syntax_error(lineno, 2, "unknown section '" + section + "'");
            }
            continue;
        }

        auto eq = s.find('=');
        if (eq == std::string::npos) syntax_error(lineno, 1, "expected 'key = value'");
        std::string key = s.substr(0, eq);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
        auto vals = tokens_of(s.substr(eq + 1));

        if (section == "algebra") {
            auto& a = *doc.algebra;
            if (key == "dim") {
                if (vals.size() != 1) syntax_error(lineno, eq + 1, "dim takes one value");
                a.dim = parse_index(vals[0], lineno);
            } else if (key == "basis") {
                a.basis = vals;
            } else if (key == "c") {
                if (vals.size() != 4) syntax_error(lineno, eq + 1, "c takes 'i j k p/q'");
                a.constants.emplace_back(parse_index(vals[0], lineno), parse_index(vals[1], lineno),
                                         parse_index(vals[2], lineno), Rational::parse(vals[3]));
            } else {
                syntax_error(lineno, 1, "unknown algebra key '" + key + "'");
            }
        } else if (section == "bimodule") {
            auto& b = *doc.bimodule;
            if (key == "kind") {
                if (vals.size() != 1) syntax_error(lineno, eq + 1, "kind takes one value");
                b.kind = vals[0];
            } else if (key == "truncate") {
                if (vals.size() != 1) syntax_error(lineno, eq + 1, "truncate takes one value");
                b.truncate = vals[0];
            } else if (key == "dim") {
                if (vals.size() != 1) syntax_error(lineno, eq + 1, "dim takes one value");
                b.dim = parse_index(vals[0], lineno);
            } else if (key == "basis") {
                b.basis = vals;
            } else if (key == "left" || key == "right") {
                if (vals.size() != 4) syntax_error(lineno, eq + 1, key + " takes 'i j k p/q'");
                auto& dst = key == "left" ? b.left : b.right;
                dst.emplace_back(parse_index(vals[0], lineno), parse_index(vals[1], lineno),
                                 parse_index(vals[2], lineno), Rational::parse(vals[3]));
            } else {
                syntax_error(lineno, 1, "unknown bimodule key '" + key + "'");
            }
        } else if (section == "map") {
            auto& shape = map_shapes[section_arg];
            auto& m = doc.maps.at(section_arg);
            if (key == "rows" || key == "cols") {
                (key == "rows" ? shape.first : shape.second) = parse_index(vals.at(0), lineno);
                if (shape.first > 0 && shape.second > 0 && m.rows() == 0)
                    m = Matrix(shape.first, shape.second);
            } else if (key == "entry") {
                if (vals.size() != 3) syntax_error(lineno, eq + 1, "entry takes 'row col p/q'");
                if (m.rows() == 0) {
                    if (shape.first == 0 || shape.second == 0)
                        syntax_error(lineno, 1, "map '" + section_arg +
                                                    "' needs rows and cols before entries");
                    m = Matrix(shape.first, shape.second);
                }
                size_t r = parse_index(vals[0], lineno), c = parse_index(vals[1], lineno);
                if (r >= m.rows() || c >= m.cols())
                    syntax_error(lineno, 1, "map entry out of range in '" + section_arg + "'");
                m.at(r, c) = Rational::parse(vals[2]);
            } else {
                syntax_error(lineno, 1, "unknown map key '" + key + "'");
            }
        } else if (section == "tensor2") {
            if (key != "entry" || vals.size() != 3)
                syntax_error(lineno, 1, "tensor2 entries are 'entry = i j p/q'");
            doc.tensor2s[section_arg].emplace_back(parse_index(vals[0], lineno),
                                                   parse_index(vals[1], lineno),
                                                   Rational::parse(vals[2]));
        } else if (section == "bilinear" || section == "coproduct" || section == "tensor3") {
            if (key != "entry" || vals.size() != 4)
                syntax_error(lineno, 1, section + " entries are 'entry = i j k p/q'");
            auto& dst = section == "bilinear"
                            ? doc.bilinears[section_arg]
                            : (section == "coproduct" ? doc.coproducts[section_arg]
                                                      : doc.tensor3s[section_arg]);
            dst.emplace_back(parse_index(vals[0], lineno), parse_index(vals[1], lineno),
                             parse_index(vals[2], lineno), Rational::parse(vals[3]));
        } else if (section == "series") {
            if (key != "terms" || vals.size() % 2 != 0)
                syntax_error(lineno, 1, "series section takes 'terms = R1 S1 [R2 S2 ...]'");
            for (size_t t = 0; t + 1 < vals.size(); t += 2)
                doc.series.emplace_back(vals[t], vals[t + 1]);
        } else if (section == "graded") {
            if (key != "degrees") syntax_error(lineno, 1, "graded section takes 'degrees = d:n ...'");
            for (const auto& tok : vals) {
                auto colon = tok.find(':');
                if (colon == std::string::npos)
                    syntax_error(lineno, 1, "graded degree entries look like 'degree:dim'");
                doc.graded[section_arg].degrees.emplace_back(
                    parse_int(tok.substr(0, colon), lineno),
                    parse_index(tok.substr(colon + 1), lineno));
            }
        } else if (section == "homotopy") {
            auto& h = *doc.homotopy;
            if (key == "kind") {
                h.kind = vals.at(0);
            } else if (key == "arity_bound") {
                h.arity_bound = parse_index(vals.at(0), lineno);
            } else if (key == "op") {
                // op = k r s pos out i1 ... ik p/q
                if (vals.size() < 6) syntax_error(lineno, 1, "op takes 'k r s pos out i... p/q'");
                ModelDocument::HomotopyOpEntry e;
                e.key.k = static_cast<uint32_t>(parse_index(vals[0], lineno));
                e.key.r = static_cast<uint32_t>(parse_index(vals[1], lineno));
                e.key.s = static_cast<uint32_t>(parse_index(vals[2], lineno));
                e.key.pos = static_cast<uint32_t>(parse_index(vals[3], lineno));
                e.out = parse_index(vals[4], lineno);
                if (vals.size() != 6 + e.key.k)
                    syntax_error(lineno, 1, "op with arity k takes k input indices");
                for (size_t t = 0; t < e.key.k; ++t)
                    e.inputs.push_back(parse_index(vals[5 + t], lineno));
                e.value = Rational::parse(vals.back());
                h.ops.push_back(std::move(e));
            } else {
                syntax_error(lineno, 1, "unknown homotopy key '" + key + "'");
            }
        } else {
            syntax_error(lineno, 1, "entry outside any section");
        }
    }

    // Eager semantic validation of the algebra/bimodule part.
    if (doc.algebra) {
        Algebra alg = model_algebra(doc);
        auto rep = doc.bimodule ? [&] {
            Bimodule mod = model_bimodule(doc, alg);
            return validate_model(alg, &mod);
        }() : validate_model(alg);
        if (!rep.pass()) {
            const auto& f = rep.failing_triples.front();
            throw InputError("section [algebra]/[bimodule]: model fails " + f.identity +
                             " on basis triple (" + std::to_string(f.i) + "," +
                             std::to_string(f.j) + "," + std::to_string(f.k) + ")");
        }
    }
    return doc;
}

namespace {

template <typename T> std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end(), [](const T& a, const T& b) {
        return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
               std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
    });
    return v;
}

} // namespace

std::string emit_model(const ModelDocument& doc) {
    std::ostringstream os;
    if (doc.algebra) {
        const auto& a = *doc.algebra;
        os << "[algebra]\n";
        os << "dim = " << a.dim << "\n";
        if (!a.basis.empty()) {
            os << "basis =";
            for (const auto& b : a.basis) os << " " << b;
            os << "\n";
        }
        auto cs = a.constants;
        std::sort(cs.begin(), cs.end());
        for (const auto& [i, j, k, v] : cs)
            os << "c = " << i << " " << j << " " << k << " " << v.str() << "\n";
    }
    if (doc.bimodule) {
        const auto& b = *doc.bimodule;
        os << "[bimodule]\n";
        os << "kind = " << b.kind << "\n";
        if (!b.truncate.empty()) os << "truncate = " << b.truncate << "\n";
        if (b.kind == "explicit") os << "dim = " << b.dim << "\n";
        if (!b.basis.empty()) {
            os << "basis =";
            for (const auto& n : b.basis) os << " " << n;
            os << "\n";
        }
        auto left = b.left, right = b.right;
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        for (const auto& [i, j, k, v] : left)
            os << "left = " << i << " " << j << " " << k << " " << v.str() << "\n";
        for (const auto& [i, j, k, v] : right)
            os << "right = " << i << " " << j << " " << k << " " << v.str() << "\n";
    }
    for (const auto& [name, m] : doc.maps) {
        os << "[map " << name << "]\n";
        os << "rows = " << m.rows() << "\ncols = " << m.cols() << "\n";
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c)
                if (!m.at(r, c).is_zero())
                    os << "entry = " << r << " " << c << " " << m.at(r, c).str() << "\n";
    }
    for (const auto& [name, entries] : doc.tensor2s) {
        os << "[tensor2 " << name << "]\n";
        auto es = entries;
        std::sort(es.begin(), es.end());
        for (const auto& [i, j, v] : es)
            os << "entry = " << i << " " << j << " " << v.str() << "\n";
    }
    for (const auto& [name, entries] : doc.tensor3s) {
        os << "[tensor3 " << name << "]\n";
        for (const auto& [i, j, k, v] : sorted(entries))
            os << "entry = " << i << " " << j << " " << k << " " << v.str() << "\n";
    }
    for (const auto& [name, entries] : doc.bilinears) {
        os << "[bilinear " << name << "]\n";
        for (const auto& [i, j, k, v] : sorted(entries))
            os << "entry = " << i << " " << j << " " << k << " " << v.str() << "\n";
    }
    for (const auto& [name, entries] : doc.coproducts) {
        os << "[coproduct " << name << "]\n";
        for (const auto& [i, j, k, v] : sorted(entries))
            os << "entry = " << i << " " << j << " " << k << " " << v.str() << "\n";
    }
    if (!doc.series.empty()) {
        os << "[series]\nterms =";
        for (const auto& [r, s] : doc.series) os << " " << r << " " << s;
        os << "\n";
    }
    for (const auto& [name, g] : doc.graded) {
        os << "[graded " << name << "]\n";
        os << "degrees =";
        for (const auto& [d, n] : g.degrees) os << " " << d << ":" << n;
        os << "\n";
    }
    if (doc.homotopy) {
        const auto& h = *doc.homotopy;
        os << "[homotopy]\n";
        os << "kind = " << h.kind << "\n";
        os << "arity_bound = " << h.arity_bound << "\n";
        auto ops = h.ops;
        std::sort(ops.begin(), ops.end(), [](const auto& a, const auto& b) {
            return std::tie(a.key, a.out, a.inputs) < std::tie(b.key, b.out, b.inputs);
        });
        for (const auto& e : ops) {
            os << "op = " << e.key.k << " " << e.key.r << " " << e.key.s << " " << e.key.pos
               << " " << e.out;
            for (size_t i : e.inputs) os << " " << i;
            os << " " << e.value.str() << "\n";
        }
    }
    return os.str();
}

Algebra model_algebra(const ModelDocument& doc) {
    if (!doc.algebra) throw InputError("document has no [algebra] section");
    const auto& a = *doc.algebra;
    if (a.dim == 0) throw InputError("section [algebra]: dim must be positive");
    Algebra alg = make_algebra(a.dim, a.basis);
    for (const auto& [i, j, k, v] : a.constants) {
        if (i >= a.dim || j >= a.dim || k >= a.dim)
            throw InputError("section [algebra]: structure constant index out of range");
        alg.mult.add(i, j, k, v);
    }
    return alg;
}

Bimodule model_bimodule(const ModelDocument& doc, const Algebra& alg) {
    if (!doc.bimodule) return canonical_bimodule(alg, CanonicalBimodule::Adjoint);
    const auto& b = *doc.bimodule;
    Bimodule mod;
    if (b.kind == "adjoint") {
        mod = canonical_bimodule(alg, CanonicalBimodule::Adjoint);
    } else if (b.kind == "coadjoint") {
        mod = canonical_bimodule(alg, CanonicalBimodule::Coadjoint);
    } else if (b.kind == "explicit") {
        if (b.dim == 0) throw InputError("section [bimodule]: explicit modules need dim");
        mod = make_bimodule(alg, b.dim);
        for (const auto& [i, j, k, v] : b.left) {
            if (i >= alg.dim || j >= b.dim || k >= b.dim)
                throw InputError("section [bimodule]: left action index out of range");
            mod.left.add(i, j, k, v);
        }
        for (const auto& [i, j, k, v] : b.right) {
            if (i >= b.dim || j >= alg.dim || k >= b.dim)
                throw InputError("section [bimodule]: right action index out of range");
            mod.right.add(i, j, k, v);
        }
    } else {
        throw InputError("section [bimodule]: unknown kind '" + b.kind + "'");
    }
    if (b.truncate == "left_only")
        mod = left_only(mod);
    else if (b.truncate == "right_only")
        mod = right_only(mod);
    else if (!b.truncate.empty())
        throw InputError("section [bimodule]: unknown truncate '" + b.truncate + "'");
    return mod;
}

std::vector<std::string> model_module_names(const ModelDocument& doc, const Algebra& alg) {
    if (doc.bimodule && !doc.bimodule->basis.empty()) return doc.bimodule->basis;
    if (!doc.bimodule || doc.bimodule->kind == "adjoint") return alg.basis;
    if (doc.bimodule->kind == "coadjoint") {
        std::vector<std::string> names;
        for (const auto& b : alg.basis) names.push_back(b + "*");
        return names;
    }
    std::vector<std::string> names;
    for (size_t i = 0; i < doc.bimodule->dim; ++i) names.push_back("m" + std::to_string(i + 1));
    return names;
}

Matrix model_map(const ModelDocument& doc, const std::string& name) {
    auto it = doc.maps.find(name);
    if (it == doc.maps.end()) throw InputError("document has no [map " + name + "] section");
    if (it->second.rows() == 0) throw InputError("section [map " + name + "]: empty shape");
    return it->second;
}

Tensor2 model_tensor2(const ModelDocument& doc, const std::string& name, size_t dim) {
    auto it = doc.tensor2s.find(name);
    if (it == doc.tensor2s.end())
        throw InputError("document has no [tensor2 " + name + "] section");
    Tensor2 t = make_tensor2(dim);
    for (const auto& [i, j, v] : it->second) {
        if (i >= dim || j >= dim)
            throw InputError("section [tensor2 " + name + "]: index out of range");
        t.grid.at(i, j) += v;
    }
    return t;
}

Bilinear model_bilinear(const ModelDocument& doc, const std::string& name, size_t dim) {
    auto it = doc.bilinears.find(name);
    if (it == doc.bilinears.end())
        throw InputError("document has no [bilinear " + name + "] section");
    Bilinear b(dim, dim, dim);
    for (const auto& [i, j, k, v] : it->second) {
        if (i >= dim || j >= dim || k >= dim)
            throw InputError("section [bilinear " + name + "]: index out of range");
        b.add(i, j, k, v);
    }
    return b;
}

Tensor3 model_tensor3(const ModelDocument& doc, const std::string& name, size_t dim) {
    auto it = doc.tensor3s.find(name);
    if (it == doc.tensor3s.end())
        throw InputError("document has no [tensor3 " + name + "] section");
    Tensor3 t(dim);
    for (const auto& [i, j, k, v] : it->second) {
        if (i >= dim || j >= dim || k >= dim)
            throw InputError("section [tensor3 " + name + "]: index out of range");
        t.at(i, j, k) += v;
    }
    return t;
}

CoMap model_comap(const ModelDocument& doc, const std::string& name, size_t dim) {
    auto it = doc.coproducts.find(name);
    if (it == doc.coproducts.end())
        throw InputError("document has no [coproduct " + name + "] section");
    CoMap d = make_comap(dim);
    for (const auto& [i, j, k, v] : it->second) {
        if (i >= dim || j >= dim || k >= dim)
            throw InputError("section [coproduct " + name + "]: index out of range");
        d[i].grid.at(j, k) += v;
    }
    return d;
}

HomotopyStructure model_homotopy(const ModelDocument& doc) {
    if (!doc.homotopy) throw InputError("document has no [homotopy] section");
    auto ga = doc.graded.find("A");
    if (ga == doc.graded.end())
        throw InputError("homotopy models need a [graded A] section");
    HomotopyStructure h;
    const std::string& kind = doc.homotopy->kind;
    if (kind == "ainf")
        h.kind = HomotopyKind::AInf;
    else if (kind == "ainf_bimodule")
        h.kind = HomotopyKind::AInfBimodule;
    else if (kind == "dendinf")
        h.kind = HomotopyKind::DendInf;
    else if (kind == "quadinf")
        h.kind = HomotopyKind::QuadInf;
    else
        throw InputError("section [homotopy]: unknown kind '" + kind + "'");
    h.space = GradedSpace{ga->second.degrees};
    if (h.kind == HomotopyKind::AInfBimodule) {
        auto gm = doc.graded.find("M");
        if (gm == doc.graded.end())
            throw InputError("bimodule homotopy models need a [graded M] section");
        h.module_space = GradedSpace{gm->second.degrees};
    }
    h.arity_bound = doc.homotopy->arity_bound;
    for (const auto& e : doc.homotopy->ops) {
        auto it = h.ops.find(e.key);
        if (it == h.ops.end()) it = h.ops.emplace(e.key, h.zero_op(e.key)).first;
        it->second.add(e.out, e.inputs, e.value);
    }
    return h;
}

} // namespace rbsys
