#include "rbsys/homotopy.hpp"

#include <sstream>

#include "rbsys/errors.hpp"

namespace rbsys {

size_t GradedSpace::total() const {
    size_t t = 0;
    for (const auto& [d, n] : degrees) t += n;
    return t;
}

int GradedSpace::degree_of(size_t flat) const {
    for (const auto& [d, n] : degrees) {
        if (flat < n) return d;
        flat -= n;
    }
    throw InputError("graded index out of range");
}

GradedSpace GradedSpace::concentrated(size_t dim, int degree) {
    return GradedSpace{{{degree, dim}}};
}

std::string to_string(HomotopyKind k) {
    switch (k) {
    case HomotopyKind::AInf: return "ainf";
    case HomotopyKind::AInfBimodule: return "ainf_bimodule";
    case HomotopyKind::DendInf: return "dendinf";
    case HomotopyKind::QuadInf: return "quadinf";
    }
    return "?";
}

const MixedTensor* HomotopyStructure::op(const OpKey& key) const {
    auto it = ops.find(key);
    return it == ops.end() ? nullptr : &it->second;
}

MixedTensor HomotopyStructure::zero_op(const OpKey& key) const {
    size_t ta = space.total();
    std::vector<size_t> dims(key.k, ta);
    size_t out = ta;
    if (key.pos != 0) {
        if (!module_space) throw InputError("module operation on a structure without module");
        dims[key.pos - 1] = module_space->total();
        out = module_space->total();
    }
    return MixedTensor(std::move(dims), out);
}

std::optional<std::string> homogeneity_violation(const HomotopyStructure& h) {
    for (const auto& [key, t] : h.ops) {
        int want = static_cast<int>(key.k) - 2;
        for (const auto& [ck, v] : t.coefficients()) {
            int in_sum = 0;
            for (size_t p = 0; p < key.k; ++p) {
                bool is_module_slot = key.pos != 0 && p + 1 == key.pos;
                in_sum += is_module_slot ? h.module_space->degree_of(ck[p + 1])
                                         : h.space.degree_of(ck[p + 1]);
            }
            int out_deg = (key.pos != 0) ? h.module_space->degree_of(ck[0])
                                         : h.space.degree_of(ck[0]);
            if (out_deg != in_sum + want) {
                std::ostringstream os;
                os << "operation (k=" << key.k << ") is not homogeneous of degree " << want;
                return os.str();
            }
        }
    }
    return std::nullopt;
}

namespace {

template <typename F> void for_tuples(size_t len, size_t dim, F&& fn) {
    std::vector<size_t> idx(len, 0);
    if (dim == 0 && len > 0) return;
    while (true) {
        fn(std::span<const size_t>(idx));
        size_t t = len;
        while (t > 0) {
            if (++idx[t - 1] < dim) break;
            idx[t - 1] = 0;
            --t;
        }
        if (t == 0) break;
    }
}

std::string tuple_str(std::span<const size_t> t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i] + 1);
    return s + ")";
}

// Arguments for an operation: basis vectors, except one vector-valued slot.
std::vector<Vec> args_with_slot(const MixedTensor& op, std::span<const size_t> others,
                                size_t slot, const Vec& value) {
    std::vector<Vec> args;
    args.reserve(op.arity());
    size_t t = 0;
    for (size_t p = 0; p < op.arity(); ++p) {
        if (p == slot) {
            args.push_back(value);
        } else {
            args.push_back(basis_vec(op.slot_dims()[p], others[t]));
            ++t;
        }
    }
    return args;
}

struct Failure {
    bool failed = false;
    std::string witness;
};

// Shared driver for the coherence identities. `inner_outer` resolves, for
// given (i, j, λ), the list of (outer op, inner op, coefficient) products;
// the Koszul sign is applied here.
template <typename Resolver>
Failure run_identity(const HomotopyStructure& h, size_t n, size_t module_pos,
                     Resolver&& resolve, const std::string& label) {
    Failure fail;
    size_t out_dim = module_pos == 0 ? h.space.total() : h.module_space->total();
    auto degree_at = [&](size_t pos, size_t flat) {
        return (module_pos != 0 && pos == module_pos - 1) ? h.module_space->degree_of(flat)
                                                          : h.space.degree_of(flat);
    };
    auto slot_dim = [&](size_t pos) {
        return (module_pos != 0 && pos == module_pos - 1) ? h.module_space->total()
                                                          : h.space.total();
    };
    // Mixed-dimension tuples: iterate positions independently.
    std::vector<size_t> dims(n);
    for (size_t p = 0; p < n; ++p) dims[p] = slot_dim(p);
    std::vector<size_t> idx(n, 0);
    bool done = false;
    for (size_t p = 0; p < n; ++p)
        if (dims[p] == 0) done = true;
    while (!done) {
        Vec defect(out_dim);
        for (size_t i = 1; i <= n; ++i) {
            size_t j = n + 1 - i;
            for (size_t lam = 1; lam <= j; ++lam) {
                std::vector<int> degs;
                for (size_t t = 0; t + 1 < lam; ++t) degs.push_back(degree_at(t, idx[t]));
                int sgn = koszul_sign(degs, lam, i);
                auto products = resolve(i, j, lam);
                for (const auto& [outer, inner, coef] : products) {
                    if (!outer || !inner) continue;
                    std::vector<Vec> inner_args;
                    inner_args.reserve(i);
                    for (size_t t = 0; t < i; ++t)
                        inner_args.push_back(
                            basis_vec(inner->slot_dims()[t], idx[lam - 1 + t]));
                    Vec inner_val = inner->apply(inner_args);
                    std::vector<size_t> others;
                    for (size_t t = 0; t + 1 < lam; ++t) others.push_back(idx[t]);
                    for (size_t t = lam + i - 1; t < n; ++t) others.push_back(idx[t]);
                    Vec term = outer->apply(args_with_slot(*outer, others, lam - 1, inner_val));
                    vec_add_scaled(defect, Rational(sgn) * coef, term);
                }
            }
        }
        if (!is_zero_vec(defect)) {
            fail.failed = true;
            fail.witness = label + " fails at arity " + std::to_string(n) + " on tuple " +
                           tuple_str(idx);
            return fail;
        }
        size_t t = n;
        while (t > 0) {
            if (++idx[t - 1] < dims[t - 1]) break;
            idx[t - 1] = 0;
            --t;
        }
        if (t == 0) break;
    }
    return fail;
}

using OpProduct = std::tuple<const MixedTensor*, const MixedTensor*, Rational>;

} // namespace

HomotopyReport homotopy_axiom_defect(const HomotopyStructure& h, size_t n_max) {
    if (n_max > h.arity_bound)
        throw ResourceError("identities requested beyond the structure's arity bound (" +
                            std::to_string(h.arity_bound) + "); the truncation is silent on them");
    if (auto v = homogeneity_violation(h)) throw InputError(*v);
    HomotopyReport rep;
    rep.arity_checked = n_max;

    for (size_t n = 1; n <= n_max && rep.pass; ++n) {
        switch (h.kind) {
        case HomotopyKind::AInf: {
            auto resolve = [&](size_t i, size_t j, size_t) {
                std::vector<OpProduct> v;
                v.emplace_back(h.op({(uint32_t)j, 0, 0, 0}), h.op({(uint32_t)i, 0, 0, 0}),
                               Rational(1));
                return v;
            };
            auto f = run_identity(h, n, 0, resolve, "A-infinity identity");
            if (f.failed) {
                rep.pass = false;
                rep.witness = f.witness;
            }
            break;
        }
        case HomotopyKind::AInfBimodule: {
            // μ part first.
            auto resolve_mu = [&](size_t i, size_t j, size_t) {
                std::vector<OpProduct> v;
                v.emplace_back(h.op({(uint32_t)j, 0, 0, 0}), h.op({(uint32_t)i, 0, 0, 0}),
                               Rational(1));
                return v;
            };
            auto f = run_identity(h, n, 0, resolve_mu, "A-infinity identity");
            if (f.failed) {
                rep.pass = false;
                rep.witness = f.witness;
                break;
            }
            // Then one module slot at each position p.
            for (size_t p = 1; p <= n && rep.pass; ++p) {
                auto resolve = [&](size_t i, size_t j, size_t lam) {
                    std::vector<OpProduct> v;
                    const MixedTensor* outer;
                    const MixedTensor* inner;
                    if (lam <= p && p <= lam + i - 1) {
                        inner = h.op({(uint32_t)i, 0, 0, (uint32_t)(p - lam + 1)});
                        outer = h.op({(uint32_t)j, 0, 0, (uint32_t)lam});
                    } else {
                        inner = h.op({(uint32_t)i, 0, 0, 0});
                        size_t outer_pos = p < lam ? p : p - i + 1;
                        outer = h.op({(uint32_t)j, 0, 0, (uint32_t)outer_pos});
                    }
                    v.emplace_back(outer, inner, Rational(1));
                    return v;
                };
                auto g = run_identity(h, n, p, resolve,
                                      "A-infinity bimodule identity (module slot " +
                                          std::to_string(p) + ")");
                if (g.failed) {
                    rep.pass = false;
                    rep.witness = g.witness;
                }
            }
            break;
        }
        case HomotopyKind::DendInf: {
            for (size_t r = 1; r <= n && rep.pass; ++r) {
                auto resolve = [&](size_t i, size_t j, size_t lam) {
                    std::vector<OpProduct> v;
                    auto e = index_table(j, i, lam, r);
                    const MixedTensor* outer = h.op({(uint32_t)j, (uint32_t)e.r0, 0, 0});
                    for (size_t t : e.inner)
                        v.emplace_back(outer, h.op({(uint32_t)i, (uint32_t)t, 0, 0}),
                                       Rational(1));
                    return v;
                };
                auto f = run_identity(h, n, 0, resolve,
                                      "Dend-infinity identity [" + std::to_string(r) + "]");
                if (f.failed) {
                    rep.pass = false;
                    rep.witness = f.witness;
                }
            }
            break;
        }
        case HomotopyKind::QuadInf: {
            for (size_t r = 1; r <= n && rep.pass; ++r)
                for (size_t s = 1; s <= n && rep.pass; ++s) {
                    auto resolve = [&](size_t i, size_t j, size_t lam) {
                        std::vector<OpProduct> v;
                        auto er = index_table(j, i, lam, r);
                        auto es = index_table(j, i, lam, s);
                        const MixedTensor* outer =
                            h.op({(uint32_t)j, (uint32_t)er.r0, (uint32_t)es.r0, 0});
                        for (size_t a : er.inner)
                            for (size_t b : es.inner)
                                v.emplace_back(outer,
                                               h.op({(uint32_t)i, (uint32_t)a, (uint32_t)b, 0}),
                                               Rational(1));
                        return v;
                    };
                    auto f = run_identity(h, n, 0, resolve,
                                          "Quad-infinity identity [" + std::to_string(r) + "," +
                                              std::to_string(s) + "]");
                    if (f.failed) {
                        rep.pass = false;
                        rep.witness = f.witness;
                    }
                }
            break;
        }
        }
    }
    return rep;
}

bool degree_preserving(const GradedSpace& src, const GradedSpace& dst, const Matrix& f) {
    if (f.rows() != dst.total() || f.cols() != src.total()) return false;
    for (size_t i = 0; i < f.rows(); ++i)
        for (size_t j = 0; j < f.cols(); ++j)
            if (!f.at(i, j).is_zero() && dst.degree_of(i) != src.degree_of(j)) return false;
    return true;
}

HomotopyReport homotopy_grbs_defect(const HomotopyStructure& ainf,
                                    const HomotopyStructure& bimod, const HomotopyRBS& pair,
                                    size_t k_max) {
    if (ainf.kind != HomotopyKind::AInf || bimod.kind != HomotopyKind::AInfBimodule)
        throw InputError("homotopy_grbs_defect needs an A-infinity algebra and bimodule");
    if (!bimod.module_space) throw InputError("bimodule structure lacks its module space");
    if (k_max > std::min(ainf.arity_bound, bimod.arity_bound))
        throw ResourceError("identities requested beyond the structures' arity bound");
    const GradedSpace& M = *bimod.module_space;
    const GradedSpace& A = ainf.space;
    if (!degree_preserving(M, A, pair.R) || !degree_preserving(M, A, pair.S))
        throw InputError("homotopy pair must be a degree-0 pair of maps M -> A");

    HomotopyReport rep;
    rep.arity_checked = k_max;
    size_t mt = M.total(), at = A.total();
    for (size_t k = 1; k <= k_max && rep.pass; ++k) {
        const MixedTensor* mu = ainf.op({(uint32_t)k, 0, 0, 0});
        for_tuples(k, mt, [&](std::span<const size_t> u) {
            if (!rep.pass) return;
            Vec lhsR(at), lhsS(at);
            if (mu) {
                std::vector<Vec> argsR, argsS;
                for (size_t t = 0; t < k; ++t) {
                    argsR.push_back(pair.R.apply(basis_vec(mt, u[t])));
                    argsS.push_back(pair.S.apply(basis_vec(mt, u[t])));
                }
                lhsR = mu->apply(argsR);
                lhsS = mu->apply(argsS);
            }
            Vec inner_sum(mt);
            for (size_t i = 1; i <= k; ++i) {
                const MixedTensor* eta = bimod.op({(uint32_t)k, 0, 0, (uint32_t)i});
                if (!eta) continue;
                std::vector<Vec> args;
                for (size_t t = 0; t < k; ++t) {
                    if (t + 1 < i)
                        args.push_back(pair.R.apply(basis_vec(mt, u[t])));
                    else if (t + 1 == i)
                        args.push_back(basis_vec(mt, u[t]));
                    else
                        args.push_back(pair.S.apply(basis_vec(mt, u[t])));
                }
                vec_add_scaled(inner_sum, Rational(1), eta->apply(args));
            }
            Vec defR = vec_sub(lhsR, pair.R.apply(inner_sum));
            Vec defS = vec_sub(lhsS, pair.S.apply(inner_sum));
            if (!is_zero_vec(defR) || !is_zero_vec(defS)) {
                rep.pass = false;
                rep.witness = "homotopy Rota-Baxter identity fails at arity " +
                              std::to_string(k) + " on tuple " + tuple_str(u);
            }
        });
    }
    return rep;
}

IndexTableEntry index_table(size_t outer, size_t block, size_t pos, size_t r) {
    if (pos < 1 || pos > outer) throw InputError("index_table: position out of range");
    size_t top = outer + block - 1;
    if (r < 1 || r > top) throw InputError("index_table: C_n index out of range");
    IndexTableEntry e;
    auto all = [&]() {
        std::vector<size_t> v;
        for (size_t t = 1; t <= block; ++t) v.push_back(t);
        return v;
    };
    if (r <= pos - 1) {
        e.r0 = r;
        e.inner = all();
    } else if (r <= pos + block - 1) {
        e.r0 = pos;
        e.inner = {r - pos + 1};
    } else {
        e.r0 = r - block + 1;
        e.inner = all();
    }
    return e;
}

HomotopyStructure dendinf_from_grbs(const HomotopyStructure& ainf,
                                    const HomotopyStructure& bimod, const HomotopyRBS& pair,
                                    size_t k_max) {
    auto pre = homotopy_grbs_defect(ainf, bimod, pair, k_max);
    if (!pre.pass)
        throw PreconditionError("pair is not a homotopy Rota-Baxter system: " + pre.witness);
    const GradedSpace& M = *bimod.module_space;
    size_t mt = M.total();
    HomotopyStructure out;
    out.kind = HomotopyKind::DendInf;
    out.space = M;
    out.arity_bound = k_max;
    for (size_t k = 1; k <= k_max; ++k) {
        for (size_t r = 1; r <= k; ++r) {
            const MixedTensor* eta = bimod.op({(uint32_t)k, 0, 0, (uint32_t)r});
            if (!eta) continue;
            MixedTensor table(std::vector<size_t>(k, mt), mt);
            for_tuples(k, mt, [&](std::span<const size_t> u) {
                std::vector<Vec> args;
                for (size_t t = 0; t < k; ++t) {
                    if (t + 1 < r)
                        args.push_back(pair.R.apply(basis_vec(mt, u[t])));
                    else if (t + 1 == r)
                        args.push_back(basis_vec(mt, u[t]));
                    else
                        args.push_back(pair.S.apply(basis_vec(mt, u[t])));
                }
                Vec val = eta->apply(args);
                for (size_t o = 0; o < mt; ++o)
                    if (!val[o].is_zero()) table.add(o, u, val[o]);
            });
            if (!table.is_zero()) out.ops.emplace(OpKey{(uint32_t)k, (uint32_t)r, 0, 0}, table);
        }
    }
    return out;
}

HomotopyStructure ainf_collapse(const HomotopyStructure& h) {
    if (h.kind != HomotopyKind::DendInf && h.kind != HomotopyKind::QuadInf)
        throw InputError("ainf_collapse expects a Dend- or Quad-infinity structure");
    HomotopyStructure out;
    out.kind = HomotopyKind::AInf;
    out.space = h.space;
    out.arity_bound = h.arity_bound;
    for (const auto& [key, t] : h.ops) {
        OpKey mk{key.k, 0, 0, 0};
        auto it = out.ops.find(mk);
        if (it == out.ops.end()) it = out.ops.emplace(mk, out.zero_op(mk)).first;
        it->second.add_scaled(Rational(1), t);
    }
    return out;
}

HomotopyReport rbs_on_dendinf_defect(const HomotopyStructure& dendinf, const HomotopyRBS& pair,
                                     size_t k_max) {
    if (dendinf.kind != HomotopyKind::DendInf)
        throw InputError("rbs_on_dendinf_defect needs a Dend-infinity structure");
    if (k_max > dendinf.arity_bound)
        throw ResourceError("identities requested beyond the structure's arity bound");
    size_t at = dendinf.space.total();
    if (!degree_preserving(dendinf.space, dendinf.space, pair.R) ||
        !degree_preserving(dendinf.space, dendinf.space, pair.S))
        throw InputError("pair must be a degree-0 pair of maps on the structure space");
    HomotopyReport rep;
    rep.arity_checked = k_max;
    for (size_t k = 1; k <= k_max && rep.pass; ++k)
        for (size_t r = 1; r <= k && rep.pass; ++r) {
            const MixedTensor* op = dendinf.op({(uint32_t)k, (uint32_t)r, 0, 0});
            for_tuples(k, at, [&](std::span<const size_t> u) {
                if (!rep.pass) return;
                Vec lhsR(at), lhsS(at), inner(at);
                if (op) {
                    std::vector<Vec> argsR, argsS;
                    for (size_t t = 0; t < k; ++t) {
                        argsR.push_back(pair.R.apply(basis_vec(at, u[t])));
                        argsS.push_back(pair.S.apply(basis_vec(at, u[t])));
                    }
                    lhsR = op->apply(argsR);
                    lhsS = op->apply(argsS);
                    for (size_t i = 1; i <= k; ++i) {
                        std::vector<Vec> args;
                        for (size_t t = 0; t < k; ++t) {
                            if (t + 1 < i)
                                args.push_back(pair.R.apply(basis_vec(at, u[t])));
                            else if (t + 1 == i)
                                args.push_back(basis_vec(at, u[t]));
                            else
                                args.push_back(pair.S.apply(basis_vec(at, u[t])));
                        }
                        vec_add_scaled(inner, Rational(1), op->apply(args));
                    }
                }
                Vec defR = vec_sub(lhsR, pair.R.apply(inner));
                Vec defS = vec_sub(lhsS, pair.S.apply(inner));
                if (!is_zero_vec(defR) || !is_zero_vec(defS)) {
                    rep.pass = false;
                    rep.witness = "Rota-Baxter identity on the Dend-infinity structure fails "
                                  "at (k=" +
                                  std::to_string(k) + ", r=" + std::to_string(r) +
                                  ") on tuple " + tuple_str(u);
                }
            });
        }
    return rep;
}

HomotopyStructure quadinf_from_rbs(const HomotopyStructure& dendinf, const HomotopyRBS& pair,
                                   size_t k_max) {
    auto pre = rbs_on_dendinf_defect(dendinf, pair, k_max);
    if (!pre.pass)
        throw PreconditionError("pair is not a Rota-Baxter system on the Dend-infinity "
                                "structure: " +
                                pre.witness);
    size_t at = dendinf.space.total();
    HomotopyStructure out;
    out.kind = HomotopyKind::QuadInf;
    out.space = dendinf.space;
    out.arity_bound = k_max;
    for (size_t k = 1; k <= k_max; ++k)
        for (size_t r = 1; r <= k; ++r) {
            const MixedTensor* op = dendinf.op({(uint32_t)k, (uint32_t)r, 0, 0});
            if (!op) continue;
            for (size_t s = 1; s <= k; ++s) {
                MixedTensor table(std::vector<size_t>(k, at), at);
                for_tuples(k, at, [&](std::span<const size_t> u) {
                    std::vector<Vec> args;
                    for (size_t t = 0; t < k; ++t) {
                        if (t + 1 < s)
                            args.push_back(pair.R.apply(basis_vec(at, u[t])));
                        else if (t + 1 == s)
                            args.push_back(basis_vec(at, u[t]));
                        else
                            args.push_back(pair.S.apply(basis_vec(at, u[t])));
                    }
                    Vec val = op->apply(args);
                    for (size_t o = 0; o < at; ++o)
                        if (!val[o].is_zero()) table.add(o, u, val[o]);
                });
                if (!table.is_zero())
                    out.ops.emplace(OpKey{(uint32_t)k, (uint32_t)r, (uint32_t)s, 0}, table);
            }
        }
    return out;
}

namespace {

HomotopyStructure quadinf_project(const HomotopyStructure& q, bool keep_first) {
    if (q.kind != HomotopyKind::QuadInf) throw InputError("expected a Quad-infinity structure");
    HomotopyStructure out;
    out.kind = HomotopyKind::DendInf;
    out.space = q.space;
    out.arity_bound = q.arity_bound;
    for (const auto& [key, t] : q.ops) {
        OpKey dk{key.k, keep_first ? key.r : key.s, 0, 0};
        auto it = out.ops.find(dk);
        if (it == out.ops.end()) it = out.ops.emplace(dk, out.zero_op(dk)).first;
        it->second.add_scaled(Rational(1), t);
    }
    return out;
}

} // namespace

HomotopyStructure quadinf_project_first(const HomotopyStructure& q) {
    return quadinf_project(q, true);
}

HomotopyStructure quadinf_project_second(const HomotopyStructure& q) {
    return quadinf_project(q, false);
}

HomotopyStructure ainf_from_algebra(const Algebra& alg) {
    HomotopyStructure h;
    h.kind = HomotopyKind::AInf;
    h.space = GradedSpace::concentrated(alg.dim);
    h.arity_bound = 4;
    MixedTensor mu2({alg.dim, alg.dim}, alg.dim);
    for (const auto& [k, v] : alg.mult.coefficients())
        mu2.add(k[2], std::array<size_t, 2>{k[0], k[1]}, v);
    if (!mu2.is_zero()) h.ops.emplace(OpKey{2, 0, 0, 0}, mu2);
    return h;
}

HomotopyStructure bimodule_from_classical(const Algebra& alg, const Bimodule& mod) {
    HomotopyStructure h;
    h.kind = HomotopyKind::AInfBimodule;
    h.space = GradedSpace::concentrated(alg.dim);
    h.module_space = GradedSpace::concentrated(mod.dim);
    h.arity_bound = 4;
    MixedTensor mu2({alg.dim, alg.dim}, alg.dim);
    for (const auto& [k, v] : alg.mult.coefficients())
        mu2.add(k[2], std::array<size_t, 2>{k[0], k[1]}, v);
    if (!mu2.is_zero()) h.ops.emplace(OpKey{2, 0, 0, 0}, mu2);
    MixedTensor eta_right({mod.dim, alg.dim}, mod.dim); // module slot first: η₂(u, a) = u·a
    for (const auto& [k, v] : mod.right.coefficients())
        eta_right.add(k[2], std::array<size_t, 2>{k[0], k[1]}, v);
    if (!eta_right.is_zero()) h.ops.emplace(OpKey{2, 0, 0, 1}, eta_right);
    MixedTensor eta_left({alg.dim, mod.dim}, mod.dim); // η₂(a, u) = a·u
    for (const auto& [k, v] : mod.left.coefficients())
        eta_left.add(k[2], std::array<size_t, 2>{k[0], k[1]}, v);
    if (!eta_left.is_zero()) h.ops.emplace(OpKey{2, 0, 0, 2}, eta_left);
    return h;
}

HomotopyStructure adjoint_bimodule(const HomotopyStructure& ainf) {
    if (ainf.kind != HomotopyKind::AInf) throw InputError("adjoint_bimodule needs an A-infinity algebra");
    HomotopyStructure h = ainf;
    h.kind = HomotopyKind::AInfBimodule;
    h.module_space = ainf.space;
    for (const auto& [key, t] : ainf.ops) {
        if (key.pos != 0 || key.r != 0) continue;
        for (uint32_t p = 1; p <= key.k; ++p) h.ops.emplace(OpKey{key.k, 0, 0, p}, t);
    }
    return h;
}

HomotopyStructure dendinf_from_dendriform(const BinaryStructure& dend) {
    if (dend.kind != StructureKind::Dendriform)
        throw InputError("dendinf_from_dendriform needs a dendriform structure");
    HomotopyStructure h;
    h.kind = HomotopyKind::DendInf;
    h.space = GradedSpace::concentrated(dend.dim);
    h.arity_bound = 4;
    auto put = [&](const Bilinear& b, uint32_t r) {
        MixedTensor t({dend.dim, dend.dim}, dend.dim);
        for (const auto& [k, v] : b.coefficients())
            t.add(k[2], std::array<size_t, 2>{k[0], k[1]}, v);
        if (!t.is_zero()) h.ops.emplace(OpKey{2, r, 0, 0}, t);
    };
    put(dend.table("prec"), 1);
    put(dend.table("succ"), 2);
    return h;
}

std::optional<std::string> triple_module_violation(const Algebra& alg, const RBSPair& pairA,
                                                   const TripleModuleData& data) {
    size_t n = alg.dim, m = data.mod.dim;
    if (data.RM.rows() != m || data.RM.cols() != m || data.SM.rows() != m ||
        data.SM.cols() != m)
        throw InputError("module operator pair has wrong shape");
    const Matrix &R = pairA.R, &S = pairA.S, &RM = data.RM, &SM = data.SM;
    for (size_t a = 0; a < n; ++a)
        for (size_t u = 0; u < m; ++u) {
            Vec ea = basis_vec(n, a), eu = basis_vec(m, u);
            Vec left_inner = vec_add(data.mod.act_left(R.apply(ea), eu),
                                     data.mod.act_left(ea, SM.apply(eu)));
            if (data.mod.act_left(R.apply(ea), RM.apply(eu)) != RM.apply(left_inner))
                return "R(a)·R_M(u) = R_M(R(a)·u + a·S_M(u)) fails";
            if (data.mod.act_left(S.apply(ea), SM.apply(eu)) != SM.apply(left_inner))
                return "S(a)·S_M(u) = S_M(R(a)·u + a·S_M(u)) fails";
            Vec right_inner = vec_add(data.mod.act_right(RM.apply(eu), ea),
                                      data.mod.act_right(eu, S.apply(ea)));
            if (data.mod.act_right(RM.apply(eu), R.apply(ea)) != RM.apply(right_inner))
                return "R_M(u)·R(a) = R_M(R_M(u)·a + u·S(a)) fails";
            if (data.mod.act_right(SM.apply(eu), S.apply(ea)) != SM.apply(right_inner))
                return "S_M(u)·S(a) = S_M(R_M(u)·a + u·S(a)) fails";
        }
    return std::nullopt;
}

TwoTermResult two_term_builder(const Algebra& alg, const RBSPair& pairA,
                               const TripleModuleData& m_data, const TripleModuleData& n_data,
                               const Matrix& d) {
    auto vm = validate_model(alg, &m_data.mod);
    if (!vm.pass()) throw PreconditionError("two-term builder: (A, M) is not a valid model");
    auto vn = validate_model(alg, &n_data.mod);
    if (!vn.pass()) throw PreconditionError("two-term builder: (A, N) is not a valid model");
    Bimodule adj = canonical_bimodule(alg, CanonicalBimodule::Adjoint);
    auto rbs = grbs_defect(alg, adj, pairA);
    if (!rbs.is_rbs)
        throw PreconditionError("two-term builder: (R,S) is not a Rota-Baxter system on A: " +
                                rbs.witness);
    if (auto v = triple_module_violation(alg, pairA, m_data))
        throw PreconditionError("two-term builder: M is not a bimodule over the triple: " + *v);
    if (auto v = triple_module_violation(alg, pairA, n_data))
        throw PreconditionError("two-term builder: N is not a bimodule over the triple: " + *v);

    size_t n = alg.dim, mM = m_data.mod.dim, mN = n_data.mod.dim;
    if (d.rows() != mN || d.cols() != mM) throw InputError("d must map M to N");
    for (size_t a = 0; a < n; ++a)
        for (size_t u = 0; u < mM; ++u) {
            Vec ea = basis_vec(n, a), eu = basis_vec(mM, u);
            if (d.apply(m_data.mod.act_left(ea, eu)) != n_data.mod.act_left(ea, d.apply(eu)) ||
                d.apply(m_data.mod.act_right(eu, ea)) != n_data.mod.act_right(d.apply(eu), ea))
                throw PreconditionError("two-term builder: d does not intertwine the actions");
        }
    if (!(d.mul(m_data.RM) == n_data.RM.mul(d)) || !(d.mul(m_data.SM) == n_data.SM.mul(d)))
        throw PreconditionError("two-term builder: d does not intertwine the operator pairs");

    // Flattened basis: [A (deg 0) | N (deg 0) | M (deg 1)].
    size_t deg0 = n + mN, total = deg0 + mM;
    TwoTermResult out;
    out.ainf.kind = HomotopyKind::AInf;
    out.ainf.space = GradedSpace{{{0, deg0}, {1, mM}}};
    out.ainf.arity_bound = 4;

    MixedTensor mu1({total}, total);
    for (size_t u = 0; u < mM; ++u)
        for (size_t t = 0; t < mN; ++t)
            if (!d.at(t, u).is_zero())
                mu1.add(n + t, std::array<size_t, 1>{deg0 + u}, d.at(t, u));
    if (!mu1.is_zero()) out.ainf.ops.emplace(OpKey{1, 0, 0, 0}, mu1);

    MixedTensor mu2({total, total}, total);
    for (const auto& [k, v] : alg.mult.coefficients())
        mu2.add(k[2], std::array<size_t, 2>{k[0], k[1]}, v);
    for (const auto& [k, v] : n_data.mod.left.coefficients())
        mu2.add(n + k[2], std::array<size_t, 2>{k[0], n + k[1]}, v); // a·n2
    for (const auto& [k, v] : n_data.mod.right.coefficients())
        mu2.add(n + k[2], std::array<size_t, 2>{n + k[0], k[1]}, v); // n1·b
    for (const auto& [k, v] : m_data.mod.left.coefficients())
        mu2.add(deg0 + k[2], std::array<size_t, 2>{k[0], deg0 + k[1]}, v); // a·u
    for (const auto& [k, v] : m_data.mod.right.coefficients())
        mu2.add(deg0 + k[2], std::array<size_t, 2>{deg0 + k[0], k[1]}, v); // u·a
    if (!mu2.is_zero()) out.ainf.ops.emplace(OpKey{2, 0, 0, 0}, mu2);

    out.bimod = adjoint_bimodule(out.ainf);

    out.pair.R = Matrix(total, total);
    out.pair.S = Matrix(total, total);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            out.pair.R.at(i, j) = pairA.R.at(i, j);
            out.pair.S.at(i, j) = pairA.S.at(i, j);
        }
    for (size_t i = 0; i < mN; ++i)
        for (size_t j = 0; j < mN; ++j) {
            out.pair.R.at(n + i, n + j) = n_data.RM.at(i, j);
            out.pair.S.at(n + i, n + j) = n_data.SM.at(i, j);
        }
    for (size_t i = 0; i < mM; ++i)
        for (size_t j = 0; j < mM; ++j) {
            out.pair.R.at(deg0 + i, deg0 + j) = m_data.RM.at(i, j);
            out.pair.S.at(deg0 + i, deg0 + j) = m_data.SM.at(i, j);
        }
    return out;
}

} // namespace rbsys
