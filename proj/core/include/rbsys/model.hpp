#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rbsys/algebra.hpp"
#include "rbsys/homotopy.hpp"
#include "rbsys/yang_baxter.hpp"

namespace rbsys {

// Declarative model file. Sections:
//   [algebra]            dim, basis names, structure constants "c = i j k p/q"
//   [bimodule]           kind = adjoint|coadjoint|explicit, optional
//                        truncate = left_only|right_only, explicit actions
//   [map NAME]           rows, cols, "entry = r c p/q"
//   [tensor2 NAME]       "entry = i j p/q"
//   [tensor3 NAME]       "entry = i j k p/q"
//   [bilinear NAME]      "entry = i j k p/q" (a table on the module/algebra)
//   [coproduct NAME]     "entry = i j k p/q" meaning X(e_i) += v e_j ⊗ e_k
//   [series]             "terms = R1 S1 R2 S2 ..." map names by order
//   [graded NAME]        "degrees = d:dim d:dim ..." (names A and M)
//   [homotopy]           kind, arity_bound, "op = k r s pos out i1..ik p/q"
// Indices are 0-based; rationals are "p" or "p/q" in lowest terms.
struct ModelDocument {
    struct AlgebraSection {
        size_t dim = 0;
        std::vector<std::string> basis;
        std::vector<std::tuple<size_t, size_t, size_t, Rational>> constants;
    };
    struct BimoduleSection {
        std::string kind = "adjoint";
        std::string truncate; // empty, "left_only", or "right_only"
        size_t dim = 0;       // explicit only
        std::vector<std::string> basis;
        std::vector<std::tuple<size_t, size_t, size_t, Rational>> left, right;
    };
    struct GradedSection {
        std::vector<std::pair<int, size_t>> degrees;
    };
    struct HomotopyOpEntry {
        OpKey key;
        size_t out = 0;
        std::vector<size_t> inputs;
        Rational value;
    };
    struct HomotopySection {
        std::string kind = "ainf";
        size_t arity_bound = 4;
        std::vector<HomotopyOpEntry> ops;
    };

    std::optional<AlgebraSection> algebra;
    std::optional<BimoduleSection> bimodule;
    std::map<std::string, Matrix> maps;
    std::map<std::string, std::vector<std::tuple<size_t, size_t, Rational>>> tensor2s;
    std::map<std::string, std::vector<std::tuple<size_t, size_t, size_t, Rational>>> tensor3s;
    std::map<std::string, std::vector<std::tuple<size_t, size_t, size_t, Rational>>> bilinears;
    std::map<std::string, std::vector<std::tuple<size_t, size_t, size_t, Rational>>> coproducts;
    std::vector<std::pair<std::string, std::string>> series; // (R_i, S_i) map names
    std::map<std::string, GradedSection> graded;
    std::optional<HomotopySection> homotopy;
};

// Throws InputError with "line L, column C" on syntax errors and a
// section-naming message on semantic errors. validate_model runs eagerly
// when an algebra section is present.
ModelDocument parse_model(const std::string& text);

// Canonical serialization: fixed section order, sorted entries, "p/q"
// rationals. parse ∘ emit is the identity on canonical documents.
std::string emit_model(const ModelDocument& doc);

// ---- resolution into core objects ----

Algebra model_algebra(const ModelDocument& doc);
Bimodule model_bimodule(const ModelDocument& doc, const Algebra& alg);
std::vector<std::string> model_module_names(const ModelDocument& doc, const Algebra& alg);
Matrix model_map(const ModelDocument& doc, const std::string& name);
Tensor2 model_tensor2(const ModelDocument& doc, const std::string& name, size_t dim);
Tensor3 model_tensor3(const ModelDocument& doc, const std::string& name, size_t dim);
Bilinear model_bilinear(const ModelDocument& doc, const std::string& name, size_t dim);
CoMap model_comap(const ModelDocument& doc, const std::string& name, size_t dim);
HomotopyStructure model_homotopy(const ModelDocument& doc);

} // namespace rbsys
