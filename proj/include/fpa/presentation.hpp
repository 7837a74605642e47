#pragma once

#include "fpa/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fpa {

/// One factor g^(a*i + b) of a schema pattern word.
struct SchemaFactor {
    Gen gen;
    long exp_coeff = 0; // a
    long exp_const = 1; // b
    bool operator==(const SchemaFactor&) const = default;
};

struct SchemaTerm {
    Scalar coeff = Scalar(1);
    std::vector<SchemaFactor> factors;
    bool operator==(const SchemaTerm&) const = default;
};

/// A relation family with one integer parameter, e.g. x*y^(2i+1)*x = 0 for
/// i >= 1. Instantiated degrees are strictly increasing in the parameter,
/// so expansion below a degree bound is finite.
struct RelationSchema {
    std::vector<SchemaTerm> terms;
    std::string param;
    long lower = 0;

    bool operator==(const RelationSchema&) const = default;

    Polynomial instantiate(long i) const;
    /// Total degree of the instance at parameter value i.
    long instance_degree(long i) const;
};

enum class Side : std::uint8_t { e = 0, f = 1 };

/// Peirce type (left, right) of a typed generator: z in eAf has type (e, f).
struct PeirceType {
    Side left;
    Side right;
    bool operator==(const PeirceType&) const = default;
    bool matched() const { return left == right; }
};

/// One summand c * u * e * v (or c * u * (1-e) * v) of a fullness witness.
struct WitnessTerm {
    Scalar coeff = Scalar(1);
    Word u;
    Word v;
    bool operator==(const WitnessTerm&) const = default;
};

/// Asserts 1 = sum_i c_i * u_i * e * v_i (side e) or with 1-e sandwiched
/// (side f). Nonempty by construction.
struct WitnessDecomposition {
    Side side = Side::e;
    std::vector<WitnessTerm> terms;
    bool operator==(const WitnessDecomposition&) const = default;
};

/// A finite presentation: named generators, optional parity and Peirce-type
/// metadata, relations (monic, canonically sorted), relation schemas, and
/// optional idempotent designation with fullness witnesses.
struct Presentation {
    std::vector<std::string> gens;
    std::optional<std::vector<Parity>> parity;
    std::vector<Polynomial> relations;
    std::vector<RelationSchema> schemas;
    std::optional<Gen> idempotent;
    std::optional<WitnessDecomposition> witness_e;
    std::optional<WitnessDecomposition> witness_f;
    std::optional<std::vector<PeirceType>> peirce_types;

    bool operator==(const Presentation&) const = default;

    std::size_t gen_count() const { return gens.size(); }
    std::optional<Gen> find_gen(const std::string& name) const;
    MonomialOrder declaration_order() const { return MonomialOrder::by_declaration(gens.size()); }

    /// Parity table for grading work; generators default to odd when no
    /// parity was declared.
    std::vector<Parity> parity_table() const;

    /// Monic relations, sorted in canonical order, exact duplicates removed.
    /// Zero relations are rejected (ValidationError).
    void canonicalize();

    /// Structural invariant checks (names, generator references, witness
    /// shape). Throws ValidationError.
    void validate() const;

    /// Replaces schemas by all instances of total degree <= max_deg.
    Presentation expand_schemas(int max_deg) const;
};

/// Canonical relation list order under `ord`: by leading word, then full
/// structural comparison.
void sort_relations(std::vector<Polynomial>& rels, const MonomialOrder& ord);

} // namespace fpa
