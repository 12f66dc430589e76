#pragma once

#include <nlohmann/json.hpp>

#include "uncond/classify.hpp"
#include "uncond/family.hpp"
#include "uncond/lemma_lab.hpp"
#include "uncond/seqspace.hpp"
#include "uncond/unconditionality.hpp"
#include "uncond/witness.hpp"

namespace uncond {

using Json = nlohmann::ordered_json;

/// Number, or "inf" for infinity.
Json to_json(const Exponent& p);
Exponent exponent_from_json(const Json& j);

/// Array of numbers.
Json to_json(const FinSeq& v);
FinSeq finseq_from_json(const Json& j);

/// Array of arrays.
Json to_json(const Family& fam);
Family family_from_json(const Json& j);

/// Subset bitmask as lowercase hex with 0x prefix.
std::string mask_to_hex(std::uint64_t mask);

Json to_json(const SubsetMaxResult& r, const SubsetMode& mode);
Json to_json(const QuotientResult& r);
Json to_json(const WitnessReport& r);
Json to_json(const TailWitness& w, const Exponent& q, const Exponent& r, double B);
Json to_json(const HadamardMatrix& h);
Json to_json(const ExponentTriple& t, const Classification& c);
Json to_json(const RatioReport& r);
Json to_json(const SandwichReport& r);
Json to_json(const CrossValidationReport& r);

/// Shortest round-trip decimal form used in CSV output.
std::string format_double(double v);

/// `p,q,r,verdict,clause,margin` header plus one row per record.
std::string grid_to_csv(const std::vector<GridRecord>& grid);

}  // namespace uncond
