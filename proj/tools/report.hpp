#pragma once

// Reports produced by the command line tool. Every report is first built as
// a JSON document (keys sorted, no timestamps) and the text form is rendered
// from that document, so both formats carry the same content.

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "toric/binomials.hpp"
#include "toric/counterexamples.hpp"
#include "toric/iso.hpp"
#include "toric/iterate.hpp"

namespace toric::cli {

using nlohmann::json;

enum class Format { text, json };

/// An integer as a JSON number, or as a decimal string when |v| > 2^53.
json number(const Integer& v);
json vector_json(const LatticeVector& v);
json matrix_json(const IntMatrix& m);

json hilbert_report(const AffineSemigroup& s);
json charts_report(const AffineSemigroup& s, Characteristic p, BlowupMode mode);
json iso_report(const std::optional<IsoWitness>& w);
json iteration_report(const IterationTree& tree, const RunConfig& cfg);
json verification_report(const VerificationReport& r);
json binomials_report(std::span<const Binomial> relations, const std::vector<bool>& holds);

std::string render(const json& report, Format format);

}  // namespace toric::cli
