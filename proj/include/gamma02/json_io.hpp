#pragma once

#include "gamma02/artin.hpp"
#include "gamma02/formal_sum.hpp"
#include "gamma02/knowledge_base.hpp"
#include "gamma02/subgroups.hpp"

#include <json.hpp>

#include <string>

namespace gamma02::json {

using Json = nlohmann::ordered_json;

// ["a","b","c","d"], entries as decimal integers or "p/q".
Json matrix(const Mat2& m);
Mat2 matrix_from(const Json& j);

Json word(const GeneratorWord& w);
GeneratorWord word_from(const Json& j);

Json certificate(const Certificate& c);
Certificate certificate_from(const Json& j);

Json descriptor(const LElementDescriptor& d);
Json formal_sum(const FormalSum& s);
Json artin_witness(const ArtinWitness& w);

// {"N", "epsilon", "rewrite_depth", "certificates": [...], "half_level_adjustments": [...]}
Json knowledge_base(const KnowledgeBase& kb);

// Rebuilds a knowledge base from a certificate document without verifying
// reasons (use audit for that). A certificate whose matrix is not in
// Gamma0(N), or a repeated key, raises VerificationFailure with its key.
KnowledgeBase knowledge_base_from(const Json& doc);

}  // namespace gamma02::json
