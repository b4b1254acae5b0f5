#include "gamma02/json_io.hpp"

#include "gamma02/errors.hpp"

namespace gamma02::json {

namespace {

Integer integer_from(const Json& j, const char* field) {
  if (!j.is_string()) throw InputError(std::string("field '") + field + "' must be a decimal string");
  Integer z;
  if (z.set_str(j.get<std::string>(), 10) != 0) {
    throw InputError(std::string("field '") + field + "' is not an integer");
  }
  return z;
}

Certificate::Kind kind_from(const std::string& s) {
  if (s == "seed") return Certificate::Kind::Seed;
  if (s == "word") return Certificate::Kind::Word;
  if (s == "base-M2") return Certificate::Kind::BaseM2;
  if (s == "process-step") return Certificate::Kind::ProcessStep;
  throw InputError("unknown certificate kind '" + s + "'");
}

}  // namespace

Json matrix(const Mat2& m) {
  Json j = Json::array();
  for (const auto& s : m.to_strings()) j.push_back(s);
  return j;
}

Mat2 matrix_from(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw InputError("matrix must be an array of 4 strings");
  std::string text;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_string()) throw InputError("matrix entries must be strings");
    if (i) text += ',';
    text += j[i].get<std::string>();
  }
  return Mat2::parse(text);
}

Json word(const GeneratorWord& w) { return Json(to_strings(w)); }

GeneratorWord word_from(const Json& j) {
  if (!j.is_array()) throw InputError("word must be an array of strings");
  return parse_word(j.get<std::vector<std::string>>());
}

Json certificate(const Certificate& c) {
  Json j;
  j["key"] = c.key();
  j["matrix"] = matrix(c.matrix);
  j["depth"] = c.depth;
  Json r;
  r["kind"] = to_string(c.kind);
  switch (c.kind) {
    case Certificate::Kind::Seed:
    case Certificate::Kind::Word:
      r["word"] = word(c.word);
      break;
    case Certificate::Kind::BaseM2:
      break;
    case Certificate::Kind::ProcessStep:
      r["parent"] = c.step.parent;
      r["pairing"] = to_string(c.step.pairing);
      r["slot"] = c.step.slot;
      r["half_level"] = word(c.step.half_level);
      r["pre"] = word(c.step.pre);
      r["post"] = word(c.step.post);
      break;
  }
  j["reason"] = std::move(r);
  return j;
}

Certificate certificate_from(const Json& j) {
  try {
    Certificate c;
    c.matrix = matrix_from(j.at("matrix"));
    c.depth = j.value("depth", 0U);
    const Json& r = j.at("reason");
    c.kind = kind_from(r.at("kind").get<std::string>());
    switch (c.kind) {
      case Certificate::Kind::Seed:
      case Certificate::Kind::Word:
        c.word = word_from(r.at("word"));
        break;
      case Certificate::Kind::BaseM2:
        break;
      case Certificate::Kind::ProcessStep: {
        c.step.parent = r.at("parent").get<std::string>();
        const auto p = r.at("pairing").get<std::string>();
        if (p != "P1" && p != "P2") throw InputError("pairing must be P1 or P2");
        c.step.pairing = p == "P1" ? Pairing::P1 : Pairing::P2;
        c.step.slot = r.at("slot").get<int>();
        c.step.half_level = word_from(r.at("half_level"));
        c.step.pre = word_from(r.at("pre"));
        c.step.post = word_from(r.at("post"));
        break;
      }
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

Json descriptor(const LElementDescriptor& d) {
  return Json{{"n", d.n}, {"alpha", d.alpha.get_str()}, {"beta", d.beta.get_str()}};
}

Json formal_sum(const FormalSum& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) {
    terms.push_back(Json{{"coeff", t.coeff.get_str()}, {"matrix", matrix(t.matrix)}});
  }
  return terms;
}

Json artin_witness(const ArtinWitness& w) {
  return Json{{"d", std::to_string(w.d)}, {"b", std::to_string(w.b)},
              {"M", std::to_string(w.M)}, {"k", w.k},
              {"n", w.n},                 {"modulus", std::to_string(w.modulus)}};
}

Json knowledge_base(const KnowledgeBase& kb) {
  Json j;
  j["N"] = std::to_string(kb.ctx().N());
  j["epsilon"] = kb.ctx().epsilon();
  j["rewrite_depth"] = kb.rewrite_depth();
  Json certs = Json::array();
  for (const auto& c : kb.certificates()) certs.push_back(certificate(c));
  j["certificates"] = std::move(certs);
  j["half_level_adjustments"] = kb.half_level_adjustments();
  return j;
}

KnowledgeBase knowledge_base_from(const Json& doc) {
  try {
    const Integer N = integer_from(doc.at("N"), "N");
    if (!N.fits_slong_p()) throw InputError("level too large");
    KnowledgeBase kb(LevelContext(N.get_si(), doc.value("epsilon", 1)),
                     doc.value("rewrite_depth", 4U));
    for (const Json& cj : doc.at("certificates")) {
      Certificate c = certificate_from(cj);
      const std::string key = c.key();
      if (cj.contains("key") && cj["key"] != key) {
        throw VerificationFailure("stored key " + cj["key"].dump() + " does not match matrix " + key,
                                  key);
      }
      bool inserted = false;
      try {
        inserted = kb.insert(std::move(c));
      } catch (const PreconditionError& e) {
        throw VerificationFailure(e.what(), key);
      }
      if (!inserted) throw VerificationFailure("duplicate certificate " + key, key);
    }
    if (doc.contains("half_level_adjustments")) {
      for (const auto& k : doc["half_level_adjustments"]) {
        kb.record_half_level_adjustment(k.get<std::string>());
      }
    }
    return kb;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate document: ") + e.what());
  }
}

}  // namespace gamma02::json
