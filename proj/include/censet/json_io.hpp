#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "censet/central.hpp"
#include "censet/certificate.hpp"
#include "censet/classify.hpp"
#include "censet/element.hpp"
#include "censet/error.hpp"
#include "censet/hales_jewett.hpp"
#include "censet/jset.hpp"
#include "censet/semigroup.hpp"
#include "censet/sequence.hpp"
#include "censet/set_spec.hpp"

namespace censet {

using ordered_json = nlohmann::ordered_json;

namespace detail {

template <typename Fn>
auto parse_guard(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::invalid_input, std::string("malformed JSON input: ") + e.what());
  }
}

inline std::string bits_to_string(const std::vector<bool>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

inline std::vector<bool> bits_from_string(const std::string& s) {
  std::vector<bool> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      fail(ErrorKind::invalid_input, "bit strings may only contain 0 and 1");
    bits.push_back(c == '1');
  }
  return bits;
}

} // namespace detail

inline ordered_json semigroup_to_json(const GroundSemigroup& sg) {
  ordered_json j;
  switch (sg.backend()) {
    case Backend::finite: {
      j["kind"] = "finite";
      ordered_json rows = ordered_json::array();
      for (std::size_t a = 0; a < sg.carrier_size(); ++a) {
        ordered_json row = ordered_json::array();
        for (std::size_t b = 0; b < sg.carrier_size(); ++b)
          row.push_back(sg.apply(Element::finite(a), Element::finite(b)).index());
        rows.push_back(std::move(row));
      }
      j["table"] = std::move(rows);
      break;
    }
    case Backend::naturals: j["kind"] = "nat"; break;
    case Backend::free_words:
      j["kind"] = "free";
      j["alphabet"] = sg.alphabet_size();
      break;
  }
  return j;
}

inline GroundSemigroup semigroup_from_json(const ordered_json& j) {
  return detail::parse_guard([&] {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite")
      return GroundSemigroup::finite(
          j.at("table").get<std::vector<std::vector<std::size_t>>>());
    if (kind == "nat") return GroundSemigroup::naturals();
    if (kind == "free")
      return GroundSemigroup::free_semigroup(j.at("alphabet").get<std::size_t>());
    fail(ErrorKind::invalid_input, "unknown semigroup kind '" + kind + "'");
  });
}

inline ordered_json element_to_json(const Element& e) {
  switch (e.backend()) {
    case Backend::finite: return ordered_json(e.index());
    case Backend::naturals: return ordered_json(e.value());
    case Backend::free_words: return ordered_json(e.letters());
  }
  fail(ErrorKind::invalid_input, "unknown element backend");
}

inline Element element_from_json(const GroundSemigroup& sg, const ordered_json& j) {
  return detail::parse_guard([&] {
    Element e = Element::nat(1);
    switch (sg.backend()) {
      case Backend::finite: e = Element::finite(j.get<std::size_t>()); break;
      case Backend::naturals: e = Element::nat(j.get<std::uint64_t>()); break;
      case Backend::free_words: e = Element::word(j.get<std::string>()); break;
    }
    sg.check(e, "element from JSON");
    return e;
  });
}

inline ordered_json elements_to_json(const std::vector<Element>& es) {
  ordered_json arr = ordered_json::array();
  for (const Element& e : es) arr.push_back(element_to_json(e));
  return arr;
}

inline std::vector<Element> elements_from_json(const GroundSemigroup& sg,
                                               const ordered_json& j) {
  std::vector<Element> out;
  for (const ordered_json& item : j) out.push_back(element_from_json(sg, item));
  return out;
}

inline ordered_json set_to_json(const SetSpec& A) {
  ordered_json j;
  switch (A.kind()) {
    case SetKind::explicit_members:
      j["kind"] = "explicit";
      j["members"] = elements_to_json(A.members());
      break;
    case SetKind::ev_periodic:
      j["kind"] = "ev-periodic";
      j["preperiod"] = detail::bits_to_string(A.preperiod_bits());
      j["period"] = detail::bits_to_string(A.period_bits());
      break;
    case SetKind::factor:
      j["kind"] = "factor";
      j["word"] = A.factor_word();
      j["negate"] = A.negated();
      if (A.translate_prefix()) j["prefix"] = A.translate_prefix()->letters();
      break;
    case SetKind::window:
      j["kind"] = "window";
      j["bits"] = detail::bits_to_string(A.window_bits());
      j["promise"] = A.promise();
      break;
  }
  return j;
}

inline SetSpec set_from_json(const GroundSemigroup& sg, const ordered_json& j) {
  return detail::parse_guard([&] {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "explicit")
      return SetSpec::explicit_set(elements_from_json(sg, j.at("members")));
    if (kind == "ev-periodic")
      return SetSpec::ev_periodic(
          detail::bits_from_string(j.at("preperiod").get<std::string>()),
          detail::bits_from_string(j.at("period").get<std::string>()));
    if (kind == "factor") {
      SetSpec A = SetSpec::factor_pattern(j.at("word").get<std::string>(),
                                          j.at("negate").get<bool>());
      if (j.contains("prefix"))
        A = left_quotient(sg, Element::word(j.at("prefix").get<std::string>()), A);
      return A;
    }
    if (kind == "window")
      return SetSpec::window_mask(
          detail::bits_from_string(j.at("bits").get<std::string>()),
          j.value("promise", false));
    fail(ErrorKind::invalid_input, "unknown set kind '" + kind + "'");
  });
}

inline ordered_json family_to_json(const SequenceFamily& family) {
  ordered_json j;
  j["truncation"] = family.truncation();
  ordered_json seqs = ordered_json::array();
  for (const Sequence& s : family.all()) {
    ordered_json one;
    one["name"] = s.name;
    one["values"] = elements_to_json(s.values);
    seqs.push_back(std::move(one));
  }
  j["sequences"] = std::move(seqs);
  return j;
}

inline SequenceFamily family_from_json(const GroundSemigroup& sg,
                                       const ordered_json& j) {
  return detail::parse_guard([&] {
    std::vector<Sequence> seqs;
    for (const ordered_json& one : j.at("sequences")) {
      Sequence s;
      s.name = one.value("name", "f" + std::to_string(seqs.size() + 1));
      s.values = elements_from_json(sg, one.at("values"));
      seqs.push_back(std::move(s));
    }
    SequenceFamily family(sg, std::move(seqs));
    if (j.contains("truncation")) {
      const std::size_t t = j.at("truncation").get<std::size_t>();
      if (t != family.truncation()) family = family.truncated(sg, t);
    }
    return family;
  });
}

inline ordered_json chain_to_json(const CentralChain& chain) {
  ordered_json j;
  j["depth"] = chain.depth();
  ordered_json sets = ordered_json::array();
  for (std::size_t n = 1; n <= chain.depth(); ++n)
    sets.push_back(set_to_json(chain.at(n)));
  j["sets"] = std::move(sets);
  return j;
}

inline CentralChain chain_from_json(const GroundSemigroup& sg, const ordered_json& j) {
  return detail::parse_guard([&] {
    std::vector<SetSpec> sets;
    for (const ordered_json& s : j.at("sets")) sets.push_back(set_from_json(sg, s));
    if (j.contains("depth") && j.at("depth").get<std::size_t>() != sets.size())
      fail(ErrorKind::invalid_input, "chain depth does not match its set list");
    CentralChain chain = CentralChain::of(std::move(sets));
    chain.validate(sg);
    return chain;
  });
}

inline ordered_json certificate_to_json(const Certificate& c) {
  ordered_json j;
  j["property"] = property_name(c.property);
  j["verdict"] = verdict_name(c.verdict);
  j["translates"] = elements_to_json(c.translates);
  ordered_json thick;
  if (c.thick.x) thick["x"] = element_to_json(*c.thick.x);
  if (c.thick.run_length) thick["run_length"] = *c.thick.run_length;
  j["thick"] = std::move(thick);
  j["note"] = c.note;
  return j;
}

inline Certificate certificate_from_json(const GroundSemigroup& sg,
                                         const ordered_json& j) {
  return detail::parse_guard([&] {
    Certificate c;
    const std::string prop = j.at("property").get<std::string>();
    if (prop == "syndetic")
      c.property = Property::syndetic;
    else if (prop == "thick")
      c.property = Property::thick;
    else if (prop == "piecewise-syndetic")
      c.property = Property::piecewise_syndetic;
    else
      fail(ErrorKind::invalid_input, "unknown property '" + prop + "'");
    const std::string v = j.at("verdict").get<std::string>();
    if (v == "yes")
      c.verdict = Verdict::yes;
    else if (v == "no")
      c.verdict = Verdict::no;
    else if (v == "window-qualified")
      c.verdict = Verdict::window_qualified;
    else
      fail(ErrorKind::invalid_input, "unknown verdict '" + v + "'");
    c.translates = elements_from_json(sg, j.at("translates"));
    if (j.at("thick").contains("x"))
      c.thick.x = element_from_json(sg, j.at("thick").at("x"));
    if (j.at("thick").contains("run_length"))
      c.thick.run_length = j.at("thick").at("run_length").get<std::size_t>();
    c.note = j.at("note").get<std::string>();
    return c;
  });
}

inline ordered_json j_witness_to_json(const JWitness& w) {
  ordered_json j;
  j["a"] = element_to_json(w.a);
  j["H"] = w.H;
  ordered_json prov;
  prov["b"] = element_to_json(w.provenance.b);
  prov["translate"] = element_to_json(w.provenance.translate);
  prov["word_length"] = w.provenance.word_length;
  prov["line"] = w.provenance.line;
  j["provenance"] = std::move(prov);
  return j;
}

inline JWitness j_witness_from_json(const GroundSemigroup& sg, const ordered_json& j) {
  return detail::parse_guard([&] {
    JWitness w;
    w.a = element_from_json(sg, j.at("a"));
    w.H = j.at("H").get<std::vector<std::uint64_t>>();
    const ordered_json& prov = j.at("provenance");
    w.provenance.b = element_from_json(sg, prov.at("b"));
    w.provenance.translate = element_from_json(sg, prov.at("translate"));
    w.provenance.word_length = prov.at("word_length").get<std::size_t>();
    w.provenance.line = prov.at("line").get<std::string>();
    return w;
  });
}

inline ordered_json nc_witness_to_json(const NCWitness& w) {
  ordered_json j;
  j["m"] = w.m;
  j["a"] = elements_to_json(w.a);
  j["t"] = w.t;
  ordered_json prov;
  prov["word"] = w.provenance.word;
  prov["line"] = w.provenance.line;
  prov["multiplier"] = element_to_json(w.provenance.multiplier);
  prov["translate"] = element_to_json(w.provenance.translate);
  prov["word_length"] = w.provenance.word_length;
  j["provenance"] = std::move(prov);
  return j;
}

inline NCWitness nc_witness_from_json(const GroundSemigroup& sg,
                                      const ordered_json& j) {
  return detail::parse_guard([&] {
    NCWitness w;
    w.m = j.at("m").get<std::size_t>();
    w.a = elements_from_json(sg, j.at("a"));
    w.t = j.at("t").get<std::vector<std::uint64_t>>();
    const ordered_json& prov = j.at("provenance");
    w.provenance.word = prov.at("word").get<std::string>();
    w.provenance.line = prov.at("line").get<std::vector<std::string>>();
    w.provenance.multiplier = element_from_json(sg, prov.at("multiplier"));
    w.provenance.translate = element_from_json(sg, prov.at("translate"));
    w.provenance.word_length = prov.at("word_length").get<std::size_t>();
    return w;
  });
}

inline ordered_json central_table_to_json(const CentralTable& t) {
  ordered_json entries = ordered_json::array();
  for (const CentralEntry& e : t.entries) {
    ordered_json row;
    row["subset"] = e.subset;
    row["alpha"] = element_to_json(e.alpha);
    row["H"] = e.H;
    row["N"] = e.base_index;
    row["P"] = e.refine_index;
    ordered_json prov;
    prov["b"] = element_to_json(e.provenance.b);
    prov["translate"] = element_to_json(e.provenance.translate);
    prov["word_length"] = e.provenance.word_length;
    prov["line"] = e.provenance.line;
    row["provenance"] = std::move(prov);
    entries.push_back(std::move(row));
  }
  ordered_json j;
  j["entries"] = std::move(entries);
  return j;
}

inline CentralTable central_table_from_json(const GroundSemigroup& sg,
                                            const ordered_json& j) {
  return detail::parse_guard([&] {
    CentralTable t;
    for (const ordered_json& row : j.at("entries")) {
      CentralEntry e;
      e.subset = row.at("subset").get<std::vector<std::size_t>>();
      e.alpha = element_from_json(sg, row.at("alpha"));
      e.H = row.at("H").get<std::vector<std::uint64_t>>();
      e.base_index = row.at("N").get<std::size_t>();
      e.refine_index = row.at("P").get<std::size_t>();
      const ordered_json& prov = row.at("provenance");
      e.provenance.b = element_from_json(sg, prov.at("b"));
      e.provenance.translate = element_from_json(sg, prov.at("translate"));
      e.provenance.word_length = prov.at("word_length").get<std::size_t>();
      e.provenance.line = prov.at("line").get<std::string>();
      t.entries.push_back(std::move(e));
    }
    return t;
  });
}

inline ordered_json nc_central_table_to_json(const NCCentralTable& t) {
  ordered_json entries = ordered_json::array();
  for (const NCCentralEntry& e : t.entries) {
    ordered_json row;
    row["subset"] = e.subset;
    row["m"] = e.m;
    row["blocks"] = elements_to_json(e.blocks);
    row["tau"] = e.tau;
    row["N"] = e.base_index;
    row["P"] = e.refine_index;
    ordered_json prov;
    prov["word"] = e.provenance.word;
    prov["line"] = e.provenance.line;
    prov["multiplier"] = element_to_json(e.provenance.multiplier);
    prov["translate"] = element_to_json(e.provenance.translate);
    prov["word_length"] = e.provenance.word_length;
    row["provenance"] = std::move(prov);
    entries.push_back(std::move(row));
  }
  ordered_json j;
  j["entries"] = std::move(entries);
  return j;
}

inline NCCentralTable nc_central_table_from_json(const GroundSemigroup& sg,
                                                 const ordered_json& j) {
  return detail::parse_guard([&] {
    NCCentralTable t;
    for (const ordered_json& row : j.at("entries")) {
      NCCentralEntry e;
      e.subset = row.at("subset").get<std::vector<std::size_t>>();
      e.m = row.at("m").get<std::size_t>();
      e.blocks = elements_from_json(sg, row.at("blocks"));
      e.tau = row.at("tau").get<std::vector<std::uint64_t>>();
      e.base_index = row.at("N").get<std::size_t>();
      e.refine_index = row.at("P").get<std::size_t>();
      const ordered_json& prov = row.at("provenance");
      e.provenance.word = prov.at("word").get<std::string>();
      e.provenance.line = prov.at("line").get<std::vector<std::string>>();
      e.provenance.multiplier = element_from_json(sg, prov.at("multiplier"));
      e.provenance.translate = element_from_json(sg, prov.at("translate"));
      e.provenance.word_length = prov.at("word_length").get<std::size_t>();
      t.entries.push_back(std::move(e));
    }
    return t;
  });
}

inline ordered_json stage_table_to_json(const StageTable& t) {
  ordered_json entries = ordered_json::array();
  for (const StageEntry& e : t.entries) {
    ordered_json row;
    row["stage"] = e.stage;
    row["limit"] = e.family_limit;
    row["alpha"] = element_to_json(e.alpha);
    row["H"] = e.H;
    row["N"] = e.base_index;
    row["P"] = e.refine_index;
    ordered_json prov;
    prov["b"] = element_to_json(e.provenance.b);
    prov["translate"] = element_to_json(e.provenance.translate);
    prov["word_length"] = e.provenance.word_length;
    prov["line"] = e.provenance.line;
    row["provenance"] = std::move(prov);
    entries.push_back(std::move(row));
  }
  ordered_json j;
  j["entries"] = std::move(entries);
  return j;
}

inline StageTable stage_table_from_json(const GroundSemigroup& sg,
                                        const ordered_json& j) {
  return detail::parse_guard([&] {
    StageTable t;
    for (const ordered_json& row : j.at("entries")) {
      StageEntry e;
      e.stage = row.at("stage").get<std::size_t>();
      e.family_limit = row.at("limit").get<std::size_t>();
      e.alpha = element_from_json(sg, row.at("alpha"));
      e.H = row.at("H").get<std::vector<std::uint64_t>>();
      e.base_index = row.at("N").get<std::size_t>();
      e.refine_index = row.at("P").get<std::size_t>();
      const ordered_json& prov = row.at("provenance");
      e.provenance.b = element_from_json(sg, prov.at("b"));
      e.provenance.translate = element_from_json(sg, prov.at("translate"));
      e.provenance.word_length = prov.at("word_length").get<std::size_t>();
      e.provenance.line = prov.at("line").get<std::string>();
      t.entries.push_back(std::move(e));
    }
    return t;
  });
}

inline ordered_json verify_report_to_json(const VerifyReport& r) {
  ordered_json j;
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  j["failure_notes"] = r.failure_notes;
  j["ordering_ok"] = r.ordering_ok;
  j["ordering_notes"] = r.ordering_notes;
  j["ok"] = r.ok();
  return j;
}

inline ordered_json line_to_json(const CombinatorialLine& line) {
  ordered_json j;
  j["vw"] = line.vw.pattern;
  j["points"] = line.points;
  j["color"] = line.color;
  return j;
}

inline ordered_json hj_certificate_to_json(const HJCertificate& c) {
  ordered_json j;
  j["colors"] = c.colors;
  j["alphabet"] = c.alphabet;
  j["length_limit"] = c.length_limit;
  if (c.hj_number)
    j["HJ"] = *c.hj_number;
  else
    j["HJ"] = nullptr;
  ordered_json ce = ordered_json::array();
  for (const HJCounterexample& x : c.counterexamples) {
    ordered_json one;
    one["N"] = x.length;
    one["coloring"] = x.coloring;
    ce.push_back(std::move(one));
  }
  j["counterexamples"] = std::move(ce);
  return j;
}

inline ordered_json decomposition_to_json(const Decomposition& d) {
  ordered_json j;
  j["thick"] = set_to_json(d.thick_part);
  j["syndetic"] = set_to_json(d.syndetic_part);
  j["thick_certificate"] = certificate_to_json(d.thick_cert);
  j["syndetic_certificate"] = certificate_to_json(d.syndetic_cert);
  return j;
}

inline ordered_json collectionwise_to_json(const CollectionwiseReport& r) {
  ordered_json j;
  j["ok"] = r.ok;
  j["translates"] = elements_to_json(r.translates);
  j["depth"] = r.depth;
  j["label"] = r.label;
  return j;
}

// Artifact envelope: schema, kind, timestamp, payload.  Everything except the
// timestamp is deterministic for fixed inputs.
inline ordered_json make_artifact(const std::string& kind, ordered_json payload) {
  ordered_json j;
  j["schema"] = 1;
  j["kind"] = kind;
  const std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  j["generated_at"] = buf;
  for (auto& [key, value] : payload.items()) j[key] = std::move(value);
  return j;
}

inline void write_json_file(const std::filesystem::path& path, const ordered_json& j) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) fail(ErrorKind::invalid_input, "cannot write " + path.string());
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

inline ordered_json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::invalid_input, "cannot read " + path.string());
  return detail::parse_guard([&] {
    ordered_json j;
    in >> j;
    return j;
  });
}

} // namespace censet
