#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "censet/censet.hpp"

namespace {

using censet::ordered_json;

int code_of(censet::ErrorKind k) {
  switch (k) {
    case censet::ErrorKind::invalid_input:
    case censet::ErrorKind::wrong_algorithm: return 2;
    case censet::ErrorKind::infeasible: return 3;
    case censet::ErrorKind::truncation_too_small:
    case censet::ErrorKind::window_too_small:
    case censet::ErrorKind::depth_too_small:
    case censet::ErrorKind::verification_failed: return 1;
  }
  return 2;
}

struct Paths {
  std::string semigroup, set, sequences, chain, artifact, coloring, out;
  std::uint64_t truncation = 0;
  std::uint64_t window = 0;
  std::uint64_t budget = 1'000'000;
  std::uint64_t min_index = 0;
  std::uint64_t depth = 0;
  std::uint64_t stages = 1;
  bool strong = false;
  int colors = 0;
  int alphabet = 0;
  std::uint64_t length = 0;
  std::uint64_t length_limit = 0;
};

void emit(const ordered_json& artifact, const std::string& out) {
  if (out.empty()) {
    std::cout << artifact.dump(2) << '\n';
  } else {
    censet::write_json_file(out, artifact);
    std::cout << "wrote " << out << '\n';
  }
}

censet::GroundSemigroup load_sg(const std::string& path) {
  if (path.empty())
    censet::fail(censet::ErrorKind::invalid_input, "missing --semigroup file");
  return censet::semigroup_from_json(censet::read_json_file(path));
}

censet::SequenceFamily load_family(const censet::GroundSemigroup& sg,
                                   const Paths& p) {
  if (p.sequences.empty())
    censet::fail(censet::ErrorKind::invalid_input, "missing --sequences file");
  censet::SequenceFamily family =
      censet::family_from_json(sg, censet::read_json_file(p.sequences));
  if (p.truncation != 0 && p.truncation != family.truncation())
    family = family.truncated(sg, p.truncation);
  return family;
}

censet::CentralChain load_chain(const censet::GroundSemigroup& sg, const Paths& p) {
  if (p.chain.empty())
    censet::fail(censet::ErrorKind::invalid_input, "missing --chain file");
  censet::CentralChain chain =
      censet::chain_from_json(sg, censet::read_json_file(p.chain));
  if (p.depth != 0 && p.depth < chain.depth()) {
    std::vector<censet::SetSpec> sets;
    for (std::size_t n = 1; n <= p.depth; ++n) sets.push_back(chain.at(n));
    chain = censet::CentralChain::of(std::move(sets));
  }
  return chain;
}

ordered_json classification_payload(const censet::GroundSemigroup& sg,
                                    const censet::SetSpec& A) {
  ordered_json payload;
  payload["inputs"]["semigroup"] = censet::semigroup_to_json(sg);
  payload["inputs"]["set"] = censet::set_to_json(A);
  payload["syndetic"] = censet::certificate_to_json(censet::is_syndetic(sg, A));
  payload["thick"] = censet::certificate_to_json(censet::is_thick(sg, A));
  const censet::Certificate pws = censet::is_piecewise_syndetic(sg, A);
  payload["piecewise_syndetic"] = censet::certificate_to_json(pws);
  if (pws.verdict != censet::Verdict::no) {
    try {
      payload["decomposition"] =
          censet::decomposition_to_json(censet::decompose_pws(sg, A));
    } catch (const censet::Error& e) {
      payload["decomposition_error"] = e.what();
    }
  }
  return payload;
}

int run_classify(const Paths& p) {
  const censet::GroundSemigroup sg = load_sg(p.semigroup);
  if (p.set.empty())
    censet::fail(censet::ErrorKind::invalid_input, "missing --set file");
  censet::SetSpec A = censet::set_from_json(sg, censet::read_json_file(p.set));
  if (p.window != 0) {
    if (sg.backend() != censet::Backend::naturals ||
        A.kind() != censet::SetKind::ev_periodic)
      censet::fail(censet::ErrorKind::invalid_input,
                   "--window resamples eventually periodic sets over the naturals");
    A = censet::SetSpec::window_mask(
        censet::detail::nat_samples(sg, A, p.window), true);
  }
  emit(censet::make_artifact("classification", classification_payload(sg, A)), p.out);
  return 0;
}

int run_hj_line(const Paths& p) {
  if (p.coloring.empty())
    censet::fail(censet::ErrorKind::invalid_input, "missing --coloring file");
  const ordered_json cj = censet::read_json_file(p.coloring);
  return censet::detail::parse_guard([&] {
    const int t = p.alphabet ? p.alphabet : cj.at("alphabet").get<int>();
    const std::size_t n = p.length ? p.length : cj.at("length").get<std::size_t>();
    const int r = cj.at("colors").get<int>();
    const std::vector<int> table = cj.at("table").get<std::vector<int>>();
    const censet::Coloring chi = censet::table_coloring(t, n, r, table);
    const auto line = p.strong ? censet::find_strong_variable_word(t, n, chi)
                               : censet::find_monochromatic_line(t, n, chi);
    ordered_json payload;
    payload["inputs"]["alphabet"] = t;
    payload["inputs"]["length"] = n;
    payload["inputs"]["colors"] = r;
    payload["inputs"]["table"] = table;
    payload["inputs"]["strong"] = p.strong;
    payload["found"] = line.has_value();
    if (line) payload["line"] = censet::line_to_json(*line);
    emit(censet::make_artifact("hj-line", std::move(payload)), p.out);
    return line ? 0 : 1;
  });
}

int run_hj_certify(const Paths& p) {
  const censet::HJCertificate cert = censet::hj_certificate_search(
      p.colors, p.alphabet, p.length_limit, p.budget);
  ordered_json payload = censet::hj_certificate_to_json(cert);
  payload["inputs"]["budget"] = p.budget;
  emit(censet::make_artifact("hj-certificate", std::move(payload)), p.out);
  return cert.hj_number ? 0 : 1;
}

int run_jset_witness(const Paths& p) {
  const censet::GroundSemigroup sg = load_sg(p.semigroup);
  if (p.set.empty())
    censet::fail(censet::ErrorKind::invalid_input, "missing --set file");
  const censet::SetSpec A = censet::set_from_json(sg, censet::read_json_file(p.set));
  const censet::SequenceFamily family = load_family(sg, p);
  const censet::SearchBounds bounds{static_cast<std::size_t>(p.min_index), p.budget};
  ordered_json payload;
  payload["inputs"]["semigroup"] = censet::semigroup_to_json(sg);
  payload["inputs"]["set"] = censet::set_to_json(A);
  payload["inputs"]["sequences"] = censet::family_to_json(family);
  payload["inputs"]["min_index"] = p.min_index;
  std::string kind;
  bool verified = false;
  if (sg.commutative()) {
    const censet::JWitness w = censet::pws_to_jset_commutative(sg, A, family, bounds);
    verified = censet::check_j_witness(sg, A, family, w);
    ordered_json wj = censet::j_witness_to_json(w);
    for (auto& [key, value] : wj.items()) payload[key] = std::move(value);
    kind = "j-witness";
  } else {
    const censet::NCWitness w =
        censet::pws_to_jset_noncommutative(sg, A, family, bounds);
    verified = censet::check_nc_witness(sg, A, family, w);
    ordered_json wj = censet::nc_witness_to_json(w);
    for (auto& [key, value] : wj.items()) payload[key] = std::move(value);
    kind = "nc-witness";
  }
  payload["verified"] = verified;
  emit(censet::make_artifact(kind, std::move(payload)), p.out);
  return verified ? 0 : 1;
}

int run_central_build(const Paths& p) {
  const censet::GroundSemigroup sg = load_sg(p.semigroup);
  const censet::CentralChain chain = load_chain(sg, p);
  const censet::SequenceFamily family = load_family(sg, p);
  ordered_json payload;
  payload["inputs"]["semigroup"] = censet::semigroup_to_json(sg);
  payload["inputs"]["chain"] = censet::chain_to_json(chain);
  payload["inputs"]["sequences"] = censet::family_to_json(family);
  std::string kind;
  censet::VerifyReport rep;
  if (sg.commutative()) {
    const censet::CentralTable table =
        censet::build_commutative_witness(sg, chain, family, p.budget);
    rep = censet::verify_chain_sums(sg, chain.at(1), family, table);
    payload["entries"] = censet::central_table_to_json(table)["entries"];
    kind = "central-table";
  } else {
    const censet::NCCentralTable table =
        censet::build_noncommutative_witness(sg, chain, family, p.budget);
    rep = censet::verify_chain_products(sg, chain.at(1), family, table);
    payload["entries"] = censet::nc_central_table_to_json(table)["entries"];
    kind = "nc-central-table";
  }
  payload["report"] = censet::verify_report_to_json(rep);
  emit(censet::make_artifact(kind, std::move(payload)), p.out);
  return rep.ok() ? 0 : 1;
}

int run_central_stages(const Paths& p, bool phi) {
  const censet::GroundSemigroup sg = load_sg(p.semigroup);
  const censet::CentralChain chain = load_chain(sg, p);
  const censet::SequenceFamily family = load_family(sg, p);
  const censet::StageTable table =
      phi ? censet::derive_phi_form(sg, chain, family, p.stages, p.budget)
          : censet::derive_furstenberg(sg, chain, family, p.stages, p.budget);
  const censet::VerifyReport rep =
      phi ? censet::verify_phi_form(sg, chain.at(1), family, table)
          : censet::verify_furstenberg(sg, chain.at(1), family, table);
  ordered_json payload;
  payload["inputs"]["semigroup"] = censet::semigroup_to_json(sg);
  payload["inputs"]["chain"] = censet::chain_to_json(chain);
  payload["inputs"]["sequences"] = censet::family_to_json(family);
  payload["inputs"]["stages"] = p.stages;
  payload["entries"] = censet::stage_table_to_json(table)["entries"];
  payload["report"] = censet::verify_report_to_json(rep);
  emit(censet::make_artifact(phi ? "phi-table" : "furstenberg-table",
                             std::move(payload)),
       p.out);
  return rep.ok() ? 0 : 1;
}

ordered_json strip_envelope(ordered_json a) {
  a.erase("schema");
  a.erase("kind");
  a.erase("generated_at");
  return a;
}

int report_verify(bool ok, const std::string& kind, const std::string& detail,
                  const Paths& p) {
  ordered_json payload;
  payload["verified"] = ok;
  payload["target"] = kind;
  if (!detail.empty()) payload["detail"] = detail;
  if (!p.out.empty())
    censet::write_json_file(p.out, censet::make_artifact("verification",
                                                         std::move(payload)));
  std::cout << (ok ? "verified " : "FAILED ") << kind
            << (detail.empty() ? "" : ": " + detail) << '\n';
  return ok ? 0 : 1;
}

int run_verify(const Paths& p) {
  if (p.artifact.empty())
    censet::fail(censet::ErrorKind::invalid_input, "missing --artifact file");
  const ordered_json art = censet::read_json_file(p.artifact);
  return censet::detail::parse_guard([&] {
    if (art.value("schema", 0) != 1)
      censet::fail(censet::ErrorKind::invalid_input, "unsupported artifact schema");
    const std::string kind = art.at("kind").get<std::string>();
    const ordered_json inputs = art.value("inputs", ordered_json::object());
    const auto semigroup = [&] {
      return p.semigroup.empty()
                 ? censet::semigroup_from_json(inputs.at("semigroup"))
                 : load_sg(p.semigroup);
    };
    if (kind == "classification") {
      const censet::GroundSemigroup sg = semigroup();
      const censet::SetSpec A =
          p.set.empty()
              ? censet::set_from_json(sg, inputs.at("set"))
              : censet::set_from_json(sg, censet::read_json_file(p.set));
      ordered_json fresh = classification_payload(sg, A);
      fresh["inputs"] = inputs;  // compare results, not echoed inputs
      const bool ok = fresh == strip_envelope(art);
      return report_verify(ok, kind, ok ? "" : "recomputation differs", p);
    }
    if (kind == "j-witness" || kind == "nc-witness") {
      const censet::GroundSemigroup sg = semigroup();
      const censet::SetSpec A =
          p.set.empty()
              ? censet::set_from_json(sg, inputs.at("set"))
              : censet::set_from_json(sg, censet::read_json_file(p.set));
      const censet::SequenceFamily family =
          p.sequences.empty() ? censet::family_from_json(sg, inputs.at("sequences"))
                              : load_family(sg, p);
      bool ok;
      if (kind == "j-witness")
        ok = censet::check_j_witness(sg, A, family,
                                     censet::j_witness_from_json(sg, art));
      else
        ok = censet::check_nc_witness(sg, A, family,
                                      censet::nc_witness_from_json(sg, art));
      return report_verify(ok, kind, ok ? "" : "membership check failed", p);
    }
    if (kind == "central-table" || kind == "nc-central-table" ||
        kind == "furstenberg-table" || kind == "phi-table") {
      const censet::GroundSemigroup sg = semigroup();
      const censet::SequenceFamily family =
          p.sequences.empty() ? censet::family_from_json(sg, inputs.at("sequences"))
                              : load_family(sg, p);
      censet::SetSpec A = [&] {
        if (!p.set.empty())
          return censet::set_from_json(sg, censet::read_json_file(p.set));
        const censet::CentralChain chain =
            p.chain.empty() ? censet::chain_from_json(sg, inputs.at("chain"))
                            : load_chain(sg, p);
        return chain.at(1);
      }();
      censet::VerifyReport rep;
      if (kind == "central-table")
        rep = censet::verify_chain_sums(sg, A, family,
                                        censet::central_table_from_json(sg, art));
      else if (kind == "nc-central-table")
        rep = censet::verify_chain_products(
            sg, A, family, censet::nc_central_table_from_json(sg, art));
      else if (kind == "furstenberg-table")
        rep = censet::verify_furstenberg(sg, A, family,
                                         censet::stage_table_from_json(sg, art));
      else
        rep = censet::verify_phi_form(sg, A, family,
                                      censet::stage_table_from_json(sg, art));
      std::string detail = std::to_string(rep.checks) + " checks, " +
                           std::to_string(rep.failures) + " failures";
      if (!rep.ordering_ok) detail += ", ordering violated";
      return report_verify(rep.ok(), kind, detail, p);
    }
    if (kind == "hj-certificate") {
      const censet::HJCertificate cert = censet::hj_certificate_search(
          art.at("colors").get<int>(), art.at("alphabet").get<int>(),
          art.at("length_limit").get<std::size_t>(),
          inputs.value("budget", std::uint64_t{1'000'000}));
      ordered_json fresh = censet::hj_certificate_to_json(cert);
      fresh["inputs"] = inputs;
      const bool ok = fresh == strip_envelope(art);
      return report_verify(ok, kind, ok ? "" : "recomputation differs", p);
    }
    if (kind == "hj-line") {
      const int t = inputs.at("alphabet").get<int>();
      const std::size_t n = inputs.at("length").get<std::size_t>();
      const censet::Coloring chi =
          censet::table_coloring(t, n, inputs.at("colors").get<int>(),
                                 inputs.at("table").get<std::vector<int>>());
      const auto line = inputs.at("strong").get<bool>()
                            ? censet::find_strong_variable_word(t, n, chi)
                            : censet::find_monochromatic_line(t, n, chi);
      ordered_json fresh;
      fresh["inputs"] = inputs;
      fresh["found"] = line.has_value();
      if (line) fresh["line"] = censet::line_to_json(*line);
      const bool ok = fresh == strip_envelope(art);
      return report_verify(ok, kind, ok ? "" : "recomputation differs", p);
    }
    censet::fail(censet::ErrorKind::invalid_input,
                 "cannot verify artifact kind '" + kind + "'");
  });
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"certificates and witnesses for syndetic-type set structure"};
  app.require_subcommand(1);
  Paths p;

  CLI::App* classify = app.add_subcommand("classify", "classify a set and decompose it");
  classify->add_option("--semigroup", p.semigroup)->required();
  classify->add_option("--set", p.set)->required();
  classify->add_option("--window", p.window);
  classify->add_option("--out", p.out);

  CLI::App* hj = app.add_subcommand("hj", "combinatorial line tools");
  hj->require_subcommand(1);
  CLI::App* hj_line = hj->add_subcommand("line", "find a monochromatic line");
  hj_line->add_option("--coloring", p.coloring)->required();
  hj_line->add_option("--alphabet", p.alphabet);
  hj_line->add_option("--length", p.length);
  hj_line->add_flag("--strong", p.strong);
  hj_line->add_option("--out", p.out);
  CLI::App* hj_certify =
      hj->add_subcommand("certify", "search for the least forcing length");
  hj_certify->add_option("colors", p.colors)->required();
  hj_certify->add_option("alphabet", p.alphabet)->required();
  hj_certify->add_option("length_limit", p.length_limit)->required();
  hj_certify->add_option("--budget", p.budget);
  hj_certify->add_option("--out", p.out);

  CLI::App* jset = app.add_subcommand("jset", "witness extraction");
  jset->require_subcommand(1);
  CLI::App* jset_witness =
      jset->add_subcommand("witness", "extract a witness from a piecewise syndetic set");
  jset_witness->add_option("--semigroup", p.semigroup)->required();
  jset_witness->add_option("--set", p.set)->required();
  jset_witness->add_option("--sequences", p.sequences)->required();
  jset_witness->add_option("--truncation", p.truncation);
  jset_witness->add_option("--min-index", p.min_index);
  jset_witness->add_option("--budget", p.budget);
  jset_witness->add_option("--out", p.out);

  CLI::App* central = app.add_subcommand("central", "witness tables over chains");
  central->require_subcommand(1);
  CLI::App* central_build =
      central->add_subcommand("build", "one witness row per subset of the family");
  central_build->add_option("--semigroup", p.semigroup)->required();
  central_build->add_option("--chain", p.chain)->required();
  central_build->add_option("--sequences", p.sequences)->required();
  central_build->add_option("--truncation", p.truncation);
  central_build->add_option("--depth", p.depth);
  central_build->add_option("--budget", p.budget);
  central_build->add_option("--out", p.out);
  CLI::App* central_furst =
      central->add_subcommand("furstenberg", "stage table with a fixed selector");
  CLI::App* central_phi =
      central->add_subcommand("phi", "stage table with bounded selectors");
  for (CLI::App* sub : {central_furst, central_phi}) {
    sub->add_option("--semigroup", p.semigroup)->required();
    sub->add_option("--chain", p.chain)->required();
    sub->add_option("--sequences", p.sequences)->required();
    sub->add_option("--stages", p.stages)->required();
    sub->add_option("--truncation", p.truncation);
    sub->add_option("--depth", p.depth);
    sub->add_option("--budget", p.budget);
    sub->add_option("--out", p.out);
  }

  CLI::App* verify = app.add_subcommand("verify", "replay an artifact");
  verify->add_option("--artifact", p.artifact)->required();
  verify->add_option("--semigroup", p.semigroup);
  verify->add_option("--set", p.set);
  verify->add_option("--sequences", p.sequences);
  verify->add_option("--chain", p.chain);
  verify->add_option("--truncation", p.truncation);
  verify->add_option("--out", p.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*classify) return run_classify(p);
    if (*hj_line) return run_hj_line(p);
    if (*hj_certify) return run_hj_certify(p);
    if (*jset_witness) return run_jset_witness(p);
    if (*central_build) return run_central_build(p);
    if (*central_furst) return run_central_stages(p, false);
    if (*central_phi) return run_central_stages(p, true);
    if (*verify) return run_verify(p);
  } catch (const censet::Error& e) {
    std::cerr << "error (" << censet::error_kind_name(e.kind()) << "): " << e.what()
              << '\n';
    return code_of(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
