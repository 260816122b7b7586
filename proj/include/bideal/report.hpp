#ifndef BIDEAL_REPORT_HPP
#define BIDEAL_REPORT_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "arrangement.hpp"
#include "bernstein.hpp"
#include "document.hpp"
#include "lattice.hpp"
#include "structure.hpp"

namespace bideal {

inline constexpr const char* tool_version = "1.0.0";

enum class ReportFormat { text, json, latex };

/*
 * Result of one CLI command. The payload is the single source of truth:
 * text and LaTeX renderings are computed from it, never from library objects.
 */
struct ReportDocument {
  std::string command;
  std::string input_digest;
  nlohmann::json payload;
  std::string version = tool_version;

  nlohmann::json to_json() const {
    return {{"command", command}, {"input_digest", input_digest}, {"result", payload}, {"version", version}};
  }
};

// ---------------------------------------------------------------------------
// Payload builders (1-based indices throughout)
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::json one_based(const IndexSet& J) {
  auto out = nlohmann::json::array();
  for (std::size_t i : J) out.push_back(i + 1);
  return out;
}

inline IndexSet zero_based(const nlohmann::json& j) {
  IndexSet out;
  for (const auto& v : j) out.push_back(v.get<std::size_t>() - 1);
  return out;
}

inline IntPolynomial int_poly(const nlohmann::json& coeffs) {
  return IntPolynomial{coeffs.get<std::vector<std::int64_t>>()};
}

inline std::string index_set_text(const nlohmann::json& J) {
  std::string out = "{";
  for (std::size_t k = 0; k < J.size(); ++k) out += (k ? "," : "") + J[k].dump();
  return out + "}";
}

inline std::string latex_set(const nlohmann::json& J) {
  if (J.empty()) return "\\emptyset";
  std::string t = index_set_text(J);
  return "\\{" + t.substr(1, t.size() - 2) + "\\}";
}

inline std::string join_ints(const nlohmann::json& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : " ") + v.dump();
  return out;
}

}  // namespace detail

inline nlohmann::json lattice_payload(const IntersectionLattice& lattice) {
  auto flats = nlohmann::json::array();
  for (const auto& x : lattice.flats) {
    auto basis = nlohmann::json::array();
    for (const auto& row : x.space.rows()) {
      auto r = nlohmann::json::array();
      for (const auto& q : row) r.push_back(to_string(q));
      basis.push_back(std::move(r));
    }
    flats.push_back({{"J", detail::one_based(x.J)}, {"codim", x.codim}, {"mobius", x.mobius}, {"basis", basis}});
  }
  return {{"ambient_dim", lattice.ambient_dim}, {"flat_count", lattice.flats.size()}, {"flats", flats}};
}

inline nlohmann::json charpoly_payload(const IntPolynomial& chi) {
  return {{"coefficients", chi.coeffs}, {"polynomial", chi.to_string()}};
}

inline nlohmann::json decompose_payload(const IrreducibleDecomposition& d) {
  auto blocks = nlohmann::json::array();
  for (const auto& b : d.blocks) blocks.push_back(detail::one_based(b));
  return {{"blocks", blocks},
          {"e0", d.e0},
          {"rank", d.rank},
          {"irreducible", d.irreducible()},
          {"essential", d.essential()}};
}

inline nlohmann::json exponents_payload(const ExponentReport& r) {
  return {{"integral", r.integral()},
          {"exponents", r.roots},
          {"char_poly", charpoly_payload(r.char_poly)},
          {"residual", charpoly_payload(r.residual)}};
}

inline nlohmann::json freeness_payload(const FreenessVerdict& v, const ExponentReport& exps) {
  nlohmann::json cert = nullptr;
  if (const auto* chain = std::get_if<InductiveChain>(&v.certificate)) {
    auto steps = nlohmann::json::array();
    for (const InductiveStep* s = chain->root.get(); s; s = s->deletion.get())
      steps.push_back({{"deleted", s->deleted + 1},
                       {"exponents", s->exponents},
                       {"deletion_exponents", s->deletion_exponents},
                       {"restriction_exponents", s->restriction_exponents}});
    cert = {{"kind", "inductive-chain"}, {"length", chain->length()}, {"steps", steps}};
  } else if (const auto* r2 = std::get_if<RankAtMostTwo>(&v.certificate)) {
    cert = {{"kind", "rank-at-most-two"}, {"rank", r2->rank}};
  } else if (const auto* saito = std::get_if<SaitoWitness>(&v.certificate)) {
    auto basis = nlohmann::json::array();
    for (const auto& d : saito->basis) basis.push_back(d.to_string());
    cert = {{"kind", "saito"}, {"basis", basis}, {"c", to_string(saito->c)}};
  }
  nlohmann::json out = {{"outcome", std::string(to_string(v.outcome))},
                        {"certificate", cert},
                        {"expanded_nodes", v.expanded_nodes},
                        {"budget_exhausted", v.budget_exhausted},
                        {"exponents", exponents_payload(exps)}};
  return out;
}

inline nlohmann::json bideal_payload(const FactoredSPolynomial& f) {
  auto factors = nlohmann::json::array();
  for (const auto& factor : f.factors)
    factors.push_back({{"support", detail::one_based(factor.support)}, {"constant", factor.constant}});
  return {{"variables", f.variable_count},
          {"degree", f.degree()},
          {"factors", factors},
          {"generator", f.to_string()},
          {"specialized", specialize(f).to_string()}};
}

inline nlohmann::json slopes_payload(const SlopeSet& s) {
  auto slopes = nlohmann::json::array();
  for (const auto& J : s.slopes) slopes.push_back(detail::one_based(J));
  return {{"slopes", slopes}};
}

// ---------------------------------------------------------------------------
// Renderers
// ---------------------------------------------------------------------------

inline std::string render_json(const ReportDocument& r) { return r.to_json().dump(2) + "\n"; }

namespace detail {

inline FactoredSPolynomial factors_from_payload(const nlohmann::json& p) {
  std::vector<LinearFactor> factors;
  for (const auto& f : p.at("factors")) factors.push_back({zero_based(f.at("support")), f.at("constant").get<std::int64_t>()});
  return {std::move(factors), p.at("variables").get<std::size_t>()};
}

inline std::string render_lattice(const nlohmann::json& p, bool latex) {
  std::string out;
  if (latex) {
    out += "\\begin{tabular}{rrl}\n";
    out += "codim & $\\mu$ & $J(X)$ \\\\ \\hline\n";
    for (const auto& x : p.at("flats")) {
      out += x.at("codim").dump() + " & " + x.at("mobius").dump() + " & $" + latex_set(x.at("J")) + "$ \\\\\n";
    }
    return out + "\\end{tabular}\n";
  }
  out += "flats: " + p.at("flat_count").dump() + "\n";
  out += "codim mobius J\n";
  for (const auto& x : p.at("flats"))
    out += x.at("codim").dump() + " " + x.at("mobius").dump() + " " + index_set_text(x.at("J")) + "\n";
  return out;
}

inline std::string render_decompose(const nlohmann::json& p, bool latex) {
  std::string blocks;
  for (const auto& b : p.at("blocks")) {
    std::string t = latex ? latex_set(b) : index_set_text(b);
    blocks += (blocks.empty() ? "" : " ") + t;
  }
  std::string irr = p.at("irreducible").get<bool>() ? "yes" : "no";
  if (latex) return "$" + blocks + "$, $e_{0} = " + p.at("e0").dump() + "$, irreducible: " + irr + "\n";
  return "blocks: " + blocks + "\ne0: " + p.at("e0").dump() + "\nrank: " + p.at("rank").dump() +
         "\nirreducible: " + irr + "\n";
}

inline std::string render_exponents(const nlohmann::json& p, bool latex) {
  if (p.at("integral").get<bool>()) {
    if (latex) return "$\\exp(\\mathcal{A}) = (" + join_ints(p.at("exponents")) + ")$\n";
    return "exponents: " + join_ints(p.at("exponents")) + "\n";
  }
  IntPolynomial residual = int_poly(p.at("residual").at("coefficients"));
  IntPolynomial chi = int_poly(p.at("char_poly").at("coefficients"));
  if (latex)
    return "$\\chi(\\mathcal{A},t) = " + chi.to_string(true) + "$ has non-integral roots (residual $" +
           residual.to_string(true) + "$)\n";
  return "non-integral roots: characteristic polynomial " + chi.to_string() + " leaves factor " +
         residual.to_string() + "\n";
}

inline std::string render_freeness(const nlohmann::json& p, bool latex) {
  std::string outcome = p.at("outcome").get<std::string>();
  std::string line = outcome;
  const auto& cert = p.at("certificate");
  if (!cert.is_null()) {
    std::string kind = cert.at("kind").get<std::string>();
    if (kind == "inductive-chain")
      line += " (inductive chain of length " + cert.at("length").dump() + ")";
    else if (kind == "rank-at-most-two")
      line += " (rank at most two)";
    else
      line += " (Saito basis, c = " + cert.at("c").get<std::string>() + ")";
  } else if (outcome == "not-free") {
    line += " (characteristic polynomial has non-integral roots)";
  } else if (p.at("budget_exhausted").get<bool>()) {
    line += " (search depth limit reached)";
  } else {
    line += " (no addition-deletion chain found)";
  }
  return line + "\n" + render_exponents(p.at("exponents"), latex);
}

inline std::string render_slopes(const nlohmann::json& p, bool latex) {
  SlopeSet s;
  for (const auto& J : p.at("slopes")) s.slopes.push_back(zero_based(J));
  std::string out;
  for (const auto& J : s.slopes) out += (latex ? "$" + s.to_string(J, true) + "$" : s.to_string(J)) + "\n";
  return out;
}

inline std::string render_family(const nlohmann::json& p, bool latex) {
  if (!latex) return p.dump(2) + "\n";
  ArrangementDocument doc = parse_document(p);
  Arrangement a = to_arrangement(doc);
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    MultiPoly l = MultiPoly::linear(a.form(i));
    std::string s = l.to_string();
    std::string tex;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == '*') continue;
      if (s[k] == 'x') {
        std::size_t end = k + 1;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        tex += "x_{" + s.substr(k + 1, end - k - 1) + "}";
        k = end - 1;
      } else {
        tex += s[k];
      }
    }
    out += "$" + tex + "$\n";
  }
  return out;
}

}  // namespace detail

inline std::string render_text_or_latex(const ReportDocument& r, bool latex) {
  const auto& p = r.payload;
  if (r.command == "lattice") return detail::render_lattice(p, latex);
  if (r.command == "charpoly")
    return detail::int_poly(p.at("coefficients")).to_string(latex) + "\n";
  if (r.command == "decompose") return detail::render_decompose(p, latex);
  if (r.command == "exponents") return detail::render_exponents(p, latex);
  if (r.command == "freeness") return detail::render_freeness(p, latex);
  if (r.command == "bideal") return detail::factors_from_payload(p).to_string(latex) + "\n";
  if (r.command == "slopes") return detail::render_slopes(p, latex);
  if (r.command == "family") return detail::render_family(p, latex);
  return p.dump(2) + "\n";
}

inline std::string render(const ReportDocument& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: return render_json(r);
    case ReportFormat::text: return render_text_or_latex(r, false);
    case ReportFormat::latex: return render_text_or_latex(r, true);
  }
  return {};
}

}  // namespace bideal

#endif  // BIDEAL_REPORT_HPP
