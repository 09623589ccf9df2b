#pragma once

#include "entangle/certification.hpp"
#include "entangle/dsequence.hpp"
#include "entangle/minors.hpp"
#include "entangle/structured.hpp"
#include "entangle/subspace.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace entangle {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& x) { return to_string(x); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational{j.get<long long>()};
  throw std::invalid_argument("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

inline Json vector_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

inline Json matrix_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : m.row(r)) row.push_back(rational_json(x));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline ExactMatrix matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const Json& entries = j.at("entries");
  if (entries.size() != rows) throw DimensionError("matrix JSON: entries has wrong row count");
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (entries[r].size() != cols) throw DimensionError("matrix JSON: ragged row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(entries[r][c]);
  }
  return m;
}

inline Json index_set_json(const IndexSet& s) { return Json(s); }

inline Json family_json(const BandedFamily& f) {
  return Json{{"family", std::string(family_name(f.family))}, {"a", rational_json(f.a)}, {"b", rational_json(f.b)},
              {"n", f.n}};
}

/// {"family":"E","a":"3","b":"1","n":5,"delete_rows":[2]}; b defaults to 1
/// and delete_rows to empty.
struct FamilyRequest {
  BandedFamily spec;
  IndexSet delete_rows;
};

inline FamilyRequest family_request_from_json(const Json& j) {
  FamilyRequest req;
  req.spec.family = parse_family(j.at("family").get<std::string>());
  req.spec.a = rational_from_json(j.at("a"));
  req.spec.b = j.contains("b") ? rational_from_json(j.at("b")) : Rational{1};
  const auto n = j.at("n").get<long long>();
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  req.spec.n = static_cast<std::size_t>(n);
  if (j.contains("delete_rows")) req.delete_rows = j.at("delete_rows").get<IndexSet>();
  return req;
}

inline Json dsequence_json(const DSequence& d, std::string_view method, long first = -1) {
  Json values = Json::array();
  for (long n = first; n <= d.n_max(); ++n) values.push_back(Json{{"n", n}, {"value", rational_json(d[n])}});
  return Json{{"a", rational_json(d.a())}, {"b", rational_json(d.b())}, {"method", method}, {"values", values}};
}

inline Json minor_report_json(const MinorReport& r) {
  Json minors = Json::array();
  for (const auto& e : r.entries) minors.push_back(Json{{"deleted", e.deleted}, {"value", rational_json(e.value)}});
  Json j;
  j["family"] = r.spec ? Json(std::string(family_name(r.spec->family))) : Json(nullptr);
  if (r.spec) {
    j["a"] = rational_json(r.spec->a);
    j["b"] = rational_json(r.spec->b);
    j["n"] = r.spec->n;
  }
  j["order"] = r.order;
  j["minors"] = std::move(minors);
  j["all_nonzero"] = r.all_nonzero;
  j["zero_witnesses"] = r.zero_witnesses;
  return j;
}

inline Json min_support_json(const MinSupport& s) {
  Json j{{"count", s.count}, {"combination", vector_json(s.combination)}, {"image", vector_json(s.image)}};
  j["column"] = s.column ? Json(*s.column) : Json(nullptr);
  j["support_rows"] = s.support_rows ? Json(*s.support_rows) : Json(nullptr);
  return j;
}

inline Json certificate_json(const Certificate& c) {
  Json j{{"claim", std::string(claim_name(c.claim))},
         {"family", std::string(family_name(c.spec.family))},
         {"a", rational_json(c.spec.a)},
         {"n", c.spec.n},
         {"hypothesis", c.hypothesis},
         {"theory_applies", c.theory_applies},
         {"verified_exhaustively", c.verified_exhaustively},
         {"minors_checked", c.minors_checked}};
  j["counterexample"] = c.counterexample ? Json(*c.counterexample) : Json(nullptr);
  if (c.endpoint_minor) j["endpoint_minor"] = rational_json(*c.endpoint_minor);
  if (c.endpoint_matches) j["endpoint_matches"] = *c.endpoint_matches;
  j["contradicts_theory"] = c.contradicts_theory();
  return j;
}

inline Json terms_json(const TensorVector& v) {
  Json t = Json::array();
  for (const auto& term : phi_inverse(v)) t.push_back(Json::array({term.i, term.j, rational_json(term.coefficient)}));
  return t;
}

inline Json subspace_json(const SubspaceBasis& s) {
  Json basis = Json::array();
  for (const auto& g : s.generators)
    basis.push_back(
        Json{{"antidiagonal", g.antidiagonal}, {"window_start_row", g.window_start_row}, {"coeffs", terms_json(g.vector)}});
  return Json{{"name", s.name},
              {"m", s.m},
              {"n", s.n},
              {"pattern", vector_json(s.pattern)},
              {"claimed_min_rank", s.claimed_min_rank},
              {"hypothesis", s.hypothesis},
              {"claim_asserted", s.claim_asserted},
              {"dimension", s.dimension()},
              {"basis", std::move(basis)}};
}

inline Json verdict_json(const Verdict& v) {
  Json j{{"mode", std::string(mode_name(v.mode))}, {"k", v.k}, {"passed", v.passed}, {"strategy", v.strategy}};
  j["certified_bound"] = v.certified_bound ? Json(*v.certified_bound) : Json(nullptr);
  if (v.mode == VerifyMode::certificate) {
    Json ad = Json::array();
    for (const auto& c : v.antidiagonals) {
      Json e{{"length", c.length}, {"min_support", c.min_support}};
      e["zero_minor"] = c.zero_minor ? Json(*c.zero_minor) : Json(nullptr);
      ad.push_back(std::move(e));
    }
    j["antidiagonals"] = std::move(ad);
  }
  if (v.counterexample) {
    Json c{{"coefficients", vector_json(v.counterexample->coefficients)},
           {"schmidt_rank", v.counterexample->schmidt_rank}};
    c["antidiagonal"] = v.counterexample->antidiagonal ? Json(*v.counterexample->antidiagonal) : Json(nullptr);
    j["counterexample"] = std::move(c);
  } else {
    j["counterexample"] = nullptr;
  }
  j["statistics"] = Json{{"combinations_checked", v.combinations_checked}, {"groups_checked", v.groups_checked}};
  return j;
}

}  // namespace entangle
