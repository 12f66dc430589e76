#include "uncond/json_io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "uncond/errors.hpp"

namespace uncond {

Json to_json(const Exponent& p) {
  if (p.is_infinite()) return "inf";
  return p.value();
}

Exponent exponent_from_json(const Json& j) {
  if (j.is_string()) return Exponent::parse(j.get<std::string>());
  if (j.is_number()) return Exponent::finite(j.get<double>());
  throw DomainError("exponent must be a number or \"inf\"");
}

Json to_json(const FinSeq& v) { return Json(v.vector()); }

FinSeq finseq_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("sequence must be a JSON array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) throw DomainError("sequence entries must be numbers");
    out.push_back(e.get<double>());
  }
  return FinSeq(std::move(out));
}

Json to_json(const Family& fam) {
  Json out = Json::array();
  for (const auto& v : fam) out.push_back(to_json(v));
  return out;
}

Family family_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("family must be a JSON array of arrays");
  std::vector<FinSeq> vs;
  for (const auto& e : j) vs.push_back(finseq_from_json(e));
  return Family(std::move(vs));
}

std::string mask_to_hex(std::uint64_t mask) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(mask));
  return buf;
}

Json to_json(const SubsetMaxResult& r, const SubsetMode& mode) {
  Json j;
  j["value"] = r.value;
  j["subset_bitmask"] = mask_to_hex(r.argmax_subset);
  j["certified"] = r.certified;
  j["mode"] = mode_name(mode);
  if (const auto* rnd = std::get_if<Randomized>(&mode)) j["seed"] = rnd->seed;
  return j;
}

Json to_json(const QuotientResult& r) {
  Json j;
  j["quotient"] = r.quotient;
  j["numerator"] = r.numerator;
  j["denominator"] = r.denominator;
  j["subset_bitmask"] = mask_to_hex(r.subset_bitmask);
  j["certified"] = r.certified;
  j["mode"] = r.mode;
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

Json to_json(const WitnessReport& r) {
  Json j;
  j["p"] = to_json(r.triple.p);
  j["q"] = to_json(r.triple.q);
  j["r"] = to_json(r.triple.r);
  j["C"] = r.C;
  j["n"] = r.n;
  j["family_size"] = r.family_size;
  j["log2_numerator"] = r.log2_numerator;
  j["log2_denominator_bound"] = r.log2_denominator_bound;
  j["certified_ratio_log2"] = r.certified_ratio_log2;
  if (r.exhaustive_quotient) j["exhaustive_quotient"] = *r.exhaustive_quotient;
  j["minimality_checked"] = r.minimality_checked;
  return j;
}

Json to_json(const TailWitness& w, const Exponent& q, const Exponent& r, double B) {
  Json j;
  j["q"] = to_json(q);
  j["r"] = to_json(r);
  j["B"] = B;
  j["N"] = w.N;
  j["partial_r_norm"] = w.partial_r_norm;
  j["tail_q_bound"] = w.tail_q_bound;
  return j;
}

Json to_json(const HadamardMatrix& h) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < h.order(); ++i) {
    Json row = Json::array();
    for (auto e : h.row(i)) row.push_back(static_cast<int>(e));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ExponentTriple& t, const Classification& c) {
  Json j;
  j["p"] = to_json(t.p);
  j["q"] = to_json(t.q);
  j["r"] = to_json(t.r);
  j["verdict"] = std::string(to_string(c.verdict));
  j["clause"] = std::string(to_string(c.clause));
  j["margin"] = c.margin;
  return j;
}

namespace {

Json witness_json(const RatioWitness& w) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::vector<double>>) {
          return Json(v);
        } else if constexpr (std::is_same_v<T, std::vector<std::complex<double>>>) {
          Json out = Json::array();
          for (const auto& z : v) out.push_back(Json::array({z.real(), z.imag()}));
          return out;
        } else {
          return to_json(v);
        }
      },
      w);
}

}  // namespace

Json to_json(const RatioReport& r) {
  Json j;
  j["ratio"] = r.ratio;
  j["bound"] = r.bound;
  j["slack"] = r.slack;
  if (r.sharp_bound) j["sharp_bound"] = *r.sharp_bound;
  j["witness"] = witness_json(r.witness);
  j["certified"] = r.certified;
  if (r.critical_finding) j["critical_finding"] = true;
  return j;
}

Json to_json(const SandwichReport& r) {
  Json pairs = Json::array();
  for (const auto& s : r.pairs) {
    Json j;
    j["p"] = to_json(s.p);
    j["q"] = to_json(s.q);
    j["trials"] = s.trials;
    j["lower_violations"] = s.lower_violations;
    j["upper_violations"] = s.upper_violations;
    j["min_lower_slack"] = s.min_lower_slack;
    j["min_upper_slack"] = s.min_upper_slack;
    pairs.push_back(std::move(j));
  }
  Json j;
  j["pairs"] = std::move(pairs);
  j["total_violations"] = r.total_violations;
  return j;
}

Json to_json(const CrossValidationReport& r) {
  Json j = to_json(r.triple, r.classification);
  if (!r.hadamard.empty()) {
    Json hs = Json::array();
    for (const auto& h : r.hadamard) {
      Json e{{"C", h.C}, {"n", h.n}, {"certified_ratio_log2", h.certified_ratio_log2}};
      if (h.beyond_desk_scale) e["beyond_desk_scale"] = true;
      hs.push_back(std::move(e));
    }
    j["hadamard_witnesses"] = std::move(hs);
  }
  if (!r.tail.empty()) {
    Json ts = Json::array();
    for (const auto& t : r.tail) {
      Json e{{"B", t.B}, {"N", t.N}, {"partial_r_norm", t.partial_r_norm}, {"tail_q_bound", t.tail_q_bound}};
      if (t.beyond_desk_scale) e["beyond_desk_scale"] = true;
      ts.push_back(std::move(e));
    }
    j["tail_witnesses"] = std::move(ts);
  }
  if (r.search) j["search"] = to_json(*r.search);
  return j;
}

std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string grid_to_csv(const std::vector<GridRecord>& grid) {
  std::ostringstream out;
  out << "p,q,r,verdict,clause,margin\n";
  for (const auto& rec : grid) {
    out << rec.triple.p.to_string() << ',' << rec.triple.q.to_string() << ',' << rec.triple.r.to_string() << ','
        << to_string(rec.result.verdict) << ',' << to_string(rec.result.clause) << ','
        << format_double(rec.result.margin) << '\n';
  }
  return out.str();
}

}  // namespace uncond
