#include "symgraph/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "symgraph/errors.hpp"

namespace symgraph {

using json = nlohmann::ordered_json;

namespace {

json pair_1based(const std::optional<std::pair<std::size_t, std::size_t>>& p) {
  if (!p) return nullptr;
  return json::array({p->first + 1, p->second + 1});
}

json condition(const ConditionResult& c) {
  json j;
  j["status"] = to_string(c.status);
  j["detail"] = c.detail;
  j["block"] = pair_1based(c.block);
  j["entry"] = pair_1based(c.entry);
  return j;
}

json rows_of(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

json matrix_doc(const EdgeMatrix& m) {
  json j;
  j["n"] = m.size();
  j["upper"] = m.upper();
  return j;
}

json witness_doc(const SymmWitness& w) {
  json j;
  j["verdict"] = to_string(w.verdict);
  j["reason"] = to_string(w.reason);
  j["point"] = w.point;
  j["value"] = w.value ? json(*w.value) : json(nullptr);
  j["modulus"] = w.modulus ? json(*w.modulus) : json(nullptr);
  j["trials"] = w.trials;
  j["seed"] = w.seed;
  j["degree"] = w.degree;
  j["sample_size"] = w.sample_size;
  j["failure_bound"] = w.failure_bound;
  return j;
}

json certificate_doc(const Thm1Certificate& c) {
  json j;
  j["shape"] = c.shape.parts();
  j["cond1"] = condition(c.cond1);
  j["cond2"] = condition(c.cond2);
  j["cond3"] = condition(c.cond3);
  j["cond_i"] = condition(c.cond_i);
  j["cond_ii"] = condition(c.cond_ii);
  j["cond_iii"] = condition(c.cond_iii);
  j["cond_iv"] = condition(c.cond_iv);
  j["route"] = to_string(c.route);
  j["route_1_2"] = c.route_1_2;
  j["route_1_3"] = c.route_1_3;
  json table = json::array();
  for (const auto& [k, v] : c.b_table) table.push_back({{"parts", {k.first, k.second}}, {"norm", v}});
  j["b_table"] = std::move(table);
  j["min_offdiag"] = c.min_offdiag ? json(*c.min_offdiag) : json(nullptr);
  j["max_diagblock"] = c.max_diagblock;
  j["repeated_parts_branch"] = c.repeated_parts_branch;
  j["conclusion"] = c.conclusion();
  return j;
}

json member_doc(const FamilyMember& m) {
  json j;
  j["theta"] = m.theta;
  j["b_star"] = rows_of(m.b_star);
  j["b"] = rows_of(m.b);
  json a = json::array();
  for (const auto& blk : m.a_blocks) a.push_back(rows_of(blk));
  j["a_blocks"] = std::move(a);
  j["matrix"] = matrix_doc(m.m);
  j["r1"] = m.r1;
  j["prime_shape"] = m.prime_shape.parts();
  j["certificate"] = m.certificate ? certificate_doc(*m.certificate) : json(nullptr);
  j["prime_certificate"] = m.prime_certificate ? certificate_doc(*m.prime_certificate) : json(nullptr);
  j["prime_witness"] = m.prime_witness ? witness_doc(*m.prime_witness) : json(nullptr);
  return j;
}

std::size_t as_size(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw DomainError(std::string(what) + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

std::string version() { return SYMGRAPH_VERSION; }

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string content_hash(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(data)));
  return std::string("fnv1a64:") + buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out << content;
  if (!out) throw DomainError("write failed for " + path);
}

EdgeMatrix parse_matrix_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("matrix JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n")) throw DomainError("matrix JSON needs an object with \"n\"");
  const std::size_t n = as_size(doc["n"], "n");
  if (n < 2) throw DomainError("matrix JSON needs n >= 2");
  const bool has_upper = doc.contains("upper"), has_edges = doc.contains("edges");
  if (has_upper == has_edges) throw DomainError("matrix JSON needs exactly one of \"upper\" or \"edges\"");
  try {
    if (has_upper) {
      std::vector<std::int64_t> upper;
      for (const auto& v : doc["upper"]) {
        if (!v.is_number_integer()) throw DomainError("\"upper\" entries must be integers");
        upper.push_back(v.get<std::int64_t>());
      }
      return EdgeMatrix::from_upper(n, upper);
    }
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> edges;
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 3 || !e[2].is_number_integer()) {
        throw DomainError("each edge must be [i, j, multiplicity]");
      }
      edges.emplace_back(as_size(e[0], "edge endpoint"), as_size(e[1], "edge endpoint"), e[2].get<std::int64_t>());
    }
    return EdgeMatrix::from_edges(n, edges);
  } catch (const json::exception& e) {
    throw DomainError(std::string("matrix JSON: ") + e.what());
  }
}

EdgeMatrix read_matrix_file(const std::string& path) { return parse_matrix_json(read_file(path)); }

std::string matrix_json(const EdgeMatrix& m) { return matrix_doc(m).dump(); }
std::string int_matrix_json(const IntMatrix& m) { return rows_of(m).dump(); }
std::string witness_json(const SymmWitness& w) { return witness_doc(w).dump(); }
std::string certificate_json(const Thm1Certificate& c) { return certificate_doc(c).dump(); }

std::string construction_json(const Construction& c) {
  json j;
  j["name"] = c.name;
  j["n"] = c.matrix.size();
  j["degree"] = c.degree;
  j["weight"] = c.weight;
  j["skew"] = c.weight % 2 != 0;
  j["shape"] = c.shape.parts();
  j["matrix"] = matrix_doc(c.matrix);
  j["input_witness"] = c.input_witness ? witness_doc(*c.input_witness) : json(nullptr);
  return j.dump();
}

std::string family_member_json(const FamilyMember& m) { return member_doc(m).dump(); }

std::string family_json(const FamilyInstance& f) {
  json j;
  j["n"] = f.n;
  j["shape"] = f.shape;
  j["s"] = f.s;
  j["w"] = f.w;
  j["theta"] = f.theta;
  j["nu"] = f.nu.get_str();
  j["degree"] = f.degree;
  j["degree_bound"] = {{"value", f.degree_bound.value},
                       {"formula", f.degree_bound.formula},
                       {"formula_discrepancy", f.degree_bound.formula_discrepancy}};
  json members = json::array();
  for (const auto& m : f.family) members.push_back(member_doc(m));
  j["family"] = std::move(members);
  return j.dump();
}

}  // namespace symgraph
