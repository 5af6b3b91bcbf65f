#include "kmlat/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kmlat/error.hpp"
#include "kmlat/gf.hpp"

namespace kmlat {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw Error(ErrorKind::InvalidInput, "malformed JSON");
  }
  return j;
}

}  // namespace

GeneralizedCartanMatrix gcm_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("matrix") || !j["matrix"].is_array()) {
    throw Error(ErrorKind::InvalidInput, "missing \"matrix\" array");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
  }
  const auto& rows = j["matrix"];
  bool coxeter = false;
  std::vector<std::vector<std::int64_t>> m;
  std::vector<std::vector<int>> cm;
  for (size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::int64_t> row;
    std::vector<int> crow;
    for (const auto& e : rows[i]) {
      if (e.is_string()) {
        if (e.get<std::string>() != "inf") {
          throw Error(ErrorKind::InvalidInput, "matrix entry string must be \"inf\"");
        }
        coxeter = true;
        crow.push_back(CoxeterMatrix::infinity);
        row.push_back(0);
      } else {
        std::int64_t v = e.get<std::int64_t>();
        crow.push_back(static_cast<int>(v));
        row.push_back(v);
      }
    }
    m.push_back(std::move(row));
    cm.push_back(std::move(crow));
  }
  if (!coxeter && !m.empty() && !m[0].empty() && m[0][0] == 1) coxeter = true;
  if (coxeter) {
    CoxeterMatrix c;
    c.labels = labels;
    if (c.labels.empty()) {
      for (size_t i = 0; i < cm.size(); ++i) c.labels.push_back(std::to_string(i));
    }
    c.m = cm;
    return gcm_of_coxeter(c);
  }
  return validate_gcm(m, labels);
}

std::string gcm_to_json(const GeneralizedCartanMatrix& a) {
  json j;
  j["labels"] = a.labels();
  j["matrix"] = a.entries();
  return j.dump();
}

KacMoodyRootDatum datum_from_json(const std::string& text) {
  json j = parse(text);
  KacMoodyRootDatum d;
  d.gcm = gcm_from_json(j.at("gcm").dump());
  d.lattice_rank = j.at("lattice_rank").get<int>();
  for (const auto& row : j.at("c")) {
    std::vector<Int> v;
    for (const auto& e : row) v.push_back(Int(e.get<std::int64_t>()));
    d.c.push_back(std::move(v));
  }
  for (const auto& row : j.at("h")) {
    std::vector<Int> v;
    for (const auto& e : row) v.push_back(Int(e.get<std::int64_t>()));
    d.h.push_back(std::move(v));
  }
  check_datum(d);
  return d;
}

std::string datum_to_json(const KacMoodyRootDatum& d) {
  json j;
  j["gcm"] = json::parse(gcm_to_json(d.gcm));
  j["lattice_rank"] = d.lattice_rank;
  auto rows = [](const std::vector<std::vector<Int>>& m) {
    json out = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const Int& x : row) r.push_back(static_cast<std::int64_t>(x));
      out.push_back(r);
    }
    return out;
  };
  j["c"] = rows(d.c);
  j["h"] = rows(d.h);
  return j.dump();
}

QuasiSplitForm form_from_json(const std::string& text) {
  json j = parse(text);
  QuasiSplitForm f;
  f.gcm = gcm_from_json(j.at("gcm").dump());
  const auto& labels = f.gcm.labels();
  auto label_index = [&](const std::string& l) {
    for (size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == l) return static_cast<int>(i);
    }
    throw Error(ErrorKind::InvalidInput, "unknown label " + l);
  };
  std::vector<int> perm(f.gcm.rank());
  for (int i = 0; i < f.gcm.rank(); ++i) perm[i] = i;
  if (j.contains("perm")) {
    for (const auto& [key, value] : j.at("perm").items()) {
      perm[label_index(key)] = label_index(value.get<std::string>());
    }
  }
  f.aut = validate_automorphism(f.gcm, perm);
  if (j.contains("s0")) {
    for (const auto& e : j.at("s0")) {
      f.s0.push_back(e.is_string() ? label_index(e.get<std::string>())
                                   : e.get<int>());
    }
  }
  if (j.contains("q")) f.q = Int(j.at("q").get<std::int64_t>());
  validate_form(f);
  return f;
}

std::string form_to_json(const QuasiSplitForm& f) {
  json j;
  j["gcm"] = json::parse(gcm_to_json(f.gcm));
  json perm = json::object();
  for (int i = 0; i < f.gcm.rank(); ++i) {
    perm[f.gcm.labels()[i]] = f.gcm.labels()[f.aut.perm[i]];
  }
  j["perm"] = perm;
  json s0 = json::array();
  for (int s : f.s0) s0.push_back(f.gcm.labels()[s]);
  j["s0"] = s0;
  j["q"] = static_cast<std::int64_t>(f.q);
  return j.dump();
}

LaurentMatrixInput laurent_matrix_from_json(const std::string& text) {
  json j = parse(text);
  LaurentMatrixInput in;
  in.n = j.at("n").get<int>();
  in.p = j.at("field").at("p").get<int>();
  in.k = j.at("field").at("k").get<int>();
  const GF& f = GF::get(in.p, in.k);
  in.matrix.n = in.n;
  in.matrix.e.assign(in.n * in.n, LaurentPoly{});
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != in.n) {
    throw Error(ErrorKind::InvalidInput, "entry rows != n");
  }
  for (int i = 0; i < in.n; ++i) {
    if (static_cast<int>(entries[i].size()) != in.n) {
      throw Error(ErrorKind::InvalidInput, "entry columns != n");
    }
    for (int jj = 0; jj < in.n; ++jj) {
      LaurentPoly p;
      for (const auto& term : entries[i][jj]) {
        const int exp = term.at(0).get<int>();
        const GF::Elem c = term.at(1).is_string()
                               ? f.parse(term.at(1).get<std::string>())
                               : f.parse(std::to_string(
                                     term.at(1).get<std::int64_t>()));
        if (c != 0) p.terms[exp] = c;
      }
      in.matrix.at(i, jj) = std::move(p);
    }
  }
  return in;
}

std::string laurent_matrix_to_json(const LaurentMatrixInput& m) {
  const GF& f = GF::get(m.p, m.k);
  json j;
  j["n"] = m.n;
  j["field"] = {{"p", m.p}, {"k", m.k}, {"modulus", f.modulus()}};
  json entries = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int jj = 0; jj < m.n; ++jj) {
      json terms = json::array();
      for (const auto& [exp, c] : m.matrix.at(i, jj).terms) {
        terms.push_back(json::array({exp, f.to_string(c)}));
      }
      row.push_back(terms);
    }
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j.dump();
}

}  // namespace kmlat
