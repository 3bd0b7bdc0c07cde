// SPDX-License-Identifier: Apache-2.0
#include "intmult/io.hpp"
#include "intmult/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace intmult::io {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::size_t to_count(const std::string& s) {
  std::string t = trim(s);
  if (t.empty() || t.size() > 9) throw ParseError("expected a count, got '" + s + "'");
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("expected a count, got '" + s + "'");
  return std::stoul(t);
}

Element element_from_json(const Poset& p, const json& j) {
  if (j.is_number_integer()) {
    auto v = j.get<long long>();
    if (v < 0 || static_cast<std::size_t>(v) >= p.size()) throw ParseError("element index out of range");
    return static_cast<Element>(v);
  }
  if (j.is_string()) return element_from_token(p, j.get<std::string>());
  throw ParseError("element must be an index or a label");
}

ElementList elements_from_tokens(const Poset& p, const std::string& list) {
  ElementList out;
  for (const auto& tok : split(list, ','))
    if (!trim(tok).empty()) out.push_back(element_from_token(p, trim(tok)));
  return out;
}

} // namespace

PosetPtr poset_from_json(const json& j) {
  try {
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      const auto colon = s.find(':');
      const std::string kind = s.substr(0, colon);
      const std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
      if (kind == "chain") return make_chain(to_count(arg));
      if (kind == "zigzag") return make_zigzag(arg);
      if (kind == "grid") {
        auto parts = split(arg, 'x');
        if (parts.size() != 2) throw ParseError("grid generator needs 'grid:MxN'");
        return make_grid(to_count(parts[0]), to_count(parts[1]));
      }
      if (kind == "bipath") {
        auto parts = split(arg, ',');
        if (parts.size() != 2) throw ParseError("bipath generator needs 'bipath:N,M'");
        return make_bipath(to_count(parts[0]), to_count(parts[1]));
      }
      throw ParseError("unknown poset generator '" + s + "'");
    }
    if (!j.is_object()) throw ParseError("poset must be an object or a generator string");
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<Arrow> edges;
    const json hasse = j.value("hasse", json::array());
    for (const auto& e : hasse) {
      if (!e.is_array() || e.size() != 2) throw ParseError("Hasse arrows must be pairs");
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return std::make_shared<const Poset>(Poset::from_hasse(n, edges, labels));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed poset: ") + e.what());
  }
}

json poset_to_json(const Poset& p) {
  json h = json::array();
  for (auto [x, y] : p.hasse_arrows()) h.push_back({x, y});
  return {{"n", p.size()}, {"labels", p.labels()}, {"hasse", h}};
}

Element element_from_token(const Poset& p, const std::string& token) {
  if (auto e = p.find(token)) return *e;
  bool digits = !token.empty() && token.size() < 10;
  for (char c : token) digits = digits && std::isdigit(static_cast<unsigned char>(c));
  if (digits) {
    auto v = std::stoul(token);
    if (v < p.size()) return v;
  }
  throw ParseError("unknown element '" + token + "'");
}

PersistenceModule module_from_json(const json& j, std::optional<Field> field_override) {
  try {
    PosetPtr p = poset_from_json(j.at("poset"));
    Field f = field_override ? *field_override : Field::parse(j.value("field", std::string("GF(2)")));
    auto dims = j.at("dims").get<std::vector<std::size_t>>();
    std::map<Arrow, DenseMatrix> maps;
    const json map_entries = j.value("maps", json::object());
    for (const auto& [key, value] : map_entries.items()) {
      auto arrow = key.find("->");
      if (arrow == std::string::npos) throw ParseError("map key '" + key + "' must look like 'x->y'");
      Element x = element_from_token(*p, trim(key.substr(0, arrow)));
      Element y = element_from_token(*p, trim(key.substr(arrow + 2)));
      if (x >= dims.size() || y >= dims.size()) throw ShapeError("map key refers past the dimension vector");
      DenseMatrix m(f, dims[y], dims[x]);
      if (!value.is_array() || value.size() != dims[y])
        throw ShapeError("map " + key + " needs " + std::to_string(dims[y]) + " rows");
      for (std::size_t r = 0; r < dims[y]; ++r) {
        if (!value[r].is_array() || value[r].size() != dims[x])
          throw ShapeError("map " + key + " needs " + std::to_string(dims[x]) + " columns");
        for (std::size_t c = 0; c < dims[x]; ++c) {
          const json& v = value[r][c];
          if (v.is_number_integer())
            m.set(r, c, Scalar(f, v.get<long long>()));
          else if (v.is_string())
            m.set(r, c, Scalar::parse(f, v.get<std::string>()));
          else
            throw ParseError("scalars must be integers or \"num/den\" strings");
        }
      }
      if (!maps.emplace(Arrow{x, y}, std::move(m)).second) throw ParseError("map " + key + " given twice");
    }
    return PersistenceModule(p, f, dims, maps);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed module: ") + e.what());
  }
}

json module_to_json(const PersistenceModule& m) {
  const Poset& p = *m.poset();
  json maps = json::object();
  for (const auto& [arrow, mat] : m.arrow_maps()) {
    if (mat.empty()) continue;
    json rows = json::array();
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < mat.cols(); ++c) {
        Scalar s = mat.at(r, c);
        if (m.field().is_prime())
          row.push_back(s.residue());
        else if (boost::multiprecision::denominator(s.rational()) == 1)
          row.push_back(std::stoll(s.rational().str()));
        else
          row.push_back(s.rational().str());
      }
      rows.push_back(row);
    }
    maps[p.label(arrow.first) + "->" + p.label(arrow.second)] = rows;
  }
  return {{"poset", poset_to_json(p)}, {"field", m.field().name()}, {"dims", m.dims()}, {"maps", maps}};
}

Interval interval_from_spec(const PosetPtr& p, const std::string& raw) {
  const std::string spec = trim(raw);
  if (spec.rfind("sc=", 0) == 0) {
    const auto sk_at = spec.find("sk=");
    if (sk_at == std::string::npos) throw ParseError("endpoint form needs both 'sc=' and 'sk='");
    ElementList sc = elements_from_tokens(*p, trim(spec.substr(3, sk_at - 3)));
    ElementList sk = elements_from_tokens(*p, trim(spec.substr(sk_at + 3)));
    ElementList members;
    for (Element x = 0; x < p->size(); ++x) {
      bool above = false, below = false;
      for (auto a : sc) above = above || p->leq(a, x);
      for (auto b : sk) below = below || p->leq(x, b);
      if (above && below) members.push_back(x);
    }
    if (members.empty()) throw InvalidInterval("no element lies between the given sources and sinks");
    Interval i(p, members);
    std::sort(sc.begin(), sc.end());
    std::sort(sk.begin(), sk.end());
    if (p->sources(i.members()) != sc || p->sinks(i.members()) != sk)
      throw InvalidInterval("given endpoints are not the sources and sinks of " + i.to_string());
    return i;
  }
  ElementList members = elements_from_tokens(*p, spec);
  return Interval(p, members);
}

Interval interval_from_json(const PosetPtr& p, const json& j) {
  if (j.is_string()) return interval_from_spec(p, j.get<std::string>());
  if (!j.is_array()) throw ParseError("interval must be a list of elements or a spec string");
  ElementList members;
  for (const auto& e : j) members.push_back(element_from_json(*p, e));
  return Interval(p, members);
}

json interval_to_json(const Interval& i) {
  json out = json::array();
  for (auto x : i.members()) out.push_back(i.poset()->label(x));
  return out;
}

OrderMap order_map_from_json(const json& j, const PosetPtr& p) {
  try {
    PosetPtr z = poset_from_json(j.at("Z"));
    PosetPtr target = p ? p : poset_from_json(j.at("P"));
    std::vector<Element> image;
    for (const auto& e : j.at("map")) image.push_back(element_from_json(*target, e));
    return OrderMap(z, target, image);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed order map: ") + e.what());
  }
}

SimplicialFiltration filtration_from_json(const json& j) {
  try {
    PosetPtr p = poset_from_json(j.at("poset"));
    std::vector<Simplex> simplices;
    std::vector<ElementList> present;
    for (const auto& s : j.at("simplices")) {
      simplices.push_back(s.at("verts").get<Simplex>());
      ElementList at;
      for (const auto& e : s.at("present_at")) at.push_back(element_from_json(*p, e));
      present.push_back(std::move(at));
    }
    return SimplicialFiltration(p, simplices, present);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed filtration: ") + e.what());
  }
}

json diagram_to_json(const Diagram& d, bool bipath_kinds) {
  json entries = json::array();
  for (const auto& e : d.entries) {
    json item = {{"interval", interval_to_json(e.interval)}, {"mult", e.multiplicity}};
    if (bipath_kinds) item["kind"] = describe(*e.interval.poset(), classify(e.interval));
    entries.push_back(item);
  }
  return {{"entries", entries}, {"decomposable", d.decomposable}};
}

std::string diagram_to_table(const Diagram& d, bool bipath_kinds) {
  std::ostringstream os;
  for (const auto& e : d.entries) {
    os << e.multiplicity << "\t" << e.interval.to_string();
    if (bipath_kinds) os << "\t" << describe(*e.interval.poset(), classify(e.interval));
    os << "\n";
  }
  os << "decomposable\t" << (d.decomposable ? "yes" : "no") << "\n";
  return os.str();
}

json witness_to_json(const CoverWitness& w, const OrderMap& zeta) {
  const Poset& z = *zeta.domain();
  json cols = json::array(), rows = json::array();
  for (auto e : w.col_lift) cols.push_back(z.label(e));
  for (auto e : w.row_lift) rows.push_back(z.label(e));
  return {{"columns", cols}, {"rows", rows}, {"lifted", w.lifted.dump()}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

} // namespace intmult::io
