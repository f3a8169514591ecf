#include "kflag/serialize.hpp"

#include <json.hpp>
#include <limits>
#include <sstream>

namespace kflag {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

ordered_json exponent_to_json(const RootSystem& rs, const Weight& e, CoordMode mode) {
  ordered_json out = ordered_json::array();
  if (mode == CoordMode::fundamental) {
    for (auto c : e.coords()) out.push_back(c);
    return out;
  }
  RootCoords rc = rs.to_root_coords(e);
  for (const Rational& c : rc.coords) {
    if (denominator(c) == 1)
      out.push_back(static_cast<std::int64_t>(numerator(c)));
    else
      out.push_back(c.str());
  }
  return out;
}

ordered_json poly_to_json_obj(const RootSystem& rs, const LaurentPoly& p, CoordMode mode) {
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    ordered_json term;
    term["exp"] = exponent_to_json(rs, e, mode);
    term["coeff"] = int_to_json(c);
    terms.push_back(std::move(term));
  }
  ordered_json out;
  out["terms"] = std::move(terms);
  return out;
}

std::string exponent_to_text(const RootSystem& rs, const Weight& e, CoordMode mode) {
  std::ostringstream os;
  if (mode == CoordMode::fundamental) {
    os << "(";
    for (int k = 0; k < e.rank(); ++k) {
      if (k) os << ",";
      os << e.coords()[k];
    }
    os << ")";
    return os.str();
  }
  RootCoords rc = rs.to_root_coords(e);
  bool wrote = false;
  for (int k = 0; k < e.rank(); ++k) {
    const Rational& c = rc.coords[k];
    if (c == 0) continue;
    if (wrote && c > 0) os << "+";
    if (c == -1)
      os << "-";
    else if (c != 1)
      os << c.str() << "*";
    os << "a" << (k + 1);
    wrote = true;
  }
  return wrote ? os.str() : "0";
}

}  // namespace

Word parse_word(const std::string& text) {
  Word out;
  std::istringstream is(text);
  std::vector<std::string> tokens;
  for (std::string token; is >> token;) tokens.push_back(std::move(token));
  if (tokens.size() == 1 && tokens[0] == "e") return {};
  for (const std::string& tok : tokens) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 1) throw validation_error("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw validation_error("cannot parse word letter '" + tok + "'");
    }
  }
  return out;
}

std::string format_word(const Word& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << ' ';
    os << word[k];
  }
  return os.str();
}

Epsilon parse_epsilon(const std::string& text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1')
      throw validation_error(std::string("cube vertex character '") + ch + "' is not 0 or 1");
    bits.push_back(ch == '1' ? 1 : 0);
  }
  return Epsilon(std::move(bits));
}

CoordMode parse_coord_mode(const std::string& text) {
  if (text == "fundamental") return CoordMode::fundamental;
  if (text == "root") return CoordMode::root;
  throw validation_error("unknown coordinate mode '" + text + "' (use fundamental or root)");
}

std::string poly_to_json(const RootSystem& rs, const LaurentPoly& p, CoordMode mode) {
  return poly_to_json_obj(rs, p, mode).dump();
}

std::string poly_to_text(const RootSystem& rs, const LaurentPoly& p, CoordMode mode) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool constant_exp = e.is_zero();
    if (mag != 1 || constant_exp) {
      os << mag.str();
      if (!constant_exp) os << "*";
    }
    if (!constant_exp) os << "e^{" << exponent_to_text(rs, e, mode) << "}";
  }
  return os.str();
}

std::string element_map_to_json(const RootSystem& rs,
                                const std::map<WeylElement, LaurentPoly>& m, CoordMode mode) {
  ordered_json values = ordered_json::object();
  for (const auto& [w, p] : m) values[format_word(w.canonical_word())] = poly_to_json_obj(rs, p, mode);
  ordered_json out;
  out["values"] = std::move(values);
  return out.dump();
}

std::string element_map_to_text(const RootSystem& rs,
                                const std::map<WeylElement, LaurentPoly>& m, CoordMode mode) {
  std::ostringstream os;
  for (const auto& [w, p] : m)
    os << format_word(w.canonical_word()) << ": " << poly_to_text(rs, p, mode) << "\n";
  return os.str();
}

std::string roots_to_json(const RootSystem& rs) {
  ordered_json out;
  out["rank"] = rs.rank();
  out["finite"] = rs.finite_type();
  ordered_json cartan = ordered_json::array();
  for (const auto& row : rs.cartan().entries) {
    ordered_json r = ordered_json::array();
    for (auto v : row) r.push_back(v);
    cartan.push_back(std::move(r));
  }
  out["cartan"] = std::move(cartan);
  if (rs.finite_type()) {
    ordered_json roots = ordered_json::array();
    const auto& ws = rs.positive_roots();
    const auto& cs = rs.positive_root_coords();
    for (std::size_t k = 0; k < ws.size(); ++k) {
      ordered_json entry;
      ordered_json root = ordered_json::array(), fund = ordered_json::array();
      for (auto v : cs[k]) root.push_back(v);
      for (auto v : ws[k].coords()) fund.push_back(v);
      entry["root"] = std::move(root);
      entry["fundamental"] = std::move(fund);
      roots.push_back(std::move(entry));
    }
    out["positive_roots"] = std::move(roots);
  }
  return out.dump();
}

std::string roots_to_text(const RootSystem& rs) {
  std::ostringstream os;
  os << "rank " << rs.rank() << ", " << (rs.finite_type() ? "finite type" : "not finite type")
     << "\n";
  if (!rs.finite_type()) return os.str();
  const auto& ws = rs.positive_roots();
  const auto& cs = rs.positive_root_coords();
  os << ws.size() << " positive roots (simple-root coords | fundamental coords):\n";
  for (std::size_t k = 0; k < ws.size(); ++k) {
    os << "  ";
    for (std::size_t j = 0; j < cs[k].size(); ++j) {
      if (j) os << " ";
      os << cs[k][j];
    }
    os << "  |  ";
    for (int j = 0; j < ws[k].rank(); ++j) {
      if (j) os << " ";
      os << ws[k].coords()[j];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace kflag
