#include "soeinstein/poly/text_format.hpp"

#include <sstream>

namespace soe::poly {

namespace detail {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

RawPolyText parse_poly_text(std::istream& in) {
  RawPolyText out;
  bool have_vars = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string body = trim(line.substr(1));
      if (body.rfind("variables:", 0) == 0) {
        std::istringstream vs(body.substr(10));
        std::string tok;
        out.header.variables.clear();
        while (vs >> tok) {
          auto v = parse_var(tok);
          if (!v) throw Error(ErrorCode::data_error, "unknown variable '" + tok + "' on line " + std::to_string(line_no));
          out.header.variables.push_back(*v);
        }
        have_vars = true;
      } else if (body.rfind("provenance:", 0) == 0) {
        out.header.provenance.push_back(trim(body.substr(11)));
      } else {
        out.header.comments.push_back(body);
      }
      continue;
    }
    std::istringstream ls(line);
    std::vector<std::string> fields;
    for (std::string tok; ls >> tok;) fields.push_back(tok);
    if (fields.size() < 2) throw Error(ErrorCode::data_error, "malformed term on line " + std::to_string(line_no));
    RawTerm t;
    for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
      try {
        std::size_t used = 0;
        t.exponents.push_back(std::stoi(fields[i], &used));
        if (used != fields[i].size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw Error(ErrorCode::data_error, "bad exponent '" + fields[i] + "' on line " + std::to_string(line_no));
      }
    }
    t.coeff = BigRational::parse(fields.back());
    out.terms.push_back(std::move(t));
  }
  if (!have_vars) {
    // Headerless files default to a single x12 column or (x3, x12).
    const std::size_t arity = out.terms.empty() ? 1 : out.terms.front().exponents.size();
    if (arity == 1) out.header.variables = {Var::x12};
    else if (arity == 2) out.header.variables = {Var::x3, Var::x12};
    else throw Error(ErrorCode::data_error, "missing '# variables:' header");
  }
  return out;
}

void write_header(std::ostream& out, const PolyHeader& header) {
  for (const auto& p : header.provenance) out << "# provenance: " << p << '\n';
  for (const auto& c : header.comments) out << "# " << c << '\n';
  out << "# variables:";
  for (Var v : header.variables) out << ' ' << name(v);
  out << '\n';
}

}  // namespace detail

UniPoly read_unipoly(std::istream& in, PolyHeader* header_out) {
  const SparsePoly<1> p = read_poly<1>(in, header_out);
  return to_unipoly(p);
}

void write_unipoly(std::ostream& out, const UniPoly& p, const std::vector<std::string>& provenance) {
  PolyHeader h;
  h.variables = {p.var()};
  h.provenance = provenance;
  detail::write_header(out, h);
  for (int i = 0; i <= p.degree(); ++i) {
    const BigRational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    out << i << ' ' << c.fraction_str() << '\n';
  }
}

}  // namespace soe::poly
